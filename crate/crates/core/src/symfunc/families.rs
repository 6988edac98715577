//! Classical generators `h_n`, `e_n`, `q_n`, Schur polynomials, and shorthand
//! for the tableau families.

use super::poly::{IntPoly, Monomial};
use super::SymFuncError;
use crate::partitions::Partition;
use crate::tableaux::{generating_intpoly, Family, Mode, TableauFamily};

/// Complete homogeneous `h_k(x_1..x_n)`.
pub fn h_poly(k: u32, n: usize) -> IntPoly {
    let mut out = IntPoly::zero(n);
    let mut exps = vec![0u32; n];
    fill_h(k, 0, &mut exps, &mut out);
    out
}

fn fill_h(left: u32, idx: usize, exps: &mut Vec<u32>, out: &mut IntPoly) {
    if idx + 1 >= exps.len() {
        if let Some(last) = exps.last_mut() {
            *last = left;
            out.add_term(Monomial::from_exponents(0, exps), 1);
            *exps.last_mut().unwrap() = 0;
        } else if left == 0 {
            out.add_term(Monomial::ONE, 1);
        }
        return;
    }
    for e in 0..=left {
        exps[idx] = e;
        fill_h(left - e, idx + 1, exps, out);
    }
    exps[idx] = 0;
}

/// Elementary `e_k(x_1..x_n)`.
pub fn e_poly(k: u32, n: usize) -> IntPoly {
    let mut out = IntPoly::zero(n);
    for mask in 0u32..(1u32 << n) {
        if mask.count_ones() == k {
            let exps: Vec<u32> = (0..n).map(|i| mask >> i & 1).collect();
            out.add_term(Monomial::from_exponents(0, &exps), 1);
        }
    }
    out
}

/// `q_k = Σ_{i+j=k} e_i h_j`.
pub fn q_poly(k: u32, n: usize) -> IntPoly {
    let mut out = IntPoly::zero(n);
    for i in 0..=k {
        out = &out + &(&e_poly(i, n) * &h_poly(k - i, n));
    }
    out
}

/// Schur polynomial by the Jacobi–Trudi determinant `det(h_{λ_i − i + j})`.
pub fn schur_poly(lambda: &Partition, n: usize) -> IntPoly {
    let l = lambda.len();
    if l == 0 {
        return IntPoly::one(n);
    }
    let entry = |i: usize, j: usize| -> IntPoly {
        let k = lambda.part(i + 1) as i64 - (i as i64) + (j as i64);
        if k < 0 {
            IntPoly::zero(n)
        } else {
            h_poly(k as u32, n)
        }
    };
    let matrix: Vec<Vec<IntPoly>> = (0..l).map(|i| (0..l).map(|j| entry(i, j)).collect()).collect();
    determinant(&matrix, n)
}

/// Schur polynomial as the sum of `x^T` over semistandard tableaux, listed
/// cell by cell: rows weakly increase and columns strictly increase.
pub fn ssyt_poly(lambda: &Partition, n: usize) -> IntPoly {
    let cells: Vec<(usize, usize)> = (0..lambda.len())
        .flat_map(|i| (0..lambda.part(i + 1) as usize).map(move |j| (i, j)))
        .collect();
    let mut grid = vec![vec![0u32; lambda.first() as usize]; lambda.len()];
    let mut exps = vec![0u32; n];
    let mut out = IntPoly::zero(n);
    fn fill(k: usize, cells: &[(usize, usize)], grid: &mut [Vec<u32>], exps: &mut [u32], n: usize, out: &mut IntPoly) {
        let Some(&(i, j)) = cells.get(k) else {
            out.add_term(Monomial::from_exponents(0, exps), 1);
            return;
        };
        let low = (if j > 0 { grid[i][j - 1] } else { 1 }).max(if i > 0 { grid[i - 1][j] + 1 } else { 1 });
        for v in low..=n as u32 {
            grid[i][j] = v;
            exps[v as usize - 1] += 1;
            fill(k + 1, cells, grid, exps, n, out);
            exps[v as usize - 1] -= 1;
        }
    }
    fill(0, &cells, &mut grid, &mut exps, n, &mut out);
    out
}

/// Laplace expansion along the first row; fine for the small sizes used here.
fn determinant(m: &[Vec<IntPoly>], n: usize) -> IntPoly {
    let size = m.len();
    if size == 1 {
        return m[0][0].clone();
    }
    let mut out = IntPoly::zero(n);
    for col in 0..size {
        if m[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<IntPoly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(c, _)| *c != col).map(|(_, p)| p.clone()).collect())
            .collect();
        let term = &m[0][col] * &determinant(&minor, n);
        out = if col % 2 == 0 { &out + &term } else { &out - &term };
    }
    out
}

/// `F_{λ//μ}` (or `F_{λ/μ}` in skew mode) in `n` variables with symbolic `β`.
pub fn family_poly(
    kind: Family,
    mode: Mode,
    lambda: &Partition,
    mu: &Partition,
    n: usize,
    cap: Option<u32>,
) -> Result<IntPoly, SymFuncError> {
    Ok(generating_intpoly(TableauFamily::new(kind, mode), lambda, mu, n, cap)?)
}

/// Straight shape `F_λ` in `n` variables.
pub fn straight(kind: Family, lambda: &Partition, n: usize) -> Result<IntPoly, SymFuncError> {
    family_poly(kind, Mode::Quasi, lambda, &Partition::empty(), n, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_up_to;
    use crate::symfunc::poly::Rational;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn ssyt_matches_jacobi_trudi() {
        for lambda in partitions_up_to(5) {
            for n in 1..=4 {
                assert_eq!(ssyt_poly(&lambda, n), schur_poly(&lambda, n), "{lambda} in {n} variables");
            }
        }
        assert_eq!(ssyt_poly(&p(&[2, 1]), 3).coefficient_sum(), 8);
    }

    #[test]
    fn small_generators() {
        assert_eq!(e_poly(2, 2), IntPoly::monomial(2, Monomial::from_exponents(0, &[1, 1]), 1));
        for n in 1..=4 {
            assert_eq!(q_poly(1, n), h_poly(1, n).scale(&2));
            assert_eq!(h_poly(0, n), IntPoly::one(n));
            assert_eq!(e_poly(0, n), IntPoly::one(n));
        }
        assert_eq!(h_poly(3, 2).len(), 4);
        assert!(e_poly(3, 2).is_zero());
    }

    #[test]
    fn h_matches_geometric_product() {
        // Π 1/(1 − x_i z) coefficient extraction, by expanding each factor.
        let n = 3;
        for k in 0..=4u32 {
            let mut prod = IntPoly::one(n);
            for i in 1..=n {
                let mut geo = IntPoly::zero(n);
                for e in 0..=k {
                    let mut exps = vec![0; n];
                    exps[i - 1] = e;
                    geo.add_term(Monomial::from_exponents(0, &exps), 1);
                }
                prod = &prod * &geo;
            }
            let degree_k: IntPoly = {
                let mut out = IntPoly::zero(n);
                for (m, c) in prod.iter() {
                    if m.x_degree() == k {
                        out.add_term(*m, *c);
                    }
                }
                out
            };
            assert_eq!(degree_k, h_poly(k, n));
        }
    }

    #[test]
    fn jacobi_trudi_is_symmetric_and_unitriangular() {
        for l in partitions_up_to(5) {
            let s = schur_poly(&l, 4);
            if l.len() > 4 {
                assert!(s.is_zero());
                continue;
            }
            assert!(s.is_symmetric());
            let mut exps = vec![0u32; 4];
            for (i, &part) in l.parts().iter().enumerate() {
                exps[i] = part;
            }
            assert_eq!(s.coeff(Monomial::from_exponents(0, &exps)), 1);
        }
        let s21 = schur_poly(&p(&[2, 1]), 3).to_rational();
        assert_eq!(s21.eval(&vec![Rational::from_integer(1.into()); 3], &Rational::from_integer(0.into())), Rational::from_integer(8.into()));
    }
}
