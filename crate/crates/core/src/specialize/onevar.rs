//! One-variable closed forms for `GP_{λ//μ}(x)` and `GQ_{λ//μ}(x)`, and the
//! evaluations at `x = −1/β` and at repeated letters that follow from them.

use num_traits::{One, Zero};
use serde::Serialize;

use super::evaluate::{alphabet_value, exact_alphabet_eval};
use super::SpecializeError;
use crate::partitions::{is_border_strip, shifted_diagram, CellSet, Partition, StrictPartition};
use crate::symfunc::families::family_poly;
use crate::symfunc::poly::{IntPoly, Monomial, Rational, XPolynomial};
use crate::symfunc::CheckReport;
use crate::tableaux::{Family, Mode, TableauError};

/// Cell statistics of a shifted border strip `SD_λ \ SD_μ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StripStats {
    pub kind: Family,
    pub contained: bool,
    pub border_strip: bool,
    pub degree: u32,
    pub inn: CellSet,
    pub free: CellSet,
    pub gap: CellSet,
    pub adj: CellSet,
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl StripStats {
    /// Whether the one-variable polynomial vanishes identically.
    pub fn is_zero(&self) -> bool {
        !self.contained || !self.border_strip
    }
}

fn strict(kind: Family, p: &Partition) -> Result<StrictPartition, SpecializeError> {
    StrictPartition::try_from(p.clone()).map_err(|_| TableauError::NotStrict(kind, p.clone()).into())
}

fn check_kind(kind: Family) -> Result<(), SpecializeError> {
    if kind == Family::G {
        return Err(SpecializeError::ParameterConstraintViolated("one-variable closed forms cover GP and GQ".into()));
    }
    Ok(())
}

/// `Inn`, `Free_K`, `Gap_K`, `Adj_K` and the exponents `a_K, b_K, c_K`.
pub fn strip_stats(kind: Family, lambda: &Partition, mu: &Partition) -> Result<StripStats, SpecializeError> {
    check_kind(kind)?;
    let (l, m) = (strict(kind, lambda)?, strict(kind, mu)?);
    let (sd_l, sd_m) = (shifted_diagram(&l), shifted_diagram(&m));
    let contained = lambda.contains(mu);
    let skew = sd_l.difference(&sd_m);
    let border_strip = contained && is_border_strip(&skew);
    let p = kind == Family::GP;
    let inn: CellSet = sd_m
        .iter()
        .copied()
        .filter(|&(i, j)| !sd_m.contains(&(i + 1, j)) && !sd_m.contains(&(i, j + 1)) && !sd_l.contains(&(i + 1, j + 1)))
        .collect();
    let free: CellSet = skew
        .iter()
        .copied()
        .filter(|&(i, j)| !skew.contains(&(i + 1, j)) && (j == 0 || !skew.contains(&(i, j - 1))))
        .filter(|&(i, j)| !p || i != j)
        .collect();
    let below_and_right = |&(i, j): &(u32, u32)| skew.contains(&(i + 1, j)) && skew.contains(&(i, j + 1));
    let gap: CellSet = inn
        .iter()
        .copied()
        .filter(|c| below_and_right(c) || p && c.0 == c.1 && skew.contains(&(c.0, c.1 + 1)))
        .collect();
    let adj: CellSet = inn
        .iter()
        .copied()
        .filter(|&(i, j)| skew.contains(&(i + 1, j)) || skew.contains(&(i, j + 1)) || p && i == j)
        .filter(|c| !gap.contains(c))
        .collect();
    let a = gap.len() as u32;
    let b = free.len().saturating_sub(gap.len()) as u32;
    let c = (2 * inn.len()).saturating_sub(gap.len() + adj.len()) as u32;
    Ok(StripStats {
        kind,
        contained,
        border_strip,
        degree: if contained { lambda.size() - mu.size() } else { 0 },
        inn,
        free,
        gap,
        adj,
        a,
        b,
        c,
    })
}

/// `2^a (2 + βx)^b (1 + βx)^c x^{|λ|−|μ|}`, or zero off border strips.
pub fn closed_one_var(kind: Family, lambda: &Partition, mu: &Partition) -> Result<IntPoly, SpecializeError> {
    let s = strip_stats(kind, lambda, mu)?;
    if s.is_zero() {
        return Ok(IntPoly::zero(1));
    }
    let bx = IntPoly::monomial(1, Monomial::from_exponents(1, &[1]), 1);
    let two_plus = &IntPoly::constant(1, 2) + &bx;
    let one_plus = &IntPoly::one(1) + &bx;
    let x_power = IntPoly::monomial(1, Monomial::from_exponents(0, &[s.degree]), 1 << s.a);
    Ok(&(&two_plus.pow(s.b) * &one_plus.pow(s.c)) * &x_power)
}

/// `(β-expanded) 2^a (2 + βx)^b (1 + βx)^c x^d` as text.
pub fn closed_one_var_text(s: &StripStats) -> String {
    if s.is_zero() {
        return "0".into();
    }
    let mut parts = Vec::new();
    if s.a > 0 {
        parts.push(if s.a == 1 { "2".to_string() } else { format!("2^{}", s.a) });
    }
    let factor = |base: &str, e: u32| match e {
        0 => None,
        1 => Some(format!("({base})")),
        _ => Some(format!("({base})^{e}")),
    };
    parts.extend(factor("2 +\\beta x", s.b));
    parts.extend(factor("1 +\\beta x", s.c));
    match s.degree {
        0 => {}
        1 => parts.push("x".into()),
        d => parts.push(format!("x^{d}")),
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

/// `F_{λ//μ}` at `k` letters equal to `−1/β`, by peeling off the first row
/// once per letter: each letter contributes `(−1/β)^{λ_1}` and replaces `λ`
/// by `λ̃`.
pub fn eval_at_minus_inv_beta(kind: Family, lambda: &Partition, mu: &Partition, k: usize, beta: &Rational) -> Result<Rational, SpecializeError> {
    check_kind(kind)?;
    let (mut l, m) = (strict(kind, lambda)?, strict(kind, mu)?);
    if beta.is_zero() {
        return Err(SpecializeError::ParameterConstraintViolated("β must be nonzero".into()));
    }
    let x = -<Rational as One>::one() / beta;
    let mut value = <Rational as One>::one();
    for _ in 0..k {
        if !l.contains(&m) {
            return Ok(<Rational as Zero>::zero());
        }
        if l.is_empty() {
            return Ok(value);
        }
        value *= num_traits::pow(x.clone(), l.first() as usize);
        l = l.tilde();
    }
    Ok(if *l == *m { value } else { <Rational as Zero>::zero() })
}

/// `F_{λ//μ}(1^n)` at `β = −1`: one if `μ = (λ_{n+1}, λ_{n+2}, …)`, else zero.
pub fn eval_ones(kind: Family, lambda: &Partition, mu: &Partition, n: usize) -> Result<Rational, SpecializeError> {
    check_kind(kind)?;
    strict(kind, lambda)?;
    strict(kind, mu)?;
    let tail: Vec<u32> = lambda.parts().iter().skip(n).copied().collect();
    Ok(if tail == mu.parts() { <Rational as One>::one() } else { <Rational as Zero>::zero() })
}

/// `φ^+ = 1̂ ⊔ φ` at `β = −1`: `F_{λ//μ}(1, a) = F_{λ̃//μ}(a)`, exactly.
pub fn plus_extension_check(kind: Family, lambda: &Partition, mu: &Partition, alphabet: &[Rational]) -> Result<bool, SpecializeError> {
    check_kind(kind)?;
    let l = strict(kind, lambda)?;
    strict(kind, mu)?;
    let beta = -<Rational as One>::one();
    let mut extended = vec![<Rational as One>::one()];
    extended.extend_from_slice(alphabet);
    let lhs = alphabet_value(kind, lambda, mu, &extended, &beta)?;
    let rhs = alphabet_value(kind, &l.tilde().into_partition(), mu, alphabet, &beta)?;
    Ok(lhs == rhs)
}

/// Substitute `β` and `x_1`, leaving a polynomial in the remaining variables.
pub fn substitute_first(f: &IntPoly, x1: &Rational, beta: &Rational) -> XPolynomial {
    let n = f.nvars();
    let mut out = XPolynomial::zero(n.saturating_sub(1));
    for (m, c) in f.iter() {
        let exps = m.x_exponents(n);
        let coeff = Rational::from_integer((*c).into())
            * num_traits::pow(beta.clone(), m.beta_degree() as usize)
            * num_traits::pow(x1.clone(), exps[0] as usize);
        out.add_term(Monomial::from_exponents(0, &exps[1..]), coeff);
    }
    out
}

/// Closed form against one-variable enumeration for all strict `μ, λ` with
/// `λ_1, μ_1 ≤ max_part` and at most `max_len` rows, including `μ ⊄ λ`.
pub fn one_var_check(max_part: u32, max_len: usize) -> Result<CheckReport, SpecializeError> {
    let mut report = CheckReport::new("one-variable closed form");
    let shapes: Vec<Partition> = crate::partitions::strict_partitions_up_to(max_part * max_len as u32)
        .into_iter()
        .map(StrictPartition::into_partition)
        .filter(|p| p.first() <= max_part && p.len() <= max_len)
        .collect();
    for kind in [Family::GP, Family::GQ] {
        for lambda in &shapes {
            for mu in &shapes {
                let brute = family_poly(kind, Mode::Quasi, lambda, mu, 1, None)?;
                let closed = closed_one_var(kind, lambda, mu)?;
                report.record(brute == closed, || format!("{kind}_{lambda}//{mu}: enumeration {brute} vs closed form {closed}"));
            }
        }
    }
    Ok(report)
}

/// Evaluations at repeated `−1/β` and repeated `1` against direct substitution,
/// for all strict `μ ⊆ λ` with `|λ| ≤ max_size`, and the `φ^+` identity.
pub fn minus_inverse_beta_check(max_size: u32, betas: &[Rational]) -> Result<CheckReport, SpecializeError> {
    let mut report = CheckReport::new("evaluations at −1/β and at repeated ones");
    let shapes: Vec<StrictPartition> = crate::partitions::strict_partitions_up_to(max_size);
    let half = Rational::new(1.into(), 2.into());
    let third = Rational::new(1.into(), 3.into());
    for kind in [Family::GP, Family::GQ] {
        for l in &shapes {
            let lambda = l.as_partition();
            for m in crate::partitions::strict_subpartitions(l) {
                let mu = m.as_partition();
                // Single letter −1/β, and one extra symbolic letter after it.
                let poly2 = family_poly(kind, Mode::Quasi, lambda, mu, 2, None)?;
                let tail_shape = l.tilde().into_partition();
                for beta in betas {
                    let x = -<Rational as One>::one() / beta;
                    let direct = exact_alphabet_eval(&poly2, std::slice::from_ref(&x), beta)?;
                    let closed = eval_at_minus_inv_beta(kind, lambda, mu, 1, beta)?;
                    report.record(direct == closed, || format!("{kind}_{lambda}//{mu}(−1/β) at β = {beta}"));
                    if !lambda.is_empty() {
                        let reduced = substitute_first(&poly2, &x, beta);
                        let tail = family_poly(kind, Mode::Quasi, &tail_shape, mu, 1, None)?.substitute_beta(beta);
                        let scaled = tail.scale(&num_traits::pow(x.clone(), lambda.first() as usize));
                        report.record(reduced == scaled, || format!("{kind}_{lambda}//{mu}(−1/β, x) at β = {beta}"));
                    }
                }
                // Repeated letters, up to one past the length of λ.
                for k in 0..=lambda.len() + 1 {
                    let poly = family_poly(kind, Mode::Quasi, lambda, mu, k, None)?;
                    for beta in betas {
                        let x = -<Rational as One>::one() / beta;
                        let direct = exact_alphabet_eval(&poly, &vec![x; k], beta)?;
                        let closed = eval_at_minus_inv_beta(kind, lambda, mu, k, beta)?;
                        report.record(direct == closed, || format!("{kind}_{lambda}//{mu} at {k} letters −1/β, β = {beta}"));
                        let x_power = num_traits::pow(-<Rational as One>::one() / beta, lambda.size() as usize);
                        if mu.is_empty() && k >= lambda.len() {
                            report.record(direct == x_power, || format!("{kind}_{lambda} at {k} letters −1/β is not (−1/β)^|λ|"));
                        }
                        if !mu.is_empty() && k > lambda.len() - mu.len() {
                            report.record(direct.is_zero(), || format!("{kind}_{lambda}//{mu} at {k} letters −1/β is nonzero"));
                        }
                    }
                    let ones = exact_alphabet_eval(&poly, &vec![<Rational as One>::one(); k], &-<Rational as One>::one())?;
                    report.record(ones == eval_ones(kind, lambda, mu, k)?, || format!("{kind}_{lambda}//{mu}(1^{k}) at β = −1"));
                    if mu.is_empty() {
                        let expected = if k >= lambda.len() { <Rational as One>::one() } else { <Rational as Zero>::zero() };
                        report.record(ones == expected, || format!("{kind}_{lambda}(1^{k}) at β = −1"));
                    }
                }
                for alphabet in [vec![], vec![half.clone()], vec![half.clone(), third.clone()]] {
                    let ok = plus_extension_check(kind, lambda, mu, &alphabet)?;
                    report.record(ok, || format!("φ^+ on {kind}_{lambda}//{mu} with {} letters", alphabet.len()));
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::poly::int;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn worked_examples() {
        let s = strip_stats(Family::GP, &p(&[5]), &p(&[2])).unwrap();
        assert_eq!((s.a, s.b, s.c, s.degree), (0, 1, 1, 3));
        assert_eq!(s.free.to_vec(), vec![(1, 3)]);
        assert_eq!(s.inn.to_vec(), vec![(1, 2)]);
        assert_eq!(closed_one_var_text(&s), "(2 +\\beta x) (1 +\\beta x) x^3");
        let s = strip_stats(Family::GQ, &p(&[4, 3]), &p(&[4, 2])).unwrap();
        assert_eq!((s.a, s.b, s.c, s.degree), (0, 1, 2, 1));
        assert_eq!(s.inn.to_vec(), vec![(1, 4), (2, 3)]);
        assert_eq!(closed_one_var_text(&s), "(2 +\\beta x) (1 +\\beta x)^2 x");
        let s = strip_stats(Family::GP, &p(&[2, 1]), &p(&[])).unwrap();
        assert!(s.is_zero());
        assert!(closed_one_var(Family::GP, &p(&[2, 1]), &p(&[])).unwrap().is_zero());
    }

    #[test]
    fn closed_form_matches_enumeration_small() {
        let r = one_var_check(4, 2).unwrap();
        assert!(r.pass, "{:?}", r.counterexample);
    }

    #[test]
    fn minus_inverse_beta_values() {
        assert_eq!(eval_at_minus_inv_beta(Family::GP, &p(&[3, 1]), &p(&[1]), 1, &int(2)).unwrap(), Rational::new((-1).into(), 8.into()));
        assert_eq!(eval_ones(Family::GQ, &p(&[3, 1]), &p(&[2]), 2).unwrap(), int(0));
        assert_eq!(eval_ones(Family::GP, &p(&[3, 1]), &p(&[]), 2).unwrap(), int(1));
        let r = minus_inverse_beta_check(3, &[int(-1), int(2)]).unwrap();
        assert!(r.pass, "{:?}", r.counterexample);
    }

    #[test]
    fn plus_extension_examples() {
        let half = Rational::new(1.into(), 2.into());
        assert!(plus_extension_check(Family::GP, &p(&[3]), &p(&[]), std::slice::from_ref(&half)).unwrap());
        assert!(plus_extension_check(Family::GQ, &p(&[3, 1]), &p(&[1]), &[half]).unwrap());
        assert!(plus_extension_check(Family::GP, &p(&[]), &p(&[]), &[]).unwrap());
    }
}
