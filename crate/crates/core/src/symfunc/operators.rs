//! Substitution operators, `ω`, the `Θ` map and coproduct splitting.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::One;

use super::basis::{eliminate, Basis, Elim};
use super::families::{e_poly, family_poly, h_poly};
use super::poly::{Monomial, Rational, XPolynomial};
use super::{shape_label, CheckReport, SymFuncError};
use crate::partitions::{add_staircase, staircase, strict_interval, interval, Partition, StrictPartition};
use crate::tableaux::{Family, Mode};

/// `Φ` substitutes `x_i ↦ x_i/(1+βx_i)`, `Ψ` substitutes `x_i ↦ x_i/(1−βx_i)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Substitution {
    Phi,
    Psi,
}

/// Apply `Φ` or `Ψ` to every variable, expanding geometric series up to `cap`.
pub fn phi_psi_substitute(f: &XPolynomial, which: Substitution, cap: u32) -> XPolynomial {
    let n = f.nvars();
    let sign: i64 = match which {
        Substitution::Phi => -1,
        Substitution::Psi => 1,
    };
    let mut out = XPolynomial::zero(n).with_cap(Some(cap));
    for (m, c) in f.iter() {
        if m.x_degree() > cap {
            continue;
        }
        // (x/(1 ∓ βx))^e = Σ_t C(e+t−1, t) (±β)^t x^{e+t}
        let mut term = XPolynomial::monomial(n, Monomial::beta(m.beta_degree()), c.clone()).with_cap(Some(cap));
        for k in 1..=n {
            let e = m.exponent(k);
            if e == 0 {
                continue;
            }
            let mut factor = XPolynomial::zero(n).with_cap(Some(cap));
            for t in 0..=cap.saturating_sub(e) {
                let mut exps = vec![0u32; n];
                exps[k - 1] = e + t;
                let coeff: BigInt = binomial(BigInt::from(e + t - 1), BigInt::from(t)) * BigInt::from(sign.pow(t));
                factor.add_term(Monomial::from_exponents(t, &exps), Rational::from_integer(coeff));
            }
            term = &term * &factor;
        }
        out = &out + &term;
    }
    out
}

/// `ω` on a symmetric polynomial known up to degree `cap ≤ N`: expand in
/// products `e_{ν^T}`, then replace each `e_k` by `h_k`.
pub fn omega_on_capped(f: &XPolynomial, cap: u32) -> Result<XPolynomial, SymFuncError> {
    let n = f.nvars();
    if cap as usize > n {
        return Err(SymFuncError::CapExceedsVariables { cap, vars: n });
    }
    let f = f.clone().with_cap(Some(cap));
    let product = |nu: &Partition, gen: fn(u32, usize) -> super::IntPoly| -> XPolynomial {
        let mut p = XPolynomial::one(n).with_cap(Some(cap));
        for &k in nu.transpose().parts() {
            p = &p * &gen(k, n).to_rational();
        }
        p
    };
    let element = |nu: &Partition| -> Result<XPolynomial, SymFuncError> { Ok(product(nu, e_poly)) };
    let coeffs = match eliminate(f, Basis::Schur, &element, |_| Rational::one(), cap) {
        Ok(c) => c,
        Err(Elim::Error(e)) => return Err(e),
        Err(Elim::NeedsRational) => unreachable!("unit leading coefficients"),
    };
    let mut out = XPolynomial::zero(n).with_cap(Some(cap));
    for (nu, c) in coeffs {
        out = &out + &(&product(&nu, h_poly) * &c);
    }
    Ok(out)
}

/// `Ω = Φ ∘ ω` fixes `GP_{λ//μ}` and `GQ_{λ//μ}` up to degree `cap`.
pub fn omega_gp_invariance_check(
    kind: Family,
    lambda: &Partition,
    mu: &Partition,
    n: usize,
    cap: u32,
) -> Result<bool, SymFuncError> {
    let f = family_poly(kind, Mode::Quasi, lambda, mu, n, Some(cap))?.to_rational();
    Ok(big_omega(&f, cap)? == f)
}

/// `Ω = Φ ∘ ω` on a polynomial known up to degree `cap`.
pub fn big_omega(f: &XPolynomial, cap: u32) -> Result<XPolynomial, SymFuncError> {
    Ok(phi_psi_substitute(&omega_on_capped(f, cap)?, Substitution::Phi, cap))
}

/// `Θ(G_λ)`: the skew `GQ` polynomial of shape `(λ+δ)/δ` with `δ` the staircase of length `ℓ(λ)`.
pub fn theta_map(lambda: &Partition, n: usize, cap: Option<u32>) -> Result<XPolynomial, SymFuncError> {
    if lambda.is_empty() {
        return Ok(XPolynomial::one(n).with_cap(cap));
    }
    let outer = add_staircase(lambda).into_partition();
    let inner = staircase(lambda.len() as u32).into_partition();
    Ok(family_poly(Family::GQ, Mode::Skew, &outer, &inner, n, cap)?.to_rational())
}

/// `f` on the doubled alphabet `x_1..x_p, y_1..y_q`, with `y_k` stored as `x_{p+k}`.
pub fn coproduct_split(f: &XPolynomial, p: usize, q: usize) -> Result<XPolynomial, SymFuncError> {
    if p + q > f.nvars() {
        return Err(SymFuncError::InvalidArgument(format!(
            "splitting into {p}+{q} variables needs at least {} variables, have {}",
            p + q,
            f.nvars()
        )));
    }
    Ok(f.restrict(p + q))
}

/// `Δ(F_{λ//μ}) = Σ_κ F_{κ//μ} ⊗ F_{λ//κ}`, compared as polynomials in `p + q` variables.
pub fn coproduct_check(kind: Family, lambda: &Partition, mu: &Partition, p: usize, q: usize) -> Result<CheckReport, SymFuncError> {
    let total = p + q;
    let lhs = coproduct_split(&family_poly(kind, Mode::Quasi, lambda, mu, total, None)?.to_rational(), p, q)?;
    let kappas: Vec<Partition> = if kind.is_shifted() {
        let (l, m) = (StrictPartition::try_from(lambda.clone())?, StrictPartition::try_from(mu.clone())?);
        strict_interval(&m, &l).into_iter().map(StrictPartition::into_partition).collect()
    } else {
        interval(mu, lambda)
    };
    let mut rhs = XPolynomial::zero(total);
    for kappa in &kappas {
        let left = family_poly(kind, Mode::Quasi, kappa, mu, p, None)?.to_rational().shift_vars(0, total);
        let right = family_poly(kind, Mode::Quasi, lambda, kappa, q, None)?.to_rational().shift_vars(p, total);
        rhs = &rhs + &(&left * &right);
    }
    let mut report = CheckReport::new(format!("coproduct {kind}_{}", shape_label(lambda, mu)));
    report.record(lhs == rhs, || format!("{kind}_{} split {p}+{q} differs from the sum over κ", shape_label(lambda, mu)));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::families::{q_poly, schur_poly, straight};
    use crate::symfunc::poly::{int, IntPoly};

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn phi_on_a_variable() {
        let x = IntPoly::var(1, 1).to_rational();
        let got = phi_psi_substitute(&x, Substitution::Phi, 3);
        let mut expected = XPolynomial::zero(1).with_cap(Some(3));
        expected.add_term(Monomial::from_exponents(0, &[1]), int(1));
        expected.add_term(Monomial::from_exponents(1, &[2]), int(-1));
        expected.add_term(Monomial::from_exponents(2, &[3]), int(1));
        assert_eq!(got, expected);
        let one = XPolynomial::one(2);
        assert_eq!(phi_psi_substitute(&one, Substitution::Psi, 3), one.clone().with_cap(Some(3)));
    }

    #[test]
    fn phi_then_psi_is_identity() {
        let f = straight(Family::GQ, &p(&[2, 1]), 3).unwrap().to_rational().with_cap(Some(5));
        let back = phi_psi_substitute(&phi_psi_substitute(&f, Substitution::Phi, 5), Substitution::Psi, 5);
        assert_eq!(back, f);
    }

    #[test]
    fn omega_examples() {
        let n = 4;
        assert_eq!(omega_on_capped(&h_poly(2, n).to_rational(), 4).unwrap(), e_poly(2, n).to_rational().with_cap(Some(4)));
        for k in 0..=4 {
            let q = q_poly(k, n).to_rational();
            assert_eq!(omega_on_capped(&q, 4).unwrap(), q.clone().with_cap(Some(4)), "q_{k}");
        }
        let s21 = schur_poly(&p(&[2, 1]), 3).to_rational();
        assert_eq!(omega_on_capped(&s21, 3).unwrap(), s21.clone().with_cap(Some(3)));
        let s2 = schur_poly(&p(&[2]), 3).to_rational();
        assert_eq!(omega_on_capped(&s2, 3).unwrap(), schur_poly(&p(&[1, 1]), 3).to_rational().with_cap(Some(3)));
        assert!(omega_on_capped(&s2, 4).is_err());
    }

    #[test]
    fn big_omega_invariance() {
        assert!(omega_gp_invariance_check(Family::GP, &p(&[2, 1]), &p(&[]), 3, 3).unwrap());
        assert!(omega_gp_invariance_check(Family::GQ, &p(&[1]), &p(&[]), 3, 3).unwrap());
        let g2 = straight(Family::G, &p(&[2]), 3).unwrap().to_rational();
        let g11 = straight(Family::G, &p(&[1, 1]), 3).unwrap().to_rational().with_cap(Some(3));
        assert_eq!(big_omega(&g2, 3).unwrap(), g11);
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta_map(&p(&[]), 2, None).unwrap(), XPolynomial::one(2));
        for n in 1..=3u32 {
            for vars in 1..=3 {
                let gq = straight(Family::GQ, &p(&[n]), vars).unwrap().to_rational();
                assert_eq!(theta_map(&p(&[n]), vars, None).unwrap(), gq);
            }
        }
    }

    #[test]
    fn coproduct_examples() {
        let h2 = h_poly(2, 2).to_rational();
        let split = coproduct_split(&h2, 1, 1).unwrap();
        assert_eq!(split, h2);
        assert!(coproduct_check(Family::GP, &p(&[2]), &p(&[]), 1, 1).unwrap().pass);
        assert!(coproduct_check(Family::GQ, &p(&[3, 1]), &p(&[1]), 2, 1).unwrap().pass);
        assert!(coproduct_check(Family::G, &p(&[2, 1]), &p(&[]), 2, 2).unwrap().pass);
        assert!(coproduct_split(&XPolynomial::one(1), 1, 1).is_err());
    }
}
