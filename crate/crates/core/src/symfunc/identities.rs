//! Exact checks of structural identities among the families, all carried out
//! with integer polynomials in finitely many variables.

use serde::Serialize;

use super::families::{e_poly, family_poly, h_poly, straight};
use super::operators::theta_map;
use super::poly::{IntPoly, Monomial};
use super::{CheckReport, SymFuncError};
use crate::partitions::{strip_successors, Partition};
use crate::tableaux::{singlebar_relation_check, Family, Mode};

#[derive(Clone, Debug, Serialize)]
pub struct PieriReport {
    pub kind: Family,
    pub mu: Partition,
    pub vars: usize,
    pub pass: bool,
    /// Each successor `λ` with the power of `β` multiplying `F_λ`.
    pub terms: Vec<(Partition, u32)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

fn beta_times(p: &IntPoly, k: u32) -> IntPoly {
    p.mul_monomial(Monomial::beta(k))
}

/// `F_1 F_μ = Σ_λ β^{|λ|−|μ|−1} F_λ` over rook-strip successors `λ` of `μ`.
pub fn pieri_check(kind: Family, mu: &Partition, n: usize) -> Result<PieriReport, SymFuncError> {
    if kind == Family::GQ {
        return Err(SymFuncError::InvalidArgument("the Pieri rule is checked for G and GP".into()));
    }
    let shifted = kind.is_shifted();
    if shifted && !mu.is_strict() {
        return Err(crate::tableaux::TableauError::NotStrict(kind, mu.clone()).into());
    }
    let lhs = &straight(kind, &Partition::row(1), n)? * &straight(kind, mu, n)?;
    let mut rhs = IntPoly::zero(n);
    let mut terms = Vec::new();
    for lambda in strip_successors(mu, shifted) {
        let k = lambda.size() - mu.size() - 1;
        rhs = &rhs + &beta_times(&straight(kind, &lambda, n)?, k);
        terms.push((lambda, k));
    }
    let pass = lhs == rhs;
    let counterexample = (!pass).then(|| first_difference(&lhs, &rhs));
    Ok(PieriReport { kind, mu: mu.clone(), vars: n, pass, terms, counterexample })
}

/// Describe the smallest monomial where two polynomials differ.
pub fn first_difference(a: &IntPoly, b: &IntPoly) -> String {
    let diff = a - b;
    match diff.sorted_terms().first() {
        None => "no difference".into(),
        Some((m, c)) => format!(
            "coefficient of β^{} x^{:?} differs by {c}",
            m.beta_degree(),
            m.x_exponents(a.nvars())
        ),
    }
}

fn compare(report: &mut CheckReport, label: impl Fn() -> String, lhs: &IntPoly, rhs: &IntPoly) {
    let ok = lhs == rhs;
    report.record(ok, || format!("{}: {}", label(), first_difference(lhs, rhs)));
}

/// `GQ_k = 2 GP_k + β GP_{k+1}` for `1 ≤ k ≤ max_n`.
pub fn gqgp_check(max_n: u32, n: usize) -> Result<CheckReport, SymFuncError> {
    let mut report = CheckReport::new("GQ_n = 2GP_n + βGP_{n+1}");
    for k in 1..=max_n {
        let gq = straight(Family::GQ, &Partition::row(k), n)?;
        let gp = straight(Family::GP, &Partition::row(k), n)?.scale(&2);
        let gp_next = beta_times(&straight(Family::GP, &Partition::row(k + 1), n)?, 1);
        compare(&mut report, || format!("n = {k}"), &gq, &(&gp + &gp_next));
    }
    Ok(report)
}

/// `GP_1² = GP_2` and `(1 + βGP_1)² = 1 + βGQ_1`.
pub fn square_identities(n: usize) -> Result<CheckReport, SymFuncError> {
    let mut report = CheckReport::new("GP_1^2 = GP_2 and (1+βGP_1)^2 = 1+βGQ_1");
    let gp1 = straight(Family::GP, &Partition::row(1), n)?;
    let gp2 = straight(Family::GP, &Partition::row(2), n)?;
    compare(&mut report, || "GP_1^2".into(), &(&gp1 * &gp1), &gp2);
    let one = IntPoly::one(n);
    let lhs = (&one + &beta_times(&gp1, 1)).pow(2);
    let rhs = &one + &beta_times(&straight(Family::GQ, &Partition::row(1), n)?, 1);
    compare(&mut report, || "(1+βGP_1)^2".into(), &lhs, &rhs);
    Ok(report)
}

/// `GQ_{(k)//(m)} = GQ_{k−m} + βGQ_{k−m+1}` and the `GP` counterpart, whose
/// last term is `βGQ_{k−m+1}` for `m > 1` and `βGP_k` for `m = 1`.
pub fn one_row_quasi_skew_check(max_n: u32, n: usize) -> Result<CheckReport, SymFuncError> {
    let mut report = CheckReport::new("one-row quasi-skew identities");
    for k in 2..=max_n {
        for m in 1..k {
            let (outer, inner) = (Partition::row(k), Partition::row(m));
            let gq_row = |r: u32| straight(Family::GQ, &Partition::row(r), n);
            let base = gq_row(k - m)?;
            let next = beta_times(&gq_row(k - m + 1)?, 1);
            let gq_skew = family_poly(Family::GQ, Mode::Quasi, &outer, &inner, n, None)?;
            compare(&mut report, || format!("GQ_({k})//({m})"), &gq_skew, &(&base + &next));
            let gp_skew = family_poly(Family::GP, Mode::Quasi, &outer, &inner, n, None)?;
            let tail = if m > 1 { next.clone() } else { beta_times(&straight(Family::GP, &outer, n)?, 1) };
            compare(&mut report, || format!("GP_({k})//({m})"), &gp_skew, &(&base + &tail));
        }
    }
    Ok(report)
}

/// The relation between skew and quasi-skew shapes for all strict `μ ⊆ λ`, `|λ| ≤ max_size`.
pub fn singlebar_check(kind: Family, max_size: u32, n: usize) -> Result<CheckReport, SymFuncError> {
    let mut report = CheckReport::new(format!("{kind} skew = Σ (−β)^(|μ|−|ν|) quasi-skew"));
    for lambda in crate::partitions::strict_partitions_up_to(max_size) {
        for mu in crate::partitions::strict_subpartitions(&lambda) {
            let ok = singlebar_relation_check(kind, &lambda, &mu, n)?;
            report.record(ok, || format!("{lambda}/{mu}"));
        }
    }
    Ok(report)
}

/// `G_k + βG_{k+1} = (1 + βG_1) h_k` for `0 ≤ k ≤ max_n`.
pub fn gg_check(max_n: u32, n: usize) -> Result<CheckReport, SymFuncError> {
    let mut report = CheckReport::new("Σ(G_n+βG_{n+1})z^n = (1+βG_1)H(z)");
    let one_plus = &IntPoly::one(n) + &beta_times(&straight(Family::G, &Partition::row(1), n)?, 1);
    for k in 0..=max_n {
        let lhs = &straight(Family::G, &Partition::row(k), n)? + &beta_times(&straight(Family::G, &Partition::row(k + 1), n)?, 1);
        let rhs = &one_plus * &h_poly(k, n);
        compare(&mut report, || format!("z^{k}"), &lhs, &rhs);
    }
    Ok(report)
}

/// `[z^j] E(z+β) = Σ_{k ≥ j} C(k, j) β^{k−j} e_k`.
pub fn shifted_e_coefficient(j: u32, n: usize) -> IntPoly {
    let mut out = IntPoly::zero(n);
    for k in j..=n as u32 {
        let c = num_integer::binomial(k as i128, j as i128);
        out = &out + &beta_times(&e_poly(k, n), k - j).scale(&c);
    }
    out
}

/// `GQ_k + βGQ_{k+1} = [z^k] (1 + βG_1) E(z+β) H(z)` for `0 ≤ k ≤ max_n`.
pub fn himn_check(max_n: u32, n: usize) -> Result<CheckReport, SymFuncError> {
    let mut report = CheckReport::new("Σ(GQ_n+βGQ_{n+1})z^n = (1+βG_1)E(z+β)H(z)");
    let one_plus = &IntPoly::one(n) + &beta_times(&straight(Family::G, &Partition::row(1), n)?, 1);
    for k in 0..=max_n {
        let lhs = &straight(Family::GQ, &Partition::row(k), n)? + &beta_times(&straight(Family::GQ, &Partition::row(k + 1), n)?, 1);
        let mut conv = IntPoly::zero(n);
        for j in 0..=k {
            conv = &conv + &(&shifted_e_coefficient(j, n) * &h_poly(k - j, n));
        }
        compare(&mut report, || format!("z^{k}"), &lhs, &(&one_plus * &conv));
    }
    Ok(report)
}

/// `Θ(G_k) = GQ_k` as polynomials, for `1 ≤ k ≤ max_n`.
pub fn theta_one_row_check(max_n: u32, n: usize) -> Result<CheckReport, SymFuncError> {
    let mut report = CheckReport::new("Θ(G_n) = GQ_n");
    for k in 1..=max_n {
        let theta = theta_map(&Partition::row(k), n, None)?;
        let gq = straight(Family::GQ, &Partition::row(k), n)?.to_rational();
        report.record(theta == gq, || format!("n = {k}"));
    }
    Ok(report)
}

/// `Θ(G_a G_b) = Θ(G_a) Θ(G_b)` for one-row generators, comparing the
/// `G`-expansion of `G_a G_b` pushed through `Θ` with the product of images,
/// up to degree `cap ≤ n`.
pub fn theta_multiplicative_check(max_row: u32, n: usize, cap: u32) -> Result<CheckReport, SymFuncError> {
    use super::basis::{expand_in_basis, Basis, BetaValue};
    let mut report = CheckReport::new("Θ multiplicative on one-row generators");
    for a in 1..=max_row {
        for b in a..=max_row {
            let prod = (&straight(Family::G, &Partition::row(a), n)? * &straight(Family::G, &Partition::row(b), n)?).with_cap(Some(cap));
            let combo = expand_in_basis(&prod, Basis::G, &BetaValue::Symbolic, Some(cap))?;
            let mut image = super::poly::XPolynomial::zero(n).with_cap(Some(cap));
            for (lambda, c) in &combo.coeffs {
                image = &image + &(&theta_map(lambda, n, Some(cap))? * &c.to_poly(n));
            }
            let rhs = &theta_map(&Partition::row(a), n, Some(cap))? * &theta_map(&Partition::row(b), n, Some(cap))?;
            report.record(image == rhs, || format!("G_{a}·G_{b}"));
        }
    }
    Ok(report)
}

/// Computing in `n + 1` variables then setting `x_{n+1} = 0` agrees with computing in `n`.
pub fn truncation_coherence_check(kind: Family, lambda: &Partition, mu: &Partition, n: usize) -> Result<bool, SymFuncError> {
    let big = family_poly(kind, Mode::Quasi, lambda, mu, n + 1, None)?;
    let small = family_poly(kind, Mode::Quasi, lambda, mu, n, None)?;
    Ok(big.restrict(n) == small)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn pieri_examples() {
        let r = pieri_check(Family::GP, &p(&[3, 1]), 4).unwrap();
        assert!(r.pass);
        assert_eq!(r.terms, vec![(p(&[4, 1]), 0), (p(&[3, 2]), 0), (p(&[4, 2]), 1)]);
        let r = pieri_check(Family::G, &p(&[3, 1]), 4).unwrap();
        assert!(r.pass);
        assert_eq!(r.terms.len(), 7);
        let r = pieri_check(Family::GP, &p(&[]), 2).unwrap();
        assert!(r.pass);
        assert_eq!(r.terms, vec![(p(&[1]), 0)]);
    }

    #[test]
    fn structural_identities_small() {
        assert!(gqgp_check(3, 2).unwrap().pass);
        let sq = square_identities(3).unwrap();
        assert!(sq.pass, "{:?}", sq.counterexample);
        assert!(one_row_quasi_skew_check(4, 2).unwrap().pass);
        assert!(gg_check(3, 2).unwrap().pass);
        assert!(himn_check(3, 2).unwrap().pass);
        assert!(theta_one_row_check(3, 2).unwrap().pass);
    }

    #[test]
    fn theta_is_multiplicative() {
        assert!(theta_multiplicative_check(2, 4, 4).unwrap().pass);
    }

    #[test]
    fn truncation_coherence() {
        for kind in [Family::G, Family::GP, Family::GQ] {
            assert!(truncation_coherence_check(kind, &p(&[3, 1]), &p(&[1]), 2).unwrap());
        }
    }

    #[test]
    fn a_wrong_identity_is_caught() {
        let gp1 = straight(Family::GP, &Partition::row(1), 2).unwrap();
        let mut r = CheckReport::new("wrong");
        compare(&mut r, || "GP_1 vs 2GP_1".into(), &gp1, &gp1.scale(&2));
        assert!(!r.pass);
        assert!(r.counterexample.unwrap().contains("differs"));
    }

    #[test]
    fn square_without_beta_on_gq_fails() {
        let n = 2;
        let gp1 = straight(Family::GP, &Partition::row(1), n).unwrap();
        let one = IntPoly::one(n);
        let lhs = (&one + &beta_times(&gp1, 1)).pow(2);
        let rhs = &one + &straight(Family::GQ, &Partition::row(1), n).unwrap();
        assert_ne!(lhs, rhs);
    }
}
