//! Values of a union of atoms on the tableau families.
//!
//! A finite `φ` alphabet is plain substitution into the polynomial. Because
//! `Ω = Φ ∘ ω` fixes `GP` and `GQ` and sends `G_λ` to `G_{λᵀ}`, the atom `ε_b`
//! agrees with the letter `b/(1 − βb)` on `GP_λ`, `GQ_λ` and on `G_{λᵀ}`. The
//! exponential atom `π_γ` keeps only square-free monomials, so
//! `π_γ(f) = Σ_d [x_1 ⋯ x_d] f · γ^d/d!`, and those coefficients count fillings
//! that use each of `1..d` once. Unions are assembled with the coproduct
//! `F_{λ//μ} ↦ Σ_κ F_{κ//μ} ⊗ F_{λ//κ}`.

use std::collections::HashMap;

use num_traits::{Signed, Zero};

use super::atoms::Atoms;
use super::series::Scalar;
use super::SpecializeError;
use crate::partitions::{interval, strict_interval, Partition, StrictPartition};
use crate::symfunc::families::family_poly;
use crate::symfunc::poly::{rational_to_f64, Coeff, Poly, Rational, MAX_VARS};
use crate::tableaux::{Family, Mode, Region, TableauError, TableauFamily};

/// Substitute a finite alphabet (missing letters are zero) and a value of `β`.
pub fn exact_alphabet_eval<C: Coeff>(f: &Poly<C>, alphabet: &[Rational], beta: &Rational) -> Result<Rational, SpecializeError> {
    if alphabet.len() > f.nvars() {
        return Err(SpecializeError::ParameterConstraintViolated(format!(
            "alphabet of {} letters exceeds the {} variables of the polynomial",
            alphabet.len(),
            f.nvars()
        )));
    }
    Ok(f.to_rational().eval(alphabet, beta))
}

/// `F_{λ//μ}` (quasi-skew) evaluated at a finite alphabet.
pub fn alphabet_value(kind: Family, lambda: &Partition, mu: &Partition, alphabet: &[Rational], beta: &Rational) -> Result<Rational, SpecializeError> {
    if !lambda.contains(mu) {
        return Ok(<Rational as Zero>::zero());
    }
    if alphabet.len() > MAX_VARS {
        return Err(TableauError::TooManyVariables(alphabet.len(), MAX_VARS).into());
    }
    let f = family_poly(kind, Mode::Quasi, lambda, mu, alphabet.len(), None)?;
    exact_alphabet_eval(&f, alphabet, beta)
}

const OPEN: u64 = 0;
const ACTIVE: u64 = 1;
const FROZEN: u64 = 2;
const SKIPPED: u64 = 3;

/// Largest number of letters summed in the exponential series.
const MAX_LETTERS: usize = 400;

/// `π_γ(F_{λ//μ})` at a numeric `β`, summing square-free coefficients until the
/// remaining mass is negligible.
///
/// Letters `1, 2, …` are inserted in increasing order. Each fillable cell is
/// open (no letters yet), active (may still grow), frozen (a later neighbour
/// was filled) or skipped (an optional cell left empty for good). A letter may
/// enter a cell only if no cell to its right or below holds letters; cells to
/// its left or above then stop growing, and an empty optional one is skipped.
pub fn pi_value(family: TableauFamily, lambda: &Partition, mu: &Partition, gamma: f64, beta: f64) -> Result<f64, SpecializeError> {
    let Some(region) = Region::new(family, lambda, mu)? else {
        return Ok(0.0);
    };
    let cells = &region.cells;
    if cells.len() > 32 {
        return Err(SpecializeError::ParameterConstraintViolated(format!("shape {lambda}//{mu} too large for the exponential evaluation")));
    }
    let index: HashMap<(u32, u32), usize> = cells.iter().enumerate().map(|(k, c)| (c.cell, k)).collect();
    let find = |i: u32, j: u32| index.get(&(i, j)).copied();
    let after: Vec<Vec<usize>> = cells
        .iter()
        .map(|c| [find(c.cell.0, c.cell.1 + 1), find(c.cell.0 + 1, c.cell.1)].into_iter().flatten().collect())
        .collect();
    let before: Vec<Vec<usize>> = cells
        .iter()
        .map(|c| {
            let (i, j) = c.cell;
            [j.checked_sub(1).and_then(|j| find(i, j)), i.checked_sub(1).and_then(|i| find(i, j))].into_iter().flatten().collect()
        })
        .collect();
    let primes = |k: usize| -> f64 {
        if cells[k].primes_allowed {
            2.0
        } else {
            1.0
        }
    };
    let get = |s: u64, k: usize| (s >> (2 * k)) & 3;
    let set = |s: u64, k: usize, v: u64| (s & !(3 << (2 * k))) | (v << (2 * k));
    let complete = |s: u64| cells.iter().enumerate().all(|(k, c)| c.optional || matches!(get(s, k), ACTIVE | FROZEN));

    let mut states: HashMap<u64, f64> = HashMap::from([(0u64, 1.0)]);
    let mut total = if complete(0) { 1.0 } else { 0.0 };
    for d in 1..=MAX_LETTERS {
        let mut next: HashMap<u64, f64> = HashMap::new();
        for (&s, &w) in &states {
            'cell: for k in 0..cells.len() {
                let state = get(s, k);
                if !matches!(state, OPEN | ACTIVE) {
                    continue;
                }
                if after[k].iter().any(|&m| matches!(get(s, m), ACTIVE | FROZEN)) {
                    continue;
                }
                let mut t = set(s, k, ACTIVE);
                for &m in &before[k] {
                    match get(s, m) {
                        ACTIVE => t = set(t, m, FROZEN),
                        OPEN if cells[m].optional => t = set(t, m, SKIPPED),
                        OPEN => continue 'cell,
                        _ => {}
                    }
                }
                let first_required = state == OPEN && !cells[k].optional;
                let factor = primes(k) * if first_required { 1.0 } else { beta } * gamma / d as f64;
                if factor != 0.0 {
                    *next.entry(t).or_insert(0.0) += w * factor;
                }
            }
        }
        states = next;
        let mass: f64 = states.values().map(|w| w.abs()).sum();
        let gained: f64 = states.iter().filter(|(&s, _)| complete(s)).map(|(_, w)| w).sum();
        total += gained;
        if states.is_empty() || mass <= 1e-18 * total.abs().max(1e-300) && d > cells.len() {
            break;
        }
    }
    Ok(total)
}

/// Values of `ρ = φ_a ⊔ ε_b ⊔ π_γ` on the families at a fixed `β`.
#[derive(Clone, Debug)]
pub struct Evaluator {
    pub atoms: Atoms,
    pub beta: Rational,
}

impl Evaluator {
    pub fn new(atoms: Atoms, beta: Rational) -> Self {
        Evaluator { atoms, beta }
    }

    /// `ε_b` as a letter: `b/(1 − βb)`.
    fn eps_as_letters(&self) -> Result<Vec<Rational>, SpecializeError> {
        let one = Rational::from_integer(1.into());
        self.atoms
            .eps_letters()
            .into_iter()
            .map(|b| {
                let base = &one - &b * &self.beta;
                if !base.is_positive() {
                    return Err(SpecializeError::DivergentG1 { b: b.to_string(), beta: self.beta.to_string() });
                }
                Ok(b / base)
            })
            .collect()
    }

    /// `ρ(F_{λ//μ})`. With `T = Rational` this fails on atoms `π_γ`, `γ > 0`.
    pub fn value<T: Scalar>(&self, kind: Family, lambda: &Partition, mu: &Partition) -> Result<T, SpecializeError> {
        if kind.is_shifted() && (!lambda.is_strict() || !mu.is_strict()) {
            return Err(TableauError::NotStrict(kind, if lambda.is_strict() { mu.clone() } else { lambda.clone() }).into());
        }
        if !lambda.contains(mu) {
            return Ok(T::zero());
        }
        let mut phi = self.atoms.phi_letters();
        let eps = self.eps_as_letters()?;
        if kind.is_shifted() || eps.is_empty() {
            phi.extend(eps);
            return self.phi_pi(kind, lambda, mu, &phi);
        }
        if !mu.is_empty() {
            return Err(SpecializeError::ParameterConstraintViolated(
                "eps atoms on G are evaluated on straight shapes only".into(),
            ));
        }
        let mut total = T::zero();
        for kappa in interval(&Partition::empty(), lambda) {
            let left = alphabet_value(Family::G, &kappa.transpose(), &Partition::empty(), &eps, &self.beta)?;
            if Zero::is_zero(&left) {
                continue;
            }
            let right: T = self.phi_pi(kind, lambda, &kappa, &phi)?;
            total = total.plus(&T::from_rational(&left).times(&right));
        }
        Ok(total)
    }

    fn phi_pi<T: Scalar>(&self, kind: Family, lambda: &Partition, mu: &Partition, phi: &[Rational]) -> Result<T, SpecializeError> {
        let gamma = self.atoms.gamma();
        if Zero::is_zero(&gamma) {
            return Ok(T::from_rational(&alphabet_value(kind, lambda, mu, phi, &self.beta)?));
        }
        let (g, b) = (rational_to_f64(&gamma), rational_to_f64(&self.beta));
        let family = TableauFamily::quasi(kind);
        let mut total = 0.0;
        for nu in shape_interval(kind, mu, lambda) {
            let left = alphabet_value(kind, &nu, mu, phi, &self.beta)?;
            if Zero::is_zero(&left) {
                continue;
            }
            total += rational_to_f64(&left) * pi_value(family, lambda, &nu, g, b)?;
        }
        T::from_f64(total).ok_or_else(|| SpecializeError::NotExact(format!("π_{gamma} values are irrational")))
    }
}

/// Shapes `κ` with `μ ⊆ κ ⊆ λ`, strict for the shifted families.
pub fn shape_interval(kind: Family, mu: &Partition, lambda: &Partition) -> Vec<Partition> {
    if kind.is_shifted() {
        match (StrictPartition::try_from(mu.clone()), StrictPartition::try_from(lambda.clone())) {
            (Ok(m), Ok(l)) => strict_interval(&m, &l).into_iter().map(StrictPartition::into_partition).collect(),
            _ => Vec::new(),
        }
    } else {
        interval(mu, lambda)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::families::{q_poly, straight};
    use crate::symfunc::poly::{int, parse_rational};

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn alphabet_examples() {
        let gq1 = straight(Family::GQ, &p(&[1]), 1).unwrap();
        assert_eq!(exact_alphabet_eval(&gq1, &[int(1)], &int(1)).unwrap(), int(3));
        let gp = straight(Family::GP, &p(&[2, 1]), 2).unwrap();
        assert_eq!(exact_alphabet_eval(&gp, &[], &int(1)).unwrap(), int(0));
        let gp1 = straight(Family::GP, &p(&[1]), 2).unwrap();
        assert_eq!(exact_alphabet_eval(&gp1, &[q("1/2"), q("1/3")], &int(1)).unwrap(), int(1));
        assert!(exact_alphabet_eval(&gp1, &[int(1), int(1), int(1)], &int(1)).is_err());
    }

    #[test]
    fn pi_on_classical_functions() {
        // β = 0: π_γ(h_n) = γ^n/n!, π_γ(q_n) = (2γ)^n/n!.
        let g = 0.3f64;
        for n in 0..6u32 {
            let fact: f64 = (1..=n).map(f64::from).product();
            let h = pi_value(TableauFamily::quasi(Family::G), &Partition::row(n), &p(&[]), g, 0.0).unwrap();
            assert!((h - g.powi(n as i32) / fact).abs() < 1e-15, "h_{n}");
            let qn = pi_value(TableauFamily::quasi(Family::GQ), &Partition::row(n), &p(&[]), g, 0.0).unwrap();
            assert!((qn - (2.0 * g).powi(n as i32) / fact).abs() < 1e-14, "q_{n}");
        }
        // π_γ(e_2) = γ²/2 via the column shape.
        let e2 = pi_value(TableauFamily::quasi(Family::G), &p(&[1, 1]), &p(&[]), g, 0.0).unwrap();
        assert!((e2 - g * g / 2.0).abs() < 1e-15);
    }

    #[test]
    fn pi_matches_limit_of_uniform_alphabets() {
        // π_γ(G_1) at β = 1 is e^γ − 1, the limit of ∏(1 + γ/N) − 1.
        let g = 0.4f64;
        let v = pi_value(TableauFamily::quasi(Family::G), &p(&[1]), &p(&[]), g, 1.0).unwrap();
        assert!((v - (g.exp() - 1.0)).abs() < 1e-14);
        // GP_{(2,1)} at β = 1 against a long uniform alphabet, error O(1/N).
        let exact = pi_value(TableauFamily::quasi(Family::GP), &p(&[2, 1]), &p(&[]), g, 1.0).unwrap();
        let n = 12;
        let f = straight(Family::GP, &p(&[2, 1]), n).unwrap();
        let approx = f.eval_f64(&vec![g / n as f64; n], 1.0);
        assert!((exact - approx).abs() < 0.2 * exact.abs(), "{exact} vs {approx}");
    }

    #[test]
    fn eps_agrees_with_omega_twisted_letters() {
        // At β = 0, ε_b(h_n) = e_n(b) and ε_b(q_n) = q_n(b).
        let ev = Evaluator::new("eps:1/3,eps:1/5".parse().unwrap(), int(0));
        let e2: Rational = ev.value(Family::G, &p(&[2]), &p(&[])).unwrap();
        assert_eq!(e2, q("1/15"));
        let q2: Rational = ev.value(Family::GQ, &p(&[2]), &p(&[])).unwrap();
        let expected = q_poly(2, 2).to_rational().eval(&[q("1/3"), q("1/5")], &int(0));
        assert_eq!(q2, expected);
    }

    #[test]
    fn union_with_pi_is_close_to_exact_limit() {
        let ev = Evaluator::new("phi:1/2,pi:1/4".parse().unwrap(), int(1));
        assert!(ev.value::<Rational>(Family::GP, &p(&[1]), &p(&[])).is_err());
        let v: f64 = ev.value(Family::GP, &p(&[1]), &p(&[])).unwrap();
        // GP_1 = G_1, so ρ(GP_1) = (1 + 1/2) e^{1/4} − 1.
        assert!((v - (1.5 * 0.25f64.exp() - 1.0)).abs() < 1e-14);
    }
}
