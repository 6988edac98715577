//! Generating-series identities of the classification theorems, checked by
//! computing the left side from values of the families and the right side
//! from the closed product.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::atoms::{g_generating_series, gq_generating_series, union_series, Atom, Atoms, Which};
use super::evaluate::Evaluator;
use super::series::{compare_exact, compare_f64, Scalar, Series};
use super::SpecializeError;
use crate::partitions::Partition;
use crate::symfunc::poly::Rational;
use crate::tableaux::Family;

/// Which series identity to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem {
    /// `Σ ρ(G_n + G_{n+1}) z^n = C e^{γz} ∏ (1 + b z)/(1 − a z)` at `β = 1`.
    Y1,
    /// `Σ ρ(GQ_n + GQ_{n+1}) z^n = D² e^{2γz} ∏ (1 − ā z)/(1 − a z)` at `β = 1`.
    Main2,
    /// `Σ ρ(G_n − G_{n+1}) z^n = (1 − δ) e^{γz} ∏ (1 + b z)/(1 − a z)` at `β = −1`.
    MgC,
    /// `Σ ρ(GQ_n − GQ_{n+1}) z^n = (1 − δ)² e^{2γz} ∏ (1 − ã z)/(1 − a z)` at `β = −1`.
    Main3D,
    /// `Σ ρ(q_n) z^n = e^{2γz} ∏ (1 + a z)/(1 − a z)` at `β = 0`.
    Nazarov,
}

impl Theorem {
    pub const ALL: [Theorem; 5] = [Theorem::Y1, Theorem::Main2, Theorem::MgC, Theorem::Main3D, Theorem::Nazarov];

    pub fn beta(self) -> Rational {
        Rational::from_integer(match self {
            Theorem::Y1 | Theorem::Main2 => 1.into(),
            Theorem::MgC | Theorem::Main3D => (-1).into(),
            Theorem::Nazarov => 0.into(),
        })
    }

    pub fn family(self) -> Family {
        match self {
            Theorem::Y1 | Theorem::MgC => Family::G,
            _ => Family::GQ,
        }
    }

    fn allows_eps(self) -> bool {
        matches!(self, Theorem::Y1 | Theorem::MgC)
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem::Y1 => "y1",
            Theorem::Main2 => "main2",
            Theorem::MgC => "mg_c",
            Theorem::Main3D => "main3_d",
            Theorem::Nazarov => "nazarov",
        })
    }
}

impl FromStr for Theorem {
    type Err = SpecializeError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.to_string() == s.to_ascii_lowercase().replace('-', "_"))
            .ok_or_else(|| SpecializeError::Parse(format!("unknown identity {s:?}; expected y1, main2, mg_c, main3_d or nazarov")))
    }
}

/// How the left side was computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    /// Exact substitution into tableau polynomials.
    Exact,
    /// Finite alphabets exactly, the exponential atom by square-free coefficients.
    Coproduct,
}

#[derive(Clone, Debug, Serialize)]
pub struct SeriesReport {
    pub theorem: Theorem,
    pub atoms: Atoms,
    pub beta: String,
    pub order: usize,
    pub tol: f64,
    pub lhs: Vec<f64>,
    pub rhs: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs_exact: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs_exact: Option<Vec<String>>,
    pub max_rel_dev: f64,
    pub first_fail_index: Option<usize>,
    /// Deviation of the product of per-atom series from the closed form.
    pub series_route_dev: f64,
    pub pass: bool,
    pub exact: bool,
    pub route: Route,
    pub constants: BTreeMap<String, f64>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub constants_exact: BTreeMap<String, String>,
}

fn validate(theorem: Theorem, atoms: &Atoms) -> Result<(), SpecializeError> {
    let one = <Rational as One>::one();
    for atom in atoms.iter() {
        match atom {
            Atom::Eps(b) if !theorem.allows_eps() => {
                return Err(SpecializeError::ParameterConstraintViolated(format!("{theorem} takes phi and pi atoms only, got eps:{b}")));
            }
            Atom::Eps(b) if theorem == Theorem::Y1 && *b >= one => {
                return Err(SpecializeError::ParameterConstraintViolated(format!("{theorem} needs max(b) < 1, got eps:{b}")));
            }
            Atom::Phi(a) if matches!(theorem, Theorem::MgC | Theorem::Main3D) && *a >= one => {
                return Err(SpecializeError::ParameterConstraintViolated(format!("{theorem} needs max(a) < 1, got phi:{a}")));
            }
            _ => {}
        }
    }
    Ok(())
}

type Constants<T> = Vec<(&'static str, T)>;

/// Closed right side and its named constants.
fn closed_form<T: Scalar>(theorem: Theorem, atoms: &Atoms, order: usize) -> Result<(Series<T>, Constants<T>), SpecializeError> {
    let one = <Rational as One>::one();
    let a = atoms.phi_letters();
    let b = atoms.eps_letters();
    let gamma = atoms.gamma();
    let r = |x: &Rational| T::from_rational(x);
    let mut product = Series::<T>::one(order);
    let denominators = |product: &mut Series<T>| {
        for ai in &a {
            *product = product.mul(&Series::geometric(&r(ai), order));
        }
    };
    Ok(match theorem {
        Theorem::Y1 | Theorem::MgC => {
            denominators(&mut product);
            for bi in &b {
                product = product.mul(&Series::linear(T::one(), r(bi), order));
            }
            let sign = if theorem == Theorem::Y1 { one.clone() } else { -one.clone() };
            // C = e^γ ∏ (1+a)/(1−b); 1 − δ = e^{−γ} ∏ (1−a)/(1+b).
            let mut c = T::exp_of(&(&sign * &gamma))?;
            for ai in &a {
                c = c.times(&r(&(&one + &sign * ai)));
            }
            for bi in &b {
                c = c.over(&r(&(&one - &sign * bi)));
            }
            let series = product.mul(&Series::exp(&r(&gamma), order)).scale(&c);
            let name = if theorem == Theorem::Y1 { "C" } else { "1-delta" };
            (series, vec![(name, c)])
        }
        Theorem::Main2 | Theorem::Main3D => {
            denominators(&mut product);
            let sign = if theorem == Theorem::Main2 { one.clone() } else { -one.clone() };
            // ā = −a/(1+a) and ã = −a/(1−a): both are −a/(1 + βa).
            for ai in &a {
                let bar = -ai / (&one + &sign * ai);
                product = product.mul(&Series::linear(T::one(), r(&-bar), order));
            }
            let mut d = T::exp_of(&(&sign * &gamma))?;
            for ai in &a {
                d = d.times(&r(&(&one + &sign * ai)));
            }
            let two_gamma = &gamma + &gamma;
            let series = product.mul(&Series::exp(&r(&two_gamma), order)).scale(&d.times(&d));
            let name = if theorem == Theorem::Main2 { "D" } else { "1-delta" };
            (series, vec![(name, d.clone()), (if theorem == Theorem::Main2 { "D^2" } else { "(1-delta)^2" }, d.times(&d))])
        }
        Theorem::Nazarov => {
            denominators(&mut product);
            for ai in &a {
                product = product.mul(&Series::linear(T::one(), r(ai), order));
            }
            let two_gamma = &gamma + &gamma;
            (product.mul(&Series::exp(&r(&two_gamma), order)), vec![])
        }
    })
}

/// `ρ(F_n + βF_{n+1})` for `n = 0..=order`.
fn lhs_values<T: Scalar>(theorem: Theorem, atoms: &Atoms, order: usize) -> Result<Vec<T>, SpecializeError> {
    let beta = theorem.beta();
    let ev = Evaluator::new(atoms.clone(), beta.clone());
    let kind = theorem.family();
    let values: Vec<T> = (0..=order as u32 + 1)
        .map(|n| ev.value::<T>(kind, &Partition::row(n), &Partition::empty()))
        .collect::<Result<_, _>>()?;
    let b = T::from_rational(&beta);
    Ok((0..=order).map(|n| values[n].plus(&b.times(&values[n + 1]))).collect())
}

/// The product of per-atom series, without reference to the tableau families.
fn series_route(theorem: Theorem, atoms: &Atoms, order: usize) -> Result<Series<f64>, SpecializeError> {
    let beta = theorem.beta();
    match theorem {
        Theorem::Y1 | Theorem::MgC => g_generating_series(atoms, &beta, order),
        Theorem::Main2 | Theorem::Main3D => gq_generating_series(atoms, &beta, order),
        Theorem::Nazarov => {
            let e = union_series::<f64>(atoms, Which::E, &beta, order)?;
            Ok(e.mul(&union_series(atoms, Which::H, &beta, order)?))
        }
    }
}

/// Compare both sides to order `order`; exact when every parameter is
/// rational and there is no exponential atom.
pub fn classification_check(theorem: Theorem, atoms: &Atoms, order: usize, tol: f64) -> Result<SeriesReport, SpecializeError> {
    validate(theorem, atoms)?;
    let beta = theorem.beta();
    let series = series_route(theorem, atoms, order)?;
    let exact = !atoms.has_pi();
    let (lhs, rhs, deviation, lhs_exact, rhs_exact, constants, constants_exact) = if exact {
        let lhs: Vec<Rational> = lhs_values(theorem, atoms, order)?;
        let (rhs, consts) = closed_form::<Rational>(theorem, atoms, order)?;
        let dev = compare_exact(&lhs, rhs.coeffs());
        (
            lhs.iter().map(Scalar::to_f64).collect::<Vec<f64>>(),
            rhs.to_f64(),
            dev,
            Some(lhs.iter().map(|c| c.to_string()).collect::<Vec<String>>()),
            Some(rhs.to_strings()),
            consts.iter().map(|(k, v)| (k.to_string(), v.to_f64())).collect(),
            consts.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect(),
        )
    } else {
        let lhs: Vec<f64> = lhs_values(theorem, atoms, order)?;
        let (rhs, consts) = closed_form::<f64>(theorem, atoms, order)?;
        let dev = compare_f64(&lhs, rhs.coeffs(), tol);
        (lhs, rhs.to_f64(), dev, None, None, consts.iter().map(|(k, v)| (k.to_string(), *v)).collect(), BTreeMap::new())
    };
    let series_dev = compare_f64(&series.to_f64(), &rhs, tol);
    let mut constants: BTreeMap<String, f64> = constants;
    let mut constants_exact: BTreeMap<String, String> = constants_exact;
    if matches!(theorem, Theorem::Main2 | Theorem::Main3D) {
        // D² = 1 + ρ(GQ_1) at β = 1 and (1 − δ)² = 1 − ρ(GQ_1) at β = −1 is the constant term.
        constants.insert("1+beta*rho(GQ_1)".into(), lhs[0]);
        if let Some(l) = &lhs_exact {
            constants_exact.insert("1+beta*rho(GQ_1)".into(), l[0].clone());
        }
    }
    let pass = deviation.first_fail_index.is_none() && series_dev.first_fail_index.is_none();
    Ok(SeriesReport {
        theorem,
        atoms: atoms.clone(),
        beta: beta.to_string(),
        order,
        tol,
        lhs,
        rhs,
        lhs_exact,
        rhs_exact,
        max_rel_dev: deviation.max_rel_dev.max(series_dev.max_rel_dev),
        first_fail_index: deviation.first_fail_index,
        series_route_dev: series_dev.max_rel_dev,
        pass,
        exact,
        route: if exact { Route::Exact } else { Route::Coproduct },
        constants,
        constants_exact,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct MonotonicityReport {
    pub atoms: Atoms,
    pub pass: bool,
    pub values: BTreeMap<String, Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

/// At `β = −1`, `ρ(F_n)` is weakly decreasing in `[0, 1]` for `F = G, GP, GQ`.
pub fn monotonicity_check(atoms: &Atoms, max_n: u32) -> Result<MonotonicityReport, SpecializeError> {
    let one = <Rational as One>::one();
    if atoms.phi_letters().iter().any(|a| *a > one) {
        return Err(SpecializeError::ParameterConstraintViolated("phi letters must be at most 1 at β = −1".into()));
    }
    let ev = Evaluator::new(atoms.clone(), -one);
    let mut values = BTreeMap::new();
    let mut counterexample = None;
    for kind in [Family::G, Family::GP, Family::GQ] {
        let seq: Vec<f64> = (0..=max_n)
            .map(|n| ev.value::<f64>(kind, &Partition::row(n), &Partition::empty()))
            .collect::<Result<_, _>>()?;
        let slack = 1e-12;
        for n in 0..seq.len() {
            let in_range = seq[n] >= -slack && seq[n] <= 1.0 + slack;
            let decreasing = n == 0 || seq[n] <= seq[n - 1] + slack;
            if (!in_range || !decreasing) && counterexample.is_none() {
                counterexample = Some(format!("{kind}_{n}: value {} after {}", seq[n], if n > 0 { seq[n - 1] } else { 1.0 }));
            }
        }
        values.insert(kind.to_string(), seq);
    }
    Ok(MonotonicityReport { atoms: atoms.clone(), pass: counterexample.is_none(), values, counterexample })
}

/// `ρ(1 + βG_1)` is positive for every valid union, so `ρ(G_1)` has the right sign.
pub fn g1_value(atoms: &Atoms, beta: &Rational) -> Result<f64, SpecializeError> {
    let c: f64 = super::atoms::one_plus_beta_g1(atoms, beta)?;
    if beta.is_zero() {
        return Evaluator::new(atoms.clone(), beta.clone()).value(Family::G, &Partition::row(1), &Partition::empty());
    }
    Ok((c - 1.0) / beta.to_f64_lossy())
}

trait Lossy {
    fn to_f64_lossy(&self) -> f64;
}

impl Lossy for Rational {
    fn to_f64_lossy(&self) -> f64 {
        let sign = if self.is_negative() { -1.0 } else { 1.0 };
        sign * crate::symfunc::poly::rational_to_f64(&self.abs())
    }
}
