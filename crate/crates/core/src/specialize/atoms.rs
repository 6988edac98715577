//! The atoms `φ_a`, `ε_b`, `π_γ` and their images of the generating series
//! `H(z)`, `E(z)` and `E(z+β)`. A union of atoms acts on these series by
//! multiplying the per-atom images.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use super::series::{Scalar, Series};
use super::SpecializeError;
use crate::symfunc::poly::{parse_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    /// Evaluation at a single letter `x_1 = a`.
    Phi(Rational),
    /// The `ω`-twisted letter: `H(z) ↦ 1 + bz`.
    Eps(Rational),
    /// The exponential specialization `h_n ↦ γ^n/n!`.
    Pi(Rational),
}

impl Atom {
    pub fn parameter(&self) -> &Rational {
        match self {
            Atom::Phi(a) | Atom::Eps(a) | Atom::Pi(a) => a,
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Phi(a) => write!(f, "phi:{a}"),
            Atom::Eps(b) => write!(f, "eps:{b}"),
            Atom::Pi(g) => write!(f, "pi:{g}"),
        }
    }
}

impl Serialize for Atom {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl FromStr for Atom {
    type Err = SpecializeError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (kind, value) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| SpecializeError::Parse(format!("expected kind:value, got {s:?}")))?;
        let v = parse_rational(value).map_err(|e| SpecializeError::Parse(e.to_string()))?;
        if v.is_negative() {
            return Err(SpecializeError::ParameterConstraintViolated(format!("{s}: parameters must be nonnegative")));
        }
        match kind.trim().to_ascii_lowercase().as_str() {
            "phi" => Ok(Atom::Phi(v)),
            "eps" | "epsilon" => Ok(Atom::Eps(v)),
            "pi" => Ok(Atom::Pi(v)),
            other => Err(SpecializeError::Parse(format!("unknown atom kind {other:?}"))),
        }
    }
}

/// An ordered union of atoms.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Atoms(pub Vec<Atom>);

impl Atoms {
    pub fn new(atoms: Vec<Atom>) -> Self {
        Atoms(atoms)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Atom> {
        self.0.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn phi_letters(&self) -> Vec<Rational> {
        self.iter().filter_map(|a| if let Atom::Phi(x) = a { Some(x.clone()) } else { None }).collect()
    }

    pub fn eps_letters(&self) -> Vec<Rational> {
        self.iter().filter_map(|a| if let Atom::Eps(x) = a { Some(x.clone()) } else { None }).collect()
    }

    /// `π_{γ_1} ⊔ π_{γ_2} = π_{γ_1+γ_2}`, so the exponential part is one number.
    pub fn gamma(&self) -> Rational {
        self.iter()
            .filter_map(|a| if let Atom::Pi(g) = a { Some(g.clone()) } else { None })
            .fold(<Rational as Zero>::zero(), |s, g| s + g)
    }

    pub fn has_pi(&self) -> bool {
        !self.gamma().is_zero()
    }
}

impl FromStr for Atoms {
    type Err = SpecializeError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim().is_empty() {
            return Ok(Atoms::default());
        }
        s.split(',').map(str::parse).collect::<Result<Vec<_>, _>>().map(Atoms)
    }
}

impl fmt::Display for Atoms {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(Atom::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    H,
    E,
    EShifted,
}

fn r<T: Scalar>(x: &Rational) -> T {
    T::from_rational(x)
}

pub fn atom_h_series<T: Scalar>(atom: &Atom, order: usize) -> Series<T> {
    match atom {
        Atom::Phi(a) => Series::geometric(&r(a), order),
        Atom::Eps(b) => Series::linear(T::one(), r(b), order),
        Atom::Pi(g) => Series::exp(&r(g), order),
    }
}

pub fn atom_e_series<T: Scalar>(atom: &Atom, order: usize) -> Series<T> {
    match atom {
        Atom::Phi(a) => Series::linear(T::one(), r(a), order),
        Atom::Eps(b) => Series::geometric(&r(b), order),
        Atom::Pi(g) => Series::exp(&r(g), order),
    }
}

/// The image of `E(z+β)`.
pub fn atom_e_shifted_series<T: Scalar>(atom: &Atom, beta: &Rational, order: usize) -> Result<Series<T>, SpecializeError> {
    Ok(match atom {
        Atom::Phi(a) => Series::linear(r(&(Rational::from_integer(1.into()) + a * beta)), r(a), order),
        Atom::Eps(b) => {
            let base = Rational::from_integer(1.into()) - b * beta;
            if base.is_zero() {
                return Err(SpecializeError::PoleAtShift { b: b.to_string(), beta: beta.to_string() });
            }
            Series::geometric(&r(&(b / &base)), order).scale(&r(&(Rational::from_integer(1.into()) / base)))
        }
        Atom::Pi(g) => Series::exp(&r(g), order).scale(&T::exp_of(&(g * beta))?),
    })
}

pub fn union_series<T: Scalar>(atoms: &Atoms, which: Which, beta: &Rational, order: usize) -> Result<Series<T>, SpecializeError> {
    let mut out = Series::one(order);
    for atom in atoms.iter() {
        let s = match which {
            Which::H => atom_h_series(atom, order),
            Which::E => atom_e_series(atom, order),
            Which::EShifted => atom_e_shifted_series(atom, beta, order)?,
        };
        out = out.mul(&s);
    }
    Ok(out)
}

/// `ρ(1 + βG_1)`: `1 + aβ` for `φ_a`, `1/(1 − bβ)` for `ε_b`, `e^{γβ}` for `π_γ`.
pub fn one_plus_beta_g1<T: Scalar>(atoms: &Atoms, beta: &Rational) -> Result<T, SpecializeError> {
    let one = Rational::from_integer(1.into());
    let mut out = T::one();
    for atom in atoms.iter() {
        let factor = match atom {
            Atom::Phi(a) => r(&(&one + a * beta)),
            Atom::Eps(b) => {
                let base = &one - b * beta;
                if !base.is_positive() {
                    return Err(SpecializeError::DivergentG1 { b: b.to_string(), beta: beta.to_string() });
                }
                r(&(&one / base))
            }
            Atom::Pi(g) => T::exp_of(&(g * beta))?,
        };
        out = out.times(&factor);
    }
    Ok(out)
}

/// `Σ_n ρ(G_n + βG_{n+1}) z^n = ρ(1 + βG_1) ρ(H(z))`.
pub fn g_generating_series<T: Scalar>(atoms: &Atoms, beta: &Rational, order: usize) -> Result<Series<T>, SpecializeError> {
    let c: T = one_plus_beta_g1(atoms, beta)?;
    Ok(union_series::<T>(atoms, Which::H, beta, order)?.scale(&c))
}

/// `Σ_n ρ(GQ_n + βGQ_{n+1}) z^n = ρ(1 + βG_1) ρ(E(z+β)) ρ(H(z))`.
pub fn gq_generating_series<T: Scalar>(atoms: &Atoms, beta: &Rational, order: usize) -> Result<Series<T>, SpecializeError> {
    let c: T = one_plus_beta_g1(atoms, beta)?;
    let e = union_series::<T>(atoms, Which::EShifted, beta, order)?;
    let h = union_series::<T>(atoms, Which::H, beta, order)?;
    Ok(e.mul(&h).scale(&c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specialize::series::{compare_f64, ExactSeries, ZSeries};
    use crate::symfunc::poly::int;

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn parse_atoms() {
        let a: Atoms = "phi:0.5,phi:1/3,pi:0.25".parse().unwrap();
        assert_eq!(a.0, vec![Atom::Phi(q("1/2")), Atom::Phi(q("1/3")), Atom::Pi(q("1/4"))]);
        assert_eq!(a.to_string(), "phi:1/2,phi:1/3,pi:1/4");
        assert!("phi:-1".parse::<Atoms>().is_err());
        assert!("chi:1".parse::<Atoms>().is_err());
        assert!("".parse::<Atoms>().unwrap().is_empty());
    }

    #[test]
    fn pi_h_series_is_exponential() {
        let s: ExactSeries = atom_h_series(&Atom::Pi(q("1/2")), 4);
        assert_eq!(s.coeff(3), q("1/48"));
    }

    #[test]
    fn phi_e_at_one() {
        let s: ExactSeries = atom_e_series(&Atom::Phi(q("1/3")), 3);
        assert_eq!(s.coeff(0) + s.coeff(1), q("4/3"));
    }

    #[test]
    fn eps_shifted_at_minus_one() {
        // 1/((1+b) − bz) checked against composing 1/(1 − bz) with z ↦ z − 1.
        let b = q("1/3");
        let s: ExactSeries = atom_e_shifted_series(&Atom::Eps(b.clone()), &int(-1), 5).unwrap();
        let expected = ExactSeries::geometric(&(&b / (int(1) + &b)), 5).scale(&(int(1) / (int(1) + &b)));
        assert_eq!(s, expected);
        assert!(matches!(
            atom_e_shifted_series::<Rational>(&Atom::Eps(int(1)), &int(1), 3),
            Err(SpecializeError::PoleAtShift { .. })
        ));
    }

    #[test]
    fn unions_multiply() {
        let atoms: Atoms = "phi:1/2,pi:0.25".parse().unwrap();
        let s: ZSeries = union_series(&atoms, Which::H, &int(1), 8).unwrap();
        let direct = ZSeries::from_fn(8, |n| (0..=n).map(|k| 0.5f64.powi(k as i32) * 0.25f64.powi((n - k) as i32) / (1..=(n - k)).product::<usize>() as f64).sum());
        assert!(compare_f64(&s.to_f64(), &direct.to_f64(), 1e-14).first_fail_index.is_none());
        let empty: ExactSeries = union_series(&Atoms::default(), Which::E, &int(1), 3).unwrap();
        assert_eq!(empty, ExactSeries::one(3));
    }

    #[test]
    fn g1_values() {
        let atoms: Atoms = "phi:1/2,phi:1/3".parse().unwrap();
        assert_eq!(one_plus_beta_g1::<Rational>(&atoms, &int(1)).unwrap(), int(2));
        let bad: Atoms = "eps:1".parse().unwrap();
        assert!(matches!(one_plus_beta_g1::<Rational>(&bad, &int(1)), Err(SpecializeError::DivergentG1 { .. })));
        let gq: ExactSeries = gq_generating_series(&Atoms::default(), &int(1), 3).unwrap();
        assert_eq!(gq, ExactSeries::one(3));
    }
}
