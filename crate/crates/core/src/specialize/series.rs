//! Truncated power series in `z` over exact rationals or doubles.

use std::fmt::Debug;

use num_traits::{One, Signed, Zero};

use super::SpecializeError;
use crate::symfunc::poly::{rational_to_f64, Rational};

/// Scalars a specialization can take values in.
pub trait Scalar: Clone + Debug + PartialEq + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn over(&self, other: &Self) -> Self;
    fn to_f64(&self) -> f64;
    fn is_zero_value(&self) -> bool;
    /// `e^x`, which is only available exactly at `x = 0`.
    fn exp_of(x: &Rational) -> Result<Self, SpecializeError>;
    /// `None` when the value cannot be represented exactly as a rational.
    fn to_exact(&self) -> Option<Rational>;
    /// `None` for exact scalars, which cannot hold a floating-point value.
    fn from_f64(x: f64) -> Option<Self>;
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_rational(r: &Rational) -> Self {
        rational_to_f64(r)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn over(&self, other: &Self) -> Self {
        self / other
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn is_zero_value(&self) -> bool {
        *self == 0.0
    }
    fn exp_of(x: &Rational) -> Result<Self, SpecializeError> {
        Ok(rational_to_f64(x).exp())
    }
    fn to_exact(&self) -> Option<Rational> {
        None
    }
    fn from_f64(x: f64) -> Option<Self> {
        Some(x)
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        <Rational as Zero>::zero()
    }
    fn one() -> Self {
        <Rational as One>::one()
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn over(&self, other: &Self) -> Self {
        self / other
    }
    fn to_f64(&self) -> f64 {
        rational_to_f64(self)
    }
    fn is_zero_value(&self) -> bool {
        Zero::is_zero(self)
    }
    fn exp_of(x: &Rational) -> Result<Self, SpecializeError> {
        if Zero::is_zero(x) {
            Ok(<Rational as One>::one())
        } else {
            Err(SpecializeError::NotExact(format!("e^{x} is irrational")))
        }
    }
    fn to_exact(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn from_f64(_: f64) -> Option<Self> {
        None
    }
}

/// `c_0 + c_1 z + ... + c_M z^M`; all arithmetic truncates at order `M`.
#[derive(Clone, Debug, PartialEq)]
pub struct Series<T> {
    coeffs: Vec<T>,
}

pub type ZSeries = Series<f64>;
pub type ExactSeries = Series<Rational>;

impl<T: Scalar> Series<T> {
    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a series has at least a constant term");
        Series { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> T) -> Self {
        Series { coeffs: (0..=order).map(f).collect() }
    }

    pub fn constant(c: T, order: usize) -> Self {
        Self::from_fn(order, |n| if n == 0 { c.clone() } else { T::zero() })
    }

    pub fn one(order: usize) -> Self {
        Self::constant(T::one(), order)
    }

    /// `c_0 + c_1 z`.
    pub fn linear(c0: T, c1: T, order: usize) -> Self {
        Self::from_fn(order, |n| match n {
            0 => c0.clone(),
            1 => c1.clone(),
            _ => T::zero(),
        })
    }

    /// `1/(1 − az)`.
    pub fn geometric(a: &T, order: usize) -> Self {
        let mut p = T::one();
        Self::from_fn(order, |_| {
            let c = p.clone();
            p = p.times(a);
            c
        })
    }

    /// `e^{γz}`, whose coefficients `γ^n/n!` are rational when `γ` is.
    pub fn exp(gamma: &T, order: usize) -> Self {
        let mut c = T::one();
        Self::from_fn(order, |n| {
            if n > 0 {
                c = c.times(gamma).over(&T::from_rational(&Rational::from_integer((n as i64).into())));
            }
            c.clone()
        })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> T {
        self.coeffs.get(n).cloned().unwrap_or_else(T::zero)
    }

    pub fn scale(&self, s: &T) -> Self {
        Series { coeffs: self.coeffs.iter().map(|c| c.times(s)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::from_fn(order, |n| self.coeffs[n].plus(&other.coeffs[n]))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::from_fn(order, |n| self.coeffs[n].minus(&other.coeffs[n]))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::from_fn(order, |n| {
            let mut s = T::zero();
            for k in 0..=n {
                if !self.coeffs[k].is_zero_value() && !other.coeffs[n - k].is_zero_value() {
                    s = s.plus(&self.coeffs[k].times(&other.coeffs[n - k]));
                }
            }
            s
        })
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(Scalar::to_f64).collect()
    }
}

impl ExactSeries {
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

/// Coefficient-wise comparison of two value lists.
#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct Deviation {
    pub max_rel_dev: f64,
    pub first_fail_index: Option<usize>,
}

/// Absolute differences below this count as equal regardless of scale.
pub const ABSOLUTE_FLOOR: f64 = 1e-12;

/// Relative deviation `|l − r| / max(|l|, |r|)`, with differences under
/// [`ABSOLUTE_FLOOR`] treated as zero.
pub fn compare_f64(lhs: &[f64], rhs: &[f64], tol: f64) -> Deviation {
    let mut max_rel_dev: f64 = 0.0;
    let mut first_fail_index = None;
    for (n, (l, r)) in lhs.iter().zip(rhs).enumerate() {
        let diff = (l - r).abs();
        let rel = if diff <= ABSOLUTE_FLOOR || diff.is_nan() && l == r {
            0.0
        } else {
            diff / l.abs().max(r.abs())
        };
        let rel = if rel.is_nan() { f64::INFINITY } else { rel };
        max_rel_dev = max_rel_dev.max(rel);
        if rel > tol && first_fail_index.is_none() {
            first_fail_index = Some(n);
        }
    }
    if lhs.len() != rhs.len() && first_fail_index.is_none() {
        first_fail_index = Some(lhs.len().min(rhs.len()));
        max_rel_dev = f64::INFINITY;
    }
    Deviation { max_rel_dev, first_fail_index }
}

/// Exact comparison; the deviation is still reported in floating point.
pub fn compare_exact(lhs: &[Rational], rhs: &[Rational]) -> Deviation {
    let mut max_rel_dev: f64 = 0.0;
    let mut first_fail_index = None;
    for (n, (l, r)) in lhs.iter().zip(rhs).enumerate() {
        if l != r {
            let scale = if l.abs() > r.abs() { l.abs() } else { r.abs() };
            max_rel_dev = max_rel_dev.max(rational_to_f64(&((l - r).abs() / scale)));
            first_fail_index.get_or_insert(n);
        }
    }
    if lhs.len() != rhs.len() && first_fail_index.is_none() {
        first_fail_index = Some(lhs.len().min(rhs.len()));
        max_rel_dev = f64::INFINITY;
    }
    Deviation { max_rel_dev, first_fail_index }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::poly::{int, parse_rational};

    #[test]
    fn geometric_times_linear() {
        let a = parse_rational("1/2").unwrap();
        let g = ExactSeries::geometric(&a, 5);
        let l = ExactSeries::linear(int(1), -a.clone(), 5);
        assert_eq!(g.mul(&l), ExactSeries::one(5));
    }

    #[test]
    fn exp_coefficients() {
        let e = ZSeries::exp(&0.5, 4);
        assert!((e.coeff(3) - 0.125 / 6.0).abs() < 1e-15);
        let e2 = e.mul(&e);
        let e1 = ZSeries::exp(&1.0, 4);
        assert!(compare_f64(&e2.to_f64(), &e1.to_f64(), 1e-14).first_fail_index.is_none());
    }

    #[test]
    fn comparisons() {
        let d = compare_f64(&[1.0, 2.0, 0.0], &[1.0, 2.0 + 1e-6, 1e-13], 1e-9);
        assert_eq!(d.first_fail_index, Some(1));
        assert!((d.max_rel_dev - 5e-7).abs() < 1e-9);
        let d = compare_exact(&[int(1), int(3)], &[int(1), int(4)]);
        assert_eq!(d.first_fail_index, Some(1));
        assert!((d.max_rel_dev - 0.25).abs() < 1e-12);
    }
}
