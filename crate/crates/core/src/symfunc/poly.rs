//! Sparse polynomials in `β, x_1, ..., x_N` with exact coefficients.
//!
//! A monomial `β^k x_1^{e_1} ⋯ x_N^{e_N}` is packed into a `u128` with eight
//! bits per exponent: byte 0 holds `k`, byte `i` holds `e_i`. This caps the
//! variable count at [`MAX_VARS`] and every exponent at [`MAX_EXPONENT`], which
//! is far beyond anything the tableau generating functions reach at desk scale.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::SymFuncError;

pub type Rational = BigRational;

pub const MAX_VARS: usize = 15;
pub const MAX_EXPONENT: u32 = 127;

const HIGH_BITS: u128 = 0x8080_8080_8080_8080_8080_8080_8080_8080;

/// Parses `"3"`, `"-2/3"`, `"0.25"` or `"1e-3"`-free decimals into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational, SymFuncError> {
    let t = s.trim();
    let err = || SymFuncError::Parse(format!("not a rational number: {s:?}"));
    if let Some((p, q)) = t.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| err())?;
        let q: BigInt = q.trim().parse().map_err(|_| err())?;
        if q.is_zero() {
            return Err(err());
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((int, frac)) = t.split_once('.') {
        let negative = int.trim_start().starts_with('-');
        let int_digits = int.trim_start_matches(['-', '+']);
        if !frac.chars().all(|c| c.is_ascii_digit()) || frac.is_empty() && int_digits.is_empty() {
            return Err(err());
        }
        let whole: BigInt = if int_digits.is_empty() { BigInt::zero() } else { int_digits.parse().map_err(|_| err())? };
        let frac_val: BigInt = if frac.is_empty() { BigInt::zero() } else { frac.parse().map_err(|_| err())? };
        let denom = num_traits::pow(BigInt::from(10), frac.len());
        let value = Rational::new(whole * &denom + frac_val, denom);
        return Ok(if negative { -value } else { value });
    }
    let p: BigInt = t.parse().map_err(|_| err())?;
    Ok(Rational::from_integer(p))
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Coefficient ring for [`Poly`].
pub trait Coeff: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign(&mut self, other: &Self);
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self / other` when the quotient lies in the ring.
    fn div_exact(&self, other: &Self) -> Option<Self>;
    fn to_rational(&self) -> Rational;
    fn to_f64(&self) -> f64;
}

impl Coeff for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add_assign(&mut self, other: &Self) {
        *self = self.checked_add(*other).expect("integer coefficient overflow");
    }
    fn mul(&self, other: &Self) -> Self {
        self.checked_mul(*other).expect("integer coefficient overflow")
    }
    fn neg(&self) -> Self {
        -*self
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        if *other != 0 && self % other == 0 {
            Some(self / other)
        } else {
            None
        }
    }
    fn to_rational(&self) -> Rational {
        Rational::from_integer(BigInt::from(*self))
    }
    fn to_f64(&self) -> f64 {
        *self as f64
    }
}

impl Coeff for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        int(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            None
        } else {
            Some(self / other)
        }
    }
    fn to_rational(&self) -> Rational {
        self.clone()
    }
    fn to_f64(&self) -> f64 {
        rational_to_f64(self)
    }
}

/// A packed monomial `β^k x^e`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Debug)]
pub struct Monomial(u128);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    /// `x_k` with `k` starting at 1.
    pub fn var(k: usize) -> Monomial {
        assert!((1..=MAX_VARS).contains(&k), "variable index {k} out of range");
        Monomial(1u128 << (8 * k))
    }

    pub fn beta(e: u32) -> Monomial {
        assert!(e <= MAX_EXPONENT, "β exponent {e} too large");
        Monomial(e as u128)
    }

    pub fn from_exponents(beta: u32, x: &[u32]) -> Monomial {
        assert!(x.len() <= MAX_VARS, "too many variables");
        let mut packed = Monomial::beta(beta).0;
        for (i, &e) in x.iter().enumerate() {
            assert!(e <= MAX_EXPONENT, "exponent {e} too large");
            packed |= (e as u128) << (8 * (i + 1));
        }
        Monomial(packed)
    }

    pub fn exponent(self, field: usize) -> u32 {
        ((self.0 >> (8 * field)) & 0xFF) as u32
    }

    pub fn beta_degree(self) -> u32 {
        self.exponent(0)
    }

    pub fn x_degree(self) -> u32 {
        (self.0 >> 8).to_le_bytes().iter().map(|&b| b as u32).sum()
    }

    pub fn x_exponents(self, nvars: usize) -> Vec<u32> {
        (1..=nvars).map(|k| self.exponent(k)).collect()
    }

    /// The same monomial with the `β` exponent removed.
    pub fn x_part(self) -> Monomial {
        Monomial(self.0 & !0xFF)
    }

    pub fn with_beta(self, e: u32) -> Monomial {
        Monomial(self.x_part().0 | Monomial::beta(e).0)
    }

    pub fn times(self, other: Monomial) -> Monomial {
        let sum = self.0 + other.0;
        assert!(sum & HIGH_BITS == 0, "monomial exponent overflow");
        Monomial(sum)
    }

    /// `self / other` if `other` divides `self`.
    pub fn divide(self, other: Monomial) -> Option<Monomial> {
        (0..16)
            .all(|f| self.exponent(f) >= other.exponent(f))
            .then(|| Monomial(self.0 - other.0))
    }

    fn set_exponent(self, field: usize, e: u32) -> Monomial {
        let mask = !(0xFFu128 << (8 * field));
        Monomial((self.0 & mask) | ((e as u128) << (8 * field)))
    }

    pub fn swap_vars(self, i: usize, j: usize) -> Monomial {
        let (ei, ej) = (self.exponent(i), self.exponent(j));
        self.set_exponent(i, ej).set_exponent(j, ei)
    }

    /// Move `x_k` to `x_{k+offset}`; `β` is untouched.
    pub fn shift_vars(self, offset: usize) -> Monomial {
        let beta = self.0 & 0xFF;
        let x = self.x_part().0 << (8 * offset);
        Monomial(x | beta)
    }

    /// Highest variable index with a nonzero exponent.
    pub fn max_var(self) -> usize {
        (1..=MAX_VARS).rev().find(|&k| self.exponent(k) > 0).unwrap_or(0)
    }
}

/// A polynomial in `β` and `x_1..x_N` with an optional cap on total `x`-degree.
#[derive(Clone, Debug)]
pub struct Poly<C: Coeff> {
    nvars: usize,
    cap: Option<u32>,
    terms: HashMap<Monomial, C>,
}

pub type XPolynomial = Poly<Rational>;
pub type IntPoly = Poly<i128>;

impl<C: Coeff> PartialEq for Poly<C> {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.terms == other.terms
    }
}

impl<C: Coeff> Poly<C> {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables are supported");
        Poly { nvars, cap: None, terms: HashMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(nvars, Monomial::ONE, C::one())
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::monomial(nvars, Monomial::ONE, c)
    }

    pub fn monomial(nvars: usize, m: Monomial, c: C) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(m, c);
        p
    }

    /// `x_k`, or zero when `k > nvars`.
    pub fn var(nvars: usize, k: usize) -> Self {
        if k > nvars {
            return Self::zero(nvars);
        }
        Self::monomial(nvars, Monomial::var(k), C::one())
    }

    pub fn beta(nvars: usize) -> Self {
        Self::monomial(nvars, Monomial::beta(1), C::one())
    }

    pub fn with_cap(mut self, cap: Option<u32>) -> Self {
        if let Some(c) = cap {
            self.terms.retain(|m, _| m.x_degree() <= c);
        }
        self.cap = cap;
        self
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn cap(&self) -> Option<u32> {
        self.cap
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: Monomial) -> C {
        self.terms.get(&m).cloned().unwrap_or_else(C::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    /// Terms in increasing packed-monomial order.
    pub fn sorted_terms(&self) -> Vec<(Monomial, C)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (*m, c.clone())).collect();
        v.sort_by_key(|(m, _)| *m);
        v
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() || self.cap.is_some_and(|cap| m.x_degree() > cap) {
            return;
        }
        debug_assert!(m.max_var() <= self.nvars, "monomial uses a variable beyond x_{}", self.nvars);
        match self.terms.entry(m) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                e.get_mut().add_assign(&c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    fn check_vars(&self, other: &Self) -> Result<(), SymFuncError> {
        if self.nvars != other.nvars {
            return Err(SymFuncError::VariableMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    fn joint_cap(&self, other: &Self) -> Option<u32> {
        match (self.cap, other.cap) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, SymFuncError> {
        self.check_vars(other)?;
        let mut out = self.clone();
        out.cap = self.joint_cap(other);
        if out.cap != self.cap {
            let cap = out.cap;
            out = out.with_cap(cap);
        }
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, SymFuncError> {
        self.try_add(&other.neg_poly())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, SymFuncError> {
        self.check_vars(other)?;
        let cap = self.joint_cap(other);
        let mut out = Self::zero(self.nvars);
        out.cap = cap;
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        for (m1, c1) in &small.terms {
            for (m2, c2) in &large.terms {
                if let Some(cap) = cap {
                    if m1.x_degree() + m2.x_degree() > cap {
                        continue;
                    }
                }
                out.add_term(m1.times(*m2), c1.mul(c2));
            }
        }
        Ok(out)
    }

    pub fn neg_poly(&self) -> Self {
        self.map_coeffs(|c| c.neg())
    }

    pub fn scale(&self, s: &C) -> Self {
        if s.is_zero() {
            return Self::zero(self.nvars).with_cap(self.cap);
        }
        self.map_coeffs(|c| c.mul(s))
    }

    pub fn mul_monomial(&self, m: Monomial) -> Self {
        let mut out = Self::zero(self.nvars);
        out.cap = self.cap;
        for (k, c) in &self.terms {
            out.add_term(k.times(m), c.clone());
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.nvars).with_cap(self.cap);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        let mut out = Poly::<D>::zero(self.nvars);
        out.cap = self.cap;
        for (m, c) in &self.terms {
            out.add_term(*m, f(c));
        }
        out
    }

    pub fn to_rational(&self) -> XPolynomial {
        self.map_coeffs(|c| c.to_rational())
    }

    /// Set `β` to a number, leaving a polynomial in `x` only.
    pub fn substitute_beta(&self, b: &Rational) -> XPolynomial {
        let mut out = XPolynomial::zero(self.nvars);
        out.cap = self.cap;
        let mut powers: Vec<Rational> = vec![<Rational as One>::one()];
        for (m, c) in &self.terms {
            let k = m.beta_degree() as usize;
            while powers.len() <= k {
                let next = powers.last().unwrap() * b;
                powers.push(next);
            }
            out.add_term(m.x_part(), c.to_rational() * &powers[k]);
        }
        out
    }

    /// Integer version of [`Poly::substitute_beta`].
    pub fn substitute_beta_int(&self, b: i128) -> Self {
        let mut out = Self::zero(self.nvars);
        out.cap = self.cap;
        for (m, c) in &self.terms {
            let mut f = C::one();
            for _ in 0..m.beta_degree() {
                f = f.mul(&C::from_i64(b as i64));
            }
            out.add_term(m.x_part(), c.mul(&f));
        }
        out
    }

    /// Exact value at `x_i = alphabet[i]` (missing letters are zero) and the given `β`.
    pub fn eval(&self, alphabet: &[Rational], beta: &Rational) -> Rational {
        let mut cache: HashMap<(usize, u32), Rational> = HashMap::new();
        let mut power = |field: usize, e: u32, base: &Rational| -> Rational {
            cache
                .entry((field, e))
                .or_insert_with(|| num_traits::pow(base.clone(), e as usize))
                .clone()
        };
        let zero = <Rational as Zero>::zero();
        let mut total = <Rational as Zero>::zero();
        for (m, c) in &self.terms {
            let mut term = c.to_rational();
            let kb = m.beta_degree();
            if kb > 0 {
                term *= power(0, kb, beta);
            }
            for k in 1..=self.nvars {
                let e = m.exponent(k);
                if e > 0 {
                    let base = alphabet.get(k - 1).unwrap_or(&zero);
                    if Zero::is_zero(base) {
                        term = <Rational as Zero>::zero();
                        break;
                    }
                    term *= power(k, e, base);
                }
            }
            total += term;
        }
        total
    }

    pub fn eval_f64(&self, alphabet: &[f64], beta: f64) -> f64 {
        let mut total = 0.0;
        for (m, c) in &self.terms {
            let mut term = c.to_f64() * beta.powi(m.beta_degree() as i32);
            for k in 1..=self.nvars {
                let e = m.exponent(k);
                if e > 0 {
                    term *= alphabet.get(k - 1).copied().unwrap_or(0.0).powi(e as i32);
                }
            }
            total += term;
        }
        total
    }

    /// Set `x_k = 0` for `k > n` and keep `n` variables.
    pub fn restrict(&self, n: usize) -> Self {
        let mut out = Self::zero(n);
        out.cap = self.cap;
        for (m, c) in &self.terms {
            if m.max_var() <= n {
                out.add_term(*m, c.clone());
            }
        }
        out
    }

    /// Reinterpret in `n ≥ nvars` variables.
    pub fn extend(&self, n: usize) -> Self {
        assert!(n >= self.nvars && n <= MAX_VARS);
        let mut out = self.clone();
        out.nvars = n;
        out
    }

    /// Rename `x_k ↦ x_{k+offset}` inside a ring of `total` variables.
    pub fn shift_vars(&self, offset: usize, total: usize) -> Self {
        assert!(self.nvars + offset <= total && total <= MAX_VARS);
        let mut out = Self::zero(total);
        out.cap = self.cap;
        for (m, c) in &self.terms {
            out.add_term(m.shift_vars(offset), c.clone());
        }
        out
    }

    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        out.cap = self.cap;
        for (m, c) in &self.terms {
            out.add_term(m.swap_vars(i, j), c.clone());
        }
        out
    }

    /// Invariance under every adjacent transposition `x_i ↔ x_{i+1}`.
    pub fn is_symmetric(&self) -> bool {
        (1..self.nvars).all(|i| {
            self.terms
                .iter()
                .all(|(m, c)| self.terms.get(&m.swap_vars(i, i + 1)) == Some(c))
        })
    }

    pub fn truncate(&self, cap: u32) -> Self {
        let cap = self.cap.map_or(cap, |c| c.min(cap));
        self.clone().with_cap(Some(cap))
    }

    pub fn min_x_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.x_degree()).min()
    }

    pub fn max_x_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.x_degree()).max()
    }

    pub fn max_beta_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.beta_degree()).max()
    }

    /// Divide every term by `β^k`; panics if some term has smaller `β`-degree.
    pub fn lower_beta(&self, k: u32) -> Self {
        let mut out = Self::zero(self.nvars);
        out.cap = self.cap;
        for (m, c) in &self.terms {
            let b = m.beta_degree();
            assert!(b >= k, "term has β-degree {b} < {k}");
            out.add_term(m.with_beta(b - k), c.clone());
        }
        out
    }

    /// Sum of all coefficients at `β = 1`, `x = 1`.
    pub fn coefficient_sum(&self) -> C {
        let mut s = C::zero();
        for c in self.terms.values() {
            s.add_assign(c);
        }
        s
    }

    /// Coefficients grouped by `x`-exponent vector, as polynomials in `β`.
    pub fn by_x_monomial(&self) -> BTreeMap<Vec<u32>, BetaPolynomial> {
        let mut out: BTreeMap<Vec<u32>, BetaPolynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.x_exponents(self.nvars))
                .or_default()
                .add_term(m.beta_degree(), c.to_rational());
        }
        out.retain(|_, b| !b.is_zero());
        out
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            vars: self.nvars,
            cap: self.cap,
            terms: self
                .by_x_monomial()
                .into_iter()
                .map(|(x, c)| TermJson { x, c: c.to_strings() })
                .collect(),
        }
    }
}

impl IntPoly {
    /// Exact conversion when every coefficient is an integer fitting in `i128`.
    pub fn from_rational(p: &XPolynomial) -> Option<IntPoly> {
        let mut out = IntPoly::zero(p.nvars);
        out.cap = p.cap;
        for (m, c) in &p.terms {
            if !c.is_integer() {
                return None;
            }
            out.add_term(*m, c.to_integer().to_i128()?);
        }
        Some(out)
    }
}

impl XPolynomial {
    pub fn from_json(j: &PolyJson) -> Result<Self, SymFuncError> {
        if j.vars > MAX_VARS {
            return Err(SymFuncError::TooManyVariables(j.vars));
        }
        let mut p = XPolynomial::zero(j.vars).with_cap(j.cap);
        for t in &j.terms {
            if t.x.len() > j.vars {
                return Err(SymFuncError::Parse(format!(
                    "exponent vector {:?} is longer than vars = {}",
                    t.x, j.vars
                )));
            }
            if t.x.iter().any(|&e| e > MAX_EXPONENT) {
                return Err(SymFuncError::Parse(format!("exponent too large in {:?}", t.x)));
            }
            for (k, c) in t.c.iter().enumerate() {
                let c = parse_rational(c)?;
                p.add_term(Monomial::from_exponents(k as u32, &t.x), c);
            }
        }
        Ok(p)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl<C: Coeff> $tr<&Poly<C>> for &Poly<C> {
            type Output = Poly<C>;
            /// Panics when the variable counts differ; use the `try_` form to recover.
            fn $method(self, rhs: &Poly<C>) -> Poly<C> {
                self.$inner(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        self.neg_poly()
    }
}

impl<C: Coeff> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let groups = self.by_x_monomial();
        if groups.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (x, c) in groups {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono: Vec<String> = x
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, e) })
                .collect();
            let is_one = c == BetaPolynomial::constant(<Rational as One>::one());
            match (mono.is_empty(), is_one) {
                (true, _) => write!(f, "{c}")?,
                (false, true) => write!(f, "{}", mono.join("*"))?,
                (false, false) => write!(f, "({c})*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

/// A polynomial in `β` with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct BetaPolynomial(BTreeMap<u32, Rational>);

impl BetaPolynomial {
    pub fn zero() -> Self {
        BetaPolynomial(BTreeMap::new())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(0, c);
        p
    }

    pub fn beta_power(k: u32, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(k, c);
        p
    }

    pub fn add_term(&mut self, k: u32, c: Rational) {
        if Zero::is_zero(&c) {
            return;
        }
        let e = self.0.entry(k).or_insert_with(<Rational as Zero>::zero);
        *e += c;
        if Zero::is_zero(e) {
            self.0.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, k: u32) -> Rational {
        self.0.get(&k).cloned().unwrap_or_else(<Rational as Zero>::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.0.iter().map(|(k, c)| (*k, c))
    }

    pub fn degree(&self) -> Option<u32> {
        self.0.keys().next_back().copied()
    }

    pub fn eval(&self, beta: &Rational) -> Rational {
        self.0
            .iter()
            .map(|(k, c)| c * num_traits::pow(beta.clone(), *k as usize))
            .fold(<Rational as Zero>::zero(), |a, b| a + b)
    }

    pub fn eval_f64(&self, beta: f64) -> f64 {
        self.0.iter().map(|(k, c)| rational_to_f64(c) * beta.powi(*k as i32)).sum()
    }

    /// Every coefficient is `≥ 0`.
    pub fn is_nonnegative(&self) -> bool {
        self.0.values().all(|c| !c.is_negative())
    }

    /// As a polynomial in `β` only, inside a ring of `nvars` variables.
    pub fn to_poly(&self, nvars: usize) -> XPolynomial {
        let mut p = XPolynomial::zero(nvars);
        for (k, c) in &self.0 {
            p.add_term(Monomial::beta(*k), c.clone());
        }
        p
    }

    /// Dense coefficient strings, index = power of `β`.
    pub fn to_strings(&self) -> Vec<String> {
        let Some(d) = self.degree() else { return vec!["0".into()] };
        (0..=d).map(|k| self.coeff(k).to_string()).collect()
    }

    pub fn from_strings(v: &[String]) -> Result<Self, SymFuncError> {
        let mut p = Self::zero();
        for (k, s) in v.iter().enumerate() {
            p.add_term(k as u32, parse_rational(s)?);
        }
        Ok(p)
    }
}

impl Add for &BetaPolynomial {
    type Output = BetaPolynomial;
    fn add(self, rhs: &BetaPolynomial) -> BetaPolynomial {
        let mut out = self.clone();
        for (k, c) in &rhs.0 {
            out.add_term(*k, c.clone());
        }
        out
    }
}

impl Mul for &BetaPolynomial {
    type Output = BetaPolynomial;
    fn mul(self, rhs: &BetaPolynomial) -> BetaPolynomial {
        let mut out = BetaPolynomial::zero();
        for (k1, c1) in &self.0 {
            for (k2, c2) in &rhs.0 {
                out.add_term(k1 + k2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BetaPolynomial {
    type Output = BetaPolynomial;
    fn neg(self) -> BetaPolynomial {
        BetaPolynomial(self.0.iter().map(|(k, c)| (*k, -c)).collect())
    }
}

impl fmt::Display for BetaPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.0.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let unit = abs.is_one();
            match (k, unit) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "β")?,
                (1, false) => write!(f, "{abs}β")?,
                (_, true) => write!(f, "β^{k}")?,
                (_, false) => write!(f, "{abs}β^{k}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for BetaPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for BetaPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        BetaPolynomial::from_strings(&v).map_err(serde::de::Error::custom)
    }
}

/// JSON form of a polynomial: `{"vars": N, "terms": [{"x": [..], "c": ["c0", "c1", ..]}]}`
/// where `c[k]` is the coefficient of `β^k`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cap: Option<u32>,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub x: Vec<u32>,
    pub c: Vec<String>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn parses_rationals() {
        assert_eq!(q("1/3"), Rational::new(1.into(), 3.into()));
        assert_eq!(q("0.25"), Rational::new(1.into(), 4.into()));
        assert_eq!(q("-0.5"), Rational::new((-1).into(), 2.into()));
        assert_eq!(q("-2"), int(-2));
        assert_eq!(q(" 6/4 "), Rational::new(3.into(), 2.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn monomial_packing() {
        let m = Monomial::from_exponents(2, &[1, 0, 3]);
        assert_eq!(m.beta_degree(), 2);
        assert_eq!(m.x_degree(), 4);
        assert_eq!(m.x_exponents(3), vec![1, 0, 3]);
        assert_eq!(m.max_var(), 3);
        assert_eq!(m.swap_vars(1, 3).x_exponents(3), vec![3, 0, 1]);
        assert_eq!(m.shift_vars(1).x_exponents(4), vec![0, 1, 0, 3]);
        assert_eq!(m.shift_vars(1).beta_degree(), 2);
        let n = Monomial::from_exponents(1, &[0, 2]);
        assert_eq!(m.times(n), Monomial::from_exponents(3, &[1, 2, 3]));
        assert_eq!(m.times(n).divide(n), Some(m));
        assert_eq!(n.divide(m), None);
    }

    #[test]
    fn multiply_by_one_and_geometric_identity() {
        let x1 = IntPoly::var(2, 1);
        let f = &(&x1 + &IntPoly::beta(2)) * &IntPoly::var(2, 2);
        assert_eq!(&f * &IntPoly::one(2), f);
        let capped = (&IntPoly::one(1) - &IntPoly::var(1, 1)).with_cap(Some(4));
        let mut inv = IntPoly::zero(1).with_cap(Some(4));
        for k in 0..=4 {
            inv.add_term(Monomial::from_exponents(0, &[k]), 1);
        }
        assert_eq!(&capped * &inv, IntPoly::one(1).with_cap(Some(4)));
    }

    #[test]
    fn mismatched_variables_is_an_error() {
        let a = IntPoly::var(2, 1);
        let b = IntPoly::var(3, 1);
        assert!(matches!(a.try_mul(&b), Err(SymFuncError::VariableMismatch(2, 3))));
    }

    #[test]
    fn evaluation_and_beta_substitution() {
        let f = (&(&IntPoly::constant(1, 2) + &(&IntPoly::beta(1) * &IntPoly::var(1, 1))) * &IntPoly::var(1, 1))
            .to_rational();
        assert_eq!(f.eval(&[int(1)], &int(1)), int(3));
        assert_eq!(f.substitute_beta(&int(-1)).eval(&[q("1/2")], &int(7)), q("3/4"));
        assert_eq!(f.eval(&[], &int(1)), int(0));
    }

    #[test]
    fn json_round_trip() {
        let f = (&IntPoly::beta(2) * &IntPoly::var(2, 2)).to_rational();
        let g = &f + &XPolynomial::constant(2, q("1/2"));
        let j = g.to_json();
        assert_eq!(XPolynomial::from_json(&j).unwrap(), g);
        assert_eq!(j.terms[1].c, vec!["0".to_string(), "1".to_string()]);
    }

    #[test]
    fn display_forms() {
        let b = BetaPolynomial::from_strings(&["2".into(), "-1".into(), "3".into()]).unwrap();
        assert_eq!(b.to_string(), "2 - β + 3β^2");
        assert_eq!(BetaPolynomial::zero().to_string(), "0");
    }

    fn small_poly() -> impl Strategy<Value = IntPoly> {
        proptest::collection::vec(((0u32..3, 0u32..3, 0u32..3), -5i128..6), 0..6).prop_map(|terms| {
            let mut p = IntPoly::zero(2);
            for ((b, e1, e2), c) in terms {
                p.add_term(Monomial::from_exponents(b, &[e1, e2]), c);
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
        }

        #[test]
        fn evaluation_is_a_ring_map(a in small_poly(), b in small_poly(), x in -3i64..4, y in -3i64..4, beta in -2i64..3) {
            let (ar, br) = (a.to_rational(), b.to_rational());
            let pt = [int(x), int(y)];
            let bt = int(beta);
            prop_assert_eq!((&ar * &br).eval(&pt, &bt), ar.eval(&pt, &bt) * br.eval(&pt, &bt));
        }
    }
}
