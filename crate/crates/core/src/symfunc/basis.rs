//! Expansion of symmetric polynomials in the `G`, `GP`, `GQ` and Schur bases by
//! triangular elimination.
//!
//! Each basis element `F_ν` has lowest-degree part of degree `|ν|` whose
//! lexicographically largest monomial is `x^ν` with coefficient 1 (`2^{ℓ(ν)}`
//! for `GQ`). Repeatedly taking the lowest degree present, then its largest
//! monomial, and subtracting the matching multiple of `F_ν` peels off the
//! expansion one partition at a time.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::families::{family_poly, schur_poly};
use super::poly::{BetaPolynomial, Coeff, IntPoly, Monomial, Poly, Rational, XPolynomial};
use super::SymFuncError;
use crate::partitions::Partition;
use crate::tableaux::{Family, Mode};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    G,
    GP,
    GQ,
    Schur,
}

impl Basis {
    pub fn requires_strict(self) -> bool {
        matches!(self, Basis::GP | Basis::GQ)
    }

    fn family(self) -> Option<Family> {
        match self {
            Basis::G => Some(Family::G),
            Basis::GP => Some(Family::GP),
            Basis::GQ => Some(Family::GQ),
            Basis::Schur => None,
        }
    }

    /// Coefficient of `x^ν` in the basis element `F_ν`.
    pub fn leading_coefficient(self, nu: &Partition) -> i128 {
        match self {
            Basis::GQ => 1i128 << nu.len(),
            _ => 1,
        }
    }

    /// `F_ν` in `n` variables with symbolic `β`, truncated at `cap`.
    pub fn element(self, nu: &Partition, n: usize, cap: Option<u32>) -> Result<IntPoly, SymFuncError> {
        match self.family() {
            Some(kind) => family_poly(kind, Mode::Quasi, nu, &Partition::empty(), n, cap),
            None => Ok(schur_poly(nu, n).with_cap(cap)),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::G => "G",
            Basis::GP => "GP",
            Basis::GQ => "GQ",
            Basis::Schur => "Schur",
        })
    }
}

impl FromStr for Basis {
    type Err = SymFuncError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "g" => Ok(Basis::G),
            "gp" => Ok(Basis::GP),
            "gq" => Ok(Basis::GQ),
            "schur" | "s" => Ok(Basis::Schur),
            _ => Err(SymFuncError::Parse(format!("unknown basis {s:?}"))),
        }
    }
}

/// Whether `β` stays a formal symbol or is fixed to a number before expanding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BetaValue {
    Symbolic,
    Fixed(Rational),
}

impl BetaValue {
    pub fn fixed_int(b: i64) -> Self {
        BetaValue::Fixed(Rational::from_integer(b.into()))
    }

    fn as_int(&self) -> Option<Option<i128>> {
        match self {
            BetaValue::Symbolic => Some(None),
            BetaValue::Fixed(b) if b.is_integer() => Some(Some(b.to_integer().try_into().ok()?)),
            BetaValue::Fixed(_) => None,
        }
    }
}

impl FromStr for BetaValue {
    type Err = SymFuncError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "sym" | "symbolic" | "beta" | "β" => Ok(BetaValue::Symbolic),
            other => Ok(BetaValue::Fixed(super::poly::parse_rational(other)?)),
        }
    }
}

/// A finite linear combination `Σ c_ν F_ν` with coefficients in `β`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LinearCombo {
    pub basis: Basis,
    #[serde(serialize_with = "crate::partitions::serialize_keyed")]
    pub coeffs: BTreeMap<Partition, BetaPolynomial>,
}

impl LinearCombo {
    pub fn new(basis: Basis) -> Self {
        LinearCombo { basis, coeffs: BTreeMap::new() }
    }

    pub fn coeff(&self, nu: &Partition) -> BetaPolynomial {
        self.coeffs.get(nu).cloned().unwrap_or_default()
    }

    pub fn add(&mut self, nu: Partition, c: BetaPolynomial) {
        let sum = &self.coeff(&nu) + &c;
        if sum.is_zero() {
            self.coeffs.remove(&nu);
        } else {
            self.coeffs.insert(nu, sum);
        }
    }

    /// `Σ c_ν F_ν` as a polynomial in `n` variables, truncated at `cap`.
    pub fn evaluate(&self, n: usize, cap: Option<u32>) -> Result<XPolynomial, SymFuncError> {
        let mut out = XPolynomial::zero(n).with_cap(cap);
        for (nu, c) in &self.coeffs {
            let f = self.basis.element(nu, n, cap)?.to_rational();
            out = &out + &(&f * &c.to_poly(n));
        }
        Ok(out)
    }
}

impl fmt::Display for LinearCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(nu, c)| format!("({c})·{}{nu}", self.basis))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Expand `f` in the chosen basis.
///
/// With `cap = Some(D)`, `f` is treated as a symmetric function known up to
/// degree `D` and needs `N ≥ D` variables; terms above `D` are ignored. With
/// `cap = None` the expansion is exact in `N` variables and terminates
/// because only `ν` with `ℓ(ν) ≤ N` survive; `max_degree` bounds the search.
pub fn expand_in_basis<C: Coeff>(
    f: &Poly<C>,
    basis: Basis,
    beta: &BetaValue,
    cap: Option<u32>,
) -> Result<LinearCombo, SymFuncError> {
    let n = f.nvars();
    if let Some(c) = cap {
        if c as usize > n {
            return Err(SymFuncError::CapExceedsVariables { cap: c, vars: n });
        }
    }
    let max_degree = default_degree_bound(f, cap);
    let fr = f.to_rational().with_cap(cap);
    if let (Some(int_beta), Some(fi)) = (beta.as_int(), IntPoly::from_rational(&fr)) {
        let fi = match int_beta {
            Some(b) => fi.substitute_beta_int(b),
            None => fi,
        };
        let element = |nu: &Partition| -> Result<IntPoly, SymFuncError> {
            let e = basis.element(nu, n, cap)?;
            Ok(match int_beta {
                Some(b) => e.substitute_beta_int(b),
                None => e,
            })
        };
        match eliminate(fi, basis, &element, |nu| basis.leading_coefficient(nu), max_degree) {
            Ok(c) => return Ok(to_combo(basis, c)),
            Err(Elim::Error(e)) => return Err(e),
            Err(Elim::NeedsRational) => {}
        }
    }
    let fr = match beta {
        BetaValue::Symbolic => fr,
        BetaValue::Fixed(b) => fr.substitute_beta(b),
    };
    let element = |nu: &Partition| -> Result<XPolynomial, SymFuncError> {
        let e = basis.element(nu, n, cap)?;
        Ok(match beta {
            BetaValue::Symbolic => e.to_rational(),
            BetaValue::Fixed(b) => e.substitute_beta(b),
        })
    };
    let lead = |nu: &Partition| Rational::from_integer(basis.leading_coefficient(nu).into());
    match eliminate(fr, basis, &element, lead, max_degree) {
        Ok(c) => Ok(to_combo(basis, c)),
        Err(Elim::Error(e)) => Err(e),
        Err(Elim::NeedsRational) => unreachable!("rational division always succeeds"),
    }
}

fn default_degree_bound<C: Coeff>(f: &Poly<C>, cap: Option<u32>) -> u32 {
    cap.unwrap_or_else(|| 4 * f.max_x_degree().unwrap_or(0) + 16)
}

fn to_combo<C: Coeff>(basis: Basis, coeffs: Vec<(Partition, Poly<C>)>) -> LinearCombo {
    let mut out = LinearCombo::new(basis);
    for (nu, c) in coeffs {
        let mut b = BetaPolynomial::zero();
        for (m, v) in c.iter() {
            b.add_term(m.beta_degree(), v.to_rational());
        }
        out.add(nu, b);
    }
    out
}

pub(crate) enum Elim {
    NeedsRational,
    Error(SymFuncError),
}

impl From<SymFuncError> for Elim {
    fn from(e: SymFuncError) -> Self {
        Elim::Error(e)
    }
}

/// Core elimination loop, shared by basis expansion and the `e`-product
/// expansion behind `ω`. Returns `(ν, c_ν(β))` in the order found.
pub(crate) fn eliminate<C: Coeff>(
    mut residual: Poly<C>,
    basis: Basis,
    element: &dyn Fn(&Partition) -> Result<Poly<C>, SymFuncError>,
    lead: impl Fn(&Partition) -> C,
    max_degree: u32,
) -> Result<Vec<(Partition, Poly<C>)>, Elim> {
    let n = residual.nvars();
    let mut found = Vec::new();
    let mut cache: HashMap<Partition, Poly<C>> = HashMap::new();
    while let Some(d) = residual.min_x_degree() {
        let x_exps = residual
            .iter()
            .filter(|(m, _)| m.x_degree() == d)
            .map(|(m, _)| m.x_exponents(n))
            .max()
            .expect("some term has the minimal degree");
        if d > max_degree {
            return Err(SymFuncError::NotInSpan { basis: basis.to_string(), monomial: x_exps, degree: d }.into());
        }
        let nu = match Partition::new(x_exps.clone()) {
            Ok(nu) if nu.len() == x_exps.iter().filter(|&&e| e > 0).count() => nu,
            _ => {
                return Err(SymFuncError::NotInSpan { basis: basis.to_string(), monomial: x_exps, degree: d }.into());
            }
        };
        if basis.requires_strict() && !nu.is_strict() {
            return Err(SymFuncError::NotInSpan { basis: basis.to_string(), monomial: x_exps, degree: d }.into());
        }
        let x_mono = Monomial::from_exponents(0, &x_exps);
        let l = lead(&nu);
        let mut coeff = Poly::<C>::zero(n);
        for (m, c) in residual.iter() {
            if m.x_part() == x_mono {
                let q = c.div_exact(&l).ok_or(Elim::NeedsRational)?;
                coeff.add_term(Monomial::beta(m.beta_degree()), q);
            }
        }
        if !cache.contains_key(&nu) {
            let e = element(&nu)?;
            cache.insert(nu.clone(), e);
        }
        let e = &cache[&nu];
        residual = &residual - &(e * &coeff);
        found.push((nu, coeff));
    }
    Ok(found)
}

/// Convenience: the expansion coefficient of a single element in a combination.
pub fn coefficient_of(combo: &LinearCombo, nu: &Partition, beta: &Rational) -> Rational {
    combo.coeffs.get(nu).map(|c| c.eval(beta)).unwrap_or_else(<Rational as Zero>::zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::strict_partitions_up_to;
    use crate::symfunc::poly::{int, parse_rational};
    use proptest::prelude::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn bp(v: &[&str]) -> BetaPolynomial {
        BetaPolynomial::from_strings(&v.iter().map(|s| s.to_string()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn gq_one_in_gp_basis() {
        let f = family_poly(Family::GQ, Mode::Quasi, &p(&[1]), &p(&[]), 4, Some(4)).unwrap();
        let combo = expand_in_basis(&f, Basis::GP, &BetaValue::Symbolic, Some(4)).unwrap();
        assert_eq!(combo.coeffs.len(), 2);
        assert_eq!(combo.coeff(&p(&[1])), bp(&["2"]));
        assert_eq!(combo.coeff(&p(&[2])), bp(&["0", "1"]));
    }

    #[test]
    fn quasi_skew_row_in_gp_basis() {
        let f = family_poly(Family::GP, Mode::Quasi, &p(&[2]), &p(&[1]), 4, Some(4)).unwrap();
        let combo = expand_in_basis(&f, Basis::GP, &BetaValue::Symbolic, Some(4)).unwrap();
        assert_eq!(combo.coeffs.len(), 2);
        assert_eq!(combo.coeff(&p(&[1])), bp(&["2"]));
        assert_eq!(combo.coeff(&p(&[2])), bp(&["0", "2"]));
    }

    #[test]
    fn schur_of_one() {
        let f = schur_poly(&p(&[1]), 3);
        let combo = expand_in_basis(&f, Basis::Schur, &BetaValue::Symbolic, Some(3)).unwrap();
        assert_eq!(combo.coeffs.len(), 1);
        assert_eq!(combo.coeff(&p(&[1])), bp(&["1"]));
    }

    #[test]
    fn gp_in_gq_basis_needs_rationals() {
        let f = family_poly(Family::GP, Mode::Quasi, &p(&[1]), &p(&[]), 3, Some(3)).unwrap();
        let combo = expand_in_basis(&f, Basis::GQ, &BetaValue::Symbolic, Some(3)).unwrap();
        assert_eq!(combo.coeff(&p(&[1])), BetaPolynomial::constant(parse_rational("1/2").unwrap()));
        assert_eq!(combo.evaluate(3, Some(3)).unwrap(), f.to_rational());
    }

    #[test]
    fn cap_must_not_exceed_variables() {
        let f = family_poly(Family::GP, Mode::Quasi, &p(&[1]), &p(&[]), 2, Some(3)).unwrap();
        assert!(matches!(
            expand_in_basis(&f, Basis::GP, &BetaValue::Symbolic, Some(3)),
            Err(SymFuncError::CapExceedsVariables { .. })
        ));
    }

    #[test]
    fn non_symmetric_is_not_in_span() {
        let f = IntPoly::var(3, 2);
        assert!(matches!(
            expand_in_basis(&f, Basis::GP, &BetaValue::Symbolic, Some(3)),
            Err(SymFuncError::NotInSpan { .. })
        ));
    }

    #[test]
    fn exact_uncapped_product_expansion() {
        // GP_1 · GP_1 = GP_2 exactly, in two variables with β = 1.
        let g1 = family_poly(Family::GP, Mode::Quasi, &p(&[1]), &p(&[]), 2, None).unwrap();
        let combo = expand_in_basis(&(&g1 * &g1), Basis::GP, &BetaValue::fixed_int(1), None).unwrap();
        assert_eq!(combo.coeffs.len(), 1);
        assert_eq!(coefficient_of(&combo, &p(&[2]), &int(1)), int(1));
    }

    fn combo_strategy() -> impl Strategy<Value = LinearCombo> {
        let shapes: Vec<Partition> = strict_partitions_up_to(5).into_iter().map(|s| s.into_partition()).collect();
        proptest::collection::vec((0..shapes.len(), -3i64..4, 0u32..3), 0..5).prop_map(move |terms| {
            let mut c = LinearCombo::new(Basis::GP);
            for (k, v, b) in terms {
                c.add(shapes[k].clone(), BetaPolynomial::beta_power(b, int(v)));
            }
            c
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn expansion_inverts_evaluation(combo in combo_strategy()) {
            let f = combo.evaluate(5, Some(5)).unwrap();
            let back = expand_in_basis(&f, Basis::GP, &BetaValue::Symbolic, Some(5)).unwrap();
            prop_assert_eq!(back, combo);
        }
    }
}
