//! Set-valued tableaux for the `G`, `GP` and `GQ` families.
//!
//! A tableau of shape `λ//μ` fills the cells of `E \ Int(D)` where `E` and `D`
//! are the (shifted, for `GP`/`GQ`) diagrams of `λ` and `μ`. Cells of `E \ D`
//! must be nonempty; cells of `D \ Int(D)` may be empty or filled. In the skew
//! mode `λ/μ` every cell of `D` is empty.

mod entry;
mod enumerate;
mod theta;
mod transfer;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partitions::{diagram, interior, shifted_diagram, Cell, CellSet, Partition, StrictPartition};
use crate::symfunc::poly::{IntPoly, XPolynomial};

pub use entry::Entry;
pub use enumerate::{enumerate, MAX_ENUMERATION_VARS};
pub use theta::{theta_bijection, theta_bijection_check, theta_target_shape, ThetaReport};
pub use transfer::{generating_intpoly, tableau_count, MAX_COLUMNS};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableauError {
    #[error("{0} requires strict partitions, got {1}")]
    NotStrict(Family, Partition),
    #[error("{0} variables requested; at most {1} are supported here")]
    TooManyVariables(usize, usize),
    #[error("shape {0} is too wide; at most {1} columns are supported")]
    TooWide(Partition, usize),
    #[error("invalid entry {0:?}")]
    InvalidEntry(String),
    #[error("invalid filling: {0}")]
    InvalidFilling(String),
    #[error("unknown {0}: {1:?}")]
    Unknown(&'static str, String),
}

/// Which family of tableaux: unshifted `G`, or shifted `GP` / `GQ`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    G,
    GP,
    GQ,
}

impl Family {
    pub fn is_shifted(self) -> bool {
        !matches!(self, Family::G)
    }

    /// Whether a primed entry may be placed in the cell `(i, j)`.
    pub fn allows_primes(self, cell: Cell) -> bool {
        match self {
            Family::G => false,
            Family::GP => cell.0 != cell.1,
            Family::GQ => true,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::G => "G",
            Family::GP => "GP",
            Family::GQ => "GQ",
        })
    }
}

impl FromStr for Family {
    type Err = TableauError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "g" => Ok(Family::G),
            "gp" => Ok(Family::GP),
            "gq" => Ok(Family::GQ),
            _ => Err(TableauError::Unknown("family", s.to_string())),
        }
    }
}

/// Quasi-skew `λ//μ` (optional entries on `D \ Int(D)`) or skew `λ/μ`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    #[default]
    Quasi,
    Skew,
}

impl FromStr for Mode {
    type Err = TableauError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "quasi" | "//" => Ok(Mode::Quasi),
            "skew" | "/" => Ok(Mode::Skew),
            _ => Err(TableauError::Unknown("mode", s.to_string())),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct TableauFamily {
    pub kind: Family,
    pub mode: Mode,
}

impl TableauFamily {
    pub fn new(kind: Family, mode: Mode) -> Self {
        TableauFamily { kind, mode }
    }

    pub fn quasi(kind: Family) -> Self {
        Self::new(kind, Mode::Quasi)
    }

    pub fn skew(kind: Family) -> Self {
        Self::new(kind, Mode::Skew)
    }
}

/// A fillable cell of a shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct RegionCell {
    pub cell: Cell,
    pub optional: bool,
    pub primes_allowed: bool,
}

/// The cells a tableau of a given family and shape may fill, row-major.
#[derive(Clone, Debug)]
pub(crate) struct Region {
    pub outer: CellSet,
    pub inner: CellSet,
    pub cells: Vec<RegionCell>,
    pub rows: u32,
    pub cols: u32,
}

impl Region {
    /// `None` when `μ ⊄ λ`, in which case every generating function is zero.
    pub fn new(family: TableauFamily, lambda: &Partition, mu: &Partition) -> Result<Option<Region>, TableauError> {
        let (outer, inner) = shape_cells(family.kind, lambda, mu)?;
        if !lambda.contains(mu) {
            return Ok(None);
        }
        let int = interior(&inner);
        let cells: Vec<RegionCell> = outer
            .iter()
            .filter(|c| match family.mode {
                Mode::Quasi => !int.contains(c),
                Mode::Skew => !inner.contains(c),
            })
            .map(|&c| RegionCell {
                cell: c,
                optional: inner.contains(&c),
                primes_allowed: family.kind.allows_primes(c),
            })
            .collect();
        let rows = outer.iter().map(|c| c.0).max().unwrap_or(0);
        let cols = outer.iter().map(|c| c.1).max().unwrap_or(0);
        Ok(Some(Region { outer, inner, cells, rows, cols }))
    }

    pub fn required_count(&self) -> u32 {
        self.cells.iter().filter(|c| !c.optional).count() as u32
    }
}

/// The outer and inner diagrams for a family, checking strictness where needed.
pub fn shape_cells(kind: Family, lambda: &Partition, mu: &Partition) -> Result<(CellSet, CellSet), TableauError> {
    if kind.is_shifted() {
        let l = StrictPartition::try_from(lambda.clone()).map_err(|_| TableauError::NotStrict(kind, lambda.clone()))?;
        let m = StrictPartition::try_from(mu.clone()).map_err(|_| TableauError::NotStrict(kind, mu.clone()))?;
        Ok((shifted_diagram(&l), shifted_diagram(&m)))
    } else {
        Ok((diagram(lambda), diagram(mu)))
    }
}

/// A set-valued tableau: each fillable cell maps to its sorted entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetValuedFilling {
    pub outer: CellSet,
    pub inner: CellSet,
    pub values: BTreeMap<Cell, Vec<Entry>>,
}

impl SetValuedFilling {
    /// Total number of entries `|T|`.
    pub fn size(&self) -> usize {
        self.values.values().map(Vec::len).sum()
    }

    /// Exponent vector of `x^T` over `n` variables.
    pub fn weight(&self, n: usize) -> Vec<u32> {
        let mut w = vec![0u32; n];
        for e in self.values.values().flatten() {
            w[e.letter() as usize - 1] += 1;
        }
        w
    }

    pub fn get(&self, cell: Cell) -> &[Entry] {
        self.values.get(&cell).map(Vec::as_slice).unwrap_or(&[])
    }
}

impl Serialize for SetValuedFilling {
    /// A map `"i,j" → ["2'", "3"]` in row-major cell order.
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.values.len()))?;
        for ((i, j), entries) in &self.values {
            map.serialize_entry(&format!("{i},{j}"), entries)?;
        }
        map.end()
    }
}

impl fmt::Display for SetValuedFilling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .values
            .iter()
            .map(|((i, j), es)| {
                let inner: Vec<String> = es.iter().map(Entry::to_string).collect();
                format!("({i},{j}):{{{}}}", inner.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Independent check of every tableau condition, written directly from the
/// definition. Returns the first violated condition.
pub fn check_filling(
    family: TableauFamily,
    lambda: &Partition,
    mu: &Partition,
    n: usize,
    t: &SetValuedFilling,
) -> Result<(), String> {
    let (outer, inner) = shape_cells(family.kind, lambda, mu).map_err(|e| e.to_string())?;
    if !lambda.contains(mu) {
        return Err("inner shape is not contained in the outer shape".into());
    }
    if t.outer != outer || t.inner != inner {
        return Err("shape cells do not match".into());
    }
    let int = interior(&inner);
    let domain: CellSet = outer.difference(&int);
    for cell in domain.iter() {
        if !inner.contains(cell) && !t.values.contains_key(cell) {
            return Err(format!("cell {cell:?} is missing"));
        }
    }
    for (cell, entries) in &t.values {
        if !domain.contains(cell) {
            return Err(format!("cell {cell:?} is outside E \\ Int(D)"));
        }
        if entries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(format!("entries of {cell:?} are not a sorted set"));
        }
        if entries.iter().any(|e| e.code() == 0 || e.letter() as usize > n) {
            return Err(format!("entry out of range in {cell:?}"));
        }
        let required = !inner.contains(cell);
        if required && entries.is_empty() {
            return Err(format!("cell {cell:?} of E \\ D is empty"));
        }
        if family.mode == Mode::Skew && inner.contains(cell) && !entries.is_empty() {
            return Err(format!("cell {cell:?} of the inner shape is filled in skew mode"));
        }
        if entries.iter().any(|e| e.is_primed()) {
            match family.kind {
                Family::G => return Err(format!("primed entry in {cell:?} for G")),
                Family::GP if cell.0 == cell.1 => return Err(format!("primed entry on diagonal {cell:?} for GP")),
                _ => {}
            }
        }
    }
    let empty: Vec<Entry> = Vec::new();
    let get = |c: Cell| t.values.get(&c).unwrap_or(&empty);
    for (&(i, j), a) in &t.values {
        if a.is_empty() {
            continue;
        }
        let amax = *a.last().unwrap();
        for (next, along_row) in [((i, j + 1), true), ((i + 1, j), false)] {
            let b = get(next);
            if b.is_empty() {
                continue;
            }
            let bmin = b[0];
            if amax > bmin {
                return Err(format!("{:?} ⋠ {:?}", (i, j), next));
            }
            for e in a {
                if b.contains(e) {
                    // Letters shared along a row must be unprimed, down a column primed.
                    if along_row == e.is_primed() {
                        return Err(format!("letter {e} shared between {:?} and {next:?}", (i, j)));
                    }
                }
            }
        }
    }
    Ok(())
}

/// `Σ_T β^{|T| - |λ/μ|} x^T` over tableaux with letters of value at most `n`.
pub fn generating_polynomial(
    family: TableauFamily,
    lambda: &Partition,
    mu: &Partition,
    n: usize,
) -> Result<XPolynomial, TableauError> {
    Ok(generating_intpoly(family, lambda, mu, n, None)?.to_rational())
}

/// `Σ_{ν ⊆ μ strict} (−β)^{|μ|−|ν|} F_{λ//ν}` equals the skew polynomial `F_{λ/μ}`.
pub fn singlebar_relation_check(kind: Family, lambda: &Partition, mu: &Partition, n: usize) -> Result<bool, TableauError> {
    let skew = generating_intpoly(TableauFamily::skew(kind), lambda, mu, n, None)?;
    let mut sum = IntPoly::zero(n);
    let strict_mu = StrictPartition::try_from(mu.clone()).map_err(|_| TableauError::NotStrict(kind, mu.clone()))?;
    for nu in crate::partitions::strict_subpartitions(&strict_mu) {
        let k = mu.size() - nu.size();
        let sign = if k.is_multiple_of(2) { 1 } else { -1 };
        let term = generating_intpoly(TableauFamily::quasi(kind), lambda, &nu, n, None)?;
        let factor = IntPoly::monomial(n, crate::symfunc::poly::Monomial::beta(k), sign);
        sum = &sum + &(&term * &factor);
    }
    Ok(sum == skew)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn region_cells() {
        let r = Region::new(TableauFamily::quasi(Family::GP), &p(&[3, 1]), &p(&[2])).unwrap().unwrap();
        let cells: Vec<Cell> = r.cells.iter().map(|c| c.cell).collect();
        assert_eq!(cells, vec![(1, 2), (1, 3), (2, 2)]);
        assert_eq!(r.required_count(), 2);
        assert!(r.cells[0].primes_allowed);
        assert!(!r.cells[2].primes_allowed);
        let r = Region::new(TableauFamily::skew(Family::GP), &p(&[3, 1]), &p(&[2])).unwrap().unwrap();
        assert_eq!(r.cells.len(), 2);
        assert!(Region::new(TableauFamily::quasi(Family::GP), &p(&[2]), &p(&[3])).unwrap().is_none());
        assert!(Region::new(TableauFamily::quasi(Family::GP), &p(&[2, 2]), &p(&[])).is_err());
    }

    #[test]
    fn singlebar_examples() {
        assert!(singlebar_relation_check(Family::GP, &p(&[2]), &p(&[1]), 2).unwrap());
        assert!(singlebar_relation_check(Family::GQ, &p(&[3, 1]), &p(&[2]), 2).unwrap());
        assert!(singlebar_relation_check(Family::GP, &p(&[1]), &p(&[1]), 1).unwrap());
    }

    #[test]
    fn checker_rejects_bad_fillings() {
        let lambda = p(&[2]);
        let fam = TableauFamily::quasi(Family::GQ);
        let (outer, inner) = shape_cells(Family::GQ, &lambda, &p(&[])).unwrap();
        let mk = |a: Vec<Entry>, b: Vec<Entry>| SetValuedFilling {
            outer: outer.clone(),
            inner: inner.clone(),
            values: [((1, 1), a), ((1, 2), b)].into_iter().collect(),
        };
        let one = Entry::unprimed(1);
        let one_p = Entry::primed(1);
        assert!(check_filling(fam, &lambda, &p(&[]), 1, &mk(vec![one], vec![one])).is_ok());
        assert!(check_filling(fam, &lambda, &p(&[]), 1, &mk(vec![one_p], vec![one_p])).is_err());
        assert!(check_filling(fam, &lambda, &p(&[]), 1, &mk(vec![one], vec![one_p])).is_err());
        assert!(check_filling(fam, &lambda, &p(&[]), 1, &mk(vec![one], vec![])).is_err());
        let gp = TableauFamily::quasi(Family::GP);
        assert!(check_filling(gp, &lambda, &p(&[]), 1, &mk(vec![one_p], vec![one])).is_err());
    }
}
