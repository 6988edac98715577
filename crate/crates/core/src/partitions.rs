//! Integer partitions, strict partitions and their (shifted) diagrams.
//!
//! Cells are `(row, column)` pairs with both coordinates starting at 1. Row
//! `i` of the diagram of `λ` holds `λ_i` cells; the shifted diagram moves row
//! `i` right by `i - 1` columns.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing: {0:?}")]
    NotDecreasing(Vec<u32>),
    #[error("parts must be strictly decreasing: {0:?}")]
    NotStrict(Vec<u32>),
    #[error("cannot parse partition from {0:?}")]
    Parse(String),
}

/// A cell `(row, column)` of a diagram.
pub type Cell = (u32, u32);

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are dropped on construction, so two partitions compare equal
/// iff their nonzero parts agree. The total order is graded: first by size,
/// then lexicographically descending, so `(3) < (2,1) < (1,1,1)`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self, PartitionError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`, or `()` when `n == 0`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition(vec![n])
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `λ_i` with 1-based index, zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn first(&self) -> u32 {
        self.part(1)
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    pub fn to_strict(&self) -> Result<StrictPartition, PartitionError> {
        StrictPartition::new(self.0.clone())
    }

    /// `μ ⊆ λ` as diagrams, i.e. `μ_i ≤ λ_i` for all `i`.
    pub fn contains(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && mu.0.iter().zip(&self.0).all(|(m, l)| m <= l)
    }

    pub fn transpose(&self) -> Partition {
        let cols = self.first() as usize;
        let mut out = vec![0u32; cols];
        for &p in &self.0 {
            for c in out.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition(out)
    }

    pub fn diagram(&self) -> CellSet {
        diagram(self)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = PartitionError;
    fn try_from(v: Vec<u32>) -> Result<Self, Self::Error> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Parses `"3,1"`, `"(3,1)"`, `"[3, 1]"`, or `""`/`"()"`/`"0"` for the empty partition.
impl FromStr for Partition {
    type Err = PartitionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim().trim_matches(|c| matches!(c, '(' | ')' | '[' | ']'));
        if trimmed.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = trimmed
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PartitionError::Parse(s.to_string()))?;
        Partition::new(parts)
    }
}

/// A partition whose nonzero parts are distinct.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct StrictPartition(Partition);

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        let p = Partition::new(parts)?;
        if !p.is_strict() {
            return Err(PartitionError::NotStrict(p.0));
        }
        Ok(StrictPartition(p))
    }

    pub fn empty() -> Self {
        StrictPartition(Partition::empty())
    }

    pub fn row(n: u32) -> Self {
        StrictPartition(Partition::row(n))
    }

    pub fn as_partition(&self) -> &Partition {
        &self.0
    }

    pub fn into_partition(self) -> Partition {
        self.0
    }

    pub fn shifted_diagram(&self) -> CellSet {
        shifted_diagram(self)
    }

    /// Drop the first row: `(λ_2 > λ_3 > ...)`.
    pub fn tilde(&self) -> StrictPartition {
        tilde(self)
    }
}

impl Deref for StrictPartition {
    type Target = Partition;
    fn deref(&self) -> &Partition {
        &self.0
    }
}

impl TryFrom<Vec<u32>> for StrictPartition {
    type Error = PartitionError;
    fn try_from(v: Vec<u32>) -> Result<Self, Self::Error> {
        StrictPartition::new(v)
    }
}

impl TryFrom<Partition> for StrictPartition {
    type Error = PartitionError;
    fn try_from(p: Partition) -> Result<Self, Self::Error> {
        if p.is_strict() {
            Ok(StrictPartition(p))
        } else {
            Err(PartitionError::NotStrict(p.0))
        }
    }
}

impl From<StrictPartition> for Vec<u32> {
    fn from(p: StrictPartition) -> Self {
        p.0 .0
    }
}

impl fmt::Debug for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for StrictPartition {
    type Err = PartitionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Partition::from_str(s)?.try_into()
    }
}

/// A finite set of cells, iterated in row-major order.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CellSet(BTreeSet<Cell>);

impl CellSet {
    pub fn new() -> Self {
        CellSet(BTreeSet::new())
    }

    pub fn insert(&mut self, cell: Cell) -> bool {
        self.0.insert(cell)
    }

    pub fn contains(&self, cell: &Cell) -> bool {
        self.0.contains(cell)
    }

    /// Like `contains`, but tolerates coordinates that would be zero or negative.
    pub fn has(&self, row: i64, col: i64) -> bool {
        row >= 1 && col >= 1 && self.0.contains(&(row as u32, col as u32))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Cell> + '_ {
        self.0.iter()
    }

    pub fn difference(&self, other: &CellSet) -> CellSet {
        CellSet(self.0.difference(&other.0).copied().collect())
    }

    pub fn is_subset(&self, other: &CellSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn transpose(&self) -> CellSet {
        self.0.iter().map(|&(i, j)| (j, i)).collect()
    }

    pub fn to_vec(&self) -> Vec<Cell> {
        self.0.iter().copied().collect()
    }
}

impl FromIterator<Cell> for CellSet {
    fn from_iter<T: IntoIterator<Item = Cell>>(iter: T) -> Self {
        CellSet(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a CellSet {
    type Item = &'a Cell;
    type IntoIter = std::collections::btree_set::Iter<'a, Cell>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Serialize a map keyed by partitions with keys written as `"(3,1)"`, for
/// formats such as JSON whose object keys must be strings.
pub fn serialize_keyed<V: serde::Serialize, S: serde::Serializer>(map: &std::collections::BTreeMap<Partition, V>, s: S) -> Result<S::Ok, S::Error> {
    s.collect_map(map.iter().map(|(k, v)| (k.to_string(), v)))
}

impl fmt::Debug for CellSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

pub fn diagram(lambda: &Partition) -> CellSet {
    let mut cells = CellSet::new();
    for (i, &p) in lambda.parts().iter().enumerate() {
        for j in 1..=p {
            cells.insert((i as u32 + 1, j));
        }
    }
    cells
}

pub fn shifted_diagram(lambda: &StrictPartition) -> CellSet {
    let mut cells = CellSet::new();
    for (idx, &p) in lambda.parts().iter().enumerate() {
        let i = idx as u32 + 1;
        for j in i..i + p {
            cells.insert((i, j));
        }
    }
    cells
}

/// Cells of `D` having a neighbor of `D` directly below or directly to the right.
pub fn interior(d: &CellSet) -> CellSet {
    d.iter()
        .filter(|&&(i, j)| d.contains(&(i + 1, j)) || d.contains(&(i, j + 1)))
        .copied()
        .collect()
}

/// At most one cell in each row and each column.
pub fn is_rook_strip(s: &CellSet) -> bool {
    let mut rows = BTreeSet::new();
    let mut cols = BTreeSet::new();
    s.iter().all(|&(i, j)| rows.insert(i) && cols.insert(j))
}

/// No two cells `(i, j)`, `(i+1, j+1)`.
pub fn is_border_strip(s: &CellSet) -> bool {
    s.iter().all(|&(i, j)| !s.contains(&(i + 1, j + 1)))
}

/// `λ + δ` with `δ = (n, ..., 2, 1)` and `n = ℓ(λ)`.
pub fn add_staircase(lambda: &Partition) -> StrictPartition {
    let n = lambda.len() as u32;
    let parts = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + n - i as u32)
        .collect();
    StrictPartition::new(parts).expect("λ + δ is strict")
}

/// The staircase `(n, n-1, ..., 1)`.
pub fn staircase(n: u32) -> StrictPartition {
    StrictPartition::new((1..=n).rev().collect()).expect("staircase is strict")
}

pub fn transpose(lambda: &Partition) -> Partition {
    lambda.transpose()
}

pub fn contains(lambda: &Partition, mu: &Partition) -> bool {
    lambda.contains(mu)
}

pub fn tilde(lambda: &StrictPartition) -> StrictPartition {
    let rest = lambda.parts().iter().skip(1).copied().collect();
    StrictPartition::new(rest).expect("tail of a strict partition is strict")
}

/// All partitions of `n` with parts at most `max_part`, lexicographically descending.
fn partitions_bounded(n: u32, max_part: u32, strict: bool, out: &mut Vec<Vec<u32>>, prefix: &mut Vec<u32>) {
    if n == 0 {
        out.push(prefix.clone());
        return;
    }
    let top = max_part.min(n);
    for p in (1..=top).rev() {
        prefix.push(p);
        let next_max = if strict { p - 1 } else { p };
        partitions_bounded(n - p, next_max, strict, out, prefix);
        prefix.pop();
    }
}

/// All partitions of `n`, lexicographically descending.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    partitions_bounded(n, n, false, &mut out, &mut Vec::new());
    out.into_iter().map(Partition).collect()
}

pub fn strict_partitions_of(n: u32) -> Vec<StrictPartition> {
    let mut out = Vec::new();
    partitions_bounded(n, n, true, &mut out, &mut Vec::new());
    out.into_iter().map(|p| StrictPartition(Partition(p))).collect()
}

/// All partitions of size at most `r`, in canonical (graded, lex-descending) order.
pub fn partitions_up_to(r: u32) -> Vec<Partition> {
    (0..=r).flat_map(partitions_of).collect()
}

/// All strict partitions of size at most `r`, in canonical order.
pub fn strict_partitions_up_to(r: u32) -> Vec<StrictPartition> {
    (0..=r).flat_map(strict_partitions_of).collect()
}

/// All partitions `ν ⊋ λ` whose (shifted, if requested) diagram difference is
/// a nonempty rook strip, in canonical order.
///
/// For `shifted`, `λ` must be strict and only strict `ν` are returned.
pub fn strip_successors(lambda: &Partition, shifted: bool) -> Vec<Partition> {
    // A rook strip adds at most one cell per row, so ν_i ∈ {λ_i, λ_i + 1} for
    // i ≤ ℓ(λ) + 1, and also at most one cell per column.
    let len = lambda.len() + 1;
    let mut out = Vec::new();
    let base: Vec<u32> = (1..=len).map(|i| lambda.part(i)).collect();
    for mask in 1u64..(1u64 << len) {
        let parts: Vec<u32> = base
            .iter()
            .enumerate()
            .map(|(i, &p)| p + ((mask >> i) & 1) as u32)
            .collect();
        let Ok(nu) = Partition::new(parts) else { continue };
        if shifted && !nu.is_strict() {
            continue;
        }
        let diff = if shifted {
            shifted_diagram(&StrictPartition(nu.clone()))
                .difference(&shifted_diagram(&StrictPartition(lambda.clone())))
        } else {
            diagram(&nu).difference(&diagram(lambda))
        };
        if !diff.is_empty() && is_rook_strip(&diff) {
            out.push(nu);
        }
    }
    out.sort();
    out
}

/// Partitions `ν ⊃ λ` with `|ν| = |λ| + 1` (strict when `shifted`), canonical order.
pub fn box_successors(lambda: &Partition, shifted: bool) -> Vec<Partition> {
    let mut out = Vec::new();
    for i in 1..=lambda.len() + 1 {
        let mut parts: Vec<u32> = (1..=lambda.len() + 1).map(|k| lambda.part(k)).collect();
        parts[i - 1] += 1;
        if let Ok(nu) = Partition::new(parts) {
            if !shifted || nu.is_strict() {
                out.push(nu);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Strict partitions `ν ⊆ λ`, canonical order.
pub fn strict_subpartitions(lambda: &StrictPartition) -> Vec<StrictPartition> {
    strict_partitions_up_to(lambda.size())
        .into_iter()
        .filter(|nu| lambda.contains(nu))
        .collect()
}

/// Strict partitions `κ` with `μ ⊆ κ ⊆ λ`, canonical order.
pub fn strict_interval(mu: &StrictPartition, lambda: &StrictPartition) -> Vec<StrictPartition> {
    strict_subpartitions(lambda)
        .into_iter()
        .filter(|k| k.contains(mu))
        .collect()
}

/// Partitions `κ` with `μ ⊆ κ ⊆ λ`, canonical order.
pub fn interval(mu: &Partition, lambda: &Partition) -> Vec<Partition> {
    partitions_up_to(lambda.size())
        .into_iter()
        .filter(|k| lambda.contains(k) && k.contains(mu))
        .collect()
}
