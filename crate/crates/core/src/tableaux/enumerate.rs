//! Explicit enumeration of set-valued tableaux, cell by cell in row-major order.

use std::collections::BTreeMap;

use super::{Entry, Region, RegionCell, SetValuedFilling, TableauError, TableauFamily};
use crate::partitions::{Cell, Partition};

/// Enumeration lists every filling; beyond this many letters it is impractical.
pub const MAX_ENUMERATION_VARS: usize = 6;

/// All tableaux of the family and shape with letters of value at most `n`.
///
/// Cells are filled in row-major order; each cell's candidate sets are listed
/// in increasing bitmask order over the alphabet `1' < 1 < ... < n' < n`.
pub fn enumerate(
    family: TableauFamily,
    lambda: &Partition,
    mu: &Partition,
    n: usize,
) -> Result<Vec<SetValuedFilling>, TableauError> {
    if n > MAX_ENUMERATION_VARS {
        return Err(TableauError::TooManyVariables(n, MAX_ENUMERATION_VARS));
    }
    let Some(region) = Region::new(family, lambda, mu)? else {
        return Ok(Vec::new());
    };
    let mut out = Vec::new();
    let mut current: BTreeMap<Cell, Vec<Entry>> = BTreeMap::new();
    recurse(&region, 0, n as u32, &mut current, &mut out);
    Ok(out)
}

fn recurse(
    region: &Region,
    idx: usize,
    n: u32,
    current: &mut BTreeMap<Cell, Vec<Entry>>,
    out: &mut Vec<SetValuedFilling>,
) {
    if idx == region.cells.len() {
        out.push(SetValuedFilling {
            outer: region.outer.clone(),
            inner: region.inner.clone(),
            values: current.clone(),
        });
        return;
    }
    let rc = region.cells[idx];
    for set in candidate_sets(&rc, n, current) {
        current.insert(rc.cell, set);
        recurse(region, idx + 1, n, current, out);
    }
    current.remove(&rc.cell);
}

fn candidate_sets(rc: &RegionCell, n: u32, current: &BTreeMap<Cell, Vec<Entry>>) -> Vec<Vec<Entry>> {
    let (i, j) = rc.cell;
    let left = if j > 1 { current.get(&(i, j - 1)).and_then(|s| s.last()).copied() } else { None };
    let up = if i > 1 { current.get(&(i - 1, j)).and_then(|s| s.last()).copied() } else { None };
    let alphabet: Vec<Entry> = (1..=2 * n)
        .map(Entry)
        .filter(|e| !e.is_primed() || rc.primes_allowed)
        .collect();
    let mut out = Vec::new();
    if rc.optional {
        out.push(Vec::new());
    }
    for mask in 1u32..(1u32 << alphabet.len()) {
        let set: Vec<Entry> = alphabet
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, e)| *e)
            .collect();
        let min = set[0];
        // A letter equal to the left neighbor's maximum must be unprimed,
        // one equal to the upper neighbor's maximum must be primed.
        let ok_left = left.is_none_or(|l| min > l || (min == l && !min.is_primed()));
        let ok_up = up.is_none_or(|u| min > u || (min == u && min.is_primed()));
        if ok_left && ok_up {
            out.push(set);
        }
    }
    out
}
