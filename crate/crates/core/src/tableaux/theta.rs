//! A weight-preserving bijection from one-row `GQ` tableaux of shape `(n)` to
//! `GQ` tableaux of the skew shape `(n+1, ..., 2) / (n, ..., 1)`, which is a
//! single column of `n` cells.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use super::{check_filling, enumerate, shape_cells, Entry, Family, Mode, SetValuedFilling, TableauError, TableauFamily};
use crate::partitions::{staircase, Partition};

/// Outer and inner partitions `(n+1, ..., 2)` and `(n, ..., 1)`.
pub fn theta_target_shape(n: u32) -> (Partition, Partition) {
    let outer = Partition::new((2..=n + 1).rev().collect()).expect("staircase plus one is a partition");
    (outer, staircase(n).into_partition())
}

/// Rewrite each letter's run along the row, then stand the row up as a column.
///
/// For a fixed letter `i`, the cells containing `i` or `i'` form a consecutive
/// segment of `k` cells, and only its first cell can contain `i'`. The three
/// possible patterns are rewritten as
///
/// * `i, i, ..., i` → `i', i', ..., i'`
/// * `i', i, ..., i` → `i', ..., i', i`
/// * `{i',i}, i, ..., i` → `i', ..., i', {i',i}`
///
/// and row cell `k` becomes the `k`-th cell of the column, top to bottom.
pub fn theta_bijection(t: &SetValuedFilling, n: u32) -> Result<SetValuedFilling, TableauError> {
    let row = Partition::row(n);
    let empty = Partition::empty();
    let family = TableauFamily::quasi(Family::GQ);
    let max_letter = t.values.values().flatten().map(|e| e.letter()).max().unwrap_or(0) as usize;
    check_filling(family, &row, &empty, max_letter.max(1), t).map_err(TableauError::InvalidFilling)?;

    let mut cells: Vec<Vec<Entry>> = (1..=n).map(|j| t.get((1, j)).to_vec()).collect();
    let mut rewritten: Vec<Vec<Entry>> = vec![Vec::new(); n as usize];
    for letter in 1..=max_letter as u32 {
        let (primed, unprimed) = (Entry::primed(letter), Entry::unprimed(letter));
        let segment: Vec<usize> = (0..n as usize)
            .filter(|&k| cells[k].contains(&primed) || cells[k].contains(&unprimed))
            .collect();
        let Some((&first, &last)) = segment.first().zip(segment.last()) else { continue };
        if last - first + 1 != segment.len() {
            return Err(TableauError::InvalidFilling(format!("letter {letter} does not occupy consecutive cells")));
        }
        let first_has_primed = cells[first].contains(&primed);
        let first_has_unprimed = cells[first].contains(&unprimed);
        for &k in &segment {
            let body = k != last;
            let new: &[Entry] = match (first_has_primed, first_has_unprimed) {
                (false, _) => &[primed],
                (true, false) if body => &[primed],
                (true, false) => &[unprimed],
                (true, true) if body => &[primed],
                (true, true) => &[primed, unprimed],
            };
            rewritten[k].extend_from_slice(new);
        }
        for c in cells.iter_mut() {
            c.retain(|e| e.letter() != letter);
        }
    }

    let (outer_p, inner_p) = theta_target_shape(n);
    let (outer, inner) = shape_cells(Family::GQ, &outer_p, &inner_p)?;
    let mut values = BTreeMap::new();
    for (k, set) in rewritten.into_iter().enumerate() {
        let mut set = set;
        set.sort();
        values.insert((k as u32 + 1, n + 1), set);
    }
    Ok(SetValuedFilling { outer, inner, values })
}

/// Outcome of running the bijection over every source tableau.
#[derive(Clone, Debug, Serialize)]
pub struct ThetaReport {
    pub n: u32,
    pub vars: usize,
    pub sources: usize,
    pub targets: usize,
    pub distinct_images: usize,
    pub weights_preserved: bool,
    pub images_are_targets: bool,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

/// Apply the bijection to every `GQ` tableau of shape `(n)` in `vars` letters
/// and compare with the enumerated target tableaux.
pub fn theta_bijection_check(n: u32, vars: usize) -> Result<ThetaReport, TableauError> {
    let source = enumerate(TableauFamily::quasi(Family::GQ), &Partition::row(n), &Partition::empty(), vars)?;
    let (outer, inner) = theta_target_shape(n);
    let target: HashSet<SetValuedFilling> = enumerate(TableauFamily::new(Family::GQ, Mode::Skew), &outer, &inner, vars)?.into_iter().collect();
    let mut images = HashSet::new();
    let mut counterexample = None;
    let (mut weights_preserved, mut images_are_targets) = (true, true);
    for t in &source {
        let u = theta_bijection(t, n)?;
        if u.weight(vars) != t.weight(vars) || u.size() != t.size() {
            weights_preserved = false;
            counterexample.get_or_insert_with(|| format!("weight changes: {t} -> {u}"));
        }
        if !target.contains(&u) {
            images_are_targets = false;
            counterexample.get_or_insert_with(|| format!("image {u} of {t} is not a target tableau"));
        }
        images.insert(u);
    }
    let pass = weights_preserved && images_are_targets && images.len() == source.len() && source.len() == target.len();
    if !pass && counterexample.is_none() {
        counterexample = Some(format!("{} sources, {} distinct images, {} targets", source.len(), images.len(), target.len()));
    }
    Ok(ThetaReport {
        n,
        vars,
        sources: source.len(),
        targets: target.len(),
        distinct_images: images.len(),
        weights_preserved,
        images_are_targets,
        pass,
        counterexample,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_box() {
        let row = enumerate(TableauFamily::quasi(Family::GQ), &Partition::row(1), &Partition::empty(), 1).unwrap();
        let one = row.iter().find(|t| t.to_string() == "(1,1):{1}").unwrap();
        let image = theta_bijection(one, 1).unwrap();
        assert_eq!(image.to_string(), "(1,2):{1'}");
    }

    #[test]
    fn bijective_and_weight_preserving() {
        for n in 1..=4u32 {
            for vars in 1..=3usize {
                let r = theta_bijection_check(n, vars).unwrap();
                assert!(r.pass, "{r:?}");
            }
        }
        assert_eq!(theta_bijection_check(2, 1).unwrap().sources, 3);
    }

    #[test]
    fn rejects_invalid_input() {
        let (outer, inner) = shape_cells(Family::GQ, &Partition::row(2), &Partition::empty()).unwrap();
        let bad = SetValuedFilling {
            outer,
            inner,
            values: [((1, 1), vec![Entry::primed(1)]), ((1, 2), vec![Entry::primed(1)])].into_iter().collect(),
        };
        assert!(theta_bijection(&bad, 2).is_err());
    }
}
