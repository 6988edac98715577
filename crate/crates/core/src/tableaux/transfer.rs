//! Generating polynomials by a row-major transfer recursion.
//!
//! The state after visiting a cell is the profile of maxima: for every column
//! the largest code in the most recently visited cell of that column, or 0 if
//! that cell is empty or not fillable. The left neighbor of `(i, j)` is then
//! `profile[j-1]` and the upper neighbor is `profile[j]`. All sets with a given
//! minimum and maximum are aggregated into one weight polynomial.

use std::collections::HashMap;

use super::{Region, TableauError, TableauFamily};
use crate::partitions::Partition;
use crate::symfunc::poly::{IntPoly, Monomial, MAX_VARS};

/// The profile packs one byte per column into a `u128`, column 0 unused.
pub const MAX_COLUMNS: usize = 15;

/// `Σ_T β^{|T| − |λ/μ|} x^T` as an integer polynomial, optionally dropping
/// every term of `x`-degree above `cap`.
pub fn generating_intpoly(
    family: TableauFamily,
    lambda: &Partition,
    mu: &Partition,
    n: usize,
    cap: Option<u32>,
) -> Result<IntPoly, TableauError> {
    if n > MAX_VARS {
        return Err(TableauError::TooManyVariables(n, MAX_VARS));
    }
    let Some(region) = Region::new(family, lambda, mu)? else {
        return Ok(IntPoly::zero(n).with_cap(cap));
    };
    if region.cols as usize > MAX_COLUMNS {
        return Err(TableauError::TooWide(lambda.clone(), MAX_COLUMNS));
    }
    let required = region.required_count();
    if n == 0 {
        let only_empty = required == 0;
        return Ok(if only_empty { IntPoly::one(0) } else { IntPoly::zero(0) }.with_cap(cap));
    }
    let weights = WeightTable::new(n, cap);
    let mut fillable: HashMap<(u32, u32), usize> = HashMap::new();
    for (k, rc) in region.cells.iter().enumerate() {
        fillable.insert(rc.cell, k);
    }

    let mut states: HashMap<u128, IntPoly> = HashMap::new();
    states.insert(0, IntPoly::one(n).with_cap(cap));
    for i in 1..=region.rows {
        for j in 1..=region.cols {
            let shift = 8 * j;
            let clear = !(0xFFu128 << shift);
            let Some(&k) = fillable.get(&(i, j)) else {
                let mut next: HashMap<u128, IntPoly> = HashMap::with_capacity(states.len());
                for (prof, poly) in states {
                    merge(&mut next, prof & clear, poly);
                }
                states = next;
                continue;
            };
            let rc = region.cells[k];
            let codes: Vec<u32> = (1..=2 * n as u32).filter(|c| c % 2 == 0 || rc.primes_allowed).collect();
            let table = if rc.primes_allowed { &weights.all } else { &weights.even };
            let mut next: HashMap<u128, IntPoly> = HashMap::new();
            for (prof, poly) in states {
                let left = if j > 1 { ((prof >> (8 * (j - 1))) & 0xFF) as u32 } else { 0 };
                let up = ((prof >> shift) & 0xFF) as u32;
                let base = prof & clear;
                if rc.optional {
                    merge(&mut next, base, poly.clone());
                }
                for (a, &m) in codes.iter().enumerate() {
                    let ok_left = m > left || (m == left && m % 2 == 0);
                    let ok_up = m > up || (m == up && m % 2 == 1);
                    if !(ok_left && ok_up) {
                        continue;
                    }
                    for &big in &codes[a..] {
                        let w = &table[&(m, big)];
                        if w.is_zero() {
                            continue;
                        }
                        merge(&mut next, base | ((big as u128) << shift), &poly * w);
                    }
                }
            }
            states = next;
        }
    }
    let mut total = IntPoly::zero(n).with_cap(cap);
    for poly in states.into_values() {
        total = &total + &poly;
    }
    Ok(total.lower_beta(required))
}

/// Number of tableaux with letters of value at most `n`.
pub fn tableau_count(family: TableauFamily, lambda: &Partition, mu: &Partition, n: usize) -> Result<i128, TableauError> {
    Ok(generating_intpoly(family, lambda, mu, n, None)?.coefficient_sum())
}

fn merge(map: &mut HashMap<u128, IntPoly>, key: u128, poly: IntPoly) {
    if poly.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::hash_map::Entry::Occupied(mut e) => {
            let sum = e.get() + &poly;
            *e.get_mut() = sum;
        }
        std::collections::hash_map::Entry::Vacant(e) => {
            e.insert(poly);
        }
    }
}

/// For each `(min, max)` pair of codes, the sum of `β^{|S|} x^S` over all sets
/// `S` with that minimum and maximum.
struct WeightTable {
    all: HashMap<(u32, u32), IntPoly>,
    even: HashMap<(u32, u32), IntPoly>,
}

impl WeightTable {
    fn new(n: usize, cap: Option<u32>) -> Self {
        let top = 2 * n as u32;
        let letter = |c: u32| Monomial::var(c.div_ceil(2) as usize).times(Monomial::beta(1));
        let build = |even_only: bool| {
            let allowed = |c: u32| !even_only || c.is_multiple_of(2);
            let mut table = HashMap::new();
            for m in (1..=top).filter(|&c| allowed(c)) {
                let mut inner = IntPoly::one(n).with_cap(cap);
                for big in (m..=top).filter(|&c| allowed(c)) {
                    let w = if big == m {
                        IntPoly::monomial(n, letter(m), 1).with_cap(cap)
                    } else {
                        let ends = IntPoly::monomial(n, letter(m).times(letter(big)), 1).with_cap(cap);
                        &ends * &inner
                    };
                    table.insert((m, big), w);
                    if big > m {
                        // `big` becomes an optional middle element for larger maxima.
                        let mut factor = IntPoly::one(n).with_cap(cap);
                        factor.add_term(letter(big), 1);
                        inner = &inner * &factor;
                    }
                }
            }
            table
        };
        WeightTable { all: build(false), even: build(true) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{strict_partitions_up_to, Partition};
    use crate::symfunc::poly::Monomial;
    use crate::tableaux::{enumerate, Family, Mode};

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn from_enumeration(family: TableauFamily, l: &Partition, m: &Partition, n: usize) -> IntPoly {
        let mut out = IntPoly::zero(n);
        let skew = l.size() - m.size().min(l.size());
        for t in enumerate(family, l, m, n).unwrap() {
            let extra = t.size() as u32 - skew;
            out.add_term(Monomial::from_exponents(extra, &t.weight(n)), 1);
        }
        out
    }

    #[test]
    fn one_variable_examples() {
        // (2 + βx)x^n for GQ_n, x^n for GP_n.
        for n in 1..=4u32 {
            let gq = generating_intpoly(TableauFamily::quasi(Family::GQ), &p(&[n]), &p(&[]), 1, None).unwrap();
            let mut expected = IntPoly::zero(1);
            expected.add_term(Monomial::from_exponents(0, &[n]), 2);
            expected.add_term(Monomial::from_exponents(1, &[n + 1]), 1);
            assert_eq!(gq, expected);
            let gp = generating_intpoly(TableauFamily::quasi(Family::GP), &p(&[n]), &p(&[]), 1, None).unwrap();
            assert_eq!(gp, IntPoly::monomial(1, Monomial::from_exponents(0, &[n]), 1));
        }
    }

    #[test]
    fn matches_enumeration() {
        let strict: Vec<Partition> = strict_partitions_up_to(5).into_iter().map(|s| s.into_partition()).collect();
        for kind in [Family::GP, Family::GQ] {
            for mode in [Mode::Quasi, Mode::Skew] {
                let fam = TableauFamily::new(kind, mode);
                for l in &strict {
                    for m in &strict {
                        if m.size() > l.size() {
                            continue;
                        }
                        for n in 1..=2 {
                            let dp = generating_intpoly(fam, l, m, n, None).unwrap();
                            assert_eq!(dp, from_enumeration(fam, l, m, n), "{kind} {mode:?} {l}/{m} n={n}");
                        }
                    }
                }
            }
        }
        for l in crate::partitions::partitions_up_to(4) {
            for m in crate::partitions::partitions_up_to(2) {
                for mode in [Mode::Quasi, Mode::Skew] {
                    let fam = TableauFamily::new(Family::G, mode);
                    let dp = generating_intpoly(fam, &l, &m, 3, None).unwrap();
                    assert_eq!(dp, from_enumeration(fam, &l, &m, 3), "G {mode:?} {l}/{m}");
                }
            }
        }
    }

    #[test]
    fn cap_truncates() {
        let fam = TableauFamily::quasi(Family::GQ);
        let full = generating_intpoly(fam, &p(&[2, 1]), &p(&[]), 3, None).unwrap();
        let capped = generating_intpoly(fam, &p(&[2, 1]), &p(&[]), 3, Some(4)).unwrap();
        assert_eq!(full.truncate(4), capped);
    }

    #[test]
    fn zero_variables() {
        let fam = TableauFamily::quasi(Family::GP);
        assert_eq!(generating_intpoly(fam, &p(&[]), &p(&[]), 0, None).unwrap(), IntPoly::one(0));
        assert!(generating_intpoly(fam, &p(&[1]), &p(&[]), 0, None).unwrap().is_zero());
    }
}
