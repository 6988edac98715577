//! Independent oracles and property tests across modules.

use std::collections::BTreeSet;

use kschur::harmonic::{build_graph, candidate_from_specialization, check_extreme_conditions, check_harmonic, sample_pairs, GraphKind};
use kschur::partitions::Partition;
use kschur::specialize::onevar::strip_stats;
use kschur::specialize::{classification_check, monotonicity_check, Atom, Atoms, Theorem};
use kschur::symfunc::poly::Rational;
use kschur::tableaux::Family;
use proptest::prelude::*;

type Cell = (u32, u32);

fn shifted(p: &[u32]) -> BTreeSet<Cell> {
    let mut out = BTreeSet::new();
    for (i, &len) in p.iter().enumerate() {
        let i = i as u32 + 1;
        for j in i..i + len {
            out.insert((i, j));
        }
    }
    out
}

/// One-letter quasi-skew shifted tableaux counted by size: entry sets are
/// nonempty subsets of {1' < 1}, weakly increasing along rows and columns,
/// 1' at most once per row, 1 at most once per column, no 1' on the diagonal
/// for GP. Cells of the inner diagram outside its interior may stay empty.
/// The β exponent of a tableau is fixed by its size, so counts suffice.
fn one_letter_counts(p_family: bool, lambda: &[u32], mu: &[u32]) -> Vec<u64> {
    let outer = shifted(lambda);
    let inner = shifted(mu);
    if !inner.is_subset(&outer) {
        return Vec::new();
    }
    let interior: BTreeSet<Cell> = inner
        .iter()
        .copied()
        .filter(|&(i, j)| inner.contains(&(i + 1, j)) || inner.contains(&(i, j + 1)))
        .collect();
    let cells: Vec<(Cell, bool)> = outer.iter().filter(|c| !interior.contains(c)).map(|&c| (c, inner.contains(&c))).collect();
    // Sets as bit masks: bit 0 is 1', bit 1 is 1.
    let mut counts = vec![0u64; 2 * cells.len() + 1];
    let mut assigned: Vec<(Cell, u8)> = Vec::new();
    fn ok(assigned: &[(Cell, u8)], cell: Cell, set: u8) -> bool {
        let min = if set & 1 != 0 { 0 } else { 1 };
        for &((i, j), s) in assigned {
            if s == 0 {
                continue;
            }
            let smax = if s & 2 != 0 { 1 } else { 0 };
            if i == cell.0 && (smax > min || (s & 1 != 0 && set & 1 != 0)) {
                return false;
            }
            if j == cell.1 && (smax > min || (s & 2 != 0 && set & 2 != 0)) {
                return false;
            }
        }
        true
    }
    fn go(k: usize, cells: &[(Cell, bool)], p_family: bool, assigned: &mut Vec<(Cell, u8)>, counts: &mut [u64]) {
        let Some(&(cell, optional)) = cells.get(k) else {
            let size: u32 = assigned.iter().map(|(_, s)| s.count_ones()).sum();
            counts[size as usize] += 1;
            return;
        };
        for set in 0u8..4 {
            if set == 0 && !optional {
                continue;
            }
            if p_family && cell.0 == cell.1 && set & 1 != 0 {
                continue;
            }
            if set != 0 && !ok(assigned, cell, set) {
                continue;
            }
            assigned.push((cell, set));
            go(k + 1, cells, p_family, assigned, counts);
            assigned.pop();
        }
    }
    go(0, &cells, p_family, &mut assigned, &mut counts);
    counts
}

fn binomial(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// Coefficients of `2^a (2 + βx)^b (1 + βx)^c x^d` indexed by x-degree.
fn closed_counts(a: u32, b: u32, c: u32, d: u32) -> Vec<u64> {
    let mut out = vec![0u64; (d + b + c + 1) as usize];
    for i in 0..=b {
        for j in 0..=c {
            out[(d + i + j) as usize] += (1u64 << a) * binomial(b, i) * (1u64 << (b - i)) * binomial(c, j);
        }
    }
    out
}

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn strict_up_to(max_part: u32, max_len: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    fn rec(prefix: &mut Vec<u32>, below: u32, max_len: usize, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == max_len {
            return;
        }
        for p in (1..below).rev() {
            prefix.push(p);
            out.push(prefix.clone());
            rec(prefix, p, max_len, out);
            prefix.pop();
        }
    }
    rec(&mut Vec::new(), max_part + 1, max_len, &mut out);
    out
}

#[test]
fn one_variable_closed_form_against_direct_count() {
    let shapes = strict_up_to(5, 3);
    let mut nonzero = 0;
    for lambda in &shapes {
        for mu in &shapes {
            let l = Partition::new(lambda.clone()).unwrap();
            let m = Partition::new(mu.clone()).unwrap();
            if !l.contains(&m) {
                continue;
            }
            for (kind, p_family) in [(Family::GP, true), (Family::GQ, false)] {
                let s = strip_stats(kind, &l, &m).unwrap();
                let want = if s.is_zero() { Vec::new() } else { closed_counts(s.a, s.b, s.c, s.degree) };
                let got = trim(one_letter_counts(p_family, lambda, mu));
                assert_eq!(got, trim(want), "{kind}_{l}//{m}");
                nonzero += usize::from(!got.is_empty());
            }
        }
    }
    assert!(nonzero > 50);
}

#[test]
fn direct_count_small_cases() {
    // GP_(2)//(1): (1,2) ∈ {1', 1, {1',1}}, or (1,1) = 1 with (1,2) = 1.
    assert_eq!(trim(one_letter_counts(true, &[2], &[1])), vec![0, 2, 2]);
    // GQ_1 = 2x + βx².
    assert_eq!(trim(one_letter_counts(false, &[1], &[])), vec![0, 2, 1]);
    // Two diagonal cells need two letters.
    assert!(trim(one_letter_counts(true, &[2, 1], &[])).is_empty());
}

fn rational(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

fn normalized_pair() -> impl Strategy<Value = (Rational, Rational)> {
    // (1 + a)(1 + b) = 2 with b = (1 − a)/(1 + a).
    (1i64..9, 10i64..13).prop_map(|(n, d)| {
        let a = rational(n, d);
        let one = rational(1, 1);
        let b = (&one - &a) / (&one + &a);
        (a, b)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn normalized_alphabets_are_harmonic_and_extreme((a, b) in normalized_pair()) {
        let atoms = Atoms::new(vec![Atom::Phi(a), Atom::Phi(b)]);
        for kind in [GraphKind::SYtilde, GraphKind::Ytilde] {
            let g = build_graph(kind, 5);
            let c = candidate_from_specialization(&atoms, &g, &rational(1, 1), false, 0.0).unwrap();
            let r = check_harmonic(&c, &g, 0.0).unwrap();
            prop_assert!(r.pass, "{} {:?}", kind, r.first_failure);
            let pairs = sample_pairs(&g, 6, 2, 11);
            let e = check_extreme_conditions(&c, &g, &pairs, 0.0).unwrap();
            prop_assert!(e.pass, "{:?}", e.first_failing_pair);
        }
    }

    #[test]
    fn series_identities_hold_exactly(n1 in 1i64..6, n2 in 1i64..6, d in 6i64..9) {
        let phi = Atoms::new(vec![Atom::Phi(rational(n1, d)), Atom::Phi(rational(n2, d))]);
        let mixed = Atoms::new(vec![Atom::Phi(rational(n1, d)), Atom::Eps(rational(n2, d))]);
        for (theorem, atoms) in [
            (Theorem::Main2, &phi),
            (Theorem::Main3D, &phi),
            (Theorem::Nazarov, &phi),
            (Theorem::Y1, &mixed),
            (Theorem::MgC, &mixed),
        ] {
            let r = classification_check(theorem, atoms, 5, 0.0).unwrap();
            prop_assert!(r.pass && r.exact, "{} {} {:?}", theorem, atoms, r.first_fail_index);
        }
    }

    #[test]
    fn values_decrease_at_minus_one(n1 in 0i64..5, n2 in 1i64..5, g in 0i64..3) {
        let atoms = Atoms::new(vec![Atom::Phi(rational(n1, 4)), Atom::Eps(rational(n2, 5)), Atom::Pi(rational(g, 4))]);
        let r = monotonicity_check(&atoms, 4).unwrap();
        prop_assert!(r.pass, "{:?}", r.counterexample);
    }
}
