//! The desk-scale verification suite: eight criteria, each a bundle of exact
//! checks with a runtime budget.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::harmonic::{build_graph, candidate_from_specialization, check_extreme_conditions, check_harmonic, sample_pairs, GraphKind, HarmonicCandidate};
use crate::partitions::{partitions_up_to, strict_partitions_up_to, Partition};
use crate::specialize::onevar::{closed_one_var_text, minus_inverse_beta_check, one_var_check, strip_stats};
use crate::specialize::{classification_check, Atoms, SeriesReport, SpecializeError, Theorem};
use crate::symfunc::families::{family_poly, schur_poly, ssyt_poly};
use crate::symfunc::identities::{gg_check, gqgp_check, himn_check, pieri_check, singlebar_check, square_identities, theta_one_row_check};
use crate::symfunc::poly::{int, Rational};
use crate::symfunc::CheckReport;
use crate::tableaux::{theta_bijection_check, Family, Mode};

/// Seed used for sampled checks when none is given.
pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub id: u32,
    pub name: String,
    pub pass: bool,
    pub elapsed_ms: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub limit_ms: Option<u128>,
    pub checks: Vec<CheckReport>,
}

impl CriterionReport {
    /// One line: `[PASS] 3 structural identities (12 checks, 140 ms)`.
    pub fn summary(&self) -> String {
        let limit = self.limit_ms.map(|l| format!(", limit {} ms", l)).unwrap_or_default();
        let mut line = format!(
            "[{}] {} {} ({} checks, {} ms{limit})",
            if self.pass { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.checks.iter().map(|c| c.cases).sum::<usize>(),
            self.elapsed_ms
        );
        if let Some(c) = self.checks.iter().find(|c| !c.pass) {
            line.push_str(&format!(": {} failed: {}", c.name, c.counterexample.as_deref().unwrap_or("no detail")));
        } else if self.limit_ms.is_some_and(|l| self.elapsed_ms > l) {
            line.push_str(": over the time limit");
        }
        line
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub pass: bool,
    pub criteria: Vec<CriterionReport>,
}

pub const CRITERIA: [(u32, &str, Option<u64>); 8] = [
    (1, "single-variable closed form", Some(30)),
    (2, "Pieri rules", Some(120)),
    (3, "structural identities", None),
    (4, "theta map and bijection", None),
    (5, "specialization series", Some(60)),
    (6, "evaluations at beta = -1", None),
    (7, "harmonic functions", Some(60)),
    (8, "classical regressions at beta = 0", None),
];

type Checks = Result<Vec<CheckReport>, SpecializeError>;

/// Run one criterion by number.
pub fn run_criterion(id: u32, seed: u64) -> Result<CriterionReport, SpecializeError> {
    let &(_, name, limit) = CRITERIA
        .iter()
        .find(|c| c.0 == id)
        .ok_or_else(|| SpecializeError::ParameterConstraintViolated(format!("no criterion {id}; expected 1..=8")))?;
    let start = Instant::now();
    let checks = match id {
        1 => single_variable(),
        2 => pieri(),
        3 => structural(),
        4 => theta(),
        5 => series(),
        6 => minus_one(),
        7 => harmonic(seed),
        _ => classical(),
    }?;
    let elapsed = start.elapsed();
    let limit = limit.map(Duration::from_secs);
    let pass = checks.iter().all(|c| c.pass) && limit.is_none_or(|l| elapsed <= l);
    Ok(CriterionReport {
        id,
        name: name.to_string(),
        pass,
        elapsed_ms: elapsed.as_millis(),
        limit_ms: limit.map(|l| l.as_millis()),
        checks,
    })
}

/// All eight criteria in order.
pub fn run_desk_suite(seed: u64) -> Result<SuiteReport, SpecializeError> {
    let criteria = CRITERIA.iter().map(|c| run_criterion(c.0, seed)).collect::<Result<Vec<_>, _>>()?;
    Ok(SuiteReport { suite: "desk".into(), seed, pass: criteria.iter().all(|c| c.pass), criteria })
}

fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).expect("literal partition")
}

fn atoms(s: &str) -> Atoms {
    s.parse().expect("literal atoms")
}

fn single_variable() -> Checks {
    let mut examples = CheckReport::new("worked examples");
    for (kind, l, m, want) in [
        (Family::GP, p(&[5]), p(&[2]), "(2 +\\beta x) (1 +\\beta x) x^3"),
        (Family::GQ, p(&[4, 3]), p(&[4, 2]), "(2 +\\beta x) (1 +\\beta x)^2 x"),
    ] {
        let got = closed_one_var_text(&strip_stats(kind, &l, &m)?);
        examples.record(got == want, || format!("{kind}_{l}//{m}: got {got:?}, want {want:?}"));
    }
    Ok(vec![one_var_check(6, 3)?, examples])
}

fn pieri() -> Result<Vec<CheckReport>, SpecializeError> {
    let mut gp = CheckReport::new("GP Pieri, strict |mu| <= 6, N = 4");
    for mu in strict_partitions_up_to(6) {
        let r = pieri_check(Family::GP, &mu, 4)?;
        gp.record(r.pass, || r.counterexample.clone().unwrap_or_default());
    }
    let mut g = CheckReport::new("G Pieri, |mu| <= 5, N = 4");
    for mu in partitions_up_to(5) {
        let r = pieri_check(Family::G, &mu, 4)?;
        g.record(r.pass, || r.counterexample.clone().unwrap_or_default());
    }
    let mut displayed = CheckReport::new("displayed products");
    let r = pieri_check(Family::GP, &p(&[3, 1]), 4)?;
    let want = vec![(p(&[4, 1]), 0), (p(&[3, 2]), 0), (p(&[4, 2]), 1)];
    displayed.record(r.pass && r.terms == want, || format!("GP_1 GP_(3,1) terms {:?}", r.terms));
    let r = pieri_check(Family::G, &p(&[3, 1]), 4)?;
    displayed.record(r.pass && r.terms.len() == 7, || format!("G_1 G_(3,1) has {} terms", r.terms.len()));
    Ok(vec![gp, g, displayed])
}

fn structural() -> Checks {
    let mut out = vec![gqgp_check(5, 3)?, square_identities(3)?];
    for kind in [Family::GP, Family::GQ] {
        out.push(singlebar_check(kind, 5, 3)?);
    }
    out.push(gg_check(5, 3)?);
    out.push(himn_check(5, 3)?);
    Ok(out)
}

fn theta() -> Checks {
    let mut one_row = CheckReport::new("theta((n)) = GQ_n, n <= 4, N <= 3");
    for n in 1..=3 {
        one_row = one_row.merge(theta_one_row_check(4, n)?);
    }
    let mut bijection = CheckReport::new("theta bijection, n <= 4, N <= 3");
    for n in 1..=4 {
        for vars in 1..=3 {
            let r = theta_bijection_check(n, vars)?;
            bijection.record(r.pass, || format!("n = {n}, N = {vars}: {}", r.counterexample.clone().unwrap_or_default()));
        }
    }
    Ok(vec![one_row, bijection])
}

fn series_case(report: &mut CheckReport, r: &SeriesReport, extra: bool, describe: &str) {
    report.record(r.pass && extra, || {
        format!("{} {}: max relative deviation {:e}, first failing index {:?}, {describe}", r.theorem, r.atoms, r.max_rel_dev, r.first_fail_index)
    });
}

fn series() -> Checks {
    const TOL: f64 = 1e-9;
    let mut main2 = CheckReport::new("main2 at beta = 1");
    let r = classification_check(Theorem::Main2, &atoms("phi:1/2,phi:1/3"), 6, TOL)?;
    let constants = r.constants_exact.get("D").map(String::as_str) == Some("2")
        && r.constants_exact.get("D^2").map(String::as_str) == Some("4")
        && r.constants_exact.get("1+beta*rho(GQ_1)").map(String::as_str) == Some("4");
    series_case(&mut main2, &r, r.exact && r.max_rel_dev == 0.0 && constants, "expected exact match with D = 2, D^2 = 1 + rho(GQ_1) = 4");
    let r = classification_check(Theorem::Main2, &atoms("phi:1/2,phi:1/3,pi:0.25"), 10, TOL)?;
    series_case(&mut main2, &r, r.max_rel_dev < TOL, "with pi:1/4 at order 10");

    let mut others = CheckReport::new("y1, mg_c and main3_d");
    for (theorem, exact_atoms, pi_atoms) in [
        (Theorem::Y1, "phi:1/2,eps:1/3", "phi:1/2,eps:1/3,pi:0.25"),
        (Theorem::Y1, "phi:1,phi:1/4,eps:1/2", "eps:1/5,pi:1/3"),
        (Theorem::MgC, "phi:1/2,eps:1/4", "phi:1/3,eps:1/2,pi:0.25"),
        (Theorem::Main3D, "phi:1/2", "phi:1/2,pi:0.25"),
        (Theorem::Main3D, "phi:1/3,phi:1/5", "phi:1/5,pi:1/2"),
    ] {
        let r = classification_check(theorem, &atoms(exact_atoms), 6, TOL)?;
        series_case(&mut others, &r, r.exact && r.max_rel_dev == 0.0, "expected exact match to order 6");
        let r = classification_check(theorem, &atoms(pi_atoms), 10, TOL)?;
        series_case(&mut others, &r, r.max_rel_dev < TOL, "order 10 with pi");
    }
    let r = classification_check(Theorem::Main3D, &atoms("phi:1/2"), 6, TOL)?;
    let quarter = r.rhs_exact.as_ref().and_then(|c| c.first()).map(String::as_str) == Some("1/4");
    series_case(&mut others, &r, quarter && r.constants_exact.get("1-delta").map(String::as_str) == Some("1/2"), "expected 1 - delta = 1/2 and constant term 1/4");
    Ok(vec![main2, others])
}

fn minus_one() -> Checks {
    let betas = [int(-1), int(1), int(2), Rational::new((-1).into(), 3.into())];
    Ok(vec![minus_inverse_beta_check(6, &betas)?])
}

fn harmonic(seed: u64) -> Checks {
    let graph = build_graph(GraphKind::SYtilde, 7);
    let pairs = sample_pairs(&graph, 50, 3, seed);
    let mut harmonic = CheckReport::new("harmonic on the filtered shifted graph, rank 7");
    let mut extreme = CheckReport::new("nonnegative and multiplicative on 50 sampled pairs");
    let mut candidates = Vec::new();
    for a in ["phi:1", "phi:1/2,phi:1/3"] {
        let c = candidate_from_specialization(&atoms(a), &graph, &int(1), false, 0.0)?;
        let r = check_harmonic(&c, &graph, 0.0)?;
        harmonic.record(r.pass && r.exact, || format!("{a}: fails at {:?}", r.first_failure));
        let e = check_extreme_conditions(&c, &graph, &pairs, 0.0)?;
        extreme.record(e.pass, || format!("{a}: negative at {:?}, failing pair {:?}", e.negative_vertex, e.first_failing_pair));
        candidates.push(c);
    }
    let half = Rational::new(1.into(), 2.into());
    let mix = HarmonicCandidate::mixture(&[(half.clone(), &candidates[0]), (half, &candidates[1])])?;
    let mut witness = CheckReport::new("an even mixture is harmonic but not multiplicative");
    let r = check_harmonic(&mix, &graph, 0.0)?;
    witness.record(r.pass, || format!("mixture is not harmonic at {:?}", r.first_failure));
    let e = check_extreme_conditions(&mix, &graph, &pairs, 0.0)?;
    witness.record(e.nonnegative && !e.multiplicative, || "mixture passed every sampled multiplicativity check".into());
    Ok(vec![harmonic, extreme, witness])
}

fn classical() -> Checks {
    let mut schur = CheckReport::new("G at beta = 0 against semistandard tableaux, |lambda| <= 5");
    for lambda in partitions_up_to(5) {
        for n in 1..=4usize {
            let g = family_poly(Family::G, Mode::Quasi, &lambda, &Partition::empty(), n, Some(lambda.size()))?.substitute_beta_int(0);
            let oracle = ssyt_poly(&lambda, n);
            schur.record(g == oracle && oracle == schur_poly(&lambda, n), || format!("s_{lambda} in {n} variables"));
        }
    }
    let mut nazarov = CheckReport::new("Nazarov series at beta = 0 to order 6");
    for a in ["phi:1/2,phi:1/3", "phi:1,phi:1/4,phi:1/7", "phi:2/3"] {
        let r = classification_check(Theorem::Nazarov, &atoms(a), 6, 0.0)?;
        series_case(&mut nazarov, &r, r.exact && r.max_rel_dev == 0.0, "expected exact match");
    }
    Ok(vec![schur, nazarov])
}
