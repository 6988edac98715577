//! Command-line front end for the `kschur` engine.
//!
//! Every command writes a JSON report to stdout (or `--output`) and a short
//! summary to stderr. Exit status is 0 when all requested checks pass, 1 when
//! a check fails and 2 for usage errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value as Json};

use kschur::harmonic::{build_graph, candidate_from_specialization, check_extreme_conditions, check_harmonic, sample_pairs, GraphKind};
use kschur::partitions::Partition;
use kschur::specialize::atoms::{g_generating_series, gq_generating_series, union_series, Which};
use kschur::specialize::onevar::one_var_check;
use kschur::specialize::{classification_check, monotonicity_check, Atoms, Theorem, ZSeries};
use kschur::suite::{run_criterion, run_desk_suite, DEFAULT_SEED};
use kschur::symfunc::basis::{expand_in_basis, Basis, BetaValue};
use kschur::symfunc::identities::{gg_check, gqgp_check, himn_check, pieri_check, theta_one_row_check};
use kschur::symfunc::operators::{coproduct_check, omega_gp_invariance_check};
use kschur::symfunc::poly::{parse_rational, IntPoly, PolyJson, Rational};
use kschur::symfunc::{family_poly, CheckReport};
use kschur::tableaux::{enumerate, tableau_count, theta_bijection_check, Family, Mode, TableauFamily, MAX_ENUMERATION_VARS};

#[derive(Parser)]
#[command(name = "kschur", version, about = "K-theoretic Schur P/Q-functions, Grothendieck polynomials and their specializations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true, env = "KSCHUR_THREADS")]
    threads: Option<usize>,
    /// Include wall-clock timings in suite reports (makes output nondeterministic).
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Count, list or sum set-valued tableaux of a shape.
    Tableaux(TableauxArgs),
    /// Expand a symmetric polynomial in the G, GP, GQ or Schur basis.
    Expand(ExpandArgs),
    /// Run an identity check.
    Verify {
        #[command(subcommand)]
        check: VerifyCommand,
    },
    /// Specialization series and the classification identities.
    Specialize(SpecializeArgs),
    /// Harmonic functions on partition graphs.
    Harmonic(HarmonicArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    G,
    Gp,
    Gq,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::G => Family::G,
            FamilyArg::Gp => Family::GP,
            FamilyArg::Gq => Family::GQ,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Quasi,
    Skew,
}

#[derive(Args)]
struct TableauxArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Outer shape, e.g. `5` or `4,3`.
    #[arg(long, value_parser = parse_partition)]
    outer: Partition,
    /// Inner shape; empty by default.
    #[arg(long, value_parser = parse_partition, default_value = "")]
    inner: Partition,
    /// Number of letters N.
    #[arg(long)]
    vars: usize,
    #[arg(long, value_enum, default_value = "quasi")]
    mode: ModeArg,
    /// Report the number of tableaux (the default).
    #[arg(long, group = "what")]
    count: bool,
    /// List every tableau.
    #[arg(long, group = "what")]
    list: bool,
    /// Report the generating polynomial.
    #[arg(long, group = "what")]
    poly: bool,
    /// Drop terms of x-degree above this.
    #[arg(long)]
    cap: Option<u32>,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    G,
    Gp,
    Gq,
    Schur,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Basis {
        match b {
            BasisArg::G => Basis::G,
            BasisArg::Gp => Basis::GP,
            BasisArg::Gq => Basis::GQ,
            BasisArg::Schur => Basis::Schur,
        }
    }
}

#[derive(Args)]
struct ExpandArgs {
    /// Target basis.
    #[arg(long, value_enum)]
    family: BasisArg,
    /// Polynomial in JSON form, {"vars": N, "terms": [{"x": [..], "c": ["c0", "c1", ..]}]}, or a tableaux `--poly` report.
    #[arg(long, conflicts_with = "source")]
    input: Option<PathBuf>,
    /// Expand a family polynomial instead of a file: the family of the source.
    #[arg(long, value_enum, requires = "outer")]
    source: Option<FamilyArg>,
    #[arg(long, value_parser = parse_partition)]
    outer: Option<Partition>,
    #[arg(long, value_parser = parse_partition, default_value = "")]
    inner: Partition,
    #[arg(long, value_enum, default_value = "quasi")]
    mode: ModeArg,
    /// Variables for `--source`.
    #[arg(long, default_value_t = 3)]
    vars: usize,
    /// Degree cap; requires at least as many variables.
    #[arg(long)]
    cap: Option<u32>,
    /// `sym` keeps β symbolic; otherwise a rational value.
    #[arg(long, default_value = "sym", allow_hyphen_values = true, value_parser = parse_beta_value)]
    beta: BetaValue,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// F_1 F_μ against the rook-strip sum.
    Pieri {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, default_value_t = 4)]
        vars: usize,
    },
    /// GQ_n = 2GP_n + βGP_{n+1}.
    Gqgp {
        #[arg(long, default_value_t = 5)]
        max_n: u32,
        #[arg(long, default_value_t = 3)]
        vars: usize,
    },
    /// Ω = Φ∘ω fixes GP_{λ//μ} and GQ_{λ//μ}.
    Omega {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition, default_value = "")]
        mu: Partition,
        #[arg(long, default_value_t = 3)]
        vars: usize,
        #[arg(long, default_value_t = 3)]
        cap: u32,
    },
    /// Θ(G_n) = GQ_n and the tableau bijection behind it.
    Theta {
        #[arg(long, default_value_t = 4)]
        max_n: u32,
        #[arg(long, default_value_t = 3)]
        vars: usize,
    },
    /// Δ(F_{λ//μ}) = Σ_κ F_{κ//μ} ⊗ F_{λ//κ}.
    Coproduct {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition, default_value = "")]
        mu: Partition,
        #[arg(long, default_value_t = 1)]
        p: usize,
        #[arg(long, default_value_t = 1)]
        q: usize,
    },
    /// One-variable closed forms against enumeration.
    Singlevar {
        #[arg(long, default_value_t = 6)]
        max_part: u32,
        #[arg(long, default_value_t = 3)]
        max_len: usize,
    },
    /// Σ (GQ_n + βGQ_{n+1}) z^n = (1 + βG_1) E(z+β) H(z).
    Himn {
        #[arg(long, default_value_t = 5)]
        max_n: u32,
        #[arg(long, default_value_t = 3)]
        vars: usize,
    },
    /// Σ (G_n + βG_{n+1}) z^n = (1 + βG_1) H(z).
    Gg {
        #[arg(long, default_value_t = 5)]
        max_n: u32,
        #[arg(long, default_value_t = 3)]
        vars: usize,
    },
    /// The full acceptance suite, or one criterion of it.
    All {
        #[arg(long, default_value = "desk")]
        suite: String,
        /// Run only this criterion (1 to 8).
        #[arg(long)]
        criterion: Option<u32>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckArg {
    Y1,
    Main2,
    #[value(name = "mg_c", alias = "mg-c")]
    MgC,
    #[value(name = "main3_d", alias = "main3-d")]
    Main3D,
    Nazarov,
    /// Weakly decreasing values on G_n, GP_n, GQ_n at β = −1.
    Monotone,
}

#[derive(Args)]
struct SpecializeArgs {
    /// Comma-separated atoms: `phi:a`, `eps:b`, `pi:g` with rational parameters.
    #[arg(long, default_value = "", value_parser = parse_atoms)]
    atoms: Atoms,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational_arg)]
    beta: Option<Rational>,
    #[arg(long, default_value_t = 10)]
    order: usize,
    #[arg(long, value_enum)]
    check: Option<CheckArg>,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
}

#[derive(Args)]
struct HarmonicArgs {
    #[arg(long, value_parser = parse_graph)]
    graph: GraphKind,
    #[arg(long)]
    rank: u32,
    #[arg(long, value_parser = parse_atoms)]
    atoms: Atoms,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational_arg)]
    beta: Option<Rational>,
    /// Evaluate in floating point (needed for `pi` atoms).
    #[arg(long)]
    numeric: bool,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Also check nonnegativity and multiplicativity on sampled pairs.
    #[arg(long)]
    extreme: bool,
    #[arg(long, default_value_t = 50)]
    pairs: usize,
    /// Largest size of a sampled shape.
    #[arg(long, default_value_t = 3)]
    pair_size: u32,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn parse_beta_value(s: &str) -> Result<BetaValue, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_atoms(s: &str) -> Result<Atoms, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_graph(s: &str) -> Result<GraphKind, String> {
    s.parse().map_err(|e| format!("{e}"))
}

/// A finished command: its JSON report, whether it passed, and a summary line.
struct Outcome {
    report: Json,
    pass: bool,
    summary: String,
}

impl Outcome {
    fn new(report: impl Serialize, pass: bool, summary: impl Into<String>) -> Result<Self> {
        Ok(Outcome { report: serde_json::to_value(report)?, pass, summary: summary.into() })
    }
}

fn check_outcome(r: CheckReport) -> Result<Outcome> {
    let summary = match &r.counterexample {
        None => format!("{}: pass ({} cases)", r.name, r.cases),
        Some(c) => format!("{}: FAIL: {c}", r.name),
    };
    let pass = r.pass;
    Outcome::new(r, pass, summary)
}

fn tableaux(a: TableauxArgs) -> Result<Outcome> {
    let mode = match a.mode {
        ModeArg::Quasi => Mode::Quasi,
        ModeArg::Skew => Mode::Skew,
    };
    let family = TableauFamily::new(a.family.into(), mode);
    let mut report = json!({
        "family": family.kind.to_string(),
        "mode": format!("{:?}", mode).to_lowercase(),
        "outer": a.outer,
        "inner": a.inner,
        "vars": a.vars,
    });
    let summary;
    if a.list {
        if a.vars > MAX_ENUMERATION_VARS {
            bail!("listing supports at most {MAX_ENUMERATION_VARS} letters");
        }
        let all = enumerate(family, &a.outer, &a.inner, a.vars)?;
        summary = format!("{} tableaux", all.len());
        report["count"] = json!(all.len());
        report["tableaux"] = serde_json::to_value(&all)?;
    } else if a.poly {
        let p = kschur::tableaux::generating_intpoly(family, &a.outer, &a.inner, a.vars, a.cap)?;
        summary = p.to_string();
        report["polynomial"] = serde_json::to_value(p.to_json())?;
        report["text"] = json!(p.to_string());
    } else {
        let n = tableau_count(family, &a.outer, &a.inner, a.vars)?;
        summary = format!("{n} tableaux");
        report["count"] = json!(n.to_string());
    }
    Outcome::new(report, true, summary)
}

fn expand(a: ExpandArgs) -> Result<Outcome> {
    let mode = match a.mode {
        ModeArg::Quasi => Mode::Quasi,
        ModeArg::Skew => Mode::Skew,
    };
    let (poly, source) = match (&a.input, a.source, &a.outer) {
        (Some(path), _, _) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let mut raw: Json = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
            // Accept a tableaux report as well as a bare polynomial.
            if let Some(inner) = raw.get_mut("polynomial") {
                raw = inner.take();
            }
            let j: PolyJson = serde_json::from_value(raw).with_context(|| format!("parsing {}", path.display()))?;
            (kschur::symfunc::poly::XPolynomial::from_json(&j)?, json!(path.display().to_string()))
        }
        (None, Some(f), Some(outer)) => {
            let p: IntPoly = family_poly(f.into(), mode, outer, &a.inner, a.vars, a.cap)?;
            (p.to_rational(), json!({"family": Family::from(f).to_string(), "outer": outer, "inner": a.inner, "vars": a.vars}))
        }
        _ => bail!("give --input FILE or --source FAMILY --outer SHAPE"),
    };
    let combo = expand_in_basis(&poly, a.family.into(), &a.beta, a.cap)?;
    let summary = combo.to_string();
    let report = json!({
        "source": source,
        "basis": combo.basis,
        "beta": match &a.beta { BetaValue::Symbolic => "sym".to_string(), BetaValue::Fixed(b) => b.to_string() },
        "cap": a.cap,
        "coefficients": combo.coeffs.iter().map(|(nu, c)| json!({"nu": nu, "coeff": c})).collect::<Vec<_>>(),
        "text": summary,
    });
    Outcome::new(report, true, summary)
}

fn strip_timings(v: &mut Json) {
    match v {
        Json::Object(m) => {
            m.remove("elapsed_ms");
            m.values_mut().for_each(strip_timings);
        }
        Json::Array(a) => a.iter_mut().for_each(strip_timings),
        _ => {}
    }
}

fn verify(check: VerifyCommand, seed: u64, timings: bool) -> Result<Outcome> {
    match check {
        VerifyCommand::Pieri { family, mu, vars } => {
            let r = pieri_check(family.into(), &mu, vars)?;
            let terms: Vec<String> = r.terms.iter().map(|(l, e)| if *e == 0 { l.to_string() } else { format!("β^{e} {l}") }).collect();
            let summary = format!("{}_1 {}_{}: {} = {}", r.kind, r.kind, r.mu, if r.pass { "pass" } else { "FAIL" }, terms.join(" + "));
            let pass = r.pass;
            Outcome::new(r, pass, summary)
        }
        VerifyCommand::Gqgp { max_n, vars } => check_outcome(gqgp_check(max_n, vars)?),
        VerifyCommand::Omega { family, lambda, mu, vars, cap } => {
            if cap as usize > vars {
                bail!("--cap {cap} exceeds --vars {vars}");
            }
            let mut r = CheckReport::new(format!("Omega fixes {}_{}//{}", Family::from(family), lambda, mu));
            let ok = omega_gp_invariance_check(family.into(), &lambda, &mu, vars, cap)?;
            r.record(ok, || format!("Ω changes the polynomial in {vars} variables up to degree {cap}"));
            check_outcome(r)
        }
        VerifyCommand::Theta { max_n, vars } => {
            let mut r = theta_one_row_check(max_n, vars)?;
            for n in 1..=max_n {
                let b = theta_bijection_check(n, vars)?;
                r.record(b.pass, || format!("bijection for n = {n}: {}", b.counterexample.clone().unwrap_or_default()));
            }
            check_outcome(r)
        }
        VerifyCommand::Coproduct { family, lambda, mu, p, q } => check_outcome(coproduct_check(family.into(), &lambda, &mu, p, q)?),
        VerifyCommand::Singlevar { max_part, max_len } => check_outcome(one_var_check(max_part, max_len)?),
        VerifyCommand::Himn { max_n, vars } => check_outcome(himn_check(max_n, vars)?),
        VerifyCommand::Gg { max_n, vars } => check_outcome(gg_check(max_n, vars)?),
        VerifyCommand::All { suite, criterion } => {
            if suite != "desk" {
                bail!("unknown suite {suite:?}; the only suite is \"desk\"");
            }
            let (mut report, pass, lines) = match criterion {
                Some(id) => {
                    let r = run_criterion(id, seed)?;
                    let line = r.summary();
                    (serde_json::to_value(&r)?, r.pass, vec![line])
                }
                None => {
                    let r = run_desk_suite(seed)?;
                    let lines = r.criteria.iter().map(|c| c.summary()).collect();
                    (serde_json::to_value(&r)?, r.pass, lines)
                }
            };
            if !timings {
                strip_timings(&mut report);
            }
            Ok(Outcome { report, pass, summary: lines.join("\n") })
        }
    }
}

fn series_json(s: &ZSeries) -> Json {
    json!(s.to_f64())
}

fn specialize(a: SpecializeArgs) -> Result<Outcome> {
    match a.check {
        Some(CheckArg::Monotone) => {
            if a.beta.as_ref().is_some_and(|b| *b != Rational::from_integer((-1).into())) {
                bail!("the monotonicity check is at β = -1");
            }
            let r = monotonicity_check(&a.atoms, a.order as u32)?;
            let summary = match &r.counterexample {
                None => format!("monotone on G, GP, GQ up to n = {}: pass", a.order),
                Some(c) => format!("monotonicity FAIL: {c}"),
            };
            let pass = r.pass;
            Outcome::new(r, pass, summary)
        }
        Some(check) => {
            let theorem = match check {
                CheckArg::Y1 => Theorem::Y1,
                CheckArg::Main2 => Theorem::Main2,
                CheckArg::MgC => Theorem::MgC,
                CheckArg::Main3D => Theorem::Main3D,
                CheckArg::Nazarov => Theorem::Nazarov,
                CheckArg::Monotone => unreachable!("handled above"),
            };
            if let Some(b) = &a.beta {
                if *b != theorem.beta() {
                    bail!("{theorem} is stated at β = {}, got --beta {b}", theorem.beta());
                }
            }
            let r = classification_check(theorem, &a.atoms, a.order, a.tol)?;
            let constants: Vec<String> = match r.constants_exact.is_empty() {
                true => r.constants.iter().map(|(k, v)| format!("{k} = {v}")).collect(),
                false => r.constants_exact.iter().map(|(k, v)| format!("{k} = {v}")).collect(),
            };
            let summary = format!(
                "{theorem} with {}: {} (max relative deviation {:e}, {}{}{})",
                if r.atoms.is_empty() { "no atoms".to_string() } else { r.atoms.to_string() },
                if r.pass { "pass" } else { "FAIL" },
                r.max_rel_dev,
                if r.exact { "exact" } else { "numeric" },
                if constants.is_empty() { "" } else { "; " },
                constants.join(", ")
            );
            let pass = r.pass;
            Outcome::new(r, pass, summary)
        }
        None => {
            let beta = a.beta.clone().ok_or_else(|| anyhow!("--beta is required without --check"))?;
            let order = a.order;
            let report = json!({
                "atoms": a.atoms,
                "beta": beta.to_string(),
                "order": order,
                "h": series_json(&union_series(&a.atoms, Which::H, &beta, order)?),
                "e": series_json(&union_series(&a.atoms, Which::E, &beta, order)?),
                "e_shifted": series_json(&union_series(&a.atoms, Which::EShifted, &beta, order)?),
                "g_series": series_json(&g_generating_series(&a.atoms, &beta, order)?),
                "gq_series": series_json(&gq_generating_series(&a.atoms, &beta, order)?),
            });
            Outcome::new(report, true, format!("series of {} at β = {beta} to order {order}", a.atoms))
        }
    }
}

fn harmonic(a: HarmonicArgs, seed: u64) -> Result<Outcome> {
    let graph = build_graph(a.graph, a.rank);
    let beta = a.beta.unwrap_or_else(|| a.graph.beta());
    let candidate = candidate_from_specialization(&a.atoms, &graph, &beta, a.numeric, a.tol)?;
    let harmonic = check_harmonic(&candidate, &graph, a.tol)?;
    let mut pass = harmonic.pass;
    let mut summary = format!(
        "{} rank {} from {}: harmonic {} on {} interior vertices",
        a.graph,
        a.rank,
        a.atoms,
        if harmonic.pass { "pass" } else { "FAIL" },
        harmonic.interior_checked
    );
    let extreme = if a.extreme {
        let pairs = sample_pairs(&graph, a.pairs, a.pair_size, seed);
        let e = check_extreme_conditions(&candidate, &graph, &pairs, a.tol)?;
        pass &= e.pass;
        summary.push_str(&format!(
            "; nonnegative {}, multiplicative on {} pairs {}",
            if e.nonnegative { "pass" } else { "FAIL" },
            e.pairs_checked,
            if e.multiplicative { "pass" } else { "FAIL" }
        ));
        Some(e)
    } else {
        None
    };
    let report = json!({
        "candidate": candidate,
        "harmonic": harmonic,
        "extreme": extreme,
    });
    Outcome::new(report, pass, summary)
}

fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Tableaux(a) => tableaux(a),
        Command::Expand(a) => expand(a),
        Command::Verify { check } => verify(check, cli.seed, cli.timings),
        Command::Specialize(a) => specialize(a),
        Command::Harmonic(a) => harmonic(a, cli.seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: cannot configure {n} threads: {e}");
            return ExitCode::from(2);
        }
    }
    let output = cli.output.clone();
    let outcome = match run(cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let mut text = match serde_json::to_string_pretty(&outcome.report) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    text.push('\n');
    match output {
        Some(path) => {
            if let Err(e) = fs::write(&path, text) {
                eprintln!("error: writing {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    eprintln!("{}", outcome.summary);
    if outcome.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
