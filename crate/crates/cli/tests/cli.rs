use std::process::{Command, Output};

use serde_json::Value;

fn kschur(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kschur")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn pieri_example_passes() {
    let out = kschur(&["verify", "pieri", "--family", "gp", "--mu", "3,1", "--vars", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["pass"], true);
    assert_eq!(r["terms"], serde_json::json!([[[4, 1], 0], [[3, 2], 0], [[4, 2], 1]]));
}

#[test]
fn main2_reports_d() {
    let out = kschur(&["specialize", "--check", "main2", "--atoms", "phi:1/2,phi:1/3", "--beta", "1", "--order", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["constants_exact"]["D"], "2");
    assert_eq!(r["lhs_exact"][0], "4");
    assert_eq!(r["pass"], true);
}

#[test]
fn exponential_atoms_within_tolerance() {
    let out = kschur(&["specialize", "--atoms", "phi:0.5,phi:1/3,pi:0.25", "--beta", "1", "--order", "10", "--check", "main2", "--tol", "1e-9"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["exact"], false);
    assert!(r["max_rel_dev"].as_f64().unwrap() < 1e-9);
}

#[test]
fn failed_check_exits_one() {
    // Ω sends G_(2) to G_(1,1), so it is not fixed.
    let out = kschur(&["verify", "omega", "--family", "g", "--lambda", "2", "--vars", "3", "--cap", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["pass"], false);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(kschur(&["verify", "pieri", "--family", "gp", "--mu", "2,3"]).status.code(), Some(2));
    assert_eq!(kschur(&["verify", "pieri", "--family", "gp", "--mu", "2,2"]).status.code(), Some(2));
    assert_eq!(kschur(&["specialize", "--check", "main2", "--atoms", "eps:1/2"]).status.code(), Some(2));
    assert_eq!(kschur(&["specialize", "--check", "main2", "--atoms", "phi:1", "--beta", "-1"]).status.code(), Some(2));
    assert_eq!(kschur(&["harmonic", "--graph", "sytilde", "--rank", "3", "--atoms", ""]).status.code(), Some(2));
    assert_eq!(kschur(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn tableaux_list_uses_cell_keys() {
    let out = kschur(&["tableaux", "--family", "gq", "--outer", "1", "--vars", "1", "--list"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["count"], 3);
    assert_eq!(r["tableaux"][0]["1,1"], serde_json::json!(["1'"]));
    let out = kschur(&["tableaux", "--family", "gp", "--outer", "5", "--inner", "2", "--vars", "1", "--poly"]);
    assert_eq!(json(&out)["text"], "(2)*x1^3 + (3β)*x1^4 + (β^2)*x1^5");
}

#[test]
fn expand_reads_polynomial_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("gq1.json");
    // GQ_1 in three variables up to degree 3, written out by the tableaux command.
    let out = kschur(&["tableaux", "--family", "gq", "--outer", "1", "--vars", "3", "--poly", "--cap", "3"]);
    let poly = json(&out)["polynomial"].clone();
    std::fs::write(&path, serde_json::to_string(&poly).unwrap()).unwrap();
    let out = kschur(&["expand", "--family", "gp", "--input", path.to_str().unwrap(), "--cap", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["text"], "(2)·GP(1) + (β)·GP(2)");
}

#[test]
fn reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let args = |name: &str| {
        let p = dir.path().join(name);
        let out = kschur(&[
            "harmonic", "--graph", "sytilde", "--rank", "5", "--atoms", "phi:1/2,phi:1/3", "--beta", "1", "--extreme", "--pairs", "10", "--seed", "3",
            "--output", p.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
        std::fs::read(p).unwrap()
    };
    assert_eq!(args("a.json"), args("b.json"));
}

#[test]
fn single_criterion_from_the_suite() {
    let out = kschur(&["verify", "all", "--suite", "desk", "--criterion", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["id"], 4);
    assert!(r.get("elapsed_ms").is_none());
    assert!(String::from_utf8_lossy(&out.stderr).contains("[PASS] 4"));
}

#[test]
fn negative_beta_is_accepted() {
    let out = kschur(&["specialize", "--atoms", "phi:1/2,eps:1/3", "--beta", "-1", "--check", "monotone"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn expand_accepts_a_tableaux_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = kschur(&["tableaux", "--family", "gq", "--outer", "1", "--vars", "3", "--poly", "--cap", "3"]);
    std::fs::write(&path, &out.stdout).unwrap();
    let out = kschur(&["expand", "--family", "gp", "--input", path.to_str().unwrap(), "--cap", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["text"], "(2)·GP(1) + (β)·GP(2)");
}
