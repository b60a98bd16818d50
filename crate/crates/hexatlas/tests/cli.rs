//! End-to-end tests of the binary: command surface, exit codes, and output
//! determinism.

use std::process::{Command, Output};

fn hexatlas(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hexatlas"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn hexagon_solve_regular() {
    let out = hexatlas(&[
        "hexagon",
        "solve",
        "--triple",
        "a,b,c",
        "--lengths",
        "1.316958,1.316958,1.316958",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let sides = &v["sides"];
    for key in ["a", "b", "c", "A", "B", "C"] {
        assert!((sides[key].as_f64().unwrap() - 1.316958).abs() < 1e-5, "{key}");
    }
    for key in ["alpha", "beta", "gamma"] {
        assert!((v["perp"][key].as_f64().unwrap() - 1.762747).abs() < 1e-5, "{key}");
    }
}

#[test]
fn hexagon_solve_from_mixed_triple_matches() {
    // Solving from {a,b,gamma} with the regular gamma gives the same hexagon.
    let out = hexatlas(&[
        "hexagon",
        "solve",
        "--triple",
        "a,b,gamma",
        "--lengths",
        "1.316958,1.316958,1.762747",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    for key in ["a", "b", "c", "A", "B", "C"] {
        assert!((v["sides"][key].as_f64().unwrap() - 1.316958).abs() < 1e-5, "{key}");
    }
}

#[test]
fn hexagon_solve_rejects_inadmissible_triple() {
    let out = hexatlas(&["hexagon", "solve", "--triple", "a,b,alpha", "--lengths", "1,1,1"]);
    assert_eq!(code(&out), 64);
}

#[test]
fn hexagon_solve_rejects_nonpositive_lengths() {
    let out = hexatlas(&["hexagon", "solve", "--triple", "a,b,c", "--lengths", "1,-1,1"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn foliation_chart_unit_coords() {
    let out = hexatlas(&[
        "foliation", "chart", "--triple", "a,b,c", "--coords", "1,1,1", "--format", "json",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out).trim(),
        r#"{"weights":{"A":"1/2","B":"1/2","C":"1/2"}}"#
    );
}

#[test]
fn foliation_transition_to_alpha_chart() {
    let out = hexatlas(&[
        "foliation",
        "transition",
        "--triple",
        "a,b,c",
        "--coords",
        "1,1,1",
        "--to",
        "alpha,b,c",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["triple"], serde_json::json!(["alpha", "b", "c"]));
    assert_eq!(v["coords"], serde_json::json!(["1/2", "1", "1"]));
}

#[test]
fn foliation_transition_rejects_bad_position() {
    let out = hexatlas(&[
        "foliation", "transition", "--triple", "a,b,c", "--coords", "5,1,1", "--to", "alpha,b,c",
    ]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8(out.stderr).unwrap().lines().count() == 1);
}

#[test]
fn foliation_chart_rejects_zero_coords() {
    let out = hexatlas(&["foliation", "chart", "--triple", "a,b,c", "--coords", "0,0,0"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn foliation_classify_excludes_alpha_charts() {
    let out = hexatlas(&["foliation", "classify", "--weights", "alpha=1", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let charts: Vec<[String; 3]> = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(!charts.is_empty());
    for chart in &charts {
        assert!(!chart.iter().any(|c| c == "alpha"), "{chart:?}");
    }
}

#[test]
fn atlas_check_passes_and_reports() {
    let out = hexatlas(&["atlas", "check"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("counts: PASS ((V,E,F) = (9,21,14))"));
    assert!(text.contains("euler-characteristic: PASS (chi = 2)"));
    assert!(text.contains("transition-cocycle: PASS"));
}

#[test]
fn atlas_export_round_trips_through_check() {
    let dir = std::env::temp_dir().join(format!("hexatlas-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("complex.json");
    let out = hexatlas(&["atlas", "export", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);

    let check = hexatlas(&["atlas", "check", "--complex", path.to_str().unwrap()]);
    assert_eq!(code(&check), 0);

    // Tamper with the edge list: the check must fail with exit 1.
    let text = std::fs::read_to_string(&path).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let edges = v["edges"].as_array_mut().unwrap();
    edges.pop();
    let tampered = dir.join("tampered.json");
    std::fs::write(&tampered, v.to_string()).unwrap();
    let check = hexatlas(&["atlas", "check", "--complex", tampered.to_str().unwrap()]);
    assert_eq!(code(&check), 1);
    assert!(stdout(&check).contains("FAIL"));

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn teich_limit_linear_family() {
    let out = hexatlas(&["teich", "limit", "--seq", "a=n;b=n;c=n", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["classification"], "diverges");
    assert_eq!(v["chart"], serde_json::json!(["a", "b", "c"]));
    let limit = v["limit"].as_array().unwrap();
    for k in 0..3 {
        assert!((limit[k].as_f64().unwrap() - 1.0 / 3.0).abs() < 1e-3);
        assert!(limit[k + 3].as_f64().unwrap() < 1e-3);
    }
}

#[test]
fn teich_limit_bounded_family() {
    let out = hexatlas(&["teich", "limit", "--seq", "a=1;b=1;c=1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("bounded: does not tend to infinity") || stdout(&out).contains("bounded"));
}

#[test]
fn teich_limit_reports_witness_for_slow_families() {
    // {K,K,0}: classification succeeds, the limit itself converges too
    // slowly for the default tolerance, exit 3.
    let out = hexatlas(&["teich", "limit", "--seq", "a=1;b=1;c=1/n"]);
    assert_eq!(code(&out), 3);
    let text = stdout(&out);
    assert!(text.contains("witness: gamma,A,B"), "{text}");
}

#[test]
fn teich_limit_parse_error() {
    let out = hexatlas(&["teich", "limit", "--seq", "a=n^2;b=n;c=n"]);
    assert_eq!(code(&out), 64);
}

#[test]
fn teich_limit_trace_rows() {
    let out = hexatlas(&[
        "teich", "limit", "--seq", "a=n;b=n;c=n", "--trace", "--format", "csv", "--nmax", "12",
        "--tol", "1e-3",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n,a,b,c,A,B,C,alpha,beta,gamma,na,nb,nc,nA,nB,nC"
    );
    assert_eq!(lines.count(), 12);
}

#[test]
fn teich_embed_hexagon_and_foliation() {
    let out = hexatlas(&[
        "teich", "embed", "--triple", "a,b,c", "--lengths", "1,1,1", "--format", "json",
    ]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["kind"], "hexagon");
    let values = v["embed"].as_array().unwrap();
    assert!(values.iter().all(|x| x.as_f64().unwrap() > 0.0));

    let out = hexatlas(&["teich", "embed", "--weights", "gamma=5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["kind"], "foliation");
    let values = v["embed"].as_array().unwrap();
    assert!(values.iter().any(|x| x.as_f64().unwrap() == 0.0));
}

#[test]
fn pants_double_unit_hexagon() {
    let out = hexatlas(&[
        "pants", "double", "--triple", "a,b,c", "--lengths", "1,1,1", "--format", "json",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), r#"{"cuffs":[2.0,2.0,2.0]}"#);
}

#[test]
fn outputs_are_byte_deterministic() {
    for args in [
        vec!["hexagon", "solve", "--triple", "a,b,c", "--lengths", "0.7,1.9,2.3", "--format", "json"],
        vec!["foliation", "chart", "--triple", "alpha,b,c", "--coords", "3,2,1", "--format", "json"],
        vec!["teich", "limit", "--seq", "a=n;b=n;c=2*n", "--format", "json"],
        vec!["atlas", "export", "--format", "json"],
    ] {
        let first = hexatlas(&args);
        let second = hexatlas(&args);
        assert_eq!(first.stdout, second.stdout, "{args:?}");
        assert_eq!(code(&first), code(&second));
    }
}
