use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crossfree"))
        .args(args)
        .env_remove("CROSSFREE_GUARD_OVERRIDE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn json(o: &Output) -> Value {
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).expect("json output")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("crossfree-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn count_csv_reproduces_the_last_table_row() {
    let o = run(&["count", "--class", "ncp", "--n-max", "11", "--format", "csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("n,value"));
    assert_eq!(text.lines().last(), Some("11,1391820"));
    let o = run(&["count", "--class", "ordered", "--n-max", "11", "--format", "json"]);
    let v = json(&o);
    assert_eq!(v["values"][11], "281917");
}

#[test]
fn asymptotics_reports_the_ordered_growth() {
    let v = json(&run(&["asymptotics", "eq22", "--format", "json"]));
    let growth = v["growth"].as_f64().unwrap();
    assert!((growth - 4.642126305).abs() < 1e-8, "{growth}");
    assert!(v["assumption"].as_str().unwrap().contains("Bender"));
    let catalan = json(&run(&["asymptotics", "[[0,0,1],[0,1,-1],[1,2,1]]"]));
    assert!((catalan["growth"].as_f64().unwrap() - 4.0).abs() < 1e-9);
    assert!((catalan["s"].as_f64().unwrap() - 2.0).abs() < 1e-6);
}

#[test]
fn verify_quick_succeeds() {
    let o = run(&["verify", "--quick"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.lines().all(|l| l.starts_with("PASS")), "{text}");
    assert!(text.lines().count() >= 10);
}

#[test]
fn tables_print_pass_for_every_row() {
    let o = run(&["tables"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.matches("PASS").count(), 11);
    assert!(!text.contains("FAIL"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["count", "--n-max", "3", "--no-such-flag"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "--class", "ordered2", "--variant", "Q", "--n", "4"]).status.code(), Some(2));
    assert_eq!(run(&["optimize", "--beta", "0.5"]).status.code(), Some(2));
    assert_eq!(run(&["construct", "decompose", "--input", "{\"n_upper\":2}"]).status.code(), Some(2));

    let guard = run(&["enumerate", "--class", "ncp", "--n", "40"]);
    assert_eq!(guard.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&guard.stderr).contains("CROSSFREE_GUARD_OVERRIDE"));
    assert_eq!(run(&["construct", "count-polygonizations", "--n", "9", "--m", "9"]).status.code(), Some(3));

    assert_eq!(run(&["asymptotics", "[[0,0,1],[1,0,-1]]"]).status.code(), Some(2));
    // w^2 = 1 + z has a positive discriminant on all of (0, 1).
    assert_eq!(run(&["asymptotics", "[[0,2,1],[0,0,-1],[1,0,-1]]"]).status.code(), Some(1));
}

#[test]
fn enumerate_summary_and_stream() {
    let v = json(&run(&["enumerate", "--class", "ordered", "--n", "5"]));
    assert_eq!(v["total"], "77");
    assert_eq!(v["class"], "ordered");
    assert_eq!(v["by_path_count"]["5"], "1");

    let o = run(&["enumerate", "--class", "ncpws", "--n", "6", "--jsonl"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 128);
    for line in text.lines() {
        let p: Value = serde_json::from_str(line).unwrap();
        assert_eq!(p["n"], 6);
    }
    let summary: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(summary["total"], "128");

    let g = json(&run(&["enumerate", "--class", "ordered2", "--variant", "A", "--n", "6", "--growth"]));
    assert_eq!(g["exploratory"], true);
    assert_eq!(g["rows"][5]["count"], "163");
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        &["enumerate", "--class", "ordered", "--n", "7", "--jsonl"][..],
        &["asymptotics", "eq8"],
        &["optimize", "--beta", "4.610718614", "--gamma", "1+sqrt2", "--c", "0.5"],
        &["construct", "ab-family", "--i", "4"],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn optimize_accepts_silver_ratio() {
    let v = json(&run(&["optimize", "--beta", "4.610718614", "--gamma", "1+sqrt2", "--c", "0.5"]));
    assert!((v["alpha_star"].as_f64().unwrap() - 0.25205209).abs() < 1e-5);
    assert!((v["growth_per_point"].as_f64().unwrap() - 6.164492582).abs() < 1e-6);
}

#[test]
fn construct_round_trip_through_files() {
    let path = scratch("path.json");
    let poly = scratch("poly.json");
    let svg = scratch("poly.svg");
    let o = run(&[
        "construct",
        "hamiltonian",
        "--upper",
        r#"{"n":3,"paths":[[1,2],[3]]}"#,
        "--lower",
        r#"{"n":3,"paths":[[1],[2,3]]}"#,
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let o = run(&[
        "construct",
        "close",
        "--input",
        path.to_str().unwrap(),
        "--out",
        poly.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(std::fs::read_to_string(&svg).unwrap().starts_with("<svg"));

    let d = json(&run(&["construct", "decompose", "--input", poly.to_str().unwrap()]));
    let k = d["k"].as_u64().unwrap();
    assert_eq!(d["upper"]["n"], 5);
    assert_eq!(d["lower"]["n"], 5);

    let upper = d["upper"].to_string();
    let lower = d["lower"].to_string();
    let c = json(&run(&["construct", "compose", "--upper", &upper, "--lower", &lower]));
    assert_eq!(c["status"], "Polygonization");
    let closed: Value = serde_json::from_str(&std::fs::read_to_string(&poly).unwrap()).unwrap();
    assert_eq!(c["graph"], closed);
    assert_eq!(c["graph"]["edges"].as_array().unwrap().len(), 10);
    assert!(k >= 1);

    let counts = json(&run(&["construct", "count-polygonizations", "--n", "3", "--m", "4"]));
    assert_eq!(counts["exact"], counts["geometric"]);
    assert_eq!(counts["exact"], "44");

    let fam = json(&run(&["construct", "ab-family", "--i", "5", "--counts-only"]));
    assert_eq!((fam["a"].as_u64(), fam["b"].as_u64()), (Some(17), Some(24)));
}

#[test]
fn render_emits_svg() {
    for args in [
        &["render", "--realization", "3,4"][..],
        &["render", "--partition", r#"{"n":5,"paths":[[1,2,3],[4],[5]]}"#],
        &["render", "--graph", r#"{"n_upper":2,"n_lower":2,"edges":[[1,2],[2,4],[3,4],[1,3]]}"#],
    ] {
        let o = run(args);
        assert!(o.status.success(), "{args:?}");
        let text = stdout(&o);
        assert!(text.starts_with("<svg") && text.trim_end().ends_with("</svg>"));
    }
    assert_eq!(run(&["render"]).status.code(), Some(2));
    assert_eq!(run(&["render", "--realization", "3"]).status.code(), Some(2));
}
