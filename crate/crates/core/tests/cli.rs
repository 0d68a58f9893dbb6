use std::fs;
use std::process::{Command, Output};

fn twoweight(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twoweight"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn analyze_binary_c0_s3() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("report.json");
    let o = twoweight(&["analyze", "--p", "2", "--e", "1", "--s", "3", "--c", "0", "--json", json.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = fs::read_to_string(&json).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["length"]["computed"], 27);
    assert_eq!(v["dimension"], 6);
    assert_eq!(v["weights"][0]["w"], 12);
    assert_eq!(v["weights"][0]["count_bruteforce"], 36);
    assert_eq!(v["weights"][1]["w"], 16);
    assert_eq!(v["weights"][1]["count_bruteforce"], 27);
    assert_eq!(v["dual"]["k_dual"], 21);
    assert_eq!(v["dual"]["d_dual"], 3);
    assert_eq!(v["minimal"]["holds"], true);
    let keys = ["params", "length", "dimension", "weights", "theorem7_match", "dual", "projective", "minimal", "srg"];
    assert_eq!(v.as_object().unwrap().len(), keys.len());
    let pos: Vec<usize> = keys
        .iter()
        .map(|k| text.find(&format!("\n  \"{k}\":")).unwrap())
        .collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn analyze_exports() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.txt");
    let set = dir.path().join("d.txt");
    let matrix = dir.path().join("m.txt");
    let o = twoweight(&[
        "analyze", "--p", "2", "--e", "1", "--s", "2", "--c", "1",
        "--emit-graph", graph.to_str().unwrap(),
        "--emit-set", set.to_str().unwrap(),
        "--emit-matrix", matrix.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("projective: true"));
    let g = fs::read_to_string(&graph).unwrap();
    assert!(g.starts_with("16 10\n"));
    assert_eq!(g.lines().count(), 81);
    let d = fs::read_to_string(&set).unwrap();
    assert_eq!(d.lines().next(), Some("2 1 2 1 10"));
    assert_eq!(fs::read_to_string(&matrix).unwrap().lines().count(), 4);

    let o = twoweight(&["analyze", "--p", "2", "--e", "1", "--s", "2", "--c", "0", "--emit-set", set.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let d = fs::read_to_string(&set).unwrap();
    let mut lines = d.lines();
    assert_eq!(lines.next(), Some("2 1 2 0 5"));
    assert_eq!(lines.count(), 5);
}

#[test]
fn graph_export_needs_projective_code() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.txt");
    let o = twoweight(&["analyze", "--p", "3", "--e", "1", "--s", "2", "--c", "1", "--emit-graph", graph.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!graph.exists());
}

#[test]
fn invalid_input_exits_2() {
    let o = twoweight(&["analyze", "--p", "2", "--e", "1", "--s", "1", "--c", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("empty defining set: c = 0 requires s > 1"));
    assert_eq!(twoweight(&["analyze", "--p", "4", "--e", "1", "--s", "1", "--c", "1"]).status.code(), Some(2));
    assert_eq!(twoweight(&["analyze", "--p", "2", "--e", "13", "--s", "1", "--c", "1"]).status.code(), Some(2));
    assert_eq!(twoweight(&["analyze", "--p", "3", "--e", "1", "--s", "1", "--c", "3"]).status.code(), Some(2));
    assert_eq!(twoweight(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn reference_row_flagged() {
    let o = twoweight(&["analyze", "--p", "2", "--e", "2", "--s", "2", "--c", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("reference row [64, 4, 48], computed [68, 4, 48]"), "{out}");
}

#[test]
fn sweep_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let o = twoweight(&["sweep", "--max-size", "256", "--threads", "1", "--json", a.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("all PASS"));
    let o = twoweight(&["sweep", "--max-size", "256", "--threads", "4", "--json", b.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    let v: serde_json::Value = serde_json::from_slice(&fs::read(&a).unwrap()).unwrap();
    let cases = v["cases"].as_array().unwrap();
    assert!(cases.iter().any(|c| c["c_index"] == 0));
    assert!(cases.iter().all(|c| c["passed"] == true));
}

#[test]
fn charsums_subcommand() {
    let o = twoweight(&["charsums", "--p", "3", "--e", "1", "--s", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for name in ["gauss-square[q]", "quadratic-sum[q]", "delta", "s_c"] {
        assert!(out.contains(name), "{out}");
    }
    assert!(!out.contains("FAIL"));
}
