use std::io::Write;
use std::process::{Command, Output};

use tempfile::NamedTempFile;

fn graph_file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_binedge")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(f: &NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

const C4: &str = "1 2\n2 3\n3 4\n4 1\n";
const C5: &str = "1 2\n2 3\n3 4\n4 5\n5 1\n";
const STAR_OF_TRIANGLE: &str = "n 6\n1 3\n2 3\n3 4\n3 5\n3 6\n4 5\n4 6\n5 6\n";

#[test]
fn recognize_exit_codes() {
    let c4 = graph_file(C4);
    let out = run(&["recognize", "--graph", path(&c4), "--mode", "weakly-closed"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "[1,2,3,4]\n");
    let out = run(&["recognize", "--graph", path(&c4), "--mode", "closed"]);
    assert_eq!(out.status.code(), Some(1));

    let c5 = graph_file(C5);
    let out = run(&["recognize", "--graph", path(&c5), "--mode", "weakly-closed"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "none\n");

    let bad = graph_file("1 2\n3 3\n");
    let out = run(&["recognize", "--graph", path(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let out = run(&["recognize", "--graph", "/nonexistent/graph.txt"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn decompose_worked_example() {
    let g = graph_file(STAR_OF_TRIANGLE);
    let out = run(&["decompose", "--graph", path(&g)]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("S = {3}: (x3, y3, I_2(X[4,6]))"), "{text}");
    assert!(text.contains("S = {}: (I_2(X[1,6]))"));
    assert!(text.contains("intersection equals the ideal: yes"));

    let a = run(&["--json", "decompose", "--graph", path(&g)]);
    let b = run(&["decompose", "--graph", path(&g), "--json"]);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["decomposition_verified"], true);
    assert_eq!(v["minimal_primes"][1]["S"], serde_json::json!([3]));
    assert_eq!(
        v["minimal_primes"][1]["intervals"],
        serde_json::json!([[1, 1], [2, 2], [4, 6]])
    );
    assert!(v["tool"].as_str().unwrap().starts_with("binedge "));
    assert!(v["term_order"].as_str().unwrap().starts_with("DiagonalLex"));
}

#[test]
fn decompose_without_requested_labeling() {
    let c5 = graph_file(C5);
    let out = run(&["decompose", "--graph", path(&c5), "--labeling", "weakly-closed"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_suites() {
    let out = run(&["verify", "decomposition", "--nmax", "4"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let out = run(&["verify", "psps", "--nmax", "5"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let out = run(&["verify", "knutson", "--nmax", "4", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["summary"]["failed"], 0);

    // The interval rule and the Gröbner property part ways on graphs with
    // an isolated vertex inside an edge's span.
    let out = run(&["verify", "gb-closed", "--nmax", "4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("failed 222"));

    assert_eq!(run(&["verify", "knutson", "--nmax", "12"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "nothing", "--nmax", "3"]).status.code(), Some(2));
}

#[test]
fn knutson_registry_is_deterministic() {
    let args = ["knutson", "--n", "2", "--depth", "2", "--json"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["all_shape_checks_pass"], true);
    assert_eq!(v["truncated"], false);
    assert_eq!(v["entries"][0]["derivation"], serde_json::json!({ "seed": "(f)" }));

    let out = run(&["knutson", "--n", "2", "--depth", "2", "--check"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("replay and radical checks: all pass"));

    let out = run(&["knutson", "--n", "3", "--depth", "3", "--max-ideals", "10"]);
    assert!(stdout(&out).contains("(truncated)"));
    assert_eq!(run(&["knutson", "--n", "7"]).status.code(), Some(2));
}

#[test]
fn fpure_reports() {
    let k2 = graph_file("1 2\n");
    let out = run(&["fpure", "--graph", path(&k2), "--p", "2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["verdict"], "F-pure");
    assert_eq!(v["p"], 2);
    assert_eq!(v["graph"]["edges"], serde_json::json!([[1, 2]]));

    assert_eq!(run(&["fpure", "--graph", path(&k2), "--p", "4"]).status.code(), Some(2));
    let c5 = graph_file(C5);
    assert_eq!(run(&["fpure", "--graph", path(&c5), "--p", "2"]).status.code(), Some(2));
}

#[test]
fn certify_and_replay() {
    let c4 = graph_file(C4);
    let out = run(&["certify", "--graph", path(&c4), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let cert = graph_file(&stdout(&out));
    let out = run(&["replay", "--certificate", path(&cert)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "replay: ok\n");

    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(cert.path()).unwrap()).unwrap();
    v["root"]["children"][0]["seed"] = serde_json::json!("I_2(X[1,3])");
    let tampered = graph_file(&v.to_string());
    assert_eq!(
        run(&["replay", "--certificate", path(&tampered)]).status.code(),
        Some(1)
    );

    let junk = graph_file("{ not json");
    assert_eq!(run(&["replay", "--certificate", path(&junk)]).status.code(), Some(2));

    let c5 = graph_file(C5);
    let out = run(&["certify", "--graph", path(&c5)]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "refused: no weakly closed labeling\n");
}
