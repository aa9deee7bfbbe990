use std::path::PathBuf;
use std::process::Command;

fn run(args: &[&str]) -> (i32, String) {
    run_env(args, &[])
}

fn run_env(args: &[&str], env: &[(&str, &str)]) -> (i32, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_chaingroup"));
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn scratch(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("chaingroup-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn braid_equality() {
    let (code, out) = run(&["braid", "eq", "--n", "3", "1 2 1", "2 1 2"]);
    assert_eq!(code, 0);
    assert!(out.lines().next() == Some("equal"));
    assert!(out.contains("check=word-equality"));
    let (code, out) = run(&["braid", "eq", "--n", "3", "-1 2", "2 -1"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("not-equal"));
}

#[test]
fn braid_words() {
    let (code, out) = run(&["braid", "garside", "--n", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("word=n=3 1 2 1"));
    let (_, out) = run(&["braid", "gen", "--n", "6", "--k", "7"]);
    assert!(out.contains("word=n=6 1\n"));
    let (code, _) = run(&["braid", "central", "--n", "3", "1 2 1 1 2 1"]);
    assert_eq!(code, 0);
    let (code, _) = run(&["braid", "central", "--n", "3", "1 2 1"]);
    assert_eq!(code, 1);
    let (_, out) = run(&["braid", "exp", "--n", "4", "1 -2 3 3"]);
    assert!(out.contains("exponent=2"));
}

#[test]
fn quotient_order_prints_the_computed_value() {
    let (code, out) = run(&["ln", "card", "--r", "3", "--M", "3", "--m", "3", "--d", "3", "--s", "9"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("27"));
    let (code, out) = run(&["ln", "card", "--r", "2", "--M", "3", "--m", "3", "--d", "3", "--s", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("9"));
    let (code, _) = run(&["ln", "validate", "--r", "3", "--M", "4", "--m", "3", "--d", "3", "--s", "3"]);
    assert_eq!(code, 1);
    let (code, _) = run(&["ln", "card", "--r", "3", "--M", "4", "--m", "3", "--d", "3", "--s", "3"]);
    assert_eq!(code, 2);
}

#[test]
fn branching_check() {
    let (code, out) = run(&["rh", "check", "--chi", "-4", "--m", "8", "--branch", "4", "--chiq", "1"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("infeasible"));
    let (code, _) = run(&["rh", "check", "--chi", "-4", "--m", "2", "--chiq", "-2"]);
    assert_eq!(code, 0);
    let (code, out) = run(&["rh", "enum", "--chi", "-4", "--m", "8", "--chiq", "1,-1,-3", "--max-points", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("count=0"));
    let (_, out) = run(&["rh", "bounds", "--g", "1", "--b", "4"]);
    assert!(out.contains("genus1_max=2"));
    let (code, _) = run(&["rh", "image-audit", "--r", "3", "--m", "3", "--d", "3"]);
    assert_eq!(code, 0);
}

#[test]
fn homomorphism_files() {
    let good = scratch("incl.hom", "n=3 m=4\n1 : 1\n2 : 2\n");
    let (code, _) = run(&["hom", "verify", good.to_str().unwrap()]);
    assert_eq!(code, 0);
    let bad = scratch("bad.hom", "n=3 m=4\n1 : 1\n2 : 3\n");
    let (code, _) = run(&["hom", "verify", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    let (code, _) = run(&["hom", "cyclic", good.to_str().unwrap()]);
    assert_eq!(code, 1);
    let (code, out) = run(&["hom", "cable", "--k", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("half_twist=pass"));
    let (code, out) = run(&["hom", "twist", "--n", "6", "--gamma", "1 -3 5", "--eps", "-1", "--k", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("cyclic=false"));
}

#[test]
fn homology_round_trip_through_files() {
    let (code, out) = run(&["homology", "rep", "--g", "2", "--k", "5"]);
    assert_eq!(code, 0);
    let body: String = out.lines().filter(|l| !l.starts_with("check=")).map(|l| format!("{l}\n")).collect();
    let path = scratch("rep.txt", &body);
    let (code, out) = run(&["homology", "extract", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("result=triple"));
    assert!(out.contains("epsilon=1"));
    let (code, out) = run(&["homology", "square", "--g", "2", "--k", "5"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("rank=4"));
}

#[test]
fn graph_commands() {
    let (code, out) = run(&["graph", "generate", "--m", "12", "B", "3", "4", "1"]);
    assert_eq!(code, 0);
    let body: String = out.lines().filter(|l| !l.starts_with("check=")).map(|l| format!("{l}\n")).collect();
    let path = scratch("b341.graph", &body);
    let (code, out) = run(&["graph", "classify", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("class=(B k=3 l=4 d=1)"));
    let (code, _) = run(&["graph", "audit", path.to_str().unwrap(), "--genus", "6", "--b", "0"]);
    assert_eq!(code, 0);
    let (code, _) = run(&["graph", "audit", path.to_str().unwrap(), "--genus", "6", "--b", "1"]);
    assert_eq!(code, 1);
    let (code, out) = run(&["graph", "brute", "--m", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("count=3"));
    let (code, _) = run(&["graph", "brute", "--m", "9"]);
    assert_eq!(code, 2);
}

#[test]
fn permutation_budget() {
    let (code, out) = run(&["perm", "enum", "--n", "4", "--k", "3", "--dedup"]);
    assert_eq!(code, 0);
    assert!(out.contains("tag=noncyclic"));
    let (code, _) = run_env(&["perm", "enum", "--n", "6", "--k", "5"], &[("CHAINGROUP_BUDGET", "100")]);
    assert_eq!(code, 3);
    let (code, _) = run_env(&["perm", "enum", "--n", "6", "--k", "3"], &[("CHAINGROUP_BUDGET", "lots")]);
    assert_eq!(code, 2);
}

#[test]
fn suites() {
    for name in ["identities", "table1", "graphs", "perm", "rh"] {
        let (code, out) = run(&["suite", name]);
        assert_eq!(code, 0, "{name}: {out}");
        assert!(!out.contains("result=fail"));
    }
    let (code, _) = run(&["suite", "nope"]);
    assert_eq!(code, 2);
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["braid", "eq", "--n", "3", "1 x", "1"]).0, 2);
    assert_eq!(run(&["braid", "eq", "1", "1"]).0, 2);
    assert_eq!(run(&["hom", "verify", "/nonexistent/file"]).0, 2);
}
