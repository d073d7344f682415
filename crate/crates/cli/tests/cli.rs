use std::fs;
use std::process::{Command, Output};

fn binedge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_binedge")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn construct(family: &str, params: &str) -> String {
    let out = binedge(&["construct", "--family", family, "--params", params]);
    assert!(out.status.success());
    stdout(&out).trim().to_string()
}

#[test]
fn construct_prints_graph6_or_edges() {
    assert_eq!(construct("fm", "2"), "Ch");
    let out = binedge(&["construct", "--family", "hi", "--params", "1,1,1", "--edges"]);
    assert_eq!(stdout(&out).trim(), "3; 1 3; 2 3");
    let bad = binedge(&["construct", "--family", "hi", "--params", "1,2"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn classify_json_for_g1() {
    let word = construct("g1", "1");
    let out = binedge(&["classify", "--graph6", &word, "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["CM"], true);
    assert_eq!(v["pseudo_gorenstein"], true);
    assert_eq!(v["level"], false);
    assert_eq!(v["reg"], 3);
    assert_eq!(v["engine"], "monomial");
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["name"] == "pg-reg3"));
    assert!(checks.iter().all(|c| c["status"]["status"] == "ok"));
}

#[test]
fn classify_exact_engine_and_text_output() {
    let out = binedge(&["classify", "--graph6", "Bw", "--engine", "exact"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("engine: exact"));
    assert!(text.contains("reg: 1"));
    assert!(text.contains("level: true"));
}

#[test]
fn classify_reads_files_and_is_deterministic() {
    let dir = std::env::temp_dir().join(format!("binedge-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join("graphs.txt");
    fs::write(&path, "# two graphs\nCh\n\n4; 1 2; 2 3; 3 4; 4 1\n").unwrap();
    let p = path.to_str().unwrap();
    let a = binedge(&["classify", "--file", p, "--json"]);
    let b = binedge(&["classify", "--file", p, "--json"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let lines: Vec<serde_json::Value> = stdout(&a).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0]["gorenstein"], true);
    assert_eq!(lines[1]["CM"], false);
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn classify_rejects_bad_input() {
    assert_eq!(binedge(&["classify", "--graph6", "!!"]).status.code(), Some(1));
    assert_eq!(binedge(&["classify", "--graph6", "Bw", "--char", "4"]).status.code(), Some(1));
    assert_eq!(binedge(&["classify", "--graph6", "BO"]).status.code(), Some(1));
}

#[test]
fn enumerate_counts() {
    let all = stdout(&binedge(&["enumerate", "--n", "5"]));
    assert_eq!(all.lines().count(), 21);
    let indec = stdout(&binedge(&["enumerate", "--n", "5", "--indecomposable"]));
    assert!(indec.lines().count() < 21);
    assert!(indec.lines().all(|l| all.lines().any(|m| m == l)));
    assert_eq!(binedge(&["enumerate", "--n", "9"]).status.code(), Some(1));
}

#[test]
fn table1_with_database() {
    let dir = std::env::temp_dir().join(format!("binedge-table-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let db = dir.join("db.jsonl");
    let csv = dir.join("db.csv");
    let out = binedge(&["table1", "--max-n", "5", "--database", db.to_str().unwrap(), "--csv", csv.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("Cohen-Macaulay"));
    assert!(text.contains("published: 1 1 1 2"));
    let records = fs::read_to_string(&db).unwrap();
    assert!(records.lines().all(|l| serde_json::from_str::<serde_json::Value>(l).is_ok()));
    let rows = fs::read_to_string(&csv).unwrap();
    assert_eq!(rows.lines().count(), records.lines().count() + 1);
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn matroid_and_socle() {
    let out = stdout(&binedge(&["matroid", "--graph6", "Bw"]));
    assert_eq!(out.trim(), "not a matroid: F = {x1,x2,x3,y1}, F' = {x3,y1,y2,y3}, i = x2");
    let path = construct("fm", "2");
    assert_eq!(stdout(&binedge(&["matroid", "--graph6", &path])).trim(), "matroid");
    let check = binedge(&["matroid", "--max-n", "4"]);
    assert!(check.status.success());
    assert!(stdout(&check).contains("graphs checked: 9"));
    let soc = stdout(&binedge(&["socle", "--m", "3"]));
    assert!(soc.contains("x1*x2*x3 (degree 3)"));
    assert!(soc.lines().filter(|l| l.contains("(degree")).all(|l| l.ends_with("(degree 3)")));
}

#[test]
fn betti_table_output() {
    let out = stdout(&binedge(&["betti", "--graph6", "Bw"]));
    assert_eq!(out, "       0 1 2\ntotal: 1 3 2\n    0: 1 . .\n    1: . 3 2\n");
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&binedge(&["betti", "--graph6", "Bw", "--json"]))).unwrap();
    assert_eq!(json.as_array().unwrap().len(), 3);
}

#[test]
fn closed_stdout_is_not_an_error() {
    use std::io::{BufRead, BufReader};
    use std::process::Stdio;
    // n = 8 prints far more than a pipe buffer holds.
    let mut child = Command::new(env!("CARGO_BIN_EXE_binedge"))
        .args(["enumerate", "--n", "8"])
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut first = String::new();
    BufReader::new(child.stdout.take().unwrap()).read_line(&mut first).unwrap();
    assert_eq!(first.trim(), "G???F{");
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert!(out.stderr.is_empty());
}
