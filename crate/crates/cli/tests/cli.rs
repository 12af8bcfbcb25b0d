use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hyperconn"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn fixture(name: &str, format: &str) -> String {
    let out = run(&["fixture", name, "--emit", format], None);
    assert!(out.status.success());
    stdout(&out)
}

#[test]
fn psi_of_c4_from_stdin() {
    let out = run(&["psi", "-"], Some(&fixture("c4", "text")));
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("psi = 1\n"), "{text}");
    assert!(text.contains("argmax edge: {"));
}

#[test]
fn psi_reads_json_files() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("c5.json");
    std::fs::write(&file, fixture("c5", "json")).unwrap();
    let out = run(&["psi", file.to_str().unwrap()], None);
    assert!(stdout(&out).starts_with("psi = 2\n"));
}

#[test]
fn acyclic_fixture_has_no_homology() {
    let out = run(&["homology", "-", "--complex"], Some(&fixture("lutz-acyclic", "text")));
    assert!(out.status.success());
    let text = stdout(&out);
    for line in text.lines().skip(1).take_while(|l| !l.starts_with("conn_h")) {
        let cols: Vec<&str> = line.split_whitespace().collect();
        assert_eq!(cols.get(1), Some(&"0"), "{line}");
        assert_eq!(cols.len(), 2, "unexpected torsion: {line}");
    }
    assert!(text.contains("conn_h = inf"), "{text}");
}

#[test]
fn conn_reports_every_bound() {
    let out = run(&["conn", "-"], Some(&fixture("c5", "text")));
    let text = stdout(&out);
    for row in ["conn_h", "psi", "k", "epsilon", "degree bound"] {
        assert!(text.lines().any(|l| l.starts_with(row)), "{row} missing from {text}");
    }
}

#[test]
fn distance_prints_a_chain() {
    let out = run(&["distance", "-", "1,2", "4,5"], Some(&fixture("path(5)", "text")));
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("dist = 3\n"), "{text}");
    assert!(text.contains("-[2]->") && text.contains("-[4]->"), "{text}");
}

#[test]
fn checks_and_homotopy_type() {
    let c5 = fixture("c5", "text");
    let out = run(&["check", "-", "--triangulated"], Some(&c5));
    assert!(stdout(&out).starts_with("triangulated: no"));
    let path = fixture("path(4)", "text");
    let out = run(&["check", "-", "--properly-connected"], Some(&path));
    assert!(stdout(&out).starts_with("properly-connected: yes"));
    let out = run(&["homotopy-type", "-"], Some(&path));
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("homotopy type: contractible"), "{}", stdout(&out));
}

#[test]
fn verify_is_reproducible() {
    let args = ["verify", "--seed", "7", "--samples", "20", "--max-vertices", "6", "--json"];
    let first = run(&args, None);
    assert_eq!(first.status.code(), Some(0), "{}", String::from_utf8_lossy(&first.stderr));
    let second = run(&args, None);
    assert_eq!(stdout(&first), stdout(&second));
    let report: serde_json::Value = serde_json::from_str(&stdout(&first)).unwrap();
    assert_eq!(report["seed"], 7);
    assert!(report["first_counterexample"].is_null());
}

#[test]
fn exit_codes() {
    let missing = run(&["psi", "/nonexistent/file"], None);
    assert_eq!(missing.status.code(), Some(1));
    let malformed = run(&["psi", "-"], Some("1 2\n1\n"));
    assert_eq!(malformed.status.code(), Some(2));
    let budget = run(&["psi", "-", "--budget", "1"], Some(&fixture("complete(6,3)", "text")));
    assert_eq!(budget.status.code(), Some(3));
    let not_uniform = run(&["homotopy-type", "-"], Some("1 2\n2 3 4\n"));
    assert_eq!(not_uniform.status.code(), Some(5));
    let suite = run(&["verify", "--suite", "nonsense"], None);
    assert_eq!(suite.status.code(), Some(2));
}
