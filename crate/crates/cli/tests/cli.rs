use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_chromatopo"));
    c.env_remove("CHROMATOPO_SIZE_CAPS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn write_tmp(name: &str, text: &str) -> PathBuf {
    let p = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&p, text).expect("temp file");
    p
}

fn trimmed_betti(summary: &str) -> Vec<u64> {
    let v: serde_json::Value = serde_json::from_str(summary).unwrap();
    let mut b: Vec<u64> = v["reduced_betti"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
    while b.last() == Some(&0) {
        b.pop();
    }
    b
}

const K3: &str = "p 3\ne 0 1\ne 1 2\ne 2 0\n";
const C5: &str = "p 5\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 4 0\n";

#[test]
fn bounds_on_triangle_as_json() {
    let g = write_tmp("k3.txt", K3);
    let o = run(&["bounds", g.to_str().unwrap(), "--json"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["chi"], 3);
    assert_eq!(v["conn_b0"], 1);
    assert_eq!(v["violations"], serde_json::json!([]));
}

#[test]
fn bounds_csv_has_header_and_one_row() {
    let g = write_tmp("k3_csv.txt", K3);
    let o = run(&["bounds", g.to_str().unwrap(), "--csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("omega,chi,"));
    assert!(lines[1].starts_with("3,3,"));
}

#[test]
fn lambda_map_for_d1_has_six_lines() {
    let o = run(&["map", "--lambda", "1"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 6);
    assert!(text.lines().all(|l| l.contains(" -> ")));
}

#[test]
fn complex_output_round_trips_through_homology() {
    let g = write_tmp("c5.txt", C5);
    for kind in ["b", "b0", "n", "hom"] {
        let facets = run(&["complex", "--kind", kind, g.to_str().unwrap()]);
        assert!(facets.status.success());
        let k = write_tmp(&format!("c5_{kind}.facets"), &stdout(&facets));
        for ring in ["gf2", "z"] {
            let direct = run(&["homology", "--ring", ring, "--kind", kind, g.to_str().unwrap()]);
            let reread = run(&["homology", "--ring", ring, k.to_str().unwrap()]);
            assert!(direct.status.success() && reread.status.success());
            assert_eq!(stdout(&direct), stdout(&reread), "kind {kind}, ring {ring}");
        }
    }
}

#[test]
fn output_is_byte_identical_across_runs() {
    let g = write_tmp("c5_det.txt", C5);
    for args in [
        vec!["bounds", g.to_str().unwrap(), "--json"],
        vec!["complex", "--kind", "b0", g.to_str().unwrap()],
        vec!["verify", "--suite", "products", "--json"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn csorba_output_is_a_graph_with_labels() {
    let g = write_tmp("k3_csorba.txt", K3);
    let facets = run(&["complex", "--kind", "b", g.to_str().unwrap()]);
    let k = write_tmp("bk3.facets", &stdout(&facets));
    let o = run(&["csorba", k.to_str().unwrap()]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.starts_with("p ")));
    assert!(text.lines().any(|l| l.starts_with("c v 0 ")));
    let back = write_tmp("csorba_k3.txt", &text);
    let h = run(&["homology", "--ring", "z", "--kind", "b", back.to_str().unwrap()]);
    let orig = run(&["homology", "--ring", "z", k.to_str().unwrap()]);
    assert_eq!(trimmed_betti(&stdout(&h)), trimmed_betti(&stdout(&orig)));
}

#[test]
fn verify_examples_passes() {
    let o = run(&["verify", "--suite", "examples"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains(" 0 failed"));
}

#[test]
fn parse_errors_exit_1() {
    let bad = write_tmp("loop.txt", "p 2\ne 0 0\n");
    let o = run(&["bounds", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(run(&["bounds", "--no-such-flag", "x"]).status.code(), Some(1));
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(1));
    let missing = run(&["complex", "--kind", "b", "/nonexistent/graph.txt"]);
    assert_eq!(missing.status.code(), Some(1));
}

#[test]
fn size_caps_exit_2_and_still_report() {
    let g = write_tmp("k3_caps.txt", K3);
    let o = bin().args(["bounds", g.to_str().unwrap(), "--json"]).env("CHROMATOPO_SIZE_CAPS", "chi=2").output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["chi"], "skipped:size");
    let bad = bin().args(["bounds", g.to_str().unwrap()]).env("CHROMATOPO_SIZE_CAPS", "chi").output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn stdin_input() {
    use std::io::Write;
    let mut child = bin()
        .args(["complex", "--kind", "b", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"p 2\ne 0 1\n").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(stdout(&o), "-1,+2\n+1,-2\n");
}
