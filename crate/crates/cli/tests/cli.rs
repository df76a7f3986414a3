use std::io::Write;
use std::process::{Command, Output, Stdio};

const P3: &str = "a b\nb c\n";
const C4: &str = "a b\nb c\nc d\nd a\n";

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_jetgraph"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout_of(args: &[&str], stdin: &str) -> String {
    let out = run(args, stdin);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn covers_text_and_json() {
    assert_eq!(stdout_of(&["covers"], P3), "{b}\n{a, c}\n");
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&["covers", "--format", "structured"], P3)).unwrap();
    assert_eq!(json["covers"], serde_json::json!([["b"], ["a", "c"]]));
}

#[test]
fn jets_graph_and_ideals() {
    assert_eq!(
        stdout_of(&["jets-graph", "-s", "1"], P3),
        "a.0 b.0\na.0 b.1\na.1 b.0\nb.0 c.0\nb.0 c.1\nb.1 c.0\n"
    );
    assert_eq!(
        stdout_of(&["jets-ideal", "-s", "1"], P3),
        "vars: a.0 a.1 b.0 b.1 c.0 c.1\na.0*b.0\nb.0*c.0\na.1*b.0 + a.0*b.1\nb.1*c.0 + b.0*c.1\n"
    );
    let pc = stdout_of(&["pc", "-s", "1"], P3);
    assert_eq!(pc.lines().count(), 1 + 2 * 4);
    assert_eq!(stdout_of(&["pc", "-s", "1", "--route", "intersection"], P3), pc);
}

#[test]
fn multiple_orders_are_labelled() {
    let out = stdout_of(&["jets-graph", "-s", "0,1"], "x y\n");
    assert_eq!(out, "-- s = 0\nx.0 y.0\n-- s = 1\nx.0 y.0\nx.0 y.1\nx.1 y.0\n");
}

#[test]
fn chordality() {
    assert_eq!(stdout_of(&["chordal"], P3), "chordal: yes\n");
    let out = stdout_of(&["chordal"], C4);
    assert!(out.starts_with("chordal: no\nchordless cycle: "), "{out}");
    assert_eq!(out.lines().nth(1).unwrap().split_whitespace().count(), 2 + 4);
}

#[test]
fn betti_layout() {
    let k32 = "x1 x4\nx1 x5\nx2 x4\nx2 x5\nx3 x4\nx3 x5\n";
    assert_eq!(
        stdout_of(&["betti"], k32),
        "       0 1 2 3 4\ntotal: 1 6 9 5 1\n    0: 1 . . . .\n    1: . 6 9 5 1\n"
    );
    assert_eq!(stdout_of(&["linear-res"], C4), "linear resolution: yes\n");
    assert_eq!(stdout_of(&["linear-res"], "a b\nb c\nc d\nd e\ne a\n"), "linear resolution: no\n");
}

#[test]
fn dot_input_and_export() {
    let dot = "graph G { a -- b -- c; }";
    assert_eq!(stdout_of(&["edge-ideal"], dot), "vars: a b c\na*b\nb*c\n");
    assert_eq!(
        stdout_of(&["export-m2", "--ideal", "jets", "-s", "1"], "x y\n"),
        "R = QQ[x_0, x_1, y_0, y_1];\nJ = ideal(x_0*y_0, x_1*y_0 + x_0*y_1);\n"
    );
}

#[test]
fn verify_reports_and_exit_codes() {
    let out = run(&["verify", "vc-colon", "--corpus", "path:3+cycle:3", "-s", "0,1"], "");
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().filter(|l| l.contains("pass")).count() >= 4, "{text}");

    assert_eq!(run(&["verify", "no-such-suite"], "").status.code(), Some(2));
}

#[test]
fn error_exit_codes() {
    assert_eq!(run(&["covers"], "a b c\n").status.code(), Some(2));
    assert_eq!(run(&["frobnicate"], P3).status.code(), Some(2));

    let dir = std::env::temp_dir().join(format!("jetgraph-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let limits = dir.join("limits.json");
    std::fs::write(&limits, r#"{"max_cover_vertices": 1}"#).unwrap();
    let out = run(&["covers", "--limits", limits.to_str().unwrap()], P3);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_is_identical_across_thread_counts() {
    let args = ["verify", "pc-identity", "--corpus", "all-connected:4", "-s", "1,2"];
    let outputs: Vec<Vec<u8>> = ["1", "3"]
        .iter()
        .map(|threads| {
            let out = Command::new(env!("CARGO_BIN_EXE_jetgraph"))
                .args(args)
                .env("RAYON_NUM_THREADS", threads)
                .stdin(Stdio::null())
                .output()
                .unwrap();
            assert_eq!(out.status.code(), Some(0));
            out.stdout
        })
        .collect();
    assert_eq!(outputs[0], outputs[1]);
}
