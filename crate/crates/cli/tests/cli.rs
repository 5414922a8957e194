use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_semiorder"))
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

fn run(args: &[&str]) -> (i32, String, String) {
    let Output {
        status,
        stdout,
        stderr,
    } = bin().args(args).output().unwrap();
    (
        status.code().unwrap(),
        String::from_utf8(stdout).unwrap(),
        String::from_utf8(stderr).unwrap(),
    )
}

fn write_poset(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn classify_reports_three_plus_one() {
    let (code, out, _) = run(&["classify", data("3plus1.poset").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("interval=yes semiorder=no"));
    assert!(out.contains("contains 3+1 at 0 1 2 3"));
}

#[test]
fn classify_writes_hasse_diagram() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("p.dot");
    let (code, _, _) = run(&[
        "classify",
        data("3plus1.poset").to_str().unwrap(),
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(dot).unwrap();
    assert!(text.starts_with("digraph"));
    assert!(text.contains("n0 -> n1") && text.contains("n1 -> n2") && !text.contains("n0 -> n2"));
}

#[test]
fn represent_interval_and_refusal() {
    let (code, out, _) = run(&["represent", data("3plus1.poset").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("3 0 2"));
    assert!(out.contains("no unit representation"));

    let dir = tempfile::tempdir().unwrap();
    let f = write_poset(&dir, "2p2.poset", "poset 4\n0 < 1\n2 < 3\n");
    let (code, out, _) = run(&["represent", &f]);
    assert_eq!(code, 1);
    assert!(out.contains("not an interval order"));
}

#[test]
fn semiorder_gets_unit_offsets() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_poset(
        &dir,
        "1p2.poset",
        "poset 3\n# a chain beside a point\n1 < 2\n",
    );
    let (code, out, _) = run(&["represent", &f]);
    assert_eq!(code, 0);
    assert!(!out.contains("no unit representation"));
}

#[test]
fn traces_critical_and_dimension() {
    let f = data("3plus1.poset");
    let f = f.to_str().unwrap();
    let (code, out, _) = run(&["traces", f]);
    assert_eq!(code, 0);
    assert!(out.contains("pred total: yes") && out.contains("succ total: yes"));
    let (_, out, _) = run(&["critical", f]);
    assert_eq!(out.lines().collect::<Vec<_>>(), vec!["0 3", "3 2"]);
    let (_, out, _) = run(&["dimension", f]);
    assert!(out.contains("dimension=2"));
}

#[test]
fn realizer_on_integer_keys() {
    let (code, out, _) = run(&["realizer3", "--alpha", "2", "--window", "-4..4"]);
    assert_eq!(code, 0);
    assert!(out.contains("realizes: yes"));
    assert_eq!(out.lines().count(), 4);
}

#[test]
fn group_commands_on_sample() {
    let f = data("lex_plane.group");
    let f = f.to_str().unwrap();
    let (code, out, _) = run(&["group-check", f]);
    assert_eq!(code, 0);
    assert!(out.contains("cone: ok") && out.contains("threshold=yes"));

    let (code, out, _) = run(&["group-kai", f]);
    assert_eq!(code, 0);
    assert!(out.contains("K={0}") && out.contains("A=span{(1,0)}") && out.contains("I=Z^2"));

    let (code, out, _) = run(&["group-inc0", f, "--window", "-2..2 x -2..2"]);
    assert_eq!(code, 0);
    assert!(out.contains("8 elements") && out.contains("(-1,1)") && !out.contains("(1,1)"));

    let (code, out, _) = run(&["group-transfer", f, "--max-n", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("violations=0"));
}

#[test]
fn group_window_writes_dot() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("w.dot");
    let f = data("lex_plane.group");
    let (code, _, _) = run(&[
        "group-check",
        f.to_str().unwrap(),
        "--window",
        "-2..2 x -2..2",
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(dot).unwrap();
    assert!(text.contains("(0,0)"));
}

#[test]
fn preceq_battery() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_poset(&dir, "2p2.poset", "poset 4\n0 < 1\n2 < 3\n");
    let q = write_poset(&dir, "c2.poset", "poset 2\n0 < 1\n");
    let (code, out, _) = run(&["preceq", &p, &q]);
    assert_eq!(code, 0);
    assert!(out.contains("refuted: Z"));
    let (_, out, _) = run(&["preceq", &p, data("3plus1.poset").to_str().unwrap()]);
    assert!(out.contains("not refuted"));
}

#[test]
fn clifford_commands() {
    let (code, out, _) = run(&["clifford-reduce", "g(1) g(0)"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "+1*g(1/2) +1*g(1)");
    let (_, out, _) = run(&["clifford-reduce", "g(1)^-1 g(0) g(1)"]);
    assert_eq!(out.trim(), "+1*g(-1)");
    let (_, out, _) = run(&["clifford-cmp", "g(0)", "g(1)"]);
    assert!(out.contains(" < "));
    let (code, out, _) = run(&["clifford-probe", "g(0)", "--trials", "50"]);
    assert_eq!(code, 0);
    assert!(out.contains("u = +1*g(1)") && out.contains("verified: yes"));
}

#[test]
fn errors_exit_with_two() {
    let (code, _, err) = run(&["classify", "/nonexistent/poset"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"));
    let dir = tempfile::tempdir().unwrap();
    let f = write_poset(&dir, "cycle.poset", "poset 2\n0 < 1\n1 < 0\n");
    assert_eq!(run(&["classify", &f]).0, 2);
    let f = write_poset(&dir, "junk.poset", "poset 2\n0 <\n");
    assert_eq!(run(&["classify", &f]).0, 2);
    assert_eq!(run(&["clifford-reduce", "g(0"]).0, 2);
    assert_eq!(run(&["no-such-command"]).0, 2);
}

#[test]
fn output_is_deterministic() {
    let a = run(&[
        "corpus-verify",
        "--max-n",
        "4",
        "--trials",
        "20",
        "--seed",
        "7",
    ]);
    let b = run(&[
        "corpus-verify",
        "--max-n",
        "4",
        "--trials",
        "20",
        "--seed",
        "7",
    ]);
    assert_eq!(a.0, 0);
    assert_eq!(a.1, b.1);
    assert!(a.1.contains("0 failed"));
}
