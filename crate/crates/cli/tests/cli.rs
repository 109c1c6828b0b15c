use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

const SQUARE: &str = "polygon convex 4\n0 0\n1 0\n1 1\n0 1\n";

fn stripcut(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stripcut")).args(args).current_dir(dir).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn value_of_unit_square() {
    let dir = TempDir::new().unwrap();
    fs::write(dir.path().join("square.poly"), SQUARE).unwrap();
    let o = stripcut(&["value", "square.poly"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\n");
    let o = stripcut(&["value", "--convex", "square.poly"], dir.path());
    assert_eq!(stdout(&o), "1\n");
}

#[test]
fn empty_codeword_decodes_to_nothing() {
    let dir = TempDir::new().unwrap();
    fs::write(dir.path().join("square.poly"), SQUARE).unwrap();
    fs::write(dir.path().join("empty.codeword"), "").unwrap();
    let o = stripcut(&["decode", "square.poly", "empty.codeword"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "");
}

#[test]
fn malformed_input_exits_two() {
    let dir = TempDir::new().unwrap();
    fs::write(dir.path().join("bad.poly"), "polygon simple 3\n0 0\n1 0\n").unwrap();
    let o = stripcut(&["value", "bad.poly"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    let o = stripcut(&["value", "missing.poly"], dir.path());
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn report_decode_validate_round_trip() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    assert!(stripcut(&["gen", "comb", "--k", "4", "-o", "comb.poly"], d).status.success());
    let o = stripcut(&["value", "comb.poly"], d);
    assert_eq!(stdout(&o), "7\n");
    let o = stripcut(&["report", "comb.poly", "-o", "comb.cw"], d);
    assert!(o.status.success());
    let o = stripcut(&["decode", "comb.poly", "comb.cw"], d);
    let cuts = stdout(&o);
    assert_eq!(cuts.lines().count(), 6);
    fs::write(d.join("comb.cuts"), &cuts).unwrap();
    let o = stripcut(&["validate", "comb.poly", "comb.cuts"], d);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("pieces 7"));
    // dropping a cut leaves a piece wider than one
    let short: String = cuts.lines().skip(1).map(|l| format!("{l}\n")).collect();
    fs::write(d.join("short.cuts"), short).unwrap();
    let o = stripcut(&["validate", "comb.poly", "short.cuts"], d);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn delta_gadget_through_the_cli() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    let o = stripcut(&["gen", "delta", "--x", "0.21,0.30,0.39", "--delta", "0.05", "-o", "g.glue"], d);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&stripcut(&["value", "g.glue"], d)), "6\n");
    assert!(stripcut(&["report", "g.glue", "-o", "g.cw"], d).status.success());
    fs::write(d.join("g.cuts"), stdout(&stripcut(&["decode", "g.glue", "g.cw"], d))).unwrap();
    let o = stripcut(&["validate", "g.glue", "g.cuts"], d);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("pieces 6"));
}

#[test]
fn convex_report_on_a_long_rectangle() {
    let dir = TempDir::new().unwrap();
    fs::write(dir.path().join("r.poly"), "polygon convex 4\n0 0\n5 0\n5 1\n0 1\n").unwrap();
    let o = stripcut(&["report", "--convex", "r.poly"], dir.path());
    let cw = stdout(&o);
    assert_eq!(cw.lines().count(), 1);
    assert!(cw.starts_with("run "));
    assert!(cw.trim_end().ends_with(" 4"));
}

#[test]
fn oracle_and_trace() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    assert!(stripcut(&["gen", "staircase", "--x", "1/2,3/2,1/2,1/2", "-o", "s.poly"], d).status.success());
    let v = stdout(&stripcut(&["value", "s.poly"], d));
    assert_eq!(stdout(&stripcut(&["oracle", "s.poly", "--tree"], d)), v);
    let o = stripcut(&["value", "--trace", "s.poly"], d);
    assert!(stdout(&o).lines().count() > 2);
    let o = stripcut(&["decompose", "s.poly"], d);
    assert!(stdout(&o).contains("trap 0"));
}

#[test]
fn svg_has_pieces_and_cuts() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    assert!(stripcut(&["gen", "comb", "--k", "2", "-o", "c.poly"], d).status.success());
    assert!(stripcut(&["report", "c.poly", "-o", "c.cw"], d).status.success());
    assert!(stripcut(&["svg", "c.poly", "c.cw", "c.svg"], d).status.success());
    let svg = fs::read_to_string(d.join("c.svg")).unwrap();
    assert!(svg.contains(r#"version="1.1""#));
    assert_eq!(svg.matches("<line ").count(), 2);
    assert!(svg.matches("hsl(").count() >= 3);
}

#[test]
fn lattice_fuzz_and_bench() {
    let dir = TempDir::new().unwrap();
    let o = stripcut(&["lattice-fuzz", "--trials", "200"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "trials 200 law_failures 0 fast_op_failures 0\n");
    let o = stripcut(&["bench", "--family", "comb", "--kmin", "2", "--kmax", "4"], dir.path());
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[2].starts_with("instance=comb-16 n=64 class=simple opt=31 "));
    assert!(lines[2].contains(" comparisons="));
}

#[test]
fn generated_output_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let a = stdout(&stripcut(&["gen", "random", "--n", "9", "--seed", "3"], dir.path()));
    let b = stdout(&stripcut(&["gen", "random", "--n", "9", "--seed", "3"], dir.path()));
    assert_eq!(a, b);
    assert!(a.starts_with("# random-simple-9-3"));
}
