use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn thrackle(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_thrackle")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn path(p: &std::path::Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn check_c4() {
    let o = thrackle(&["check", path(&fixture("c4.graph"))]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("NOT THRACKLEABLE"));
}

#[test]
fn check_then_validate_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (name, jobs) in [("c5.graph", "1"), ("c6.graph", "2"), ("c3.graph", "3")] {
        let w = dir.path().join(format!("{name}.witness"));
        let o = thrackle(&["check", path(&fixture(name)), "--witness-out", path(&w), "--jobs", jobs]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        assert_eq!(stdout(&o).lines().next(), Some("THRACKLEABLE"));
        let v = thrackle(&["validate", path(&w)]);
        assert_eq!(v.status.code(), Some(0));
        assert_eq!(stdout(&v).trim(), "VALID");
    }
}

#[test]
fn jobs_do_not_change_verdicts() {
    for name in ["c3.graph", "c4.graph", "c5.graph", "c6.graph", "two-triangles.graph"] {
        let one = thrackle(&["check", path(&fixture(name))]);
        let four = thrackle(&["check", path(&fixture(name)), "--jobs", "4"]);
        assert_eq!(stdout(&one).lines().next(), stdout(&four).lines().next(), "{name}");
        assert_eq!(one.status.code(), four.status.code());
    }
}

#[test]
fn node_limit_is_inconclusive() {
    let o = thrackle(&["check", path(&fixture("c6.graph")), "--node-limit", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o).lines().next(), Some("INCONCLUSIVE"));
}

#[test]
fn malformed_graph_reports_the_line() {
    let o = thrackle(&["check", path(&fixture("malformed.graph"))]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
    let o = thrackle(&["check", "/nonexistent/graph"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(thrackle(&[]).status.code(), Some(1));
    assert_eq!(thrackle(&["bound", "--c", "6"]).status.code(), Some(1));
    assert_eq!(thrackle(&["bound", "--c", "7", "--l", "0"]).status.code(), Some(1));
    assert_eq!(thrackle(&["epsilon", "--eps", "2"]).status.code(), Some(1));
    assert_eq!(thrackle(&["construct", "--m", "0", "--l", "5", "--n0", "10"]).status.code(), Some(1));
}

#[test]
fn bound_lines() {
    let o = thrackle(&["bound", "--c", "6", "--l", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "tau 6 0 = 167/117 (~1.427350)\n");
    let o = thrackle(&["bound", "--c", "6", "--l", "-1"]);
    assert_eq!(stdout(&o), "tau 6 -1 = 617/425 (~1.451765)\n");
    let o = thrackle(&["bound", "--c", "6", "--l", "0", "--n", "117"]);
    assert_eq!(stdout(&o).lines().nth(1), Some("edges <= 167/1 (~167.000000) at n=117, asymptotically"));
}

#[test]
fn turan_and_epsilon() {
    let o = thrackle(&["turan", "--c1", "6", "--c2", "6", "--l", "2"]);
    assert_eq!(stdout(&o), "turan 6 6 2 = 57/40 (~1.425000)\n");
    let o = thrackle(&["epsilon", "--eps", "1/2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("epsilon 1/2 c 6 l -1 tau 617/425"), "{}", stdout(&o));
    let o = thrackle(&["epsilon", "--eps", "43/100"]);
    assert!(stdout(&o).starts_with("epsilon 43/100 c 6 l 0 tau 167/117"));
    assert!(stdout(&o).contains("sufficient-c r 0 c "));
}

#[test]
fn construct_then_audit() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("board.txt");
    let o = thrackle(&["construct", "--m", "2", "--l", "5", "--n0", "30", "--out", path(&out)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let a = thrackle(&["audit", path(&out), "--m", "2", "--l", "5"]);
    assert_eq!(a.status.code(), Some(0));
    let text = stdout(&a);
    assert!(text.contains("clause girth pass girth=10 expected=10"), "{text}");
    assert!(text.ends_with("audit pass\n"));
    let a = thrackle(&["audit", path(&out), "--m", "1", "--l", "5"]);
    assert_eq!(a.status.code(), Some(1));
    assert!(stdout(&a).ends_with("audit fail\n"));
}

#[test]
fn double_a_search_witness() {
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("c5.witness");
    let d = dir.path().join("c10.witness");
    assert_eq!(thrackle(&["check", path(&fixture("c5.graph")), "--witness-out", path(&w)]).status.code(), Some(0));
    let o = thrackle(&["double", path(&w), "--cycle", "0,1,2,3,4", "--out", path(&d)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o).trim(), "doubled vertices 10 edges 10 VALID");
    assert_eq!(stdout(&thrackle(&["validate", path(&d)])).trim(), "VALID");
    let bad = thrackle(&["double", path(&w), "--cycle", "0,1,2", "--out", path(&d)]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn campaign_with_exhausted_budget_is_not_certified() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.txt");
    let o = thrackle(&["campaign", "--c", "6", "--l", "0", "--budget-secs", "0", "--report", path(&report)]);
    assert_eq!(o.status.code(), Some(2));
    let text = std::fs::read_to_string(&report).unwrap();
    assert_eq!(text, stdout(&o));
    assert!(text.contains("# not certified"));
    assert!(text.ends_with("certified no tau 167/117\n"));
    assert_eq!(text.lines().filter(|l| l.starts_with("db 6 6 ")).count(), 4);
}
