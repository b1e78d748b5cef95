use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_kstirling"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn count() {
    let o = run(
        &["count", "--class", "stirling", "--k", "2", "--n", "5"],
        "",
    );
    assert!(o.status.success());
    assert_eq!(stdout(&o), "945\n");
    let o = run(&["count", "--class", "port", "--n", "6"], "");
    assert_eq!(stdout(&o), "945\n");
}

#[test]
fn enumerate_in_history_order() {
    let o = run(
        &["enumerate", "--class", "stirling", "--k", "2", "--n", "2"],
        "",
    );
    assert_eq!(stdout(&o), "2 2 1 1\n1 2 2 1\n1 1 2 2\n");
    let o = run(&["enumerate", "--class", "port", "--n", "3"], "");
    assert_eq!(stdout(&o).lines().count(), 3);
}

#[test]
fn random_is_seeded() {
    let args = [
        "random", "--class", "kary", "--k", "2", "--n", "6", "--seed", "7", "--count", "5",
    ];
    let a = run(&args, "");
    let b = run(&args, "");
    assert!(a.status.success());
    assert_eq!(stdout(&a).lines().count(), 5);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn convert_perm_to_tree_and_back() {
    let o = run(
        &["convert", "--from", "perm", "--to", "tree", "--k", "2"],
        "4 4 2 2 7 7 1 5 5 6 6 1 3 3\n",
    );
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "(1 (2 (4 _ _ _) _ (7 _ _ _)) (5 _ _ (6 _ _ _)) (3 _ _ _))\n"
    );
    let o = run(
        &[
            "convert",
            "--from",
            "tree",
            "--to",
            "pathdiagram",
            "--k",
            "2",
        ],
        "(1 (2 (4 _ _ _) _ (7 _ _ _)) (5 _ _ (6 _ _ _)) (3 _ _ _))",
    );
    assert_eq!(stdout(&o), "a2:1 a1:2 b b c:3 b ; 0,0,3,0,1,1\n");
    let o = run(
        &[
            "convert",
            "--from",
            "pathdiagram",
            "--to",
            "perm",
            "--k",
            "2",
        ],
        "a2:1 a1:2 b b c:3 b ; 0,0,3,0,1,1",
    );
    assert_eq!(stdout(&o), "4 4 2 2 7 7 1 5 5 6 6 1 3 3\n");
}

#[test]
fn convert_port() {
    let o = run(
        &[
            "convert",
            "--class",
            "port",
            "--from",
            "tree",
            "--to",
            "pathdiagram",
        ],
        "(1 (2) (3 (4)))",
    );
    assert!(o.status.success());
    let d = stdout(&o);
    let o = run(
        &[
            "convert",
            "--class",
            "port",
            "--from",
            "pathdiagram",
            "--to",
            "tree",
        ],
        &d,
    );
    assert_eq!(stdout(&o), "(1 (2) (3 (4)))\n");
}

#[test]
fn classify_permutation_and_tree() {
    let o = run(&["classify", "--k", "1"], "2 5 3 4 7 1 6");
    let s = stdout(&o);
    assert!(s.starts_with("letter 1: 11 valley\n"));
    assert!(s.ends_with("histogram: 00:3 01:2 11:2\n"));
    let o = run(&["classify", "--k", "2", "--json"], "(1 _ (2 _ _ _) _)");
    let s = stdout(&o);
    assert_eq!(
        s.trim(),
        r#"{"histogram":{"counts":{"000":1,"010":1},"k":2},"types":["010","000"]}"#
    );
}

#[test]
fn series_all_ones() {
    let o = run(&["series", "--k", "2", "--max-deg", "4", "--all-ones"], "");
    assert_eq!(stdout(&o), "1 t^0\n3 t^1\n15 t^2\n105 t^3\n945 t^4\n");
    let o = run(&["series", "--k", "1", "--max-deg", "1"], "");
    assert_eq!(stdout(&o), "1 t^0\n1 t^1 z[1,2]^1\n1 t^1 z[1,1]^1\n");
}

#[test]
fn stats_profiles() {
    let o = run(
        &["stats", "--class", "block"],
        "2 2 1 5 5 3 3 6 7 7 8 8 6 1 4 4 9 9",
    );
    assert_eq!(stdout(&o), "2:1 3:1 4:1\n");
    let o = run(&["stats", "--class", "outdeg", "--json"], "(1 (2) (3) (4))");
    assert_eq!(
        stdout(&o).trim(),
        r#"{"class":"outdeg","counts":{"0":3,"3":1},"n":4}"#
    );
    let o = run(&["stats", "--class", "lr"], "(1 _ (2 _ _ _) _)");
    assert_eq!(stdout(&o), "1:2\ncenter_leaf_nodes: 1\n");
}

#[test]
fn verify_single_suite_passes() {
    let o = run(&["verify", "--suite", "gessel", "--max-n", "4"], "");
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("PASS gessel/perm_tree_perm_identity"));
    assert!(s.ends_with("ALL PASS\n"));
}

#[test]
fn verify_reports_failed_claims_with_exit_code_two() {
    let o = run(&["verify", "--suite", "stats", "--max-n", "3"], "");
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("FAIL stats/lr_shifted_vs_outdeg"));
}

#[test]
fn usage_and_input_errors_exit_one() {
    assert_eq!(run(&["count", "--bogus"], "").status.code(), Some(1));
    assert_eq!(run(&[], "").status.code(), Some(1));
    let o = run(&["convert", "--from", "perm", "--to", "tree"], "1 2 1 2");
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("invalid"));
    let o = run(&["classify"], "(1 _ ?)");
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1, column 6"));
    assert_eq!(run(&["--help"], "").status.code(), Some(0));
}
