//! CLI acceptance: the regression suite must pass every item with stable
//! machine output, and the subcommands must honor the documented exit codes
//! and round-trip their own output.

use std::io::Write;
use std::process::{Command, Output};

fn ucf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ucf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_temp(name: &str, content: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join("ucf-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(content.as_bytes()).unwrap();
    path
}

const PUNCTURED_CUBE: &str = "{}\n2\n3\n1 2\n1 3\n2 3\n1 2 3\n";

#[test]
fn criterion_14_suite_passes_with_deterministic_output() {
    let first = ucf(&["paper-suite", "--json"]);
    assert!(
        first.status.success(),
        "suite exited {:?}: {}",
        first.status.code(),
        String::from_utf8_lossy(&first.stdout)
    );
    let second = ucf(&["paper-suite", "--json"]);
    assert!(second.status.success());
    assert_eq!(
        first.stdout, second.stdout,
        "machine output not byte-identical"
    );
    assert!(first.stderr.is_empty());

    let text = String::from_utf8(first.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    // every line is one JSON object; items either pass or carry the one
    // recorded divergence; the trailing summary reports zero failures
    let mut passed = 0;
    let mut diverged = Vec::new();
    for line in &lines[..lines.len() - 1] {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        match v["status"].as_str().unwrap() {
            "pass" => passed += 1,
            "diverges" => diverged.push(v["item"].as_str().unwrap().to_string()),
            other => panic!("item {} has status {}", v["item"], other),
        }
    }
    assert!(passed >= 20);
    assert_eq!(diverged, vec!["axiom-example-two-petals-5".to_string()]);
    let summary: serde_json::Value = serde_json::from_str(lines.last().unwrap()).unwrap();
    assert_eq!(summary["failed"], 0);
    println!("criterion 14 (paper-suite exits 0, {passed} PASS items, byte-stable output): PASS");
}

#[test]
fn suite_items_are_individually_addressable() {
    let out = ucf(&["paper-suite", "--filter", "child-of-punctured-cube"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS child-of-punctured-cube"));
    assert!(text.contains("1 items"));

    let missing = ucf(&["paper-suite", "--filter", "no-such-item"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn dual_child_and_reduce_reproduce_the_worked_example() {
    let file = write_temp("example4.fam", PUNCTURED_CUBE);
    let path = file.to_str().unwrap();

    let dual = ucf(&["dual", path]);
    assert!(dual.status.success());
    assert_eq!(
        String::from_utf8(dual.stdout).unwrap(),
        "universe: 1 2 3 4 5 6\n{}\n3 4 6\n1 3 5 6\n2 4 5 6\n1 3 4 5 6\n2 3 4 5 6\n1 2 3 4 5 6\n"
    );

    let child = ucf(&["child", path]);
    assert!(child.status.success());
    assert_eq!(
        String::from_utf8(child.stdout).unwrap(),
        "universe: 1 2 3 4\n{}\n1 3\n2 4\n1 3 4\n2 3 4\n1 2 3 4\n"
    );

    // dual output feeds straight back in
    let dual_file = write_temp("example4-dual.fam", &{
        let out = ucf(&["dual", path]);
        String::from_utf8(out.stdout).unwrap()
    });
    let reduced = ucf(&["reduce", dual_file.to_str().unwrap()]);
    assert!(reduced.status.success());
    assert_eq!(
        String::from_utf8(reduced.stdout).unwrap(),
        "universe: 1 2 3 4 5\n{}\n1 3 5\n2 4 5\n1 3 4 5\n2 3 4 5\n1 2 3 4 5\n"
    );
}

#[test]
fn exit_codes_follow_the_contract() {
    // input errors are 2
    let missing = ucf(&["check", "/no/such/file.fam"]);
    assert_eq!(missing.status.code(), Some(2));

    let bad = write_temp("bad.fam", "1 2\nx\n");
    let parse_err = ucf(&["check", bad.to_str().unwrap()]);
    assert_eq!(parse_err.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&parse_err.stderr).contains("line 2"));

    let counterexample = write_temp(
        "counterexample.fam",
        "{}\n5 7\n3 6 7\n3 5 6 7\n2 4 5 6 7\n1 3 4 5 6 7\n2 3 4 5 6 7\n1 2 3 4 5 6 7\n",
    );
    let rejected = ucf(&[
        "reduce",
        counterexample.to_str().unwrap(),
        "--minimal",
        "1 3 4 5 6 7",
    ]);
    assert_eq!(rejected.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&rejected.stderr).contains("not minimal"));

    // a failing checked property is 1: a chain quotient without a
    // half-frequency element cannot occur, so use a family failing the
    // half-frequency check itself... none exists either; instead check that
    // a passing check exits 0 and JSON mode stays parseable
    let cube = write_temp("cube.fam", PUNCTURED_CUBE);
    let ok = ucf(&["check", cube.to_str().unwrap(), "--frankl", "--json"]);
    assert_eq!(ok.status.code(), Some(0));
    for line in String::from_utf8(ok.stdout).unwrap().lines() {
        let _: serde_json::Value = serde_json::from_str(line).unwrap();
    }

    // usage errors are 2 (clap default)
    let usage = ucf(&["descend", "--depth"]);
    assert_eq!(usage.status.code(), Some(2));
}

#[test]
fn check_reports_predicates_axioms_and_conjectures() {
    let staircase = write_temp("staircase3.fam", "{}\n1\n1 2\n1 2 3\n");
    let out = ucf(&[
        "check",
        staircase.to_str().unwrap(),
        "--axioms",
        "--frankl",
        "--salzborn",
        "--naive",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("union-closed: yes"));
    assert!(text.contains("normalized: yes"));
    assert!(text.contains("TD: holds"));
    assert!(text.contains("T1: fails"));
    assert!(text.contains("[definition agrees]"));
    assert!(text.contains("half-frequency: strict"));
    assert!(text.contains("irreducible-size: holds"));
}

#[test]
fn json_family_files_are_accepted() {
    let file = write_temp("stair.json", r#"{"universe":[1,2],"sets":[[],[1],[1,2]]}"#);
    let out = ucf(&["dual", file.to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap().trim(),
        r#"{"universe":[1,2],"sets":[[],[2],[1,2]]}"#
    );
}

#[test]
fn dual_with_induced_indexing_uses_file_order() {
    // the three irreducibles of the 7-normalized worked example, in the
    // order that reproduces its transpose listing
    let file = write_temp("irr.fam", "1 4 6 7\n2 5 6 7\n3 4 5 6\n");
    let out = ucf(&["dual", file.to_str().unwrap(), "--indexing", "induced"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let parsed = unionclosed::parse_family(&text).unwrap();
    assert_eq!(parsed, unionclosed::power_set(3).unwrap());

    // canonical indexing of the same file gives an isomorphic family
    let canonical = ucf(&["dual", file.to_str().unwrap()]);
    let canonical_family =
        unionclosed::parse_family(&String::from_utf8(canonical.stdout).unwrap()).unwrap();
    assert!(unionclosed::isomorphic(&parsed, &canonical_family));
}

#[test]
fn enumerate_matches_the_recorded_census() {
    let out = ucf(&[
        "enumerate",
        "--n",
        "2",
        "--constraint",
        "contains-empty",
        "--constraint",
        "contains-universe",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 5);
    assert!(text.contains("count: 4"));

    let iso = ucf(&["enumerate", "--n", "2", "--normalized", "--iso", "--json"]);
    let text = String::from_utf8(iso.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[1], r#"{"count":1}"#);
}

#[test]
fn chain_emits_a_valid_certificate() {
    let cube = write_temp("cube2.fam", PUNCTURED_CUBE);
    let out = ucf(&["chain", cube.to_str().unwrap()]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("k=1 set={2} contained in 4 of 7 members"));
    assert!(text.contains("certificate: valid"));
}
