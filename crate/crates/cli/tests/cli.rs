use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures")
        .join(name)
}

fn loopsmith(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_loopsmith"))
        .args(args)
        .env_remove("LOOPSMITH_JOBS")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn props_on_fixture() {
    let o = loopsmith(&["props", path(&fixture("steiner10.loop"))]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("is_steiner = true\n"));
    assert!(out.contains("is_moufang = false\n"));
}

#[test]
fn assoc_on_fixture() {
    let o = loopsmith(&["assoc", path(&fixture("steiner10.loop")), "2", "5", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("associator = 5\n"));
    let o = loopsmith(&["assoc", path(&fixture("steiner10.loop")), "2", "5", "11"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn validate_rejects_corrupted_file() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.loop");
    std::fs::write(&bad, "2\n1 2\n2 2\n").unwrap();
    assert_eq!(loopsmith(&["validate", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(loopsmith(&["validate", "/nonexistent/x.loop"]).status.code(), Some(2));
    assert_eq!(
        loopsmith(&["validate", path(&fixture("c2.loop"))]).status.code(),
        Some(0)
    );
}

#[test]
fn mp_exit_codes() {
    let o = loopsmith(&["mp", path(&fixture("steiner10.loop"))]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("mp_status = MP\n"));

    let o = loopsmith(&["mp", path(&fixture("c2.loop"))]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("mp_status = MOUFANG\n"));

    let dir = tempfile::tempdir().unwrap();
    let b7 = dir.path().join("b7.loop");
    assert_eq!(
        loopsmith(&["bose", "7", "--out", b7.to_str().unwrap()]).status.code(),
        Some(0)
    );
    let o = loopsmith(&["mp", b7.to_str().unwrap(), "--witness", "--deterministic"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("mp_status = FAILS\n"));
    assert!(out.contains("witness_order = lexicographic\n"));
    let line = out.lines().find(|l| l.starts_with("witness mp: ")).unwrap();
    assert_eq!(line.matches('(').count(), 2);

    let o = loopsmith(&["mp", b7.to_str().unwrap(), "--witness", "--jobs", "2", "--machine"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("witness_order\tarbitrary\n"));
}

#[test]
fn mp_all_witnesses_machine() {
    let dir = tempfile::tempdir().unwrap();
    let b7 = dir.path().join("b7.loop");
    loopsmith(&["bose", "7", "--out", b7.to_str().unwrap()]);
    let o = loopsmith(&["--machine", "mp", b7.to_str().unwrap(), "--all-witnesses"]);
    let out = stdout(&o);
    let count: usize = out
        .lines()
        .find_map(|l| l.strip_prefix("failing_triples\t"))
        .unwrap()
        .parse()
        .unwrap();
    assert_eq!(out.lines().filter(|l| l.starts_with("witness\tmp\t")).count(), count);
    // the counterexample ((0,1),(0,0),(1,0)) is elements (9,2,3)
    assert!(out.lines().any(|l| l.starts_with("witness\tmp\t9,2,3\t")));
}

#[test]
fn bose_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("b5.loop");
    let o = loopsmith(&["bose", "5", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("order = 16\n"));
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().count(), 17);
    assert_eq!(loopsmith_core::parse_loop(&text).unwrap().order(), 16);

    let o = loopsmith(&["bose", "3", "--sts"]);
    assert_eq!(o.status.code(), Some(0));
    let sts = loopsmith_core::parse_sts(&stdout(&o)).unwrap();
    assert_eq!((sts.points(), sts.blocks().len()), (9, 12));

    assert_eq!(loopsmith(&["bose", "4"]).status.code(), Some(2));
    assert_eq!(loopsmith(&["bose", "1"]).status.code(), Some(2));
}

#[test]
fn convert_both_ways() {
    let o = loopsmith(&["convert", "sts2loop", path(&fixture("sts3.sts"))]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        loopsmith_core::parse_loop(&stdout(&o)).unwrap(),
        loopsmith_core::groups::klein()
    );

    let o = loopsmith(&["convert", "loop2sts", path(&fixture("steiner10.loop"))]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(loopsmith_core::parse_sts(&stdout(&o)).unwrap().blocks().len(), 12);

    assert_eq!(
        loopsmith(&["convert", "loop2sts", path(&fixture("c3.loop"))])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn product_then_mp() {
    let o = loopsmith(&["product", path(&fixture("c2.loop")), path(&fixture("c2.loop"))]);
    assert_eq!(
        loopsmith_core::parse_loop(&stdout(&o)).unwrap(),
        loopsmith_core::groups::klein()
    );

    let dir = tempfile::tempdir().unwrap();
    let p20 = dir.path().join("p20.loop");
    loopsmith(&[
        "product",
        path(&fixture("steiner10.loop")),
        path(&fixture("c2.loop")),
        "--out",
        p20.to_str().unwrap(),
    ]);
    assert_eq!(
        loopsmith_core::parse_loop(&std::fs::read_to_string(&p20).unwrap())
            .unwrap()
            .order(),
        20
    );

    let p30 = dir.path().join("p30.loop");
    loopsmith(&[
        "product",
        path(&fixture("steiner10.loop")),
        path(&fixture("c3.loop")),
        "--out",
        p30.to_str().unwrap(),
    ]);
    let o = loopsmith(&["mp", p30.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("order = 30\nmp_status = MP\n"));
}

#[test]
fn experiment_rows() {
    let o = loopsmith(&["experiment", "--min-n", "3", "--max-n", "13", "--machine"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("n\torder\tcriterion\tbrute_verdict\tagree"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split('\t').collect()).collect();
    let verdicts: Vec<(&str, &str)> = rows.iter().map(|r| (r[1], r[3])).collect();
    assert_eq!(
        verdicts,
        [
            ("10", "MP"),
            ("16", "MP"),
            ("22", "FAILS"),
            ("28", "MP"),
            ("34", "MP"),
            ("40", "MP")
        ]
    );
    assert!(rows.iter().all(|r| r[4] == "true"));

    let o = loopsmith(&["experiment", "--min-n", "7", "--max-n", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 2);

    assert_eq!(
        loopsmith(&["experiment", "--min-n", "9", "--max-n", "5"]).status.code(),
        Some(2)
    );
    assert_eq!(loopsmith(&["experiment", "--bogus"]).status.code(), Some(2));
}

#[test]
fn experiment_default_range_fails_exactly_at_known_orders() {
    let o = Command::new(env!("CARGO_BIN_EXE_loopsmith"))
        .args(["--machine", "experiment"])
        .env("LOOPSMITH_JOBS", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let fails: Vec<String> = stdout(&o)
        .lines()
        .skip(1)
        .filter(|l| l.split('\t').nth(3) == Some("FAILS"))
        .map(|l| l.split('\t').nth(1).unwrap().to_string())
        .collect();
    assert_eq!(fails, ["22", "64", "106", "148"]);
}
