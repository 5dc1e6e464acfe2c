use std::path::PathBuf;
use std::process::{Command, Output};

fn ribbonmod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ribbonmod"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn documented_examples() {
    let cases: &[(&[&str], &str)] = &[
        (&["ribbon", "--family", "A", "--alpha", "2,2"], "5"),
        (&["ribbon", "--family", "B", "--alpha", "0,3"], "7"),
        (&["ribbon", "--family", "A", "--alpha", "2,2", "--mod", "3"], "2"),
        (&["cvec", "--family", "A", "--n", "5", "--p", "3"], "(6, 8, 2)"),
        (&["cvec", "--family", "D", "--n", "4", "--p", "3"], "(0, 8, 8)"),
        (&["cvec", "--family", "B", "--n", "6", "--p", "5"], "(0, 24, 8, 8, 24)"),
        (&["coxeter", "--group", "F4"], "1^2, 23^4, 73^2, 95^4, 97^2, 169^2"),
        (&["coxeter", "--group", "E6", "--p", "2"], "(32, 32)"),
        (&["coxeter", "--group", "I2:6"], "1^2, 5^2"),
        (&["macdonald", "--n", "4", "--p", "2"], "4"),
        (&["macdonald", "--n", "1", "--p", "3"], "1"),
        (&["macdonald", "--n", "6", "--p", "2"], "8"),
    ];
    for (args, want) in cases {
        let o = ribbonmod(args);
        assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert_eq!(stdout(&o).trim(), *want, "{args:?}");
    }
}

#[test]
fn exit_codes() {
    let usage: &[&[&str]] = &[
        &["ribbon", "--family", "A", "--alpha", "2,0,2"],
        &["cvec", "--family", "A", "--n", "5", "--p", "6"],
        &["coxeter", "--group", "Z9"],
        &["macdonald", "--n", "3", "--p", "1"],
        &["cvec", "--family", "C", "--n", "5", "--p", "3"],
        &["frobnicate"],
    ];
    for args in usage {
        assert_eq!(ribbonmod(args).status.code(), Some(2), "{args:?}");
    }
    let closed = ribbonmod(&["cvec", "--family", "A", "--n", "13", "--p", "5", "--method", "closed"]);
    assert_eq!(closed.status.code(), Some(1));
}

#[test]
fn naive_and_theorem_print_the_same() {
    for (fam, n, p) in [("A", "12", "5"), ("B", "9", "7"), ("D", "10", "3")] {
        let a = ribbonmod(&["cvec", "--family", fam, "--n", n, "--p", p, "--method", "naive"]);
        let b = ribbonmod(&["cvec", "--family", fam, "--n", n, "--p", p, "--method", "theorem"]);
        assert_eq!(stdout(&a), stdout(&b));
    }
}

#[test]
fn json_output() {
    let o = ribbonmod(&["ribbon", "--family", "B", "--alpha", "0,3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v, serde_json::json!({"family": "B", "alpha": [0, 3], "value": "7"}));
    let o = ribbonmod(&["cvec", "--family", "A", "--n", "1024", "--p", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["vector"][0], "0");
    assert_eq!(v["vector"][1].as_str().unwrap().len(), 308);
}

fn temp_csv(name: &str, body: &[u8]) -> PathBuf {
    let path = std::env::temp_dir().join(format!("ribbonmod-{}-{name}.csv", std::process::id()));
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn csv_round_trip_through_verify() {
    let o = ribbonmod(&["cvec", "--family", "D", "--n", "11", "--p", "11", "--format", "csv"]);
    assert!(o.status.success());
    let path = temp_csv("good", &o.stdout);
    let v = ribbonmod(&["verify", "--suite", "tables", "--file", path.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(0), "{}", stdout(&v));

    let tampered = String::from_utf8(o.stdout).unwrap().replacen(",0,1024\n", ",0,1025\n", 1);
    assert!(tampered.contains(",0,1025\n"));
    let path = temp_csv("bad", tampered.as_bytes());
    let v = ribbonmod(&["verify", "--suite", "tables", "--file", path.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(1));
    assert!(stdout(&v).contains("FAIL"));
}

#[test]
fn verify_all_passes() {
    let o = ribbonmod(&["verify"]);
    let out = stdout(&o);
    assert!(o.status.success(), "{out}");
    assert!(out.lines().all(|l| !l.starts_with("FAIL")));
}

#[test]
fn thread_override_is_accepted() {
    let o = Command::new(env!("CARGO_BIN_EXE_ribbonmod"))
        .args(["cvec", "--family", "A", "--n", "14", "--p", "3", "--method", "naive"])
        .env("RIBBONMOD_THREADS", "1")
        .output()
        .unwrap();
    assert!(o.status.success());
}
