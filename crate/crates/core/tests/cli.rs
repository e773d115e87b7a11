use std::process::{Command, Output};

fn hhq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hhq"))
        .args(args)
        .env_remove("HHQ_ORACLE_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

#[test]
fn dims_examples() {
    let o = hhq(&["dims", "--field", "Q", "--q", "2", "--max-n", "6", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["dims"], serde_json::json!([2, 2, 1, 0, 0, 0, 0]));

    let o = hhq(&["dims", "--field", "Fp:7", "--q", "2", "--max-n", "8", "--format", "json"]);
    let v = json(&o);
    assert_eq!(v["dims"], serde_json::json!([2, 2, 1, 0, 0, 0, 3, 6, 3]));
    assert_eq!(v["case"], "OddRoot(3)");

    let o = hhq(&["dims", "--field", "Fp:2", "--q", "1", "--max-n", "3", "--format", "csv"]);
    assert_eq!(stdout(&o), "degree,dimension\n0,4\n1,8\n2,12\n3,16\n");
}

#[test]
fn json_key_order_and_determinism() {
    let args = ["verify", "--suite", "all", "--field", "Fp:5", "--q", "2", "--max-n", "5", "--cap", "6", "--format", "json"];
    let a = hhq(&args);
    let b = hhq(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let keys = ["\"case\"", "\"field\"", "\"q\"", "\"dims\"", "\"bases\"", "\"products\"", "\"checks\""];
    let pos: Vec<usize> = keys.iter().map(|k| text.find(k).expect(k)).collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]), "{pos:?}");
    for c in json(&a)["checks"].as_array().unwrap() {
        assert!(c.get("name").is_some() && c.get("status").is_some() && c.get("note").is_some());
    }
}

#[test]
fn verify_examples() {
    let o = hhq(&["verify", "--suite", "oracle", "--field", "Q", "--q", "2", "--max-n", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let o = hhq(&["verify", "--suite", "ring", "--field", "Fp:7", "--q", "2", "--cap", "13", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["status"] == "pass"), "{checks:?}");

    let o = hhq(&["verify", "--suite", "hilbert", "--field", "Q", "--q", "0", "--max-n", "8", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["checks"][0]["status"], "note");
    assert!(v["checks"][0]["note"].as_str().unwrap().contains("degree 0"));
}

#[test]
fn centre_examples() {
    let o = hhq(&["centre", "--field", "Q", "--q", "2", "--max-deg", "20", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["centre"], serde_json::json!(["1"]));

    let o = hhq(&["centre", "--field", "Fp:7", "--q", "2", "--max-deg", "12", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        json(&o)["centre"],
        serde_json::json!(["1", "y^6", "x^3y^3", "x^6", "y^12", "x^3y^9", "x^6y^6", "x^9y^3", "x^12"])
    );

    let o = hhq(&["centre", "--field", "Fp:5", "--q", "2", "--max-deg", "12"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("k[x^4, y^4]"));
}

#[test]
fn exit_code_two_on_bad_input() {
    for args in [
        &["dims", "--field", "Fp:9"][..],
        &["dims", "--field", "R"],
        &["dims", "--q", "1/0"],
        &["dims", "--q", "zeta"],
        &["dims", "--max-n", "-1"],
        &["verify", "--suite", "nonsense"],
        &["verify", "--oracle-cap", "6"],
        &["nope"],
    ] {
        assert_eq!(hhq(args).status.code(), Some(2), "{args:?}");
    }
    let o = Command::new(env!("CARGO_BIN_EXE_hhq"))
        .args(["verify", "--suite", "oracle"])
        .env("HHQ_ORACLE_CAP", "9")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn oracle_cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_hhq"))
        .args(["verify", "--suite", "oracle", "--field", "Fp:7", "--q", "2", "--max-n", "6", "--format", "json"])
        .env("HHQ_ORACLE_CAP", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let note = json(&o)["checks"][0]["note"].as_str().unwrap().to_string();
    assert!(note.ends_with("n <= 2"), "{note}");
}

#[test]
fn writes_to_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dims.csv");
    let o = hhq(&["dims", "--q", "-1", "--max-n", "3", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "degree,dimension\n0,4\n1,4\n2,5\n3,6\n");

    let bad = dir.path().join("missing").join("x.json");
    let o = hhq(&["dims", "--out", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn exit_code_one_on_mismatch() {
    let o = hhq(&["dims", "--field", "Q", "--q", "2", "--max-n", "3", "--expect", "2,2,1,0"]);
    assert_eq!(o.status.code(), Some(0));
    let o = hhq(&["dims", "--field", "Q", "--q", "2", "--max-n", "3", "--expect", "2,2,2,0", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["checks"][0]["status"], "fail");
}
