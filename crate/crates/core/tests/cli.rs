use std::path::Path;
use std::process::{Command, Output};

fn lieforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lieforge"))
        .args(args)
        .env("LIEFORGE_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn code_info_reports_parameters() {
    let o = lieforge(&["code", "info", "--name", "hamming7", "--format", "table"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("[7,4,3]"));
    let v = json(&lieforge(&["code", "info", "--name", "simplex7"]));
    assert_eq!(v["parameters"], "[7,3,4]");
    assert_eq!(v["weight_enumerator"], serde_json::json!([1, 0, 0, 0, 7, 0, 0, 0]));
}

#[test]
fn code_info_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("even4.txt");
    std::fs::write(&path, "4 3\n1100\n0110\n1111\n").unwrap();
    let v = json(&lieforge(&["code", "info", "--file", path.to_str().unwrap()]));
    assert_eq!(v["parameters"], "[4,3,2]");
    std::fs::write(&path, "4 2\n1100\n").unwrap();
    assert_eq!(lieforge(&["code", "info", "--file", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn lattice_roots_of_extended_hamming() {
    let v = json(&lieforge(&["lattice", "roots", "--code", "exthamming8"]));
    assert_eq!(v["root_count"], 240);
    assert_eq!(v["type"], "E8");
    assert_eq!(v["roots"].as_array().unwrap().len(), 240);
}

fn build(kind: &str, dir: &Path) -> String {
    let path = dir.join(format!("{kind}.json"));
    let o = lieforge(&["algebra", "build", "--type", kind, "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    path.to_str().unwrap().to_string()
}

#[test]
fn build_and_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let f4 = build("f4", dir.path());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&f4).unwrap()).unwrap();
    assert_eq!(v["schema"], "lieforge/sc/v1");
    assert_eq!(v["dim"], 52);
    let e7 = build("e7", dir.path());
    let o = lieforge(&["verify", "--in", &e7, "--checks", "jacobi,killing,centralizer,roots,spectrum"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    assert_eq!(r["passed"], true);
    assert_eq!(r["roots"]["system"]["type"], "E7");
}

#[test]
fn output_is_deterministic() {
    let a = lieforge(&["algebra", "build", "--type", "e8"]);
    let b = lieforge(&["algebra", "build", "--type", "E8"]);
    assert_eq!(a.stdout, b.stdout);
    let dir = tempfile::tempdir().unwrap();
    let e8 = build("e8", dir.path());
    let one = Command::new(env!("CARGO_BIN_EXE_lieforge"))
        .args(["verify", "--in", &e8])
        .env("LIEFORGE_THREADS", "1")
        .output()
        .unwrap();
    let many = lieforge(&["verify", "--in", &e8]);
    assert_eq!(one.stdout, many.stdout);
}

#[test]
fn corrupted_table_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    let path = build("f4", dir.path());
    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let brackets = v["brackets"].as_array_mut().unwrap();
    let last = brackets.len() - 1;
    let entry = &mut brackets[last][2][0][1];
    *entry = serde_json::json!(-entry.as_i64().unwrap());
    std::fs::write(&path, v.to_string()).unwrap();
    let o = lieforge(&["verify", "--in", &path, "--checks", "jacobi"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(json(&o)["jacobi"]["witness"].is_object());
}

#[test]
fn input_errors_exit_with_two() {
    assert_eq!(lieforge(&["code", "info", "--name", "golay24"]).status.code(), Some(2));
    assert_eq!(lieforge(&["verify", "--in", "/nonexistent.json"]).status.code(), Some(2));
    assert_eq!(lieforge(&["algebra", "build", "--type", "g2"]).status.code(), Some(2));
    assert_eq!(lieforge(&["classical", "build", "--series", "d", "--n", "1"]).status.code(), Some(2));
    assert_eq!(lieforge(&["code", "info", "--name", "hamming7", "--bogus"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let e7 = build("e7", dir.path());
    let o = lieforge(&["verify", "--in", &e7, "--checks", "jacobi,jacoby"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(!o.stderr.is_empty());
}

#[test]
fn classical_build_cross_checks() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c3.json");
    let o = lieforge(&["classical", "build", "--series", "c", "--n", "3", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    assert_eq!(r["dim"], 21);
    assert_eq!(r["type"], "C3");
    let v = lieforge(&["verify", "--in", out.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(0));
}

#[test]
fn sign_and_coordinate_exports() {
    let v = json(&lieforge(&["algebra", "signs", "--type", "e7"]));
    assert_eq!(v["entries"].as_array().unwrap().len(), 49);
    let v = json(&lieforge(&["algebra", "coordinates", "--type", "f4"]));
    assert_eq!(v["axioms"]["deviations"][0], "basis includes e^1111");
}
