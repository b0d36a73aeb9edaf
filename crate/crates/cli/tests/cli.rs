use std::process::Command;

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_quintrin");

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(BIN).args(args).env_remove("QUINTRIN_THREADS").output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out) = run(args);
    assert_eq!(code, 0, "{args:?}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn malformed_inputs_exit_with_usage_code() {
    assert_eq!(run(&["classify", "--a", "1/0", "--b", "1"]).0, 2);
    assert_eq!(run(&["root-in-field", "--g", "1,x", "--f", "1,1"]).0, 2);
    assert_eq!(run(&["curve", "--t", "0"]).0, 2);
    assert_eq!(run(&["curve", "--t", "1", "--g", "1,0,0,0,0,1"]).0, 2);
    assert_eq!(run(&["family", "dihedral", "--param", "0"]).0, 2);
    assert_eq!(run(&["surface", "check", "--point", "1,2,3"]).0, 2);
    assert_eq!(run(&["elliptic", "info", "--curve", "0,0"]).0, 2);
    assert_eq!(run(&["no-such-command"]).0, 2);
}

#[test]
fn pair_family_at_two() {
    let v = json(&["family", "pair", "--param", "2"]);
    assert_eq!(v["f_polynomial"], "40*x^5 - 10*x - 4");
    assert_eq!(v["h_polynomial"], "20*x^5 + 145*x - 394");
    assert_eq!(v["verified"], true);
}

#[test]
fn root_in_field_statuses() {
    let v = json(&["root-in-field", "--g", "-18,0,0,0,0,1", "--f", "-24,0,0,0,0,1"]);
    assert_eq!(v["status"], "certificate");
    assert_eq!(v["verified"], true);
    let v = json(&["root-in-field", "--g", "-18,0,0,0,0,1", "--f", "3,1,0,0,0,1"]);
    assert_eq!(v["status"], "absent");
    // same discriminant class and signature: no exact obstruction applies
    let (code, out) = run(&["root-in-field", "--g", "-18,0,0,0,0,1", "--f", "-2,0,0,0,0,1"]);
    assert_eq!(code, 3);
    assert_eq!(serde_json::from_str::<Value>(&out).unwrap()["status"], "inconclusive");
}

#[test]
fn inconclusive_exits_with_three() {
    // the root of x^5 - 24 has coordinates with denominator 3
    let (code, out) = run(&[
        "root-in-field",
        "--g",
        "-18,0,0,0,0,1",
        "--f",
        "-24,0,0,0,0,1",
        "--denominator-bound",
        "1",
    ]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!((code, v["status"].as_str()), (3, Some("inconclusive")));
}

#[test]
fn search_emits_json_lines() {
    let (code, out) = run(&["search", "--t", "6/5", "--height", "20"]);
    assert_eq!(code, 0);
    let first: Value = serde_json::from_str(out.lines().next().unwrap()).unwrap();
    assert_eq!(first["point"], serde_json::json!(["0", "1", "0", "0"]));
    assert_eq!(first["class"]["value"], "6/5");
}

#[test]
fn elliptic_commands() {
    let v = json(&["elliptic", "info", "--curve", "-675,-79650"]);
    assert_eq!(v["invariants"]["j"], "-25/2");
    let v = json(&["elliptic", "twist", "--e1", "-675,-79650", "--e2", "0,-1,0,-833,109537"]);
    assert_eq!(v["twist"]["d"], "-10");
    let v = json(&["elliptic", "twist", "--e1", "-675,-79650", "--d", "-10"]);
    assert_eq!(v["twist"]["invariants"]["j"], "-25/2");
}

#[test]
fn surface_commands() {
    let v = json(&["surface", "curve", "--name", "R4", "--s", "1"]);
    assert_eq!(v["on_surface"], true);
    let v = json(&["surface", "check", "--point", "-168,45,95,55"]);
    assert_eq!(v["t"], "6/5");
    assert_eq!(v["consistency"]["status"], "on-curve");
    let v = json(&["surface", "check", "--point", "1,1,1,1"]);
    assert_eq!(v["on_surface"], false);
    assert_eq!(v["form_value"], "11701");
}

#[test]
fn config_file_and_output_path() {
    let dir = std::env::temp_dir().join(format!("quintrin-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let conf = dir.join("run.conf");
    let out = dir.join("points.jsonl");
    std::fs::write(&conf, format!("height_bound = 5\noutput = {:?}\n", out.to_str().unwrap())).unwrap();
    let (code, stdout) = run(&["--config", conf.to_str().unwrap(), "search", "--t", "6/5"]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let written = std::fs::read_to_string(&out).unwrap();
    assert_eq!(written.lines().count(), 1);
    std::fs::remove_dir_all(&dir).unwrap();
}
