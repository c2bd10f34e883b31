use std::process::{Command, Output};

use serde_json::Value;

fn lieblocks(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lieblocks"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = lieblocks(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn info_f4() {
    let v = json(&["info", "--type", "F4"]);
    assert_eq!(v["min_orbit_dim"], 16);
    assert_eq!(v["dim_g"], 52);
    assert_eq!(v["type"], "F4");
}

#[test]
fn subalg_d4_max() {
    let v = json(&["subalg", "--type", "D4", "--max"]);
    let classes = v["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 3);
    for c in classes {
        assert_eq!(c["codim"], 12);
        assert_eq!(c["class"], "A3+T");
    }
}

#[test]
fn subalg_tsv() {
    let out = lieblocks(&["subalg", "--type", "G2", "--max", "--tsv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 2);
    assert!(rows[1].starts_with("A2\t8\t6\t"));
}

#[test]
fn status_examples() {
    let v = json(&["status", "--type", "D4", "--lambda", "1/2,0,0,0"]);
    assert_eq!(v["status"], "EMPTY");
    let v = json(&["status", "--type", "E7", "--lambda", "0,0,0,0,0,0,0"]);
    assert_eq!(v["status"], "ZIGZAG_BLOCK(7)");
    let v = json(&["status", "--type", "B2", "--lambda", "1/2,0"]);
    assert_eq!(v["status"], "SEMISIMPLE_UNIQUE_SIMPLE");
    let v = json(&["status", "--type", "A3", "--lambda", "0,0,0"]);
    assert_eq!(v["status"], "TYPE_A_UNSUPPORTED");
}

#[test]
fn zigzag_and_kfunctor_pass() {
    let v = json(&["zigzag", "--type", "E6"]);
    assert_eq!(v["dim"], 22);
    assert_eq!(v["radical_series"], serde_json::json!([22, 16, 6, 0]));
    let v = json(&["zigzag", "--edges", "1-2,2-3,2-4"]);
    assert_eq!(v["dim"], 14);
    let v = json(&["kfunctor", "--type", "D4"]);
    assert_eq!(v["orbit_lattice"]["regular_dim"], 192);
}

#[test]
fn zigzag_tsv_header() {
    let out = lieblocks(&["zigzag", "--type", "A2", "--tsv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("left\tright\tproduct"));
    assert_eq!(text.lines().count(), 1 + 6 * 6);
}

#[test]
fn primid_labels() {
    let v = json(&["primid", "--type", "D5", "--lambda", "0,0,-1,0,0"]);
    let labels = v["labels_at"].as_array().unwrap();
    assert_eq!(labels.len(), 1);
    assert_eq!(labels[0]["node"], 3);
}

#[test]
fn dichotomy_exit_codes() {
    let v = json(&["dichotomy", "--type", "E6"]);
    assert_eq!(v["d"], 22);
    assert_eq!(v["m"], 32);
    // the expected sign for type A is d > m, which the computation contradicts
    let out = lieblocks(&["dichotomy", "--type", "A4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("A4"));
}

#[test]
fn usage_errors() {
    for args in [
        &["info", "--type", "D3"][..],
        &["info", "--type", "Q7"],
        &["status", "--type", "D4", "--lambda", "1,0"],
        &["status", "--type", "D4", "--lambda", "x,0,0,0"],
        &["frobnicate"],
    ] {
        let out = lieblocks(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
    let out = lieblocks(&["info", "--type", "E9"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("E requires rank 6, 7 or 8"));
}

#[test]
fn verify_all_is_deterministic() {
    let a = lieblocks(&["verify-all", "--max-rank", "8"]);
    let b = lieblocks(&["verify-all", "--max-rank", "8", "--sequential"]);
    assert_eq!(a.stdout, b.stdout);
    // the A-type rows of the published codimension table are off by two
    assert_eq!(a.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&a.stderr);
    assert!(stderr.lines().all(|l| l.contains("A")));
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    let failing: Vec<u64> = v["criteria"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["pass"] == false)
        .map(|c| c["id"].as_u64().unwrap())
        .collect();
    assert_eq!(failing, [2, 8]);
}
