use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gorenstein")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn gen_round_trips_through_hilbert() {
    let dir = std::env::temp_dir().join(format!("gorenstein-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("f.txt");
    let out = run(&["gen", "--e", "3", "--s", "4", "--seed", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("# e=3 s=4"));
    let out = run(&["hilbert", "--generator", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["hilbert_function"], serde_json::json!([1, 3, 6, 3, 1]));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn dr_routes_agree_for_even_socle() {
    let t1 = json(&run(&["dr", "--e", "3", "--s", "4", "--via", "t1"]));
    let t2 = json(&run(&["dr", "--e", "3", "--s", "4", "--via", "t2"]));
    let l = json(&run(&["dr", "--e", "3", "--s", "4", "--via", "lemma56"]));
    assert_eq!(t1["coefficients"], serde_json::json!([1, 0, -7, -7, 0, 1]));
    assert_eq!(t1["coefficients"], t2["coefficients"]);
    assert_eq!(t1["coefficients"], l["coefficients"]);
}

#[test]
fn dr_closed_form_rejects_odd_socle() {
    let out = run(&["dr", "--e", "2", "--s", "5", "--via", "t2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("even socle degree"));
    assert_eq!(run(&["dr", "--e", "2", "--s", "5"]).status.code(), Some(0));
}

#[test]
fn betti_csv_residue_field() {
    let out = run(&["betti", "--e", "3", "--s", "4", "--ring", "r", "--module", "k", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut totals = [0u64; 6];
    for line in text.lines().skip(1) {
        let f: Vec<u64> = line.split(',').map(|x| x.parse().unwrap()).collect();
        totals[f[0] as usize] += f[2];
    }
    assert_eq!(totals, [1, 3, 10, 29, 91, 272]);
}

#[test]
fn betti_json_over_q() {
    let out = run(&["betti", "--e", "3", "--s", "4", "--ring", "q", "--module", "r"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["ring"], "Q");
    assert_eq!(v["audit"], true);
    assert_eq!(v["totals"], serde_json::json!([1, 7, 7, 1, 0, 0]));
}

#[test]
fn degree_cap_is_inconclusive() {
    let out = run(&["betti", "--e", "3", "--s", "4", "--ring", "p", "--module", "power:2", "--max-degree", "6"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_all_passes() {
    let out = run(&["verify", "--e", "3", "--s", "4", "--suite", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["status"], "pass");
    assert_eq!(v["reports"].as_array().unwrap().len(), 3);
}

#[test]
fn maps_report() {
    let out = run(&["maps", "--e", "2", "--s", "4", "--check", "nu", "--check", "golod-criterion", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("nu_m_r,pass"));
    assert!(text.contains("golod_criterion,pass"));
}

#[test]
fn usage_errors_exit_3() {
    assert_eq!(run(&["gen"]).status.code(), Some(3));
    assert_eq!(run(&["gen", "--e", "3", "--s", "3"]).status.code(), Some(3));
    assert_eq!(run(&["gen", "--e", "3", "--s", "4", "--prime", "4"]).status.code(), Some(3));
    assert_eq!(run(&["gen", "--e", "1", "--s", "4"]).status.code(), Some(3));
    assert_eq!(run(&["betti", "--e", "3", "--s", "4", "--module", "bogus"]).status.code(), Some(3));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(3));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn exploration_flag_admits_socle_degree_three() {
    let out = run(&["hilbert", "--e", "3", "--s", "3", "--allow-s3"]);
    assert_eq!(out.status.code(), Some(0));
}
