use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cactus")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).expect("json line"))
        .collect()
}

fn single(out: &Output) -> Value {
    let lines = json_lines(out);
    assert_eq!(lines.len(), 1, "expected one report object");
    lines.into_iter().next().unwrap()
}

#[test]
fn rsk_examples() {
    let v = single(&run(&["rsk", "2113"]));
    assert_eq!(v["p"]["rows"], serde_json::json!([[1, 1, 3], [2]]));
    assert_eq!(v["q"]["rows"], serde_json::json!([[1, 3, 4], [2]]));
    assert_eq!(v["seed"], 0);

    let empty = single(&run(&["rsk", ""]));
    assert_eq!(empty["p"]["rows"], serde_json::json!([]));
    assert_eq!(empty["q"]["rows"], serde_json::json!([]));

    let column = single(&run(&["rsk", "321"]));
    assert_eq!(column["p"]["rows"], serde_json::json!([[1], [2], [3]]));
    assert_eq!(column["q"]["rows"], serde_json::json!([[1], [2], [3]]));
}

#[test]
fn rsk_rejects_a_bad_alphabet() {
    assert_eq!(code(&run(&["rsk", "2x1"])), 2);
    assert_eq!(code(&run(&["rsk", "31", "--rank", "2"])), 2);
}

#[test]
fn enumerate_cgds_of_the_small_frame() {
    let out = run(&["enumerate", "cgd", "--rank", "2", "--degree", "5"]);
    assert_eq!(code(&out), 0);
    let lines = json_lines(&out);
    assert_eq!(lines.len(), 6);
    let summary = lines.last().unwrap();
    assert_eq!(summary["count"], 5);
    assert_eq!(summary["lr_coefficient"], 5);
    let items: Vec<String> = lines[..5].iter().map(|v| v.to_string()).collect();
    let mut sorted = items.clone();
    sorted.sort();
    assert_eq!(items, sorted);
}

#[test]
fn enumerate_decgds_of_a_shape() {
    let out = run(&["enumerate", "decgd", "--rank", "2", "--degree", "5", "--shape", "[[2,1],[1],[2]]"]);
    assert_eq!(code(&out), 0);
    let summary = json_lines(&out).pop().unwrap();
    assert_eq!(summary["count"], 1);
    assert_eq!(summary["lr_coefficient"], 1);
}

#[test]
fn enumerate_rejects_a_shape_of_the_wrong_size() {
    let out = run(&["enumerate", "decgd", "--rank", "2", "--degree", "5", "--shape", "[[2,1],[1]]"]);
    assert_eq!(code(&out), 2);
    assert!(out.stdout.is_empty());
}

#[test]
fn bounds_need_an_acknowledgment() {
    let big = ["enumerate", "cgd", "--rank", "3", "--degree", "6"];
    let out = run(&big);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeds the bound"));
    let mut raised = big.to_vec();
    raised.extend(["--bound", "9"]);
    assert_eq!(code(&run(&raised)), 2);
    raised.push("--i-know-this-is-big");
    let out = run(&raised);
    assert_eq!(code(&out), 0);
    assert_eq!(json_lines(&out).pop().unwrap()["count"], 42);
}

#[test]
fn syt_orbits() {
    let v = single(&run(&["orbits", "syt", "--shape", "[2,1]"]));
    assert_eq!(v["orbits"], serde_json::json!([[0, 1]]));
    assert_eq!(v["generator_images"]["s_13"], serde_json::json!([1, 0]));
    assert_eq!(v["basepoint"], "identity");

    let row = single(&run(&["orbits", "syt", "--shape", "[4]"]));
    assert_eq!(row["orbits"], serde_json::json!([[0]]));
}

#[test]
fn word_orbits_report_fingerprints_and_fibers() {
    let v = single(&run(&["orbits", "words", "--rank", "3", "--weight", "[1,1,1]"]));
    let orbits = v["orbits"].as_array().unwrap();
    assert_eq!(orbits.len(), 4);
    assert_eq!(v["fingerprints"].as_array().unwrap().len(), 4);
    // the action keeps P-symbols, so every orbit has one P-symbol
    for f in v["fingerprints"].as_array().unwrap() {
        assert_eq!(f["p_symbols"].as_array().unwrap().len(), 1);
    }
    assert_eq!(v["orbits_equal_p_fibers"], true);
    assert_eq!(v["orbits_equal_q_fibers"], false);
    assert_eq!(v["singular"]["orbits"], serde_json::json!([[0]]));
}

#[test]
fn decgd_orbits_fingerprint_through_tableaux() {
    let v = single(&run(&["orbits", "decgd", "--rank", "2", "--degree", "4", "--shape", "[[1],[1],[1],[1]]"]));
    let total: usize = v["orbits"].as_array().unwrap().iter().map(|o| o.as_array().unwrap().len()).sum();
    assert_eq!(total, v["elements"].as_array().unwrap().len());
    assert!(v["fingerprints"][0]["q_symbols"].is_array());
}

#[test]
fn duality_suite_passes() {
    let out = run(&["check", "duality"]);
    assert_eq!(code(&out), 0);
    let v = single(&out);
    assert_eq!(v["passed"], true);
    assert_eq!(v["max_length"], 6);
    assert_eq!(v["max_rank"], 3);
}

#[test]
fn equivariance_suite_passes() {
    let out = run(&["check", "equivariance", "--bound", "4"]);
    assert_eq!(code(&out), 0);
    let v = single(&out);
    assert_eq!(v["cases"].as_array().unwrap().len(), 1 + 2 + 3 + 5);

    let one = run(&[
        "check",
        "equivariance",
        "--shape",
        "[[2,1],[1],[2]]",
        "--weight",
        "[3,3]",
        "--rank",
        "2",
        "--degree",
        "5",
    ]);
    assert_eq!(code(&one), 0);
    assert_eq!(single(&one)["cases"][0]["lr_coefficient"], 1);
}

#[test]
fn gaudin_suite_reports_separation() {
    let out = run(&["check", "gaudin", "--seed", "7"]);
    assert_eq!(code(&out), 0);
    let v = single(&out);
    assert!(v["min_separation"].as_f64().unwrap() > 1e-9);
    assert_eq!(v["seed"], 7);
}

#[test]
fn spectrum_of_three_sites() {
    let out = run(&["spectrum", "--weight", "[2,1]", "--z", "0,1,4"]);
    assert_eq!(code(&out), 0);
    let v = single(&out);
    assert_eq!(v["dimension"], 2);
    assert_eq!(v["simple"], true);
    assert_eq!(v["z"], serde_json::json!(["0", "1", "4"]));
    for tuple in v["joint_spectrum"].as_array().unwrap() {
        let sum: f64 = tuple.as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).sum();
        assert!(sum.abs() < 1e-9);
    }
    assert_eq!(code(&run(&["spectrum", "--weight", "[2,1]", "--z", "0,1,1"])), 2);
    assert_eq!(code(&run(&["spectrum", "--weight", "[2,1]", "--z", "0,1"])), 2);
}

#[test]
fn unknown_suite_is_a_usage_error() {
    assert_eq!(code(&run(&["check", "everything"])), 2);
}

#[test]
fn output_is_reproducible_and_can_go_to_a_file() {
    let args = ["spectrum", "--weight", "[2,1,1]", "--seed", "3"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(single(&a)["seed"], 3);

    let dir = std::env::temp_dir().join(format!("cactus-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.jsonl");
    let out = run(&["enumerate", "cgd", "--rank", "2", "--degree", "4", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written.lines().count(), 3);
    std::fs::remove_dir_all(&dir).unwrap();
}
