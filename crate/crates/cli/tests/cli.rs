use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superalt")).args(args).output().expect("binary runs")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn build_octonion() {
    let o = run(&["build", "octonion", "--field", "GF(5)"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["dim"], 8);
    assert_eq!(v["field"], "GF(5)");
}

#[test]
fn build_respects_the_characteristic_gate() {
    let o = run(&["build", "b12", "--field", "GF(5)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(!o.stderr.is_empty());
}

#[test]
fn build_f1x_with_lambda() {
    let v = json(&run(&["build", "f1x", "--lambda", "1", "--field", "Q"]));
    assert_eq!(v["dim"], 2);
    assert_eq!(v["parity"], serde_json::json!([0, 1]));
}

#[test]
fn unknown_names_are_usage_errors() {
    assert_eq!(run(&["build", "nosuch"]).status.code(), Some(2));
    assert_eq!(run(&["check", "nosuch"]).status.code(), Some(2));
    assert_eq!(run(&["catalog", "build", "nosuch"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["build", "octonion", "--field", "GF(4)"]).status.code(), Some(2));
}

#[test]
fn verify_octonion_and_sedenion() {
    let o = run(&["verify", "algebra", "octonion"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let verdicts = v["verdicts"].as_object().unwrap();
    assert_eq!(verdicts.keys().filter(|k| k.starts_with("identity ")).count(), 9);
    assert!(verdicts.values().all(|x| x == "pass"));

    let s = run(&["verify", "algebra", "sedenion"]);
    assert_eq!(s.status.code(), Some(1));
    let v = json(&s);
    assert_eq!(v["verdicts"]["superalternative"], "fail");
    assert!(v["witnesses"]["superalternative"].is_string());
}

#[test]
fn verify_regular_b12() {
    let o = run(&["verify", "bimodule", "reg:b12", "--field", "GF(3)"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    for k in ["alternative", "irreducible", "faithful"] {
        assert_eq!(v["verdicts"][k], "pass");
    }
}

#[test]
fn verify_reads_files_written_by_build() {
    let dir = std::env::temp_dir().join(format!("superalt-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let a = dir.join("o.json");
    let b = dir.join("v.json");
    assert_eq!(run(&["build", "octonion", "--field", "GF(7)", "--out", a.to_str().unwrap()]).status.code(), Some(0));
    assert_eq!(run(&["verify", "algebra", a.to_str().unwrap()]).status.code(), Some(0));
    let o = run(&["catalog", "build", "v_eps", "--field", "GF(7)", "--params", "eps=2", "--out", b.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(run(&["verify", "bimodule", b.to_str().unwrap()]).status.code(), Some(0));
    std::fs::write(&a, "{\"field\": \"GF(7)\"}").unwrap();
    assert_eq!(run(&["verify", "algebra", a.to_str().unwrap()]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn catalog_list_and_check() {
    let v = json(&run(&["catalog", "list"]));
    let names: Vec<&str> = v["entries"].as_array().unwrap().iter().map(|e| e["name"].as_str().unwrap()).collect();
    assert!(names.contains(&"v33") && names.contains(&"f1x_eps") && names.contains(&"bvd"));

    let o = run(&["catalog", "check", "v33", "--field", "GF(3)", "--params", "lambda=1,mu=2"]);
    assert_eq!(o.status.code(), Some(0));
    let r = &json(&o)["reports"][0];
    assert_eq!(r["alternative"], "pass");
    assert_eq!(r["associative"], false);
    assert_eq!(r["opposite_class"], "both");

    let bad = run(&["catalog", "check", "v33", "--field", "GF(3)", "--params", "lambda=1,mu=2", "--corrupt"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn u1_commands() {
    let v = json(&run(&["u1", "mul", "--lambda", "1", "--field", "GF(7)", "ab", "ab"]));
    // (ab)(ab) = -t^2 + 2t + (1 - t)ab at lambda = 1
    let w = json(&run(&["u1", "mul", "--lambda", "1", "--field", "GF(7)", "-t^2+2*t+(1-t)*ab", "1"]));
    assert_eq!(v["product"], w["product"]);
    assert_eq!(v["product"], w["x"]);

    let s = json(&run(&["u1", "specialize", "--alpha", "1", "--field", "Q"]));
    assert_eq!(s["f_irreducible"], true);
    assert_eq!(s["algebra"]["dim"], 4);

    let i = json(&run(&["u1", "ideal", "--alpha", "1"]));
    assert_eq!(i["square_zero"], true);
    assert_eq!(i["ideal"].as_array().unwrap().len(), 2);
    assert_eq!(i["quotient"]["dim"], 2);
}

#[test]
fn check_suite_and_corruption() {
    let o = run(&["check", "min_ideals"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["verdicts"]["min_ideals"], "pass");

    let bad = run(&["check", "catalog", "--corrupt", "v33"]);
    assert_eq!(bad.status.code(), Some(1));
    let v = json(&bad);
    let failures = v["suites"][0]["failures"].as_array().unwrap();
    assert!(!failures.is_empty());
    assert!(failures.iter().all(|f| f["name"].as_str().unwrap().starts_with("v33[")));
}

#[test]
fn reports_are_deterministic() {
    let a = run(&["check", "opposite"]);
    let b = run(&["check", "opposite"]);
    assert_eq!(a.stdout, b.stdout);
    let t = json(&run(&["check", "opposite", "--timing"]));
    assert!(t["timing_ms"].is_u64());
}
