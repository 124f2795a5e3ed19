use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mitosis")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn character_record_fields() {
    let v = json(&["character", "sp4", "--lambda", "1,1", "--w", "s2s1"]);
    for key in ["w", "word", "subword", "faces", "lattice_count", "demazure_dim", "match"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["match"], true);
    assert_eq!(v["lattice_count"], v["demazure_dim"]);
}

#[test]
fn identity_and_longest_element() {
    assert_eq!(json(&["character", "sp4", "--lambda", "1,1", "--w", "e"])["lattice_count"], 1);
    assert_eq!(json(&["character", "gl3", "--lambda", "0,1,2", "--w", "w0"])["lattice_count"], 8);
}

#[test]
fn every_element_at_once() {
    let v = json(&["character", "gl3", "--lambda", "0,1,2", "--w", "all"]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 6);
    assert!(rows.iter().all(|r| r["match"] == true));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["character", "sp4", "--w", "s7"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["mitosis", "gl3", "--ops", "1,x"]).status.code(), Some(2));
    assert_eq!(run(&["mitosis", "gl3", "--ops", "5"]).status.code(), Some(2));
}

#[test]
fn mitosis_steps() {
    let v = json(&["mitosis", "sp4", "--lambda", "1,1", "--ops", "2,1"]);
    assert_eq!(v["steps"][2]["faces"].as_array().unwrap().len(), 2);
    let v = json(&["mitosis", "sp4", "--ops", "1,1"]);
    assert!(v["steps"][2]["faces"].as_array().unwrap().is_empty());
    let v = json(&["mitosis", "gl3", "--lambda", "0,1,2", "--ops", "1,2,1"]);
    assert_eq!(v["steps"][3]["faces"], serde_json::json!([[]]));
}

#[test]
fn polytope_json_round_trips() {
    use mitosis::geometry::{polytopes_equal, HPolytope, PolytopeJson};
    use mitosis::instances::sp4_ddo;
    use mitosis::rational::ratio;
    let v = json(&["polytope", "sp4", "--l1", "3/2", "--l2", "1"]);
    let pj: PolytopeJson = serde_json::from_value(v).unwrap();
    let p = HPolytope::from_json(&pj).unwrap();
    assert!(polytopes_equal(&p, &sp4_ddo(&ratio(3, 2), &ratio(1, 1)).unwrap().poly).unwrap());
    let v = json(&["polytope", "cone-c0", "--n", "3"]);
    assert_eq!(v["dim"], 9);
    assert_eq!(v["cone"], true);
}

#[test]
fn pipedream_from_file_and_out_flag() {
    let dir = std::env::temp_dir().join(format!("mitosis-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("d.json");
    std::fs::write(&input, r#"{"n":3,"crosses":[[1,3],[2,2],[2,3],[4,2],[4,3],[5,3]]}"#).unwrap();
    let out = dir.join("out.json");
    let st = run(&[
        "pipedream", "skew", "--n", "3", "--word", "2", "--input", input.to_str().unwrap(), "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(st.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 3);
    let a = run(&["pipedream", "skew", "--word", "2", "--input", input.to_str().unwrap(), "--render", "ascii"]);
    let b = run(&["pipedream", "skew", "--word", "2", "--input", input.to_str().unwrap(), "--render", "ascii"]);
    assert_eq!(a.stdout, b.stdout);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn valuation_points() {
    let v = json(&["valuation", "rho-points"]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 16);
    assert_eq!(rows.iter().filter(|r| r["vertex"] == true).count(), 11);
}

#[test]
fn verify_okounkov_and_skew() {
    assert_eq!(json(&["verify", "okounkov"])["pass"], true);
    assert_eq!(json(&["verify", "skew"])["pass"], true);
}
