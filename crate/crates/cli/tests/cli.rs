use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ptensor"))
        .args(args)
        .env_remove("PTENSOR_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../docs/schema").join(name);
    let s: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&s).unwrap()
}

fn assert_valid(v: &jsonschema::Validator, instance: &serde_json::Value) {
    let errors: Vec<String> = v.iter_errors(instance).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}");
}

#[test]
fn fig2_json_has_every_row_and_validates() {
    let o = run(&["table", "--prime", "5", "--which", "fig2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_valid(&schema("table-output.schema.json"), &v);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 72);
    let g3 = rows.iter().find(|r| r["row"] == "G3").unwrap();
    assert_eq!(g3["GxG"]["text"], "Z_p^9");
    assert_eq!(g3["GxG"]["order"], 5u64.pow(9).to_string());
}

#[test]
fn fig1_json_validates_at_seven() {
    let o = run(&["table", "--prime", "7", "--which", "fig1", "--format", "json", "--numeric"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_valid(&schema("table-output.schema.json"), &v);
    let g64 = v["rows"].as_array().unwrap().iter().find(|r| r["row"] == "G64").unwrap();
    assert_eq!(g64["J2"]["text"], "Z_7^17");
}

#[test]
fn fig1_csv_layout() {
    let o = run(&["table", "--prime", "7", "--which", "fig1", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "G,cl,M,Z,G',G^ab,nabla,J2");
    assert_eq!(lines.len(), 73);
    assert!(lines.iter().any(|l| l.starts_with("\"G11,1\",")));
    assert!(lines.iter().any(|l| l.starts_with("\"G48,2\",")));
    assert!(lines.contains(&"G3,3,Z_p^3,Z_p^2,Z_p^3,Z_p^2,Z_p^3,Z_p^6"));
}

#[test]
fn text_table_is_deterministic() {
    let a = run(&["table", "--prime", "5", "--which", "fig2"]);
    let b = run(&["table", "--prime", "5", "--which", "fig2"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).lines().next().unwrap().starts_with("G "));
}

#[test]
fn bad_primes_are_usage_errors() {
    for p in ["4", "3", "2", "9", "x"] {
        let o = run(&["table", "--prime", p]);
        assert_eq!(o.status.code(), Some(2), "prime {p}");
    }
}

#[test]
fn verify_passes_at_five_and_seven() {
    for p in ["5", "7"] {
        let o = run(&["verify", "--prime", p, "--quiet"]);
        let out = stdout(&o);
        assert_eq!(o.status.code(), Some(0), "{out}");
        assert!(out.contains(&format!("verify p={p}: OK")));
        assert!(out.contains("ERRATUM"));
    }
}

#[test]
fn verify_one_family_shows_the_e1_bookkeeping() {
    let o = run(&["verify", "--prime", "5", "--family", "28"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("G28 p=5 order_wedge_eq_m_times_derived"));
    assert!(out.contains("|G∧G| = p^6, |M||G'| = p^6"));
    assert!(out.contains("records: 1 rows"));
}

#[test]
fn verify_seed_comes_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_ptensor"))
        .args(["verify", "--prime", "5", "--family", "3"])
        .env("PTENSOR_SEED", "12345")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("seed 12345"));
}

#[test]
fn verify_fails_on_a_corrupted_table_and_names_the_row() {
    let mut v: serde_json::Value = serde_json::from_str(ptensor::catalog::EMBEDDED_JSON).unwrap();
    let g25 = v["fig2"]
        .as_array_mut()
        .unwrap()
        .iter_mut()
        .find(|r| r["row"] == "G25")
        .unwrap();
    g25["tensor_square"] = "Z_{p^3} + Z_{p^2} + Z_p".into();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tables.json");
    std::fs::write(&path, v.to_string()).unwrap();
    let o = run(&["verify", "--prime", "5", "--quiet", "--data", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("verify p=5: FAILED"));
    assert!(out.contains("  G25 tensor_square"), "{out}");
}

#[test]
fn unreadable_data_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, "{").unwrap();
    let o = run(&["verify", "--data", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn group_presentation_uses_the_primitive_root() {
    let o = run(&["group", "--family", "9", "--prime", "5", "--show", "presentation"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("[g3,g1] = g4 g5^2"));
}

#[test]
fn group_elements() {
    let o = run(&["group", "--family", "70", "--prime", "5", "--show", "elements"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("3125 elements"));
}

#[test]
fn parameter_choice_does_not_change_the_invariants() {
    let get = |a: &str| {
        let o = run(&["group", "--family", "29a", "--prime", "7", "--param", a, "--format", "json"]);
        assert_eq!(o.status.code(), Some(0));
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_valid(&schema("invariant-record.schema.json"), &v);
        v
    };
    let one = get("a=1");
    let two = get("a=2");
    assert_eq!(one["computed"], two["computed"]);
    assert_ne!(one["relations"], two["relations"]);
}

#[test]
fn group_subcases_and_bad_params() {
    let o = run(&["group", "--family", "11,2", "--prime", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("G11,2 at p=7 (k=3"));

    let o = run(&["group", "--family", "12", "--prime", "5", "--param", "k=3"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("k=3") && err.contains("1..=2"), "{err}");

    let o = run(&["group", "--family", "11,2", "--prime", "7", "--param", "k=1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["group", "--family", "71", "--prime", "5"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["group", "--family", "3", "--prime", "5", "--param", "q=1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn errata_lists_the_known_conflicts() {
    let o = run(&["errata"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("G70 [conflicting] epicenter_classification"));
    assert!(out.contains("G12k [conflicting] multiplier_classification"));
    assert!(out.contains("0 undocumented conflicts, 0 documented conflicts not detected"));
}

#[test]
fn embedded_data_matches_its_schema() {
    let v: serde_json::Value = serde_json::from_str(ptensor::catalog::EMBEDDED_JSON).unwrap();
    assert_valid(&schema("tables-data.schema.json"), &v);
}
