use ptensor::catalog::{Tables, EMBEDDED_JSON};
use ptensor::oracle::{
    bilinear_tensor_oracle, counting_vs_snf, gamma_relation_check, small_types, tensor_sweep,
    QuadraticModel,
};
use ptensor::verify::{verify, VerifyOptions};
use ptensor::AbelianType;

#[test]
fn bilinear_examples() {
    let t = |e: &[u32]| AbelianType::new(e.iter().copied());
    assert_eq!(bilinear_tensor_oracle(&t(&[2]), &t(&[1]), 5).unwrap(), t(&[1]));
    assert_eq!(bilinear_tensor_oracle(&t(&[1, 1]), &t(&[1]), 5).unwrap(), t(&[1, 1]));
    assert!(bilinear_tensor_oracle(&t(&[]), &t(&[2, 1]), 7).unwrap().is_trivial());
}

#[test]
fn bilinear_sweep_matches_the_gcd_rule() {
    let (checked, bad) = tensor_sweep(&[3, 5, 7], 4, 3).unwrap();
    assert_eq!(checked, 3 * small_types(4, 3).len().pow(2));
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn gamma_examples() {
    let r = gamma_relation_check(&QuadraticModel::new(vec![5]), 10_000, 1);
    assert!(r.passed());
    assert_eq!(r.generated_order, 5);
    let r = gamma_relation_check(&QuadraticModel::new(vec![5, 25]), 10_000, 2);
    assert!(r.passed());
    assert_eq!(r.generated_order, 5 * 25 * 5);
    assert!(r.identity_ok);
    let m = QuadraticModel::new(vec![9, 27]);
    assert_eq!(m.order_of_values(), m.generated_order());
}

#[test]
fn gamma_model_order_matches_the_closed_form() {
    for (p, exps) in [(3u64, vec![1, 2]), (5, vec![2, 3]), (7, vec![1, 2]), (5, vec![1, 1])] {
        let closed = AbelianType::new(exps.clone()).gamma(p).unwrap();
        let m = QuadraticModel::new(exps.iter().map(|&e| p.pow(e)).collect());
        assert_eq!(m.generated_order(), u128::from(p).pow(closed.log_order()));
    }
}

#[test]
fn counting_sweep() {
    let r = counting_vs_snf(1000, 7).unwrap();
    assert_eq!(r.trials, 1000);
    assert!(r.passed(), "{:?}", r.mismatches);
}

#[test]
fn verify_passes_on_the_embedded_tables() {
    for p in [5, 7] {
        let opts = VerifyOptions {
            prime: p,
            gamma_trials: 1_000,
            counting_trials: 200,
            ..VerifyOptions::default()
        };
        let report = verify(Tables::embedded(), &opts).unwrap();
        assert!(report.passed(), "{:?}", report.failures());
        assert_eq!(report.records.len(), 72);
    }
}

#[test]
fn verify_names_the_row_of_a_corrupted_table() {
    let mut v: serde_json::Value = serde_json::from_str(EMBEDDED_JSON).unwrap();
    let fig1 = v["fig1"].as_array_mut().unwrap();
    let g3 = fig1.iter_mut().find(|r| r["row"] == "G3").unwrap();
    g3["nabla"] = "Z_p^4".into();
    let tables = Tables::from_json(&v.to_string()).unwrap();
    let opts = VerifyOptions {
        skip_oracles: true,
        ..VerifyOptions::default()
    };
    let report = verify(&tables, &opts).unwrap();
    assert!(!report.passed());
    let failures = report.failures();
    assert!(failures.iter().all(|f| f.starts_with("G3 ")), "{failures:?}");
    assert!(failures.iter().any(|f| f.contains("nabla")));
}

#[test]
fn an_undocumented_list_conflict_fails_verify() {
    let mut v: serde_json::Value = serde_json::from_str(EMBEDDED_JSON).unwrap();
    let list = v["multiplier_classification"].as_array_mut().unwrap();
    list[0]["rows"].as_array_mut().unwrap().push("G3".into());
    let tables = Tables::from_json(&v.to_string()).unwrap();
    let opts = VerifyOptions {
        skip_oracles: true,
        family: Some(3),
        ..VerifyOptions::default()
    };
    let report = verify(&tables, &opts).unwrap();
    assert!(report.failures().iter().any(|f| f.starts_with("G3 undocumented")));
}
