mod common;

use common::{presentation, presentation_inputs, ring};
use proptest::prelude::*;
use serde_json::json;
use sheafcoh::algebra::{PrimeField, Rationals, Ring};
use sheafcoh::cohomology::CoherentSheaf;
use sheafcoh::constructions::omega;
use sheafcoh::harness::{
    default_window, locally_free_corpus, parse_module, to_module_file, verify_beilinson, verify_bott,
    verify_key_theorem, verify_oracle, verify_regularity_tensor, verify_subadditivity, InstanceReport,
    VerificationReport,
};
use sheafcoh::resolution::Presentation;

fn round_trip(m: &Presentation<PrimeField>) -> Presentation<PrimeField> {
    let text = to_module_file(m).to_json();
    parse_module(text.as_bytes()).unwrap().try_into().unwrap()
}

#[test]
fn corpus_round_trips_through_module_files() {
    for n in 1..=2 {
        let r = ring(n + 1);
        let (lo, hi) = default_window(n);
        for e in locally_free_corpus(&r, 2) {
            let back = round_trip(&e.module);
            assert_eq!(back, e.module, "{}", e.label);
            let a = CoherentSheaf::new(e.module.clone()).table(lo, hi);
            let b = CoherentSheaf::new(back).table(lo, hi);
            assert_eq!(a, b, "{}", e.label);
        }
    }
}

#[test]
fn rational_modules_round_trip() {
    let r = Ring::<Rationals>::rationals(3).unwrap();
    let om = omega(&r, 1).unwrap();
    let text = to_module_file(&om).to_json();
    let back: Presentation<Rationals> = parse_module(text.as_bytes()).unwrap().try_into().unwrap();
    let (lo, hi) = default_window(2);
    assert_eq!(CoherentSheaf::new(om).table(lo, hi), CoherentSheaf::new(back).table(lo, hi));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn random_modules_round_trip((nv, gens, steps, coeffs) in presentation_inputs()) {
        let m = presentation(nv, &gens, &steps, &coeffs);
        let back = round_trip(&m);
        prop_assert_eq!(&back, &m);
        let (lo, hi) = default_window(nv - 1);
        prop_assert_eq!(CoherentSheaf::new(m).table(lo, hi), CoherentSheaf::new(back).table(lo, hi));
    }
}

#[test]
fn suites_are_deterministic() {
    let r = ring(3);
    let runs = |seed| {
        vec![
            verify_subadditivity(&r, 12, seed).to_json(),
            verify_regularity_tensor(&r, 12, seed).to_json(),
            verify_beilinson(&r, 6, seed).to_json(),
            verify_oracle(&r, 12, seed).to_json(),
            verify_bott(&r).to_json(),
            verify_key_theorem(3, 2, 6, seed).unwrap().to_json(),
        ]
    };
    assert_eq!(runs(9), runs(9));
    assert_ne!(runs(9)[0], runs(10)[0]);
}

#[test]
fn one_failure_fails_the_report() {
    let ok = |k: i64| InstanceReport::new(json!({"k": k}), "k >= 0", json!(k), k >= 0, || json!({"lhs": k, "rhs": 0}));
    let all = VerificationReport::new("toy", 1, (0..5).map(ok).collect());
    assert!(all.all_pass);
    let mut instances: Vec<_> = (0..5).map(ok).collect();
    instances.push(ok(-1));
    let bad = VerificationReport::new("toy", 1, instances);
    assert!(!bad.all_pass);
    assert_eq!(bad.failures().count(), 1);
    let v: serde_json::Value = serde_json::from_str(&bad.to_json()).unwrap();
    assert_eq!(v["instances"][5]["witness"], json!({"lhs": -1, "rhs": 0}));
    assert!(v["instances"][0].get("witness").is_none());
}
