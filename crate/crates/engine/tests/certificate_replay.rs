//! Certificates survive serialization and replay to the same result.

use bicons_engine::certificate::Status;
use bicons_engine::poly::poly;
use bicons_engine::theorems::{
    replay, theorem1_case1, theorem2_case31, verify_lemma32, Certificate, ChainOptions,
};

fn lemma32() -> Certificate {
    verify_lemma32(ChainOptions::default()).unwrap()
}

#[test]
fn json_round_trip_preserves_certificate() {
    let cert = lemma32();
    let back: Certificate = serde_json::from_str(&cert.to_json()).unwrap();
    assert_eq!(back, cert);
}

#[test]
fn repeated_runs_serialize_identically() {
    let a = theorem2_case31(ChainOptions::default()).unwrap().to_json();
    let b = theorem2_case31(ChainOptions::default()).unwrap().to_json();
    assert_eq!(a, b);
}

#[test]
fn replay_reproduces_every_step() {
    for cert in [lemma32(), theorem1_case1(ChainOptions::default()).unwrap()] {
        let report = replay(&cert).unwrap();
        assert!(report.reproduced, "{} did not replay", cert.name);
        assert_eq!(report.first_difference, None);
    }
}

#[test]
fn replay_flags_a_tampered_output() {
    let mut cert = lemma32();
    let i = cert.chain.len() / 2;
    cert.chain[i].output = &cert.chain[i].output + &poly("lambda");
    let report = replay(&cert).unwrap();
    assert!(!report.reproduced);
    assert_eq!(report.first_difference, Some(i));
}

#[test]
fn tampered_status_is_not_reproduced() {
    let mut cert = lemma32();
    cert.status = Status::Inconclusive;
    assert!(!replay(&cert).unwrap().reproduced);
}
