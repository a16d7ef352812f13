//! Verification suites and the artifacts they produce.

use bicons_engine::certificate::Status;
use bicons_engine::identities::verify_identities;
use bicons_engine::lemma22::{verify_lemma22, NValue};
use bicons_engine::rotational::{integrate_profile, order_check, verify_rotational, ProfilePoint};
use bicons_engine::theorems::{
    certificate_or_partial, lemma32_case_b_tail, lemma42_b_tail, lemma42_case12, theorem1_case1,
    theorem1_case2, theorem2_case1, theorem2_case2, theorem2_case31, theorem2_case32,
    theorem2_case32_d1_nonzero, theorem2_case32_d1_zero, tn311_membership, verify_lemma32,
    verify_lemma42, Certificate, ChainError, ChainOptions, Membership,
};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Identities,
    Lemma22,
    Theorem1,
    Theorem2,
    Rotational,
    All,
}

impl Target {
    fn expand(self) -> Vec<Target> {
        match self {
            Target::All => vec![
                Target::Identities,
                Target::Lemma22,
                Target::Theorem1,
                Target::Theorem2,
                Target::Rotational,
            ],
            t => vec![t],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OdeParams {
    pub h1: f64,
    pub dh1: f64,
    pub step: f64,
    pub length: f64,
    pub tol: f64,
}

impl Default for OdeParams {
    fn default() -> Self {
        OdeParams {
            h1: 0.6,
            dh1: 0.0,
            step: 1e-4,
            length: 1.0,
            tol: 1e-6,
        }
    }
}

/// One unit of work. Each job yields exactly one artifact.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Job {
    Identities,
    Lemma22,
    Lemma32,
    Lemma32CaseB,
    Theorem1Case1,
    Theorem1Case2,
    Tn311Membership,
    Lemma42,
    Lemma42A1A2,
    Lemma42BTail,
    Theorem2Case1,
    Theorem2Case2,
    Theorem2Case31,
    Theorem2Case32,
    Theorem2Case32D1Zero,
    Theorem2Case32D1Nonzero,
    Rotational(OdeParams),
}

pub struct Artifact {
    pub name: String,
    pub status: Status,
    pub value: Value,
    /// One-line description used by the text format.
    pub headline: String,
}

/// The jobs for a target, optionally restricted to one dimension. Returns
/// `None` when the restriction leaves nothing to run.
pub fn plan(target: Target, n: Option<u32>, ode: OdeParams) -> Option<Vec<Job>> {
    let mut jobs = Vec::new();
    for t in target.expand() {
        match t {
            Target::Identities => jobs.push(Job::Identities),
            Target::Lemma22 => jobs.push(Job::Lemma22),
            Target::Theorem1 if n != Some(4) => jobs.extend([
                Job::Lemma32,
                Job::Lemma32CaseB,
                Job::Theorem1Case1,
                Job::Theorem1Case2,
                Job::Tn311Membership,
            ]),
            Target::Theorem2 if n != Some(3) => jobs.extend([
                Job::Lemma42,
                Job::Lemma42A1A2,
                Job::Lemma42BTail,
                Job::Theorem2Case1,
                Job::Theorem2Case2,
                Job::Theorem2Case31,
                Job::Theorem2Case32,
                Job::Theorem2Case32D1Zero,
                Job::Theorem2Case32D1Nonzero,
            ]),
            Target::Rotational => jobs.push(Job::Rotational(ode)),
            _ => {}
        }
    }
    (!jobs.is_empty()).then_some(jobs)
}

fn certificate_artifact(r: Result<Certificate, ChainError>) -> Artifact {
    let cert = certificate_or_partial(r);
    let headline = match cert.comparisons().find(|c| !c.matched) {
        Some(c) => match c.first_mismatch() {
            Some(d) => format!("{} differs first at {}", c.fixture, d.monomial),
            None => format!("{} differs", c.fixture),
        },
        None => match cert.notes.first() {
            Some(note) => note.clone(),
            None => format!("final polynomial has {} terms", cert.final_polynomial.len()),
        },
    };
    Artifact {
        name: cert.name.clone(),
        status: cert.status,
        value: serde_json::to_value(&cert).expect("certificate serializes"),
        headline,
    }
}

pub fn run_job(job: Job, opts: ChainOptions) -> Artifact {
    match job {
        Job::Identities => {
            let r = verify_identities();
            let matched = r.entries.iter().filter(|e| e.comparison.matched).count();
            Artifact {
                name: "identities".into(),
                status: r.status,
                headline: format!("{matched}/{} relations match", r.entries.len()),
                value: serde_json::to_value(&r).expect("report serializes"),
            }
        }
        Job::Lemma22 => {
            let r = verify_lemma22(NValue::Symbolic).expect("symbolic n is supported");
            Artifact {
                name: "lemma2.2".into(),
                status: r.status,
                headline: format!("{} matched closed forms", r.matched_count()),
                value: serde_json::to_value(&r).expect("report serializes"),
            }
        }
        Job::Lemma32 => certificate_artifact(verify_lemma32(opts)),
        Job::Lemma32CaseB => certificate_artifact(lemma32_case_b_tail(opts)),
        Job::Theorem1Case1 => certificate_artifact(theorem1_case1(opts)),
        Job::Theorem1Case2 => certificate_artifact(theorem1_case2(opts)),
        Job::Tn311Membership => {
            let cert = certificate_or_partial(theorem1_case2(opts));
            let m = tn311_membership(&cert);
            let (status, headline) = match &m {
                Membership::Yes { cofactors, .. } => (
                    Status::VerifiedProperty,
                    format!("member with {} cofactors", cofactors.len()),
                ),
                Membership::Inconclusive { reason } => (Status::Inconclusive, reason.clone()),
            };
            Artifact {
                name: "theorem1-tn311-membership".into(),
                status,
                headline,
                value: json!({
                    "name": "theorem1-tn311-membership",
                    "target": cert.output("Tn311"),
                    "generators": ["Tn36", "Tn37sub", "Tn310sub"],
                    "result": m,
                    "status": status,
                }),
            }
        }
        Job::Lemma42 => certificate_artifact(verify_lemma42(opts)),
        Job::Lemma42A1A2 => certificate_artifact(lemma42_case12(opts)),
        Job::Lemma42BTail => certificate_artifact(lemma42_b_tail(opts)),
        Job::Theorem2Case1 => certificate_artifact(theorem2_case1(opts)),
        Job::Theorem2Case2 => certificate_artifact(theorem2_case2(opts)),
        Job::Theorem2Case31 => certificate_artifact(theorem2_case31(opts)),
        Job::Theorem2Case32 => certificate_artifact(theorem2_case32(opts)),
        Job::Theorem2Case32D1Zero => certificate_artifact(theorem2_case32_d1_zero(opts)),
        Job::Theorem2Case32D1Nonzero => certificate_artifact(theorem2_case32_d1_nonzero(opts)),
        Job::Rotational(p) => rotational_artifact(p),
    }
}

fn rotational_artifact(p: OdeParams) -> Artifact {
    let p0 = ProfilePoint::new(0.0, p.h1, p.dh1);
    let failed = |e: String| Artifact {
        name: "rotational".into(),
        status: Status::Mismatch,
        value: json!({ "name": "rotational", "status": Status::Mismatch, "error": e }),
        headline: e,
    };
    let run = match integrate_profile(p0, p.step, p.length) {
        Ok(r) => r,
        Err(e) => return failed(e.to_string()),
    };
    let report = match verify_rotational(&run, p.tol) {
        Ok(r) => r,
        Err(e) => return failed(e.to_string()),
    };
    let order = order_check(p0, p.length, 1e-3, 1e-6).ok();
    let status = if report.passed {
        Status::Verified
    } else {
        Status::Mismatch
    };
    let headline = match report.checks.iter().find(|c| !c.passed) {
        Some(c) => format!("{} = {:e} against bound {:e}", c.name, c.value, c.bound),
        None => format!(
            "{} samples, H varies by {:.6}",
            report.samples, report.mean_curvature_range
        ),
    };
    Artifact {
        name: "rotational".into(),
        status,
        headline,
        value: json!({
            "name": "rotational",
            "initial": p0,
            "step": p.step,
            "length": p.length,
            "report": report,
            "order_check": order,
            "status": status,
        }),
    }
}
