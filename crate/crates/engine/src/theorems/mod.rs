//! Elimination chains for Lemma 3.2, Theorem 1, Lemma 4.2 and Theorem 2,
//! each producing replayable certificates.

mod base;
mod chain;
pub mod fixtures;
mod lemma32;
mod lemma42;
mod membership;
mod theorem1;
mod theorem2;

pub use base::{derive_base_equations, sum6_identity, BaseError, Sum6Report};
pub use chain::{
    is_lambda_eliminant, replay, run_chain, Certificate, ChainError, ChainOptions, ChainSpec,
    ChainStep, DiscardedFactor, EquationSet, Hypothesis, HypothesisKind, PropertyCheck,
    ReplayReport, StepError, StepOp, StepTemplate, TAIL_BUDGET,
};
pub use lemma32::{lemma32_case_b_tail, verify_lemma32};
pub use lemma42::{lemma42_b_tail, lemma42_case12, verify_lemma42, verify_lemma42_all};
pub use membership::{ideal_membership, Membership};
pub use theorem1::{theorem1_case1, theorem1_case2, tn311_membership, verify_theorem1};
pub use theorem2::{
    g12_from_identities, theorem2_case1, theorem2_case2, theorem2_case31, theorem2_case32,
    theorem2_case32_d1_nonzero, theorem2_case32_d1_zero, verify_theorem2,
};

use crate::certificate::Status;

/// The worst status over a family of sibling certificates.
pub fn overall_status(certs: &[Certificate]) -> Status {
    certs
        .iter()
        .fold(Status::Verified, |acc, c| acc.worst(c.status))
}

/// Converts a chain error into the partial certificate it carries, so a
/// failed chain still yields a written certificate.
pub fn certificate_or_partial(r: Result<Certificate, ChainError>) -> Certificate {
    match r {
        Ok(c) => c,
        Err(e) => *e.partial,
    }
}
