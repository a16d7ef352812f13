//! Theorem 1 (n = 3): λ is constant on a biconservative hypersurface in a
//! four-dimensional space form with three distinct principal curvatures.

use super::chain::{
    run_chain, Certificate, ChainError, ChainOptions, ChainSpec, EquationSet, Hypothesis,
};
use super::membership::{ideal_membership, Membership};
use crate::diff::{GENERIC, THM1_RICCATI};
use crate::lemma22::{sum_lambda_i_squared, NValue};
use crate::poly::{poly, Base, MultiPoly, Var};

fn lambda2(order: u32) -> Var {
    Var::diff(Base::Lambda2, order)
}

fn lambda3(order: u32) -> Var {
    Var::diff(Base::Lambda3, order)
}

/// λ₂² + λ₃² minus its value from the scalar curvature at n = 3.
fn sum_of_squares() -> MultiPoly {
    &poly("lambda2^2 + lambda3^2") - &sum_lambda_i_squared(NValue::Integer(3))
}

/// Case 1: λ₂ = λ₃ = −3λ/2 turns the sum of squares into an eliminant.
pub fn theorem1_case1(opts: ChainOptions) -> Result<Certificate, ChainError> {
    let set = EquationSet::new("theorem1-case1", GENERIC)
        .equation("sum4", sum_of_squares())
        .hypothesis(Hypothesis::lambda_nonconstant());
    let half = poly("-3/2*lambda");
    let mut s = ChainSpec::new();
    s.substitute(
        "case1",
        "sum4",
        vec![(lambda2(0), half.clone()), (lambda3(0), half)],
    )
    .compare("case1", "thm1-case1")
    .check_eliminant("case1");
    run_chain(&set, &s.steps, opts)
}

fn case2_set() -> EquationSet {
    EquationSet::new("theorem1-case2", THM1_RICCATI)
        .equation("sum4", sum_of_squares())
        .equation("riccati2", poly("omega2*(lambda2 - lambda) - lambda2'"))
        .equation(
            "Tn39",
            poly("lambda2'*lambda3' + (lambda2*lambda3 + c)*(lambda2 - lambda)*(lambda3 - lambda)"),
        )
        .hypothesis(Hypothesis::nonzero(
            "lambda!=lambda2",
            poly("lambda - lambda2"),
        ))
        .hypothesis(Hypothesis::nonzero(
            "lambda2!=lambda3",
            poly("3*lambda + 2*lambda2"),
        ))
        .hypothesis(Hypothesis::nonzero(
            "lambda3!=lambda",
            poly("4*lambda + lambda2"),
        ))
        .hypothesis(Hypothesis::lambda_nonconstant())
}

/// Case 2: three distinct principal curvatures λ, λ₂, λ₃ = −3λ − λ₂.
pub fn theorem1_case2(opts: ChainOptions) -> Result<Certificate, ChainError> {
    let set = case2_set();
    let l = Var::lambda;
    let other = poly("-3*lambda - lambda2");
    let mut s = ChainSpec::new();
    s.substitute("Tn31", "sum4", vec![(lambda3(0), other.clone())])
        .compare("Tn31", "Tn31");
    s.differentiate("Tn32", "Tn31").compare("Tn32", "Tn32");
    s.differentiate("D(riccati2)", "riccati2")
        .resultant(
            "Tn35",
            "riccati2",
            "D(riccati2)",
            Var::diff(Base::Omega2, 0),
        )
        .differentiate("D(Tn32)", "Tn32")
        .resultant("Tn35'", "Tn35", "D(Tn32)", lambda2(2))
        .resultant("Tn36*", "Tn35'", "Tn32", lambda2(1))
        .discard("Tn36", "Tn36*", poly("lambda - lambda2"), "lambda!=lambda2")
        .compare("Tn36", "Tn36");
    s.substitute("Tn37", "Tn36", vec![(lambda2(0), poly("lambda3"))])
        .compare("Tn37", "Tn37")
        .substitute("Tn37sub", "Tn37", vec![(lambda3(0), other.clone())]);
    s.substitute(
        "sum4'",
        "sum4",
        vec![(lambda2(0), poly("-3*lambda - lambda3"))],
    )
    .differentiate("Tn33", "sum4'")
    .resultant("Tn39'", "Tn39", "Tn32", lambda2(1))
    .resultant("Tn310", "Tn39'", "Tn33", lambda3(1))
    .compare("Tn310", "Tn310")
    .substitute("Tn310sub", "Tn310", vec![(lambda3(0), other)]);
    s.resultant("X", "Tn36", "Tn37sub", l(2))
        .discard("X3", "X", poly("3*lambda + 2*lambda2"), "lambda2!=lambda3")
        .cancel("Y", "X3", "Tn310sub", l(1))
        .discard("Y1", "Y", poly("lambda - lambda2"), "lambda!=lambda2")
        .discard("Y2", "Y1", poly("4*lambda + lambda2"), "lambda3!=lambda")
        .discard(
            "Tn311",
            "Y2",
            poly("3*lambda + 2*lambda2"),
            "lambda2!=lambda3",
        )
        .compare("Tn311", "Tn311");
    // Tn31 is quadratic in λ₂ and the remainder of Tn311 by it is already
    // free of λ₂.
    s.prem("Tn312", "Tn311", "Tn31", lambda2(0))
        .compare("Tn312", "Tn312")
        .check_eliminant("Tn312");
    run_chain(&set, &s.steps, opts)
}

/// Both cases as sibling certificates.
pub fn verify_theorem1(opts: ChainOptions) -> Vec<Result<Certificate, ChainError>> {
    vec![theorem1_case1(opts), theorem1_case2(opts)]
}

/// Tn311 lies in the ideal generated by Tn36, the λ₂ ↔ λ₃ image of Tn36
/// and Tn310, once λ₃ is eliminated with the trace condition.
pub fn tn311_membership(cert: &Certificate) -> Membership {
    let mut gens = EquationSet::new("tn311-ideal", THM1_RICCATI);
    for label in ["Tn36", "Tn37sub", "Tn310sub"] {
        if let Some(p) = cert.output(label) {
            gens = gens.equation(label, p.clone());
        }
    }
    gens.hypotheses = case2_set().hypotheses;
    match cert.output("Tn311") {
        Some(target) => ideal_membership(target, &gens, &[Var::lambda(2), Var::lambda(1)]),
        None => Membership::Inconclusive {
            reason: "chain did not reach Tn311".into(),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::Status;

    #[test]
    fn case1_is_an_eliminant() {
        let cert = theorem1_case1(ChainOptions::default()).unwrap();
        assert_eq!(cert.status, Status::Verified);
        assert!(
            cert.step("case1?eliminant")
                .unwrap()
                .property
                .as_ref()
                .unwrap()
                .passed
        );
    }

    #[test]
    fn case2_matches_every_printed_target() {
        let cert = theorem1_case2(ChainOptions::default()).unwrap_or_else(|e| panic!("{e}"));
        let fixtures: Vec<_> = cert
            .comparisons()
            .map(|c| (c.fixture.as_str(), c.matched))
            .collect();
        assert_eq!(fixtures.len(), 7);
        assert!(fixtures.iter().all(|f| f.1), "{fixtures:?}");
        assert_eq!(cert.status, Status::Verified);
    }

    #[test]
    fn resultant_with_tn31_is_divisible_by_tn312() {
        let cert = theorem1_case2(ChainOptions::default()).unwrap();
        let r = cert
            .output("Tn31")
            .unwrap()
            .resultant(cert.output("Tn311").unwrap(), lambda2(0))
            .unwrap();
        let target = super::super::fixtures::get("Tn312").unwrap();
        let q = r.div_exact(&target).expect("divisible");
        assert!(q.div_exact(&target).is_some());
    }

    #[test]
    fn tn311_is_in_the_ideal() {
        let cert = theorem1_case2(ChainOptions::default()).unwrap();
        assert!(tn311_membership(&cert).is_yes());
    }
}
