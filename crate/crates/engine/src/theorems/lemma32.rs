//! Lemma 3.2 (n = 3): T is constant along e₂, e₃.

use super::base::derive_base_equations;
use super::chain::{
    run_chain, Certificate, ChainError, ChainOptions, ChainSpec, EquationSet, Hypothesis,
};
use crate::diff::GENERIC;
use crate::poly::{poly, Var};

fn hypotheses(set: EquationSet) -> EquationSet {
    set.hypothesis(Hypothesis::nonzero("lambda!=0", poly("lambda")))
        .hypothesis(Hypothesis::nonzero("lambda'!=0", poly("lambda'")))
        .hypothesis(Hypothesis::nonzero(
            "5lambdaT+12lambda'!=0",
            poly("5*lambda*T + 12*lambda'"),
        ))
        .hypothesis(Hypothesis::lambda_nonconstant())
}

/// The main chain: (n31), (n32) → (n33), (n34) → p₁T + p₂ → Case B
/// (p₁ = p₂ = 0) → (n36), (n37) → (n38).
pub fn verify_lemma32(opts: ChainOptions) -> Result<Certificate, ChainError> {
    let mut set = hypotheses(derive_base_equations(3).expect("n = 3"));
    set.name = "lemma3.2".into();
    let t = Var::t;
    let l = Var::lambda;
    let mut s = ChainSpec::new();
    s.compare("n31", "n31").compare("n32", "n32");
    s.differentiate("D(n31)", "n31")
        .cancel("D(n31)-n32", "D(n31)", "n32", t(3))
        .cancel("n33*lambda", "D(n31)-n32", "n31", t(2))
        .discard("n33", "n33*lambda", poly("lambda"), "lambda!=0")
        .compare("n33", "n33");
    s.differentiate("D(n33)", "n33")
        .cancel("n34", "D(n33)", "n31", t(2))
        .compare("n34", "n34");
    s.resultant("n35", "n33", "n34", t(1))
        .coefficient("p1", "n35", t(0), 1)
        .coefficient("p2", "n35", t(0), 0)
        .compare("p1", "p1")
        .compare("p2", "p2");
    // Case B: p₁ = p₂ = 0.
    s.differentiate("D(p1)", "p1")
        .resultant("r1", "D(p1)", "p2", l(3))
        .resultant("r2", "r1", "p1", l(2))
        .discard("r2/lambda", "r2", poly("lambda"), "lambda!=0")
        .discard("n36", "r2/lambda", poly("lambda'"), "lambda'!=0")
        .compare("n36", "n36");
    s.differentiate("D(n36)", "n36")
        .resultant("r3", "D(n36)", "p1", l(2))
        .discard("n37", "r3", poly("lambda'"), "lambda'!=0")
        .compare("n37", "n37");
    s.cancel("n38*lambda^2", "n36", "n37", l(1))
        .discard("n38", "n38*lambda^2", poly("lambda"), "lambda!=0")
        .compare("n38", "n38")
        .check_eliminant("n38");
    run_chain(&set, &s.steps, opts)
}

/// Case B continued without printed targets: from p₁ = p₂ = 0, eliminate
/// λ‴, λ″, λ′ by resultants only (highest derivative first) and check the
/// eliminant property.
pub fn lemma32_case_b_tail(opts: ChainOptions) -> Result<Certificate, ChainError> {
    let set = hypotheses(
        EquationSet::new("lemma3.2-case-b-tail", GENERIC)
            .equation("p1", super::fixtures::get("p1").unwrap())
            .equation("p2", super::fixtures::get("p2").unwrap()),
    );
    let l = Var::lambda;
    let mut s = ChainSpec::new();
    s.differentiate("D(p1)", "p1")
        .resultant("e3", "D(p1)", "p2", l(3))
        .resultant("e2", "e3", "p1", l(2))
        .discard("e2/lambda", "e2", poly("lambda"), "lambda!=0")
        .discard("q", "e2/lambda", poly("lambda'"), "lambda'!=0")
        .differentiate("D(q)", "q")
        .resultant("e2b", "D(q)", "p1", l(2))
        .discard("qb", "e2b", poly("lambda'"), "lambda'!=0")
        .resultant("e1", "q", "qb", l(1))
        .discard("eliminant", "e1", poly("lambda"), "lambda!=0")
        .check_eliminant("eliminant");
    run_chain(&set, &s.steps, opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::Status;

    #[test]
    fn main_chain_matches_every_printed_target() {
        let cert = verify_lemma32(ChainOptions::default())
            .unwrap_or_else(|e| panic!("{e}\n{}", e.partial.to_json()));
        for c in cert.comparisons() {
            assert!(c.matched, "{} {:?}", c.fixture, c.first_mismatch());
        }
        assert_eq!(cert.status, Status::Verified);
    }

    #[test]
    fn case_b_tail_is_an_eliminant() {
        let cert = lemma32_case_b_tail(ChainOptions::default()).unwrap_or_else(|e| panic!("{e}"));
        assert_eq!(
            cert.status,
            Status::VerifiedProperty,
            "{}",
            cert.final_polynomial
        );
    }
}
