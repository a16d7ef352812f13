//! Lemma 4.2 (n = 4): T is constant along e₂, e₃, e₄.

use super::base::derive_base_equations;
use super::chain::{
    run_chain, Certificate, ChainError, ChainOptions, ChainSpec, EquationSet, Hypothesis,
};
use super::fixtures;
use crate::diff::GENERIC;
use crate::poly::{poly, Var};

fn hypotheses(set: EquationSet) -> EquationSet {
    set.hypothesis(Hypothesis::nonzero("lambda!=0", poly("lambda")))
        .hypothesis(Hypothesis::nonzero("lambda'!=0", poly("lambda'")))
        .hypothesis(Hypothesis::lambda_nonconstant())
}

/// (LM1), (LM2) → (LM3) → (LM4) = a₁T′ − a₁T² + a₂T + a₃ → (LM5) = b₁T + b₂.
pub fn verify_lemma42(opts: ChainOptions) -> Result<Certificate, ChainError> {
    let mut set = hypotheses(derive_base_equations(4).expect("n = 4"));
    set.name = "lemma4.2".into();
    let t = Var::t;
    let mut s = ChainSpec::new();
    s.compare("LM1", "LM1").compare("LM2", "LM2");
    s.differentiate("D(LM1)", "LM1")
        .cancel("D(LM1)-LM2", "D(LM1)", "LM2", t(4))
        .cancel("LM3*", "D(LM1)-LM2", "LM1", t(3))
        .discard("LM3", "LM3*", poly("lambda"), "lambda!=0")
        .compare("LM3", "LM3");
    s.differentiate("D(LM3)", "LM3")
        .cancel("D(LM3)-LM1", "D(LM3)", "LM1", t(3))
        .cancel("LM4", "D(LM3)-LM1", "LM3", t(2))
        .coefficient("a1", "LM4", t(1), 1)
        .coefficient("LM4|T'=0", "LM4", t(1), 0)
        .coefficient("a2", "LM4|T'=0", t(0), 1)
        .coefficient("a3", "LM4|T'=0", t(0), 0)
        .compare("a1", "a1")
        .compare("a2", "a2")
        .compare("a3", "a3");
    s.differentiate("D(LM4)", "LM4")
        .cancel("D(LM4)-LM3", "D(LM4)", "LM3", t(2))
        .cancel_until("LM5*", "D(LM4)-LM3", "LM4", t(1))
        .discard("LM5", "LM5*", poly("lambda"), "lambda!=0")
        .coefficient("b1", "LM5", t(0), 1)
        .coefficient("b2", "LM5", t(0), 0)
        .compare("b1", "b1")
        .compare("b2", "b2");
    run_chain(&set, &s.steps, opts)
}

/// Case a₁ = a₂ = 0 (so T′ = T² − a₃/a₁ is not available): eliminating λ‴
/// and λ″ leaves 96λ² − 121R + 1302c.
pub fn lemma42_case12(opts: ChainOptions) -> Result<Certificate, ChainError> {
    let set = hypotheses(
        EquationSet::new("lemma4.2-a1-a2", GENERIC)
            .equation("CE1", fixtures::get("CE1").unwrap())
            .equation("CE2", fixtures::get("CE2").unwrap()),
    );
    let l = Var::lambda;
    let mut s = ChainSpec::new();
    s.differentiate("D(CE1)", "CE1")
        .cancel("D(CE1)-CE2", "D(CE1)", "CE2", l(3))
        .cancel("E1*", "D(CE1)-CE2", "CE1", l(2))
        .discard("E1/lambda", "E1*", poly("lambda"), "lambda!=0")
        .discard("E1", "E1/lambda", poly("lambda'"), "lambda'!=0");
    s.differentiate("D(E1)", "E1")
        .cancel("Y*", "D(E1)", "CE1", l(2))
        .discard("Y", "Y*", poly("lambda'"), "lambda'!=0")
        .cancel("CE*", "E1", "Y", l(1))
        .discard("CE-final", "CE*", poly("lambda"), "lambda!=0")
        .compare("CE-final", "CE-final")
        .check_eliminant("CE-final");
    run_chain(&set, &s.steps, opts)
}

/// Case b₁ = b₂ = 0: eliminate λ⁽⁵⁾, λ⁗, λ‴, λ″ and λ′ by resultants. The
/// intermediate polynomials grow past any practical budget, so with
/// [`TAIL_BUDGET`](super::TAIL_BUDGET) this ends inconclusive.
pub fn lemma42_b_tail(opts: ChainOptions) -> Result<Certificate, ChainError> {
    let set = hypotheses(
        EquationSet::new("lemma4.2-b-tail", GENERIC)
            .equation("b1", fixtures::get("b1").unwrap())
            .equation("b2", fixtures::get("b2").unwrap()),
    );
    let l = Var::lambda;
    let mut s = ChainSpec::new();
    s.differentiate("D(b1)", "b1")
        .resultant("E", "D(b1)", "b2", l(5))
        .resultant("E3", "E", "b1", l(4))
        .differentiate("D(E3)", "E3")
        .resultant("F3", "D(E3)", "b1", l(4))
        .resultant("G2", "E3", "F3", l(3))
        .differentiate("D(G2)", "G2")
        .resultant("H2", "D(G2)", "E3", l(3))
        .resultant("G1", "G2", "H2", l(2))
        .differentiate("D(G1)", "G1")
        .resultant("H1", "D(G1)", "G2", l(2))
        .resultant("eliminant", "G1", "H1", l(1))
        .check_eliminant("eliminant");
    run_chain(&set, &s.steps, opts)
}

/// The main chain and its two sibling branches.
pub fn verify_lemma42_all(opts: ChainOptions) -> Vec<Result<Certificate, ChainError>> {
    vec![
        verify_lemma42(opts),
        lemma42_case12(opts),
        lemma42_b_tail(opts),
    ]
}
