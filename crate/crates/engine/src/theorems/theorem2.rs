//! Theorem 2 (n = 4): λ is constant on a biconservative hypersurface in a
//! five-dimensional space form with at most four distinct principal
//! curvatures. The cases follow the multiplicities of λ₂, λ₃, λ₄.

use super::chain::{
    run_chain, Certificate, ChainError, ChainOptions, ChainSpec, EquationSet, Hypothesis,
};
use crate::diff::{CASE_3_1, CASE_3_2, GENERIC, THM2_CASE2_RICCATI};
use crate::lemma22::{build_f_chain, sum_lambda_i_squared, NValue};
use crate::poly::{poly, rat, Base, MultiPoly, Var};

fn v(base: Base) -> Var {
    Var::diff(base, 0)
}

/// λ₂² + λ₃² + λ₄² minus its value from the scalar curvature at n = 4.
fn sum_of_squares() -> MultiPoly {
    &poly("lambda2^2 + lambda3^2 + lambda4^2") - &sum_lambda_i_squared(NValue::Integer(4))
}

/// Case 1: λ₂ = λ₃ = λ₄ = −λ gives R = 12c.
pub fn theorem2_case1(opts: ChainOptions) -> Result<Certificate, ChainError> {
    let set = EquationSet::new("theorem2-case1", GENERIC).equation("sum4", sum_of_squares());
    let minus = poly("-lambda");
    let mut s = ChainSpec::new();
    s.substitute(
        "case1",
        "sum4",
        vec![
            (v(Base::Lambda2), minus.clone()),
            (v(Base::Lambda3), minus.clone()),
            (v(Base::Lambda4), minus),
        ],
    )
    .compare("case1", "thm2-case1");
    run_chain(&set, &s.steps, opts)
}

/// Case 2: λ₂ = λ₃ = μ and λ₄ = −3λ − 2μ, with connection forms ω₂, ω₄.
pub fn theorem2_case2(opts: ChainOptions) -> Result<Certificate, ChainError> {
    let set = EquationSet::new("theorem2-case2", THM2_CASE2_RICCATI)
        .equation("sum4", sum_of_squares())
        .equation("codazzi2", poly("omega2*(mu - lambda) + lambda'"))
        .equation("codazzi4", poly("omega4*(-4*lambda - 2*mu) + lambda'"))
        .equation("FP10", poly("omega2*omega4 + mu*(-3*lambda - 2*mu) + c"))
        .hypothesis(Hypothesis::nonzero("mu!=lambda", poly("lambda - mu")))
        .hypothesis(Hypothesis::nonzero("mu!=lambda4", poly("lambda + mu")))
        .hypothesis(Hypothesis::nonzero(
            "lambda!=lambda4",
            poly("2*lambda + mu"),
        ))
        .hypothesis(Hypothesis::lambda_nonconstant());
    let mu = poly("mu");
    let l = Var::lambda;
    let mut s = ChainSpec::new();
    s.substitute(
        "PF3",
        "sum4",
        vec![
            (v(Base::Lambda2), mu.clone()),
            (v(Base::Lambda3), mu),
            (v(Base::Lambda4), poly("-3*lambda - 2*mu")),
        ],
    )
    .compare("PF3", "PF3");
    s.differentiate("D(codazzi2)", "codazzi2")
        .resultant("PF6*", "codazzi2", "D(codazzi2)", v(Base::Omega2))
        .discard("PF6", "PF6*", poly("lambda - mu"), "mu!=lambda")
        .compare("PF6", "PF6")
        .differentiate("D(codazzi4)", "codazzi4")
        .resultant("PF7*", "codazzi4", "D(codazzi4)", v(Base::Omega4))
        .discard("PF7", "PF7*", poly("2*lambda + mu"), "lambda!=lambda4")
        .compare("PF7", "PF7");
    s.resultant("PF8", "PF6", "PF7", l(2))
        .compare("PF8", "PF8")
        .discard("PF9", "PF8", poly("lambda + mu"), "mu!=lambda4")
        .compare("PF9", "PF9");
    s.resultant("FP10'", "FP10", "codazzi2", v(Base::Omega2))
        .resultant("PF11", "FP10'", "codazzi4", v(Base::Omega4))
        .compare("PF11", "PF11");
    s.cancel("PF12*", "PF9", "PF11", l(1))
        .discard("PF12'", "PF12*", poly("lambda - mu"), "mu!=lambda")
        .discard("PF12", "PF12'", poly("2*lambda + mu"), "lambda!=lambda4")
        .compare("PF12", "PF12");
    s.resultant("PF13", "PF12", "PF3", v(Base::Mu))
        .compare("PF13", "PF13")
        .check_eliminant("PF13");
    run_chain(&set, &s.steps, opts)
}

fn r_ne_12c() -> Hypothesis {
    Hypothesis::nonzero("R!=12c", poly("R - 12*c"))
}

/// Case 3.1: λ₂, λ₃, λ₄ distinct, with the frame rotation α, β.
pub fn theorem2_case31(opts: ChainOptions) -> Result<Certificate, ChainError> {
    let set = EquationSet::new("theorem2-case3.1", CASE_3_1)
        .equation("sum4", sum_of_squares())
        .equation(
            "R5",
            poly(
                "(1 + alpha^2)*(lambda2*lambda3 + lambda2*lambda4 + lambda3*lambda4)
                 + 2*alpha*beta*(lambda2 + lambda3 + lambda4) + 3*beta^2 + 3*c",
            ),
        )
        .hypothesis(r_ne_12c())
        .hypothesis(Hypothesis::positive_definite());
    let trace = vec![(v(Base::Lambda4), poly("-3*lambda - lambda2 - lambda3"))];
    let beta = v(Base::Beta);
    let mut s = ChainSpec::new();
    s.substitute("R5'", "R5", trace.clone())
        .substitute("sum4'", "sum4", trace)
        .prem("R6", "R5'", "sum4'", v(Base::Lambda3))
        .compare("R6", "R6");
    s.differentiate("R8", "R6")
        .compare("R8", "R8")
        .differentiate("R9", "R8")
        .compare("R9", "R9");
    s.prem("S1", "R8", "R6", beta)
        .compare("S1", "S1")
        .discard("S1'", "S1", poly("R - 12*c"), "R!=12c")
        .resultant("S2", "R6", "S1'", beta)
        .compare("S2", "S2");
    s.prem("S3", "R9", "R6", beta)
        .compare("S3", "S3")
        .discard("S3'", "S3", poly("R - 12*c"), "R!=12c")
        .resultant("S4", "S1'", "S3'", beta)
        .compare("S4", "S4");
    s.cancel("S5*", "S2", "S4", Var::lambda(0))
        .discard("S5'", "S5*", poly("alpha^2 + 1"), "positive-definite")
        .discard("S5", "S5'", poly("2*alpha^2 + 1"), "positive-definite")
        .compare("S5", "S5");
    run_chain(&set, &s.steps, opts)
}

/// (G12) assembled from the power sums at n = 4: 6e₃ = T³ − 3T·f₂ + 2f₃.
pub fn g12_from_identities() -> MultiPoly {
    let chain = build_f_chain(NValue::Integer(4)).expect("n = 4");
    let t = MultiPoly::var(Var::t(0));
    let six_e3 = &(&(&(&t * &t) * &t) - &(&t * &chain.f[1]).scale(&rat(3, 1)))
        + &chain.f[2].scale(&rat(2, 1));
    &(&six_e3 * &six_e3) + &poly("36*(K^2 - 3*c*lambda*K + 3*c^2*lambda^2 - 5*c^3 + 1/2*c^2*R)")
}

/// The two-equal-curvature relation behind (G8) at n = 4.
fn g8_source() -> MultiPoly {
    let chain = build_f_chain(NValue::Integer(4)).expect("n = 4");
    &(&poly("T^2") - &chain.f[1]).scale(&rat(1, 2)) - &poly("3*c - 3*lambda^2 - 1/2*R")
}

fn case32_set(name: &str) -> EquationSet {
    EquationSet::new(name, CASE_3_2)
        .equation("G8src", g8_source())
        .equation("G12", g12_from_identities())
        .hypothesis(Hypothesis::nonzero("lambda!=0", poly("lambda")))
        .hypothesis(Hypothesis::nonzero("lambda'!=0", poly("lambda'")))
        .hypothesis(Hypothesis::lambda_nonconstant())
}

fn case32_head(s: &mut ChainSpec) {
    s.substitute("G8", "G8src", vec![])
        .compare("G8", "G8")
        .compare("G12", "G12");
    s.differentiate("G18", "G12")
        .compare("G18", "G18")
        .cancel("G20", "G18", "G12", v(Base::K))
        .coefficient("d1", "G20", v(Base::K), 1)
        .coefficient("d2", "G20", v(Base::K), 0)
        .compare("d1", "d1")
        .compare("d2", "d2");
    s.differentiate("D(G8)", "G8")
        .differentiate("D2(G8)", "D(G8)")
        .differentiate("D3(G8)", "D2(G8)");
}

/// Rewrites T‴, T″, T′ in `of` with (G8) and its derivatives.
fn reduce_t(s: &mut ChainSpec, label: &str, of: &str) {
    let t = Var::t;
    let a = format!("{label}|T'''");
    let b = format!("{label}|T''");
    s.cancel_until(&a, of, "D2(G8)", t(3))
        .cancel_until(&b, &a, "D(G8)", t(2))
        .cancel_until(label, &b, "G8", t(1));
}

/// Case 3.2 through (G18) = 0, reduced to d₁K + d₂ = 0.
pub fn theorem2_case32(opts: ChainOptions) -> Result<Certificate, ChainError> {
    let set = case32_set("theorem2-case3.2");
    let mut s = ChainSpec::new();
    case32_head(&mut s);
    run_chain(&set, &s.steps, opts)
}

/// Case 3.2 with d₁ = 0: T is eliminated from d₁ against D(d₁) and d₂,
/// then λ″ and λ′.
pub fn theorem2_case32_d1_zero(opts: ChainOptions) -> Result<Certificate, ChainError> {
    let set = case32_set("theorem2-case3.2-d1-zero");
    let l = Var::lambda;
    let mut s = ChainSpec::new();
    case32_head(&mut s);
    s.differentiate("D(d1)", "d1");
    reduce_t(&mut s, "D(d1)r", "D(d1)");
    reduce_t(&mut s, "d2r", "d2");
    s.resultant("Q2*", "d1", "D(d1)r", Var::t(0))
        .discard("Q2'", "Q2*", poly("lambda"), "lambda!=0")
        .discard(
            "Q2",
            "Q2'",
            poly("14*lambda^2 + R - 15*c"),
            "lambda-nonconstant",
        )
        .resultant("Q3*", "d1", "d2r", Var::t(0))
        .discard("Q3'", "Q3*", poly("lambda"), "lambda!=0")
        .discard("Q3", "Q3'", poly("lambda'"), "lambda'!=0");
    s.resultant("P1*", "Q2", "Q3", l(2))
        .discard("P1'", "P1*", poly("lambda"), "lambda!=0")
        .discard(
            "P1",
            "P1'",
            poly("14*lambda^2 + R - 15*c"),
            "lambda-nonconstant",
        )
        .differentiate("D(P1)", "P1")
        .resultant("P1b*", "D(P1)", "Q2", l(2))
        .discard("P1b", "P1b*", poly("lambda'"), "lambda'!=0")
        .resultant("P*", "P1", "P1b", l(1))
        .discard(
            "P",
            "P*",
            poly("14*lambda^2 + R - 15*c"),
            "lambda-nonconstant",
        )
        .check_eliminant("P");
    run_chain(&set, &s.steps, opts)
}

/// Case 3.2 with d₁ ≠ 0: K = −d₂/d₁ is put back into (G12), and T is
/// eliminated against (LM1) and its derivative before λ‴, λ″, λ′.
pub fn theorem2_case32_d1_nonzero(opts: ChainOptions) -> Result<Certificate, ChainError> {
    let mut set = case32_set("theorem2-case3.2-d1-nonzero");
    let lm = super::base::derive_base_equations(4).expect("n = 4");
    set = set.equation("LM1", lm.get("LM1").unwrap().clone());
    let l = Var::lambda;
    let mut s = ChainSpec::new();
    case32_head(&mut s);
    s.resultant("G21", "G20", "G12", v(Base::K));
    reduce_t(&mut s, "G21r", "G21");
    reduce_t(&mut s, "LM1r", "LM1");
    s.differentiate("D(LM1r)", "LM1r");
    reduce_t(&mut s, "D(LM1r)r", "D(LM1r)");
    s.resultant("A*", "LM1r", "G21r", Var::t(0))
        .discard("A", "A*", poly("lambda"), "lambda!=0")
        .resultant("B*", "LM1r", "D(LM1r)r", Var::t(0))
        .discard("B'", "B*", poly("lambda"), "lambda!=0")
        .discard("B", "B'", poly("lambda'"), "lambda'!=0")
        .differentiate("D(A)", "A")
        .resultant("A2*", "D(A)", "B", l(3))
        .discard("A2", "A2*", poly("lambda"), "lambda!=0")
        .resultant("A1", "A", "A2", l(2))
        .differentiate("D(A1)", "A1")
        .resultant("A1b", "D(A1)", "A", l(2))
        .resultant("eliminant", "A1", "A1b", l(1))
        .check_eliminant("eliminant");
    run_chain(&set, &s.steps, opts)
}

/// All Theorem 2 branches as sibling certificates.
pub fn verify_theorem2(opts: ChainOptions) -> Vec<Result<Certificate, ChainError>> {
    vec![
        theorem2_case1(opts),
        theorem2_case2(opts),
        theorem2_case31(opts),
        theorem2_case32(opts),
        theorem2_case32_d1_zero(opts),
        theorem2_case32_d1_nonzero(opts),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::Status;
    use crate::poly::{int, Monomial};

    fn all_matched(cert: &Certificate, expected: &[&str]) {
        let names: Vec<_> = cert.comparisons().map(|c| c.fixture.as_str()).collect();
        assert_eq!(names, expected);
        for c in cert.comparisons() {
            assert!(c.matched, "{} {:?}", c.fixture, c.first_mismatch());
        }
    }

    #[test]
    fn case1_gives_r_equals_12c() {
        let cert = theorem2_case1(ChainOptions::default()).unwrap();
        assert_eq!(cert.final_polynomial, poly("R - 12*c"));
        assert_eq!(cert.status, Status::Verified);
    }

    #[test]
    fn case2_reaches_pf13() {
        let cert = theorem2_case2(ChainOptions::default()).unwrap_or_else(|e| panic!("{e}"));
        all_matched(
            &cert,
            &["PF3", "PF6", "PF7", "PF8", "PF9", "PF11", "PF12", "PF13"],
        );
        assert_eq!(cert.status, Status::Verified);
    }

    #[test]
    fn case31_reaches_s5() {
        let cert = theorem2_case31(ChainOptions::default()).unwrap_or_else(|e| panic!("{e}"));
        all_matched(&cert, &["R6", "R8", "R9", "S1", "S2", "S3", "S4", "S5"]);
        let s5 = cert.output("S5").unwrap();
        assert!(s5
            .vars()
            .into_iter()
            .all(|v| v == Var::diff(Base::Alpha, 0) || v.is_param()));
    }

    #[test]
    fn case32_head_matches_g_fixtures() {
        let cert = theorem2_case32(ChainOptions::default()).unwrap_or_else(|e| panic!("{e}"));
        all_matched(&cert, &["G8", "G12", "G18", "d1", "d2"]);
        let d1 = cert.output("d1").unwrap();
        let unit = crate::poly::parse_rational(
            &cert
                .step("d1~d1")
                .unwrap()
                .comparison
                .as_ref()
                .unwrap()
                .unit,
        )
        .unwrap();
        let m = Monomial::from_pairs([(Var::R, 1), (Var::t(0), 1), (Var::lambda(0), 1)]);
        assert_eq!(d1.coefficient_of(&m) / unit, int(18));
    }

    #[test]
    fn g12_assembly_matches_fixture() {
        let fixture = super::super::fixtures::get("G12").unwrap();
        assert_eq!(g12_from_identities(), fixture);
    }

    #[test]
    fn d1_zero_tail_is_an_eliminant() {
        let cert =
            theorem2_case32_d1_zero(ChainOptions::default()).unwrap_or_else(|e| panic!("{e}"));
        assert_eq!(cert.status, Status::VerifiedProperty);
        let p = cert.step("P?eliminant").unwrap().property.as_ref().unwrap();
        assert!(p.passed && p.lambda_degree > 0);
    }

    #[test]
    fn d1_nonzero_tail_stops_at_a_small_budget() {
        let cert = theorem2_case32_d1_nonzero(ChainOptions { term_budget: 5_000 }).unwrap();
        assert_eq!(cert.status, Status::Inconclusive);
    }
}
