//! Randomized invariants of the polynomial ring and the derivation.

use std::collections::HashMap;

use bicons_engine::diff::{differentiate, Derivation};
use bicons_engine::poly::{int, Monomial, MultiPoly, Rational, Var};
use proptest::prelude::*;

fn vars() -> [Var; 5] {
    [
        Var::lambda(0),
        Var::lambda(1),
        Var::t(0),
        Var::t(1),
        Var::parse("c").unwrap(),
    ]
}

fn arb_poly() -> impl Strategy<Value = MultiPoly> {
    let term = (-9i64..=9, proptest::collection::vec(0u32..3, 5));
    proptest::collection::vec(term, 0..6).prop_map(|terms| {
        MultiPoly::from_terms(terms.into_iter().map(|(c, exps)| {
            let m = Monomial::from_pairs(vars().into_iter().zip(exps));
            (m, int(c))
        }))
    })
}

fn arb_point() -> impl Strategy<Value = HashMap<Var, Rational>> {
    proptest::collection::vec(-5i64..=5, 5)
        .prop_map(|xs| vars().into_iter().zip(xs.into_iter().map(int)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &MultiPoly::one(), a.clone());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in arb_poly(), b in arb_poly(), x in arb_point()) {
        let (ea, eb) = (a.evaluate(&x).unwrap(), b.evaluate(&x).unwrap());
        prop_assert_eq!((&a * &b).evaluate(&x).unwrap(), &ea * &eb);
        prop_assert_eq!((&a + &b).evaluate(&x).unwrap(), ea + eb);
    }

    #[test]
    fn leibniz_rule(a in arb_poly(), b in arb_poly()) {
        let d = Derivation::generic();
        let lhs = differentiate(&(&a * &b), &d).unwrap();
        let da = differentiate(&a, &d).unwrap();
        let db = differentiate(&b, &d).unwrap();
        prop_assert_eq!(lhs, &(&da * &b) + &(&a * &db));
    }

    #[test]
    fn pseudo_division_identity(p in arb_poly(), q in arb_poly()) {
        let x = Var::lambda(0);
        prop_assume!(q.degree(x) > 0);
        let pd = p.pseudo_divide(&q, x).unwrap();
        let lc = q.lc_in(x).pow(pd.power);
        prop_assert_eq!(&lc * &p, &(&pd.quotient * &q) + &pd.remainder);
        prop_assert!(pd.remainder.is_zero() || pd.remainder.degree(x) < q.degree(x));
    }

    #[test]
    fn resultant_vanishes_on_common_factor(a in arb_poly(), b in arb_poly(), g in arb_poly()) {
        let x = Var::lambda(0);
        prop_assume!(g.degree(x) > 0 && !a.is_zero() && !b.is_zero());
        let r = (&a * &g).resultant(&(&b * &g), x).unwrap();
        prop_assert!(r.is_zero());
    }

    #[test]
    fn text_round_trip(a in arb_poly()) {
        let back: MultiPoly = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn normalization_is_idempotent(a in arb_poly()) {
        prop_assume!(!a.is_zero());
        let (n, unit) = a.normalized();
        prop_assert_eq!(n.scale(&unit), a);
        prop_assert_eq!(n.normalized().0, n);
    }
}
