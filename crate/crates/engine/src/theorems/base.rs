//! Base equation systems and the elementary sum identities.

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use super::chain::EquationSet;
use crate::diff::GENERIC;
use crate::identities::power_sum_relation;
use crate::lemma22::{build_f_chain, NValue};
use crate::poly::{poly, MultiPoly, Var};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BaseError {
    #[error("base equations are only defined for n = 3 or n = 4, got {0}")]
    UnsupportedDimension(u32),
}

/// Substitutes the Lemma 2.2 power sums at dimension `n` into the two
/// power-sum relations for `n − 1` quantities. Labels are `n31`, `n32` for
/// n = 3 and `LM1`, `LM2` for n = 4.
pub fn derive_base_equations(n: u32) -> Result<EquationSet, BaseError> {
    let (labels, tops) = match n {
        3 => (["n31", "n32"], [3, 4]),
        4 => (["LM1", "LM2"], [4, 5]),
        _ => return Err(BaseError::UnsupportedDimension(n)),
    };
    let chain = build_f_chain(NValue::Integer(n)).expect("n >= 3");
    let bindings: HashMap<Var, MultiPoly> = (1..=5)
        .map(|k| (Var::PowerSum(k), chain.f[(k - 1) as usize].clone()))
        .collect();
    let mut set = EquationSet::new(&format!("base-n{n}"), GENERIC);
    for (label, top) in labels.iter().zip(tops) {
        let rel = power_sum_relation(n - 1, top).expect("supported relation");
        set = set.equation(label, rel.relation.substitute(&bindings).normalized().0);
    }
    Ok(set)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sum6Report {
    /// 3Σλᵢ² − (Σλᵢ)² − Σ_{i<j}(λᵢ − λⱼ)² for three symbols.
    pub residual: MultiPoly,
    pub holds: bool,
    /// The same with the right side halved, which is not an identity.
    pub halved_residual: MultiPoly,
}

/// The sum-of-squares identity behind `12c − R ≥ 0` at n = 4.
pub fn sum6_identity() -> Sum6Report {
    let lhs = poly("3*(lambda2^2 + lambda3^2 + lambda4^2) - (lambda2 + lambda3 + lambda4)^2");
    let squares = poly("(lambda2 - lambda3)^2 + (lambda2 - lambda4)^2 + (lambda3 - lambda4)^2");
    let residual = &lhs - &squares;
    let halved_residual = &lhs - &squares.scale(&crate::poly::rat(1, 2));
    Sum6Report {
        holds: residual.is_zero(),
        residual,
        halved_residual,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Monomial;

    #[test]
    fn n3_first_equation_is_printed_form() {
        let set = derive_base_equations(3).unwrap();
        let printed = poly("T'' - 3*T*T' + T^3 + (4*c - 11*lambda^2)*T + 12*lambda*lambda'");
        assert_eq!(set.get("n31").unwrap(), &printed.normalized().0);
    }

    #[test]
    fn n4_spot_terms() {
        let set = derive_base_equations(4).unwrap();
        let lm1 = set.get("LM1").unwrap();
        let lm2 = set.get("LM2").unwrap();
        // Normalization makes the leading coefficient positive, so compare
        // ratios against the leading T-derivative coefficient (−1 in print).
        let unit1 = -lm1.coefficient_of(&Monomial::var(Var::t(3)));
        let unit2 = -lm2.coefficient_of(&Monomial::var(Var::t(4)));
        let m = poly("lambda*lambda'*T").leading_term().unwrap().0.clone();
        assert_eq!(lm1.coefficient_of(&m) / &unit1, crate::poly::int(55));
        let t5 = Monomial::var_pow(Var::t(0), 5);
        assert_eq!(lm2.coefficient_of(&t5) / &unit2, crate::poly::int(4));
    }

    #[test]
    fn other_dimensions_rejected() {
        assert_eq!(
            derive_base_equations(5),
            Err(BaseError::UnsupportedDimension(5))
        );
    }

    #[test]
    fn sum6_without_half() {
        let r = sum6_identity();
        assert!(r.holds);
        assert!(!r.halved_residual.is_zero());
    }
}
