//! Report types shared by the Lemma 2.2 section and the elimination chains.

use serde::{Deserialize, Serialize};

use crate::poly::{rational_text, MultiPoly, Rational};

/// Outcome of a certificate or report section.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Verified,
    /// No printed fixture exists; a structural property was checked instead.
    VerifiedProperty,
    Mismatch,
    Inconclusive,
}

impl Status {
    pub fn is_ok(self) -> bool {
        matches!(self, Status::Verified | Status::VerifiedProperty)
    }

    /// Combines two statuses: mismatch dominates inconclusive, which
    /// dominates the verified kinds.
    pub fn worst(self, other: Status) -> Status {
        fn rank(s: Status) -> u8 {
            match s {
                Status::Verified => 0,
                Status::VerifiedProperty => 1,
                Status::Inconclusive => 2,
                Status::Mismatch => 3,
            }
        }
        if rank(other) > rank(self) {
            other
        } else {
            self
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::VerifiedProperty => "verified-property",
            Status::Mismatch => "mismatch",
            Status::Inconclusive => "inconclusive",
        }
    }
}

/// One monomial whose coefficients disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialDiff {
    pub monomial: String,
    pub computed: String,
    pub expected: String,
}

/// Result of comparing a computed polynomial with a transcribed fixture.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comparison {
    pub fixture: String,
    pub expected: MultiPoly,
    pub matched: bool,
    /// `computed = unit * expected` when matched up to a unit.
    pub unit: String,
    pub differing_monomials: usize,
    /// The first differing monomials, leading monomial first.
    pub differences: Vec<MonomialDiff>,
}

const MAX_LISTED_DIFFERENCES: usize = 12;

impl Comparison {
    pub fn first_mismatch(&self) -> Option<&MonomialDiff> {
        self.differences.first()
    }
}

/// Coefficient-exact comparison (unit must be 1).
pub fn compare_exact(fixture: &str, computed: &MultiPoly, expected: &MultiPoly) -> Comparison {
    build(
        fixture,
        computed,
        expected,
        Rational::from_integer(1.into()),
    )
}

/// Comparison up to one nonzero rational factor, read off the leading
/// coefficients.
pub fn compare_up_to_unit(fixture: &str, computed: &MultiPoly, expected: &MultiPoly) -> Comparison {
    let unit = match (computed.leading_term(), expected.leading_term()) {
        (Some((mc, cc)), Some((me, ce))) if mc == me => cc / ce,
        _ => Rational::from_integer(1.into()),
    };
    build(fixture, computed, expected, unit)
}

fn build(fixture: &str, computed: &MultiPoly, expected: &MultiPoly, unit: Rational) -> Comparison {
    let scaled = expected.scale(&unit);
    let diff = computed - &scaled;
    let differences = diff
        .terms()
        .rev()
        .take(MAX_LISTED_DIFFERENCES)
        .map(|(m, _)| MonomialDiff {
            monomial: m.to_string(),
            computed: rational_text(&computed.coefficient_of(m)),
            expected: rational_text(&scaled.coefficient_of(m)),
        })
        .collect();
    Comparison {
        fixture: fixture.to_string(),
        expected: expected.clone(),
        matched: diff.is_zero() && !computed.is_zero(),
        unit: rational_text(&unit),
        differing_monomials: diff.len(),
        differences,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::poly;

    #[test]
    fn unit_is_read_from_leading_terms() {
        let c = compare_up_to_unit("x", &poly("-6*lambda^2 + 3*c"), &poly("2*lambda^2 - c"));
        assert!(c.matched);
        assert_eq!(c.unit, "-3");
        assert!(!compare_exact("x", &poly("-6*lambda^2 + 3*c"), &poly("2*lambda^2 - c")).matched);
    }

    #[test]
    fn mismatch_lists_differing_monomials() {
        let c = compare_exact(
            "x",
            &poly("lambda^2 + 2*c + R"),
            &poly("lambda^2 + 3*c + R"),
        );
        assert!(!c.matched);
        assert_eq!(c.differing_monomials, 1);
        let d = c.first_mismatch().unwrap();
        assert_eq!(
            (
                d.monomial.as_str(),
                d.computed.as_str(),
                d.expected.as_str()
            ),
            ("c", "2", "3")
        );
    }

    #[test]
    fn zero_never_matches() {
        assert!(!compare_exact("x", &MultiPoly::zero(), &MultiPoly::zero()).matched);
    }

    #[test]
    fn status_order() {
        assert_eq!(
            Status::Verified.worst(Status::Inconclusive),
            Status::Inconclusive
        );
        assert_eq!(
            Status::Mismatch.worst(Status::Inconclusive),
            Status::Mismatch
        );
        assert_eq!(
            Status::Verified.worst(Status::VerifiedProperty),
            Status::VerifiedProperty
        );
        assert!(Status::VerifiedProperty.is_ok());
    }
}
