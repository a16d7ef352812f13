//! Power-sum relations for m = n − 1 quantities, generated from Newton's
//! identities.

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::certificate::{compare_up_to_unit, Comparison, Status};
use crate::poly::{int, poly, MultiPoly, Var};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("unsupported power-sum relation (m = {m}, top power = {top})")]
pub struct UnsupportedRelation {
    pub m: u32,
    pub top: u32,
}

/// A relation among the power sums `f_1, …, f_top` of `m` quantities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSumRelation {
    pub m: u32,
    pub top_power: u32,
    pub relation: MultiPoly,
}

/// Expresses `f_top` through `f_1, …, f_m` and returns the primitive
/// integer relation with positive leading term.
pub fn power_sum_relation(m: u32, top_power: u32) -> Result<PowerSumRelation, UnsupportedRelation> {
    if !(m == 2 || m == 3) || !(top_power == m + 1 || top_power == m + 2) {
        return Err(UnsupportedRelation { m, top: top_power });
    }
    let f = |k: u32| MultiPoly::var(Var::PowerSum(k));

    // k e_k = Σ_{i=1}^{k} (−1)^{i−1} e_{k−i} p_i
    let mut e = vec![MultiPoly::one()];
    for k in 1..=m {
        let mut acc = MultiPoly::zero();
        for i in 1..=k {
            let t = &e[(k - i) as usize] * &f(i);
            if i % 2 == 1 {
                acc += &t;
            } else {
                acc -= &t;
            }
        }
        e.push(acc.scale(&int(k as i64).recip()));
    }

    // p_k = Σ_{i=1}^{m} (−1)^{i−1} e_i p_{k−i} for k > m, with p_j for j ≤ m
    // left symbolic.
    let mut p: Vec<MultiPoly> = (0..=m).map(f).collect();
    for k in m + 1..=top_power {
        let mut acc = MultiPoly::zero();
        for i in 1..=m {
            let t = &e[i as usize] * &p[(k - i) as usize];
            if i % 2 == 1 {
                acc += &t;
            } else {
                acc -= &t;
            }
        }
        p.push(acc);
    }

    let raw = &f(top_power) - &p[top_power as usize];
    let (relation, _) = raw.normalized();
    Ok(PowerSumRelation {
        m,
        top_power,
        relation,
    })
}

/// Outcome of the symbolic substitution check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishingReport {
    pub vanishes: bool,
    /// The expanded polynomial in the roots `w_i`, in canonical text.
    pub expansion: String,
}

/// Substitutes `f_j ↦ w_1^j + … + w_m^j` and expands.
pub fn power_sum_substitution(rel: &MultiPoly, m: u32) -> MultiPoly {
    let bindings: HashMap<Var, MultiPoly> = rel
        .vars()
        .into_iter()
        .filter_map(|v| match v {
            Var::PowerSum(j) => {
                let sum = (1..=m).map(|i| MultiPoly::var_pow(Var::Root(i), j)).sum();
                Some((v, sum))
            }
            _ => None,
        })
        .collect();
    rel.substitute(&bindings)
}

pub fn verify_vanishing(rel: &PowerSumRelation) -> VanishingReport {
    let expansion = power_sum_substitution(&rel.relation, rel.m);
    VanishingReport {
        vanishes: expansion.is_zero(),
        expansion: expansion.to_string(),
    }
}

/// The four relations as printed, in the order (m, top) = (2,3), (2,4),
/// (3,4), (3,5).
pub fn printed_relations() -> Vec<(&'static str, u32, u32, MultiPoly)> {
    vec![
        ("f123", 2, 3, poly("f1^3 - 3*f1*f2 + 2*f3")),
        ("f124", 2, 4, poly("f1^4 - 2*f1^2*f2 - f2^2 + 2*f4")),
        (
            "f1234",
            3,
            4,
            poly("f1^4 - 6*f1^2*f2 + 3*f2^2 + 8*f1*f3 - 6*f4"),
        ),
        (
            "f1235",
            3,
            5,
            poly("f1^5 - 5*f1^3*f2 + 5*f1^2*f3 + 5*f2*f3 - 6*f5"),
        ),
    ]
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityEntry {
    pub name: String,
    pub m: u32,
    pub top_power: u32,
    pub generated: MultiPoly,
    pub comparison: Comparison,
    pub vanishing: VanishingReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub entries: Vec<IdentityEntry>,
    pub status: Status,
}

/// Generates every printed relation, compares it with the printed form up to
/// a unit and expands it over explicit roots.
pub fn verify_identities() -> IdentityReport {
    let entries: Vec<IdentityEntry> = printed_relations()
        .into_iter()
        .map(|(name, m, top, printed)| {
            let rel = power_sum_relation(m, top).expect("printed relations are supported");
            IdentityEntry {
                name: name.to_string(),
                m,
                top_power: top,
                comparison: compare_up_to_unit(name, &rel.relation, &printed),
                vanishing: verify_vanishing(&rel),
                generated: rel.relation,
            }
        })
        .collect();
    let ok = entries
        .iter()
        .all(|e| e.comparison.matched && e.vanishing.vanishes);
    IdentityReport {
        entries,
        status: if ok {
            Status::Verified
        } else {
            Status::Mismatch
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_relations_are_the_printed_ones() {
        for (name, m, top, printed) in printed_relations() {
            let rel = power_sum_relation(m, top).unwrap();
            assert_eq!(rel.relation, printed, "{name}");
        }
    }

    #[test]
    fn unsupported_pairs_are_rejected() {
        assert_eq!(
            power_sum_relation(4, 5),
            Err(UnsupportedRelation { m: 4, top: 5 })
        );
        assert!(power_sum_relation(2, 2).is_err());
        assert!(power_sum_relation(3, 6).is_err());
    }

    #[test]
    fn symbolic_vanishing() {
        let r = power_sum_relation(2, 4).unwrap();
        assert!(verify_vanishing(&r).vanishes);
        let r = power_sum_relation(3, 5).unwrap();
        assert!(verify_vanishing(&r).vanishes);
    }

    #[test]
    fn perturbed_relation_does_not_vanish() {
        let rel = PowerSumRelation {
            m: 2,
            top_power: 3,
            relation: poly("f1^3 - 3*f1*f2 + 2*f3 + 1"),
        };
        let report = verify_vanishing(&rel);
        assert!(!report.vanishes);
        assert_eq!(report.expansion, "1");
    }

    #[test]
    fn report_covers_all_four_relations() {
        let r = verify_identities();
        assert_eq!(r.entries.len(), 4);
        assert_eq!(r.status, Status::Verified);
    }
}
