//! Ideal membership by pseudo-division with cofactor bookkeeping.

use serde::Serialize;

use super::chain::{EquationSet, Hypothesis};
use crate::poly::{MultiPoly, Var};

/// `cleared · target = Σ cofactors[i] · generators[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Membership {
    Yes {
        cofactors: Vec<MultiPoly>,
        cleared: MultiPoly,
    },
    Inconclusive {
        reason: String,
    },
}

impl Membership {
    pub fn is_yes(&self) -> bool {
        matches!(self, Membership::Yes { .. })
    }
}

/// A polynomial together with its expression in the generators.
#[derive(Clone)]
struct Tracked {
    poly: MultiPoly,
    cof: Vec<MultiPoly>,
}

impl Tracked {
    /// `lc^k · self − quotient · pivot`, i.e. the pseudo-remainder of `self`
    /// by `pivot`.
    fn reduce(&self, pivot: &Tracked, x: Var) -> Option<(Tracked, MultiPoly)> {
        if pivot.poly.degree(x) == 0 || self.poly.degree(x) < pivot.poly.degree(x) {
            return None;
        }
        let pd = self.poly.pseudo_divide(&pivot.poly, x).ok()?;
        let mult = pivot.poly.lc_in(x).pow(pd.power);
        let cof = self
            .cof
            .iter()
            .zip(&pivot.cof)
            .map(|(a, b)| &(&mult * a) - &(&pd.quotient * b))
            .collect();
        Some((
            Tracked {
                poly: pd.remainder,
                cof,
            },
            mult,
        ))
    }
}

/// Strips every hypothesis polynomial from `h`; `Some(unit)` if only a
/// constant is left.
fn strip_hypotheses(h: &MultiPoly, hyps: &[Hypothesis]) -> bool {
    let mut r = h.clone();
    loop {
        if r.is_constant() {
            return !r.is_zero();
        }
        let mut progressed = false;
        for hyp in hyps {
            if let super::chain::HypothesisKind::Nonzero { poly } = &hyp.kind {
                if let Some(q) = r.div_exact(poly) {
                    r = q;
                    progressed = true;
                }
            }
        }
        if !progressed {
            let lambda = Var::lambda(0);
            // Pure powers of λ are covered by any "λ non-constant" hypothesis.
            let lam = MultiPoly::var(lambda);
            if hyps.iter().any(|h| h.admits(&lam)) {
                if let Some(q) = r.div_exact(&lam) {
                    r = q;
                    continue;
                }
            }
            return false;
        }
    }
}

fn certify(
    target: &MultiPoly,
    gens: &[MultiPoly],
    cleared: MultiPoly,
    cofactors: Vec<MultiPoly>,
) -> Membership {
    let lhs = &cleared * target;
    let rhs: MultiPoly = gens.iter().zip(&cofactors).map(|(g, h)| g * h).sum();
    if lhs == rhs {
        Membership::Yes { cofactors, cleared }
    } else {
        Membership::Inconclusive {
            reason: "cofactor identity failed to expand".into(),
        }
    }
}

/// Tries to write `target` as a combination of the generators after
/// multiplying by hypothesis factors. First reduces `target` directly along
/// `order`; failing that, triangularizes the generators along `order` and
/// looks for an element equal to `target` times hypothesis factors.
pub fn ideal_membership(target: &MultiPoly, generators: &EquationSet, order: &[Var]) -> Membership {
    let gens: Vec<MultiPoly> = generators
        .equations
        .iter()
        .map(|(_, p)| p.clone())
        .collect();
    if gens.is_empty() {
        return Membership::Inconclusive {
            reason: "no generators".into(),
        };
    }
    let k = gens.len();
    let unit = |i: usize| -> Vec<MultiPoly> {
        (0..k)
            .map(|j| {
                if i == j {
                    MultiPoly::one()
                } else {
                    MultiPoly::zero()
                }
            })
            .collect()
    };
    let tracked: Vec<Tracked> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| Tracked {
            poly: g.clone(),
            cof: unit(i),
        })
        .collect();

    // Direct reduction of the target.
    let mut r = Tracked {
        poly: target.clone(),
        cof: vec![MultiPoly::zero(); k],
    };
    let mut cleared = MultiPoly::one();
    for &x in order {
        for g in &tracked {
            while let Some((next, mult)) = r.reduce(g, x) {
                cleared = &cleared * &mult;
                r = next;
                if r.poly.is_zero() {
                    break;
                }
            }
        }
    }
    if r.poly.is_zero() {
        // cleared·target − Σ cof·g = r = 0, with r.cof tracking −Σ.
        let cofactors = r.cof.iter().map(|c| -c).collect();
        return certify(target, &gens, cleared, cofactors);
    }

    // Triangularize the generators and search for target·h.
    let hit = |t: &Tracked| -> Option<Membership> {
        let h = t.poly.div_exact(target)?;
        if !strip_hypotheses(&h, &generators.hypotheses) {
            return None;
        }
        Some(certify(target, &gens, h, t.cof.clone()))
    };
    let mut work = tracked;
    for &x in order {
        if let Some(m) = work.iter().find_map(|t| hit(t)) {
            return m;
        }
        let Some(pi) = work
            .iter()
            .enumerate()
            .filter(|(_, t)| t.poly.degree(x) > 0)
            .min_by_key(|(_, t)| (t.poly.degree(x), t.poly.len()))
            .map(|(i, _)| i)
        else {
            continue;
        };
        let pivot = work.remove(pi);
        work = work
            .into_iter()
            .map(|t| {
                let mut t = t;
                while let Some((next, _)) = t.reduce(&pivot, x) {
                    t = next;
                }
                t
            })
            .filter(|t| !t.poly.is_zero())
            .collect();
        if pivot.poly.degree(x) > 0 {
            if let Some(m) = hit(&pivot) {
                return m;
            }
        }
    }
    work.iter()
        .find_map(|t| hit(t))
        .unwrap_or(Membership::Inconclusive {
            reason: "target is not reached by pseudo-division along the given order".into(),
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diff::GENERIC;
    use crate::poly::poly;

    fn set(gens: &[(&str, &str)]) -> EquationSet {
        gens.iter()
            .fold(EquationSet::new("g", GENERIC), |s, (l, p)| {
                s.equation(l, poly(p))
            })
    }

    #[test]
    fn generator_is_member() {
        let s = set(&[("g1", "T - lambda")]);
        match ideal_membership(&poly("T - lambda"), &s, &[Var::t(0)]) {
            Membership::Yes { cofactors, cleared } => {
                assert_eq!(cofactors, vec![MultiPoly::one()]);
                assert_eq!(cleared, MultiPoly::one());
            }
            m => panic!("{m:?}"),
        }
    }

    #[test]
    fn explicit_combination() {
        let s = set(&[("g1", "T - lambda"), ("g2", "T' - c")]);
        let target = poly("lambda*(T - lambda) + c*(T' - c)");
        assert!(ideal_membership(&target, &s, &[Var::t(1), Var::t(0)]).is_yes());
    }

    #[test]
    fn non_member_is_inconclusive() {
        let s = set(&[("g1", "T^2 - lambda")]);
        assert!(!ideal_membership(&poly("T - 1"), &s, &[Var::t(0)]).is_yes());
    }
}
