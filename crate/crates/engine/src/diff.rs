//! Formal derivation along e₁ on the polynomial ring over `DiffVar`s.
//!
//! A `Derivation` is a rule table. Variables without an explicit rule are
//! prolonged (`λ⁽ᵏ⁾ ↦ λ⁽ᵏ⁺¹⁾`), parameters are constants, and the abstract
//! symbols `f_k`, `w_i` have no derivative at all.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::{poly, Base, MultiPoly, PolyError, Rational, Var};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum DiffError {
    #[error("no derivation rule applies to `{var}` in context `{context}`")]
    NoRule { var: String, context: String },
    #[error("unknown derivation context `{0}`")]
    UnknownContext(String),
    #[error("rule key `{0}` is not a differential variable")]
    BadRuleKey(String),
    #[error("invalid derivation config: {0}")]
    Config(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

pub const GENERIC: &str = "generic";
pub const CASE_3_1: &str = "case3.1";
pub const THM2_CASE2: &str = "thm2-case2";
pub const CASE_3_2: &str = "case3.2";
pub const THM1_RICCATI: &str = "thm1-riccati";
pub const THM2_CASE2_RICCATI: &str = "thm2-case2-riccati";

/// Names of every built-in context, in a fixed order.
pub const CONTEXTS: [&str; 6] = [
    GENERIC,
    CASE_3_1,
    THM2_CASE2,
    CASE_3_2,
    THM1_RICCATI,
    THM2_CASE2_RICCATI,
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    name: String,
    rules: BTreeMap<Var, MultiPoly>,
}

impl Derivation {
    /// Pure prolongation with constant parameters.
    pub fn generic() -> Self {
        Derivation {
            name: GENERIC.to_string(),
            rules: BTreeMap::new(),
        }
    }

    pub fn with_rule(mut self, var: Var, rule: MultiPoly) -> Result<Self, DiffError> {
        if var.as_diff().is_none() {
            return Err(DiffError::BadRuleKey(var.to_string()));
        }
        self.rules.insert(var, rule);
        Ok(self)
    }

    fn renamed(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    /// Looks up one of the built-in contexts.
    pub fn named(name: &str) -> Result<Self, DiffError> {
        let base = |b: Base| Var::diff(b, 0);
        let d = match name {
            GENERIC => Derivation::generic(),
            CASE_3_1 => Derivation::generic()
                .with_rule(base(Base::Alpha), poly("lambda*(alpha^2 + 1) + alpha*beta"))?
                .with_rule(base(Base::Beta), poly("lambda*alpha*beta + beta^2 + c"))?
                .with_rule(
                    base(Base::Lambda),
                    poly("(1/3*R - 4*c - 2*lambda^2)*alpha + 2*lambda*beta"),
                )?,
            THM2_CASE2 => Derivation::generic().with_rule(base(Base::Mu), poly("-lambda'"))?,
            CASE_3_2 => Derivation::generic().with_rule(
                base(Base::K),
                poly("K*T - 7*lambda^3*T + 6*c*lambda*T - 1/2*lambda*R*T + 9*lambda^2*lambda'"),
            )?,
            THM1_RICCATI => Derivation::generic()
                .with_rule(base(Base::Omega2), poly("omega2^2 + lambda*lambda2 + c"))?,
            THM2_CASE2_RICCATI => Derivation::named(THM2_CASE2)?
                .with_rule(base(Base::Omega2), poly("omega2^2 + lambda*mu + c"))?
                .with_rule(
                    base(Base::Omega4),
                    poly("omega4^2 + lambda*(-3*lambda - 2*mu) + c"),
                )?,
            other => return Err(DiffError::UnknownContext(other.to_string())),
        };
        Ok(d.renamed(name))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rules(&self) -> impl Iterator<Item = (&Var, &MultiPoly)> {
        self.rules.iter()
    }

    /// The image of a single variable.
    pub fn image(&self, v: Var) -> Result<MultiPoly, DiffError> {
        match v {
            Var::Param(_) => Ok(MultiPoly::zero()),
            Var::Diff(d) => {
                if let Some(rule) = self.rules.get(&v) {
                    return Ok(rule.clone());
                }
                // A custom rule at a lower order replaces the prolongation
                // chain for that base, so higher orders are undefined.
                let shadowed = self
                    .rules
                    .keys()
                    .filter_map(Var::as_diff)
                    .any(|r| r.base == d.base && r.order < d.order);
                if shadowed {
                    return Err(self.no_rule(v));
                }
                Ok(MultiPoly::var(Var::Diff(d.prolong())))
            }
            Var::PowerSum(_) | Var::Root(_) => Err(self.no_rule(v)),
        }
    }

    fn no_rule(&self, v: Var) -> DiffError {
        DiffError::NoRule {
            var: v.to_string(),
            context: self.name.clone(),
        }
    }

    /// Applies the derivation to `p` by the Leibniz rule.
    pub fn apply(&self, p: &MultiPoly) -> Result<MultiPoly, DiffError> {
        let mut images: HashMap<Var, MultiPoly> = HashMap::new();
        let mut out = MultiPoly::zero();
        for (m, c) in p.terms() {
            for &(v, e) in m.factors() {
                if !images.contains_key(&v) {
                    images.insert(v, self.image(v)?);
                }
                let dv = &images[&v];
                if dv.is_zero() {
                    continue;
                }
                let rest = m.with_degree(v, e - 1);
                let coeff = c * Rational::from_integer(e.into());
                if dv.len() == 1 {
                    let (dm, dc) = dv.terms().next().unwrap();
                    out.add_term(rest.mul(dm), coeff * dc);
                } else {
                    out += &dv.mul_monomial(&rest, &coeff);
                }
            }
        }
        Ok(out)
    }

    pub fn to_config(&self) -> DerivationConfig {
        DerivationConfig {
            name: self.name.clone(),
            rules: self
                .rules
                .iter()
                .map(|(v, r)| RuleEntry {
                    var: *v,
                    rule: r.to_string(),
                })
                .collect(),
        }
    }

    pub fn from_config(cfg: &DerivationConfig) -> Result<Self, DiffError> {
        let mut d = Derivation::generic().renamed(&cfg.name);
        for entry in &cfg.rules {
            let rule: MultiPoly = entry.rule.parse()?;
            d = d.with_rule(entry.var, rule)?;
        }
        Ok(d)
    }

    pub fn from_json(s: &str) -> Result<Self, DiffError> {
        let cfg: DerivationConfig =
            serde_json::from_str(s).map_err(|e| DiffError::Config(e.to_string()))?;
        Derivation::from_config(&cfg)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_config()).expect("config serializes")
    }
}

/// Declarative form of a derivation: a list of (variable, rule) pairs with
/// the rules in canonical polynomial text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationConfig {
    pub name: String,
    pub rules: Vec<RuleEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleEntry {
    pub var: Var,
    pub rule: String,
}

/// `D(p)` under derivation `d`.
pub fn differentiate(p: &MultiPoly, d: &Derivation) -> Result<MultiPoly, DiffError> {
    d.apply(p)
}

/// Simultaneous substitution; unbound variables pass through.
pub fn substitute(p: &MultiPoly, bindings: &HashMap<Var, MultiPoly>) -> MultiPoly {
    p.substitute(bindings)
}

/// One leading-term cancellation step in `x`.
pub fn cancel_leading(p: &MultiPoly, q: &MultiPoly, x: Var) -> Result<MultiPoly, PolyError> {
    p.cancel_leading(q, x)
}

/// Repeats `cancel_leading` against `q` until `deg_x(p) < deg_x(q)`.
pub fn cancel_until_below(p: &MultiPoly, q: &MultiPoly, x: Var) -> Result<MultiPoly, PolyError> {
    let dq = q.degree(x);
    let mut r = p.clone();
    while !r.is_zero() && r.degree(x) >= dq && r.contains_var(x) {
        r = r.cancel_leading(q, x)?;
    }
    Ok(r)
}
