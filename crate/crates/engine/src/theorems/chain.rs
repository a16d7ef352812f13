//! Elimination chains: equation sets, step templates, the chain runner and
//! certificate replay.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::fixtures;
use crate::certificate::{compare_up_to_unit, Comparison, Status};
use crate::diff::{Derivation, DiffError};
use crate::poly::{rational_text, Base, MultiPoly, PolyError, Var};

/// Why a polynomial may be divided out of an equation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum HypothesisKind {
    /// The named polynomial is assumed nonzero; a factor must be a rational
    /// multiple of it.
    Nonzero { poly: MultiPoly },
    /// Any nonzero polynomial in {λ, R, c} with positive degree in λ: its
    /// vanishing would force λ to be constant.
    LambdaNonconstant,
    /// Sums of even monomials with positive coefficients and a positive
    /// constant term never vanish over the reals.
    PositiveDefinite,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypothesis {
    pub tag: String,
    #[serde(flatten)]
    pub kind: HypothesisKind,
}

impl Hypothesis {
    pub fn nonzero(tag: &str, p: MultiPoly) -> Self {
        Hypothesis {
            tag: tag.to_string(),
            kind: HypothesisKind::Nonzero { poly: p },
        }
    }

    pub fn lambda_nonconstant() -> Self {
        Hypothesis {
            tag: "lambda-nonconstant".to_string(),
            kind: HypothesisKind::LambdaNonconstant,
        }
    }

    pub fn positive_definite() -> Self {
        Hypothesis {
            tag: "positive-definite".to_string(),
            kind: HypothesisKind::PositiveDefinite,
        }
    }

    /// Whether `factor` may be discarded under this hypothesis.
    pub fn admits(&self, factor: &MultiPoly) -> bool {
        if factor.is_zero() || factor.is_constant() {
            return false;
        }
        match &self.kind {
            HypothesisKind::Nonzero { poly } => poly.normalized().0 == factor.normalized().0,
            HypothesisKind::LambdaNonconstant => is_lambda_eliminant(factor),
            HypothesisKind::PositiveDefinite => {
                let (p, _) = factor.normalized();
                p.as_constant().is_none()
                    && p.terms().all(|(m, c)| {
                        c > &num_traits::Zero::zero()
                            && m.factors().iter().all(|&(_, e)| e % 2 == 0)
                    })
                    && p.terms().any(|(m, _)| m.is_one())
            }
        }
    }
}

/// A nonzero polynomial in {λ, R, c} only, with positive λ-degree.
pub fn is_lambda_eliminant(p: &MultiPoly) -> bool {
    let lambda = Var::lambda(0);
    !p.is_zero()
        && p.degree(lambda) > 0
        && p.vars()
            .into_iter()
            .all(|v| v == lambda || v == Var::R || v == Var::C)
}

/// Named input equations (each asserted to vanish), a derivation context and
/// the hypotheses under which factors may be discarded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquationSet {
    pub name: String,
    pub equations: Vec<(String, MultiPoly)>,
    pub context: String,
    pub hypotheses: Vec<Hypothesis>,
}

impl EquationSet {
    pub fn new(name: &str, context: &str) -> Self {
        EquationSet {
            name: name.to_string(),
            equations: Vec::new(),
            context: context.to_string(),
            hypotheses: Vec::new(),
        }
    }

    pub fn equation(mut self, label: &str, p: MultiPoly) -> Self {
        self.equations.push((label.to_string(), p));
        self
    }

    pub fn hypothesis(mut self, h: Hypothesis) -> Self {
        self.hypotheses.push(h);
        self
    }

    pub fn get(&self, label: &str) -> Option<&MultiPoly> {
        self.equations
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, p)| p)
    }
}

/// The operation of a chain step. Operands name earlier steps by label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StepOp {
    Input {
        poly: MultiPoly,
    },
    Differentiate {
        of: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        context: Option<String>,
    },
    Substitute {
        of: String,
        bindings: Vec<(Var, MultiPoly)>,
    },
    CancelLeading {
        p: String,
        q: String,
        var: Var,
    },
    /// Repeated `cancel_leading` until the degree in `var` drops below that of
    /// `q`. An operand already below that degree passes through unchanged.
    CancelUntil {
        p: String,
        q: String,
        var: Var,
    },
    Resultant {
        p: String,
        q: String,
        var: Var,
    },
    PseudoRemainder {
        p: String,
        q: String,
        var: Var,
    },
    Coefficient {
        of: String,
        var: Var,
        degree: u32,
    },
    Combine {
        terms: Vec<(MultiPoly, String)>,
    },
    DiscardFactor {
        of: String,
        factor: MultiPoly,
        hypothesis: String,
    },
    CompareTarget {
        of: String,
        fixture: String,
    },
    CheckEliminant {
        of: String,
    },
}

impl StepOp {
    fn operands(&self) -> Vec<&str> {
        match self {
            StepOp::Input { .. } => vec![],
            StepOp::Differentiate { of, .. }
            | StepOp::Substitute { of, .. }
            | StepOp::Coefficient { of, .. }
            | StepOp::DiscardFactor { of, .. }
            | StepOp::CompareTarget { of, .. }
            | StepOp::CheckEliminant { of } => vec![of],
            StepOp::CancelLeading { p, q, .. }
            | StepOp::CancelUntil { p, q, .. }
            | StepOp::Resultant { p, q, .. }
            | StepOp::PseudoRemainder { p, q, .. } => vec![p, q],
            StepOp::Combine { terms } => terms.iter().map(|(_, l)| l.as_str()).collect(),
        }
    }

    fn variable(&self) -> Option<Var> {
        match self {
            StepOp::CancelLeading { var, .. }
            | StepOp::CancelUntil { var, .. }
            | StepOp::Resultant { var, .. }
            | StepOp::PseudoRemainder { var, .. }
            | StepOp::Coefficient { var, .. } => Some(*var),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepTemplate {
    pub label: String,
    pub op: StepOp,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscardedFactor {
    pub factor: MultiPoly,
    pub multiplicity: u32,
    pub hypothesis: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyCheck {
    pub only_lambda_r_c: bool,
    pub lambda_degree: u32,
    pub passed: bool,
}

/// One executed step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainStep {
    pub index: usize,
    pub label: String,
    #[serde(flatten)]
    pub op: StepOp,
    pub inputs: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variable: Option<Var>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factor_discarded: Option<DiscardedFactor>,
    /// Rational factor removed when normalizing the output.
    pub unit: String,
    pub terms: usize,
    pub output: MultiPoly,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comparison: Option<Comparison>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub property: Option<PropertyCheck>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub name: String,
    pub context: String,
    pub hypotheses: Vec<Hypothesis>,
    pub term_budget: usize,
    pub chain: Vec<ChainStep>,
    pub status: Status,
    pub final_polynomial: MultiPoly,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Certificate {
    pub fn step(&self, label: &str) -> Option<&ChainStep> {
        self.chain.iter().find(|s| s.label == label)
    }

    pub fn output(&self, label: &str) -> Option<&MultiPoly> {
        self.step(label).map(|s| &s.output)
    }

    pub fn comparisons(&self) -> impl Iterator<Item = &Comparison> {
        self.chain.iter().filter_map(|s| s.comparison.as_ref())
    }

    /// The equation set the chain started from.
    pub fn equation_set(&self) -> EquationSet {
        let mut set = EquationSet::new(&self.name, &self.context);
        set.hypotheses = self.hypotheses.clone();
        for s in &self.chain {
            if let StepOp::Input { poly } = &s.op {
                set.equations.push((s.label.clone(), poly.clone()));
            }
        }
        set
    }

    /// The non-input step templates.
    pub fn templates(&self) -> Vec<StepTemplate> {
        self.chain
            .iter()
            .filter(|s| !matches!(s.op, StepOp::Input { .. }))
            .map(|s| StepTemplate {
                label: s.label.clone(),
                op: s.op.clone(),
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum StepError {
    #[error("unknown operand `{0}`")]
    UnknownOperand(String),
    #[error("duplicate step label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown hypothesis `{0}`")]
    UnknownHypothesis(String),
    #[error("hypothesis `{hypothesis}` does not admit factor `{factor}`")]
    NotAdmitted { hypothesis: String, factor: String },
    #[error("factor `{0}` does not divide the operand")]
    NotDivisible(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("step produced the zero polynomial")]
    ZeroOutput,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Diff(#[from] DiffError),
}

/// A step whose precondition failed. Carries the partial certificate.
#[derive(Debug, Clone, Error)]
#[error("chain `{}` aborted at step {step} (`{label}`): {source}", partial.name)]
pub struct ChainError {
    pub step: usize,
    pub label: String,
    pub source: StepError,
    pub partial: Box<Certificate>,
}

/// Default per-step term budget. The unprinted tails outgrow it and end
/// inconclusive; every printed chain stays far below.
pub const TAIL_BUDGET: usize = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChainOptions {
    pub term_budget: usize,
}

impl Default for ChainOptions {
    fn default() -> Self {
        ChainOptions {
            term_budget: TAIL_BUDGET,
        }
    }
}

/// Builder for step templates.
#[derive(Clone, Debug, Default)]
pub struct ChainSpec {
    pub steps: Vec<StepTemplate>,
}

impl ChainSpec {
    pub fn new() -> Self {
        ChainSpec::default()
    }

    fn push(&mut self, label: &str, op: StepOp) -> &mut Self {
        self.steps.push(StepTemplate {
            label: label.to_string(),
            op,
        });
        self
    }

    pub fn differentiate(&mut self, label: &str, of: &str) -> &mut Self {
        self.push(
            label,
            StepOp::Differentiate {
                of: of.into(),
                context: None,
            },
        )
    }

    pub fn differentiate_in(&mut self, label: &str, of: &str, context: &str) -> &mut Self {
        self.push(
            label,
            StepOp::Differentiate {
                of: of.into(),
                context: Some(context.into()),
            },
        )
    }

    pub fn substitute(
        &mut self,
        label: &str,
        of: &str,
        bindings: Vec<(Var, MultiPoly)>,
    ) -> &mut Self {
        self.push(
            label,
            StepOp::Substitute {
                of: of.into(),
                bindings,
            },
        )
    }

    pub fn cancel(&mut self, label: &str, p: &str, q: &str, var: Var) -> &mut Self {
        self.push(
            label,
            StepOp::CancelLeading {
                p: p.into(),
                q: q.into(),
                var,
            },
        )
    }

    pub fn cancel_until(&mut self, label: &str, p: &str, q: &str, var: Var) -> &mut Self {
        self.push(
            label,
            StepOp::CancelUntil {
                p: p.into(),
                q: q.into(),
                var,
            },
        )
    }

    pub fn resultant(&mut self, label: &str, p: &str, q: &str, var: Var) -> &mut Self {
        self.push(
            label,
            StepOp::Resultant {
                p: p.into(),
                q: q.into(),
                var,
            },
        )
    }

    pub fn prem(&mut self, label: &str, p: &str, q: &str, var: Var) -> &mut Self {
        self.push(
            label,
            StepOp::PseudoRemainder {
                p: p.into(),
                q: q.into(),
                var,
            },
        )
    }

    pub fn coefficient(&mut self, label: &str, of: &str, var: Var, degree: u32) -> &mut Self {
        self.push(
            label,
            StepOp::Coefficient {
                of: of.into(),
                var,
                degree,
            },
        )
    }

    pub fn combine(&mut self, label: &str, terms: Vec<(MultiPoly, &str)>) -> &mut Self {
        let terms = terms.into_iter().map(|(c, l)| (c, l.to_string())).collect();
        self.push(label, StepOp::Combine { terms })
    }

    pub fn discard(
        &mut self,
        label: &str,
        of: &str,
        factor: MultiPoly,
        hypothesis: &str,
    ) -> &mut Self {
        self.push(
            label,
            StepOp::DiscardFactor {
                of: of.into(),
                factor,
                hypothesis: hypothesis.into(),
            },
        )
    }

    /// Compares the output of `of` with the named fixture; the step label is
    /// `of` + "~" + fixture.
    pub fn compare(&mut self, of: &str, fixture: &str) -> &mut Self {
        let label = format!("{of}~{fixture}");
        self.push(
            &label,
            StepOp::CompareTarget {
                of: of.into(),
                fixture: fixture.into(),
            },
        )
    }

    pub fn check_eliminant(&mut self, of: &str) -> &mut Self {
        let label = format!("{of}?eliminant");
        self.push(&label, StepOp::CheckEliminant { of: of.into() })
    }
}

struct Runner<'a> {
    set: &'a EquationSet,
    derivation: Derivation,
    opts: ChainOptions,
    steps: Vec<ChainStep>,
    index: HashMap<String, usize>,
}

impl Runner<'_> {
    fn operand(&self, label: &str) -> Result<(usize, &MultiPoly), StepError> {
        let &i = self
            .index
            .get(label)
            .ok_or_else(|| StepError::UnknownOperand(label.to_string()))?;
        Ok((i, &self.steps[i].output))
    }

    fn budget(&self, p: MultiPoly) -> Result<MultiPoly, StepError> {
        if p.len() > self.opts.term_budget {
            return Err(PolyError::BudgetExceeded {
                terms: p.len(),
                limit: self.opts.term_budget,
            }
            .into());
        }
        Ok(p)
    }

    fn execute(&mut self, t: &StepTemplate) -> Result<ChainStep, StepError> {
        if self.index.contains_key(&t.label) {
            return Err(StepError::DuplicateLabel(t.label.clone()));
        }
        let mut inputs = Vec::new();
        for l in t.op.operands() {
            inputs.push(self.operand(l)?.0);
        }
        let mut factor_discarded = None;
        let mut comparison = None;
        let mut property = None;
        let mut normalize = true;
        let raw = match &t.op {
            StepOp::Input { poly } => poly.clone(),
            StepOp::Differentiate { of, context } => {
                let p = self.operand(of)?.1;
                match context {
                    Some(name) => Derivation::named(name)?.apply(p)?,
                    None => self.derivation.apply(p)?,
                }
            }
            StepOp::Substitute { of, bindings } => {
                let map: HashMap<Var, MultiPoly> = bindings.iter().cloned().collect();
                self.operand(of)?.1.substitute(&map)
            }
            StepOp::CancelLeading { p, q, var } => self
                .operand(p)?
                .1
                .cancel_leading(self.operand(q)?.1, *var)?,
            StepOp::CancelUntil { p, q, var } => {
                let q = self.operand(q)?.1;
                let dq = q.degree(*var);
                let mut r = self.operand(p)?.1.clone();
                if dq == 0 {
                    return Err(PolyError::ZeroDegree(var.to_string()).into());
                }
                while !r.is_zero() && r.degree(*var) >= dq {
                    r = self.budget(r.cancel_leading(q, *var)?.normalized().0)?;
                }
                r
            }
            StepOp::Resultant { p, q, var } => self.operand(p)?.1.resultant_with_budget(
                self.operand(q)?.1,
                *var,
                self.opts.term_budget,
            )?,
            StepOp::PseudoRemainder { p, q, var } => {
                self.operand(p)?
                    .1
                    .pseudo_divide(self.operand(q)?.1, *var)?
                    .remainder
            }
            StepOp::Coefficient { of, var, degree } => self.operand(of)?.1.coeff_in(*var, *degree),
            StepOp::Combine { terms } => {
                let mut acc = MultiPoly::zero();
                for (c, l) in terms {
                    acc += &(c * self.operand(l)?.1);
                }
                acc
            }
            StepOp::DiscardFactor {
                of,
                factor,
                hypothesis,
            } => {
                let h = self
                    .set
                    .hypotheses
                    .iter()
                    .find(|h| &h.tag == hypothesis)
                    .ok_or_else(|| StepError::UnknownHypothesis(hypothesis.clone()))?;
                if !h.admits(factor) {
                    return Err(StepError::NotAdmitted {
                        hypothesis: hypothesis.clone(),
                        factor: factor.to_string(),
                    });
                }
                let mut r = self.operand(of)?.1.clone();
                let mut k = 0;
                while let Some(q) = r.div_exact(factor) {
                    r = q;
                    k += 1;
                }
                if k == 0 {
                    return Err(StepError::NotDivisible(factor.to_string()));
                }
                factor_discarded = Some(DiscardedFactor {
                    factor: factor.clone(),
                    multiplicity: k,
                    hypothesis: hypothesis.clone(),
                });
                r
            }
            StepOp::CompareTarget { of, fixture } => {
                let expected = fixtures::get(fixture)
                    .ok_or_else(|| StepError::UnknownFixture(fixture.clone()))?;
                let p = self.operand(of)?.1.clone();
                comparison = Some(compare_up_to_unit(fixture, &p, &expected));
                normalize = false;
                p
            }
            StepOp::CheckEliminant { of } => {
                let p = self.operand(of)?.1.clone();
                let lambda = Var::diff(Base::Lambda, 0);
                let only = p
                    .vars()
                    .into_iter()
                    .all(|v| v == lambda || v == Var::R || v == Var::C);
                property = Some(PropertyCheck {
                    only_lambda_r_c: only,
                    lambda_degree: p.degree(lambda),
                    passed: is_lambda_eliminant(&p),
                });
                normalize = false;
                p
            }
        };
        let raw = self.budget(raw)?;
        if raw.is_zero() {
            return Err(StepError::ZeroOutput);
        }
        let (output, unit) = if normalize {
            raw.normalized()
        } else {
            (raw, num_traits::One::one())
        };
        Ok(ChainStep {
            index: self.steps.len(),
            label: t.label.clone(),
            op: t.op.clone(),
            inputs,
            variable: t.op.variable(),
            factor_discarded,
            unit: rational_text(&unit),
            terms: output.len(),
            output,
            comparison,
            property,
        })
    }

    fn certificate(self, status: Status, notes: Vec<String>) -> Certificate {
        let final_polynomial = self
            .steps
            .last()
            .map(|s| s.output.clone())
            .unwrap_or_else(MultiPoly::zero);
        Certificate {
            name: self.set.name.clone(),
            context: self.set.context.clone(),
            hypotheses: self.set.hypotheses.clone(),
            term_budget: self.opts.term_budget,
            chain: self.steps,
            status,
            final_polynomial,
            notes,
        }
    }
}

/// A chain whose eliminant check lands on a polynomial with no fixture of its
/// own ends `verified-property`, even if earlier steps matched fixtures.
fn status_of(steps: &[ChainStep]) -> Status {
    let comparisons: Vec<_> = steps.iter().filter_map(|s| s.comparison.as_ref()).collect();
    let properties: Vec<_> = steps.iter().filter(|s| s.property.is_some()).collect();
    let compared: Vec<usize> = steps
        .iter()
        .filter(|s| s.comparison.is_some())
        .flat_map(|s| s.inputs.iter().copied())
        .collect();
    let unprinted = properties
        .iter()
        .any(|s| s.inputs.iter().any(|i| !compared.contains(i)));
    if comparisons.iter().any(|c| !c.matched)
        || properties
            .iter()
            .any(|s| !s.property.as_ref().is_some_and(|p| p.passed))
    {
        Status::Mismatch
    } else if unprinted || (comparisons.is_empty() && !properties.is_empty()) {
        Status::VerifiedProperty
    } else if !comparisons.is_empty() {
        Status::Verified
    } else {
        Status::Inconclusive
    }
}

/// Runs `spec` on `set`. A step exceeding the term budget ends the chain
/// with status `inconclusive`; any other failed precondition is an error.
pub fn run_chain(
    set: &EquationSet,
    spec: &[StepTemplate],
    opts: ChainOptions,
) -> Result<Certificate, ChainError> {
    let derivation = Derivation::named(&set.context).unwrap_or_else(|_| Derivation::generic());
    let mut runner = Runner {
        set,
        derivation,
        opts,
        steps: Vec::new(),
        index: HashMap::new(),
    };
    let inputs = set.equations.iter().map(|(l, p)| StepTemplate {
        label: l.clone(),
        op: StepOp::Input { poly: p.clone() },
    });
    let all: Vec<StepTemplate> = inputs.chain(spec.iter().cloned()).collect();
    if let Err(e) = Derivation::named(&set.context) {
        let partial = runner.certificate(Status::Mismatch, vec![e.to_string()]);
        return Err(ChainError {
            step: 0,
            label: String::new(),
            source: e.into(),
            partial: Box::new(partial),
        });
    }
    for t in &all {
        match runner.execute(t) {
            Ok(step) => {
                runner.index.insert(step.label.clone(), step.index);
                runner.steps.push(step);
            }
            Err(StepError::Poly(PolyError::BudgetExceeded { terms, limit })) => {
                let note = format!(
                    "step {} (`{}`) exceeded the term budget ({terms} > {limit} terms); the chain stops here",
                    runner.steps.len(),
                    t.label
                );
                return Ok(runner.certificate(Status::Inconclusive, vec![note]));
            }
            Err(source) => {
                let step = runner.steps.len();
                let note = format!("aborted at step {step} (`{}`): {source}", t.label);
                let partial = runner.certificate(Status::Mismatch, vec![note]);
                return Err(ChainError {
                    step,
                    label: t.label.clone(),
                    source,
                    partial: Box::new(partial),
                });
            }
        }
    }
    let status = status_of(&runner.steps);
    Ok(runner.certificate(status, Vec::new()))
}

/// Outcome of re-executing a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReplayReport {
    pub name: String,
    pub reproduced: bool,
    /// Index of the first step whose output differs.
    pub first_difference: Option<usize>,
}

/// Re-runs the chain recorded in `cert` from its inputs and checks that every
/// step output, comparison and the status are reproduced exactly.
pub fn replay(cert: &Certificate) -> Result<ReplayReport, ChainError> {
    let set = cert.equation_set();
    let opts = ChainOptions {
        term_budget: cert.term_budget,
    };
    let again = run_chain(&set, &cert.templates(), opts)?;
    let first_difference = cert
        .chain
        .iter()
        .zip(again.chain.iter())
        .position(|(a, b)| a != b)
        .or_else(|| {
            (cert.chain.len() != again.chain.len())
                .then_some(cert.chain.len().min(again.chain.len()))
        });
    let reproduced = first_difference.is_none()
        && again.status == cert.status
        && again.final_polynomial == cert.final_polynomial;
    Ok(ReplayReport {
        name: cert.name.clone(),
        reproduced,
        first_difference,
    })
}
