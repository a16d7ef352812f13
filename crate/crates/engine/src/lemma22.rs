//! Lemma 2.2: the power sums `f_k = Σ (ω_ii¹)^k` and the mixed sums `g_k`,
//! rebuilt from their recurrences and checked against the closed forms.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::certificate::{compare_exact, Comparison, Status};
use crate::diff::{Derivation, DiffError};
use crate::poly::{int, poly, rat, Monomial, MultiPoly, Var};

/// The dimension parameter: left symbolic or specialized.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NValue {
    Symbolic,
    Integer(u32),
}

impl fmt::Display for NValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NValue::Symbolic => write!(f, "n"),
            NValue::Integer(k) => write!(f, "{k}"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Lemma22Error {
    #[error("dimension must be at least 3, got {0}")]
    SmallDimension(u32),
    #[error(transparent)]
    Diff(#[from] DiffError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FChain {
    /// `f[k-1]` is `f_k`.
    pub f: [MultiPoly; 5],
    /// `g[k-1]` is `g_k`.
    pub g: [MultiPoly; 4],
    pub n_value: NValue,
}

impl FChain {
    /// The entries in report order: f1..f5 then g1..g4.
    pub fn entries(&self) -> Vec<(&'static str, &MultiPoly)> {
        let names = ["f1", "f2", "f3", "f4", "f5", "g1", "g2", "g3", "g4"];
        names
            .iter()
            .copied()
            .zip(self.f.iter().chain(self.g.iter()))
            .collect()
    }
}

/// The recurrence behind each entry, as it appears in the report.
pub const RECURRENCES: [(&str, &str); 9] = [
    ("f1", "f1 = T"),
    ("f2", "f2 = D(T) - lambda*S1 - (n-1)*c"),
    ("g1", "g1 = lambda*T + D(S1)"),
    ("f3", "f3 = 1/2*D(f2) - lambda*g1 - c*f1"),
    (
        "g2",
        "g2 = 1/2*(D(g1) - lambda*S2 + lambda*f2 + 3*c*lambda)",
    ),
    ("f4", "f4 = 1/3*D(f3) - lambda*g2 - c*f2"),
    ("g3", "g3 = 1/2*D(S2) + lambda*g1"),
    ("g4", "g4 = 1/3*(D(g2) + lambda*f3 - 2*lambda*g3 - 2*c*g1)"),
    ("f5", "f5 = 1/4*D(f4) - lambda*g4 - c*f3"),
];

fn n_poly(n: NValue) -> MultiPoly {
    match n {
        NValue::Symbolic => MultiPoly::var(Var::N),
        NValue::Integer(k) => MultiPoly::integer(k.into()),
    }
}

/// `S1 = Σ λ_i = −3λ`.
pub fn sum_lambda_i() -> MultiPoly {
    poly("-3*lambda")
}

/// `S2 = Σ λ_i² = n(n−1)c + 3λ² − R`.
pub fn sum_lambda_i_squared(n: NValue) -> MultiPoly {
    let np = n_poly(n);
    &(&(&np * &(&np - &MultiPoly::one())) * &poly("c")) + &poly("3*lambda^2 - R")
}

pub fn build_f_chain(n: NValue) -> Result<FChain, Lemma22Error> {
    if let NValue::Integer(k) = n {
        if k < 3 {
            return Err(Lemma22Error::SmallDimension(k));
        }
    }
    let d = Derivation::generic();
    let dd = |p: &MultiPoly| d.apply(p);
    let np = n_poly(n);
    let lambda = poly("lambda");
    let c = poly("c");
    let s1 = sum_lambda_i();
    let s2 = sum_lambda_i_squared(n);

    let f1 = poly("T");
    let f2 = &(&dd(&f1)? - &(&lambda * &s1)) - &(&(&np - &MultiPoly::one()) * &c);
    let g1 = &(&lambda * &f1) + &dd(&s1)?;
    let f3 = &(&dd(&f2)?.scale(&rat(1, 2)) - &(&lambda * &g1)) - &(&c * &f1);
    let g2 = (&(&(&dd(&g1)? - &(&lambda * &s2)) + &(&lambda * &f2)) + &poly("3*c*lambda"))
        .scale(&rat(1, 2));
    let f4 = &(&dd(&f3)?.scale(&rat(1, 3)) - &(&lambda * &g2)) - &(&c * &f2);
    let g3 = &dd(&s2)?.scale(&rat(1, 2)) + &(&lambda * &g1);
    let g4 = (&(&(&dd(&g2)? + &(&lambda * &f3)) - &(&lambda * &g3).scale(&int(2)))
        - &(&c * &g1).scale(&int(2)))
        .scale(&rat(1, 3));
    let f5 = &(&dd(&f4)?.scale(&rat(1, 4)) - &(&lambda * &g4)) - &(&c * &f3);

    Ok(FChain {
        f: [f1, f2, f3, f4, f5],
        g: [g1, g2, g3, g4],
        n_value: n,
    })
}

/// The printed closed forms for symbolic `n`, in `FChain::entries` order.
pub fn closed_forms() -> Vec<(&'static str, MultiPoly)> {
    vec![
        ("f1", poly("T")),
        ("f2", poly("T' + 3*lambda^2 - (n - 1)*c")),
        ("f3", poly("1/2*T'' - (lambda^2 + c)*T + 6*lambda*lambda'")),
        (
            "f4",
            poly(
                "1/6*T''' - 4/3*(lambda^2 + c)*T' - 7/6*lambda*lambda'*T + 2*lambda'^2 + 7/2*lambda*lambda''
                 + (n^2 - 10)/2*c*lambda^2 - 1/2*R*lambda^2 + (n - 1)*c^2",
            ),
        ),
        (
            "f5",
            poly(
                "1/24*T'''' - 5/6*(lambda^2 + c)*T'' - 35/24*lambda*lambda'*T'
                 - 1/24*(11*lambda*lambda'' + 7*lambda'^2 - 24*lambda^4 - 48*c*lambda^2 - 24*c^2)*T
                 + 11/8*lambda*lambda''' + 15/8*lambda'*lambda'' - 2*lambda^3*lambda'
                 - (134 - 5*n^2)/12*c*lambda*lambda' - 5/12*R*lambda*lambda'",
            ),
        ),
        ("g1", poly("lambda*T - 3*lambda'")),
        ("g2", poly("lambda*T' + 1/2*lambda'*T - 3/2*lambda'' - (n^2/2 - 2)*c*lambda + 1/2*R*lambda")),
        ("g3", poly("lambda^2*T")),
        (
            "g4",
            poly(
                "1/2*lambda*T'' + 1/2*lambda'*T' + (1/6*lambda'' - lambda^3 - c*lambda)*T - 1/2*lambda'''
                 + (2*lambda^2 + 1/6*R)*lambda' + (16 - n^2)/6*c*lambda'",
            ),
        ),
    ]
}

/// Weight of a single variable under the curvature scaling grading.
pub fn weight_of(v: Var) -> u32 {
    match v {
        Var::Diff(d) => d.order + 1,
        Var::Param(p) if p == crate::poly::Param::N => 0,
        Var::Param(_) => 2,
        Var::PowerSum(k) => k,
        Var::Root(_) => 1,
    }
}

pub fn monomial_weight(m: &Monomial) -> u32 {
    m.factors().iter().map(|&(v, e)| weight_of(v) * e).sum()
}

/// The common weight of every term, or `None` if `p` is inhomogeneous or zero.
pub fn homogeneous_weight(p: &MultiPoly) -> Option<u32> {
    let mut w = None;
    for (m, _) in p.terms() {
        let wm = monomial_weight(m);
        match w {
            None => w = Some(wm),
            Some(x) if x != wm => return None,
            _ => {}
        }
    }
    w
}

/// Expected weights: `f_k` has weight `k`; the `g_k` have weights 2, 3, 3, 4.
pub fn expected_weight(name: &str) -> u32 {
    match name {
        "g1" => 2,
        "g2" | "g3" => 3,
        "g4" => 4,
        f => f[1..].parse().expect("entry name"),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClosedFormEntry {
    pub name: String,
    pub recurrence: String,
    pub computed: MultiPoly,
    pub comparison: Comparison,
    pub weight: Option<u32>,
    pub expected_weight: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpotCheck {
    pub entry: String,
    pub monomial: String,
    pub expected: MultiPoly,
    pub found: MultiPoly,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Lemma22Report {
    pub n: String,
    pub entries: Vec<ClosedFormEntry>,
    pub spot_checks: Vec<SpotCheck>,
    pub status: Status,
}

impl Lemma22Report {
    pub fn matched_count(&self) -> usize {
        self.entries.iter().filter(|e| e.comparison.matched).count()
    }
}

fn specialize(p: &MultiPoly, n: NValue) -> MultiPoly {
    match n {
        NValue::Symbolic => p.clone(),
        NValue::Integer(k) => {
            p.substitute(&HashMap::from([(Var::N, MultiPoly::integer(k.into()))]))
        }
    }
}

/// Compares each recurrence-built entry against its closed form, checks
/// homogeneity and the two printed spot coefficients.
pub fn check_closed_forms(chain: &FChain) -> Lemma22Report {
    let fixtures: HashMap<&str, MultiPoly> = closed_forms().into_iter().collect();
    let recurrence: HashMap<&str, &str> = RECURRENCES.iter().copied().collect();
    let entries: Vec<ClosedFormEntry> = chain
        .entries()
        .into_iter()
        .map(|(name, computed)| {
            let expected = specialize(&fixtures[name], chain.n_value);
            ClosedFormEntry {
                name: name.to_string(),
                recurrence: recurrence[name].to_string(),
                computed: computed.clone(),
                comparison: compare_exact(&format!("L6.{name}"), computed, &expected),
                weight: homogeneous_weight(computed),
                expected_weight: expected_weight(name),
            }
        })
        .collect();

    let spot = |entry: &str, p: &MultiPoly, m: &str, expected: MultiPoly| {
        let mono = poly(m).leading_term().expect("monomial").0.clone();
        let found = p.coefficient_over(&mono, &[Var::N]);
        SpotCheck {
            entry: entry.into(),
            monomial: m.into(),
            passed: found == expected,
            expected,
            found,
        }
    };
    let spot_checks = vec![
        spot(
            "f4",
            &chain.f[3],
            "c*lambda^2",
            specialize(&poly("(n^2 - 10)/2"), chain.n_value),
        ),
        spot("f5", &chain.f[4], "lambda*lambda'''", poly("11/8")),
    ];

    let ok = entries
        .iter()
        .all(|e| e.comparison.matched && e.weight == Some(e.expected_weight))
        && spot_checks.iter().all(|s| s.passed);
    Lemma22Report {
        n: chain.n_value.to_string(),
        entries,
        spot_checks,
        status: if ok {
            Status::Verified
        } else {
            Status::Mismatch
        },
    }
}

/// Builds the chain for `n` and checks it.
pub fn verify_lemma22(n: NValue) -> Result<Lemma22Report, Lemma22Error> {
    Ok(check_closed_forms(&build_f_chain(n)?))
}
