//! Exact sparse multivariate polynomials over arbitrary-precision rationals.

mod division;
mod monomial;
mod text;
mod var;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use division::{sylvester_resultant, DivideOutcome, PseudoDivision, DEFAULT_TERM_BUDGET};
pub use monomial::Monomial;
pub use text::{parse_rational, rational_text};
pub use var::{Base, DiffVar, Param, Var};

/// Exact coefficient type: always in lowest terms with positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("variable `{0}` has no value in the assignment")]
    MissingVariable(String),
    #[error("polynomial has degree 0 in `{0}`")]
    ZeroDegree(String),
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("intermediate expression exceeded the term budget ({terms} > {limit})")]
    BudgetExceeded { terms: usize, limit: usize },
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// A polynomial stored as a map from monomial to nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(Rational::one())
    }

    pub fn constant(r: Rational) -> Self {
        MultiPoly::term(r, Monomial::one())
    }

    pub fn integer(n: i64) -> Self {
        MultiPoly::constant(int(n))
    }

    pub fn var(v: Var) -> Self {
        MultiPoly::term(Rational::one(), Monomial::var(v))
    }

    pub fn var_pow(v: Var, e: u32) -> Self {
        MultiPoly::term(Rational::one(), Monomial::var_pow(v, e))
    }

    pub fn term(coeff: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(m, coeff);
        }
        MultiPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(iter: I) -> Self {
        let mut p = MultiPoly::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, Rational)> {
        self.terms.into_iter()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.vars()).collect()
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.degree_in(v) > 0)
    }

    /// Degree in `v`; the zero polynomial has degree 0 here.
    pub fn degree(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.degree_in(v)).max().unwrap_or(0)
    }

    /// Coefficient of `v^k`, as a polynomial in the remaining variables.
    pub fn coeff_in(&self, v: Var, k: u32) -> MultiPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree_in(v) == k)
            .map(|(m, c)| (m.with_degree(v, 0), c.clone()))
            .collect();
        MultiPoly { terms }
    }

    /// Leading coefficient with respect to `v`.
    pub fn lc_in(&self, v: Var) -> MultiPoly {
        self.coeff_in(v, self.degree(v))
    }

    /// Coefficients of `self` viewed as a univariate polynomial in `v`,
    /// indexed by degree.
    pub fn to_univariate(&self, v: Var) -> Vec<MultiPoly> {
        let mut out = vec![MultiPoly::zero(); self.degree(v) as usize + 1];
        for (m, c) in &self.terms {
            let k = m.degree_in(v);
            out[k as usize].terms.insert(m.with_degree(v, 0), c.clone());
        }
        out
    }

    pub fn from_univariate(coeffs: &[MultiPoly], v: Var) -> MultiPoly {
        let mut p = MultiPoly::zero();
        for (k, ck) in coeffs.iter().enumerate() {
            for (m, c) in &ck.terms {
                let e = m.degree_in(v) + k as u32;
                p.add_term(m.with_degree(v, e), c.clone());
            }
        }
        p
    }

    /// Exact coefficient of a monomial, zero when absent.
    pub fn coefficient_of(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient of `m` when the variables in `free` are treated as part
    /// of the coefficient ring, e.g. the polynomial in `n` multiplying `c·λ²`.
    pub fn coefficient_over(&self, m: &Monomial, free: &[Var]) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (k, c) in &self.terms {
            let mut rest = k.clone();
            let mut kept = Vec::new();
            for &v in free {
                let e = rest.degree_in(v);
                if e > 0 {
                    kept.push((v, e));
                    rest = rest.with_degree(v, 0);
                }
            }
            if &rest == m {
                out.add_term(Monomial::from_pairs(kept), c.clone());
            }
        }
        out
    }

    pub fn scale(&self, r: &Rational) -> MultiPoly {
        if r.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * r)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, r: &Rational) -> MultiPoly {
        if r.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c * r)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut result = MultiPoly::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Returns `(d, q)` with `q = d·self` having integer coefficients, `d > 0`.
    pub fn integer_form(&self) -> (BigInt, Vec<(&Monomial, BigInt)>) {
        let mut den = BigInt::one();
        for c in self.terms.values() {
            den = den.lcm(c.denom());
        }
        let ints = self
            .terms
            .iter()
            .map(|(m, c)| (m, c.numer() * (&den / c.denom())))
            .collect();
        (den, ints)
    }

    /// Rational content: the positive rational `r` such that `self / r` has
    /// coprime integer coefficients.
    pub fn rational_content(&self) -> Rational {
        if self.is_zero() {
            return Rational::zero();
        }
        let (den, ints) = self.integer_form();
        let mut g = BigInt::zero();
        for (_, n) in &ints {
            g = g.gcd(n);
        }
        Rational::new(g, den)
    }

    /// Divides out the rational content and makes the leading coefficient
    /// positive. Returns the normalized polynomial and the removed unit `u`
    /// with `self = u · normalized`.
    pub fn normalized(&self) -> (MultiPoly, Rational) {
        if self.is_zero() {
            return (MultiPoly::zero(), Rational::one());
        }
        let mut u = self.rational_content();
        if self.leading_term().unwrap().1.is_negative() {
            u = -u;
        }
        let inv = u.recip();
        (self.scale(&inv), u)
    }

    /// Exact value under a full assignment of the variables.
    pub fn evaluate(&self, assignment: &HashMap<Var, Rational>) -> Result<Rational, PolyError> {
        let mut total = Rational::zero();
        let mut powers: HashMap<(Var, u32), Rational> = HashMap::new();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.factors() {
                let x = assignment
                    .get(&v)
                    .ok_or_else(|| PolyError::MissingVariable(v.to_string()))?;
                let p = powers
                    .entry((v, e))
                    .or_insert_with(|| num_traits::pow(x.clone(), e as usize));
                t *= &*p;
            }
            total += t;
        }
        Ok(total)
    }

    /// Partial evaluation: replaces the assigned variables by rationals.
    pub fn evaluate_partial(&self, assignment: &HashMap<Var, Rational>) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            for &(v, e) in m.factors() {
                match assignment.get(&v) {
                    Some(x) => coeff *= num_traits::pow(x.clone(), e as usize),
                    None => rest.push((v, e)),
                }
            }
            out.add_term(Monomial::from_pairs(rest), coeff);
        }
        out
    }

    /// Simultaneous substitution of polynomials for variables.
    pub fn substitute(&self, bindings: &HashMap<Var, MultiPoly>) -> MultiPoly {
        if bindings.is_empty() {
            return self.clone();
        }
        let mut cache: HashMap<(Var, u32), MultiPoly> = HashMap::new();
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut product: Option<MultiPoly> = None;
            for &(v, e) in m.factors() {
                match bindings.get(&v) {
                    Some(b) => {
                        let pw = cache.entry((v, e)).or_insert_with(|| b.pow(e)).clone();
                        product = Some(match product {
                            None => pw,
                            Some(p) => &p * &pw,
                        });
                    }
                    None => kept.push((v, e)),
                }
            }
            let mono = Monomial::from_pairs(kept);
            match product {
                None => out.add_term(mono, c.clone()),
                Some(p) => out += &p.mul_monomial(&mono, c),
            }
        }
        out
    }

    fn mul_impl(&self, other: &MultiPoly) -> MultiPoly {
        if self.is_zero() || other.is_zero() {
            return MultiPoly::zero();
        }
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        let (da, a) = self.integer_form();
        let (db, b) = other.integer_form();
        let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(a.len() * b.len() / 2 + 1);
        for (ma, ca) in &a {
            for (mb, cb) in &b {
                let prod = ca * cb;
                match acc.entry(ma.mul(mb)) {
                    std::collections::hash_map::Entry::Occupied(mut e) => *e.get_mut() += prod,
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(prod);
                    }
                }
            }
        }
        let den = da * db;
        let terms = acc
            .into_iter()
            .filter(|(_, n)| !n.is_zero())
            .map(|(m, n)| (m, Rational::new(n, den.clone())))
            .collect();
        MultiPoly { terms }
    }
}

impl From<Var> for MultiPoly {
    fn from(v: Var) -> Self {
        MultiPoly::var(v)
    }
}

impl From<i64> for MultiPoly {
    fn from(n: i64) -> Self {
        MultiPoly::integer(n)
    }
}

impl From<Rational> for MultiPoly {
    fn from(r: Rational) -> Self {
        MultiPoly::constant(r)
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.mul_impl(rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(mut self) -> MultiPoly {
        for c in self.terms.values_mut() {
            *c = -&*c;
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for MultiPoly {
    fn sum<I: Iterator<Item = MultiPoly>>(iter: I) -> MultiPoly {
        let mut acc = MultiPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

/// Shorthand for building fixtures and tests: parses canonical text.
///
/// Panics on malformed input, so it is meant for literals in source code.
pub fn poly(s: &str) -> MultiPoly {
    s.parse()
        .unwrap_or_else(|e| panic!("bad polynomial literal `{s}`: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn difference_of_squares() {
        let p = poly("lambda + c") * poly("lambda - c");
        assert_eq!(p, poly("lambda^2 - c^2"));
    }

    #[test]
    fn zero_annihilates() {
        let p = poly("3*lambda'2*T - 1/2*R");
        assert!((&p * &MultiPoly::zero()).is_zero());
    }

    #[test]
    fn binomial_identity() {
        let s = poly("omega2 + omega3").pow(2) - poly("2*omega2*omega3");
        assert_eq!(s, poly("omega2^2 + omega3^2"));
    }

    #[test]
    fn self_difference_is_zero() {
        let p = poly("T'2 - 3*T*T'1 + T^3 + (4*c - 11*lambda^2)*T + 12*lambda*lambda'1");
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn evaluation() {
        let p = poly("lambda^2 - c");
        let a: HashMap<Var, Rational> = [(Var::lambda(0), int(2)), (Var::C, int(1))].into();
        assert_eq!(p.evaluate(&a).unwrap(), int(3));
        assert_eq!(MultiPoly::zero().evaluate(&HashMap::new()).unwrap(), int(0));
        let missing = poly("lambda*R").evaluate(&a);
        assert_eq!(missing, Err(PolyError::MissingVariable("R".into())));
    }

    #[test]
    fn power_sums_of_one_and_two() {
        let rel = poly("f1^3 - 3*f1*f2 + 2*f3");
        let a: HashMap<Var, Rational> = (1..=3)
            .map(|k| (Var::PowerSum(k), int(1 + (1 << k))))
            .collect();
        assert_eq!(rel.evaluate(&a).unwrap(), int(0));
    }

    #[test]
    fn coefficient_lookup() {
        let p = poly("3*lambda^2*R - 36*lambda^2*c");
        let m = Monomial::from_pairs([(Var::lambda(0), 2), (Var::R, 1)]);
        assert_eq!(p.coefficient_of(&m), int(3));
        assert_eq!(MultiPoly::zero().coefficient_of(&m), int(0));
    }

    #[test]
    fn normalization_records_unit() {
        let p = poly("-6*lambda*T + 9/2*lambda");
        let (q, u) = p.normalized();
        assert_eq!(q, poly("4*lambda*T - 3*lambda"));
        assert_eq!(q.scale(&u), p);
    }

    #[test]
    fn univariate_round_trip() {
        let p = poly("T^3*lambda + 2*T*lambda'1 - c");
        let t = Var::t(0);
        let coeffs = p.to_univariate(t);
        assert_eq!(coeffs.len(), 4);
        assert_eq!(coeffs[1], poly("2*lambda'1"));
        assert_eq!(MultiPoly::from_univariate(&coeffs, t), p);
    }

    #[test]
    fn substitution_is_simultaneous() {
        let l = Var::lambda(0);
        let t = Var::t(0);
        let b: HashMap<Var, MultiPoly> = [(l, poly("T")), (t, poly("lambda"))].into();
        assert_eq!(poly("lambda^2*T").substitute(&b), poly("T^2*lambda"));
        assert_eq!(poly("lambda").substitute(&HashMap::new()), poly("lambda"));
    }
}
