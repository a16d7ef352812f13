use std::cmp::Ordering;
use std::fmt;

use super::Var;

/// A power product of variables.
///
/// Exponents are stored sorted by variable significance with no zero
/// entries, so structural equality is mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    degree: u32,
    factors: Vec<(Var, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Var) -> Self {
        Monomial::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: u32) -> Self {
        if e == 0 {
            return Monomial::one();
        }
        Monomial {
            degree: e,
            factors: vec![(v, e)],
        }
    }

    /// Builds a monomial from arbitrary (variable, exponent) pairs; repeated
    /// variables are merged and zero exponents dropped.
    pub fn from_pairs<I: IntoIterator<Item = (Var, u32)>>(pairs: I) -> Self {
        let mut factors: Vec<(Var, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        factors.sort_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(Var, u32)> = Vec::with_capacity(factors.len());
        for (v, e) in factors {
            match merged.last_mut() {
                Some(last) if last.0 == v => last.1 += e,
                _ => merged.push((v, e)),
            }
        }
        let degree = merged.iter().map(|&(_, e)| e).sum();
        Monomial {
            degree,
            factors: merged,
        }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.degree
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.factors
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.factors.iter().map(|&(v, _)| v)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        match self.factors.binary_search_by(|probe| probe.0.cmp(&v)) {
            Ok(i) => self.factors[i].1,
            Err(_) => 0,
        }
    }

    /// Sets the exponent of `v`, removing it when `e == 0`.
    pub fn with_degree(&self, v: Var, e: u32) -> Monomial {
        let mut factors = self.factors.clone();
        match factors.binary_search_by(|probe| probe.0.cmp(&v)) {
            Ok(i) if e == 0 => {
                factors.remove(i);
            }
            Ok(i) => factors[i].1 = e,
            Err(_) if e == 0 => {}
            Err(i) => factors.insert(i, (v, e)),
        }
        let degree = factors.iter().map(|&(_, e)| e).sum();
        Monomial { degree, factors }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.factors, &other.factors);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial {
            degree: self.degree + other.degree,
            factors: out,
        }
    }

    /// Returns `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.degree > self.degree {
            return None;
        }
        let mut out = Vec::with_capacity(self.factors.len());
        let mut j = 0;
        for &(v, e) in &self.factors {
            if j < other.factors.len() && other.factors[j].0 == v {
                let f = other.factors[j].1;
                if f > e {
                    return None;
                }
                if e > f {
                    out.push((v, e - f));
                }
                j += 1;
            } else {
                if j < other.factors.len() && other.factors[j].0 < v {
                    return None;
                }
                out.push((v, e));
            }
        }
        if j != other.factors.len() {
            return None;
        }
        Some(Monomial {
            degree: self.degree - other.degree,
            factors: out,
        })
    }

    /// Componentwise minimum of exponents.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.factors, &other.factors);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1.min(b[j].1)));
                    i += 1;
                    j += 1;
                }
            }
        }
        let degree = out.iter().map(|&(_, e)| e).sum();
        Monomial {
            degree,
            factors: out,
        }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial {
            degree: self.degree * k,
            factors: self.factors.iter().map(|&(v, e)| (v, e * k)).collect(),
        }
    }

    fn lex_cmp(&self, other: &Monomial) -> Ordering {
        let (a, b) = (&self.factors, &other.factors);
        for i in 0.. {
            match (a.get(i), b.get(i)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    if va == vb {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                    } else if va < vb {
                        return Ordering::Greater;
                    } else {
                        return Ordering::Less;
                    }
                }
            }
        }
        unreachable!()
    }
}

/// Graded lexicographic order over the fixed variable order.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.lex_cmp(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (k, &(v, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(pairs: &[(Var, u32)]) -> Monomial {
        Monomial::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn grlex_compares_degree_first() {
        let l = Var::lambda(0);
        let t = Var::t(0);
        assert!(m(&[(t, 3)]) > m(&[(l, 2)]));
        assert!(m(&[(l, 2)]) > m(&[(l, 1), (t, 1)]));
        assert!(m(&[(l, 1), (t, 1)]) > m(&[(t, 2)]));
        assert!(m(&[(Var::lambda(1), 1)]) > m(&[(l, 1)]));
    }

    #[test]
    fn mul_div_gcd() {
        let l = Var::lambda(0);
        let c = Var::C;
        let a = m(&[(l, 2), (c, 1)]);
        let b = m(&[(l, 1)]);
        assert_eq!(a.div(&b), Some(m(&[(l, 1), (c, 1)])));
        assert_eq!(b.div(&a), None);
        assert_eq!(a.mul(&b), m(&[(l, 3), (c, 1)]));
        assert_eq!(a.gcd(&m(&[(l, 5), (Var::R, 1)])), m(&[(l, 2)]));
        assert_eq!(m(&[(c, 1)]).div(&m(&[(l, 1)])), None);
    }

    #[test]
    fn with_degree_edits() {
        let l = Var::lambda(0);
        let a = m(&[(l, 2), (Var::C, 1)]);
        assert_eq!(a.with_degree(l, 0), m(&[(Var::C, 1)]));
        assert_eq!(a.with_degree(Var::R, 3).total_degree(), 6);
    }
}
