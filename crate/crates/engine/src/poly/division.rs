//! Division-type operations: pseudo-division, exact division, resultants,
//! primitive parts.

use num_traits::One;

use super::{Monomial, MultiPoly, PolyError, Rational, Var};

/// Term budget used when no explicit limit is given.
pub const DEFAULT_TERM_BUDGET: usize = 2_000_000;

/// Result of `pseudo_divide`: `lc^power · p = quotient · q + remainder`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoDivision {
    pub quotient: MultiPoly,
    pub remainder: MultiPoly,
    pub power: u32,
}

/// Outcome of `divides_up_to_unit`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DivideOutcome {
    Yes { cofactor: MultiPoly },
    No,
}

impl DivideOutcome {
    pub fn cofactor(&self) -> Option<&MultiPoly> {
        match self {
            DivideOutcome::Yes { cofactor } => Some(cofactor),
            DivideOutcome::No => None,
        }
    }
}

fn check_budget(p: &MultiPoly, limit: usize) -> Result<(), PolyError> {
    if p.len() > limit {
        return Err(PolyError::BudgetExceeded {
            terms: p.len(),
            limit,
        });
    }
    Ok(())
}

impl MultiPoly {
    /// Sparse pseudo-division in `x`. `power` counts the reduction steps
    /// actually performed, so it never exceeds `deg_x(p) - deg_x(q) + 1`.
    pub fn pseudo_divide(&self, q: &MultiPoly, x: Var) -> Result<PseudoDivision, PolyError> {
        let dq = q.degree(x);
        if dq == 0 {
            return Err(PolyError::ZeroDegree(x.to_string()));
        }
        let lcq = q.lc_in(x);
        let mut quotient = MultiPoly::zero();
        let mut remainder = self.clone();
        let mut power = 0;
        while !remainder.is_zero() && remainder.degree(x) >= dq {
            let dr = remainder.degree(x);
            let shift = MultiPoly::var_pow(x, dr - dq);
            let lcr = remainder.lc_in(x);
            let t = &lcr * &shift;
            remainder = &(&lcq * &remainder) - &(&t * q);
            quotient = &(&lcq * &quotient) + &t;
            power += 1;
        }
        Ok(PseudoDivision {
            quotient,
            remainder,
            power,
        })
    }

    /// Exact division: returns `Some(h)` with `self = h · d`, or `None` if
    /// `d` does not divide `self`.
    pub fn div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        if d.is_zero() {
            return None;
        }
        if let Some(c) = d.as_constant() {
            return Some(self.scale(&c.recip()));
        }
        let (dm, dc) = d
            .leading_term()
            .map(|(m, c)| (m.clone(), c.clone()))
            .unwrap();
        let inv = dc.recip();
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        while let Some((rm, rc)) = rem.leading_term() {
            let m = rm.div(&dm)?;
            let c = rc * &inv;
            rem -= &d.mul_monomial(&m, &c);
            quot.add_term(m, c);
        }
        Some(quot)
    }

    /// Whether `q = self · h` for a polynomial `h`; returns `h`.
    pub fn divides_up_to_unit(&self, q: &MultiPoly) -> Result<DivideOutcome, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        Ok(match q.div_exact(self) {
            Some(cofactor) => DivideOutcome::Yes { cofactor },
            None => DivideOutcome::No,
        })
    }

    /// `self` divided by its content in `x`: the rational content times the
    /// gcd monomial of the coefficients (variables other than `x`). The sign
    /// is fixed so the leading coefficient is positive.
    pub fn primitive_part(&self, x: Var) -> Result<MultiPoly, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let (norm, _) = self.normalized();
        let mut g: Option<Monomial> = None;
        for (m, _) in norm.terms() {
            let stripped = m.with_degree(x, 0);
            g = Some(match g {
                None => stripped,
                Some(g) => g.gcd(&stripped),
            });
        }
        let g = g.unwrap();
        if g.is_one() {
            return Ok(norm);
        }
        Ok(MultiPoly::from_terms(
            norm.terms().map(|(m, c)| (m.div(&g).unwrap(), c.clone())),
        ))
    }

    /// Resultant in `x` by the subresultant PRS, with the default budget.
    pub fn resultant(&self, q: &MultiPoly, x: Var) -> Result<MultiPoly, PolyError> {
        self.resultant_with_budget(q, x, DEFAULT_TERM_BUDGET)
    }

    /// Resultant in `x`, aborting once any intermediate has more than
    /// `limit` terms.
    pub fn resultant_with_budget(
        &self,
        q: &MultiPoly,
        x: Var,
        limit: usize,
    ) -> Result<MultiPoly, PolyError> {
        if self.degree(x) == 0 || q.degree(x) == 0 {
            return Err(PolyError::ZeroDegree(x.to_string()));
        }
        let a = self.to_univariate(x);
        let b = q.to_univariate(x);
        subresultant(a, b, limit)
    }

    /// `lc_x(q)·p − lc_x(p)·x^(deg p − deg q)·q`, which has smaller degree in
    /// `x` than `p`.
    pub fn cancel_leading(&self, q: &MultiPoly, x: Var) -> Result<MultiPoly, PolyError> {
        if q.is_zero() || self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let dp = self.degree(x);
        let dq = q.degree(x);
        if dq > dp {
            return Err(PolyError::ZeroDegree(format!(
                "{x} (degree {dq} exceeds {dp})"
            )));
        }
        let lp = self.lc_in(x);
        let lq = q.lc_in(x);
        let shift = MultiPoly::var_pow(x, dp - dq);
        Ok(&(&lq * self) - &(&(&lp * &shift) * q))
    }
}

type Upoly = Vec<MultiPoly>;

fn udeg(p: &Upoly) -> usize {
    p.len() - 1
}

fn trim(p: &mut Upoly) {
    while p.len() > 1 && p.last().unwrap().is_zero() {
        p.pop();
    }
}

fn is_uzero(p: &Upoly) -> bool {
    p.iter().all(|c| c.is_zero())
}

fn upoly_terms(p: &Upoly) -> usize {
    p.iter().map(|c| c.len()).sum()
}

/// Full pseudo-remainder: `lc(b)^(deg a − deg b + 1) · a mod b`.
fn prem_full(a: &Upoly, b: &Upoly, limit: usize) -> Result<Upoly, PolyError> {
    let db = udeg(b);
    let delta = udeg(a) - db;
    let lcb = b.last().unwrap();
    let mut r = a.clone();
    let mut steps = 0u32;
    while !is_uzero(&r) && udeg(&r) >= db {
        let dr = udeg(&r);
        let lcr = r[dr].clone();
        let shift = dr - db;
        for (i, ri) in r.iter_mut().enumerate() {
            let mut v = lcb * &*ri;
            if i >= shift && i - shift <= db {
                v -= &(&lcr * &b[i - shift]);
            }
            *ri = v;
        }
        r.pop();
        trim(&mut r);
        steps += 1;
        let t = upoly_terms(&r);
        if t > limit {
            return Err(PolyError::BudgetExceeded { terms: t, limit });
        }
    }
    let missing = delta as u32 + 1 - steps;
    if missing > 0 {
        let f = lcb.pow(missing);
        for ri in r.iter_mut() {
            *ri = &f * &*ri;
        }
    }
    Ok(r)
}

fn subresultant(mut a: Upoly, mut b: Upoly, limit: usize) -> Result<MultiPoly, PolyError> {
    trim(&mut a);
    trim(&mut b);
    let mut sign_negative = false;
    if udeg(&a) < udeg(&b) {
        if udeg(&a) % 2 == 1 && udeg(&b) % 2 == 1 {
            sign_negative = !sign_negative;
        }
        std::mem::swap(&mut a, &mut b);
    }
    let mut g = MultiPoly::one();
    let mut h = MultiPoly::one();
    loop {
        let da = udeg(&a);
        let db = udeg(&b);
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            sign_negative = !sign_negative;
        }
        let r = prem_full(&a, &b, limit)?;
        a = b;
        if is_uzero(&r) {
            return Ok(MultiPoly::zero());
        }
        let divisor = &g * &h.pow(delta);
        let mut nb = Vec::with_capacity(r.len());
        for c in &r {
            let q = c
                .div_exact(&divisor)
                .expect("subresultant division is exact");
            check_budget(&q, limit)?;
            nb.push(q);
        }
        b = nb;
        trim(&mut b);
        g = a.last().unwrap().clone();
        h = if delta == 0 {
            h
        } else if delta == 1 {
            g.clone()
        } else {
            g.pow(delta)
                .div_exact(&h.pow(delta - 1))
                .expect("subresultant h update is exact")
        };
        if udeg(&b) == 0 {
            break;
        }
    }
    // The loop only continues while deg b > 0, so the final `a` has
    // positive degree.
    let da = udeg(&a) as u32;
    let lb = b[0].clone();
    let res = if da == 1 {
        lb
    } else {
        lb.pow(da)
            .div_exact(&h.pow(da - 1))
            .expect("final subresultant step is exact")
    };
    Ok(if sign_negative { -res } else { res })
}

/// Resultant via an explicit Sylvester determinant over rationals, used as
/// an independent oracle in tests. Fraction-free Bareiss elimination.
pub fn sylvester_resultant(p: &MultiPoly, q: &MultiPoly, x: Var) -> MultiPoly {
    let a = p.to_univariate(x);
    let b = q.to_univariate(x);
    let (m, n) = (a.len() - 1, b.len() - 1);
    let size = m + n;
    let mut mat: Vec<Vec<MultiPoly>> = vec![vec![MultiPoly::zero(); size]; size];
    for i in 0..n {
        for (j, c) in a.iter().rev().enumerate() {
            mat[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in b.iter().rev().enumerate() {
            mat[n + i][i + j] = c.clone();
        }
    }
    let mut sign = Rational::one();
    let mut prev = MultiPoly::one();
    for k in 0..size {
        if mat[k][k].is_zero() {
            let Some(swap) = (k + 1..size).find(|&i| !mat[i][k].is_zero()) else {
                return MultiPoly::zero();
            };
            mat.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let v = &(&mat[i][j] * &mat[k][k]) - &(&mat[i][k] * &mat[k][j]);
                mat[i][j] = v.div_exact(&prev).expect("Bareiss division is exact");
            }
            mat[i][k] = MultiPoly::zero();
        }
        prev = mat[k][k].clone();
    }
    mat[size - 1][size - 1].scale(&sign)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, poly};
    use num_traits::Signed;

    fn x() -> Var {
        Var::lambda(0)
    }

    #[test]
    fn pseudo_division_example() {
        let d = poly("lambda^2 + 1")
            .pseudo_divide(&poly("2*lambda + 1"), x())
            .unwrap();
        assert_eq!(d.quotient, poly("2*lambda - 1"));
        assert_eq!(d.remainder, poly("5"));
        assert_eq!(d.power, 2);
    }

    #[test]
    fn pseudo_division_exact_case() {
        let d = poly("lambda^2")
            .pseudo_divide(&poly("lambda"), x())
            .unwrap();
        assert_eq!(d.quotient, poly("lambda"));
        assert!(d.remainder.is_zero());
        assert_eq!(d.power, 1);
    }

    #[test]
    fn pseudo_division_rejects_constant_divisor() {
        assert_eq!(
            poly("lambda").pseudo_divide(&poly("T + 1"), x()),
            Err(PolyError::ZeroDegree("lambda".into()))
        );
    }

    #[test]
    fn resultant_linear_and_coprime() {
        let r = poly("lambda - T")
            .resultant(&poly("lambda - c"), x())
            .unwrap();
        assert!(r == poly("T - c") || r == poly("c - T"));
        let r = poly("lambda^2 - 2")
            .resultant(&poly("lambda - 1"), x())
            .unwrap();
        assert_eq!(r.as_constant().unwrap().abs(), int(1));
    }

    #[test]
    fn resultant_matches_sylvester_determinant() {
        let p = poly("T*lambda^3 + c*lambda^2 - R*lambda + T^2");
        let q = poly("lambda^2*c - lambda*T + 2*R - 1");
        let a = p.resultant(&q, x()).unwrap();
        let b = sylvester_resultant(&p, &q, x());
        assert_eq!(a, b);
        let a = q.resultant(&p, x()).unwrap();
        let b = sylvester_resultant(&q, &p, x());
        assert_eq!(a, b);
    }

    #[test]
    fn resultant_of_degree_gap_two() {
        let p = poly("lambda^5 + T*lambda^2 + c");
        let q = poly("R*lambda^2 + lambda + T");
        assert_eq!(
            p.resultant(&q, x()).unwrap(),
            sylvester_resultant(&p, &q, x())
        );
    }

    #[test]
    fn resultant_budget_is_enforced() {
        let p = poly("(lambda + T + c + R + lambda'1)^4");
        let q = poly("(lambda - T + c - R + T'1)^4 + lambda");
        assert!(matches!(
            p.resultant_with_budget(&q, x(), 5),
            Err(PolyError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn primitive_part_examples() {
        let t = Var::t(0);
        assert_eq!(
            poly("2*T^2 + 4*T").primitive_part(t).unwrap(),
            poly("T^2 + 2*T")
        );
        assert_eq!(
            poly("6*lambda*T - 9*lambda").primitive_part(t).unwrap(),
            poly("2*T - 3")
        );
        let p = poly("-4*lambda^2*T*c + 2*lambda*c");
        let pp = p.primitive_part(t).unwrap();
        assert_eq!(pp.primitive_part(t).unwrap(), pp);
        assert_eq!(
            MultiPoly::zero().primitive_part(t),
            Err(PolyError::ZeroPolynomial)
        );
    }

    #[test]
    fn divides_up_to_unit_examples() {
        let out = poly("lambda^2")
            .divides_up_to_unit(&poly("3*lambda^2*(R - 12*c)"))
            .unwrap();
        assert_eq!(out.cofactor(), Some(&poly("3*R - 36*c")));
        let out = poly("lambda + c")
            .divides_up_to_unit(&poly("lambda - c"))
            .unwrap();
        assert_eq!(out, DivideOutcome::No);
        assert!(MultiPoly::zero().divides_up_to_unit(&poly("1")).is_err());
    }

    #[test]
    fn cancel_leading_example() {
        assert_eq!(
            poly("lambda^2 + 1")
                .cancel_leading(&poly("lambda"), x())
                .unwrap(),
            poly("1")
        );
    }
}
