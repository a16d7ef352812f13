use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Base symbols that carry derivative structure.
///
/// The declaration order is the variable order used by the monomial
/// ordering: earlier bases are more significant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Base {
    Lambda,
    T,
    Alpha,
    Beta,
    Mu,
    Lambda2,
    Lambda3,
    Lambda4,
    K,
    H1,
    Omega2,
    Omega3,
    Omega4,
}

impl Base {
    pub const ALL: [Base; 13] = [
        Base::Lambda,
        Base::T,
        Base::Alpha,
        Base::Beta,
        Base::Mu,
        Base::Lambda2,
        Base::Lambda3,
        Base::Lambda4,
        Base::K,
        Base::H1,
        Base::Omega2,
        Base::Omega3,
        Base::Omega4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Base::Lambda => "lambda",
            Base::T => "T",
            Base::Alpha => "alpha",
            Base::Beta => "beta",
            Base::Mu => "mu",
            Base::Lambda2 => "lambda2",
            Base::Lambda3 => "lambda3",
            Base::Lambda4 => "lambda4",
            Base::K => "K",
            Base::H1 => "h1",
            Base::Omega2 => "omega2",
            Base::Omega3 => "omega3",
            Base::Omega4 => "omega4",
        }
    }

    pub fn from_name(s: &str) -> Option<Base> {
        Base::ALL.iter().copied().find(|b| b.name() == s)
    }
}

/// Constant parameters: scalar curvature, ambient curvature, dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Param {
    R,
    C,
    N,
}

impl Param {
    pub fn name(self) -> &'static str {
        match self {
            Param::R => "R",
            Param::C => "c",
            Param::N => "n",
        }
    }
}

/// A base symbol together with a derivative order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DiffVar {
    pub base: Base,
    pub order: u32,
}

impl DiffVar {
    pub fn new(base: Base, order: u32) -> Self {
        DiffVar { base, order }
    }

    pub fn prolong(self) -> Self {
        DiffVar {
            base: self.base,
            order: self.order + 1,
        }
    }
}

/// A polynomial indeterminate.
///
/// `PowerSum(k)` is the abstract symbol f_k and `Root(i)` the indeterminate
/// w_i of the symmetric-function identities; neither has derivative
/// structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    Diff(DiffVar),
    PowerSum(u32),
    Root(u32),
    Param(Param),
}

impl Var {
    pub fn diff(base: Base, order: u32) -> Var {
        Var::Diff(DiffVar::new(base, order))
    }

    pub fn lambda(order: u32) -> Var {
        Var::diff(Base::Lambda, order)
    }

    pub fn t(order: u32) -> Var {
        Var::diff(Base::T, order)
    }

    pub const R: Var = Var::Param(Param::R);
    pub const C: Var = Var::Param(Param::C);
    pub const N: Var = Var::Param(Param::N);

    // Ascending key order == descending significance.
    fn key(&self) -> (u8, u8, i64) {
        match *self {
            Var::Diff(d) => (0, d.base as u8, -(d.order as i64)),
            Var::PowerSum(k) => (1, 0, -(k as i64)),
            Var::Root(i) => (2, 0, i as i64),
            Var::Param(p) => (3, p as u8, 0),
        }
    }

    pub fn is_param(&self) -> bool {
        matches!(self, Var::Param(_))
    }

    pub fn as_diff(&self) -> Option<DiffVar> {
        match self {
            Var::Diff(d) => Some(*d),
            _ => None,
        }
    }

    /// Parses a single variable name such as `lambda'3`, `T''`, `f2`, `R`.
    pub fn parse(s: &str) -> Option<Var> {
        let (head, order) = match s.find('\'') {
            Some(pos) => {
                let tail = &s[pos..];
                let order = if tail.chars().all(|ch| ch == '\'') {
                    tail.len() as u32
                } else {
                    tail[1..].parse::<u32>().ok()?
                };
                (&s[..pos], Some(order))
            }
            None => (s, None),
        };
        if let Some(b) = Base::from_name(head) {
            return Some(Var::diff(b, order.unwrap_or(0)));
        }
        if order.is_some() {
            return None;
        }
        match head {
            "R" => return Some(Var::R),
            "c" => return Some(Var::C),
            "n" => return Some(Var::N),
            _ => {}
        }
        let digits = |prefix: char| -> Option<u32> {
            let rest = head.strip_prefix(prefix)?;
            if rest.is_empty() || !rest.chars().all(|ch| ch.is_ascii_digit()) {
                return None;
            }
            rest.parse().ok()
        };
        if let Some(k) = digits('f') {
            return Some(Var::PowerSum(k));
        }
        if let Some(i) = digits('w') {
            return Some(Var::Root(i));
        }
        None
    }
}

impl Ord for Var {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Var {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Diff(d) if d.order == 0 => write!(f, "{}", d.base.name()),
            Var::Diff(d) => write!(f, "{}'{}", d.base.name(), d.order),
            Var::PowerSum(k) => write!(f, "f{k}"),
            Var::Root(i) => write!(f, "w{i}"),
            Var::Param(p) => write!(f, "{}", p.name()),
        }
    }
}

impl Serialize for Var {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Var {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Var::parse(&s).ok_or_else(|| serde::de::Error::custom(format!("unknown variable `{s}`")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for v in [
            Var::lambda(0),
            Var::lambda(3),
            Var::t(1),
            Var::diff(Base::Lambda2, 2),
            Var::diff(Base::H1, 0),
            Var::PowerSum(4),
            Var::Root(2),
            Var::R,
            Var::C,
            Var::N,
        ] {
            assert_eq!(Var::parse(&v.to_string()), Some(v));
        }
    }

    #[test]
    fn prime_notation() {
        assert_eq!(Var::parse("lambda''''"), Some(Var::lambda(4)));
        assert_eq!(Var::parse("T'"), Some(Var::t(1)));
        assert_eq!(Var::parse("R'"), None);
        assert_eq!(Var::parse("x"), None);
    }

    #[test]
    fn higher_derivative_is_more_significant() {
        assert!(Var::lambda(2) < Var::lambda(1));
        assert!(Var::lambda(7) < Var::t(0));
        assert!(Var::diff(Base::H1, 0) < Var::R);
        assert!(Var::R < Var::C && Var::C < Var::N);
    }
}
