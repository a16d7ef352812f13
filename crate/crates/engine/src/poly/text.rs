//! Canonical text form and a small expression parser.
//!
//! Output lists terms from the leading monomial down, coefficients as
//! `num/den`, and variables as `lambda'3`. The parser accepts that form plus
//! parentheses, `^`, division by constants, implicit multiplication and
//! prime notation (`lambda''`), which is convenient for transcribed fixtures.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{MultiPoly, PolyError, Rational, Var};

fn write_rational(f: &mut fmt::Formatter<'_>, r: &Rational) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write_rational(f, &abs)?;
            } else {
                if !abs.is_one() {
                    write_rational(f, &abs)?;
                    write!(f, "*")?;
                }
                write!(f, "{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for MultiPoly {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser {
            src: s.as_bytes(),
            pos: 0,
        };
        let out = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(out)
    }
}

impl serde::Serialize for MultiPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for MultiPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = <String as serde::Deserialize>::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Canonical `num/den` text of a rational.
pub fn rational_text(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `a`, `-a`, or `a/b` with integer `a`, `b`.
pub fn parse_rational(s: &str) -> Result<Rational, PolyError> {
    let p: MultiPoly = s.parse()?;
    p.as_constant().ok_or(PolyError::Parse {
        pos: 0,
        msg: format!("`{s}` is not a rational constant"),
    })
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> PolyError {
        PolyError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc += &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc -= &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.power()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.power()?;
                    let d = d
                        .as_constant()
                        .filter(|r| !r.is_zero())
                        .ok_or(PolyError::Parse {
                            pos: at,
                            msg: "division is only allowed by a nonzero constant".into(),
                        })?;
                    acc = acc.scale(&d.recip());
                }
                Some(ch) if ch == b'(' || ch.is_ascii_alphanumeric() => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<MultiPoly, PolyError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
            let e: u32 = digits
                .parse()
                .map_err(|_| self.error("expected exponent"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly, PolyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.power()?)
            }
            Some(ch) if ch.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let n: BigInt = digits.parse().map_err(|_| self.error("bad integer"))?;
                Ok(MultiPoly::constant(Rational::from_integer(n)))
            }
            Some(ch) if ch.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                if self.pos < self.src.len() && self.src[self.pos] == b'\'' {
                    let quotes = self.pos;
                    while self.pos < self.src.len() && self.src[self.pos] == b'\'' {
                        self.pos += 1;
                    }
                    if self.pos - quotes == 1 {
                        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                            self.pos += 1;
                        }
                    }
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let v = Var::parse(name).ok_or_else(|| PolyError::Parse {
                    pos: start,
                    msg: format!("unknown symbol `{name}`"),
                })?;
                Ok(MultiPoly::var(v))
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, poly, rat};

    #[test]
    fn canonical_form_is_ordered_and_round_trips() {
        let p = poly("12*lambda*lambda'1 + T'2 - 3*T*T'1 + T^3 + (4*c - 11*lambda^2)*T");
        let s = p.to_string();
        assert_eq!(
            s,
            "-11*lambda^2*T + T^3 + 12*lambda'1*lambda - 3*T'1*T + 4*T*c + T'2"
        );
        assert_eq!(poly(&s), p);
    }

    #[test]
    fn rational_coefficients_print_as_fraction() {
        assert_eq!(poly("1/2*T'2 - c/3").to_string(), "1/2*T'2 - 1/3*c");
        assert_eq!(poly("0").to_string(), "0");
        assert_eq!(poly("-7").to_string(), "-7");
    }

    #[test]
    fn implicit_multiplication_and_primes() {
        assert_eq!(
            poly("10368 lambda^4 lambda''''"),
            poly("10368*lambda^4*lambda'4")
        );
        assert_eq!(
            poly("2(R - 12c)lambda^2"),
            poly("2*R*lambda^2 - 24*c*lambda^2")
        );
    }

    #[test]
    fn rejects_bad_input() {
        assert!("lambda +".parse::<MultiPoly>().is_err());
        assert!("x + 1".parse::<MultiPoly>().is_err());
        assert!("T/lambda".parse::<MultiPoly>().is_err());
        assert!("(T".parse::<MultiPoly>().is_err());
    }

    #[test]
    fn rational_literals() {
        assert_eq!(parse_rational("-3/4").unwrap(), rat(-3, 4));
        assert_eq!(parse_rational("5").unwrap(), int(5));
        assert!(parse_rational("lambda").is_err());
    }
}
