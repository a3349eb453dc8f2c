//! Text grammar for polynomials.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary ('*' unary)*
//! unary := ('-' | '+') unary | power
//! power := atom ('^' natural)?
//! atom  := natural | 'u' | 'v' | 'L' | 's1'..'s9' | '(' expr ')'
//! ```
//!
//! `L` is shorthand for `u*v`. Whitespace is ignored.

use std::str::FromStr;

use super::coeff::ExactInt;
use super::monomial::{Monomial, Var, MARKERS};
use super::poly::BiPoly;
use crate::error::Error;

impl FromStr for BiPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut p = Parser { src: s.as_bytes(), pos: 0 };
        let value = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(value)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse { offset: self.pos, message: message.to_owned() }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<BiPoly, Error> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<BiPoly, Error> {
        let mut acc = self.unary()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc * self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<BiPoly, Error> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<BiPoly, Error> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        match self.peek() {
            Some(b'-') => Err(self.error("negative exponents are not supported")),
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits();
                let e: u32 = digits.parse().map_err(|_| self.error("exponent too large"))?;
                Ok(base.pow(e))
            }
            _ => Err(self.error("expected a non-negative integer exponent")),
        }
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<BiPoly, Error> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits();
                let n: ExactInt = digits.parse().map_err(|_| self.error("bad integer"))?;
                Ok(BiPoly::constant(n))
            }
            Some(b'u') => {
                self.pos += 1;
                Ok(BiPoly::var(Var::U))
            }
            Some(b'v') => {
                self.pos += 1;
                Ok(BiPoly::var(Var::V))
            }
            Some(b'L') => {
                self.pos += 1;
                Ok(BiPoly::lefschetz())
            }
            Some(b's') => {
                self.pos += 1;
                match self.src.get(self.pos) {
                    Some(d @ b'1'..=b'9') => {
                        let i = usize::from(d - b'0');
                        debug_assert!(i <= MARKERS);
                        self.pos += 1;
                        Ok(BiPoly::monomial(Monomial::var(Var::S(i), 1)))
                    }
                    _ => Err(self.error("expected marker index 1-9 after 's'")),
                }
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_curve_class() {
        let c: BiPoly = "1-2*u-2*v+u*v".parse().unwrap();
        assert_eq!(c.to_string(), "1 - 2*u - 2*v + u*v");
    }

    #[test]
    fn lefschetz_alias() {
        let a: BiPoly = "L^2 + 1".parse().unwrap();
        let b: BiPoly = "u^2*v^2 + 1".parse().unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn precedence() {
        let a: BiPoly = "-u^2".parse().unwrap();
        assert_eq!(a.to_string(), "-u^2");
        let b: BiPoly = "2*(u+1)^2 - 3".parse().unwrap();
        assert_eq!(b.to_string(), "-1 + 4*u + 2*u^2");
        let c: BiPoly = " ( s1 * s3 ) ^ 2 ".parse().unwrap();
        assert_eq!(c.to_string(), "s1^2*s3^2");
    }

    #[test]
    fn big_literals_are_exact() {
        let a: BiPoly = "123456789012345678901234567890 * u".parse().unwrap();
        assert_eq!(a.to_string(), "123456789012345678901234567890*u");
    }

    #[test]
    fn rejects_bad_input() {
        for bad in ["u^-1", "u^", "s0", "s", "x", "(u", "u +", "1 2", ""] {
            assert!(bad.parse::<BiPoly>().is_err(), "accepted {bad:?}");
        }
    }
}
