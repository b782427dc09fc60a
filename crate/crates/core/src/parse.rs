//! Polynomial text parser.
//!
//! ```text
//! expr     := ['+'|'-'] term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := atom ('^' nat)?
//! atom     := rational | var | '(' expr ')'
//! rational := int ('/' nat)?
//! ```
//! A leading sign is accepted so that printed polynomials parse back.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Q};
use crate::ring::PolyRing;

pub fn parse_poly(text: &str, ring: &Arc<PolyRing>) -> Result<Polynomial> {
    let mut p = Parser { s: text.as_bytes(), pos: 0, ring };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.s.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

/// Parses a list of polynomial strings.
pub fn parse_polys<S: AsRef<str>>(texts: &[S], ring: &Arc<PolyRing>) -> Result<Vec<Polynomial>> {
    texts.iter().map(|t| parse_poly(t.as_ref(), ring)).collect()
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    ring: &'a Arc<PolyRing>,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut neg = false;
        match self.peek() {
            Some(b'-') => {
                neg = true;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        let mut acc = self.term()?;
        if neg {
            acc = -acc;
        }
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

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc * self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let a = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let n = self.nat()?;
            let e: u32 = n.try_into().map_err(|_| self.err("exponent too large"))?;
            return Ok(a.pow(e));
        }
        Ok(a)
    }

    fn nat(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a natural number"));
        }
        let digits = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse"))
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.nat()?;
                let mut d = BigInt::from(1);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    d = self.nat()?;
                    if d == BigInt::from(0) {
                        return Err(self.err("zero denominator"));
                    }
                }
                Ok(Polynomial::constant(self.ring, Q::new(n, d)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii name");
                match self.ring.vars().iter().position(|v| v == name) {
                    Some(i) => Ok(Polynomial::var(self.ring, i)),
                    None => Err(Error::UnknownVariable(name.to_string())),
                }
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let r = PolyRing::grevlex(&["u", "v", "w"]);
        let f = parse_poly("u^2 - v^2*w", &r).unwrap();
        assert_eq!(f.len(), 2);
        assert!(parse_poly("0", &r).unwrap().is_zero());
        let xy = PolyRing::grevlex(&["x", "y"]);
        let p = parse_poly("(x+y)^2 - x^2 - 2*x*y", &xy).unwrap();
        assert_eq!(p, parse_poly("y^2", &xy).unwrap());
        assert_eq!(parse_poly("3/6*x", &xy).unwrap().to_string(), "1/2*x");
    }

    #[test]
    fn errors() {
        let r = PolyRing::grevlex(&["x", "y"]);
        assert_eq!(parse_poly("x + z", &r), Err(Error::UnknownVariable("z".into())));
        match parse_poly("x + * y", &r) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_poly("(x", &r), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("x y", &r), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("1/0", &r), Err(Error::Parse { .. })));
    }
}
