//! A small reader for polynomial literals such as `2q+4q^2+2q^3` or
//! `(1+q)(1+q+q^2)`, used for fixtures and on the command line.

use std::str::FromStr;

use num_bigint::BigInt;

use super::QPoly;
use crate::error::Error;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    var: u8,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn fail(&self, what: &str) -> Error {
        Error::Parse(format!(
            "{what} at byte {} of {:?}",
            self.pos,
            String::from_utf8_lossy(self.src)
        ))
    }

    fn number(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| {
            std::str::from_utf8(&self.src[start..self.pos])
                .expect("ascii digits")
                .parse()
                .expect("digits parse")
        })
    }

    fn expr(&mut self) -> Result<QPoly, Error> {
        let mut acc = QPoly::zero();
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            if sign < 0 {
                acc -= &t;
            } else {
                acc += &t;
            }
            match self.peek() {
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<QPoly, Error> {
        let coef = self.number();
        let mut acc = QPoly::constant(coef.clone().unwrap_or_else(|| BigInt::from(1)));
        let mut factors = 0;
        loop {
            match self.peek() {
                Some(b'(') => {
                    self.pos += 1;
                    let inner = self.expr()?;
                    if self.peek() != Some(b')') {
                        return Err(self.fail("expected ')'"));
                    }
                    self.pos += 1;
                    acc = &acc * &inner;
                }
                Some(c) if c == self.var => {
                    self.pos += 1;
                    let mut exp = 1usize;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        let e = self.number().ok_or_else(|| self.fail("expected exponent"))?;
                        exp = e.try_into().map_err(|_| self.fail("exponent too large"))?;
                    }
                    acc = acc.shift(exp);
                }
                _ => break,
            }
            factors += 1;
        }
        if coef.is_none() && factors == 0 {
            return Err(self.fail("expected a term"));
        }
        Ok(acc)
    }
}

impl QPoly {
    /// Parses a polynomial literal in the given variable.
    pub fn parse_in(s: &str, var: char) -> Result<QPoly, Error> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if !var.is_ascii() {
            return Err(Error::Parse(format!("variable {var:?} must be ASCII")));
        }
        let mut p = Parser {
            src: cleaned.as_bytes(),
            pos: 0,
            var: var as u8,
        };
        let out = p.expr()?;
        if p.pos != p.src.len() {
            return Err(p.fail("trailing input"));
        }
        Ok(out)
    }
}

impl FromStr for QPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        QPoly::parse_in(s, 'q')
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_sums_and_products() {
        let p: QPoly = "2q+4q^2+2q^3".parse().unwrap();
        assert_eq!(p, QPoly::from_i64s(&[0, 2, 4, 2]));
        let p: QPoly = "(1+q)(1+q+q^2)".parse().unwrap();
        assert_eq!(p, QPoly::from_i64s(&[1, 2, 2, 1]));
        let p: QPoly = "1 - q^2".parse().unwrap();
        assert_eq!(p, QPoly::from_i64s(&[1, 0, -1]));
        let p: QPoly = "3(q+q^3)".parse().unwrap();
        assert_eq!(p, QPoly::from_i64s(&[0, 3, 0, 3]));
        assert_eq!("0".parse::<QPoly>().unwrap(), QPoly::zero());
    }

    #[test]
    fn rejects_garbage() {
        assert!("q+".parse::<QPoly>().is_err());
        assert!("(1+q".parse::<QPoly>().is_err());
        assert!("1+x".parse::<QPoly>().is_err());
        assert!(QPoly::parse_in("1+x", 'x').is_ok());
    }
}
