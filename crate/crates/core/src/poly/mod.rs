//! Dense polynomials over arbitrary-precision integers.
//!
//! [`QPoly`] is the ring `Z[q]`; the same type is reused for integer
//! polynomials in `x` (derivative polynomials, Fibonacci polynomials).
//! [`XQPoly`] nests one level: polynomials in an outer variable whose
//! coefficients are [`QPoly`]s.

mod parse;
mod qnum;
mod xq;

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use qnum::{gauss_binomial, int_binomial, q_bracket, q_factorial, q_multinomial, q_pochhammer};
pub use xq::XQPoly;
pub(crate) use qnum::gauss_row;

/// A polynomial in `q` with big-integer coefficients.
///
/// `coeffs[i]` is the coefficient of `q^i`. The vector never ends in a
/// zero, so the zero polynomial is the empty vector and equality is
/// structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(1)
    }

    /// The monomial `c q^d`.
    pub fn monomial(c: impl Into<BigInt>, d: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = c;
        QPoly { coeffs }
    }

    /// `q^d`.
    pub fn q_pow(d: usize) -> Self {
        QPoly::monomial(1, d)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        QPoly::monomial(c, 0)
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = QPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        QPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Multiplication by `q^d`.
    pub fn shift(&self, d: usize) -> Self {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); d];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    /// `q^d p(1/q)`. Fails when `d` is below the degree, since the result
    /// would not be a polynomial.
    pub fn reverse(&self, d: usize) -> Result<Self> {
        match self.degree() {
            None => Ok(QPoly::zero()),
            Some(deg) if deg > d => Err(Error::NotPolynomial { degree: deg, target: d }),
            Some(_) => {
                let mut coeffs = vec![BigInt::zero(); d + 1];
                for (i, c) in self.coeffs.iter().enumerate() {
                    coeffs[d - i] = c.clone();
                }
                Ok(QPoly::from_coeffs(coeffs))
            }
        }
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = QPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// True when every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl From<i64> for QPoly {
    fn from(c: i64) -> Self {
        QPoly::constant(c)
    }
}

impl From<BigInt> for QPoly {
    fn from(c: BigInt) -> Self {
        QPoly::constant(c)
    }
}

impl<'a> Add<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl<'a> Sub<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(len, BigInt::zero());
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl<'a> Mul<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($ty:ty, $tr:ident, $method:ident) => {
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a $ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &'a $ty) -> $ty {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<$ty> for &'a $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                self.$method(&rhs)
            }
        }
    };
}
pub(crate) use forward_owned_binop;

forward_owned_binop!(QPoly, Add, add);
forward_owned_binop!(QPoly, Sub, sub);
forward_owned_binop!(QPoly, Mul, mul);

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        if rhs.coeffs.len() > self.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (c, s) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *c += s;
        }
        self.normalize();
    }
}

impl AddAssign<QPoly> for QPoly {
    fn add_assign(&mut self, rhs: QPoly) {
        *self += &rhs;
    }
}

impl SubAssign<&QPoly> for QPoly {
    fn sub_assign(&mut self, rhs: &QPoly) {
        if rhs.coeffs.len() > self.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (c, s) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        self.normalize();
    }
}

impl std::iter::Sum for QPoly {
    fn sum<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl<'a> std::iter::Sum<&'a QPoly> for QPoly {
    fn sum<I: Iterator<Item = &'a QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::zero(), |mut acc, p| {
            acc += p;
            acc
        })
    }
}

impl std::iter::Product for QPoly {
    fn product<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::one(), |acc, p| &acc * &p)
    }
}

impl QPoly {
    /// Render with a chosen variable name, e.g. `1 + 2q + q^2`.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                out.push_str(&mag.to_string());
            }
            match i {
                0 => {}
                1 => out.push_str(var),
                _ => {
                    out.push_str(var);
                    out.push('^');
                    out.push_str(&i.to_string());
                }
            }
        }
        out
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("q"))
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct QPolyRepr {
    coeffs: Vec<String>,
}

impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QPolyRepr {
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = QPolyRepr::deserialize(d)?;
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        let p = QPoly::from_coeffs(coeffs);
        if p.coeffs.len() != repr.coeffs.len() {
            return Err(serde::de::Error::custom("non-canonical QPoly: trailing zero coefficient"));
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_i64s(c)
    }

    #[test]
    fn identity_and_zero_cases() {
        let a = p(&[0, 1, 1]);
        assert_eq!(&a * &QPoly::one(), a);
        assert_eq!(&a - &a, QPoly::zero());
        assert!((&a - &a).coeffs().is_empty());
    }

    #[test]
    fn shift_matches_definition() {
        assert_eq!(p(&[1, 1]).shift(2), p(&[0, 0, 1, 1]));
        assert_eq!(QPoly::zero().shift(5), QPoly::zero());
        assert_eq!(p(&[0, 2, 1]).shift(1), p(&[0, 0, 2, 1]));
    }

    #[test]
    fn reverse_mirrors_coefficients() {
        assert_eq!(p(&[0, 2, 1]).reverse(3).unwrap(), p(&[0, 1, 2]));
        // A_{3,1,0,2} = q^2 reversed in degree 3 gives A_{3,1,2,0} = q
        assert_eq!(p(&[0, 0, 1]).reverse(3).unwrap(), p(&[0, 1]));
        // A_4(q) -> A^Sec_4(q)
        assert_eq!(p(&[0, 1, 2, 1, 1]).reverse(6).unwrap(), p(&[0, 0, 1, 1, 2, 1]));
    }

    #[test]
    fn reverse_rejects_small_target() {
        let err = p(&[1, 0, 0, 1]).reverse(2).unwrap_err();
        assert!(matches!(err, Error::NotPolynomial { degree: 3, target: 2 }));
    }

    #[test]
    fn eval_at_one_sums() {
        assert_eq!(p(&[1, 2, 2, 1]).eval_at_one(), BigInt::from(6));
        assert_eq!(QPoly::zero().eval_at_one(), BigInt::zero());
        assert_eq!(p(&[0, 0, 1, 2, 3, 4, 3, 2, 1]).eval_at_one(), BigInt::from(16));
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(p(&[1, 2, 0, -1]).to_string(), "1 + 2q - q^3");
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(p(&[0, 1]).display_in("x"), "x");
    }

    #[test]
    fn json_uses_decimal_strings() {
        let big = QPoly::from_coeffs(vec![BigInt::from(1), BigInt::parse_bytes(b"123456789012345678901234567890", 10).unwrap()]);
        let s = serde_json::to_string(&big).unwrap();
        assert_eq!(s, r#"{"coeffs":["1","123456789012345678901234567890"]}"#);
        let back: QPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, big);
        assert!(serde_json::from_str::<QPoly>(r#"{"coeffs":["1","0"]}"#).is_err());
    }
}
