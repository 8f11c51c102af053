use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{forward_owned_binop, QPoly};

/// A polynomial in an outer variable (`x` or `t`) with [`QPoly`]
/// coefficients. `coeffs[i]` multiplies `x^i`; no trailing zero entries.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "XQRepr", into = "XQRepr")]
pub struct XQPoly {
    coeffs: Vec<QPoly>,
}

#[derive(Serialize, Deserialize)]
struct XQRepr {
    coeffs: Vec<QPoly>,
}

impl TryFrom<XQRepr> for XQPoly {
    type Error = String;
    fn try_from(r: XQRepr) -> Result<Self, String> {
        if r.coeffs.last().is_some_and(QPoly::is_zero) {
            return Err("non-canonical XQPoly: trailing zero coefficient".into());
        }
        Ok(XQPoly { coeffs: r.coeffs })
    }
}

impl From<XQPoly> for XQRepr {
    fn from(p: XQPoly) -> Self {
        XQRepr { coeffs: p.coeffs }
    }
}

impl XQPoly {
    pub fn zero() -> Self {
        XQPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        XQPoly::constant(QPoly::one())
    }

    /// Embeds a polynomial in `q` as a constant in the outer variable.
    pub fn constant(p: QPoly) -> Self {
        XQPoly::from_coeffs(vec![p])
    }

    /// `p * x^d`.
    pub fn monomial(p: QPoly, d: usize) -> Self {
        let mut coeffs = vec![QPoly::zero(); d];
        coeffs.push(p);
        XQPoly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(coeffs: Vec<QPoly>) -> Self {
        let mut p = XQPoly { coeffs };
        while p.coeffs.last().is_some_and(QPoly::is_zero) {
            p.coeffs.pop();
        }
        p
    }

    pub fn coeffs(&self) -> &[QPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> QPoly {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Multiplies every inner coefficient by `q^d`.
    pub fn shift_q(&self, d: usize) -> Self {
        XQPoly {
            coeffs: self.coeffs.iter().map(|c| c.shift(d)).collect(),
        }
    }

    pub fn scale_q(&self, p: &QPoly) -> Self {
        XQPoly::from_coeffs(self.coeffs.iter().map(|c| c * p).collect())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        XQPoly::from_coeffs(self.coeffs.iter().map(|p| p.scale(c)).collect())
    }

    /// Sets the outer variable to zero.
    pub fn at_outer_zero(&self) -> QPoly {
        self.coeff(0)
    }

    /// Sets the outer variable to one.
    pub fn at_outer_one(&self) -> QPoly {
        self.coeffs.iter().sum()
    }

    /// Sets both variables to one.
    pub fn eval_at_one(&self) -> BigInt {
        self.at_outer_one().eval_at_one()
    }

    pub fn display_in(&self, outer: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let inner = c.to_string();
            let var = match i {
                0 => String::new(),
                1 => outer.to_string(),
                _ => format!("{outer}^{i}"),
            };
            parts.push(match (i, c.is_one()) {
                (0, _) => inner,
                (_, true) => var,
                _ => format!("{var}({inner})"),
            });
        }
        parts.join(" + ")
    }
}

impl<'a> Add<&'a XQPoly> for &'a XQPoly {
    type Output = XQPoly;
    fn add(self, rhs: &XQPoly) -> XQPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        XQPoly::from_coeffs((0..len).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a XQPoly> for &'a XQPoly {
    type Output = XQPoly;
    fn sub(self, rhs: &XQPoly) -> XQPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        XQPoly::from_coeffs((0..len).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a XQPoly> for &'a XQPoly {
    type Output = XQPoly;
    fn mul(self, rhs: &XQPoly) -> XQPoly {
        if self.is_zero() || rhs.is_zero() {
            return XQPoly::zero();
        }
        let mut coeffs = vec![QPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        XQPoly::from_coeffs(coeffs)
    }
}

impl Neg for &XQPoly {
    type Output = XQPoly;
    fn neg(self) -> XQPoly {
        XQPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

forward_owned_binop!(XQPoly, Add, add);
forward_owned_binop!(XQPoly, Sub, sub);
forward_owned_binop!(XQPoly, Mul, mul);

impl AddAssign<&XQPoly> for XQPoly {
    fn add_assign(&mut self, rhs: &XQPoly) {
        *self = &*self + rhs;
    }
}

impl fmt::Display for XQPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl fmt::Debug for XQPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XQPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_canonical_zero() {
        let x = XQPoly::monomial(QPoly::one(), 1);
        let a = &XQPoly::one() + &x.scale_q(&QPoly::q_pow(1));
        let sq = &a * &a;
        assert_eq!(sq.coeff(1), QPoly::from_i64s(&[0, 2]));
        assert_eq!(sq.coeff(2), QPoly::from_i64s(&[0, 0, 1]));
        assert!((&sq - &sq).coeffs().is_empty());
        assert_eq!(sq.eval_at_one(), BigInt::from(4));
    }

    #[test]
    fn json_nests_qpoly() {
        let p = XQPoly::from_coeffs(vec![QPoly::zero(), QPoly::from_i64s(&[1, 2])]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"coeffs":[{"coeffs":[]},{"coeffs":["1","2"]}]}"#);
        assert_eq!(serde_json::from_str::<XQPoly>(&s).unwrap(), p);
        assert!(serde_json::from_str::<XQPoly>(r#"{"coeffs":[{"coeffs":[]}]}"#).is_err());
    }
}
