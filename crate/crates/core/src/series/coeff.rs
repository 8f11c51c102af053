use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::poly::{QPoly, XQPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingTag {
    Int,
    Q,
    XQ,
}

impl RingTag {
    pub fn name(self) -> &'static str {
        match self {
            RingTag::Int => "int",
            RingTag::Q => "q",
            RingTag::XQ => "xq",
        }
    }
}

/// A coefficient ring for [`super::DividedSeries`].
///
/// `scale_q` and `shift_q` are only called in q-mode, which the series
/// constructor refuses for the integer ring.
pub trait Coeff: Clone + PartialEq + Send + Sync + Sized {
    const TAG: RingTag;
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale_int(&self, c: &BigInt) -> Self;
    fn scale_q(&self, p: &QPoly) -> Self;
    fn shift_q(&self, d: usize) -> Self;
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
}

impl Coeff for BigInt {
    const TAG: RingTag = RingTag::Int;
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale_int(&self, c: &BigInt) -> Self {
        self * c
    }
    fn scale_q(&self, _: &QPoly) -> Self {
        unreachable!("q-mode series over the integer ring are rejected at construction")
    }
    fn shift_q(&self, _: usize) -> Self {
        unreachable!("q-mode series over the integer ring are rejected at construction")
    }
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
    fn from_json(v: &Value) -> Result<Self> {
        v.as_str()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Invalid(format!("expected a decimal integer string, got {v}")))
    }
}

impl Coeff for QPoly {
    const TAG: RingTag = RingTag::Q;
    fn zero() -> Self {
        QPoly::zero()
    }
    fn one() -> Self {
        QPoly::one()
    }
    fn is_zero(&self) -> bool {
        QPoly::is_zero(self)
    }
    fn is_one(&self) -> bool {
        QPoly::is_one(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale_int(&self, c: &BigInt) -> Self {
        self.scale(c)
    }
    fn scale_q(&self, p: &QPoly) -> Self {
        self * p
    }
    fn shift_q(&self, d: usize) -> Self {
        self.shift(d)
    }
    fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("QPoly serializes")
    }
    fn from_json(v: &Value) -> Result<Self> {
        serde_json::from_value(v.clone()).map_err(|e| Error::Invalid(e.to_string()))
    }
}

impl Coeff for XQPoly {
    const TAG: RingTag = RingTag::XQ;
    fn zero() -> Self {
        XQPoly::zero()
    }
    fn one() -> Self {
        XQPoly::one()
    }
    fn is_zero(&self) -> bool {
        XQPoly::is_zero(self)
    }
    fn is_one(&self) -> bool {
        *self == XQPoly::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale_int(&self, c: &BigInt) -> Self {
        self.scale(c)
    }
    fn scale_q(&self, p: &QPoly) -> Self {
        XQPoly::scale_q(self, p)
    }
    fn shift_q(&self, d: usize) -> Self {
        XQPoly::shift_q(self, d)
    }
    fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("XQPoly serializes")
    }
    fn from_json(v: &Value) -> Result<Self> {
        serde_json::from_value(v.clone()).map_err(|e| Error::Invalid(e.to_string()))
    }
}
