//! Truncated divided-power series `f(u) = Σ f_n u^n / w_n`, where the
//! weights are `w_n = (q;q)_n` in q-mode and `w_n = n!` in classical mode.
//!
//! Only the numerators `f_n` are stored. Multiplication is a convolution
//! weighted by Gaussian (resp. ordinary) binomials, and `D_q` is a shift.

mod coeff;
mod qtan;
mod trig;

use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::poly::{gauss_row, int_binomial, QPoly, XQPoly};

pub use coeff::{Coeff, RingTag};
pub use qtan::{
    q_secant_big_by_recurrence, q_tangent_by_combined_recurrence,
    q_tangent_by_recurrence, QTanCoeffs,
};
pub use trig::{
    cap_cos_q, cap_e_q, cap_sec_q, cap_sin_q, classical_cos, classical_sec, classical_sin,
    classical_tan, cos_q, e_q, sec_q, sin_q, tan_product, tan_q, QSeries, TrigCache,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Weights `(q;q)_n`.
    Q,
    /// Weights `n!`.
    Classical,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Q => "q",
            Mode::Classical => "classical",
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct DividedSeries<R> {
    mode: Mode,
    coeffs: Vec<R>,
}

impl<R: Coeff> DividedSeries<R> {
    /// Builds a series of order `coeffs.len() - 1`.
    pub fn new(mode: Mode, coeffs: Vec<R>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Usage("a series needs at least one coefficient".into()));
        }
        if mode == Mode::Q && R::TAG == RingTag::Int {
            return Err(Error::UnsupportedMode("q over the integer ring"));
        }
        Ok(DividedSeries { mode, coeffs })
    }

    /// Builds a series from a coefficient function `n -> f_n`.
    pub fn from_fn(mode: Mode, order: usize, f: impl FnMut(usize) -> R) -> Result<Self> {
        DividedSeries::new(mode, (0..=order).map(f).collect())
    }

    pub fn constant(mode: Mode, order: usize, c: R) -> Result<Self> {
        let mut c = Some(c);
        DividedSeries::from_fn(mode, order, |n| {
            if n == 0 {
                c.take().expect("taken once")
            } else {
                R::zero()
            }
        })
    }

    pub fn one(mode: Mode, order: usize) -> Result<Self> {
        DividedSeries::constant(mode, order, R::one())
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// `f_n`; panics if `n` exceeds the order.
    pub fn coeff(&self, n: usize) -> &R {
        &self.coeffs[n]
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        DividedSeries {
            mode: self.mode,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.mode != other.mode {
            return Err(Error::Usage(format!(
                "series mode mismatch: {} vs {}",
                self.mode.name(),
                other.mode.name()
            )));
        }
        Ok(())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&R, &R) -> R) -> Result<Self> {
        self.check_compatible(other)?;
        let order = self.order().min(other.order());
        Ok(DividedSeries {
            mode: self.mode,
            coeffs: (0..=order).map(|n| f(&self.coeffs[n], &other.coeffs[n])).collect(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, R::add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, R::sub)
    }

    pub fn neg(&self) -> Self {
        DividedSeries {
            mode: self.mode,
            coeffs: self.coeffs.iter().map(R::neg).collect(),
        }
    }

    /// `Σ_k W(n,k) a_k b_{n-k}` for one output index.
    fn convolve_at(mode: Mode, n: usize, a: &[R], b: &[R], skip_first: bool) -> R {
        let mut acc = R::zero();
        let start = usize::from(skip_first);
        match mode {
            Mode::Q => {
                let row = gauss_row(n);
                for k in start..=n {
                    if a[k].is_zero() || b[n - k].is_zero() {
                        continue;
                    }
                    acc = acc.add(&a[k].mul(&b[n - k]).scale_q(&row[k]));
                }
            }
            Mode::Classical => {
                for k in start..=n {
                    if a[k].is_zero() || b[n - k].is_zero() {
                        continue;
                    }
                    let w = int_binomial(n, k).expect("k <= n");
                    acc = acc.add(&a[k].mul(&b[n - k]).scale_int(&w));
                }
            }
        }
        acc
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let order = self.order().min(other.order());
        Ok(DividedSeries {
            mode: self.mode,
            coeffs: (0..=order)
                .map(|n| Self::convolve_at(self.mode, n, &self.coeffs, &other.coeffs, false))
                .collect(),
        })
    }

    /// `f^e`, with `f^0` the unit series of the same order.
    pub fn pow(&self, e: usize) -> Self {
        let mut acc = DividedSeries::one(self.mode, self.order()).expect("mode already valid");
        for _ in 0..e {
            acc = acc.mul(self).expect("same mode");
        }
        acc
    }

    /// The multiplicative inverse, for series with constant term 1.
    pub fn invert(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NotInvertible);
        }
        let mut g: Vec<R> = Vec::with_capacity(self.coeffs.len());
        g.push(R::one());
        for n in 1..=self.order() {
            let s = Self::convolve_at(self.mode, n, &self.coeffs, &g, true);
            g.push(s.neg());
        }
        Ok(DividedSeries {
            mode: self.mode,
            coeffs: g,
        })
    }

    /// `f(q^k u)`: multiplies `f_n` by `q^{kn}`.
    pub fn scale_arg(&self, k: usize) -> Result<Self> {
        if self.mode != Mode::Q {
            return Err(Error::UnsupportedMode("classical"));
        }
        Ok(DividedSeries {
            mode: self.mode,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c.shift_q(k * n))
                .collect(),
        })
    }

    /// `D_q f`, which lowers the order by one.
    pub fn d_q(&self) -> Result<Self> {
        if self.mode != Mode::Q {
            return Err(Error::UnsupportedMode("classical"));
        }
        if self.order() == 0 {
            return Err(Error::EmptyResult);
        }
        Ok(DividedSeries {
            mode: self.mode,
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// Applies `d_q` `times` times.
    pub fn d_q_iter(&self, times: usize) -> Result<Self> {
        let mut f = self.clone();
        for _ in 0..times {
            f = f.d_q()?;
        }
        Ok(f)
    }

    pub fn map<S: Coeff>(&self, f: impl Fn(&R) -> S) -> Result<DividedSeries<S>> {
        DividedSeries::new(self.mode, self.coeffs.iter().map(f).collect())
    }

    /// Multiplies every coefficient by a constant of the ring.
    pub fn scale(&self, c: &R) -> Self {
        DividedSeries {
            mode: self.mode,
            coeffs: self.coeffs.iter().map(|f| f.mul(c)).collect(),
        }
    }

    /// First index at which the two series differ, comparing up to the
    /// smaller order.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let order = self.order().min(other.order());
        (0..=order).find(|&n| self.coeffs[n] != other.coeffs[n])
    }

    pub fn to_json(&self) -> Value {
        json!({
            "mode": self.mode.name(),
            "order": self.order(),
            "ring": R::TAG.name(),
            "coeffs": self.coeffs.iter().map(Coeff::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Invalid(format!("series JSON: {what}"));
        let mode = match v.get("mode").and_then(Value::as_str) {
            Some("q") => Mode::Q,
            Some("classical") => Mode::Classical,
            _ => return Err(bad("mode must be \"q\" or \"classical\"")),
        };
        if v.get("ring").and_then(Value::as_str) != Some(R::TAG.name()) {
            return Err(bad(&format!("ring must be {:?}", R::TAG.name())));
        }
        let coeffs = v
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing coeffs"))?
            .iter()
            .map(R::from_json)
            .collect::<Result<Vec<R>>>()?;
        let order = v.get("order").and_then(Value::as_u64);
        if order.map(|o| o as usize + 1) != Some(coeffs.len()) {
            return Err(bad("order does not match coefficient count"));
        }
        DividedSeries::new(mode, coeffs)
    }
}

impl DividedSeries<QPoly> {
    /// Embeds a q-series into the two-variable ring as constants in `x`.
    pub fn promote(&self) -> DividedSeries<XQPoly> {
        DividedSeries {
            mode: self.mode,
            coeffs: self.coeffs.iter().cloned().map(XQPoly::constant).collect(),
        }
    }
}

impl<R: Coeff + fmt::Display> fmt::Debug for DividedSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DividedSeries[{}](", self.mode.name())?;
        for (n, c) in self.coeffs.iter().enumerate() {
            if n > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_i64s(c)
    }

    #[test]
    fn q_mode_rejects_integer_ring() {
        let r = DividedSeries::new(Mode::Q, vec![BigInt::from(1)]);
        assert!(matches!(r, Err(Error::UnsupportedMode(_))));
    }

    #[test]
    fn unit_is_multiplicative_identity() {
        let f = tan_q(6);
        let one = DividedSeries::one(Mode::Q, 6).unwrap();
        assert_eq!(f.mul(&one).unwrap(), f);
        assert_eq!(one.invert().unwrap(), one);
    }

    #[test]
    fn product_truncates_to_smaller_order() {
        let f = e_q(4);
        let g = e_q(7);
        assert_eq!(f.mul(&g).unwrap().order(), 4);
    }

    #[test]
    fn sin_times_sec_gives_tangent_coefficient() {
        let f = sin_q(5).mul(&sec_q(5)).unwrap();
        assert_eq!(f.coeff(3), &p(&[0, 1, 1]));
    }

    #[test]
    fn mode_mismatch_is_usage_error() {
        let a = DividedSeries::one(Mode::Q, 3).unwrap();
        let b = DividedSeries::<QPoly>::one(Mode::Classical, 3).unwrap();
        assert!(matches!(a.mul(&b), Err(Error::Usage(_))));
    }

    #[test]
    fn invert_requires_unit_constant() {
        let f = DividedSeries::constant(Mode::Q, 3, p(&[2])).unwrap();
        assert_eq!(f.invert(), Err(Error::NotInvertible));
    }

    #[test]
    fn scale_arg_and_dq() {
        let f = e_q(5).scale_arg(1).unwrap();
        for n in 0..=5 {
            assert_eq!(f.coeff(n), &QPoly::q_pow(n));
        }
        assert_eq!(tan_q(5).scale_arg(0).unwrap(), tan_q(5));
        assert_eq!(tan_q(5).scale_arg(1).unwrap().coeff(3), &p(&[0, 0, 0, 0, 1, 1]));
        assert_eq!(e_q(5).d_q().unwrap(), e_q(4));
        assert_eq!(tan_q(5).d_q().unwrap().coeff(0), &QPoly::one());
        assert_eq!(e_q(0).d_q(), Err(Error::EmptyResult));
        assert!(classical_tan(4).scale_arg(1).is_err());
    }

    #[test]
    fn json_round_trip() {
        let f = tan_q(4);
        let v = f.to_json();
        assert_eq!(v["mode"], "q");
        assert_eq!(v["ring"], "q");
        assert_eq!(v["order"], 4);
        assert_eq!(DividedSeries::<QPoly>::from_json(&v).unwrap(), f);
        let c = classical_sec(4);
        assert_eq!(c.to_json()["coeffs"][4], "5");
        assert_eq!(DividedSeries::<BigInt>::from_json(&c.to_json()).unwrap(), c);
        let x = f.promote();
        assert_eq!(DividedSeries::<XQPoly>::from_json(&x.to_json()).unwrap(), x);
        assert!(DividedSeries::<BigInt>::from_json(&v).is_err());
    }
}
