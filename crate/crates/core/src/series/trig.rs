//! Exponentials and trigonometric functions in both weightings.

use std::borrow::Cow;

use num_bigint::BigInt;

use super::{DividedSeries, Mode};
use crate::poly::QPoly;

/// A divided-power series over `Z[q]`.
pub type QSeries = DividedSeries<QPoly>;

fn q_series(order: usize, f: impl FnMut(usize) -> QPoly) -> QSeries {
    DividedSeries::from_fn(Mode::Q, order, f).expect("QPoly is allowed in q-mode")
}

fn signed_q_pow(sign_neg: bool, d: usize) -> QPoly {
    let p = QPoly::q_pow(d);
    if sign_neg {
        -p
    } else {
        p
    }
}

/// `e_q(u) = Σ u^n / (q;q)_n`.
pub fn e_q(order: usize) -> QSeries {
    q_series(order, |_| QPoly::one())
}

/// `E_q(u) = Σ q^{n(n-1)/2} u^n / (q;q)_n`.
pub fn cap_e_q(order: usize) -> QSeries {
    q_series(order, |n| QPoly::q_pow(n * n.saturating_sub(1) / 2))
}

/// Odd part of `e_q` with signs `(-1)^k` at index `2k+1`.
pub fn sin_q(order: usize) -> QSeries {
    q_series(order, |n| {
        if n % 2 == 1 {
            signed_q_pow((n / 2) % 2 == 1, 0)
        } else {
            QPoly::zero()
        }
    })
}

/// Even part of `e_q` with signs `(-1)^k` at index `2k`.
pub fn cos_q(order: usize) -> QSeries {
    q_series(order, |n| {
        if n % 2 == 0 {
            signed_q_pow((n / 2) % 2 == 1, 0)
        } else {
            QPoly::zero()
        }
    })
}

/// Odd part of `E_q` with signs `(-1)^k` at index `2k+1`.
pub fn cap_sin_q(order: usize) -> QSeries {
    q_series(order, |n| {
        if n % 2 == 1 {
            signed_q_pow((n / 2) % 2 == 1, n * (n - 1) / 2)
        } else {
            QPoly::zero()
        }
    })
}

/// Even part of `E_q` with signs `(-1)^k` at index `2k`.
pub fn cap_cos_q(order: usize) -> QSeries {
    q_series(order, |n| {
        if n % 2 == 0 {
            signed_q_pow((n / 2) % 2 == 1, n * n.saturating_sub(1) / 2)
        } else {
            QPoly::zero()
        }
    })
}

/// `tan_q = sin_q / cos_q`; its coefficients are the q-tangent and
/// q-secant polynomials `A_n(q)`.
pub fn tan_q(order: usize) -> QSeries {
    let sec = sec_q(order);
    sin_q(order).mul(&sec).expect("same mode")
}

/// `sec_q = 1 / cos_q`.
pub fn sec_q(order: usize) -> QSeries {
    cos_q(order).invert().expect("cos_q has constant term 1")
}

/// `Sec_q = 1 / Cos_q`.
pub fn cap_sec_q(order: usize) -> QSeries {
    cap_cos_q(order).invert().expect("Cos_q has constant term 1")
}

fn classical(order: usize, f: impl FnMut(usize) -> BigInt) -> DividedSeries<BigInt> {
    DividedSeries::from_fn(Mode::Classical, order, f).expect("classical mode accepts any ring")
}

fn alternating_unit(n: usize, parity: usize) -> BigInt {
    match (n % 2 == parity, (n / 2) % 2) {
        (false, _) => BigInt::from(0),
        (true, 0) => BigInt::from(1),
        (true, _) => BigInt::from(-1),
    }
}

pub fn classical_sin(order: usize) -> DividedSeries<BigInt> {
    classical(order, |n| alternating_unit(n, 1))
}

pub fn classical_cos(order: usize) -> DividedSeries<BigInt> {
    classical(order, |n| alternating_unit(n, 0))
}

/// Coefficients of `u^n/n!` in `tan u`: the tangent numbers at odd `n`.
pub fn classical_tan(order: usize) -> DividedSeries<BigInt> {
    classical_sin(order)
        .mul(&classical_sec(order))
        .expect("same mode")
}

/// Coefficients of `u^n/n!` in `sec u`: the secant numbers at even `n`.
pub fn classical_sec(order: usize) -> DividedSeries<BigInt> {
    classical_cos(order).invert().expect("cos has constant term 1")
}

/// `Π_{i=1..m} tan_q(q^{c_0+...+c_{i-1}} u)` for the parts `c_0..c_m`;
/// the unit series when there is a single part.
pub fn tan_product(parts: &[usize], order: usize) -> QSeries {
    TrigCache::new(order, 0).tan_product(parts)
}

/// `tan_q`, `sec_q` and `Sec_q` at one order together with their
/// argument-scaled versions `f(q^k u)` for `k <= max_shift`.
#[derive(Clone, Debug)]
pub struct TrigCache {
    order: usize,
    tan: Vec<QSeries>,
    sec: Vec<QSeries>,
    cap_sec: Vec<QSeries>,
}

fn shifts(base: QSeries, max_shift: usize) -> Vec<QSeries> {
    (0..=max_shift)
        .map(|k| base.scale_arg(k).expect("q-mode"))
        .collect()
}

fn lookup(table: &[QSeries], k: usize) -> Cow<'_, QSeries> {
    match table.get(k) {
        Some(s) => Cow::Borrowed(s),
        None => Cow::Owned(table[0].scale_arg(k).expect("q-mode")),
    }
}

impl TrigCache {
    pub fn new(order: usize, max_shift: usize) -> Self {
        TrigCache {
            order,
            tan: shifts(tan_q(order), max_shift),
            sec: shifts(sec_q(order), max_shift),
            cap_sec: shifts(cap_sec_q(order), max_shift),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `tan_q(q^k u)`.
    pub fn tan(&self, k: usize) -> Cow<'_, QSeries> {
        lookup(&self.tan, k)
    }

    /// `sec_q(q^k u)`.
    pub fn sec(&self, k: usize) -> Cow<'_, QSeries> {
        lookup(&self.sec, k)
    }

    /// `Sec_q(q^k u)`.
    pub fn cap_sec(&self, k: usize) -> Cow<'_, QSeries> {
        lookup(&self.cap_sec, k)
    }

    pub fn one(&self) -> QSeries {
        DividedSeries::one(Mode::Q, self.order).expect("q-mode")
    }

    pub fn tan_product(&self, parts: &[usize]) -> QSeries {
        let mut acc = self.one();
        let mut prefix = 0;
        for &c in parts.iter().take(parts.len().saturating_sub(1)) {
            prefix += c;
            acc = acc.mul(&self.tan(prefix)).expect("same mode");
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_i64s(c)
    }

    #[test]
    fn q_tangent_and_secant_values() {
        let t = tan_q(6);
        assert_eq!(t.coeff(5), &p(&[0, 0, 1, 2, 3, 4, 3, 2, 1]));
        assert_eq!(t.coeff(3), &p(&[0, 1, 1]));
        assert_eq!(sec_q(4).coeff(4), &p(&[0, 1, 2, 1, 1]));
        assert_eq!(cap_sec_q(4).coeff(4), &p(&[0, 0, 1, 1, 2, 1]));
        assert_eq!(cap_sec_q(2).coeff(2), &p(&[0, 1]));
        assert_eq!(cap_sec_q(2).coeff(0), &QPoly::one());
    }

    #[test]
    fn only_one_q_tangent() {
        let alt = cap_sin_q(11).mul(&cap_sec_q(11)).unwrap();
        assert_eq!(alt, tan_q(11));
    }

    #[test]
    fn classical_numbers() {
        let t = classical_tan(9);
        let odd: Vec<i64> = [1, 3, 5, 7, 9].iter().map(|&n| t.coeff(n).try_into().unwrap()).collect();
        assert_eq!(odd, [1, 2, 16, 272, 7936]);
        let s = classical_sec(8);
        let even: Vec<i64> = [0, 2, 4, 6, 8].iter().map(|&n| s.coeff(n).try_into().unwrap()).collect();
        assert_eq!(even, [1, 1, 5, 61, 1385]);
    }

    #[test]
    fn tan_products() {
        assert_eq!(tan_product(&[3], 5), DividedSeries::one(Mode::Q, 5).unwrap());
        let t = tan_q(5);
        let expected = t.mul(&t.scale_arg(1).unwrap()).unwrap();
        assert_eq!(tan_product(&[0, 1, 0], 5), expected);
        let expected = t.scale_arg(2).unwrap().mul(&t.scale_arg(3).unwrap()).unwrap();
        assert_eq!(tan_product(&[2, 1, 0], 5), expected);
    }

    #[test]
    fn cache_extends_past_precomputed_shifts() {
        let c = TrigCache::new(4, 1);
        assert_eq!(*c.tan(3), tan_q(4).scale_arg(3).unwrap());
        assert_eq!(*c.sec(1), sec_q(4).scale_arg(1).unwrap());
    }
}
