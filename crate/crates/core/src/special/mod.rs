//! Specializations: the integer triangles `a(n,m)`, `b(n,m)` and Hoffman's
//! derivative polynomials, the Carlitz q-Eulerian polynomials and their
//! refinement, (t,q)-tangent and secant numbers, diagonal closed forms and
//! q-Springer numbers.

mod carlitz;
mod qanalog;

pub use carlitz::{carlitz, carlitz_by_statistics, carlitz_refinement, carlitz_refinement_by_recurrence};
pub use qanalog::{
    diagonal_closed_forms, springer_by_series, springer_from_table, springer_sec_variant,
    tq_by_statistics, tq_secant, tq_tangent, DiagonalForms,
};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::poly::QPoly;
use crate::series::{classical_cos, classical_sin, classical_tan, DividedSeries, Mode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TriangleKind {
    /// `a(n,m)`: `D^n tan = Σ a(n,m) tan^m`.
    ASmall,
    /// `b(n,m)`: `D^n sec = Σ b(n,m) tan^m sec`.
    BSmall,
}

/// Rows `0..=n_max` of `a` or `b`; row `n` has length `n + 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntTriangle {
    kind: TriangleKind,
    rows: Vec<Vec<BigInt>>,
}

impl IntTriangle {
    pub fn kind(&self) -> TriangleKind {
        self.kind
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, n: usize, m: usize) -> BigInt {
        self.rows
            .get(n)
            .and_then(|r| r.get(m))
            .cloned()
            .unwrap_or_default()
    }

    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.rows[n]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn row_sum(&self, n: usize) -> BigInt {
        self.rows[n].iter().sum()
    }

    /// `Σ_m t(n,m) x^m`, with `x` stored as the polynomial variable.
    pub fn poly(&self, n: usize) -> QPoly {
        QPoly::from_coeffs(self.rows[n].clone())
    }
}

fn triangle(kind: TriangleKind, n_max: usize) -> IntTriangle {
    let seed = match kind {
        TriangleKind::ASmall => 1,
        TriangleKind::BSmall => 0,
    };
    let mut rows = vec![(0..2).map(|m| BigInt::from(u8::from(m == seed))).collect::<Vec<_>>()];
    for n in 0..n_max {
        let prev = &rows[n];
        let at = |m: usize| prev.get(m).cloned().unwrap_or_default();
        let row = (0..n + 3)
            .map(|m| {
                let left = if m >= 1 {
                    let factor = match kind {
                        TriangleKind::ASmall => m - 1,
                        TriangleKind::BSmall => m,
                    };
                    at(m - 1) * factor
                } else {
                    BigInt::zero()
                };
                left + at(m + 1) * (m + 1)
            })
            .collect();
        rows.push(row);
    }
    IntTriangle { kind, rows }
}

/// `a(n,m)` from `a(0,m) = δ_{1,m}`, `a(n+1,m) = (m-1)a(n,m-1) + (m+1)a(n,m+1)`
/// and `b(n,m)` from `b(0,m) = δ_{0,m}`, `b(n+1,m) = m b(n,m-1) + (m+1)b(n,m+1)`.
pub fn small_triangles(n_max: usize) -> (IntTriangle, IntTriangle) {
    (
        triangle(TriangleKind::ASmall, n_max),
        triangle(TriangleKind::BSmall, n_max),
    )
}

/// `A_n(x)` and `B_n(x)` for `n <= n_max`, read off the triangles.
pub fn hoffman_polys(n_max: usize) -> (Vec<QPoly>, Vec<QPoly>) {
    let (a, b) = small_triangles(n_max);
    (
        (0..=n_max).map(|n| a.poly(n)).collect(),
        (0..=n_max).map(|n| b.poly(n)).collect(),
    )
}

fn derivative(p: &QPoly) -> QPoly {
    QPoly::from_coeffs(
        p.coeffs()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * i)
            .collect(),
    )
}

/// `A_0 = x`, `A_{n+1} = (1 + x^2) A_n'` and `B_0 = 1`,
/// `B_{n+1} = (1 + x^2) B_n' + x B_n`.
pub fn hoffman_by_derivative(n_max: usize) -> (Vec<QPoly>, Vec<QPoly>) {
    let one_plus_x2 = QPoly::from_i64s(&[1, 0, 1]);
    let x = QPoly::q_pow(1);
    let mut a = vec![x.clone()];
    let mut b = vec![QPoly::one()];
    for n in 0..n_max {
        a.push(&one_plus_x2 * &derivative(&a[n]));
        b.push(&(&one_plus_x2 * &derivative(&b[n])) + &(&x * &b[n]));
    }
    (a, b)
}

fn lift(s: &DividedSeries<BigInt>) -> DividedSeries<QPoly> {
    s.map(|c| QPoly::constant(c.clone())).expect("classical mode")
}

/// `(x + tan u)(1 - x tan u)^{-1}` over the integer polynomials in `x`.
pub fn hoffman_tangent_gf(order: usize) -> DividedSeries<QPoly> {
    let tan = lift(&classical_tan(order));
    let x = DividedSeries::constant(Mode::Classical, order, QPoly::q_pow(1)).expect("classical");
    let one = DividedSeries::one(Mode::Classical, order).expect("classical");
    let num = x.add(&tan).expect("same mode");
    let den = one.sub(&tan.scale(&QPoly::q_pow(1))).expect("same mode");
    num.mul(&den.invert().expect("constant term 1")).expect("same mode")
}

/// `(cos u - x sin u)^{-1}` over the integer polynomials in `x`.
pub fn hoffman_secant_gf(order: usize) -> DividedSeries<QPoly> {
    let cos = lift(&classical_cos(order));
    let sin = lift(&classical_sin(order));
    cos.sub(&sin.scale(&QPoly::q_pow(1)))
        .expect("same mode")
        .invert()
        .expect("constant term 1")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn triangle_rows() {
        let (a, b) = small_triangles(6);
        assert_eq!(a.get(4, 3), BigInt::from(40));
        assert_eq!(b.get(4, 2), BigInt::from(28));
        assert_eq!(a.get(0, 1), BigInt::from(1));
        assert_eq!(a.row(5), &ints(&[16, 0, 136, 0, 240, 0, 120])[..]);
        assert_eq!(b.row(5), &ints(&[0, 61, 0, 180, 0, 120, 0])[..]);
        let springer: Vec<_> = (0..=6).map(|n| b.row_sum(n)).collect();
        assert_eq!(springer, ints(&[1, 1, 3, 11, 57, 361, 2763]));
        let tan_sec = ints(&[1, 1, 1, 2, 5, 16, 61]);
        for n in 0..=6 {
            assert_eq!(a.row_sum(n), &tan_sec[n] << n);
        }
    }

    #[test]
    fn hoffman_polynomials() {
        let (a, b) = hoffman_polys(8);
        assert_eq!(a[2], QPoly::from_i64s(&[0, 2, 0, 2]));
        assert_eq!(a[3], QPoly::from_i64s(&[2, 0, 8, 0, 6]));
        assert_eq!(b[0], QPoly::one());
        assert_eq!(hoffman_by_derivative(8), (a.clone(), b.clone()));
        assert_eq!(hoffman_tangent_gf(8).coeffs(), &a[..]);
        assert_eq!(hoffman_secant_gf(8).coeffs(), &b[..]);
    }
}
