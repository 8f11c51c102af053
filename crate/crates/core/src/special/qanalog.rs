use crate::derivtables::TripleTable;
use crate::error::{Error, Result};
use crate::permstats::{self, Stats};
use crate::poly::{q_bracket, QPoly, XQPoly};
use crate::series::{cap_sec_q, sec_q, tan_q, DividedSeries, Mode};

fn first_column(t: &TripleTable, n: usize) -> XQPoly {
    let mut coeffs: Vec<QPoly> = Vec::new();
    for (key, p) in t.row(n) {
        if key.a != 0 || key.b != 0 || key.k < 0 {
            continue;
        }
        let e = key.k as usize + 1;
        if coeffs.len() <= e {
            coeffs.resize(e + 1, QPoly::zero());
        }
        coeffs[e] += p;
    }
    XQPoly::from_coeffs(coeffs)
}

/// `T_n(t,q) = Σ_k t^{k+1} A_{n,k,0,0}(q)` for odd `n`, with `t` the outer
/// variable.
pub fn tq_tangent(a: &TripleTable, n: usize) -> Result<XQPoly> {
    if n % 2 == 0 {
        return Err(Error::Usage(format!("T_n(t,q) needs odd n, got {n}")));
    }
    Ok(first_column(a, n))
}

/// `E_n(t,q) = Σ_{k>=0} t^{k+1} B_{n,k,0,0}(q)` for even `n`, and
/// `E_0(t,q) = t`.
pub fn tq_secant(b: &TripleTable, n: usize) -> Result<XQPoly> {
    if n % 2 == 1 {
        return Err(Error::Usage(format!("E_n(t,q) needs even n, got {n}")));
    }
    if n == 0 {
        return Ok(XQPoly::monomial(QPoly::one(), 1));
    }
    Ok(first_column(b, n))
}

/// `Σ_{σ ∈ RA_n} t^{1 + ides σ} q^{imaj σ}`.
pub fn tq_by_statistics(n: usize) -> XQPoly {
    let mut coeffs: Vec<QPoly> = Vec::new();
    for p in permstats::enumerate_ra(n) {
        let s = Stats::of(p.values());
        let e = s.ides + 1;
        if coeffs.len() <= e {
            coeffs.resize(e + 1, QPoly::zero());
        }
        coeffs[e] += QPoly::q_pow(s.imaj);
    }
    XQPoly::from_coeffs(coeffs)
}

/// Closed forms for three diagonals of the aggregate tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalForms {
    /// `[1]_q [2]_q ... [n]_q`, the A aggregate at `a+b = n+1`.
    pub super_a: QPoly,
    /// `[1]_q [2]_q (1 + (n-1)q + q^2) [4]_q ... [n]_q`, the A aggregate at
    /// `a+b = n-1`.
    pub sub_a: QPoly,
    /// `(1 + (n-1)q + (n-1)q^2) [4]_q ... [n]_q`, the B aggregate at
    /// `a+b = n-2`.
    pub sub_b: QPoly,
}

/// The three diagonal products at `n`. The two subdiagonal forms hold
/// for `n >= 3`.
pub fn diagonal_closed_forms(n: usize) -> Result<DiagonalForms> {
    if n < 3 {
        return Err(Error::Usage(format!("the subdiagonal forms need n >= 3, got {n}")));
    }
    let tail: QPoly = (4..=n).map(q_bracket).product();
    let k = n as i64 - 1;
    Ok(DiagonalForms {
        super_a: (1..=n).map(q_bracket).product(),
        sub_a: &(&q_bracket(2) * &QPoly::from_i64s(&[1, k, 1])) * &tail,
        sub_b: &QPoly::from_i64s(&[1, k, k]) * &tail,
    })
}

/// `Σ_{k,a,b} B_{n,k,a,b}(q)`: the B aggregates summed over `m`.
pub fn springer_from_table(b: &TripleTable, n: usize) -> QPoly {
    b.row(n).map(|(_, p)| p).sum()
}

fn times_inverse_of_one_minus_tan(f: DividedSeries<QPoly>, order: usize) -> Vec<QPoly> {
    let one = DividedSeries::one(Mode::Q, order).expect("q-mode");
    let den = one.sub(&tan_q(order)).expect("same mode");
    f.mul(&den.invert().expect("constant term 1"))
        .expect("same mode")
        .coeffs()
        .to_vec()
}

/// Coefficients `0..=order` of `sec_q(u) (1 - tan_q(u))^{-1}`.
pub fn springer_by_series(order: usize) -> Vec<QPoly> {
    times_inverse_of_one_minus_tan(sec_q(order), order)
}

/// Coefficients `0..=order` of `Sec_q(u) (1 - tan_q(u))^{-1}`.
pub fn springer_sec_variant(order: usize) -> Vec<QPoly> {
    times_inverse_of_one_minus_tan(cap_sec_q(order), order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derivtables::{a_table, b_table};
    use num_bigint::BigInt;

    fn p(s: &str) -> QPoly {
        s.parse().unwrap()
    }

    #[test]
    fn tangent_and_secant_first_columns() {
        let a = a_table(7);
        let b = b_table(6);
        assert_eq!(tq_tangent(&a, 3).unwrap(), XQPoly::monomial(p("q+q^2"), 2));
        assert_eq!(tq_tangent(&a, 5).unwrap().eval_at_one(), BigInt::from(16));
        assert_eq!(tq_secant(&b, 0).unwrap(), tq_by_statistics(0));
        for n in (1..=7).step_by(2) {
            assert_eq!(tq_tangent(&a, n).unwrap(), tq_by_statistics(n), "n={n}");
        }
        for n in (2..=6).step_by(2) {
            assert_eq!(tq_secant(&b, n).unwrap(), tq_by_statistics(n), "n={n}");
        }
        assert!(tq_tangent(&a, 2).is_err());
        assert!(tq_secant(&b, 3).is_err());
    }

    #[test]
    fn diagonals() {
        let d = diagonal_closed_forms(4).unwrap();
        assert_eq!(d.super_a, p("1+3q+5q^2+6q^3+5q^4+3q^5+q^6"));
        assert_eq!(d.sub_a, p("1+5q+9q^2+10q^3+9q^4+5q^5+q^6"));
        assert_eq!(d.sub_b, p("1+4q+7q^2+7q^3+6q^4+3q^5"));
        assert!(diagonal_closed_forms(2).is_err());
    }

    #[test]
    fn springer_variants() {
        let b = b_table(8);
        let series = springer_by_series(8);
        assert_eq!(series[3], p("2+4q+4q^2+q^3"));
        assert_eq!(series[2], p("2+q"));
        assert_eq!(series[0], QPoly::one());
        let values = [1, 1, 3, 11, 57, 361, 2763, 24611, 250737];
        let sec_variant = springer_sec_variant(8);
        for n in 0..=8 {
            assert_eq!(springer_from_table(&b, n), series[n], "n={n}");
            assert_eq!(series[n].eval_at_one(), BigInt::from(values[n]));
            assert_eq!(sec_variant[n].eval_at_one(), BigInt::from(values[n]));
        }
    }
}
