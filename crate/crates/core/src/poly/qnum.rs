//! q-integers, q-factorials and Gaussian binomials.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;

use super::QPoly;
use crate::error::{Error, Result};

/// `[n]_q = 1 + q + ... + q^{n-1}`; `[0]_q = 0`.
pub fn q_bracket(n: usize) -> QPoly {
    QPoly::from_coeffs(vec![BigInt::one(); n])
}

/// `[1]_q [2]_q ... [n]_q`.
pub fn q_factorial(n: usize) -> QPoly {
    (1..=n).map(q_bracket).product()
}

/// `(q;q)_n = (1-q)(1-q^2)...(1-q^n)` as a signed polynomial.
pub fn q_pochhammer(n: usize) -> QPoly {
    (1..=n)
        .map(|i| &QPoly::one() - &QPoly::q_pow(i))
        .product()
}

fn gauss_cache() -> &'static RwLock<Vec<Vec<QPoly>>> {
    static CACHE: OnceLock<RwLock<Vec<Vec<QPoly>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(vec![vec![QPoly::one()]]))
}

/// Row `n` of the Gaussian triangle, built by
/// `[N,M] = [N-1,M-1] + q^M [N-1,M]` and memoized process-wide.
pub(crate) fn gauss_row(n: usize) -> Vec<QPoly> {
    {
        let rows = gauss_cache().read().expect("gauss cache poisoned");
        if let Some(row) = rows.get(n) {
            return row.clone();
        }
    }
    let mut rows = gauss_cache().write().expect("gauss cache poisoned");
    while rows.len() <= n {
        let prev = rows.last().expect("seeded with row 0");
        let len = prev.len() + 1;
        let row: Vec<QPoly> = (0..len)
            .map(|m| {
                let left = if m >= 1 { prev[m - 1].clone() } else { QPoly::zero() };
                let right = prev.get(m).map(|p| p.shift(m)).unwrap_or_default();
                &left + &right
            })
            .collect();
        rows.push(row);
    }
    rows[n].clone()
}

/// The Gaussian binomial `[N choose M]_q`.
pub fn gauss_binomial(n: usize, m: usize) -> Result<QPoly> {
    if m > n {
        return Err(Error::Usage(format!("gauss_binomial({n}, {m}): need M <= N")));
    }
    Ok(gauss_row(n).swap_remove(m))
}

/// The q-multinomial `[N; c_0, ..., c_m]_q` as a product of Gaussian binomials.
pub fn q_multinomial(n: usize, parts: &[usize]) -> Result<QPoly> {
    let total: usize = parts.iter().sum();
    if total != n {
        return Err(Error::Usage(format!(
            "q_multinomial({n}, {parts:?}): parts sum to {total}"
        )));
    }
    let mut remaining = n;
    let mut acc = QPoly::one();
    for &p in parts {
        acc = &acc * &gauss_binomial(remaining, p)?;
        remaining -= p;
    }
    Ok(acc)
}

/// The ordinary binomial coefficient.
pub fn int_binomial(n: usize, m: usize) -> Result<BigInt> {
    if m > n {
        return Err(Error::Usage(format!("int_binomial({n}, {m}): need M <= N")));
    }
    let m = m.min(n - m);
    let mut acc = BigInt::one();
    for i in 0..m {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(q_bracket(3), QPoly::from_i64s(&[1, 1, 1]));
        assert_eq!(q_bracket(0), QPoly::zero());
        assert_eq!(q_pochhammer(2), QPoly::from_i64s(&[1, -1, -1, 1]));
        assert_eq!(gauss_binomial(5, 0).unwrap(), QPoly::one());
        assert_eq!(gauss_binomial(0, 0).unwrap(), QPoly::one());
        assert_eq!(int_binomial(10, 3).unwrap(), BigInt::from(120));
    }

    #[test]
    fn q_multinomial_with_unit_parts() {
        let expected = &q_bracket(3) * &q_bracket(4);
        assert_eq!(q_multinomial(4, &[2, 1, 1]).unwrap(), expected);
        assert_eq!(q_multinomial(4, &[0, 4]).unwrap(), QPoly::one());
    }

    #[test]
    fn bad_bounds_are_usage_errors() {
        assert!(matches!(gauss_binomial(2, 3), Err(Error::Usage(_))));
        assert!(matches!(int_binomial(2, 3), Err(Error::Usage(_))));
        assert!(matches!(q_multinomial(4, &[1, 1]), Err(Error::Usage(_))));
    }
}
