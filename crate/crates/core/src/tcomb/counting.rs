//! The counting layer: `α(n,m) = |{c ∈ Θ_n : μc = m}|`, its s-composition
//! analogue `β(n,m)`, and the Fibonacci polynomials `Σ_m α(n,m) x^m`.

use num_bigint::BigInt;

use crate::poly::QPoly;

/// Rows `0..=n_max` of `α`, each of length `n + 2`, from
/// `α(0,m) = δ_{1,m}`, `α(1,m) = δ_{0,m} + δ_{2,m}` and
/// `α(n,m) = α(n-1,m-1) + α(n-2,m)`.
pub fn alpha_table(n_max: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let row = (0..n + 2)
            .map(|m| match n {
                0 => BigInt::from(u8::from(m == 1)),
                1 => BigInt::from(u8::from(m == 0 || m == 2)),
                _ => {
                    let left = if m >= 1 { rows[n - 1][m - 1].clone() } else { BigInt::from(0) };
                    let below = rows[n - 2].get(m).cloned().unwrap_or_default();
                    left + below
                }
            })
            .collect();
        rows.push(row);
    }
    rows
}

pub fn alpha(n: usize, m: usize) -> BigInt {
    alpha_table(n)[n].get(m).cloned().unwrap_or_default()
}

/// `β(0,0) = 1` and `β(n,m) = α(n-1,m)` for `n >= 1`.
pub fn beta(n: usize, m: usize) -> BigInt {
    match n {
        0 => BigInt::from(u8::from(m == 0)),
        _ => alpha(n - 1, m),
    }
}

/// `A_n(x)` from `A_0 = x`, `A_1 = 1 + x^2`, `A_{n+1} = x A_n + A_{n-1}`,
/// for `0 <= n <= n_max`. The variable `x` is stored as the polynomial
/// variable of [`QPoly`].
pub fn fibonacci_polys(n_max: usize) -> Vec<QPoly> {
    let x = QPoly::q_pow(1);
    let mut out: Vec<QPoly> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let p = match n {
            0 => x.clone(),
            1 => QPoly::from_i64s(&[1, 0, 1]),
            _ => &out[n - 1].shift(1) + &out[n - 2],
        };
        out.push(p);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_values() {
        assert_eq!(alpha(4, 3), BigInt::from(4));
        let row6: BigInt = alpha_table(6)[6].iter().sum();
        assert_eq!(row6, BigInt::from(21));
        assert_eq!(beta(0, 0), BigInt::from(1));
        assert_eq!(beta(6, 2), BigInt::from(6));
    }

    #[test]
    fn polynomials_match_triangle() {
        let table = alpha_table(8);
        for (n, p) in fibonacci_polys(8).iter().enumerate() {
            assert_eq!(p, &QPoly::from_coeffs(table[n].clone()), "n={n}");
        }
    }
}
