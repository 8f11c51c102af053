//! The q-tangent/secant coefficient polynomials `A_n(q)` and `A^Sec_{2n}(q)`,
//! read off the series and regenerated by their convolution recurrences.

use crate::poly::{gauss_binomial, QPoly};

use super::trig::{cap_sec_q, sec_q, tan_q};

/// `A_n(q)` for `0 <= n <= n_max` (the coefficient of `tan_q` at odd `n`,
/// of `sec_q` at even `n`) and `A^Sec_n(q)` (the coefficient of `Sec_q`,
/// zero at odd `n`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QTanCoeffs {
    tan_sec: Vec<QPoly>,
    cap_sec: Vec<QPoly>,
}

impl QTanCoeffs {
    pub fn from_series(n_max: usize) -> Self {
        let t = tan_q(n_max);
        let s = sec_q(n_max);
        let tan_sec = (0..=n_max)
            .map(|n| if n % 2 == 1 { t.coeff(n) } else { s.coeff(n) }.clone())
            .collect();
        QTanCoeffs {
            tan_sec,
            cap_sec: cap_sec_q(n_max).coeffs().to_vec(),
        }
    }

    pub fn n_max(&self) -> usize {
        self.tan_sec.len() - 1
    }

    /// `A_n(q)`.
    pub fn a(&self, n: usize) -> &QPoly {
        &self.tan_sec[n]
    }

    /// `A^Sec_n(q)`; zero for odd `n`.
    pub fn a_sec(&self, n: usize) -> &QPoly {
        &self.cap_sec[n]
    }

    pub fn all_a(&self) -> &[QPoly] {
        &self.tan_sec
    }

    pub fn all_a_sec(&self) -> &[QPoly] {
        &self.cap_sec
    }
}

fn gauss(n: usize, m: usize) -> QPoly {
    gauss_binomial(n, m).expect("m <= n")
}

/// `A_n(q)` for `n <= n_max` from `A_0 = A_1 = 1` and
/// `A_{2n+1} = Σ_{k<n} [2n, 2k+1] q^{2k+1} A_{2k+1} A_{2n-2k-1}`,
/// `A_{2n}   = Σ_{k<n} [2n-1, 2k] q^{2k} A_{2k} A_{2n-2k-1}`.
pub fn q_tangent_by_recurrence(n_max: usize) -> Vec<QPoly> {
    let mut a: Vec<QPoly> = Vec::with_capacity(n_max + 1);
    for len in 0..=n_max {
        let value = if len <= 1 {
            QPoly::one()
        } else if len % 2 == 1 {
            let n = len / 2;
            (0..n)
                .map(|k| {
                    &(&gauss(2 * n, 2 * k + 1) * &a[2 * k + 1].shift(2 * k + 1))
                        * &a[2 * n - 2 * k - 1]
                })
                .sum()
        } else {
            let n = len / 2;
            (0..n)
                .map(|k| {
                    &(&gauss(2 * n - 1, 2 * k) * &a[2 * k].shift(2 * k)) * &a[2 * n - 2 * k - 1]
                })
                .sum()
        };
        a.push(value);
    }
    a
}

/// `A^Sec_n(q)` for `n <= n_max` (zero at odd `n`) from `A^Sec_0 = 1` and
/// `A^Sec_{2n} = Σ_{k<n} [2n-1, 2k] A^Sec_{2k} q^{2n-2k-1} A_{2n-2k-1}`,
/// given `A_n(q)` for `n <= n_max`.
pub fn q_secant_big_by_recurrence(a: &[QPoly]) -> Vec<QPoly> {
    let mut s: Vec<QPoly> = Vec::with_capacity(a.len());
    for len in 0..a.len() {
        let value = if len == 0 {
            QPoly::one()
        } else if len % 2 == 1 {
            QPoly::zero()
        } else {
            let n = len / 2;
            (0..n)
                .map(|k| {
                    let j = 2 * n - 2 * k - 1;
                    &(&gauss(2 * n - 1, 2 * k) * &s[2 * k]) * &a[j].shift(j)
                })
                .sum()
        };
        s.push(value);
    }
    s
}

/// `A_n(q)` for `n <= n_max` from the single recurrence
/// `A_n = Σ_{k=0}^{⌊n/2⌋-1} [n-1, 2k+1] q^{n-2k-2} A_{2k+1} A_{n-2k-2}`
/// for `n >= 2`, with `A_0 = A_1 = 1`.
pub fn q_tangent_by_combined_recurrence(n_max: usize) -> Vec<QPoly> {
    let mut a: Vec<QPoly> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let value = if n <= 1 {
            QPoly::one()
        } else {
            (0..n / 2)
                .map(|k| {
                    &(&gauss(n - 1, 2 * k + 1) * &a[2 * k + 1].shift(n - 2 * k - 2))
                        * &a[n - 2 * k - 2]
                })
                .sum()
        };
        a.push(value);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recurrences_agree_with_series() {
        let c = QTanCoeffs::from_series(11);
        let rec = q_tangent_by_recurrence(11);
        assert_eq!(rec, c.all_a());
        assert_eq!(q_tangent_by_combined_recurrence(11), rec);
        assert_eq!(q_secant_big_by_recurrence(&rec), c.all_a_sec());
    }

    #[test]
    fn reciprocity() {
        let c = QTanCoeffs::from_series(11);
        for n in 0..=11usize {
            let d = n * n.saturating_sub(1) / 2;
            let r = c.a(n).reverse(d).unwrap();
            if n % 2 == 1 {
                assert_eq!(&r, c.a(n), "n={n}");
            } else {
                assert_eq!(&r, c.a_sec(n), "n={n}");
            }
        }
    }
}
