use std::collections::BTreeMap;

use crate::derivtables::TripleTable;
use crate::permstats::{self, Stats};
use crate::poly::{q_bracket, QPoly, XQPoly};

/// `A_n(t,q) = Σ_j A_{n,j}(q) t^j` for `n <= n_max`, from
/// `A_{0,j} = δ_{0,j}` and
/// `A_{n,j} = [j+1]_q A_{n-1,j} + (q^j + ... + q^{n-1}) A_{n-1,j-1}`.
pub fn carlitz(n_max: usize) -> Vec<XQPoly> {
    let mut rows: Vec<Vec<QPoly>> = vec![vec![QPoly::one()]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let at = |j: usize| prev.get(j).cloned().unwrap_or_default();
        let row = (0..n.max(1))
            .map(|j| {
                let stay = &q_bracket(j + 1) * &at(j);
                if j == 0 {
                    return stay;
                }
                let tail: QPoly = (j..n).map(QPoly::q_pow).sum();
                &stay + &(&tail * &at(j - 1))
            })
            .collect();
        rows.push(row);
    }
    rows.into_iter().map(XQPoly::from_coeffs).collect()
}

/// `Σ_{σ ∈ S_n} t^{ides σ} q^{imaj σ}`.
pub fn carlitz_by_statistics(n: usize) -> XQPoly {
    let mut coeffs: Vec<QPoly> = Vec::new();
    for p in permstats::enumerate(n) {
        let s = Stats::of(p.values());
        if coeffs.len() <= s.ides {
            coeffs.resize(s.ides + 1, QPoly::zero());
        }
        coeffs[s.ides] += QPoly::q_pow(s.imaj);
    }
    XQPoly::from_coeffs(coeffs)
}

/// `A_{n,j,a}(q) = A_{n,j,a,n+1-a}(q)` read off the A table, keyed by
/// `(j, a)`.
pub fn carlitz_refinement(a: &TripleTable, n: usize) -> BTreeMap<(usize, usize), QPoly> {
    a.row(n)
        .filter(|(key, _)| key.a + key.b == n + 1)
        .map(|(key, p)| {
            let j = usize::try_from(key.k).expect("A entries have k >= 0");
            ((j, key.a), p.clone())
        })
        .collect()
}

/// Rows `0..=n_max` of `A_{n,k,a}` from `A_{0,0,1} = 1` and
/// `A_{n+1,k',a'} = q^{k'} (Σ_{0<=a<=a'-1<=n} A_{n,k'-1,a} + Σ_{1<=a'<=a} A_{n,k',a})`.
pub fn carlitz_refinement_by_recurrence(n_max: usize) -> Vec<BTreeMap<(usize, usize), QPoly>> {
    let mut rows = vec![BTreeMap::from([((0, 1), QPoly::one())])];
    for n in 0..n_max {
        let prev = &rows[n];
        let mut row = BTreeMap::new();
        for k1 in 0..=n {
            for a1 in 0..=n + 2 {
                let mut acc = QPoly::zero();
                for (&(k, a), p) in prev {
                    let first = k1 >= 1 && k == k1 - 1 && a < a1 && a1 <= n + 1;
                    let second = k == k1 && a1 >= 1 && a >= a1;
                    if first || second {
                        acc += p;
                    }
                }
                if !acc.is_zero() {
                    row.insert((k1, a1), acc.shift(k1));
                }
            }
        }
        rows.push(row);
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derivtables::a_table;

    fn xq(parts: &[&str]) -> XQPoly {
        XQPoly::from_coeffs(parts.iter().map(|s| s.parse().unwrap()).collect())
    }

    #[test]
    fn printed_list() {
        let c = carlitz(5);
        assert_eq!(c[0], XQPoly::one());
        assert_eq!(c[1], XQPoly::one());
        assert_eq!(c[2], xq(&["1", "q"]));
        assert_eq!(c[3], xq(&["1", "2q(q+1)", "q^3"]));
        assert_eq!(
            c[5],
            xq(&[
                "1",
                "q(4q^3+9q^2+9q+4)",
                "q^3(6q^4+16q^3+22q^2+16q+6)",
                "q^6(4q^3+9q^2+9q+4)",
                "q^10"
            ])
        );
        for n in 0..=5 {
            assert_eq!(carlitz_by_statistics(n), c[n]);
        }
    }

    #[test]
    fn refinement() {
        let a = a_table(5);
        let r = carlitz_refinement(&a, 4);
        let p = |s: &str| s.parse::<QPoly>().unwrap();
        assert_eq!(r[&(1, 1)], p("2q^2+2q^3"));
        assert_eq!(r[&(2, 3)], p("q^3+2q^4+q^5"));
        assert_eq!(r[&(3, 4)], p("q^6"));
        let sum: QPoly = (1..=4).map(|i| r[&(1, i)].clone()).sum();
        assert_eq!(sum, p("3q+5q^2+3q^3"));
        let rec = carlitz_refinement_by_recurrence(5);
        for n in 0..=5 {
            assert_eq!(rec[n], carlitz_refinement(&a, n), "n={n}");
        }
    }
}
