//! The three families as statistic sums over t-permutations.

use super::table::{CompTable, TripleKey, TripleKind, TripleTable};
use crate::error::Result;
use crate::poly::QPoly;
use crate::tcomb::{enumerate_t_permutations, TComposition};

/// Brute-force A, B and composition tables for `n <= n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleTables {
    pub a: TripleTable,
    pub b: TripleTable,
    pub ac: CompTable,
}

/// Sums `q^imaj` over `T_{n,k,a,b}` (A, with `k = ides`, `a = min`,
/// `b = μ - min`), `q^imaj` over `T^-_{n,k,a,b+1}` (B) and `q^inv` grouped by
/// `Λw` (composition table), for every `n <= n_max`.
///
/// At `n = 0` the tables hold the seeds `A_{0,0,1,0} = B_{0,-1,0,0} = 1` and
/// `A_{0,(0,0)} = 1`: the empty t-permutation has no letter 1.
pub fn oracle_tables(n_max: usize, bound: usize) -> Result<OracleTables> {
    let mut a = TripleTable::new(TripleKind::A, n_max);
    let mut b = TripleTable::new(TripleKind::B, n_max);
    let mut ac = CompTable::new(n_max);
    a.add(TripleKey::new(0, 0, 1, 0), &QPoly::one());
    b.add(TripleKey::new(0, -1, 0, 0), &QPoly::one());
    ac.add(TComposition::empty(), &QPoly::one());
    for n in 1..=n_max {
        for w in enumerate_t_permutations(n, bound)? {
            let s = w.stats();
            let min = s.min.expect("n >= 1");
            let k = s.ides as i64;
            let imaj = QPoly::q_pow(s.imaj);
            a.add(TripleKey::new(n, k, min, s.mu - min), &imaj);
            let last_empty = w.components().last().is_some_and(Vec::is_empty);
            if s.mu >= 1 && last_empty {
                b.add(TripleKey::new(n, k, min, s.mu - 1 - min), &imaj);
            }
            ac.add(s.lambda, &QPoly::q_pow(s.inv));
        }
    }
    Ok(OracleTables { a, b, ac })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> QPoly {
        s.parse().unwrap()
    }

    #[test]
    fn small_oracles() {
        let t = oracle_tables(3, 8).unwrap();
        assert_eq!(t.a.get(3, 1, 1, 1), p("2q+2q^2"));
        assert_eq!(t.b.get(0, -1, 0, 0), QPoly::one());
        assert_eq!(t.b.get(3, 1, 1, 0), p("2q+q^2"));
        let c = |v: &[usize]| TComposition::new(v.to_vec()).unwrap();
        assert_eq!(t.ac.get(&c(&[0, 2])), p("q"));
        assert_eq!(t.ac.get(&c(&[2, 0])), QPoly::one());
        assert_eq!(t.ac.get(&c(&[0, 1, 1, 0])), p("1+q"));
        assert_eq!(t.ac.row(2).count(), 3);
        assert!(oracle_tables(9, 8).is_err());
    }

    #[test]
    fn oracles_agree_with_recurrences() {
        use super::super::recur::{a_table, ac_table, b_table};
        let t = oracle_tables(6, 8).unwrap();
        assert_eq!(t.a, a_table(6));
        assert_eq!(t.b, b_table(6));
        assert_eq!(t.ac, ac_table(6));
    }
}
