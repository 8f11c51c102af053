//! The three families computed row by row from their recurrences.

use super::table::{CompTable, TripleKey, TripleKind, TripleTable};
use crate::poly::QPoly;
use crate::tcomb::{enumerate_t_compositions, TComposition};

fn triple_step(t: &TripleTable, n: usize, k1: usize, a1: usize, b1: usize) -> QPoly {
    let m1 = a1 + b1;
    let k = k1 as i64;
    let mut acc = QPoly::zero();
    let mut add = |kk: i64, a: usize, b: usize| {
        if let Some(p) = t.get_ref(&TripleKey::new(n, kk, a, b)) {
            acc += p;
        }
    };
    let first_allowed = match t.kind() {
        TripleKind::A => a1 < m1,
        TripleKind::B => true,
    };
    if first_allowed {
        for a in 0..a1 {
            add(k - 1, a, m1 - 1 - a);
        }
    }
    if a1 >= 1 {
        for a in a1..m1 {
            add(k, a, m1 - 1 - a);
        }
    }
    for a in 0..=a1 {
        add(k - 1, a, m1 + 1 - a);
    }
    for a in a1 + 1..=m1 + 1 {
        add(k, a, m1 + 1 - a);
    }
    acc.shift(k1)
}

fn triple_table(kind: TripleKind, n_max: usize) -> TripleTable {
    let mut t = TripleTable::new(kind, n_max);
    let seed = match kind {
        TripleKind::A => TripleKey::new(0, 0, 1, 0),
        TripleKind::B => TripleKey::new(0, -1, 0, 0),
    };
    t.add(seed, &QPoly::one());
    for n in 0..n_max {
        let mut row = Vec::new();
        for k1 in 0..=n {
            for m1 in 0..=n + 2 {
                for a1 in 0..=m1 {
                    let p = triple_step(&t, n, k1, a1, m1 - a1);
                    row.push((TripleKey::new(n + 1, k1 as i64, a1, m1 - a1), p));
                }
            }
        }
        for (key, p) in row {
            t.add(key, &p);
        }
    }
    t
}

/// `A_{n,k,a,b}(q)` for `n <= n_max` from the seed `A_{0,0,1,0} = 1` and
/// the four-sum recurrence with factor `q^{k'}`.
pub fn a_table(n_max: usize) -> TripleTable {
    triple_table(TripleKind::A, n_max)
}

/// `B_{n,k,a,b}(q)` for `n <= n_max` from the seed `B_{0,-1,0,0} = 1`;
/// identical to [`a_table`] except that the first sum is not cut off at
/// `a' <= m'-1`.
pub fn b_table(n_max: usize) -> TripleTable {
    triple_table(TripleKind::B, n_max)
}

fn splice(c: &[usize], at: usize, replace: usize, with: &[usize]) -> Vec<usize> {
    let mut out = c[..at].to_vec();
    out.extend_from_slice(with);
    out.extend_from_slice(&c[at + replace..]);
    out
}

fn comp_step(t: &CompTable, c: &TComposition) -> QPoly {
    let p = c.parts();
    let m = c.mu();
    let mut acc = QPoly::zero();
    // 1 lies in w_0, preceded by 2j letters.
    for odd in (1..=p[0]).step_by(2) {
        let smaller = splice(p, 0, 1, &[odd - 1, p[0] - odd]);
        acc += t.get_parts(&smaller).shift(odd - 1);
    }
    let mut prefix = p[0];
    for i in 1..=m {
        // 1 lies in w_i, preceded by 2j - 1 letters.
        for even in (2..=p[i]).step_by(2) {
            let smaller = splice(p, i, 1, &[even - 1, p[i] - even]);
            acc += t.get_parts(&smaller).shift(prefix + even - 1);
        }
        // w_i is the one-letter word 1.
        if i < m && p[i] == 1 {
            let smaller = splice(p, i, 1, &[]);
            acc += t.get_parts(&smaller).shift(prefix);
        }
        prefix += p[i];
    }
    acc
}

/// `A_{n,c}(q)` for `n <= n_max` from `A_{0,(0,0)} = 1` and the
/// composition recurrence, which removes the letter 1 from `w'` in each of
/// the three possible positions.
pub fn ac_table(n_max: usize) -> CompTable {
    let mut t = CompTable::new(n_max);
    t.add(TComposition::empty(), &QPoly::one());
    for n in 1..=n_max {
        let row: Vec<_> = enumerate_t_compositions(n)
            .into_iter()
            .map(|c| {
                let p = comp_step(&t, &c);
                (c, p)
            })
            .collect();
        for (c, p) in row {
            t.add(c, &p);
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> QPoly {
        s.parse().unwrap()
    }

    fn comp(parts: &[usize]) -> TComposition {
        TComposition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn triple_values() {
        let a = a_table(4);
        assert_eq!(a.get(2, 1, 2, 1), p("q"));
        assert_eq!(a.get(4, 2, 2, 1), p("3q^3+5q^4+2q^5"));
        assert_eq!(a.get(3, 1, 0, 0), p("q+q^2"));
        let b = b_table(4);
        assert_eq!(b.get(2, 1, 2, 0), p("q"));
        assert_eq!(b.get(3, 1, 1, 0), p("2q+q^2"));
        assert_eq!(b.get(4, 2, 2, 0), p("3q^3+4q^4+q^5"));
        assert_eq!(b.get(0, -1, 0, 0), QPoly::one());
    }

    #[test]
    fn composition_values() {
        let t = ac_table(4);
        assert_eq!(t.get(&comp(&[0, 1, 2])), p("q+q^2+q^3"));
        assert_eq!(t.get(&comp(&[0, 1, 1, 1, 1, 0])), p("(1+q)(1+q+q^2)(1+q+q^2+q^3)"));
        assert_eq!(t.get(&comp(&[1])), QPoly::one());
        assert_eq!(t.get(&comp(&[0, 1, 0])), QPoly::one());
    }
}
