//! Formal linear combinations of trigonometric monomials and the rules
//! giving `D_q` of each monomial. Symbols are never normalized.

use std::collections::BTreeMap;
use std::fmt;

use super::table::{CompTable, TripleKey, TripleKind, TripleTable};
use crate::poly::QPoly;
use crate::tcomb::TComposition;

/// A monomial whose q-derivative is again a sum of `q^e` times monomials
/// of the same shape.
pub trait Symbol: Clone + Ord + fmt::Display {
    fn derive(&self) -> Vec<(usize, Self)>;
}

/// `[k,a,b] = tan_q(q^{k+1}u)^b tan_q(q^k u)^a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TanSym {
    pub k: usize,
    pub a: usize,
    pub b: usize,
}

/// `<k,a,b> = tan_q(q^{k+1}u)^b sec_q(q^{k+1}u) tan_q(q^k u)^a`; the start
/// symbol `<-1,0,0>` is `sec_q(u)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SecSym {
    pub k: i64,
    pub a: usize,
    pub b: usize,
}

/// `tan_q(q^c u) = Π_{1<=i<=m} tan_q(q^{c_0+...+c_{i-1}} u)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CompSym(pub Vec<usize>);

/// `Φ(c) = tan_q(q^{c^-} u) sec_q(q^n u)` for an s-composition `c` of `n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PhiSym(pub Vec<usize>);

impl fmt::Display for TanSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]", self.k, self.a, self.b)
    }
}

impl fmt::Display for SecSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{},{},{}>", self.k, self.a, self.b)
    }
}

fn fmt_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    let s: Vec<String> = parts.iter().map(usize::to_string).collect();
    write!(f, "({})", s.join(","))
}

impl fmt::Display for CompSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(f, &self.0)
    }
}

impl fmt::Display for PhiSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Φ")?;
        fmt_parts(f, &self.0)
    }
}

impl Symbol for TanSym {
    fn derive(&self) -> Vec<(usize, Self)> {
        let TanSym { k, a, b } = *self;
        let mut out = Vec::new();
        for i in 0..a {
            out.push((k, TanSym { k, a: i, b: a + b - 1 - i }));
        }
        for i in 0..b {
            out.push((k + 1, TanSym { k: k + 1, a: a + i, b: b - 1 - i }));
        }
        for i in 1..=a {
            out.push((k, TanSym { k, a: i, b: a + b + 1 - i }));
        }
        for i in 1..=b {
            out.push((k + 1, TanSym { k: k + 1, a: a + i, b: b + 1 - i }));
        }
        out
    }
}

impl Symbol for SecSym {
    fn derive(&self) -> Vec<(usize, Self)> {
        let SecSym { k, a, b } = *self;
        let mut out = Vec::new();
        // q^k only multiplies sums over 1..=a or 0..a, which are empty for
        // the start symbol with k = -1.
        let qk = || usize::try_from(k).expect("k >= 0 whenever a >= 1");
        for i in 0..a {
            out.push((qk(), SecSym { k, a: i, b: a + b - 1 - i }));
        }
        for i in 1..=a {
            out.push((qk(), SecSym { k, a: i, b: a + b + 1 - i }));
        }
        let k1 = usize::try_from(k + 1).expect("k >= -1");
        for i in 0..b {
            out.push((k1, SecSym { k: k + 1, a: a + i, b: b - 1 - i }));
        }
        for i in 1..=b + 1 {
            out.push((k1, SecSym { k: k + 1, a: a + i, b: b + 1 - i }));
        }
        out
    }
}

/// `^{(i)}c`: replaces `c_{i-1}, c_i` by `c_{i-1} + 1 + c_i`.
fn merge_at(c: &[usize], i: usize) -> Vec<usize> {
    let mut out = c[..i - 1].to_vec();
    out.push(c[i - 1] + 1 + c[i]);
    out.extend_from_slice(&c[i + 1..]);
    out
}

/// `c^{(i)}`: inserts a part 1 before `c_i`.
fn insert_one_at(c: &[usize], i: usize) -> Vec<usize> {
    let mut out = c.to_vec();
    out.insert(i, 1);
    out
}

fn composition_terms(c: &[usize], m: usize) -> Vec<(usize, Vec<usize>)> {
    let mut out = Vec::with_capacity(2 * m);
    let mut prefix = 0;
    for i in 1..=m {
        prefix += c[i - 1];
        out.push((prefix, merge_at(c, i)));
        out.push((prefix, insert_one_at(c, i)));
    }
    out
}

impl Symbol for CompSym {
    fn derive(&self) -> Vec<(usize, Self)> {
        let m = self.0.len() - 1;
        composition_terms(&self.0, m)
            .into_iter()
            .map(|(e, c)| (e, CompSym(c)))
            .collect()
    }
}

impl Symbol for PhiSym {
    fn derive(&self) -> Vec<(usize, Self)> {
        let c = &self.0;
        let n: usize = c.iter().sum();
        let m = c.len() - 2;
        let mut out: Vec<_> = composition_terms(c, m)
            .into_iter()
            .map(|(e, c)| (e, PhiSym(c)))
            .collect();
        out.push((n, PhiSym(insert_one_at(c, m + 1))));
        out
    }
}

/// A finite sum `Σ p_s(q) s` with no zero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct FormalSum<S> {
    terms: BTreeMap<S, QPoly>,
}

impl<S: Symbol> FormalSum<S> {
    pub fn single(s: S) -> Self {
        FormalSum {
            terms: BTreeMap::from([(s, QPoly::one())]),
        }
    }

    pub fn add_term(&mut self, s: S, p: &QPoly) {
        if p.is_zero() {
            return;
        }
        let slot = self.terms.entry(s.clone()).or_default();
        *slot += p;
        if slot.is_zero() {
            self.terms.remove(&s);
        }
    }

    pub fn coeff(&self, s: &S) -> QPoly {
        self.terms.get(s).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&S, &QPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Applies `D_q` term by term.
    pub fn derive(&self) -> Self {
        let mut out = FormalSum {
            terms: BTreeMap::new(),
        };
        for (s, p) in &self.terms {
            for (e, t) in s.derive() {
                out.add_term(t, &p.shift(e));
            }
        }
        out
    }

    /// The sums `D_q^j s` for `0 <= j <= n`.
    pub fn derivatives(s: S, n: usize) -> Vec<Self> {
        let mut out = vec![FormalSum::single(s)];
        for _ in 0..n {
            let next = out.last().expect("nonempty").derive();
            out.push(next);
        }
        out
    }
}

impl<S: Symbol> fmt::Display for FormalSum<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (s, p)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({p}){s}")?;
        }
        Ok(())
    }
}

impl<S: Symbol> fmt::Debug for FormalSum<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FormalSum[{self}]")
    }
}

/// `D_q^n [0,1,0]`, i.e. `D_q^n tan_q(u)`.
pub fn rewrite_tan(n: usize) -> FormalSum<TanSym> {
    FormalSum::derivatives(TanSym { k: 0, a: 1, b: 0 }, n).pop().expect("nonempty")
}

/// `D_q^n <-1,0,0>`, i.e. `D_q^n sec_q(u)`.
pub fn rewrite_sec(n: usize) -> FormalSum<SecSym> {
    FormalSum::derivatives(SecSym { k: -1, a: 0, b: 0 }, n).pop().expect("nonempty")
}

/// `D_q^n tan_q(q^{(0,0)} u)`.
pub fn rewrite_comp_tan(n: usize) -> FormalSum<CompSym> {
    FormalSum::derivatives(CompSym(vec![0, 0]), n).pop().expect("nonempty")
}

/// `D_q^n Φ((0,0))`, i.e. `D_q^n sec_q(u)` in composition symbols.
pub fn rewrite_comp_sec(n: usize) -> FormalSum<PhiSym> {
    FormalSum::derivatives(PhiSym(vec![0, 0]), n).pop().expect("nonempty")
}

/// The coefficients of `D_q^n [0,1,0]` for `n <= n_max`, as an A table.
pub fn rewrite_a_table(n_max: usize) -> TripleTable {
    let mut t = TripleTable::new(TripleKind::A, n_max);
    let sums = FormalSum::derivatives(TanSym { k: 0, a: 1, b: 0 }, n_max);
    for (n, sum) in sums.iter().enumerate() {
        for (s, p) in sum.terms() {
            t.add(TripleKey::new(n, s.k as i64, s.a, s.b), p);
        }
    }
    t
}

/// The coefficients of `D_q^n <-1,0,0>` for `n <= n_max`, as a B table.
pub fn rewrite_b_table(n_max: usize) -> TripleTable {
    let mut t = TripleTable::new(TripleKind::B, n_max);
    let sums = FormalSum::derivatives(SecSym { k: -1, a: 0, b: 0 }, n_max);
    for (n, sum) in sums.iter().enumerate() {
        for (s, p) in sum.terms() {
            t.add(TripleKey::new(n, s.k, s.a, s.b), p);
        }
    }
    t
}

fn comp_table<S: Symbol>(sums: &[FormalSum<S>], parts: impl Fn(&S) -> &[usize]) -> CompTable {
    let mut t = CompTable::new(sums.len() - 1);
    for sum in sums {
        for (s, p) in sum.terms() {
            let c = TComposition::new(parts(s).to_vec())
                .expect("the rewrite rules stay inside the t-compositions");
            t.add(c, p);
        }
    }
    t
}

/// The coefficients of `D_q^n tan_q(q^{(0,0)} u)` for `n <= n_max`.
pub fn rewrite_ac_table(n_max: usize) -> CompTable {
    comp_table(&FormalSum::derivatives(CompSym(vec![0, 0]), n_max), |s| &s.0)
}

/// The coefficients of `D_q^n Φ((0,0))` for `n <= n_max`; keyed by
/// s-compositions only.
pub fn rewrite_phi_table(n_max: usize) -> CompTable {
    comp_table(&FormalSum::derivatives(PhiSym(vec![0, 0]), n_max), |s| &s.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> QPoly {
        s.parse().unwrap()
    }

    #[test]
    fn worked_iterations() {
        assert_eq!(rewrite_tan(2).coeff(&TanSym { k: 1, a: 2, b: 1 }), p("q"));
        assert_eq!(rewrite_sec(3).coeff(&SecSym { k: 1, a: 1, b: 0 }), p("2q+q^2"));
        assert_eq!(
            rewrite_comp_tan(3).coeff(&CompSym(vec![0, 1, 1, 1, 0])),
            p("(1+q)(1+q+q^2)")
        );
        let d2 = rewrite_comp_tan(2);
        assert_eq!(d2.coeff(&CompSym(vec![2, 0])), QPoly::one());
        assert_eq!(d2.coeff(&CompSym(vec![0, 2])), p("q"));
        assert_eq!(d2.coeff(&CompSym(vec![0, 1, 1, 0])), p("1+q"));
        assert_eq!(d2.len(), 3);
    }

    #[test]
    fn first_derivatives() {
        let d = rewrite_comp_tan(1);
        assert_eq!(d.coeff(&CompSym(vec![1])), QPoly::one());
        assert_eq!(d.coeff(&CompSym(vec![0, 1, 0])), QPoly::one());
        let s = rewrite_comp_sec(1);
        assert_eq!(s.len(), 1);
        assert_eq!(s.coeff(&PhiSym(vec![0, 1, 0])), QPoly::one());
        let s = rewrite_sec(1);
        assert_eq!(s.coeff(&SecSym { k: 0, a: 1, b: 0 }), QPoly::one());
        assert_eq!(rewrite_sec(0).to_string(), "(1)<-1,0,0>");
    }

    #[test]
    fn engines_agree_with_recurrences() {
        use super::super::recur::{a_table, ac_table, b_table};
        assert_eq!(rewrite_a_table(6), a_table(6));
        assert_eq!(rewrite_b_table(6), b_table(6));
        assert_eq!(rewrite_ac_table(6), ac_table(6));
        let rec = ac_table(6);
        let phi = rewrite_phi_table(6);
        for n in 0..=6 {
            for (c, poly) in phi.row(n) {
                assert!(c.is_s_composition(), "{c}");
                assert_eq!(poly, &rec.get(c), "{c}");
            }
        }
    }
}
