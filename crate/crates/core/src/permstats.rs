//! Permutations and words with their descent statistics, the alternating
//! predicates, and the bijections `i`, `ρ`, `γ`, Foata's `Φ` and
//! `ψ = i∘Φ∘i`.
//!
//! Word-level functions accept any slice of distinct positive letters; the
//! inverse-descent statistics assume the letters are `1..=n`.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Number of pairs `i < j` with `w[i] > w[j]`.
pub fn inv(w: &[usize]) -> usize {
    (0..w.len())
        .map(|i| w[i + 1..].iter().filter(|&&y| y < w[i]).count())
        .sum()
}

/// Descent positions (1-based): `{i : w(i) > w(i+1)}`.
pub fn ligne(w: &[usize]) -> Vec<usize> {
    (1..w.len()).filter(|&i| w[i - 1] > w[i]).collect()
}

pub fn maj(w: &[usize]) -> usize {
    ligne(w).into_iter().sum()
}

/// Letters `x` such that `x + 1` occurs to the left of `x`, in increasing
/// order. For a permutation this is the descent set of its inverse.
pub fn iligne(w: &[usize]) -> Vec<usize> {
    let Some(&max) = w.iter().max() else {
        return Vec::new();
    };
    let mut pos = vec![usize::MAX; max + 2];
    for (i, &x) in w.iter().enumerate() {
        pos[x] = i;
    }
    let mut out: Vec<usize> = w
        .iter()
        .copied()
        .filter(|&x| pos[x + 1] != usize::MAX && pos[x + 1] < pos[x])
        .collect();
    out.sort_unstable();
    out
}

pub fn ides(w: &[usize]) -> usize {
    iligne(w).len()
}

pub fn imaj(w: &[usize]) -> usize {
    iligne(w).into_iter().sum()
}

/// `y1 < y2 > y3 < ...`; true for words of length at most 1.
pub fn is_rising_alternating(w: &[usize]) -> bool {
    w.windows(2)
        .enumerate()
        .all(|(i, p)| (i % 2 == 0) == (p[0] < p[1]))
}

/// `y1 > y2 < y3 > ...`; true for words of length at most 1.
pub fn is_falling_alternating(w: &[usize]) -> bool {
    w.windows(2)
        .enumerate()
        .all(|(i, p)| (i % 2 == 0) == (p[0] > p[1]))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    pub inv: usize,
    pub ligne: Vec<usize>,
    pub iligne: Vec<usize>,
    pub des: usize,
    pub ides: usize,
    pub maj: usize,
    pub imaj: usize,
}

impl Stats {
    pub fn of(w: &[usize]) -> Stats {
        let ligne = ligne(w);
        let iligne = iligne(w);
        Stats {
            inv: inv(w),
            des: ligne.len(),
            ides: iligne.len(),
            maj: ligne.iter().sum(),
            imaj: iligne.iter().sum(),
            ligne,
            iligne,
        }
    }
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &x in &values {
            if x == 0 || x > n || seen[x] {
                return Err(Error::Invalid(format!("{values:?} is not a permutation of 1..={n}")));
            }
            seen[x] = true;
        }
        Ok(Permutation(values))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn stats(&self) -> Stats {
        Stats::of(&self.0)
    }

    pub fn inverse(&self) -> Self {
        let mut out = vec![0; self.len()];
        for (i, &x) in self.0.iter().enumerate() {
            out[x - 1] = i + 1;
        }
        Permutation(out)
    }

    /// `ρσ(i) = σ(n+1-i)`.
    pub fn mirror_rho(&self) -> Self {
        Permutation(self.0.iter().rev().copied().collect())
    }

    /// `γσ(i) = n+1-σ(i)`.
    pub fn complement_gamma(&self) -> Self {
        let n = self.len();
        Permutation(self.0.iter().map(|&x| n + 1 - x).collect())
    }

    /// Foata's second fundamental transformation, with `maj σ = inv Φ(σ)`
    /// and `iligne Φ(σ) = iligne σ`.
    pub fn foata_phi(&self) -> Self {
        let mut v: Vec<usize> = Vec::with_capacity(self.len());
        for &a in &self.0 {
            if let Some(&last) = v.last() {
                let cut_below = last < a;
                let mut next = Vec::with_capacity(v.len() + 1);
                let mut block_start = 0;
                for (i, &x) in v.iter().enumerate() {
                    if (x < a) == cut_below {
                        let block = &v[block_start..=i];
                        next.push(x);
                        next.extend_from_slice(&block[..block.len() - 1]);
                        block_start = i + 1;
                    }
                }
                v = next;
            }
            v.push(a);
        }
        Permutation(v)
    }

    /// `ψ = i∘Φ∘i`, with `ligne ψ(σ) = ligne σ` and `inv ψ(σ) = imaj σ`.
    pub fn psi(&self) -> Self {
        self.inverse().foata_phi().inverse()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(" "))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// All permutations of `1..=n` in lexicographic order.
pub fn enumerate(n: usize) -> impl Iterator<Item = Permutation> {
    (1..=n).permutations(n).map(Permutation)
}

/// Rising alternating permutations of `1..=n`, lexicographically.
pub fn enumerate_ra(n: usize) -> impl Iterator<Item = Permutation> {
    enumerate(n).filter(|p| is_rising_alternating(p.values()))
}

/// Falling alternating permutations of `1..=n`, lexicographically.
pub fn enumerate_fa(n: usize) -> impl Iterator<Item = Permutation> {
    enumerate(n).filter(|p| is_falling_alternating(p.values()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn worked_statistics() {
        let s = Stats::of(&[4, 5, 11, 1, 3, 10, 7, 9, 6, 8, 2]);
        assert_eq!((s.ides, s.imaj, s.inv), (6, 38, 27));
        assert_eq!(s.iligne, vec![2, 3, 6, 8, 9, 10]);
        let s = Stats::of(&[2, 3, 1]);
        assert_eq!((s.iligne.clone(), s.imaj, s.ides), (vec![1], 1, 1));
        let s = Stats::of(&[1, 2, 3, 4]);
        assert_eq!(s, Stats::of(&[]));
    }

    #[test]
    fn alternation() {
        assert!(is_rising_alternating(&[1, 3, 2]));
        assert!(is_rising_alternating(&[]) && is_falling_alternating(&[]));
        assert!(is_rising_alternating(&[1, 2]) && !is_falling_alternating(&[1, 2]));
        assert_eq!(enumerate_ra(3).count(), 2);
        assert_eq!(enumerate_fa(4).count(), 5);
        assert_eq!(enumerate_ra(1).count(), 1);
    }

    #[test]
    fn inverse_and_involutions() {
        let s = perm(&[6, 4, 9, 2, 7, 5, 1, 8, 3]);
        assert_eq!(s.inverse(), perm(&[7, 4, 9, 2, 6, 1, 5, 8, 3]));
        assert_eq!(Permutation::identity(3).complement_gamma(), perm(&[3, 2, 1]));
        assert_eq!(s.mirror_rho().mirror_rho(), s);
    }

    #[test]
    fn foata_worked_examples() {
        let s = perm(&[7, 4, 9, 2, 6, 1, 5, 8, 3]);
        assert_eq!(s.foata_phi(), perm(&[4, 7, 2, 6, 1, 9, 5, 8, 3]));
        assert_eq!(perm(&[1]).foata_phi(), perm(&[1]));
        let s = perm(&[6, 4, 9, 2, 7, 5, 1, 8, 3]);
        let out = s.psi();
        assert_eq!(out, perm(&[5, 3, 9, 1, 7, 4, 2, 8, 6]));
        assert_eq!(s.stats().imaj, 17);
        assert_eq!(out.stats().inv, 17);
        assert_eq!(Permutation::identity(4).psi(), Permutation::identity(4));
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0]).is_err());
        assert!(serde_json::from_str::<Permutation>("[2,3]").is_err());
        assert_eq!(serde_json::to_string(&perm(&[2, 1])).unwrap(), "[2,1]");
    }
}
