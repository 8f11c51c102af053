use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::composition::{enumerate_t_compositions, TComposition};
use crate::error::{Error, Result};
use crate::permstats::{self, is_falling_alternating, is_rising_alternating, Permutation};

/// A t-permutation `(w_0, ..., w_m)`: the concatenation is a permutation
/// of `1..=n`; for `m = 0`, `w_0` is rising alternating of odd length;
/// otherwise `w_0` is rising alternating and `w_m` falling alternating,
/// both of even length, and the interior words are falling alternating of
/// odd length.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TPermRepr", into = "TPermRepr")]
pub struct TPermutation {
    components: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct TPermRepr {
    components: Vec<Vec<usize>>,
}

impl TryFrom<TPermRepr> for TPermutation {
    type Error = Error;
    fn try_from(r: TPermRepr) -> Result<Self> {
        TPermutation::new(r.components)
    }
}

impl From<TPermutation> for TPermRepr {
    fn from(w: TPermutation) -> Self {
        TPermRepr {
            components: w.components,
        }
    }
}

fn components_ok<W: AsRef<[usize]>>(components: &[W]) -> bool {
    match components {
        [] => false,
        [w] => w.as_ref().len() % 2 == 1 && is_rising_alternating(w.as_ref()),
        [first, interior @ .., last] => {
            let (first, last) = (first.as_ref(), last.as_ref());
            first.len() % 2 == 0
                && is_rising_alternating(first)
                && last.len() % 2 == 0
                && is_falling_alternating(last)
                && interior.iter().all(|w| {
                    let w = w.as_ref();
                    w.len() % 2 == 1 && is_falling_alternating(w)
                })
        }
    }
}

/// Which of the two bijections of the insertion step produced a
/// t-permutation: `Δ*` leaves `1` alone in an interior component, `*Δ`
/// does not.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InsertionKind {
    First,
    Second,
}

/// The statistics carried by a t-permutation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TStats {
    pub lambda: TComposition,
    pub mu: usize,
    /// Index of the component containing 1; `None` when `n = 0`.
    pub min: Option<usize>,
    pub ides: usize,
    pub imaj: usize,
    pub inv: usize,
}

impl TPermutation {
    pub fn new(components: Vec<Vec<usize>>) -> Result<Self> {
        let word: Vec<usize> = components.concat();
        Permutation::new(word)?;
        if !components_ok(&components) {
            return Err(Error::Invalid(format!(
                "{components:?} violates the alternating or parity conditions"
            )));
        }
        Ok(TPermutation { components })
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn n(&self) -> usize {
        self.components.iter().map(Vec::len).sum()
    }

    pub fn mu(&self) -> usize {
        self.components.len() - 1
    }

    /// The concatenation `w_0 w_1 ... w_m`.
    pub fn word(&self) -> Vec<usize> {
        self.components.concat()
    }

    /// `Λw`: the component lengths.
    pub fn lambda(&self) -> TComposition {
        TComposition::new(self.components.iter().map(Vec::len).collect())
            .expect("component lengths of a t-permutation form a t-composition")
    }

    pub fn min(&self) -> Option<usize> {
        self.components.iter().position(|w| w.contains(&1))
    }

    pub fn stats(&self) -> TStats {
        let word = self.word();
        let s = permstats::Stats::of(&word);
        TStats {
            lambda: self.lambda(),
            mu: self.mu(),
            min: self.min(),
            ides: s.ides,
            imaj: s.imaj,
            inv: s.inv,
        }
    }

    fn incremented(&self) -> Vec<Vec<usize>> {
        self.components
            .iter()
            .map(|w| w.iter().map(|x| x + 1).collect())
            .collect()
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.mu() {
            return Err(Error::Usage(format!(
                "insertion index {i} outside 1..={}",
                self.mu()
            )));
        }
        Ok(())
    }

    /// `Δ*(i, w)`: increments every letter and inserts the word `1` as a
    /// new component before `w_i`.
    pub fn delta_star(&self, i: usize) -> Result<Self> {
        self.check_index(i)?;
        let mut comps = self.incremented();
        comps.insert(i, vec![1]);
        Ok(TPermutation { components: comps })
    }

    /// `*Δ(i, w)`: increments every letter and joins `w_{i-1}` and `w_i`
    /// around the letter `1`.
    pub fn star_delta(&self, i: usize) -> Result<Self> {
        self.check_index(i)?;
        let mut comps = self.incremented();
        let right = comps.remove(i);
        let left = &mut comps[i - 1];
        left.push(1);
        left.extend(right);
        Ok(TPermutation { components: comps })
    }

    /// Inverts whichever of `Δ*` / `*Δ` produced `self`, returning the kind,
    /// the index `i` and the original t-permutation.
    pub fn undo_insertion(&self) -> Result<(InsertionKind, usize, TPermutation)> {
        let a = self
            .min()
            .ok_or_else(|| Error::Usage("the empty t-permutation has no letter 1".into()))?;
        let mut comps = self.components.clone();
        // Δ* only creates interior components.
        let kind = if comps[a] == [1] && a > 0 && a + 1 < comps.len() {
            comps.remove(a);
            InsertionKind::First
        } else {
            let at = comps[a].iter().position(|&x| x == 1).expect("min found 1");
            let right = comps[a].split_off(at + 1);
            comps[a].pop();
            comps.insert(a + 1, right);
            InsertionKind::Second
        };
        let i = match kind {
            InsertionKind::First => a,
            InsertionKind::Second => a + 1,
        };
        for w in &mut comps {
            for x in w.iter_mut() {
                *x -= 1;
            }
        }
        Ok((kind, i, TPermutation::new(comps)?))
    }

    /// Applies `ψ` to the concatenation and cuts the result at the same
    /// component lengths.
    pub fn psi(&self) -> Self {
        let word = Permutation::new(self.word())
            .expect("concatenation is a permutation")
            .psi();
        let mut rest = word.values();
        let components = self
            .components
            .iter()
            .map(|w| {
                let (head, tail) = rest.split_at(w.len());
                rest = tail;
                head.to_vec()
            })
            .collect();
        TPermutation { components }
    }
}

impl fmt::Display for TPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self.components.iter().map(|w| {
            if w.is_empty() {
                "ε".to_string()
            } else {
                w.iter().join(" ")
            }
        });
        write!(f, "({})", parts.format(", "))
    }
}

impl fmt::Debug for TPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TPermutation{self}")
    }
}

/// Cuts `word` by the parts of `c`, keeping the result if it is a
/// t-permutation.
pub fn cut(word: &[usize], c: &TComposition) -> Option<TPermutation> {
    let mut rest = word;
    let mut slices: Vec<&[usize]> = Vec::with_capacity(c.parts().len());
    for &len in c.parts() {
        let (head, tail) = rest.split_at(len);
        rest = tail;
        slices.push(head);
    }
    components_ok(&slices).then(|| TPermutation {
        components: slices.into_iter().map(<[usize]>::to_vec).collect(),
    })
}

/// All t-permutations of order `n`, obtained by cutting each permutation of
/// `1..=n` (lexicographic order) at each member of `Θ_n`.
///
/// Fails with [`Error::BoundExceeded`] when `n > bound`.
pub fn enumerate_t_permutations(
    n: usize,
    bound: usize,
) -> Result<impl Iterator<Item = TPermutation>> {
    if n > bound {
        return Err(Error::BoundExceeded { n, bound });
    }
    let comps = enumerate_t_compositions(n);
    Ok(permstats::enumerate(n).flat_map(move |p| {
        comps
            .iter()
            .filter_map(|c| cut(p.values(), c))
            .collect::<Vec<_>>()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tp(c: &[&[usize]]) -> TPermutation {
        TPermutation::new(c.iter().map(|w| w.to_vec()).collect()).unwrap()
    }

    fn example() -> TPermutation {
        tp(&[&[4, 5], &[11, 1, 3], &[10, 7, 9], &[6], &[8, 2]])
    }

    #[test]
    fn worked_statistics() {
        let s = example().stats();
        assert_eq!((s.ides, s.imaj, s.inv, s.min), (6, 38, 27, Some(1)));
        let s = tp(&[&[], &[1], &[]]).stats();
        assert_eq!((s.mu, s.min, s.ides, s.imaj, s.inv), (2, Some(1), 0, 0, 0));
        let s = tp(&[&[1, 3, 2]]).stats();
        assert_eq!((s.lambda.parts(), s.mu, s.imaj), (&[3][..], 0, 2));
    }

    #[test]
    fn undo_joined_empty_pair() {
        let w = tp(&[&[], &[]]);
        let v = w.star_delta(1).unwrap();
        assert_eq!(v, tp(&[&[1]]));
        assert_eq!(v.undo_insertion().unwrap(), (InsertionKind::Second, 1, w));
    }

    #[test]
    fn insertion_examples() {
        let w = example();
        let d = w.delta_star(2).unwrap();
        assert_eq!(d, tp(&[&[5, 6], &[12, 2, 4], &[1], &[11, 8, 10], &[7], &[9, 3]]));
        let s = d.stats();
        assert_eq!((s.ides, s.imaj, s.min, s.inv), (7, 45, Some(2), 32));
        let e = w.star_delta(1).unwrap();
        assert_eq!(e, tp(&[&[5, 6, 1, 12, 2, 4], &[11, 8, 10], &[7], &[9, 3]]));
        let s = e.stats();
        assert_eq!((s.ides, s.imaj, s.min, s.inv), (6, 44, Some(0), 29));
        assert_eq!(d.undo_insertion().unwrap(), (InsertionKind::First, 2, w.clone()));
        assert_eq!(e.undo_insertion().unwrap(), (InsertionKind::Second, 1, w.clone()));
        assert!(w.delta_star(0).is_err());
        assert!(w.star_delta(5).is_err());
    }

    #[test]
    fn small_enumerations() {
        let t0: Vec<_> = enumerate_t_permutations(0, 8).unwrap().collect();
        assert_eq!(t0, vec![tp(&[&[], &[]])]);
        let t2: Vec<_> = enumerate_t_permutations(2, 8).unwrap().collect();
        assert_eq!(t2.len(), 4);
        for w in [
            tp(&[&[], &[2, 1]]),
            tp(&[&[1, 2], &[]]),
            tp(&[&[], &[2], &[1], &[]]),
            tp(&[&[], &[1], &[2], &[]]),
        ] {
            assert!(t2.contains(&w), "{w}");
        }
        let by_mu = |m| {
            enumerate_t_permutations(3, 8)
                .unwrap()
                .filter(|w| w.mu() == m)
                .count()
        };
        assert_eq!((by_mu(0), by_mu(2), by_mu(4)), (2, 8, 6));
        assert!(matches!(
            enumerate_t_permutations(9, 8).map(|_| ()),
            Err(Error::BoundExceeded { n: 9, bound: 8 })
        ));
    }

    #[test]
    fn psi_on_t_permutations() {
        let w = tp(&[&[], &[6], &[4], &[9, 2, 7], &[5, 1, 8, 3]]);
        assert_eq!(w.psi(), tp(&[&[], &[5], &[3], &[9, 1, 7], &[4, 2, 8, 6]]));
    }

    #[test]
    fn json_shape() {
        let w = tp(&[&[], &[2], &[1], &[]]);
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(s, r#"{"components":[[],[2],[1],[]]}"#);
        assert_eq!(serde_json::from_str::<TPermutation>(&s).unwrap(), w);
        assert!(serde_json::from_str::<TPermutation>(r#"{"components":[[1,2]]}"#).is_err());
    }
}
