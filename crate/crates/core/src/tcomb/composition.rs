use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A t-composition `(c_0, ..., c_m)`: for `m = 0` the single part is odd;
/// otherwise `c_0` and `c_m` are even and the interior parts are odd.
/// The empty composition of 0 is `(0, 0)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "CompRepr", into = "CompRepr")]
pub struct TComposition {
    parts: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct CompRepr {
    parts: Vec<usize>,
}

impl TryFrom<CompRepr> for TComposition {
    type Error = Error;
    fn try_from(r: CompRepr) -> Result<Self> {
        TComposition::new(r.parts)
    }
}

impl From<TComposition> for CompRepr {
    fn from(c: TComposition) -> Self {
        CompRepr { parts: c.parts }
    }
}

fn is_t_composition(parts: &[usize]) -> bool {
    match parts {
        [] => false,
        [c] => c % 2 == 1,
        [first, interior @ .., last] => {
            first % 2 == 0 && last % 2 == 0 && interior.iter().all(|c| c % 2 == 1)
        }
    }
}

impl TComposition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if !is_t_composition(&parts) {
            return Err(Error::Invalid(format!("{parts:?} is not a t-composition")));
        }
        Ok(TComposition { parts })
    }

    /// The empty composition `(0, 0)`.
    pub fn empty() -> Self {
        TComposition { parts: vec![0, 0] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `μc`: the number of parts minus one.
    pub fn mu(&self) -> usize {
        self.parts.len() - 1
    }

    /// Whether the last part is 0 (and `m >= 1`).
    pub fn is_s_composition(&self) -> bool {
        self.mu() >= 1 && self.parts.last() == Some(&0)
    }

    /// `c^- = (c_0, ..., c_{m-1})`, a plain sequence of parts.
    pub fn reduced(&self) -> &[usize] {
        &self.parts[..self.parts.len() - 1]
    }

    /// `ρc`: the parts in reverse order.
    pub fn mirror(&self) -> Self {
        TComposition {
            parts: self.parts.iter().rev().copied().collect(),
        }
    }
}

impl fmt::Display for TComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().join(","))
    }
}

impl fmt::Debug for TComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TComposition{self}")
    }
}

fn extend(prefix: &mut Vec<usize>, remaining: usize, out: &mut Vec<TComposition>) {
    if remaining % 2 == 0 {
        let mut parts = prefix.clone();
        parts.push(remaining);
        out.push(TComposition { parts });
    }
    for odd in (1..=remaining).step_by(2) {
        prefix.push(odd);
        extend(prefix, remaining - odd, out);
        prefix.pop();
    }
}

/// The set `Θ_n`, ordered by `μ` and then lexicographically.
pub fn enumerate_t_compositions(n: usize) -> Vec<TComposition> {
    let mut out = Vec::new();
    if n % 2 == 1 {
        out.push(TComposition { parts: vec![n] });
    }
    for first in (0..=n).step_by(2) {
        let mut prefix = vec![first];
        extend(&mut prefix, n - first, &mut out);
    }
    out.sort_by(|a, b| (a.mu(), &a.parts).cmp(&(b.mu(), &b.parts)));
    out
}

/// Members of `Θ_n` with `μc = m`.
pub fn filter_by_mu(n: usize, m: usize) -> Vec<TComposition> {
    enumerate_t_compositions(n)
        .into_iter()
        .filter(|c| c.mu() == m)
        .collect()
}

/// `Θ_n^-`: members of `Θ_n` ending in a zero part.
pub fn s_compositions(n: usize) -> Vec<TComposition> {
    enumerate_t_compositions(n)
        .into_iter()
        .filter(TComposition::is_s_composition)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(p: &[usize]) -> TComposition {
        TComposition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn small_sets() {
        assert_eq!(enumerate_t_compositions(0), vec![TComposition::empty()]);
        let theta3 = enumerate_t_compositions(3);
        let expected = [
            comp(&[3]),
            comp(&[0, 1, 2]),
            comp(&[0, 3, 0]),
            comp(&[2, 1, 0]),
            comp(&[0, 1, 1, 1, 0]),
        ];
        assert_eq!(theta3, expected);
        assert_eq!(enumerate_t_compositions(4).len(), 8);
        assert_eq!(s_compositions(3).len(), 3);
        assert_eq!(filter_by_mu(4, 1).len(), 3);
    }

    #[test]
    fn validation() {
        assert!(TComposition::new(vec![2]).is_err());
        assert!(TComposition::new(vec![0]).is_err());
        assert!(TComposition::new(vec![1, 1]).is_err());
        assert!(TComposition::new(vec![0, 2, 0]).is_err());
        assert!(TComposition::new(vec![]).is_err());
        assert_eq!(comp(&[2, 1, 0]).mirror(), comp(&[0, 1, 2]));
        assert_eq!(comp(&[2, 1, 0]).reduced(), &[2, 1]);
    }

    #[test]
    fn json_shape() {
        let c = comp(&[2, 1, 0]);
        assert_eq!(serde_json::to_string(&c).unwrap(), r#"{"parts":[2,1,0]}"#);
        assert!(serde_json::from_str::<TComposition>(r#"{"parts":[2,1]}"#).is_err());
    }
}
