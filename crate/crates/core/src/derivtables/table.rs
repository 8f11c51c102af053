use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{QPoly, XQPoly};
use crate::tcomb::TComposition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TripleKind {
    A,
    B,
}

impl TripleKind {
    pub fn name(self) -> &'static str {
        match self {
            TripleKind::A => "A",
            TripleKind::B => "B",
        }
    }
}

/// Index `(n, k, a, b)`; `k` is signed to host the seed `B_{0,-1,0,0}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TripleKey {
    pub n: usize,
    pub k: i64,
    pub a: usize,
    pub b: usize,
}

impl TripleKey {
    pub fn new(n: usize, k: i64, a: usize, b: usize) -> Self {
        TripleKey { n, k, a, b }
    }
}

/// `A_{n,k,a,b}(q)` or `B_{n,k,a,b}(q)` for `n <= n_max`. Absent entries
/// are zero; zero entries are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleTable {
    kind: TripleKind,
    n_max: usize,
    entries: BTreeMap<TripleKey, QPoly>,
}

#[derive(Serialize, Deserialize)]
struct TripleEntry {
    n: usize,
    k: i64,
    a: usize,
    b: usize,
    poly: QPoly,
}

#[derive(Serialize, Deserialize)]
struct TripleRepr {
    kind: String,
    n_max: usize,
    entries: Vec<TripleEntry>,
}

impl TripleTable {
    pub fn new(kind: TripleKind, n_max: usize) -> Self {
        TripleTable {
            kind,
            n_max,
            entries: BTreeMap::new(),
        }
    }

    pub fn kind(&self) -> TripleKind {
        self.kind
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn get(&self, n: usize, k: i64, a: usize, b: usize) -> QPoly {
        self.entries
            .get(&TripleKey::new(n, k, a, b))
            .cloned()
            .unwrap_or_default()
    }

    pub(crate) fn get_ref(&self, key: &TripleKey) -> Option<&QPoly> {
        self.entries.get(key)
    }

    /// Adds `p` to the entry at `key`, dropping it if the sum is zero.
    pub fn add(&mut self, key: TripleKey, p: &QPoly) {
        if p.is_zero() {
            return;
        }
        let slot = self.entries.entry(key).or_default();
        *slot += p;
        if slot.is_zero() {
            self.entries.remove(&key);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (&TripleKey, &QPoly)> {
        self.entries.iter()
    }

    pub fn row(&self, n: usize) -> impl Iterator<Item = (&TripleKey, &QPoly)> {
        self.entries
            .range(TripleKey::new(n, i64::MIN, 0, 0)..=TripleKey::new(n, i64::MAX, usize::MAX, usize::MAX))
    }

    /// Restricts to rows `n <= n_max`.
    pub fn truncated(&self, n_max: usize) -> Self {
        TripleTable {
            kind: self.kind,
            n_max: n_max.min(self.n_max),
            entries: self
                .entries
                .iter()
                .filter(|(key, _)| key.n <= n_max)
                .map(|(key, p)| (*key, p.clone()))
                .collect(),
        }
    }

    /// `Σ_{k, a+b=m} T_{n,k,a,b}(q)`, over every stored `k` (the B seed at
    /// `k = -1` included).
    pub fn aggregate(&self, n: usize, m: usize) -> QPoly {
        self.row(n)
            .filter(|(key, _)| key.a + key.b == m)
            .map(|(_, p)| p)
            .sum()
    }

    /// `Σ_m x^m` times the aggregate for `m`.
    pub fn generating_poly(&self, n: usize) -> XQPoly {
        let max_m = self.row(n).map(|(key, _)| key.a + key.b).max();
        match max_m {
            None => XQPoly::zero(),
            Some(max_m) => {
                XQPoly::from_coeffs((0..=max_m).map(|m| self.aggregate(n, m)).collect())
            }
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let repr = TripleRepr {
            kind: self.kind.name().to_string(),
            n_max: self.n_max,
            entries: self
                .entries
                .iter()
                .map(|(key, p)| TripleEntry {
                    n: key.n,
                    k: key.k,
                    a: key.a,
                    b: key.b,
                    poly: p.clone(),
                })
                .collect(),
        };
        serde_json::to_value(repr).expect("table serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let repr: TripleRepr =
            serde_json::from_value(v.clone()).map_err(|e| Error::Invalid(e.to_string()))?;
        let kind = match repr.kind.as_str() {
            "A" => TripleKind::A,
            "B" => TripleKind::B,
            other => return Err(Error::Invalid(format!("unknown triple table kind {other:?}"))),
        };
        let mut t = TripleTable::new(kind, repr.n_max);
        for e in repr.entries {
            if e.poly.is_zero() {
                return Err(Error::Invalid("zero entries are not stored".into()));
            }
            t.entries.insert(TripleKey::new(e.n, e.k, e.a, e.b), e.poly);
        }
        Ok(t)
    }
}

/// `A_{n,c}(q)` for `n <= n_max` and `c ∈ Θ_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompTable {
    n_max: usize,
    rows: BTreeMap<usize, BTreeMap<TComposition, QPoly>>,
}

#[derive(Serialize, Deserialize)]
struct CompEntry {
    n: usize,
    c: Vec<usize>,
    poly: QPoly,
}

#[derive(Serialize, Deserialize)]
struct CompRepr {
    kind: String,
    n_max: usize,
    entries: Vec<CompEntry>,
}

impl CompTable {
    pub fn new(n_max: usize) -> Self {
        CompTable {
            n_max,
            rows: BTreeMap::new(),
        }
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn get(&self, c: &TComposition) -> QPoly {
        self.rows
            .get(&c.n())
            .and_then(|row| row.get(c))
            .cloned()
            .unwrap_or_default()
    }

    /// Looks up by raw parts; anything that is not a t-composition is zero.
    pub fn get_parts(&self, parts: &[usize]) -> QPoly {
        TComposition::new(parts.to_vec())
            .map(|c| self.get(&c))
            .unwrap_or_default()
    }

    pub fn add(&mut self, c: TComposition, p: &QPoly) {
        if p.is_zero() {
            return;
        }
        let row = self.rows.entry(c.n()).or_default();
        let slot = row.entry(c.clone()).or_default();
        *slot += p;
        if slot.is_zero() {
            row.remove(&c);
            if row.is_empty() {
                self.rows.remove(&c.n());
            }
        }
    }

    /// All entries, by `n` and then by composition.
    pub fn entries(&self) -> impl Iterator<Item = (&TComposition, &QPoly)> {
        self.rows.values().flat_map(|row| row.iter())
    }

    pub fn row(&self, n: usize) -> impl Iterator<Item = (&TComposition, &QPoly)> {
        self.rows.get(&n).into_iter().flat_map(|row| row.iter())
    }

    pub fn truncated(&self, n_max: usize) -> Self {
        CompTable {
            n_max: n_max.min(self.n_max),
            rows: self
                .rows
                .range(..=n_max)
                .map(|(n, row)| (*n, row.clone()))
                .collect(),
        }
    }

    /// `Σ_{c ∈ Θ_n, μc = m} A_{n,c}(q)`.
    pub fn aggregate_mu(&self, n: usize, m: usize) -> QPoly {
        self.row(n).filter(|(c, _)| c.mu() == m).map(|(_, p)| p).sum()
    }

    /// `Σ_{c ∈ Θ_n^-, μc = m} A_{n,c}(q)`.
    pub fn aggregate_mu_s(&self, n: usize, m: usize) -> QPoly {
        self.row(n)
            .filter(|(c, _)| c.mu() == m && c.is_s_composition())
            .map(|(_, p)| p)
            .sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let repr = CompRepr {
            kind: "Ac".to_string(),
            n_max: self.n_max,
            entries: self
                .entries()
                .map(|(c, p)| CompEntry {
                    n: c.n(),
                    c: c.parts().to_vec(),
                    poly: p.clone(),
                })
                .collect(),
        };
        serde_json::to_value(repr).expect("table serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let repr: CompRepr =
            serde_json::from_value(v.clone()).map_err(|e| Error::Invalid(e.to_string()))?;
        if repr.kind != "Ac" {
            return Err(Error::Invalid(format!("unknown composition table kind {:?}", repr.kind)));
        }
        let mut t = CompTable::new(repr.n_max);
        for e in repr.entries {
            let c = TComposition::new(e.c)?;
            if c.n() != e.n || e.poly.is_zero() {
                return Err(Error::Invalid(format!("bad entry for {c}")));
            }
            t.rows.entry(e.n).or_default().insert(c, e.poly);
        }
        Ok(t)
    }
}
