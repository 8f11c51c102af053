//! Disk cache of the recurrence tables: one JSON file per family and row
//! count, holding a schema version and a SHA-256 of the payload.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use log::{debug, warn};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use qderiv_core::derivtables::{a_table, ac_table, b_table, CompTable, TripleTable};

pub const SCHEMA_VERSION: u64 = 1;

fn digest(payload: &Value) -> String {
    let bytes = serde_json::to_vec(payload).expect("JSON value serializes");
    hex::encode(Sha256::digest(&bytes))
}

/// The on-disk document for `payload`; `export` writes the same shape.
pub fn envelope(family: &str, n_max: usize, payload: Value) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "family": family,
        "n_max": n_max,
        "sha256": digest(&payload),
        "payload": payload,
    })
}

/// The payload of a well-formed envelope for `family` and `n_max`.
pub fn open_envelope(doc: &Value, family: &str, n_max: usize) -> Result<Value, String> {
    let field = |k: &str| doc.get(k).ok_or_else(|| format!("missing {k}"));
    if field("schema_version")?.as_u64() != Some(SCHEMA_VERSION) {
        return Err("schema version mismatch".into());
    }
    if field("family")?.as_str() != Some(family) {
        return Err("family mismatch".into());
    }
    if field("n_max")?.as_u64() != Some(n_max as u64) {
        return Err("n_max mismatch".into());
    }
    let payload = field("payload")?;
    if field("sha256")?.as_str() != Some(digest(payload).as_str()) {
        return Err("content hash mismatch".into());
    }
    Ok(payload.clone())
}

pub fn write_atomically(path: &Path, contents: &[u8]) -> io::Result<()> {
    let tmp = path.with_extension("json.tmp");
    fs::write(&tmp, contents)?;
    fs::rename(&tmp, path)
}

/// Loads tables from `dir` when present and valid, otherwise computes and
/// stores them. Without a directory every call computes.
pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    pub fn new(dir: Option<PathBuf>) -> io::Result<Self> {
        if let Some(d) = &dir {
            fs::create_dir_all(d)?;
        }
        Ok(Cache { dir })
    }

    pub fn is_persistent(&self) -> bool {
        self.dir.is_some()
    }

    pub fn path(&self, family: &str, n_max: usize) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{family}-{n_max}.json")))
    }

    fn load<T>(
        &self,
        family: &str,
        n_max: usize,
        decode: impl Fn(&Value) -> Option<T>,
        encode: impl Fn(&T) -> Value,
        compute: impl Fn() -> T,
    ) -> T {
        let Some(path) = self.path(family, n_max) else {
            return compute();
        };
        let cached = fs::read(&path).ok().map(|bytes| {
            serde_json::from_slice::<Value>(&bytes)
                .map_err(|e| e.to_string())
                .and_then(|doc| open_envelope(&doc, family, n_max))
                .and_then(|payload| decode(&payload).ok_or_else(|| "payload does not decode".to_string()))
        });
        match cached {
            Some(Ok(t)) => {
                debug!("cache hit {}", path.display());
                return t;
            }
            Some(Err(why)) => warn!("recomputing {}: {why}", path.display()),
            None => debug!("cache miss {}", path.display()),
        }
        let t = compute();
        let doc = envelope(family, n_max, encode(&t));
        let bytes = serde_json::to_vec(&doc).expect("JSON value serializes");
        if let Err(e) = write_atomically(&path, &bytes) {
            warn!("cannot write {}: {e}", path.display());
        }
        t
    }

    pub fn a(&self, n_max: usize) -> TripleTable {
        self.triple("A", n_max, a_table)
    }

    pub fn b(&self, n_max: usize) -> TripleTable {
        self.triple("B", n_max, b_table)
    }

    fn triple(&self, family: &str, n_max: usize, compute: fn(usize) -> TripleTable) -> TripleTable {
        self.load(
            family,
            n_max,
            |v| {
                TripleTable::from_json(v)
                    .ok()
                    .filter(|t| t.kind().name() == family && t.n_max() == n_max)
            },
            TripleTable::to_json,
            || compute(n_max),
        )
    }

    pub fn ac(&self, n_max: usize) -> CompTable {
        self.load(
            "Ac",
            n_max,
            |v| CompTable::from_json(v).ok().filter(|t| t.n_max() == n_max),
            CompTable::to_json,
            || ac_table(n_max),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(Some(dir.path().to_path_buf())).unwrap();
        let fresh = cache.a(3);
        let path = cache.path("A", 3).unwrap();
        assert!(path.exists());
        assert_eq!(cache.a(3), fresh);

        // A tampered payload with a stale hash is recomputed and rewritten.
        let mut doc: Value = serde_json::from_slice(&fs::read(&path).unwrap()).unwrap();
        doc["payload"]["entries"][0]["poly"] = json!({"coeffs": ["7"]});
        fs::write(&path, serde_json::to_vec(&doc).unwrap()).unwrap();
        assert_eq!(cache.a(3), fresh);
        let doc: Value = serde_json::from_slice(&fs::read(&path).unwrap()).unwrap();
        assert!(open_envelope(&doc, "A", 3).is_ok());

        fs::write(&path, b"not json").unwrap();
        assert_eq!(cache.a(3), fresh);
    }

    #[test]
    fn envelope_checks_identity() {
        let doc = envelope("B", 2, json!({"x": 1}));
        assert!(open_envelope(&doc, "B", 2).is_ok());
        assert!(open_envelope(&doc, "A", 2).is_err());
        assert!(open_envelope(&doc, "B", 3).is_err());
    }
}
