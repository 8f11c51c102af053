//! Every identity as an exact equality check, producing structured reports.
//!
//! Checks share one [`Context`], which builds each table on first use and
//! is safe to read from several threads.

mod bijections;
mod fixtures;
mod identities;
mod structure;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

pub use fixtures::{CellKey, FixtureCell, FixtureTable, Fixtures};

use crate::derivtables::{
    a_table, ac_table, b_table, oracle_tables, CompTable, OracleTables, TripleTable,
};
use crate::error::Result;
use crate::series::QTanCoeffs;
use crate::special::{small_triangles, IntTriangle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Where a check first went wrong, in its fixed scan order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub at: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub params: BTreeMap<String, usize>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_discrepancy: Option<Discrepancy>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
        };
        write!(f, "{status} {} [{}]", self.id, params.join(", "))?;
        if let Some(d) = &self.first_discrepancy {
            write!(f, " at {}: expected {}, got {}", d.at, d.expected, d.actual)?;
        }
        Ok(())
    }
}

/// Collects the first mismatch seen by a check.
#[derive(Default)]
pub(crate) struct Probe {
    first: Option<Discrepancy>,
}

impl Probe {
    pub(crate) fn eq<T: PartialEq + fmt::Display>(
        &mut self,
        at: impl FnOnce() -> String,
        expected: &T,
        actual: &T,
    ) -> bool {
        if expected == actual {
            return true;
        }
        self.fail(at(), expected.to_string(), actual.to_string());
        false
    }

    pub(crate) fn holds(&mut self, at: impl FnOnce() -> String, ok: bool) -> bool {
        if !ok {
            self.fail(at(), "true".into(), "false".into());
        }
        ok
    }

    pub(crate) fn fail(&mut self, at: String, expected: String, actual: String) {
        if self.first.is_none() {
            self.first = Some(Discrepancy {
                at,
                expected,
                actual,
            });
        }
    }

    pub(crate) fn report(self, id: &str, params: &[(&str, usize)]) -> VerificationReport {
        VerificationReport {
            id: id.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            status: if self.first.is_some() {
                Status::Fail
            } else {
                Status::Pass
            },
            first_discrepancy: self.first,
        }
    }
}

/// Ranges for every family of checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    /// Series order for the derivative identities.
    pub order: usize,
    /// Largest `n` in the derivative identities.
    pub identity_n: usize,
    /// Series order for the first derivatives of tan, sec and Sec and for
    /// the q-tangent recurrences and reciprocity.
    pub trig_order: usize,
    /// Series order for the generating functions.
    pub gf_order: usize,
    /// Rows computed by recurrence and checked for support and degree.
    pub table_n: usize,
    /// Rows compared between recurrences and rewrite engines.
    pub rewrite_n: usize,
    /// Rows compared against brute-force enumeration; also the range of
    /// the product formula.
    pub brute_n: usize,
    /// Orders of the insertion sweep.
    pub sweep_n: usize,
    /// Orders of the permutation bijections, the aggregate identities,
    /// symmetry and the q = 1 bridge.
    pub perm_n: usize,
    /// Longest alternating permutations summed by `inv`; `imaj` sums stop
    /// one shorter.
    pub alt_len: usize,
    /// Rows of the Carlitz refinement check.
    pub carlitz_n: usize,
    /// Rows of the diagonal and Springer checks.
    pub special_n: usize,
    /// Largest order of the (t,q) tangent and secant numbers.
    pub tq_n: usize,
    /// Rows of the composition counts.
    pub count_n: usize,
    /// Order of the Fibonacci generating function in `u`.
    pub fib_order: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            order: 10,
            identity_n: 6,
            trig_order: 11,
            gf_order: 8,
            table_n: 12,
            rewrite_n: 10,
            brute_n: 8,
            sweep_n: 6,
            perm_n: 7,
            alt_len: 9,
            carlitz_n: 6,
            special_n: 8,
            tq_n: 7,
            count_n: 10,
            fib_order: 12,
        }
    }
}

impl Bounds {
    pub fn zero() -> Self {
        Bounds {
            order: 0,
            identity_n: 0,
            trig_order: 0,
            gf_order: 0,
            table_n: 0,
            rewrite_n: 0,
            brute_n: 0,
            sweep_n: 0,
            perm_n: 0,
            alt_len: 0,
            carlitz_n: 0,
            special_n: 0,
            tq_n: 0,
            count_n: 0,
            fib_order: 0,
        }
    }

    /// Rows needed from the recurrence tables. The fixtures need four.
    pub fn table_rows(&self) -> usize {
        [
            4,
            self.table_n,
            self.identity_n,
            self.gf_order,
            self.rewrite_n,
            self.brute_n,
            self.perm_n,
            self.carlitz_n,
            self.special_n,
            self.tq_n,
        ]
        .into_iter()
        .max()
        .expect("nonempty")
    }
}

/// Inputs shared by the checks, each built on first use.
pub struct Context {
    bounds: Bounds,
    fixtures: Fixtures,
    a: OnceLock<TripleTable>,
    b: OnceLock<TripleTable>,
    ac: OnceLock<CompTable>,
    oracle: OnceLock<Result<OracleTables>>,
    qtan: OnceLock<QTanCoeffs>,
    small: OnceLock<(IntTriangle, IntTriangle)>,
}

impl Context {
    pub fn new(bounds: Bounds, fixtures: Fixtures) -> Self {
        Context {
            bounds,
            fixtures,
            a: OnceLock::new(),
            b: OnceLock::new(),
            ac: OnceLock::new(),
            oracle: OnceLock::new(),
            qtan: OnceLock::new(),
            small: OnceLock::new(),
        }
    }

    /// Seeds the recurrence tables, for instance from a disk cache. Tables
    /// with fewer rows than the bounds need are ignored.
    pub fn with_tables(self, a: TripleTable, b: TripleTable, ac: CompTable) -> Self {
        let rows = self.bounds.table_rows();
        if a.n_max() >= rows {
            let _ = self.a.set(a.truncated(rows));
        }
        if b.n_max() >= rows {
            let _ = self.b.set(b.truncated(rows));
        }
        if ac.n_max() >= rows {
            let _ = self.ac.set(ac.truncated(rows));
        }
        self
    }

    pub fn bounds(&self) -> &Bounds {
        &self.bounds
    }

    pub fn fixtures(&self) -> &Fixtures {
        &self.fixtures
    }

    /// Replaces the fixtures, keeping every computed table.
    pub fn set_fixtures(&mut self, fixtures: Fixtures) {
        self.fixtures = fixtures;
    }

    pub fn a(&self) -> &TripleTable {
        self.a.get_or_init(|| a_table(self.bounds.table_rows()))
    }

    pub fn b(&self) -> &TripleTable {
        self.b.get_or_init(|| b_table(self.bounds.table_rows()))
    }

    pub fn ac(&self) -> &CompTable {
        self.ac.get_or_init(|| ac_table(self.bounds.table_rows()))
    }

    pub(crate) fn oracle(&self) -> &Result<OracleTables> {
        self.oracle
            .get_or_init(|| oracle_tables(self.bounds.brute_n, self.bounds.brute_n))
    }

    pub fn qtan(&self) -> &QTanCoeffs {
        self.qtan.get_or_init(|| {
            let n = self
                .bounds
                .table_rows()
                .max(self.bounds.trig_order)
                .max(self.bounds.alt_len);
            QTanCoeffs::from_series(n.max(6))
        })
    }

    pub fn small(&self) -> &(IntTriangle, IntTriangle) {
        self.small
            .get_or_init(|| small_triangles(self.bounds.table_rows().max(6)))
    }
}

/// A named check.
#[derive(Clone, Copy)]
pub struct Check {
    pub id: &'static str,
    pub description: &'static str,
    pub run: fn(&Context) -> VerificationReport,
}

impl fmt::Debug for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Check({})", self.id)
    }
}

/// Every check, in report order.
pub fn registry() -> Vec<Check> {
    let mut out = structure::fixture_checks();
    out.extend(structure::table_checks());
    out.extend(identities::checks());
    out.extend(bijections::checks());
    out.extend(structure::structural_checks());
    out.extend(structure::special_checks());
    out
}

pub fn check_ids() -> Vec<&'static str> {
    registry().iter().map(|c| c.id).collect()
}

pub fn find_check(id: &str) -> Option<Check> {
    registry().into_iter().find(|c| c.id == id)
}

/// Runs every check with the printed fixtures.
pub fn run_suite(bounds: Bounds) -> Vec<VerificationReport> {
    let ctx = Context::new(bounds, Fixtures::printed());
    registry().iter().map(|c| (c.run)(&ctx)).collect()
}

/// Runs the named checks in the given order.
pub fn run_checks(ctx: &Context, ids: &[&str]) -> std::result::Result<Vec<VerificationReport>, String> {
    ids.iter()
        .map(|id| {
            find_check(id)
                .map(|c| (c.run)(ctx))
                .ok_or_else(|| format!("unknown check id {id:?}"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::QPoly;

    fn failures(reports: &[VerificationReport]) -> Vec<String> {
        reports.iter().filter(|r| !r.passed()).map(|r| r.to_string()).collect()
    }

    #[test]
    fn default_suite_passes() {
        let reports = run_suite(Bounds::default());
        assert_eq!(reports.len(), registry().len());
        assert_eq!(failures(&reports), Vec::<String>::new());
    }

    #[test]
    fn zero_bounds_pass() {
        assert_eq!(failures(&run_suite(Bounds::zero())), Vec::<String>::new());
    }

    #[test]
    fn ids_are_unique() {
        let ids = check_ids();
        let set: std::collections::BTreeSet<_> = ids.iter().collect();
        assert_eq!(set.len(), ids.len());
        assert!(find_check("1.9").is_some());
        assert!(run_checks(&Context::new(Bounds::zero(), Fixtures::printed()), &["bogus"]).is_err());
    }

    #[test]
    fn bumped_cell_is_localized() {
        let bumped = Fixtures::printed().bumped("table2", 40, 3).unwrap();
        let cell = bumped.table("table2").unwrap().cells[40].key.to_string();
        let ctx = Context::new(Bounds::zero(), bumped);
        let reports = run_checks(&ctx, &check_ids()).unwrap();
        let failed: Vec<_> = reports.iter().filter(|r| !r.passed()).collect();
        assert_eq!(failed.len(), 1);
        assert_eq!(failed[0].id, "table2");
        assert_eq!(failed[0].first_discrepancy.as_ref().unwrap().at, cell);
    }

    #[test]
    fn report_json() {
        let mut probe = Probe::default();
        probe.eq(|| "x".into(), &QPoly::one(), &QPoly::q_pow(1));
        let r = probe.report("demo", &[("n", 2)]);
        assert_eq!(
            r.to_json_line(),
            r#"{"id":"demo","params":{"n":2},"status":"fail","first_discrepancy":{"at":"x","expected":"1","actual":"q"}}"#
        );
    }
}
