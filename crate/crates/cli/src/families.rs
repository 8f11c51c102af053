//! The families `table` and `oracle` can print.

use clap::ValueEnum;
use num_bigint::BigInt;
use serde_json::{json, Value};

use qderiv_core::derivtables::{CompTable, TripleTable};
use qderiv_core::special::{carlitz, small_triangles, springer_from_table, tq_secant, tq_tangent};
use qderiv_core::tcomb::alpha_table;

use crate::cache::Cache;
use crate::render::Rendered;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Family {
    #[value(name = "a_small")]
    ASmall,
    #[value(name = "b_small")]
    BSmall,
    #[value(name = "A")]
    A,
    #[value(name = "B")]
    B,
    #[value(name = "Ac")]
    Ac,
    #[value(name = "carlitz")]
    Carlitz,
    #[value(name = "fib")]
    Fib,
    #[value(name = "springer")]
    Springer,
    #[value(name = "tq")]
    Tq,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::ASmall => "a_small",
            Family::BSmall => "b_small",
            Family::A => "A",
            Family::B => "B",
            Family::Ac => "Ac",
            Family::Carlitz => "carlitz",
            Family::Fib => "fib",
            Family::Springer => "springer",
            Family::Tq => "tq",
        }
    }
}

/// The families with a brute-force oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OracleFamily {
    #[value(name = "A")]
    A,
    #[value(name = "B")]
    B,
    #[value(name = "Ac")]
    Ac,
}

fn ints(row: &[BigInt]) -> Vec<String> {
    row.iter().map(BigInt::to_string).collect()
}

pub fn triple(t: &TripleTable) -> Rendered {
    let records = t
        .entries()
        .map(|(key, p)| {
            vec![key.n.to_string(), key.k.to_string(), key.a.to_string(), key.b.to_string(), p.to_string()]
        })
        .collect();
    Rendered { headers: vec!["n", "k", "a", "b", "poly"], records, grid: None, json: t.to_json() }
}

pub fn comp(t: &CompTable) -> Rendered {
    let records = t
        .entries()
        .map(|(c, p)| vec![c.n().to_string(), c.to_string(), p.to_string()])
        .collect();
    Rendered { headers: vec!["n", "c", "poly"], records, grid: None, json: t.to_json() }
}

/// `a(n,m)` or `b(n,m)`. Only entries with `m` of the parity that can be
/// nonzero are shown in the triangle and the records; JSON keeps full rows.
fn small(family: Family, n_max: usize) -> Rendered {
    let (a, b) = small_triangles(n_max);
    let (t, offset) = if family == Family::ASmall { (a, 1) } else { (b, 0) };
    let mut grid = Vec::new();
    let mut records = Vec::new();
    for n in 0..=n_max {
        let row = t.row(n);
        let live: Vec<usize> = (0..row.len()).filter(|m| (m + n + offset) % 2 == 0).collect();
        grid.push(live.iter().map(|&m| row[m].to_string()).collect());
        records.extend(live.iter().map(|&m| vec![n.to_string(), m.to_string(), row[m].to_string()]));
    }
    let rows: Vec<Vec<String>> = t.rows().iter().map(|r| ints(r)).collect();
    Rendered {
        headers: vec!["n", "m", "value"],
        records,
        grid: Some(grid),
        json: json!({ "family": family.name(), "n_max": n_max, "rows": rows }),
    }
}

/// α and β interleaved: `α(n,m)` where `n + m` is odd, `β(n,m)` otherwise.
fn fib(n_max: usize) -> Rendered {
    let alpha = alpha_table(n_max);
    let beta = |n: usize, m: usize| -> BigInt {
        match n {
            0 => BigInt::from(u8::from(m == 0)),
            _ => alpha[n - 1].get(m).cloned().unwrap_or_default(),
        }
    };
    let mut grid = Vec::new();
    let mut records = Vec::new();
    let mut beta_rows = Vec::new();
    for n in 0..=n_max {
        let mut line = Vec::new();
        for m in 0..n + 2 {
            let (which, v) = if (n + m) % 2 == 1 { ("alpha", alpha[n][m].clone()) } else { ("beta", beta(n, m)) };
            line.push(v.to_string());
            records.push(vec![n.to_string(), m.to_string(), which.to_string(), v.to_string()]);
        }
        grid.push(line);
        beta_rows.push(ints(&(0..n + 2).map(|m| beta(n, m)).collect::<Vec<_>>()));
    }
    let alpha_rows: Vec<Vec<String>> = alpha.iter().map(|r| ints(r)).collect();
    Rendered {
        headers: vec!["n", "m", "count", "value"],
        records,
        grid: Some(grid),
        json: json!({ "family": "fib", "n_max": n_max, "alpha": alpha_rows, "beta": beta_rows }),
    }
}

fn carlitz_rows(n_max: usize) -> Rendered {
    let polys = carlitz(n_max);
    let records: Vec<Vec<String>> = polys
        .iter()
        .enumerate()
        .map(|(n, p)| vec![n.to_string(), p.display_in("t")])
        .collect();
    let json_rows: Vec<Value> = polys
        .iter()
        .enumerate()
        .map(|(n, p)| json!({ "n": n, "coeffs": p.coeffs() }))
        .collect();
    Rendered {
        headers: vec!["n", "poly"],
        records,
        grid: None,
        json: json!({ "family": "carlitz", "n_max": n_max, "rows": json_rows }),
    }
}

fn springer(b: &TripleTable, n_max: usize) -> Rendered {
    let polys: Vec<_> = (0..=n_max).map(|n| springer_from_table(b, n)).collect();
    let records = polys
        .iter()
        .enumerate()
        .map(|(n, p)| vec![n.to_string(), p.to_string(), p.eval_at_one().to_string()])
        .collect();
    Rendered {
        headers: vec!["n", "poly", "at q=1"],
        records,
        grid: None,
        json: json!({ "family": "springer", "n_max": n_max, "polys": polys }),
    }
}

/// `T_n(t,q)` for odd `n` and `E_n(t,q)` for even `n`.
fn tq(a: &TripleTable, b: &TripleTable, n_max: usize) -> Rendered {
    let mut records = Vec::new();
    let mut json_rows = Vec::new();
    for n in 0..=n_max {
        let (name, p) = if n % 2 == 1 {
            ("T", tq_tangent(a, n))
        } else {
            ("E", tq_secant(b, n))
        };
        let p = p.expect("parity matches");
        records.push(vec![n.to_string(), name.to_string(), p.display_in("t")]);
        json_rows.push(json!({ "n": n, "kind": name, "coeffs": p.coeffs() }));
    }
    Rendered {
        headers: vec!["n", "kind", "poly"],
        records,
        grid: None,
        json: json!({ "family": "tq", "n_max": n_max, "rows": json_rows }),
    }
}

pub fn compute(family: Family, n_max: usize, cache: &Cache) -> Rendered {
    match family {
        Family::ASmall | Family::BSmall => small(family, n_max),
        Family::A => triple(&cache.a(n_max)),
        Family::B => triple(&cache.b(n_max)),
        Family::Ac => comp(&cache.ac(n_max)),
        Family::Carlitz => carlitz_rows(n_max),
        Family::Fib => fib(n_max),
        Family::Springer => springer(&cache.b(n_max), n_max),
        Family::Tq => tq(&cache.a(n_max), &cache.b(n_max), n_max),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::render::Format;

    #[test]
    fn a_small_at_zero() {
        assert_eq!(small(Family::ASmall, 0).render(Format::Text), "1\n");
    }

    #[test]
    fn b_small_rows() {
        let text = small(Family::BSmall, 3).render(Format::Text);
        assert_eq!(text, "1\n1\n1  2\n5  6\n");
    }

    #[test]
    fn fib_triangle() {
        let r = fib(2);
        assert_eq!(r.grid.unwrap(), vec![vec!["1", "1"], vec!["1", "1", "1"], vec!["1", "2", "1", "1"]]);
    }

    #[test]
    fn names_round_trip() {
        for f in Family::value_variants() {
            assert_eq!(Family::from_str(f.name(), false), Ok(*f));
        }
    }
}
