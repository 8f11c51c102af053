//! One pass/fail line per acceptance criterion; exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use qderiv_core::verify::{
    check_ids, run_checks, Bounds, Context, Fixtures, VerificationReport,
};

struct Criterion {
    number: usize,
    title: &'static str,
    ids: &'static [&'static str],
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        number: 1,
        title: "printed table fixtures, under 1 s",
        ids: &["table1", "table2", "table3", "table4"],
    },
    Criterion {
        number: 2,
        title: "recurrence = rewrite engine (n <= 10) = brute force (n <= 8)",
        ids: &["equiv.A", "equiv.B", "equiv.Ac", "equiv.phi"],
    },
    Criterion {
        number: 3,
        title: "derivative expansions to order 10 for n <= 6; first derivatives to order 11",
        ids: &["1.9", "1.11", "1.12", "1.14", "1.15", "1.16", "2.3", "2.4", "2.5"],
    },
    Criterion {
        number: 4,
        title: "generating functions over Z[x,q] and the classical ones to order 8",
        ids: &["1.19", "1.20", "1.6", "1.7", "1.1-1.2"],
    },
    Criterion {
        number: 5,
        title: "q-tangent and q-secant coefficients",
        ids: &["7.values", "7.4", "7.5", "7.6", "7.combined", "7.11", "7.12", "thm7.1"],
    },
    Criterion {
        number: 6,
        title: "insertion sweep, Δ round trips, Φ and ψ",
        ids: &["thm3.1", "delta.roundtrip", "7.10", "8.1", "8.2"],
    },
    Criterion {
        number: 7,
        title: "aggregates, product formula, symmetry",
        ids: &["thm1.4", "thm9.1", "symmetry"],
    },
    Criterion {
        number: 8,
        title: "Carlitz, diagonals, (t,q) numbers, q-Springer numbers",
        ids: &["carlitz.values", "thm10.1", "10.8", "tq", "springer"],
    },
    Criterion {
        number: 9,
        title: "α and β counts, Fibonacci triangle and generating function",
        ids: &["prop10.2", "fig10.1", "fib.gf"],
    },
];

/// The ranges each criterion names, all at their default values.
fn bounds_match_criteria(b: &Bounds) -> Result<(), String> {
    let want = [
        ("order", b.order, 10),
        ("identity_n", b.identity_n, 6),
        ("trig_order", b.trig_order, 11),
        ("gf_order", b.gf_order, 8),
        ("rewrite_n", b.rewrite_n, 10),
        ("brute_n", b.brute_n, 8),
        ("sweep_n", b.sweep_n, 6),
        ("perm_n", b.perm_n, 7),
        ("alt_len", b.alt_len, 9),
        ("carlitz_n", b.carlitz_n, 6),
        ("special_n", b.special_n, 8),
        ("tq_n", b.tq_n, 7),
        ("count_n", b.count_n, 10),
        ("fib_order", b.fib_order, 12),
    ];
    for (name, got, need) in want {
        if got < need {
            return Err(format!("{name} = {got} < {need}"));
        }
    }
    Ok(())
}

fn summarize(reports: &[VerificationReport]) -> Result<(), String> {
    match reports.iter().find(|r| !r.passed()) {
        Some(r) => Err(r.to_string()),
        None => Ok(()),
    }
}

fn criterion_one(ctx_bounds: Bounds) -> Result<(), String> {
    let start = Instant::now();
    let fresh = Context::new(ctx_bounds, Fixtures::printed());
    let reports = run_checks(&fresh, CRITERIA[0].ids)?;
    let elapsed = start.elapsed();
    summarize(&reports)?;
    if elapsed >= Duration::from_secs(1) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(())
}

const FIXTURE_IDS: &[&str] = &[
    "table1",
    "table2",
    "table3",
    "table4",
    "fig10.1",
    "7.values",
    "carlitz.values",
    "1.1-1.2",
];

/// Every single-cell bump fails exactly its own fixture check at that cell;
/// one bump per table is also run against the whole suite.
fn mutation(ctx: &mut Context) -> Result<usize, String> {
    let printed = Fixtures::printed();
    let all = check_ids();
    let mut bumps = 0;
    for table in &printed.tables {
        for (i, cell) in table.cells.iter().enumerate() {
            let bumped = printed.bumped(table.id, i, 1 + i % 3).expect("cell exists");
            ctx.set_fixtures(bumped);
            let ids: &[&str] = if i == 0 { &all } else { FIXTURE_IDS };
            let reports = run_checks(ctx, ids)?;
            let failed: Vec<&VerificationReport> = reports.iter().filter(|r| !r.passed()).collect();
            let here = format!("{} cell {} ({})", table.id, i, cell.key);
            match failed.as_slice() {
                [only] if only.id == table.id => {
                    let at = only.first_discrepancy.as_ref().map(|d| d.at.clone());
                    if at.as_deref() != Some(cell.key.to_string().as_str()) {
                        return Err(format!("{here}: localized at {at:?}"));
                    }
                }
                _ => {
                    let ids: Vec<&str> = failed.iter().map(|r| r.id.as_str()).collect();
                    return Err(format!("{here}: failing checks {ids:?}"));
                }
            }
            bumps += 1;
        }
    }
    ctx.set_fixtures(printed);
    Ok(bumps)
}

fn line(number: usize, title: &str, result: &Result<String, String>) -> bool {
    match result {
        Ok(note) if note.is_empty() => println!("criterion {number:>2}: PASS  {title}"),
        Ok(note) => println!("criterion {number:>2}: PASS  {title} ({note})"),
        Err(why) => println!("criterion {number:>2}: FAIL  {title}: {why}"),
    }
    result.is_ok()
}

fn main() -> ExitCode {
    let bounds = Bounds::default();
    let mut all_ok = true;
    if let Err(e) = bounds_match_criteria(&bounds) {
        println!("default bounds are below the criteria: {e}");
        all_ok = false;
    }
    let mut ctx = Context::new(bounds, Fixtures::printed());
    for c in CRITERIA {
        let result = if c.number == 1 {
            criterion_one(bounds)
        } else {
            run_checks(&ctx, c.ids).and_then(|r| summarize(&r))
        };
        all_ok &= line(c.number, c.title, &result.map(|()| String::new()));
    }
    let result = mutation(&mut ctx).map(|n| format!("{n} single-cell bumps"));
    all_ok &= line(10, "mutation sensitivity", &result);
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
