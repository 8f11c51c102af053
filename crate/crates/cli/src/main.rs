//! `qderiv`: tables, oracles, series and verification from the command line.
//!
//! Exit status is 0 when everything requested succeeded or passed, 1 when a
//! verification check failed or a file could not be written, and 2 for
//! usage errors.

mod cache;
mod families;
mod render;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use log::info;
use rayon::prelude::*;

use qderiv_core::derivtables::oracle_tables;
use qderiv_core::series::{
    cap_cos_q, cap_e_q, cap_sec_q, cap_sin_q, classical_cos, classical_sec, classical_sin,
    classical_tan, cos_q, e_q, sec_q, sin_q, tan_q, Coeff, DividedSeries,
};
use qderiv_core::tcomb::DEFAULT_BRUTE_FORCE_BOUND;
use qderiv_core::verify::{check_ids, find_check, Bounds, Context, Fixtures, VerificationReport};

use cache::{envelope, write_atomically, Cache};
use families::{Family, OracleFamily};
use render::{csv_text, Format, Rendered};

#[derive(Parser)]
#[command(name = "qderiv", version, about = "Exact q-derivative tables of the q-tangent and q-secant")]
struct Cli {
    /// Log more to stderr; repeat for debug output.
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CacheArgs {
    /// Directory for cached tables.
    #[arg(long, env = "QDERIV_CACHE_DIR", global = true)]
    cache_dir: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Print a family for every n up to --n.
    Table {
        family: Family,
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        cache: CacheArgs,
    },
    /// Run verification checks by id, or "all".
    Verify {
        #[arg(required = true)]
        ids: Vec<String>,
        /// Largest n for every table-indexed check.
        #[arg(long)]
        n: Option<usize>,
        /// Series order for every series check.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        order: Option<u64>,
        /// Largest n enumerated by brute force.
        #[arg(long, default_value_t = DEFAULT_BRUTE_FORCE_BOUND)]
        bound_bruteforce: usize,
        /// Worker threads; reports keep registry order regardless.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        jobs: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        cache: CacheArgs,
    },
    /// Compute A, B or Ac by enumerating t-permutations.
    Oracle {
        family: OracleFamily,
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_BRUTE_FORCE_BOUND)]
        bound_bruteforce: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the coefficients f_n of a series Σ f_n u^n/(q;q)_n.
    Series {
        name: SeriesName,
        #[arg(long, default_value_t = 10)]
        order: usize,
        /// Use u^n/n! and integer coefficients (tan, sec, sin and cos only).
        #[arg(long)]
        classical: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Write hash-stamped JSON files for the given families.
    Export {
        #[arg(required = true)]
        families: Vec<Family>,
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long)]
        out_dir: PathBuf,
        #[command(flatten)]
        cache: CacheArgs,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SeriesName {
    #[value(name = "tan")]
    Tan,
    #[value(name = "sec")]
    Sec,
    #[value(name = "Sec")]
    CapSec,
    #[value(name = "sin")]
    Sin,
    #[value(name = "cos")]
    Cos,
    #[value(name = "Sin")]
    CapSin,
    #[value(name = "Cos")]
    CapCos,
    #[value(name = "e")]
    E,
    #[value(name = "E")]
    CapE,
}

enum Failure {
    Usage(String),
    Runtime(String),
    ChecksFailed,
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

fn emit(s: &str) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    out.write_all(s.as_bytes())?;
    out.flush()?;
    Ok(())
}

fn series_rendered<R: Coeff + std::fmt::Display>(s: &DividedSeries<R>) -> Rendered {
    let records = s
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| vec![n.to_string(), c.to_string()])
        .collect();
    Rendered { headers: vec!["n", "coeff"], records, grid: None, json: s.to_json() }
}

fn cmd_series(name: SeriesName, order: usize, classical: bool) -> Result<Rendered, Failure> {
    if classical {
        let s = match name {
            SeriesName::Tan => classical_tan(order),
            SeriesName::Sec => classical_sec(order),
            SeriesName::Sin => classical_sin(order),
            SeriesName::Cos => classical_cos(order),
            other => return Err(Failure::Usage(format!("no classical form of {other:?}"))),
        };
        return Ok(series_rendered(&s));
    }
    let s = match name {
        SeriesName::Tan => tan_q(order),
        SeriesName::Sec => sec_q(order),
        SeriesName::CapSec => cap_sec_q(order),
        SeriesName::Sin => sin_q(order),
        SeriesName::Cos => cos_q(order),
        SeriesName::CapSin => cap_sin_q(order),
        SeriesName::CapCos => cap_cos_q(order),
        SeriesName::E => e_q(order),
        SeriesName::CapE => cap_e_q(order),
    };
    Ok(series_rendered(&s))
}

fn verify_bounds(n: Option<usize>, order: Option<u64>, brute: usize) -> Result<Bounds, Failure> {
    let mut b = Bounds::default();
    if let Some(n) = n {
        for field in [
            &mut b.identity_n,
            &mut b.table_n,
            &mut b.rewrite_n,
            &mut b.brute_n,
            &mut b.sweep_n,
            &mut b.perm_n,
            &mut b.alt_len,
            &mut b.carlitz_n,
            &mut b.special_n,
            &mut b.tq_n,
            &mut b.count_n,
        ] {
            *field = n;
        }
    }
    if let Some(order) = order {
        let order = order as usize;
        b.order = order;
        b.trig_order = order;
        b.gf_order = order;
        b.fib_order = order;
    }
    b.brute_n = b.brute_n.min(brute);
    if b.order < b.identity_n {
        return Err(Failure::Usage(format!(
            "--order {} is below --n {}; pass a larger --order",
            b.order, b.identity_n
        )));
    }
    Ok(b)
}

fn render_reports(reports: &[VerificationReport], format: Format) -> Result<String, Failure> {
    Ok(match format {
        Format::Text => reports.iter().map(|r| format!("{r}\n")).collect(),
        Format::Json => reports.iter().map(|r| r.to_json_line() + "\n").collect(),
        Format::Csv => {
            let records: Vec<Vec<String>> = reports
                .iter()
                .map(|r| {
                    let d = r.first_discrepancy.as_ref();
                    let status = if r.passed() { "pass" } else { "fail" };
                    vec![
                        r.id.clone(),
                        status.to_string(),
                        d.map(|d| d.at.clone()).unwrap_or_default(),
                        d.map(|d| d.expected.clone()).unwrap_or_default(),
                        d.map(|d| d.actual.clone()).unwrap_or_default(),
                    ]
                })
                .collect();
            csv_text(&["id", "status", "at", "expected", "actual"], &records)
        }
        Format::Latex => return Err(Failure::Usage("verify reports have no LaTeX form".into())),
    })
}

fn cmd_verify(
    ids: &[String],
    bounds: Bounds,
    jobs: Option<u64>,
    format: Format,
    cache: &Cache,
) -> Result<(), Failure> {
    let mut wanted: Vec<&str> = Vec::new();
    for id in ids {
        if id == "all" {
            wanted.extend(check_ids());
        } else if find_check(id).is_some() {
            wanted.push(id);
        } else {
            return Err(Failure::Usage(format!("unknown check id {id:?}")));
        }
    }
    // Registry order, each check once.
    let all = check_ids();
    let checks: Vec<_> = all
        .iter()
        .filter(|id| wanted.contains(id))
        .map(|id| find_check(id).expect("registered"))
        .collect();
    // Render problems are usage errors; catch them before the work.
    render_reports(&[], format)?;

    let mut ctx = Context::new(bounds, Fixtures::printed());
    if cache.is_persistent() {
        let rows = bounds.table_rows();
        ctx = ctx.with_tables(cache.a(rows), cache.b(rows), cache.ac(rows));
    }
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        pool = pool.num_threads(j as usize);
    }
    let pool = pool.build().map_err(|e| Failure::Runtime(e.to_string()))?;
    let reports: Vec<VerificationReport> = pool.install(|| checks.par_iter().map(|c| (c.run)(&ctx)).collect());

    emit(&render_reports(&reports, format)?)?;
    let passed = reports.iter().filter(|r| r.passed()).count();
    info!("{passed}/{} checks passed", reports.len());
    if passed == reports.len() {
        Ok(())
    } else {
        Err(Failure::ChecksFailed)
    }
}

fn cmd_oracle(family: OracleFamily, n: usize, bound: usize) -> Result<Rendered, Failure> {
    if n > bound {
        return Err(Failure::Usage(format!(
            "--n {n} exceeds the brute-force bound {bound} (see --bound-bruteforce)"
        )));
    }
    let t = oracle_tables(n, bound).map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(match family {
        OracleFamily::A => families::triple(&t.a),
        OracleFamily::B => families::triple(&t.b),
        OracleFamily::Ac => families::comp(&t.ac),
    })
}

fn cmd_export(fams: &[Family], n: usize, out_dir: &PathBuf, cache: &Cache) -> Result<(), Failure> {
    std::fs::create_dir_all(out_dir)?;
    let mut fams = fams.to_vec();
    fams.sort();
    fams.dedup();
    for f in fams {
        let doc = envelope(f.name(), n, families::compute(f, n, cache).json);
        let path = out_dir.join(format!("{}-{n}.json", f.name()));
        let mut bytes = serde_json::to_vec_pretty(&doc).expect("JSON value serializes");
        bytes.push(b'\n');
        write_atomically(&path, &bytes)?;
        info!("wrote {}", path.display());
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Table { family, n, format, cache } => {
            let cache = Cache::new(cache.cache_dir)?;
            emit(&families::compute(family, n, &cache).render(format))
        }
        Command::Verify { ids, n, order, bound_bruteforce, jobs, format, cache } => {
            let bounds = verify_bounds(n, order, bound_bruteforce)?;
            let cache = Cache::new(cache.cache_dir)?;
            cmd_verify(&ids, bounds, jobs, format, &cache)
        }
        Command::Oracle { family, n, bound_bruteforce, format } => {
            emit(&cmd_oracle(family, n, bound_bruteforce)?.render(format))
        }
        Command::Series { name, order, classical, format } => {
            emit(&cmd_series(name, order, classical)?.render(format))
        }
        Command::Export { families, n, out_dir, cache } => {
            let cache = Cache::new(cache.cache_dir)?;
            cmd_export(&families, n, &out_dir, &cache)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => log::LevelFilter::Warn,
        1 => log::LevelFilter::Info,
        _ => log::LevelFilter::Debug,
    };
    env_logger::Builder::new()
        .filter_level(level)
        .target(env_logger::Target::Stderr)
        .init();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::ChecksFailed) => ExitCode::from(1),
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
