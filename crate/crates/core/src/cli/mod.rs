//! The `zsf` command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error (including
//! an unreadable cache), 3 resource refusal.

pub mod cache;
pub mod reference;
pub mod verify;

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::{asymptotic_report, eventual_column_check, AsymptoticOptions, Report};
use crate::arrangement::{
    char_poly, char_poly_interpolate, char_poly_whitney, validity_bound, PolyMethod, WHITNEY_MAX_D,
};
use crate::counting::{mathieu_zhao_count, Cell, CountConfig, CountGrid, CountTable};
use crate::error::{Error, Result};
use verify::{run_suites, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_REFUSED: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "zsf",
    version,
    about = "Exact counts of zero-sum-free tuples over Z_n"
)]
pub struct Cli {
    /// Result cache (JSON); read before computing and rewritten after.
    #[arg(long, global = true, env = "ZSF_CACHE")]
    pub cache: Option<PathBuf>,

    /// Largest n^d the brute-force oracle may enumerate.
    #[arg(
        long,
        global = true,
        env = "ZSF_BUDGET_TUPLES",
        default_value_t = 100_000_000
    )]
    pub budget_tuples: u64,

    /// Largest DP frontier, in states.
    #[arg(long, global = true, env = "ZSF_BUDGET_STATES", default_value_t = 1 << 26)]
    pub budget_states: usize,

    /// Worker threads; 0 lets the pool decide.
    #[arg(long, global = true, env = "ZSF_THREADS", default_value_t = 0)]
    pub threads: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Whitney,
    Interpolate,
}

impl From<MethodArg> for PolyMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => PolyMethod::Auto,
            MethodArg::Whitney => PolyMethod::Whitney,
            MethodArg::Interpolate => PolyMethod::Interpolate,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print α_n^d and β_n^d for 2 <= n <= n-max.
    Table {
        #[arg(long, env = "ZSF_N_MAX")]
        n_max: u64,
        /// Largest d per row (default n - 1).
        #[arg(long, env = "ZSF_D_MAX")]
        d_max: Option<u64>,
        #[arg(long, env = "ZSF_FORMAT", value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Print the characteristic polynomial f_d.
    Poly {
        d: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Run verification suites; exits 1 on any failure.
    Verify {
        #[arg(long, env = "ZSF_N_MAX", default_value_t = 18)]
        n_max: u64,
        /// Comma-separated subset of table,bounds,orbits,moebius,formulas,hypotheses,stabilizers.
        #[arg(long, value_delimiter = ',')]
        suites: Option<Vec<String>>,
        /// Also print passing items.
        #[arg(long)]
        verbose: bool,
    },
    /// Ratio series α_n^d / n^d and β_n^d / n^d with the ζ lower bound.
    Asymptote {
        #[arg(long)]
        d: u64,
        #[arg(long, env = "ZSF_N_MAX")]
        n_max: u64,
        /// n from which β_n^d / n^d must clear the ζ bound (default: empirical).
        #[arg(long)]
        threshold: Option<u64>,
    },
    /// Count nonzero Mathieu–Zhao tuples of length n over Z_p.
    Mz {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u64,
    },
}

impl Cli {
    pub fn config(&self) -> CountConfig {
        CountConfig {
            tuple_budget: self.budget_tuples,
            state_cap: self.budget_states,
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        e if e.is_resource_refusal() => EXIT_REFUSED,
        Error::Overflow => EXIT_REFUSED,
        Error::NonIntegralPolynomial(_) => EXIT_VERIFY_FAILED,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (program name first) and runs; returns the exit code.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    run(&cli, out, err)
}

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let cfg = cli.config();
    match &cli.command {
        Command::Table {
            n_max,
            d_max,
            format,
        } => cmd_table(
            *n_max,
            *d_max,
            *format,
            cli.cache.as_deref(),
            &cfg,
            cli.threads,
            out,
            err,
        ),
        Command::Poly { d, method } => cmd_poly(*d, (*method).into(), &cfg, out),
        Command::Verify {
            n_max,
            suites,
            verbose,
        } => {
            let suites = match suites {
                None => Suite::ALL.to_vec(),
                Some(names) => names
                    .iter()
                    .map(|s| s.trim().parse())
                    .collect::<Result<_>>()?,
            };
            cmd_verify(
                *n_max,
                &suites,
                *verbose,
                cli.cache.as_deref(),
                &cfg,
                cli.threads,
                out,
            )
        }
        Command::Asymptote {
            d,
            n_max,
            threshold,
        } => cmd_asymptote(
            *d,
            *n_max,
            *threshold,
            cli.cache.as_deref(),
            &cfg,
            cli.threads,
            out,
        ),
        Command::Mz { p, n } => cmd_mz(*p, *n, &cfg, out),
    }
}

/// Tables for `2 <= n <= n_max` up to `d_max`, reusing cached cells and
/// computing only rows with gaps. The merged result is written back.
pub fn obtain_grid(
    n_max: u64,
    d_max: Option<u64>,
    cache: Option<&Path>,
    cfg: &CountConfig,
    threads: usize,
) -> Result<CountGrid> {
    let mut grid = match cache {
        Some(path) => cache::load(path)?,
        None => CountGrid::default(),
    };
    let limit = d_max.unwrap_or(u64::MAX);
    let stale: Vec<u64> = (2..=n_max)
        .filter(|&n| !grid.table(n).is_some_and(|t| t.is_complete(limit)))
        .collect();
    if stale.is_empty() {
        return Ok(grid);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| {
            Error::InvalidArgument(format!("cannot start {threads} worker threads: {e}"))
        })?;
    let fresh: Vec<CountTable> = pool.install(|| {
        stale
            .into_par_iter()
            .map(|n| CountTable::compute(n, limit, cfg))
            .collect()
    });
    for mut table in fresh {
        if let Some(old) = grid.table(table.n) {
            // cached cells are kept; they are exact
            for (&d, a) in &old.alpha {
                if !table.alpha.contains_key(&d) {
                    table.insert(d, a.clone(), old.beta[&d].clone(), old.provenance[&d]);
                }
            }
        }
        grid.insert(table);
    }
    if let Some(path) = cache {
        cache::save(path, &grid)?;
    }
    Ok(grid)
}

#[derive(Serialize)]
struct JsonEntry {
    n: u64,
    d: u64,
    alpha: Option<String>,
    beta: Option<String>,
    provenance: Option<String>,
}

#[derive(Serialize)]
struct JsonTable {
    schema_version: u32,
    entries: Vec<JsonEntry>,
}

/// Written in place of a count the budget did not allow.
pub const REFUSED: &str = "refused";

fn write_cells(cells: &[Cell], format: Format, out: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(out);
            w.write_record(["n", "d", "alpha", "beta"])?;
            for c in cells {
                let show = |v: &Option<crate::Natural>| {
                    v.as_ref()
                        .map_or_else(|| REFUSED.to_string(), ToString::to_string)
                };
                w.write_record([
                    c.n.to_string(),
                    c.d.to_string(),
                    show(&c.alpha),
                    show(&c.beta),
                ])?;
            }
            w.flush()
        }
        Format::Json => {
            let doc = JsonTable {
                schema_version: cache::SCHEMA_VERSION,
                entries: cells
                    .iter()
                    .map(|c| JsonEntry {
                        n: c.n,
                        d: c.d,
                        alpha: c.alpha.as_ref().map(ToString::to_string),
                        beta: c.beta.as_ref().map(ToString::to_string),
                        provenance: c.provenance.map(|p| p.to_string()),
                    })
                    .collect(),
            };
            serde_json::to_writer_pretty(&mut *out, &doc)?;
            writeln!(out)
        }
    }
}

fn io_error(e: io::Error) -> Error {
    Error::InvalidArgument(format!("cannot write output: {e}"))
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_table(
    n_max: u64,
    d_max: Option<u64>,
    format: Format,
    cache: Option<&Path>,
    cfg: &CountConfig,
    threads: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    if n_max < 2 {
        return Err(Error::InvalidArgument(format!(
            "--n-max must be at least 2, got {n_max}"
        )));
    }
    if d_max == Some(0) {
        return Err(Error::InvalidArgument("--d-max must be positive".into()));
    }
    let grid = obtain_grid(n_max, d_max, cache, cfg, threads)?;
    let cells: Vec<Cell> = grid
        .cells(d_max)
        .into_iter()
        .filter(|c| (2..=n_max).contains(&c.n))
        .collect();
    write_cells(&cells, format, out).map_err(io_error)?;
    let mut refused = 0;
    for c in cells.iter().filter(|c| c.alpha.is_none()) {
        refused += 1;
        let reason = grid
            .table(c.n)
            .and_then(|t| t.refusals.get(&c.d))
            .map_or("not computed", String::as_str);
        let _ = writeln!(err, "refused n={} d={}: {reason}", c.n, c.d);
    }
    Ok(if refused > 0 { EXIT_REFUSED } else { EXIT_OK })
}

pub fn cmd_poly(d: u32, method: PolyMethod, cfg: &CountConfig, out: &mut dyn Write) -> Result<i32> {
    if method == PolyMethod::Whitney && d > WHITNEY_MAX_D {
        return Err(Error::InvalidArgument(format!(
            "--method whitney enumerates column subsets and stops at d={WHITNEY_MAX_D}; \
             use --method interpolate (or auto) for d={d}"
        )));
    }
    let poly = char_poly(d, method, cfg)?;
    let bound = validity_bound(d)?;
    let used = match method {
        PolyMethod::Auto if d <= WHITNEY_MAX_D => "whitney",
        PolyMethod::Whitney => "whitney",
        _ => "interpolate",
    };
    let coefficients: Vec<String> = poly
        .coefficients()
        .iter()
        .map(ToString::to_string)
        .collect();
    let mut text = String::new();
    text.push_str(&format!("f_{d}(x) = {poly}\n"));
    text.push_str(&format!("coefficients: [{}]\n", coefficients.join(", ")));
    text.push_str(&format!("method: {used}\n"));
    if used == "interpolate" {
        text.push_str("self-check: interpolant is integral and monic\n");
    }
    let cross = if d <= WHITNEY_MAX_D {
        let other = if used == "whitney" {
            char_poly_interpolate(d, cfg)
        } else {
            char_poly_whitney(d)
        };
        match other {
            Ok(q) if q == poly => "both methods agree".to_string(),
            Ok(q) => format!("METHODS DISAGREE: other method gives {q}"),
            Err(e) => format!("unavailable: {e}"),
        }
    } else {
        format!("unavailable (subset enumeration stops at d={WHITNEY_MAX_D})")
    };
    text.push_str(&format!("cross-check: {cross}\n"));
    let kind = if bound.exact { "exact" } else { "upper bound" };
    text.push_str(&format!(
        "max binary determinant: {} ({kind})\n",
        bound.max_binary_det
    ));
    text.push_str(&format!("admissible n: {}\n", bound.rule()));
    out.write_all(text.as_bytes()).map_err(io_error)?;
    Ok(if cross.starts_with("METHODS DISAGREE") {
        EXIT_VERIFY_FAILED
    } else {
        EXIT_OK
    })
}

fn print_report(report: &Report, verbose: bool, out: &mut dyn Write) -> io::Result<()> {
    for item in &report.items {
        if verbose || item.verdict != crate::analysis::Verdict::Pass {
            writeln!(out, "{item}")?;
        }
    }
    Ok(())
}

pub fn cmd_verify(
    n_max: u64,
    suites: &[Suite],
    verbose: bool,
    cache: Option<&Path>,
    cfg: &CountConfig,
    threads: usize,
    out: &mut dyn Write,
) -> Result<i32> {
    if n_max < 2 {
        return Err(Error::InvalidArgument(format!(
            "--n-max must be at least 2, got {n_max}"
        )));
    }
    let grid = obtain_grid(n_max, None, cache, cfg, threads)?;
    let mut failed = false;
    for (suite, report) in run_suites(suites, &grid, n_max, cfg) {
        writeln!(out, "== {suite}").map_err(io_error)?;
        print_report(&report, verbose, out).map_err(io_error)?;
        writeln!(out, "{suite}: {}", report.summary()).map_err(io_error)?;
        failed |= report.has_failures();
    }
    Ok(if failed { EXIT_VERIFY_FAILED } else { EXIT_OK })
}

pub fn cmd_asymptote(
    d: u64,
    n_max: u64,
    threshold: Option<u64>,
    cache: Option<&Path>,
    cfg: &CountConfig,
    threads: usize,
    out: &mut dyn Write,
) -> Result<i32> {
    if d == 0 || n_max < 2 {
        return Err(Error::InvalidArgument(format!(
            "need --d >= 1 and --n-max >= 2, got d={d}, n-max={n_max}"
        )));
    }
    let grid = obtain_grid(n_max, Some(d), cache, cfg, threads)?;
    let opts = AsymptoticOptions {
        threshold,
        ..AsymptoticOptions::default()
    };
    let mut report: Report = asymptotic_report(d, n_max, &grid, &opts)?
        .into_iter()
        .collect();
    report.extend(eventual_column_check(d, 2, n_max, &grid, None));
    for item in &report.items {
        writeln!(out, "{item}").map_err(io_error)?;
    }
    writeln!(out, "{}", report.summary()).map_err(io_error)?;
    Ok(if report.has_failures() {
        EXIT_VERIFY_FAILED
    } else {
        EXIT_OK
    })
}

pub fn cmd_mz(p: u64, len: u64, cfg: &CountConfig, out: &mut dyn Write) -> Result<i32> {
    let count = mathieu_zhao_count(p, len, cfg)?;
    let mut text = String::new();
    for t in &count.terms {
        text.push_str(&format!(
            "d={} C({},{})={} alpha({},{})={} product={}\n",
            t.d, len, t.d, t.supports, p, t.d, t.alpha, t.product
        ));
    }
    text.push_str(&format!("total={}\n", count.total));
    out.write_all(text.as_bytes()).map_err(io_error)?;
    Ok(EXIT_OK)
}
