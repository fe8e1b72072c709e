//! The `lcsq` command line: `compute`, `verify` and `check`.
//!
//! Exit codes:
//!
//! | command   | 0          | 1            | 2                         | 3                      |
//! |-----------|------------|--------------|---------------------------|------------------------|
//! | `compute` | done       |              | bad input or ring         | cells skipped by guard |
//! | `verify`  | all match  | any mismatch | bad input, regime error   |                        |
//! | `check`   | pass       | fail         | bad input, incomplete     |                        |

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::closed_forms::{diff_tables, predict_fp_from_z, predict_n2, predict_n3, DiffReport};
use crate::engine::{BigradedTable, Engine, DEFAULT_MAX_DIM};
use crate::free_algebra::{AlgebraPresentation, Ring};
use crate::store::{emit, peak_memory_bytes, Cache, CacheRecord, ComputationKey, Format};
use crate::weyl::{check_dim_divisibility, check_hilbert, weyl_suite};

#[derive(Debug, Parser)]
#[command(name = "lcsq", version, about = "Lower central series quotients of graded algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute a table of N_i components.
    Compute(ComputeArgs),
    /// Compare a computed table with a closed form or the F_p prediction.
    Verify(VerifyArgs),
    /// Run a divisibility, Hilbert-series or divided-power operator check.
    Check(CheckArgs),
}

#[derive(Debug, Clone, Args)]
struct AlgebraArgs {
    /// `Z` or `Fp:<p>`.
    #[arg(long, default_value = "Z")]
    ring: String,
    #[arg(long, default_value_t = 2)]
    gens: usize,
    /// Comma-separated relations, e.g. "x1^3,x2^7".
    #[arg(long, default_value = "")]
    relations: String,
    #[arg(long = "i", default_value_t = 2)]
    i: usize,
    /// Largest total degree to compute.
    #[arg(long, default_value_t = 10)]
    max_degree: u32,
    /// Components with more free-algebra words than this are left blank.
    #[arg(long, default_value_t = DEFAULT_MAX_DIM)]
    max_dim: usize,
    /// Result cache directory (falls back to LCSQ_CACHE_DIR).
    #[arg(long)]
    cache_dir: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ComputeArgs {
    #[command(flatten)]
    algebra: AlgebraArgs,
    #[arg(long, default_value = "text")]
    format: Format,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Against {
    N2,
    N3,
    FpConjecture,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    against: Against,
    #[command(flatten)]
    algebra: AlgebraArgs,
    /// Prime for `fp-conjecture`.
    #[arg(long)]
    p: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckKind {
    Divisibility,
    Hilbert,
    Weyl,
}

#[derive(Debug, Args)]
struct CheckArgs {
    /// Which check to run; may also be given as `--check <KIND>`.
    #[arg(value_enum)]
    kind: Option<CheckKind>,
    #[arg(long = "check", value_enum)]
    check: Option<CheckKind>,
    #[command(flatten)]
    algebra: AlgebraArgs,
    /// Exponents n_j with relations polynomial in x_j^{p^{n_j}}, e.g. "1,0".
    #[arg(long, value_delimiter = ',')]
    exps: Option<Vec<u32>>,
    /// Variable (1-based) for the Hilbert series.
    #[arg(long, default_value_t = 1)]
    variable: usize,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    n: Option<u32>,
}

/// Exit status plus a message for standard error.
struct Failure(i32, String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(2, e.to_string())
    }
}

/// Runs the command line with explicit output streams; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    let result = match cli.command {
        Command::Compute(a) => compute(a, out, err),
        Command::Verify(a) => verify(a, out),
        Command::Check(a) => check(a, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn presentation(a: &AlgebraArgs) -> Result<AlgebraPresentation, Failure> {
    let ring: Ring = a.ring.parse()?;
    Ok(AlgebraPresentation::parse(a.gens, ring, &a.relations)?)
}

/// Computes a table, consulting and filling the cache when one is configured.
fn table_for(pres: &AlgebraPresentation, a: &AlgebraArgs, i: usize) -> Result<BigradedTable, Failure> {
    let cache = Cache::configured(a.cache_dir.as_deref());
    let key = ComputationKey::new(pres, i, a.max_degree, a.max_dim);
    if let Some(hit) = cache.as_ref().and_then(|c| c.get(&key)) {
        log::info!("cache hit for N_{i} at bound {}", a.max_degree);
        return Ok(hit.table);
    }
    let start = Instant::now();
    let table = Engine::new(pres.clone())?
        .with_max_dim(a.max_dim)
        .table(i, a.max_degree)?;
    let secs = start.elapsed().as_secs_f64();
    log::info!("computed N_{i} up to total degree {} in {secs:.2}s", a.max_degree);
    if let Some(c) = cache {
        let record = CacheRecord {
            key,
            table: table.clone(),
            wall_time_secs: secs,
            peak_memory_bytes: peak_memory_bytes(),
        };
        if let Err(e) = c.put(&record) {
            log::warn!("could not write cache entry in {}: {e}", c.dir().display());
        }
    }
    Ok(table)
}

fn compute(a: ComputeArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let pres = presentation(&a.algebra)?;
    let table = table_for(&pres, &a.algebra, a.algebra.i)?;
    let text = emit(&table, a.format);
    match &a.out {
        Some(path) => std::fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    let blanks = table.blank_count();
    if blanks > 0 {
        writeln!(
            err,
            "warning: {blanks} components exceed the limit of {} words and were left blank",
            a.algebra.max_dim
        )?;
        return Ok(3);
    }
    Ok(0)
}

fn report_diff(report: &DiffReport, out: &mut dyn Write) -> Result<i32, Failure> {
    writeln!(out, "{report}")?;
    Ok(if report.all_match() { 0 } else { 1 })
}

fn verify(a: VerifyArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let pres = presentation(&a.algebra)?;
    match a.against {
        Against::N2 | Against::N3 => {
            let (m, n) = pres
                .power_exponents()
                .ok_or_else(|| Failure(2, "closed forms need two generators and relations x1^m, x2^n".into()))?;
            if pres.ring() != Ring::Integers {
                return Err(Failure(2, "closed forms describe tables over Z".into()));
            }
            let (i, predicted) = match a.against {
                Against::N2 => (2, predict_n2(m, n)?),
                _ => (3, predict_n3(m, n)?),
            };
            let table = table_for(&pres, &a.algebra, i)?;
            report_diff(&diff_tables(&table, &predicted), out)
        }
        Against::FpConjecture => {
            let p = match (a.p, pres.ring()) {
                (Some(p), _) => p,
                (None, Ring::PrimeField(p)) => p,
                (None, Ring::Integers) => return Err(Failure(2, "fp-conjecture needs --p".into())),
            };
            let z_pres = pres.with_ring(Ring::Integers);
            let fp_pres = pres.with_ring(Ring::prime_field(p)?);
            let z = table_for(&z_pres, &a.algebra, a.algebra.i)?;
            let fp = table_for(&fp_pres, &a.algebra, a.algebra.i)?;
            let predicted = predict_fp_from_z(&z, p)?;
            report_diff(&diff_tables(&fp, &predicted), out)
        }
    }
}

fn check(a: CheckArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let kind = match (a.kind, a.check) {
        (Some(k), None) | (None, Some(k)) => k,
        (Some(k), Some(c)) if k == c => k,
        (Some(_), Some(_)) => return Err(Failure(2, "conflicting check kinds".into())),
        (None, None) => return Err(Failure(2, "choose a check: divisibility, hilbert or weyl".into())),
    };
    match kind {
        CheckKind::Weyl => {
            let p = a.p.ok_or_else(|| Failure(2, "weyl check needs --p".into()))?;
            let n = a.n.ok_or_else(|| Failure(2, "weyl check needs --n".into()))?;
            let reports = weyl_suite(p, n)?;
            let failed = reports.iter().filter(|r| !r.passed).count();
            for r in reports.iter().filter(|r| !r.passed) {
                writeln!(out, "{r}")?;
            }
            writeln!(
                out,
                "{} operator identities checked, {failed} failed (p = {p}, n = {n})",
                reports.len()
            )?;
            Ok(if failed == 0 { 0 } else { 1 })
        }
        CheckKind::Divisibility | CheckKind::Hilbert => {
            let pres = presentation(&a.algebra)?;
            let Ring::PrimeField(p) = pres.ring() else {
                return Err(Failure(2, "divisibility checks need --ring Fp:<p>".into()));
            };
            let exps = match a.exps {
                Some(e) => e,
                None => infer_exps(&pres, p)
                    .ok_or_else(|| Failure(2, "could not infer --exps from the relations".into()))?,
            };
            let table = table_for(&pres, &a.algebra, a.algebra.i)?;
            if kind == CheckKind::Divisibility {
                let r = check_dim_divisibility(&table, &exps)?;
                writeln!(out, "{r}")?;
                Ok(if r.passed { 0 } else { 1 })
            } else {
                crate::weyl::check_power_relations(&table.meta.relations, table.meta.gens, p, &exps)?;
                let r = check_hilbert(&table, a.variable, &exps)?;
                writeln!(out, "{r}")?;
                Ok(if r.passed() { 0 } else { 1 })
            }
        }
    }
}

/// Largest `n_j` per generator such that every run of `x_j` in every
/// relation word has length divisible by `p^{n_j}`.
fn infer_exps(pres: &AlgebraPresentation, p: u64) -> Option<Vec<u32>> {
    if p < 2 {
        return None;
    }
    let mut exps = Vec::new();
    for g in 1..=pres.gens() {
        let runs: Vec<usize> = pres
            .relations()
            .iter()
            .flat_map(|r| r.terms().keys().flat_map(move |w| w.runs_of(g as u8)))
            .collect();
        let mut n = 0u32;
        if !runs.is_empty() {
            while let Some(q) = p.checked_pow(n + 1) {
                if runs.iter().any(|&r| !(r as u64).is_multiple_of(q)) {
                    break;
                }
                n += 1;
            }
        }
        exps.push(n);
    }
    Some(exps)
}
