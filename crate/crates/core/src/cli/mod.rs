//! Command-line front end: `verify` and `table` sweep a grid of `(n, k)`
//! cells, `decompose` splits a space expression into irreducibles.
//!
//! Exit codes: 0 when every cell passes, 1 when some cell fails, 2 for
//! usage or configuration errors.

mod alpha;
mod expr;

use std::fmt;
use std::io::Write;
use std::ops::RangeInclusive;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::cohomology::{full_verification, DimensionReport};
use crate::instanton_maps::MonadSpec;

pub use alpha::{read_alpha_file, AlphaSource};
pub use expr::{parse_space, ParseError};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;

/// Environment fallback for `--jobs`.
pub const JOBS_ENV: &str = "INSTANTON_EXT2_JOBS";

/// Inclusive range written `A..B` or `A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub lo: i64,
    pub hi: i64,
}

impl Span {
    pub fn iter(&self) -> RangeInclusive<i64> {
        self.lo..=self.hi
    }
}

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<i64>().map_err(|_| format!("not an integer: `{t}`"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range {lo}..{hi}"));
        }
        Ok(Span { lo, hi })
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

impl Serialize for Span {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [self.lo, self.hi].serialize(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Parser, Debug)]
#[command(name = "instanton-ext2", version, about = "Exact verification of Ext² for special symplectic instanton bundles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Verify every (n, k) cell and emit one report per cell (JSON by default).
    Verify(GridArgs),
    /// Tabulate formulas against computed ranks (CSV by default).
    Table(GridArgs),
    /// Decompose a space expression, e.g. "S(0)*S(0)*Sym2(V(0))".
    Decompose {
        expression: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Args, Debug)]
struct GridArgs {
    /// n range, `A..B` or a single value.
    #[arg(long, default_value = "1..3")]
    n: Span,
    /// k range, `A..B` or a single value.
    #[arg(long, default_value = "2..6")]
    k: Span,
    /// `random`, a comma-separated list of rationals, or `@file`.
    #[arg(long, default_value = "random", allow_hyphen_values = true)]
    alpha: AlphaSource,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random points per cell for the fiber checks (20 curve points are
    /// always added).
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Worker threads; falls back to INSTANTON_EXT2_JOBS, then to
    /// min(cells, cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// Zero the timing field so identical runs give identical bytes.
    #[arg(long)]
    stable: bool,
}

/// Validated settings of a grid run, embedded in every JSON report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub n: Span,
    pub k: Span,
    pub alpha: AlphaSource,
    pub seed: u64,
    pub samples: usize,
    pub format: Format,
    pub jobs: usize,
    pub stable: bool,
}

impl RunConfig {
    pub fn cells(&self) -> Vec<(i64, i64)> {
        self.n
            .iter()
            .flat_map(|n| self.k.iter().map(move |k| (n, k)))
            .collect()
    }

    fn validate(&self) -> Result<(), String> {
        if self.n.lo < 1 {
            return Err(format!("n must be at least 1, got {}", self.n));
        }
        if self.k.lo < 2 {
            return Err(format!("k must be at least 2, got {}", self.k));
        }
        if self.samples < 1 {
            return Err("samples must be at least 1".into());
        }
        if self.jobs < 1 {
            return Err("jobs must be at least 1".into());
        }
        Ok(())
    }
}

/// Seed of one cell, derived from the run seed so that results do not
/// depend on scheduling.
pub fn cell_seed(seed: u64, n: i64, k: i64) -> u64 {
    let mut h = seed ^ 0x9e37_79b9_7f4a_7c15;
    for x in [n as u64, k as u64] {
        h = (h ^ x).wrapping_mul(0x0100_0000_01b3).rotate_left(29);
    }
    h
}

/// Builds the `MonadSpec` of one cell from the configured `α` source.
fn cell_spec(config: &RunConfig, explicit: Option<&[crate::exactla::Rational]>, n: i64, k: i64) -> Result<MonadSpec, String> {
    match explicit {
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(cell_seed(config.seed, n, k));
            MonadSpec::random(n, k, &mut rng).map_err(|e| e.to_string())
        }
        Some(alpha) => MonadSpec::new(n, k, alpha.to_vec()).map_err(|e| match e {
            crate::Error::InvalidSpec(msg) => msg,
            other => other.to_string(),
        }),
    }
}

#[derive(Serialize)]
struct JsonReport<'a> {
    schema: u32,
    config: &'a RunConfig,
    cells: &'a [DimensionReport],
}

#[derive(Serialize)]
struct CsvRow {
    n: i64,
    k: i64,
    ext2_formula: u64,
    ext2_computed: u64,
    ext1_formula: u64,
    euler: i64,
    char_match: bool,
    phi_rank: usize,
    eps_rank: usize,
    elapsed_ms: u64,
}

impl From<&DimensionReport> for CsvRow {
    fn from(r: &DimensionReport) -> Self {
        CsvRow {
            n: r.n,
            k: r.k,
            ext2_formula: r.ext2_formula,
            ext2_computed: r.ext2_computed,
            ext1_formula: r.ext1_formula,
            euler: r.euler,
            char_match: r.char_match,
            phi_rank: r.ranks.phi,
            eps_rank: r.ranks.epsilon,
            elapsed_ms: r.elapsed_ms,
        }
    }
}

/// Runs every cell of the grid on `config.jobs` threads; reports come back
/// sorted by `(n, k)`.
pub fn run_grid(config: &RunConfig) -> Result<Vec<DimensionReport>, String> {
    config.validate()?;
    let explicit = match &config.alpha {
        AlphaSource::Random => None,
        AlphaSource::List(xs) => Some(xs.clone()),
        AlphaSource::File(path) => Some(read_alpha_file(path)?),
    };
    let specs = config
        .cells()
        .into_iter()
        .map(|(n, k)| cell_spec(config, explicit.as_deref(), n, k).map(|s| (s, cell_seed(config.seed, n, k))))
        .collect::<Result<Vec<_>, _>>()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| e.to_string())?;
    let mut reports: Vec<DimensionReport> = pool.install(|| {
        specs
            .par_iter()
            .map(|(spec, seed)| {
                let r = full_verification(spec, *seed, config.samples);
                if config.stable {
                    r.without_timing()
                } else {
                    r
                }
            })
            .collect()
    });
    reports.sort_by_key(|r| (r.n, r.k));
    Ok(reports)
}

fn write_reports(out: &mut dyn Write, config: &RunConfig, reports: &[DimensionReport], table: bool) -> std::io::Result<()> {
    match config.format {
        Format::Json => {
            let doc = JsonReport {
                schema: 1,
                config,
                cells: reports,
            };
            serde_json::to_writer_pretty(&mut *out, &doc)?;
            writeln!(out)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            for r in reports {
                w.serialize(CsvRow::from(r))?;
            }
            w.flush()
        }
        Format::Text => {
            for r in reports {
                let status = if r.pass { "PASS" } else { "FAIL" };
                writeln!(
                    out,
                    "n={} k={} {status}  ext2 {}/{}  ext1 {}  euler {}  char {}  phi_rank {}  eps_rank {}  {} ms",
                    r.n,
                    r.k,
                    r.ext2_computed,
                    r.ext2_formula,
                    r.ext1_formula,
                    r.euler,
                    if r.char_match { "ok" } else { "mismatch" },
                    r.ranks.phi,
                    r.ranks.epsilon,
                    r.elapsed_ms
                )?;
                if !table {
                    for f in &r.failures {
                        writeln!(out, "    {f}")?;
                    }
                }
            }
            Ok(())
        }
    }
}

fn resolve_jobs(flag: Option<usize>, cells: usize) -> Result<usize, String> {
    if let Some(j) = flag {
        return Ok(j);
    }
    if let Ok(v) = std::env::var(JOBS_ENV) {
        return v
            .trim()
            .parse()
            .map_err(|_| format!("{JOBS_ENV} must be a positive integer, got `{v}`"));
    }
    let cores = std::thread::available_parallelism().map_or(1, |c| c.get());
    Ok(cells.clamp(1, cores))
}

fn grid_command(args: GridArgs, table: bool, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cells = ((args.n.hi - args.n.lo + 1) * (args.k.hi - args.k.lo + 1)).max(1) as usize;
    let jobs = match resolve_jobs(args.jobs, cells) {
        Ok(j) => j,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_CONFIG;
        }
    };
    let config = RunConfig {
        n: args.n,
        k: args.k,
        alpha: args.alpha,
        seed: args.seed,
        samples: args.samples,
        format: args.format.unwrap_or(if table { Format::Csv } else { Format::Json }),
        jobs,
        stable: args.stable,
    };
    let reports = match run_grid(&config) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_CONFIG;
        }
    };
    if let Err(e) = write_reports(out, &config, &reports, table) {
        let _ = writeln!(err, "error: {e}");
        return EXIT_CONFIG;
    }
    let failed: Vec<_> = reports.iter().filter(|r| !r.pass).collect();
    for r in &failed {
        let _ = writeln!(err, "cell n={} k={} failed: {}", r.n, r.k, r.failures.join("; "));
    }
    if failed.is_empty() {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

#[derive(Serialize)]
struct DecomposeOutput {
    expression: String,
    decomposition: String,
    parts: Vec<(u64, u64)>,
    dim: u64,
}

fn decompose_command(expression: &str, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = parse_space(expression)
        .map_err(|e| e.to_string())
        .and_then(|c| c.decompose().map_err(|e| e.to_string()));
    let d = match result {
        Ok(d) => d,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_CONFIG;
        }
    };
    let written = match format {
        Format::Text => writeln!(out, "{d}\ndim {}", d.dim()),
        Format::Csv => {
            let mut text = String::from("m,multiplicity\n");
            for (m, mult) in d.parts() {
                text.push_str(&format!("{m},{mult}\n"));
            }
            out.write_all(text.as_bytes())
        }
        Format::Json => {
            let doc = DecomposeOutput {
                expression: expression.to_string(),
                decomposition: d.to_string(),
                parts: d.parts().collect(),
                dim: d.dim(),
            };
            serde_json::to_writer_pretty(&mut *out, &doc)
                .map_err(std::io::Error::from)
                .and_then(|_| writeln!(out))
        }
    };
    match written {
        Ok(()) => EXIT_PASS,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_CONFIG
        }
    }
}

/// Parses `args` (program name first) and runs the command, writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { EXIT_PASS };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match cli.command {
        Command::Verify(args) => grid_command(args, false, out, err),
        Command::Table(args) => grid_command(args, true, out, err),
        Command::Decompose { expression, format } => decompose_command(&expression, format, out, err),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["instanton-ext2"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn spans() {
        assert_eq!("2".parse(), Ok(Span { lo: 2, hi: 2 }));
        assert_eq!("1..3".parse(), Ok(Span { lo: 1, hi: 3 }));
        assert_eq!("1..=3".parse(), Ok(Span { lo: 1, hi: 3 }));
        assert!("3..1".parse::<Span>().is_err());
        assert!("a..1".parse::<Span>().is_err());
    }

    #[test]
    fn cell_seeds_differ() {
        assert_ne!(cell_seed(0, 2, 3), cell_seed(0, 3, 2));
        assert_eq!(cell_seed(7, 2, 3), cell_seed(7, 2, 3));
    }

    #[test]
    fn config_errors_exit_2() {
        let (code, _, err) = run_capture(&["verify", "--n", "2", "--k", "3", "--alpha", "0,0,0,0,0,0,0,0,0"]);
        assert_eq!(code, EXIT_CONFIG);
        assert!(err.contains("alpha must be nonzero"), "{err}");
        let (code, _, err) = run_capture(&["verify", "--n", "0", "--k", "3"]);
        assert_eq!(code, EXIT_CONFIG);
        assert!(err.contains("n must be at least 1"));
        let (code, _, _) = run_capture(&["verify", "--bogus"]);
        assert_eq!(code, EXIT_CONFIG);
        let (code, _, _) = run_capture(&["verify", "--n", "2", "--k", "3", "--samples", "0"]);
        assert_eq!(code, EXIT_CONFIG);
    }

    #[test]
    fn decompose_output() {
        let (code, out, _) = run_capture(&["decompose", "S(1)*S(1)"]);
        assert_eq!(code, 0);
        assert_eq!(out, "S_2 + S_0\ndim 4\n");
        let (code, _, err) = run_capture(&["decompose", "S(1)*"]);
        assert_eq!(code, EXIT_CONFIG);
        assert!(err.contains("column 6"), "{err}");
    }
}
