//! The `garden` command line: enumeration, counts, Hurwitz numbers,
//! extraction and cached tables.
//!
//! Exit codes: 0 success, 1 invalid flags or input, 2 search budget
//! exceeded, 3 internal disagreement (Hurwitz forms or cache contents),
//! 4 non-generic function, 5 tracing or consistency failure in extraction.
//! Data goes to stdout, diagnostics to stderr.

mod cache;

use std::ffi::OsString;
use std::fmt::Display;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

pub use cache::{Cache, CacheEntry, CacheKey, TableRow};

use crate::enumerate::{enumerate_gardens, Budget, EnumerationError, EnumerationQuery, Restriction};
use crate::extract::{extract, ExtractError, RationalFunction, TraceConfig};
use crate::garden::{Garden, GardenJson, Weight};
use crate::hurwitz::{direct_count_garden, hurwitz_garden, real_hurwitz_table, to_decimal_string, HurwitzError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_DISAGREE: i32 = 3;
pub const EXIT_NON_GENERIC: i32 = 4;
pub const EXIT_TRACING: i32 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Jsonl,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "garden", version, about = "Gardens of generic real rational functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Table cache directory [default: $GARDEN_CACHE_DIR, or no cache].
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Maximum number of search nodes for enumeration.
    #[arg(long, global = true)]
    budget_nodes: Option<u64>,
    /// Realness and coincidence tolerance for extraction.
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Samples per interval between consecutive real critical values.
    #[arg(long, global = true)]
    grid: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print one canonical garden per equivalence class, then a summary.
    Enumerate(Query),
    /// Print the number of classes per chord count as `n,l,count`.
    Count {
        #[command(flatten)]
        query: Query,
        /// Recompute and compare with the cached table.
        #[arg(long)]
        verify_cache: bool,
    },
    /// Compute H_G of a garden two ways and compare.
    Hurwitz {
        /// Garden JSON, or an object with a "garden" field.
        file: PathBuf,
    },
    /// Extract the garden of a real rational function.
    Extract(ExtractArgs),
    /// Print `n,l,count,sum_HG` for every weight up to a bound.
    Tables {
        #[arg(long)]
        max_weight: Weight,
        /// Recompute and compare with the cached tables.
        #[arg(long)]
        verify_cache: bool,
    },
}

#[derive(Debug, Args)]
struct Query {
    #[arg(long)]
    weight: Weight,
    /// Diagram order `2l`.
    #[arg(long)]
    order: Option<usize>,
    /// One of all, elliptic, hyperbolic.
    #[arg(long, default_value = "all")]
    restriction: Restriction,
}

impl Query {
    fn to_query(&self) -> EnumerationQuery {
        let q = EnumerationQuery::new(self.weight).with_restriction(self.restriction);
        match self.order {
            Some(o) => q.with_order(o),
            None => q,
        }
    }
}

#[derive(Debug, Args)]
struct ExtractArgs {
    /// Numerator coefficients in ascending degree, comma separated.
    #[arg(long, allow_hyphen_values = true, required_unless_present = "input")]
    num: Option<String>,
    /// Denominator coefficients [default: 1].
    #[arg(long, allow_hyphen_values = true, conflicts_with = "input")]
    den: Option<String>,
    /// JSON file `{"num": [...], "den": [...]}`.
    #[arg(long, conflicts_with = "num")]
    input: Option<PathBuf>,
}

struct Failure {
    code: i32,
    message: String,
}

fn fail(code: i32, message: impl Display) -> Failure {
    Failure {
        code,
        message: message.to_string(),
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        fail(EXIT_INVALID, format!("i/o error: {e}"))
    }
}

impl From<EnumerationError> for Failure {
    fn from(e: EnumerationError) -> Self {
        match e {
            EnumerationError::BudgetExceeded { .. } => fail(EXIT_BUDGET, e),
            EnumerationError::InvalidQuery(_) => fail(EXIT_INVALID, e),
        }
    }
}

impl From<HurwitzError> for Failure {
    fn from(e: HurwitzError) -> Self {
        match e {
            HurwitzError::Enumeration(inner) => inner.into(),
            HurwitzError::Inconsistent(_) => fail(EXIT_DISAGREE, e),
            _ => fail(EXIT_INVALID, e),
        }
    }
}

impl From<ExtractError> for Failure {
    fn from(e: ExtractError) -> Self {
        let code = match e {
            ExtractError::NonGeneric { .. } => EXIT_NON_GENERIC,
            ExtractError::TracingFailure(_) | ExtractError::Internal(_) => EXIT_TRACING,
            ExtractError::DegenerateInput(_) | ExtractError::Parse(_) => EXIT_INVALID,
        };
        fail(code, e)
    }
}

struct Context<'a> {
    cli: &'a Cli,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Context<'_> {
    fn budget(&self) -> Budget {
        let mut b = Budget::default();
        if let Some(n) = self.cli.budget_nodes {
            b.max_nodes = n;
        }
        b
    }

    fn cache(&self) -> Option<Cache> {
        self.cli
            .cache_dir
            .clone()
            .or_else(|| std::env::var_os("GARDEN_CACHE_DIR").map(PathBuf::from))
            .map(Cache::new)
    }

    fn line(&mut self, s: impl Display) -> Result<(), Failure> {
        writeln!(self.out, "{s}")?;
        Ok(())
    }

    fn note(&mut self, s: impl Display) {
        // Diagnostics are best effort.
        let _ = writeln!(self.err, "{s}");
    }
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    EXIT_INVALID
                }
            };
        }
    };
    let mut cx = Context {
        cli: &cli,
        out: stdout,
        err: stderr,
    };
    let result = match &cli.command {
        Command::Enumerate(q) => cmd_enumerate(&mut cx, q),
        Command::Count { query, verify_cache } => cmd_count(&mut cx, query, *verify_cache),
        Command::Hurwitz { file } => cmd_hurwitz(&mut cx, file),
        Command::Extract(a) => cmd_extract(&mut cx, a),
        Command::Tables {
            max_weight,
            verify_cache,
        } => cmd_tables(&mut cx, *max_weight, *verify_cache),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            cx.note(format!("error: {}", f.message));
            f.code
        }
    }
}

fn cmd_enumerate(cx: &mut Context, q: &Query) -> Result<i32, Failure> {
    let format = cx.cli.format.unwrap_or(Format::Jsonl);
    if format == Format::Csv {
        return Err(fail(EXIT_INVALID, "enumerate writes json or jsonl"));
    }
    let r = enumerate_gardens(&q.to_query(), cx.budget())?;
    let summary = json!({
        "weight": q.weight,
        "order": q.order,
        "restriction": q.restriction.to_string(),
        "count": r.total(),
        "by_l": r.counts.iter().map(|(l, c)| (l.to_string(), json!(c))).collect::<serde_json::Map<_, _>>(),
    });
    match format {
        Format::Jsonl => {
            for g in &r.gardens {
                cx.line(g.to_json_string())?;
            }
            cx.line(json!({ "summary": summary }))?;
        }
        _ => {
            let gardens: Vec<GardenJson> = r.gardens.iter().map(Garden::to_json).collect();
            cx.line(json!({ "gardens": gardens, "summary": summary }))?;
        }
    }
    Ok(EXIT_OK)
}

fn write_rows(cx: &mut Context, rows: &[TableRow], with_sums: bool) -> Result<(), Failure> {
    match cx.cli.format.unwrap_or(Format::Csv) {
        Format::Csv => {
            cx.line(if with_sums { "n,l,count,sum_HG" } else { "n,l,count" })?;
            for r in rows {
                match (&r.sum_hg, with_sums) {
                    (Some(s), true) => cx.line(format!("{},{},{},{}", r.n, r.l, r.count, s))?,
                    _ => cx.line(format!("{},{},{}", r.n, r.l, r.count))?,
                }
            }
        }
        Format::Jsonl => {
            for r in rows {
                cx.line(serde_json::to_string(r).expect("row serializes"))?;
            }
        }
        Format::Json => cx.line(serde_json::to_string(rows).expect("rows serialize"))?,
    }
    Ok(())
}

/// Looks `key` up in the cache, computing and storing it when absent. With
/// `verify`, always recomputes and fails on a mismatch.
fn cached(
    cx: &mut Context,
    key: &CacheKey,
    verify: bool,
    compute: impl FnOnce(Budget) -> Result<Vec<TableRow>, Failure>,
) -> Result<Vec<TableRow>, Failure> {
    let cache = cx.cache();
    let hit = cache.as_ref().and_then(|c| c.load(key));
    if let (Some(entry), false) = (&hit, verify) {
        let path = cache.as_ref().expect("hit implies cache").path(key);
        cx.note(format!("cache hit: {}", path.display()));
        return Ok(entry.payload.clone());
    }
    let rows = compute(cx.budget())?;
    if let Some(entry) = hit {
        if entry.payload != rows {
            return Err(fail(
                EXIT_DISAGREE,
                format!("cached table for n = {} differs from the recomputed one", key.n),
            ));
        }
        cx.note(format!("cache verified: n = {}", key.n));
    } else if let Some(c) = cache {
        if verify {
            cx.note(format!("no cached table for n = {}; storing the computed one", key.n));
        }
        match c.store(key, &rows) {
            Ok(path) => cx.note(format!("cache write: {}", path.display())),
            Err(e) => cx.note(format!("warning: cannot write cache: {e}")),
        }
    }
    Ok(rows)
}

fn cmd_count(cx: &mut Context, q: &Query, verify: bool) -> Result<i32, Failure> {
    let query = q.to_query();
    query.chord_counts()?;
    let key = CacheKey::new("count", q.weight, q.order, &q.restriction.to_string());
    let rows = cached(cx, &key, verify, |budget| {
        let r = enumerate_gardens(&query, budget)?;
        Ok(r.counts
            .iter()
            .map(|(&l, &count)| TableRow {
                n: q.weight,
                l,
                count,
                sum_hg: None,
            })
            .collect())
    })?;
    write_rows(cx, &rows, false)?;
    Ok(EXIT_OK)
}

fn cmd_tables(cx: &mut Context, max_weight: Weight, verify: bool) -> Result<i32, Failure> {
    if max_weight == 0 {
        return Err(fail(EXIT_INVALID, "--max-weight must be at least 1"));
    }
    let mut all = Vec::new();
    for n in 1..=max_weight {
        let key = CacheKey::new("tables", n, None, "all");
        let rows = cached(cx, &key, verify, |budget| {
            let t = real_hurwitz_table(n, budget)?;
            Ok(t.rows
                .iter()
                .map(|(&l, row)| TableRow {
                    n,
                    l,
                    count: row.gardens,
                    sum_hg: Some(row.sum.to_string()),
                })
                .collect())
        })?;
        all.extend(rows);
    }
    write_rows(cx, &all, true)?;
    Ok(EXIT_OK)
}

fn emit_json(cx: &mut Context, v: &impl Serialize) -> Result<(), Failure> {
    if cx.cli.format == Some(Format::Csv) {
        return Err(fail(EXIT_INVALID, "this command writes json"));
    }
    cx.line(serde_json::to_string(v).expect("output serializes"))
}

fn cmd_hurwitz(cx: &mut Context, file: &PathBuf) -> Result<i32, Failure> {
    let text = std::fs::read_to_string(file).map_err(|e| fail(EXIT_INVALID, format!("{}: {e}", file.display())))?;
    let mut value: Value = serde_json::from_str(&text).map_err(|e| fail(EXIT_INVALID, format!("malformed JSON: {e}")))?;
    if let Some(inner) = value.get_mut("garden") {
        value = inner.take();
    }
    let gj: GardenJson =
        serde_json::from_value(value).map_err(|e| fail(EXIT_INVALID, format!("not a garden: {e}")))?;
    let g = Garden::try_from(gj).map_err(|e| fail(EXIT_INVALID, e))?;
    let report = g.validate();
    if !report.is_ok() {
        return Err(fail(EXIT_INVALID, format!("invalid garden: {report}")));
    }
    let h = hurwitz_garden(&g)?;
    let direct = direct_count_garden(&g)?;
    let agree = h == direct;
    emit_json(
        cx,
        &json!({
            "garden": g.to_json(),
            "H_G": to_decimal_string(&h),
            "direct": to_decimal_string(&direct),
            "agree": agree,
        }),
    )?;
    if agree {
        Ok(EXIT_OK)
    } else {
        cx.note("error: H_G and the direct count disagree");
        Ok(EXIT_DISAGREE)
    }
}

fn split_coefficients(s: &str) -> Vec<&str> {
    s.split(',').map(str::trim).filter(|c| !c.is_empty()).collect()
}

fn cmd_extract(cx: &mut Context, a: &ExtractArgs) -> Result<i32, Failure> {
    let f = match (&a.input, &a.num) {
        (Some(path), _) => {
            let text =
                std::fs::read_to_string(path).map_err(|e| fail(EXIT_INVALID, format!("{}: {e}", path.display())))?;
            RationalFunction::from_json_str(&text)?
        }
        (None, Some(num)) => {
            let den = a.den.as_deref().unwrap_or("1");
            RationalFunction::from_strs(&split_coefficients(num), &split_coefficients(den))?
        }
        (None, None) => return Err(fail(EXIT_INVALID, "either --num or --input is required")),
    };
    let mut cfg = TraceConfig::default();
    if let Some(t) = cx.cli.tol {
        if !(t > 0.0 && t.is_finite()) {
            return Err(fail(EXIT_INVALID, "--tol must be positive"));
        }
        cfg.tol = t;
    }
    if let Some(g) = cx.cli.grid {
        if g < 2 {
            return Err(fail(EXIT_INVALID, "--grid must be at least 2"));
        }
        cfg.samples = g;
        cfg.max_samples = cfg.max_samples.max(g);
    }
    let e = extract(&f, &cfg)?;
    emit_json(
        cx,
        &json!({
            "garden": e.garden.to_json(),
            "diagnostics": e.diagnostics,
        }),
    )?;
    Ok(EXIT_OK)
}

