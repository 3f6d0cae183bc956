//! Report documents, character-table persistence, and the command
//! implementations behind the `csf` binary.
//!
//! Everything on stdout is a single JSON document with a `schema_version`;
//! progress and diagnostics go to stderr. Exit codes: 0 computed, 2
//! usage/parse errors, 3 arithmetic overflow, 4 I/O failure.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::Serialize;

use csf_core::{
    csf_schur, negative_schur_coefficients, partitions_of, spider, theorem_verdict,
    verify_theorem, CharacterTable, Coeff, Error as CoreError, Graph, Partition, SymPoly,
    TheoremVerdict,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_OVERFLOW: i32 = 3;
pub const EXIT_IO: i32 = 4;

/// Character tables above this degree are refused by the CLI; the abacus
/// encoding goes further, but nothing here needs it and the file would be
/// enormous.
pub const MAX_CLI_TABLE_DEGREE: usize = 22;

/// Hub degrees at or above this require --force: the sweep enumerates
/// 2^(2n-1) edge subsets per candidate.
pub const FORCE_THRESHOLD: usize = 11;

#[derive(Debug)]
pub enum CliError {
    Core(CoreError),
    Io(std::io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "i/o failure: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(CoreError::Overflow(_)) => EXIT_OVERFLOW,
            CliError::Core(_) => EXIT_USAGE,
            CliError::Io(_) => EXIT_IO,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

// ---------------------------------------------------------------------------
// JSON payloads
// ---------------------------------------------------------------------------

/// Envelope for every stdout document.
#[derive(Debug, Serialize)]
pub struct Document<T: Serialize> {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub inputs: serde_json::Value,
    pub results: T,
    /// Wall-clock seconds per phase. Excluded from report files so that
    /// repeated runs stay byte-identical.
    pub timing: BTreeMap<&'static str, f64>,
}

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Serialize)]
pub struct GraphJson {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> GraphJson {
        GraphJson {
            vertices: g.vertex_count(),
            edges: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct TermJson {
    pub lambda: Vec<usize>,
    pub coeff: i64,
}

/// Positivity analysis of a single tree, as published in report files.
#[derive(Debug, Serialize)]
pub struct TreeReportJson {
    pub nu: Vec<usize>,
    pub vertices: usize,
    pub schur: Vec<TermJson>,
    pub negative: Vec<TermJson>,
    pub schur_positive: bool,
}

/// The full verify report: this exact structure is written to --out.
#[derive(Debug, Serialize)]
pub struct VerifyReportJson {
    pub schema_version: &'static str,
    pub n: usize,
    pub reports: Vec<TreeReportJson>,
    pub verdict: String,
}

#[derive(Debug, Serialize)]
pub struct ChartableResultJson {
    pub n: usize,
    pub partitions: usize,
    pub path: String,
    pub reused: bool,
}

fn coeff_to_i64(c: Coeff) -> CliResult<i64> {
    i64::try_from(c).map_err(|_| CliError::Core(CoreError::Overflow("report coefficient")))
}

fn terms_to_json(terms: impl IntoIterator<Item = (Partition, Coeff)>) -> CliResult<Vec<TermJson>> {
    terms
        .into_iter()
        .map(|(lam, c)| {
            Ok(TermJson { lambda: lam.parts().to_vec(), coeff: coeff_to_i64(c)? })
        })
        .collect()
}

fn expansion_to_json(f: &SymPoly) -> CliResult<Vec<TermJson>> {
    terms_to_json(f.iter().map(|(lam, c)| (lam.clone(), c)))
}

pub fn tree_report_json(
    nu: &Partition,
    vertices: usize,
    schur: &SymPoly,
) -> CliResult<TreeReportJson> {
    let negative = negative_schur_coefficients(schur);
    Ok(TreeReportJson {
        nu: nu.parts().to_vec(),
        vertices,
        schur: expansion_to_json(schur)?,
        schur_positive: negative.is_empty(),
        negative: terms_to_json(negative)?,
    })
}

// ---------------------------------------------------------------------------
// Character-table persistence
// ---------------------------------------------------------------------------
//
// Text format: a header line "CHARTABLE v1 n=<n> count=<p(n)>", then one
// line "<lambda> <mu> <value>" per entry, rows and columns both in the fixed
// partition enumeration order. Loading validates the header, every key, and
// the trivial-character row, and any defect is reported so callers can
// rebuild; the cache is an optimization, never an authority.

/// Resolves the cache file for degree `n`: an explicit --cache path wins,
/// then `$CSF_CACHE_DIR/chartable-<n>.txt`, then `.csf-cache/chartable-<n>.txt`.
pub fn cache_file_path(explicit: Option<&Path>, n: usize) -> PathBuf {
    if let Some(p) = explicit {
        return p.to_path_buf();
    }
    let dir = std::env::var_os("CSF_CACHE_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(".csf-cache"));
    dir.join(format!("chartable-{n}.txt"))
}

/// Writes the table atomically (temp file in the target directory, then
/// rename).
pub fn write_table(table: &CharacterTable, path: &Path) -> CliResult<()> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty());
    if let Some(dir) = dir {
        fs::create_dir_all(dir)?;
    }
    let mut tmp = tempfile::NamedTempFile::new_in(dir.unwrap_or(Path::new(".")))?;
    {
        let out = &mut tmp;
        let parts = table.partitions();
        writeln!(out, "CHARTABLE v1 n={} count={}", table.degree(), parts.len())?;
        for (li, lam) in parts.iter().enumerate() {
            for (mj, mu) in parts.iter().enumerate() {
                writeln!(out, "{lam} {mu} {}", table.value_at(li, mj))?;
            }
        }
    }
    tmp.flush()?;
    tmp.persist(path).map_err(|e| CliError::Io(e.error))?;
    Ok(())
}

/// Why a cache file was rejected. `Unreadable` wraps I/O problems other than
/// the file simply not existing.
#[derive(Debug)]
pub enum CacheDefect {
    Missing,
    Unreadable(std::io::Error),
    Malformed(String),
}

impl fmt::Display for CacheDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CacheDefect::Missing => f.write_str("no cache file"),
            CacheDefect::Unreadable(e) => write!(f, "unreadable: {e}"),
            CacheDefect::Malformed(why) => write!(f, "malformed: {why}"),
        }
    }
}

/// Strict cache reader: the degree must match, all p(n)^2 keys must appear
/// in row-major enumeration order, and the trivial-character row must be
/// all ones (a cheap corruption tripwire).
pub fn read_table(path: &Path, n: usize) -> std::result::Result<CharacterTable, CacheDefect> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Err(CacheDefect::Missing),
        Err(e) => return Err(CacheDefect::Unreadable(e)),
    };
    let bad = |why: String| CacheDefect::Malformed(why);
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| bad("empty file".into()))?;
    let expected_keys = partitions_of(n);
    let count = expected_keys.len();
    let expected_header = format!("CHARTABLE v1 n={n} count={count}");
    if header != expected_header {
        return Err(bad(format!("header {header:?}, wanted {expected_header:?}")));
    }
    let mut values = vec![vec![0 as Coeff; count]; count];
    for li in 0..count {
        for mj in 0..count {
            let line = lines
                .next()
                .ok_or_else(|| bad(format!("truncated at entry ({li},{mj})")))?;
            let mut fields = line.split_whitespace();
            let (Some(lam), Some(mu), Some(value), None) =
                (fields.next(), fields.next(), fields.next(), fields.next())
            else {
                return Err(bad(format!("entry ({li},{mj}) is not three fields")));
            };
            if lam != expected_keys[li].to_string() || mu != expected_keys[mj].to_string() {
                return Err(bad(format!("keys out of order at entry ({li},{mj})")));
            }
            values[li][mj] = value
                .parse()
                .map_err(|e| bad(format!("bad value at entry ({li},{mj}): {e}")))?;
        }
    }
    if lines.next().is_some() {
        return Err(bad("trailing data after the final entry".into()));
    }
    if values[0].iter().any(|&v| v != 1) {
        return Err(bad("trivial-character row is not all ones".into()));
    }
    CharacterTable::from_rows(n, values)
        .map_err(|e| bad(format!("table assembly rejected the file: {e}")))
}

/// Returns the degree-`n` table from `path` when the file is valid, building
/// and re-persisting it otherwise. The boolean is true when the cache was
/// reused. A failure to *write* the rebuilt cache only warns: the table in
/// memory is still good.
pub fn load_or_build_table(n: usize, path: &Path) -> CliResult<(CharacterTable, bool)> {
    match read_table(path, n) {
        Ok(table) => {
            eprintln!("reusing character table cache at {}", path.display());
            return Ok((table, true));
        }
        Err(CacheDefect::Missing) => {}
        Err(defect) => {
            eprintln!(
                "cache at {} rejected ({defect}); rebuilding",
                path.display()
            );
        }
    }
    eprintln!("building character table for degree {n} ({} partitions)", partitions_of(n).len());
    let table = CharacterTable::build(n)?;
    if let Err(e) = write_table(&table, path) {
        eprintln!("warning: could not persist cache to {}: {e}", path.display());
    }
    Ok((table, false))
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

fn secs(since: Instant) -> f64 {
    since.elapsed().as_secs_f64()
}

pub fn run_spider(nu_text: &str) -> CliResult<Document<GraphJson>> {
    let start = Instant::now();
    let nu: Partition = nu_text.parse().map_err(CliError::Core)?;
    let graph = spider(&nu);
    let mut timing = BTreeMap::new();
    timing.insert("total", secs(start));
    Ok(Document {
        schema_version: SCHEMA_VERSION,
        command: "spider",
        inputs: serde_json::json!({ "nu": nu.parts() }),
        results: GraphJson::from_graph(&graph),
        timing,
    })
}

pub fn run_expand(
    nu_text: &str,
    cache: Option<&Path>,
) -> CliResult<Document<TreeReportJson>> {
    let start = Instant::now();
    let nu: Partition = nu_text.parse().map_err(CliError::Core)?;
    let graph = spider(&nu);
    let degree = graph.vertex_count();
    let cache_path = cache_file_path(cache, degree);
    let table_start = Instant::now();
    let (table, _) = load_or_build_table(degree, &cache_path)?;
    let table_secs = secs(table_start);
    let expand_start = Instant::now();
    let schur = csf_schur(&graph, &table)?;
    let report = tree_report_json(&nu, degree, &schur)?;
    let mut timing = BTreeMap::new();
    timing.insert("table", table_secs);
    timing.insert("expand", secs(expand_start));
    timing.insert("total", secs(start));
    Ok(Document {
        schema_version: SCHEMA_VERSION,
        command: "expand",
        inputs: serde_json::json!({
            "nu": nu.parts(),
            "cache": cache.map(|p| p.display().to_string()),
        }),
        results: report,
        timing,
    })
}

pub fn run_verify(
    n: usize,
    cache: Option<&Path>,
    out: Option<&Path>,
    force: bool,
) -> CliResult<Document<VerifyReportJson>> {
    let start = Instant::now();
    if n == 0 {
        return Err(CliError::Core(CoreError::InvalidArgument(
            "hub degree must be positive",
        )));
    }
    if n >= FORCE_THRESHOLD && !force {
        return Err(CliError::Core(CoreError::InvalidArgument(
            "sweeps with n >= 11 enumerate 2^(2n-1) edge subsets per tree; pass --force to run anyway",
        )));
    }
    let degree = 2 * n;
    let cache_path = cache_file_path(cache, degree);
    let table_start = Instant::now();
    let (table, _) = load_or_build_table(degree, &cache_path)?;
    let table_secs = secs(table_start);

    let sweep_start = Instant::now();
    let reports = verify_theorem(n, &table)?;
    let verdict = theorem_verdict(&reports);
    for r in &reports {
        eprintln!(
            "nu={}: {}",
            r.nu,
            if r.schur_positive {
                "schur positive".to_string()
            } else {
                format!("{} negative coefficients", r.negative.len())
            }
        );
    }
    let report_json = VerifyReportJson {
        schema_version: SCHEMA_VERSION,
        n,
        reports: reports
            .iter()
            .map(|r| tree_report_json(&r.nu, r.graph.vertex_count(), &r.schur))
            .collect::<CliResult<_>>()?,
        verdict: verdict.to_string(),
    };
    if let Some(out_path) = out {
        let mut body = serde_json::to_string_pretty(&report_json)
            .expect("report serialization cannot fail");
        body.push('\n');
        fs::write(out_path, body)?;
        eprintln!("wrote {} reports to {}", report_json.reports.len(), out_path.display());
    }
    match verdict {
        TheoremVerdict::Verified => {
            eprintln!("verdict: VERIFIED (no candidate is Schur positive)")
        }
        TheoremVerdict::CounterexampleAbsent => {
            eprintln!("verdict: COUNTEREXAMPLE-ABSENT (a Schur-positive candidate exists)")
        }
    }
    let mut timing = BTreeMap::new();
    timing.insert("table", table_secs);
    timing.insert("sweep", secs(sweep_start));
    timing.insert("total", secs(start));
    Ok(Document {
        schema_version: SCHEMA_VERSION,
        command: "verify",
        inputs: serde_json::json!({
            "n": n,
            "cache": cache.map(|p| p.display().to_string()),
            "out": out.map(|p| p.display().to_string()),
            "force": force,
        }),
        results: report_json,
        timing,
    })
}

pub fn run_chartable(n: usize, cache: &Path) -> CliResult<Document<ChartableResultJson>> {
    let start = Instant::now();
    if n == 0 || n > MAX_CLI_TABLE_DEGREE {
        return Err(CliError::Core(CoreError::TooLarge {
            what: "chartable degree",
            limit: MAX_CLI_TABLE_DEGREE,
            actual: n,
        }));
    }
    let (table, reused) = match read_table(cache, n) {
        Ok(table) => {
            eprintln!("valid cache already at {}; not recomputing", cache.display());
            (table, true)
        }
        Err(CacheDefect::Missing) => {
            eprintln!("building character table for degree {n}");
            let table = CharacterTable::build(n)?;
            write_table(&table, cache)?;
            (table, false)
        }
        Err(defect) => {
            eprintln!("cache at {} rejected ({defect}); rebuilding", cache.display());
            let table = CharacterTable::build(n)?;
            write_table(&table, cache)?;
            (table, false)
        }
    };
    let mut timing = BTreeMap::new();
    timing.insert("total", secs(start));
    Ok(Document {
        schema_version: SCHEMA_VERSION,
        command: "chartable",
        inputs: serde_json::json!({ "n": n, "cache": cache.display().to_string() }),
        results: ChartableResultJson {
            n,
            partitions: table.partitions().len(),
            path: cache.display().to_string(),
            reused,
        },
        timing,
    })
}

/// Serializes a document for stdout.
pub fn render<T: Serialize>(doc: &Document<T>) -> String {
    let mut body = serde_json::to_string_pretty(doc).expect("document serialization cannot fail");
    body.push('\n');
    body
}
