//! Command-line front end.
//!
//! Every command emits a table. CSV output always carries a header row and
//! prints floats in shortest round-trip form; JSON output is one object
//! `{"command", "config", "rows"}`.

use crate::error::{Error, Result};
use crate::hermite::{gaussian_susy_hermite, SusyIndex};
use crate::mehta::{mehta_hartley_vector, poisson_check, EigenvectorFamily, TruncationPolicy};
use crate::spectral::{dht_spectrum, gram_rank, residual_table, DEFAULT_THRESHOLD_FACTOR};
use crate::transform::{dht_apply, Method, RealSequence, TransformPlan};
use clap::{Parser, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Map, Value};
use std::ffi::OsString;
use std::fmt;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::str::FromStr;
use std::time::{Duration, Instant};

pub const MAX_ABS_NU: i64 = 64;
pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_TOLERANCE: i32 = 2;

/// Number of summation terms per side in the `poisson` command.
const POISSON_TERMS: usize = 400;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    /// Finite Hartley transform of an input vector.
    Dht,
    /// Folded Hartley eigenvectors G_ν as matrix columns.
    Eig,
    /// Eigen-residual table; exit status 2 if any residual exceeds --tol.
    Verify,
    /// Both sides of the Hartley–Poisson summation formula.
    Poisson,
    /// Multiplicities of the eigenvalues ±1.
    Spectrum,
    /// Gram-matrix rank and conditioning of an eigenvector family.
    Gram,
    /// Naive versus fast transform timings.
    Bench,
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Command::Dht => "dht",
            Command::Eig => "eig",
            Command::Verify => "verify",
            Command::Poisson => "poisson",
            Command::Spectrum => "spectrum",
            Command::Gram => "gram",
            Command::Bench => "bench",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Hartley,
    Fourier,
}

/// Inclusive signed range `a..b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NuRange {
    pub start: i64,
    pub end: i64,
}

impl NuRange {
    pub fn new(start: i64, end: i64) -> Result<Self> {
        if start > end {
            return Err(Error::InvalidArgument(format!(
                "empty index range {start}..{end}"
            )));
        }
        if start.abs() > MAX_ABS_NU || end.abs() > MAX_ABS_NU {
            return Err(Error::InvalidArgument(format!(
                "index range {start}..{end} exceeds |nu| <= {MAX_ABS_NU}"
            )));
        }
        Ok(Self { start, end })
    }

    pub fn indices(&self) -> Vec<SusyIndex> {
        (self.start..=self.end).map(SusyIndex::new).collect()
    }

    fn max_order(&self) -> u32 {
        self.start.unsigned_abs().max(self.end.unsigned_abs()) as u32
    }
}

impl FromStr for NuRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("expected a..b, got '{s}'"));
        let (a, b) = s.split_once("..").ok_or_else(bad)?;
        let a = a.trim().parse().map_err(|_| bad())?;
        let b = b.trim().parse().map_err(|_| bad())?;
        NuRange::new(a, b)
    }
}

impl fmt::Display for NuRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

impl Serialize for NuRange {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn parse_nu_range(s: &str) -> std::result::Result<NuRange, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_epsilon(s: &str) -> std::result::Result<f64, String> {
    let e: f64 = s.parse().map_err(|_| format!("invalid number '{s}'"))?;
    if e > 0.0 && e < 1.0 {
        Ok(e)
    } else {
        Err(Error::EpsilonOutOfRange(e).to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Parser, Serialize)]
#[command(
    name = "mehta-hartley",
    version,
    about = "Finite Hartley transforms and their Hermite-type eigenvectors"
)]
pub struct RunConfig {
    #[arg(value_enum)]
    pub command: Command,

    /// Transform length (bench: largest power of two to time).
    #[arg(long = "N")]
    #[serde(rename = "N")]
    pub n: Option<usize>,

    /// Inclusive index range a..b, |nu| <= 64.
    #[arg(long = "nu", value_parser = parse_nu_range, allow_hyphen_values = true)]
    pub nu: Option<NuRange>,

    /// Truncation tolerance of the folded sums, in (0, 1).
    #[arg(long, default_value_t = 1e-16, value_parser = parse_epsilon)]
    pub epsilon: f64,

    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Input vector file for dht; standard input when absent.
    #[arg(long = "in")]
    pub input: Option<PathBuf>,

    /// Seed for the random vectors used by bench.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Eigenvector family used by gram.
    #[arg(long, value_enum, default_value_t = Family::Hartley)]
    pub family: Family,

    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<f64>,

    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<f64>,

    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<f64>,

    /// Residual gate of the verify command.
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
}

impl RunConfig {
    pub fn parse_args<I, T>(args: I) -> std::result::Result<Self, clap::Error>
    where
        I: IntoIterator<Item = T>,
        T: Into<OsString> + Clone,
    {
        RunConfig::try_parse_from(args)
    }

    fn require_n(&self) -> Result<usize> {
        match self.n {
            Some(0) => Err(Error::EmptySequence),
            Some(n) => Ok(n),
            None => Err(Error::InvalidArgument(format!(
                "{} requires --N",
                self.command
            ))),
        }
    }

    /// `--nu`, or `−min(12,N)..min(12,N)` by default (`0..min(N−1,64)` for gram).
    fn nu_range(&self, n: usize) -> Result<NuRange> {
        if let Some(r) = self.nu {
            return Ok(r);
        }
        let n = n as i64;
        match self.command {
            Command::Gram => NuRange::new(0, (n - 1).min(MAX_ABS_NU)),
            _ => NuRange::new(-n.min(12), n.min(12)),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Cell {
    Int(i64),
    Float(f64),
    Text(String),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) => format!("{v:?}"),
            Cell::Text(s) => s.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => json!(v),
            Cell::Float(v) => serde_json::Number::from_f64(*v).map_or(Value::Null, Value::Number),
            Cell::Text(s) => json!(s),
        }
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::Int(v)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

/// Output of one command.
#[derive(Debug, Clone, PartialEq)]
struct Table {
    header: Vec<String>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Self {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    fn write_csv(&self, out: &mut dyn Write) -> Result<()> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(out);
        let io = |e: csv::Error| Error::Io(e.to_string());
        w.write_record(&self.header).map_err(io)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::csv)).map_err(io)?;
        }
        w.flush()?;
        Ok(())
    }

    fn write_json(&self, config: &RunConfig, out: &mut dyn Write) -> Result<()> {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .header
                    .iter()
                    .cloned()
                    .zip(row.iter().map(Cell::json))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let doc = json!({
            "command": config.command.to_string(),
            "config": config,
            "rows": rows,
        });
        serde_json::to_writer_pretty(&mut *out, &doc).map_err(|e| Error::Io(e.to_string()))?;
        writeln!(out)?;
        Ok(())
    }
}

/// Parses newline-, whitespace- or comma-separated reals. A leading
/// non-numeric line is treated as a header and skipped.
pub fn parse_vector(text: &str) -> Result<Vec<f64>> {
    let mut lines = text.lines().peekable();
    if let Some(first) = lines.peek() {
        let tokens: Vec<&str> = tokens(first).collect();
        if !tokens.is_empty() && tokens.iter().all(|t| t.parse::<f64>().is_err()) {
            lines.next();
        }
    }
    let mut values = Vec::new();
    for line in lines {
        for t in tokens(line) {
            let v: f64 = t
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("malformed input value '{t}'")))?;
            if !v.is_finite() {
                return Err(Error::NonFinite("input vector"));
            }
            values.push(v);
        }
    }
    Ok(values)
}

fn tokens(line: &str) -> impl Iterator<Item = &str> {
    line.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
}

/// Outcome of a completed run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Outcome {
    pub exit_status: i32,
}

/// Executes one command, reading input from `input` when needed and writing
/// the table to `--out` or `output`.
pub fn run(config: &RunConfig, input: &mut dyn Read, output: &mut dyn Write) -> Result<Outcome> {
    let (table, exit_status) = match config.command {
        Command::Dht => (cmd_dht(config, input)?, EXIT_OK),
        Command::Eig => (cmd_eig(config)?, EXIT_OK),
        Command::Verify => cmd_verify(config)?,
        Command::Poisson => (cmd_poisson(config)?, EXIT_OK),
        Command::Spectrum => (cmd_spectrum(config)?, EXIT_OK),
        Command::Gram => (cmd_gram(config)?, EXIT_OK),
        Command::Bench => (cmd_bench(config)?, EXIT_OK),
    };
    let mut buffer = Vec::new();
    match config.format {
        Format::Csv => table.write_csv(&mut buffer)?,
        Format::Json => table.write_json(config, &mut buffer)?,
    }
    match &config.out {
        Some(path) => std::fs::write(path, &buffer)?,
        None => output.write_all(&buffer)?,
    }
    output.flush()?;
    Ok(Outcome { exit_status })
}

/// Parses `args`, runs, and maps every failure to an exit status with a
/// one-line diagnostic on `stderr`.
pub fn main_with<I, T>(
    args: I,
    input: &mut dyn Read,
    output: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::parse_args(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(output, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let rendered = e.render().to_string();
                    let line = rendered.lines().next().unwrap_or("invalid arguments");
                    let _ = writeln!(stderr, "{line}");
                    EXIT_ERROR
                }
            };
        }
    };
    match run(&config, input, output) {
        Ok(outcome) => {
            if outcome.exit_status == EXIT_TOLERANCE {
                let _ = writeln!(stderr, "error: residual above tolerance {:e}", config.tol);
            }
            outcome.exit_status
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn cmd_dht(config: &RunConfig, input: &mut dyn Read) -> Result<Table> {
    let mut text = String::new();
    match &config.input {
        Some(path) => text = std::fs::read_to_string(path)?,
        None => {
            input.read_to_string(&mut text)?;
        }
    }
    let values = parse_vector(&text)?;
    if let Some(n) = config.n {
        if n != values.len() {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: values.len(),
            });
        }
    }
    let f = RealSequence::new(values)?;
    let plan = TransformPlan::auto(f.len())?;
    let h = dht_apply(&plan, &f)?;
    let mut table = Table::new(["value"]);
    for &v in h.values() {
        table.push(vec![v.into()]);
    }
    Ok(table)
}

fn cmd_eig(config: &RunConfig) -> Result<Table> {
    let n = config.require_n()?;
    let range = config.nu_range(n)?;
    let policy = TruncationPolicy::for_hartley(n, range.max_order(), config.epsilon)?;
    let indices = range.indices();
    let columns = indices
        .iter()
        .map(|&nu| mehta_hartley_vector(n, nu, &policy))
        .collect::<Result<Vec<_>>>()?;
    let mut header = vec!["r".to_string()];
    header.extend(indices.iter().map(|nu| format!("G({nu})")));
    let mut table = Table::new(header);
    for r in 0..n {
        let mut row = vec![Cell::from(r)];
        row.extend(columns.iter().map(|c| Cell::from(c.values()[r])));
        table.push(row);
    }
    Ok(table)
}

fn cmd_verify(config: &RunConfig) -> Result<(Table, i32)> {
    let n = config.require_n()?;
    let range = config.nu_range(n)?;
    let policy = TruncationPolicy::for_hartley(n, range.max_order(), config.epsilon)?;
    let rows = residual_table(n, &range.indices(), &policy)?;
    let mut table = Table::new(["nu", "lambda", "residual", "norm"]);
    let mut status = EXIT_OK;
    for row in rows {
        if row.residual.is_nan() || row.residual >= config.tol {
            status = EXIT_TOLERANCE;
        }
        table.push(vec![
            row.nu.value().into(),
            row.lambda.into(),
            row.residual.into(),
            row.norm.into(),
        ]);
    }
    Ok((table, status))
}

fn cmd_poisson(config: &RunConfig) -> Result<Table> {
    let axis = |v: Option<f64>, default: &[f64]| v.map_or_else(|| default.to_vec(), |v| vec![v]);
    let a_values = axis(config.a, &[0.5, 1.0, 2.0]);
    let b_values = axis(config.b, &[0.5, 1.0, 2.0]);
    let x_values = axis(config.x, &[0.0, 0.3, -1.7]);
    let functions = [
        ("gaussian", SusyIndex::ZERO),
        ("gaussian_h+1", SusyIndex::plus(1)),
        ("gaussian_h-2", SusyIndex::minus(2)),
    ];
    let mut table = Table::new(["f", "a", "b", "x", "lhs", "rhs", "diff"]);
    for (name, nu) in functions {
        let f = move |x: f64| gaussian_susy_hermite(nu, x);
        let sign = nu.hartley_eigenvalue();
        let hf = move |x: f64| sign * gaussian_susy_hermite(nu, x);
        for &a in &a_values {
            for &b in &b_values {
                for &x in &x_values {
                    let (lhs, rhs) = poisson_check(f, hf, a, b, x, POISSON_TERMS)?;
                    table.push(vec![
                        name.into(),
                        a.into(),
                        b.into(),
                        x.into(),
                        lhs.into(),
                        rhs.into(),
                        (lhs - rhs).abs().into(),
                    ]);
                }
            }
        }
    }
    Ok(table)
}

fn cmd_spectrum(config: &RunConfig) -> Result<Table> {
    let n = config.require_n()?;
    let (plus, minus) = dht_spectrum(n)?;
    let mut table = Table::new(["N", "mult_plus", "mult_minus"]);
    table.push(vec![n.into(), plus.into(), minus.into()]);
    Ok(table)
}

fn cmd_gram(config: &RunConfig) -> Result<Table> {
    let n = config.require_n()?;
    let range = config.nu_range(n)?;
    let family = match config.family {
        Family::Hartley => {
            let policy = TruncationPolicy::for_hartley(n, range.max_order(), config.epsilon)?;
            EigenvectorFamily::hartley(n, &range.indices(), policy)?
        }
        Family::Fourier => {
            if range.start < 0 {
                return Err(Error::InvalidArgument(
                    "Fourier degrees must be non-negative".into(),
                ));
            }
            let degrees: Vec<u32> = (range.start..=range.end).map(|d| d as u32).collect();
            let policy = TruncationPolicy::for_fourier(n, range.end as u32, config.epsilon)?;
            EigenvectorFamily::fourier(n, &degrees, policy)?
        }
    };
    let report = gram_rank(&family, DEFAULT_THRESHOLD_FACTOR)?;
    let mut header: Vec<String> = [
        "size",
        "rank",
        "rank_threshold",
        "min_angle_deg",
        "max_offdiagonal",
    ]
    .map(String::from)
    .to_vec();
    header.extend((0..report.size).map(|k| format!("eigenvalue_{k}")));
    let mut table = Table::new(header);
    let mut row = vec![
        Cell::from(report.size),
        Cell::from(report.rank),
        Cell::from(report.rank_threshold),
        Cell::from(report.min_angle_deg),
        Cell::from(report.max_offdiagonal()),
    ];
    row.extend(report.gram_eigenvalues.iter().map(|&l| Cell::from(l)));
    table.push(row);
    Ok(table)
}

/// Minimum wall time of `f` over at least three runs and about 20 ms.
fn min_time(mut f: impl FnMut()) -> Duration {
    let budget = Duration::from_millis(20);
    let start = Instant::now();
    let mut best = Duration::MAX;
    let mut reps = 0;
    while reps < 3 || start.elapsed() < budget {
        let t = Instant::now();
        f();
        best = best.min(t.elapsed());
        reps += 1;
    }
    best
}

/// Timings of the naive and fast transforms on a seeded random vector.
pub fn bench_pair(n: usize, seed: u64) -> Result<(Duration, Duration)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ n as u64);
    let f = RealSequence::new((0..n).map(|_| rng.random_range(-1.0..1.0)).collect())?;
    let naive = TransformPlan::new(n, Method::Naive)?;
    let fast = TransformPlan::new(n, Method::Fast)?;
    let t_naive = min_time(|| {
        std::hint::black_box(dht_apply(&naive, std::hint::black_box(&f)).ok());
    });
    let t_fast = min_time(|| {
        std::hint::black_box(dht_apply(&fast, std::hint::black_box(&f)).ok());
    });
    Ok((t_naive, t_fast))
}

fn cmd_bench(config: &RunConfig) -> Result<Table> {
    let largest = config.n.unwrap_or(1 << 14);
    if !largest.is_power_of_two() || largest < 16 {
        return Err(Error::InvalidArgument(format!(
            "bench --N must be a power of two >= 16, got {largest}"
        )));
    }
    let mut table = Table::new(["N", "t_naive_ns", "t_fast_ns"]);
    let mut n = 16;
    while n <= largest {
        let (naive, fast) = bench_pair(n, config.seed)?;
        table.push(vec![
            n.into(),
            (naive.as_nanos() as i64).into(),
            (fast.as_nanos() as i64).into(),
        ]);
        n *= 2;
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["mehta-hartley"];
        argv.extend_from_slice(args);
        let code = main_with(argv, &mut stdin.as_bytes(), &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn nu_range_parsing() {
        assert_eq!(
            "-2..2".parse::<NuRange>().unwrap(),
            NuRange { start: -2, end: 2 }
        );
        assert_eq!("3..3".parse::<NuRange>().unwrap().indices().len(), 1);
        assert!("2..-2".parse::<NuRange>().is_err());
        assert!("0..65".parse::<NuRange>().is_err());
        assert!("1-2".parse::<NuRange>().is_err());
    }

    #[test]
    fn vector_parsing() {
        assert_eq!(parse_vector("1 0").unwrap(), vec![1.0, 0.0]);
        assert_eq!(parse_vector("1,2\n3\n").unwrap(), vec![1.0, 2.0, 3.0]);
        assert_eq!(parse_vector("value\n0.5\n-1\n").unwrap(), vec![0.5, -1.0]);
        assert!(parse_vector("1 x 2").is_err());
        assert!(parse_vector("1 NaN").is_err());
    }

    #[test]
    fn cli_examples() {
        let (code, out, _) = run_args(&["verify", "--N", "8", "--nu", "-2..2"], "");
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 6);
        assert_eq!(out.lines().next().unwrap(), "nu,lambda,residual,norm");

        let (code, out, _) = run_args(&["dht", "--N", "2"], "1 0");
        assert_eq!(code, 0);
        assert_eq!(out, "value\n0.7071067811865475\n0.7071067811865475\n");

        let (code, out, _) = run_args(&["spectrum", "--N", "1"], "");
        assert_eq!(code, 0);
        assert_eq!(out.lines().nth(1).unwrap(), "1,1,0");
    }

    #[test]
    fn exit_statuses() {
        let (code, _, err) = run_args(
            &["verify", "--N", "8", "--nu", "0..2", "--tol", "1e-40"],
            "",
        );
        assert_eq!(code, EXIT_TOLERANCE);
        assert!(err.contains("tolerance"));
        let (code, _, err) = run_args(&["dht"], "1 oops");
        assert_eq!(code, EXIT_ERROR);
        assert_eq!(err.lines().count(), 1);
        assert_eq!(run_args(&["frobnicate"], "").0, EXIT_ERROR);
        assert_eq!(run_args(&["verify", "--epsilon", "2"], "").0, EXIT_ERROR);
        assert_eq!(run_args(&["verify"], "").0, EXIT_ERROR);
        assert_eq!(run_args(&["dht", "--N", "3"], "1 2").0, EXIT_ERROR);
        assert_eq!(run_args(&["--help"], "").0, EXIT_OK);
    }

    #[test]
    fn json_schema() {
        let (code, out, _) = run_args(&["spectrum", "--N", "4", "--format", "json"], "");
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["command"], "spectrum");
        assert_eq!(v["config"]["N"], 4);
        assert_eq!(v["rows"][0]["mult_plus"], 2);
        assert_eq!(v["rows"][0]["mult_minus"], 2);
    }

    #[test]
    fn poisson_rows_are_small() {
        let (code, out, _) = run_args(&["poisson"], "");
        assert_eq!(code, 0);
        let mut rdr = csv::Reader::from_reader(out.as_bytes());
        let mut count = 0;
        for rec in rdr.records() {
            let rec = rec.unwrap();
            let diff: f64 = rec[6].parse().unwrap();
            assert!(diff < 1e-10, "{rec:?}");
            count += 1;
        }
        assert_eq!(count, 81);
    }
}
