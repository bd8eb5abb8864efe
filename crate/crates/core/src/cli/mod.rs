//! Command-line front end: JSON matroid documents in, JSON (or CSV) reports out.

mod document;


use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

pub use document::{DocFamily, DocKind, DocumentError, MatroidDocument, TableEntry};

use crate::bruteforce::{count_direct_with, ehrhart_by_interpolation_with, BruteForceError};
use crate::exactmath::{parse_rat, rat_to_bigint, MathError, Rat, RationalPolynomial};
use crate::genfun::{build_genfun_with, GenFunError, PipelineOptions};
use crate::hstar::{
    ehrhart_to_hstar, normalized_volume, positivity_violation, unimodality_violation,
    uniform_hstar_grid, HStarError, UniformEhrhart,
};
use crate::specialize::ehrhart_streaming;
use crate::vertices::{Budget, VertexError};

pub const BUDGET_ENV: &str = "EHRMAT_BUDGET";
pub const MAX_SCAN_N: usize = 100;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Document(#[from] DocumentError),
    #[error("{BUDGET_ENV} must be a non-negative integer, got {0:?}")]
    BadBudget(String),
    #[error("scan range must satisfy 2 <= nmax <= {MAX_SCAN_N}, got {0}")]
    ScanRange(usize),
    #[error("cannot parse expected coefficients: {0}")]
    Expected(String),
    #[error(transparent)]
    GenFun(#[from] GenFunError),
    #[error(transparent)]
    BruteForce(#[from] BruteForceError),
    #[error(transparent)]
    HStar(#[from] HStarError),
    #[error(transparent)]
    Math(#[from] MathError),
    #[error("cannot write output: {0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        let vertex_budget = |e: &VertexError| matches!(e, VertexError::Budget { .. });
        match self {
            CliError::GenFun(GenFunError::Vertex(e)) if vertex_budget(e) => EXIT_BUDGET,
            CliError::BruteForce(BruteForceError::Vertex(e)) if vertex_budget(e) => EXIT_BUDGET,
            CliError::BruteForce(BruteForceError::Budget { .. })
            | CliError::BruteForce(BruteForceError::TooManyElements { .. }) => EXIT_BUDGET,
            CliError::Document(DocumentError::Vertex(e)) if vertex_budget(e) => EXIT_BUDGET,
            _ => EXIT_VALIDATION,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "ehrmat", version, about = "Exact Ehrhart polynomials and h*-vectors of matroid and polymatroid polytopes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ehrhart polynomial via the generating-function pipeline.
    Ehrhart { file: PathBuf },
    /// h*-vector and its unimodality.
    Hstar { file: PathBuf },
    /// Compare the pipeline against direct lattice-point counting.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        kmax: i64,
        /// Ehrhart report (as printed by `ehrmat ehrhart`) to compare against.
        #[arg(long)]
        expect: Option<PathBuf>,
    },
    /// Dump the terms of the rational generating function.
    Genfun { file: PathBuf },
    /// Unimodality and positivity over all uniform matroids U(r, n).
    ScanUniform {
        #[arg(long)]
        nmax: usize,
        #[arg(long)]
        rmax: Option<usize>,
        #[arg(long)]
        csv: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct EhrhartReport {
    pub name: String,
    pub dim: usize,
    pub coefficients: Vec<String>,
    pub relative_volume: String,
    pub volume_normalized: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct HStarReport {
    pub name: String,
    pub dim: usize,
    pub hstar: Vec<serde_json::Number>,
    pub unimodal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CoefficientDiff {
    pub index: usize,
    pub left: String,
    pub right: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CountRow {
    pub k: i64,
    pub pipeline: serde_json::Number,
    pub bruteforce: serde_json::Number,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ExpectedCheck {
    pub matches: bool,
    pub first_difference: Option<CoefficientDiff>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerifyReport {
    pub name: String,
    pub dim: usize,
    pub matches: bool,
    pub pipeline: Vec<String>,
    pub bruteforce: Vec<String>,
    pub first_difference: Option<CoefficientDiff>,
    pub counts: Vec<CountRow>,
    pub counts_match: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<ExpectedCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TermReport {
    pub sign: i32,
    pub a: Vec<i64>,
    pub v: Vec<i64>,
    pub b: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GenFunReport {
    pub name: String,
    pub ambient: usize,
    pub dim: usize,
    pub terms: Vec<TermReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ScanRow {
    pub n: usize,
    pub r: usize,
    pub hstar_unimodal: bool,
    pub ehrhart_coeffs_positive: bool,
    pub unimodality_witness: Option<usize>,
    pub positivity_witness: Option<usize>,
}

/// Budget from `EHRMAT_BUDGET`, or the default.
pub fn budget_from_env() -> Result<Budget, CliError> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse::<u128>()
            .map(|max_candidates| Budget { max_candidates })
            .map_err(|_| CliError::BadBudget(v)),
        Err(_) => Ok(Budget::default()),
    }
}

pub fn load_document(path: &std::path::Path) -> Result<MatroidDocument, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(MatroidDocument::parse(&text)?)
}

fn number(x: &BigInt) -> serde_json::Number {
    x.to_string().parse().expect("integers are valid JSON numbers")
}

fn coefficient_strings(p: &RationalPolynomial, dim: usize) -> Vec<String> {
    p.padded(dim + 1).iter().map(ToString::to_string).collect()
}

fn options(budget: Budget) -> PipelineOptions {
    PipelineOptions {
        budget,
        ..PipelineOptions::default()
    }
}

/// Ehrhart polynomial and dimension of the document's polytope.
pub fn ehrhart_of(doc: &MatroidDocument, budget: Budget) -> Result<(RationalPolynomial, usize), CliError> {
    let spec = doc.spec()?;
    let opts = options(budget);
    let vs = crate::vertices::enumerate_vertices_with(&spec, opts.adjacency, &opts.budget).map_err(GenFunError::from)?;
    let dim = vs.dim;
    let (p, _) = ehrhart_streaming(&spec, &opts)?;
    Ok((p, dim))
}

pub fn ehrhart_report(doc: &MatroidDocument, budget: Budget) -> Result<EhrhartReport, CliError> {
    let (p, dim) = ehrhart_of(doc, budget)?;
    Ok(EhrhartReport {
        name: doc.name.clone(),
        dim,
        coefficients: coefficient_strings(&p, dim),
        relative_volume: p.coeff(dim).to_string(),
        volume_normalized: normalized_volume(&p, dim).to_string(),
    })
}

pub fn hstar_report(doc: &MatroidDocument, budget: Budget) -> Result<HStarReport, CliError> {
    let (p, dim) = ehrhart_of(doc, budget)?;
    let h = ehrhart_to_hstar(&p, dim)?;
    Ok(HStarReport {
        name: doc.name.clone(),
        dim,
        hstar: h.entries().iter().map(number).collect(),
        unimodal: h.is_unimodal(),
    })
}

fn first_difference(left: &[Rat], right: &[Rat]) -> Option<CoefficientDiff> {
    let len = left.len().max(right.len());
    let at = |v: &[Rat], i: usize| v.get(i).cloned().unwrap_or_default();
    (0..len).find(|&i| at(left, i) != at(right, i)).map(|index| CoefficientDiff {
        index,
        left: at(left, index).to_string(),
        right: at(right, index).to_string(),
    })
}

/// Pipeline vs brute force, optionally also against an expected report.
pub fn verify_report(
    doc: &MatroidDocument,
    kmax: i64,
    expected: Option<&EhrhartReport>,
    budget: Budget,
) -> Result<VerifyReport, CliError> {
    let spec = doc.spec()?;
    let (pipeline, dim) = ehrhart_of(doc, budget)?;
    let brute = ehrhart_by_interpolation_with(&spec, &budget)?;
    let pc = pipeline.padded(dim + 1);
    let bc = brute.padded(dim + 1);
    let diff = first_difference(&pc, &bc);
    let mut counts = Vec::new();
    let mut counts_match = true;
    for k in 0..=kmax.max(0) {
        let from_poly = rat_to_bigint(&pipeline.eval_int(k));
        let direct = count_direct_with(&spec, k, &budget)?;
        let pipeline_count = from_poly.clone().unwrap_or_default();
        counts_match &= from_poly.as_ref() == Some(&direct);
        counts.push(CountRow {
            k,
            pipeline: number(&pipeline_count),
            bruteforce: number(&direct),
        });
    }
    let expected = expected
        .map(|e| -> Result<ExpectedCheck, CliError> {
            let want = e
                .coefficients
                .iter()
                .map(|c| parse_rat(c))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|err| CliError::Expected(err.to_string()))?;
            let first_difference = first_difference(&pc, &want);
            Ok(ExpectedCheck {
                matches: first_difference.is_none(),
                first_difference,
            })
        })
        .transpose()?;
    let matches = diff.is_none() && counts_match && expected.as_ref().is_none_or(|e| e.matches);
    Ok(VerifyReport {
        name: doc.name.clone(),
        dim,
        matches,
        pipeline: pc.iter().map(ToString::to_string).collect(),
        bruteforce: bc.iter().map(ToString::to_string).collect(),
        first_difference: diff,
        counts,
        counts_match,
        expected,
    })
}

pub fn genfun_report(doc: &MatroidDocument, budget: Budget) -> Result<GenFunReport, CliError> {
    let g = build_genfun_with(&doc.spec()?, &options(budget))?;
    Ok(GenFunReport {
        name: doc.name.clone(),
        ambient: g.ambient,
        dim: g.dim,
        terms: g
            .terms
            .into_iter()
            .map(|t| TermReport {
                sign: t.sign,
                a: t.a,
                v: t.v,
                b: t.b,
            })
            .collect(),
    })
}

/// Rows for `2 <= n <= nmax`, `1 <= r <= min(n - 1, rmax)`, from the closed
/// forms (Katzman coefficients for h*, the uniform count for Ehrhart).
pub fn scan_uniform(nmax: usize, rmax: Option<usize>) -> Result<Vec<ScanRow>, CliError> {
    if !(2..=MAX_SCAN_N).contains(&nmax) {
        return Err(CliError::ScanRange(nmax));
    }
    let grid = uniform_hstar_grid(nmax);
    let mut rows = Vec::new();
    for n in 2..=nmax {
        let ehrhart = UniformEhrhart::new(n);
        let top = rmax.unwrap_or(n - 1).min(n - 1);
        for r in 1..=top {
            let unimodality_witness = unimodality_violation(grid[n][r].entries());
            let positivity_witness = positivity_violation(&ehrhart.polynomial(r));
            rows.push(ScanRow {
                n,
                r,
                hstar_unimodal: unimodality_witness.is_none(),
                ehrhart_coeffs_positive: positivity_witness.is_none(),
                unimodality_witness,
                positivity_witness,
            });
        }
    }
    Ok(rows)
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(std::io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn opt_to_string(x: Option<usize>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let budget = budget_from_env()?;
    match cli.command {
        Command::Ehrhart { file } => {
            write_json(out, &ehrhart_report(&load_document(&file)?, budget)?)?;
            Ok(EXIT_OK)
        }
        Command::Hstar { file } => {
            write_json(out, &hstar_report(&load_document(&file)?, budget)?)?;
            Ok(EXIT_OK)
        }
        Command::Verify { file, kmax, expect } => {
            let doc = load_document(&file)?;
            let expected = match expect {
                Some(path) => {
                    let text = std::fs::read_to_string(&path).map_err(|source| CliError::Io { path, source })?;
                    Some(serde_json::from_str::<EhrhartReport>(&text).map_err(|e| CliError::Expected(e.to_string()))?)
                }
                None => None,
            };
            let report = verify_report(&doc, kmax, expected.as_ref(), budget)?;
            write_json(out, &report)?;
            Ok(if report.matches { EXIT_OK } else { EXIT_VIOLATION })
        }
        Command::Genfun { file } => {
            write_json(out, &genfun_report(&load_document(&file)?, budget)?)?;
            Ok(EXIT_OK)
        }
        Command::ScanUniform { nmax, rmax, csv } => {
            let rows = scan_uniform(nmax, rmax)?;
            if csv {
                writeln!(out, "n,r,hstar_unimodal,ehrhart_coeffs_positive,unimodality_witness,positivity_witness")?;
            }
            for row in &rows {
                if csv {
                    writeln!(
                        out,
                        "{},{},{},{},{},{}",
                        row.n,
                        row.r,
                        row.hstar_unimodal,
                        row.ehrhart_coeffs_positive,
                        opt_to_string(row.unimodality_witness),
                        opt_to_string(row.positivity_witness)
                    )?;
                } else {
                    serde_json::to_writer(&mut *out, row).map_err(std::io::Error::from)?;
                    writeln!(out)?;
                }
            }
            let violations = rows.iter().any(|r| !r.hstar_unimodal || !r.ehrhart_coeffs_positive);
            Ok(if violations { EXIT_VIOLATION } else { EXIT_OK })
        }
    }
}

/// Parses `args` (including the program name) and runs the command, writing
/// reports to `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_VALIDATION } else { EXIT_OK };
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
