//! Command-line front end. `run` returns the process exit code: 0 on
//! success, 1 on domain errors, 2 on usage errors.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::json;

use crate::classify::{full_report_with, relevant_places, Obstruction, ReportOptions};
use crate::cubeclass::{normalize_triple, LambdaChoice, LambdaSource, PrimitiveTriple};
use crate::eisenstein::{cubic_symbol, primary_prime_above, sextic_symbol, EisensteinInt};
use crate::error::{Error, Result};
use crate::hecke::{find_m3_witness, CurveModel, DEFAULT_SCAN_BOUND};
use crate::localarith::{diagonal_cubic_soluble, evaluation_image, Place};
use crate::nslattice::{cyclic_h1, image_is_primitive, rho_action, verify_a2_invariants};

/// Default worker count for `batch` when `--jobs` is absent.
pub const JOBS_ENV: &str = "KUMMER_BRAUER_JOBS";

#[derive(Debug, Parser)]
#[command(name = "kummer-brauer", version, about = "Brauer groups of Kummer surfaces of diagonal cubics")]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full classification report for ax^3 + by^3 + cz^3 = 0.
    Classify {
        #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
        curve: PrimitiveTriple,
        #[arg(long)]
        json: bool,
        /// Assume Y_C is everywhere locally soluble even where C is not.
        #[arg(long)]
        assume_y_soluble: bool,
        #[arg(long, default_value_t = DEFAULT_SCAN_BOUND)]
        bound: u64,
    },
    #[command(subcommand)]
    Hecke(HeckeCommand),
    #[command(subcommand)]
    Lattice(LatticeCommand),
    #[command(subcommand)]
    Local(LocalCommand),
    /// Cubic or sextic residue symbol (alpha / pi) at the primary prime above p.
    ResidueSymbol {
        #[arg(long, value_parser = parse_eisenstein, allow_hyphen_values = true)]
        alpha: EisensteinInt,
        #[arg(long)]
        prime: u64,
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(["3", "6"]))]
        degree: String,
        #[arg(long)]
        json: bool,
    },
    /// Image of the evaluation map of beta on (E x E)(Q_2), E: y^2 = x^3 - 27.
    EvaluateBeta {
        #[arg(long, default_value_t = 8)]
        prec: u32,
        #[arg(long)]
        json: bool,
    },
    /// Classify every triple of a CSV file, one JSON report per line.
    Batch(BatchArgs),
}

#[derive(Debug, Subcommand)]
pub enum HeckeCommand {
    /// Search for a prime certifying m(3) = 0.
    Scan {
        #[arg(long = "D", value_parser = parse_bigint, allow_hyphen_values = true)]
        d: BigInt,
        #[arg(long, value_parser = parse_lambda)]
        lambda: LambdaChoice,
        #[arg(long, default_value_t = DEFAULT_SCAN_BOUND)]
        bound: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum LatticeCommand {
    /// H^1 of the order-3 action on NS(E x E).
    H1 {
        #[arg(long, value_parser = parse_pair, allow_hyphen_values = true, conflicts_with = "non_cm")]
        cm: Option<(i64, i64)>,
        #[arg(long)]
        non_cm: bool,
    },
    /// Check the A2 invariant-ring identity.
    VerifyA2,
}

#[derive(Debug, Subcommand)]
pub enum LocalCommand {
    /// Local solubility of the curve at one place or at all relevant places.
    Solubility {
        #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
        curve: PrimitiveTriple,
        #[arg(long = "p", default_value = "all")]
        place: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
pub struct BatchArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, env = JOBS_ENV)]
    pub jobs: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_SCAN_BOUND)]
    pub bound: u64,
}

fn parse_ints(s: &str, n: usize) -> std::result::Result<Vec<i64>, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != n {
        return Err(format!("expected {n} comma-separated integers, got {s:?}"));
    }
    parts.iter().map(|p| p.parse::<i64>().map_err(|e| format!("{p:?}: {e}"))).collect()
}

pub fn parse_triple(s: &str) -> std::result::Result<PrimitiveTriple, String> {
    let v = parse_ints(s, 3)?;
    normalize_triple(v[0], v[1], v[2]).map_err(|e| e.to_string())
}

fn parse_pair(s: &str) -> std::result::Result<(i64, i64), String> {
    let v = parse_ints(s, 2)?;
    Ok((v[0], v[1]))
}

fn parse_eisenstein(s: &str) -> std::result::Result<EisensteinInt, String> {
    let (x, y) = parse_pair(s)?;
    Ok(EisensteinInt::new(x, y))
}

fn parse_bigint(s: &str) -> std::result::Result<BigInt, String> {
    s.trim().parse().map_err(|e| format!("{s:?}: {e}"))
}

fn parse_lambda(s: &str) -> std::result::Result<LambdaChoice, String> {
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: u64 = n.trim().parse().map_err(|e| format!("{n:?}: {e}"))?;
    let d: u64 = d.trim().parse().map_err(|e| format!("{d:?}: {e}"))?;
    LambdaChoice::from_ratio(n, d, LambdaSource::Given).map_err(|e| e.to_string())
}

/// Runs the CLI on `argv` (including the program name), writing to the
/// given streams.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match dispatch(config.command, out) {
        Ok(code) => code,
        Err(DispatchError::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
        Err(DispatchError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(DispatchError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

enum DispatchError {
    Domain(Error),
    Usage(String),
    Io(std::io::Error),
}

impl From<Error> for DispatchError {
    fn from(e: Error) -> Self {
        DispatchError::Domain(e)
    }
}

impl From<std::io::Error> for DispatchError {
    fn from(e: std::io::Error) -> Self {
        DispatchError::Io(e)
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("report types serialize")
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> std::result::Result<i32, DispatchError> {
    match cmd {
        Command::Classify { curve, json, assume_y_soluble, bound } => {
            let report = full_report_with(&curve, ReportOptions { assume_y_soluble, scan_bound: Some(bound) });
            if json {
                writeln!(out, "{}", to_json(&report))?;
            } else {
                write!(out, "{report}")?;
            }
            if report.obstruction == Obstruction::CubeCaseDescent {
                return Err(Error::CubeCase.into());
            }
        }
        Command::Hecke(HeckeCommand::Scan { d, lambda, bound, json }) => {
            let curve = CurveModel::new(d)?;
            let cert = find_m3_witness(&curve, &lambda, bound)?;
            if json {
                writeln!(out, "{}", to_json(&cert))?;
            } else {
                writeln!(out, "curve {curve}, lambda = {lambda}")?;
                writeln!(out, "witness p = {} with pi = {}", cert.prime, cert.pi)?;
                writeln!(out, "(lambda/pi)_3 = {}", cert.lambda_symbol)?;
                writeln!(out, "(4D/pi)_3 = {}, (4D/pi)_6 = {}", cert.four_d_cubic_symbol, cert.four_d_sextic_symbol)?;
                writeln!(out, "psi(pi) = {} (in Z + 3Z[w]: {})", cert.hecke_value, cert.in_order_3)?;
                writeln!(out, "verified: {}", cert.verify(&curve))?;
            }
        }
        Command::Lattice(LatticeCommand::H1 { cm, non_cm }) => {
            let action = rho_action(if non_cm { None } else { cm.or(Some((1, 1))) })?;
            let h1 = cyclic_h1(&action)?;
            if h1.is_trivial() {
                writeln!(out, "H1 trivial; image rank {}; kernel rank {}", h1.image_rank, h1.kernel_rank)?;
            } else {
                let factors: Vec<String> = h1.invariant_factors.iter().map(u64::to_string).collect();
                writeln!(
                    out,
                    "H1 invariant factors [{}]; image rank {}; kernel rank {}",
                    factors.join(", "),
                    h1.image_rank,
                    h1.kernel_rank
                )?;
            }
            if !image_is_primitive(&action) {
                writeln!(out, "warning: im(R - I) is not primitive")?;
            }
        }
        Command::Lattice(LatticeCommand::VerifyA2) => {
            let ok = verify_a2_invariants();
            writeln!(out, "A2 invariants {}", if ok { "verified" } else { "FAILED" })?;
            if !ok {
                return Ok(1);
            }
        }
        Command::Local(LocalCommand::Solubility { curve, place, json }) => {
            let places = if place.trim() == "all" {
                relevant_places(&curve)
            } else {
                vec![place.parse::<Place>().map_err(|e| DispatchError::Usage(e.to_string()))?]
            };
            let results: std::collections::BTreeMap<Place, bool> =
                places.into_iter().map(|v| (v, diagonal_cubic_soluble(&curve, v))).collect();
            if json {
                writeln!(out, "{}", to_json(&json!({ "curve": curve, "local_solubility": results })))?;
            } else {
                for (v, ok) in &results {
                    writeln!(out, "{v}: {}", if *ok { "soluble" } else { "not soluble" })?;
                }
            }
        }
        Command::ResidueSymbol { alpha, prime, degree, json } => {
            let pi = primary_prime_above(prime)?;
            let symbol = if degree == "3" { cubic_symbol(&alpha, &pi)? } else { sextic_symbol(&alpha, &pi)? };
            if json {
                let v = json!({
                    "alpha": alpha,
                    "pi": pi.pi(),
                    "degree": degree,
                    "symbol": symbol.to_string(),
                    "exponent": symbol.exponent().to_string(),
                });
                writeln!(out, "{}", to_json(&v))?;
            } else {
                writeln!(out, "({alpha} / {})_{degree} = {symbol}", pi.pi())?;
            }
        }
        Command::EvaluateBeta { prec, json } => {
            let image = evaluation_image(prec)?;
            if json {
                writeln!(out, "{}", to_json(&image))?;
            } else {
                let values: Vec<String> = image.values.iter().map(ToString::to_string).collect();
                writeln!(out, "image {{{}}} over {} pairs at 2^{prec}", values.join(", "), image.pairs_evaluated)?;
                for (v, p, q) in &image.witnesses {
                    writeln!(out, "  {v}: P = {p}, Q = {q}")?;
                }
            }
        }
        Command::Batch(args) => run_batch(&args, out)?,
    }
    Ok(0)
}

fn run_batch(args: &BatchArgs, out: &mut dyn Write) -> std::result::Result<(), DispatchError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_path(&args.input)
        .map_err(|e| DispatchError::Usage(e.to_string()))?;
    let mut rows: Vec<(u64, std::result::Result<PrimitiveTriple, String>)> = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record.map_err(|e| DispatchError::Usage(e.to_string()))?;
        let line = record.position().map_or(i as u64 + 1, |p| p.line());
        let fields: Vec<&str> = record.iter().collect();
        if fields.iter().all(|f| f.is_empty()) {
            continue;
        }
        // A non-numeric first row is a header.
        if rows.is_empty() && i == 0 && fields.iter().any(|f| f.parse::<i64>().is_err()) {
            continue;
        }
        rows.push((line, parse_triple(&fields.join(","))));
    }

    let jobs = args.jobs.unwrap_or(0);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| DispatchError::Usage(e.to_string()))?;
    let opts = ReportOptions { assume_y_soluble: false, scan_bound: Some(args.bound) };
    let lines: Vec<String> = pool.install(|| {
        rows.par_iter()
            .map(|(line, triple)| match triple {
                Ok(t) => serde_json::to_string(&full_report_with(t, opts)).expect("report serializes"),
                Err(e) => json!({ "line": line.to_string(), "error": e }).to_string(),
            })
            .collect()
    });
    for l in lines {
        writeln!(out, "{l}")?;
    }
    Ok(())
}

/// Convenience for callers that only need the library error type.
pub fn classify_json(curve: &str) -> Result<String> {
    let t = parse_triple(curve).map_err(Error::Parse)?;
    Ok(serde_json::to_string(&full_report_with(&t, ReportOptions::default())).expect("report serializes"))
}
