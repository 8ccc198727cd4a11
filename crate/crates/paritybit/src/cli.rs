//! Command-line front end: single-point reports (`info`), parameter sweeps
//! (`sweep`), and the self-check suite (`verify`). All output is
//! deterministic; machine formats print floats with 17 significant digits so
//! values round-trip exactly.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::analysis::{self, InfoReport};
use crate::error::Error;
use crate::signals::SignalPair;
use crate::verify::{self, VerifyOptions};

pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_BAD_PARAMETER: i32 = 2;
pub const EXIT_IO: i32 = 3;

const CSV_HEADER: &str = "n,alpha,r,i_m,i_s,i_d,i_d_single,i_m_asymptotic,i_m_upper_bound";

#[derive(Parser)]
#[command(
    name = "paritybit",
    version,
    about = "Information about the parity of a string encoded in non-orthogonal qubit states"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report every information quantity at one (n, alpha, r) point
    Info(InfoArgs),
    /// Evaluate a grid of (n, alpha, r) points
    Sweep(SweepArgs),
    /// Cross-check closed forms against the dense-matrix oracles
    Verify(VerifyArgs),
}

#[derive(Args)]
struct SignalArgs {
    /// Signal half-angle in radians (the states are cos a|0> +/- sin a|1>)
    #[arg(long, conflicts_with = "overlap")]
    alpha: Option<f64>,
    /// State overlap cos(2 alpha); alternative to --alpha
    #[arg(long)]
    overlap: Option<f64>,
    /// Interpret --alpha in degrees
    #[arg(long, default_value_t = false)]
    degrees: bool,
    /// Mixing offset r (0 = pure states; must satisfy r < sin(a)cos(a))
    #[arg(long, default_value_t = 0.0)]
    r: f64,
}

#[derive(Args)]
struct InfoArgs {
    /// String length
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    signal: SignalArgs,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Write output here instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    /// n values: comma-separated, with inclusive ranges like 1..8
    #[arg(long)]
    n: String,
    /// alpha values in radians (comma-separated), or with --degrees
    #[arg(long, conflicts_with = "overlap")]
    alpha: Option<String>,
    /// overlap values cos(2 alpha), comma-separated
    #[arg(long)]
    overlap: Option<String>,
    #[arg(long, default_value_t = false)]
    degrees: bool,
    /// r values, comma-separated
    #[arg(long, default_value = "0")]
    r: String,
    /// Subset of i_m,i_s,i_d,i_d_single,asymptotic,bound (default: all)
    #[arg(long)]
    quantities: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest n for the dense-matrix checks
    #[arg(long, default_value_t = 8)]
    max_n: usize,
    /// Extra seeded random (alpha, r) points per check
    #[arg(long, default_value_t = 4)]
    grid: usize,
    #[arg(long, default_value_t = 7)]
    seed: u64,
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Copy, Clone, PartialEq, Eq)]
enum Quantity {
    IM,
    IS,
    ID,
    IDSingle,
    Asymptotic,
    Bound,
}

const ALL_QUANTITIES: [Quantity; 6] = [
    Quantity::IM,
    Quantity::IS,
    Quantity::ID,
    Quantity::IDSingle,
    Quantity::Asymptotic,
    Quantity::Bound,
];

pub fn bruteforce_cap() -> usize {
    std::env::var("PARITYBIT_BRUTEFORCE_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(crate::parity::DEFAULT_BRUTEFORCE_CAP)
}

/// Runs the parsed command; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    let outcome = match cli.command {
        Command::Info(args) => cmd_info(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Verify(args) => cmd_verify(args),
    };
    match outcome {
        Ok(code) => code,
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            code
        }
    }
}

type CmdResult = Result<i32, (i32, String)>;

fn bad_param(e: impl std::fmt::Display) -> (i32, String) {
    (EXIT_BAD_PARAMETER, e.to_string())
}

fn resolve_alpha(alpha: Option<f64>, overlap: Option<f64>, degrees: bool) -> Result<f64, Error> {
    match (alpha, overlap) {
        (Some(a), None) => Ok(if degrees { a.to_radians() } else { a }),
        (None, Some(v)) => {
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::Domain {
                    value: v,
                    lo: 0.0,
                    hi: 1.0,
                });
            }
            Ok(v.acos() / 2.0)
        }
        (None, None) => Err(Error::Parameter(
            "one of --alpha or --overlap is required".into(),
        )),
        (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
    }
}

fn cmd_info(args: InfoArgs) -> CmdResult {
    let alpha = resolve_alpha(args.signal.alpha, args.signal.overlap, args.signal.degrees)
        .map_err(bad_param)?;
    let signal = SignalPair::new(alpha, args.signal.r).map_err(bad_param)?;
    let report = analysis::report(&signal, args.n).map_err(bad_param)?;
    let text = match args.format {
        Format::Human => render_human(&report),
        Format::Json => render_json_info(&report),
        Format::Csv => format!("{CSV_HEADER}\n{}\n", csv_row(&report, &ALL_QUANTITIES)),
    };
    emit(&text, args.output.as_deref())?;
    Ok(0)
}

fn cmd_sweep(args: SweepArgs) -> CmdResult {
    let n_values = parse_n_list(&args.n).map_err(bad_param)?;
    let alpha_values: Vec<f64> = match (&args.alpha, &args.overlap) {
        (Some(list), None) => {
            let raw = parse_f64_list(list).map_err(bad_param)?;
            if args.degrees {
                raw.iter().map(|a| a.to_radians()).collect()
            } else {
                raw
            }
        }
        (None, Some(list)) => parse_f64_list(list)
            .map_err(bad_param)?
            .into_iter()
            .map(|v| resolve_alpha(None, Some(v), false))
            .collect::<Result<_, _>>()
            .map_err(bad_param)?,
        (None, None) => return Err(bad_param("one of --alpha or --overlap is required")),
        (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
    };
    let r_values = parse_f64_list(&args.r).map_err(bad_param)?;
    if n_values.is_empty() || alpha_values.is_empty() || r_values.is_empty() {
        return Err(bad_param("sweep lists must be non-empty"));
    }
    let quantities = match &args.quantities {
        None => ALL_QUANTITIES.to_vec(),
        Some(list) => parse_quantities(list).map_err(bad_param)?,
    };

    // n-major, then alpha, then r; invalid (alpha, r) pairs are skipped
    let mut reports = Vec::new();
    for &n in &n_values {
        for &alpha in &alpha_values {
            for &r in &r_values {
                match SignalPair::new(alpha, r).and_then(|sig| analysis::report(&sig, n)) {
                    Ok(rep) => reports.push(rep),
                    Err(e) => {
                        eprintln!("warning: skipping n={n} alpha={alpha} r={r}: {e}");
                    }
                }
            }
        }
    }

    let text = match args.format {
        Format::Csv => {
            let mut out = String::from(CSV_HEADER);
            out.push('\n');
            for rep in &reports {
                out.push_str(&csv_row(rep, &quantities));
                out.push('\n');
            }
            out
        }
        Format::Json => render_json_sweep(&args, &n_values, &alpha_values, &r_values, &quantities, &reports),
        Format::Human => {
            let mut out = String::new();
            for rep in &reports {
                out.push_str(&render_human(rep));
                out.push('\n');
            }
            out
        }
    };
    emit(&text, args.output.as_deref())?;
    Ok(0)
}

fn cmd_verify(args: VerifyArgs) -> CmdResult {
    let cap = bruteforce_cap();
    if args.max_n > cap {
        return Err(bad_param(format!(
            "--max-n {} exceeds the brute-force cap {cap} (override with PARITYBIT_BRUTEFORCE_CAP)",
            args.max_n
        )));
    }
    let opts = VerifyOptions {
        max_n: args.max_n,
        extra_points: args.grid,
        seed: args.seed,
        cap,
    };
    let results = verify::run(&opts).map_err(bad_param)?;
    for r in &results {
        let status = if r.passed { "PASS" } else { "FAIL" };
        println!(
            "{status}  {:<32} worst deviation {:.3e}{}",
            r.name,
            r.worst_deviation,
            if r.detail.is_empty() {
                String::new()
            } else {
                format!("  [{}]", r.detail)
            }
        );
    }
    if verify::all_passed(&results) {
        println!("all {} checks passed", results.len());
        Ok(0)
    } else {
        Ok(EXIT_VERIFY_FAILED)
    }
}

fn emit(text: &str, path: Option<&std::path::Path>) -> Result<(), (i32, String)> {
    match path {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(p) => std::fs::write(p, text)
            .map_err(|e| (EXIT_IO, format!("cannot write {}: {e}", p.display()))),
    }
}

fn parse_f64_list(s: &str) -> Result<Vec<f64>, Error> {
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<f64>()
                .map_err(|_| Error::Parameter(format!("cannot parse number '{tok}'")))
        })
        .collect()
}

fn parse_n_list(s: &str) -> Result<Vec<usize>, Error> {
    let mut out = Vec::new();
    for tok in s.split(',') {
        let tok = tok.trim();
        if let Some((lo, hi)) = tok.split_once("..") {
            let lo: usize = lo
                .trim()
                .parse()
                .map_err(|_| Error::Parameter(format!("cannot parse range start '{lo}'")))?;
            let hi: usize = hi
                .trim()
                .parse()
                .map_err(|_| Error::Parameter(format!("cannot parse range end '{hi}'")))?;
            if lo > hi {
                return Err(Error::Parameter(format!("empty range '{tok}'")));
            }
            out.extend(lo..=hi);
        } else {
            out.push(
                tok.parse()
                    .map_err(|_| Error::Parameter(format!("cannot parse n '{tok}'")))?,
            );
        }
    }
    Ok(out)
}

fn parse_quantities(s: &str) -> Result<Vec<Quantity>, Error> {
    s.split(',')
        .map(|tok| match tok.trim() {
            "i_m" => Ok(Quantity::IM),
            "i_s" => Ok(Quantity::IS),
            "i_d" => Ok(Quantity::ID),
            "i_d_single" => Ok(Quantity::IDSingle),
            "asymptotic" => Ok(Quantity::Asymptotic),
            "bound" => Ok(Quantity::Bound),
            other => Err(Error::Parameter(format!(
                "unknown quantity '{other}' (expected i_m, i_s, i_d, i_d_single, asymptotic, bound)"
            ))),
        })
        .collect()
}

/// 17 significant digits; parses back to the identical f64.
fn fmt_machine(x: f64) -> String {
    format!("{x:.16e}")
}

/// 6 significant digits for eyeballing.
fn fmt_human(x: f64) -> String {
    format!("{x:.5e}")
}

fn csv_cell(v: Option<f64>) -> String {
    v.map(fmt_machine).unwrap_or_default()
}

fn selected(rep: &InfoReport, q: Quantity, quantities: &[Quantity]) -> Option<f64> {
    if !quantities.contains(&q) {
        return None;
    }
    match q {
        Quantity::IM => Some(rep.i_m),
        Quantity::IS => Some(rep.i_s),
        Quantity::ID => rep.i_d,
        Quantity::IDSingle => rep.i_d_single,
        Quantity::Asymptotic => rep.i_m_asymptotic,
        Quantity::Bound => Some(rep.i_m_upper_bound),
    }
}

fn csv_row(rep: &InfoReport, quantities: &[Quantity]) -> String {
    let cells: Vec<String> = ALL_QUANTITIES
        .iter()
        .map(|&q| csv_cell(selected(rep, q, quantities)))
        .collect();
    format!(
        "{},{},{},{}",
        rep.n,
        fmt_machine(rep.alpha),
        fmt_machine(rep.r),
        cells.join(",")
    )
}

fn render_human(rep: &InfoReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n               = {}", rep.n);
    let _ = writeln!(out, "alpha           = {}", fmt_human(rep.alpha));
    let _ = writeln!(out, "r               = {}", fmt_human(rep.r));
    let _ = writeln!(out, "i_m             = {}", fmt_human(rep.i_m));
    let _ = writeln!(out, "i_s             = {}", fmt_human(rep.i_s));
    let opt = |v: Option<f64>| v.map(fmt_human).unwrap_or_else(|| "-".into());
    let _ = writeln!(out, "i_d             = {}", opt(rep.i_d));
    let _ = writeln!(out, "i_d_single      = {}", opt(rep.i_d_single));
    let _ = writeln!(out, "i_m_asymptotic  = {}", opt(rep.i_m_asymptotic));
    let _ = writeln!(out, "i_m_upper_bound = {}", fmt_human(rep.i_m_upper_bound));
    let _ = writeln!(out, "ratio_check     = {}", opt(rep.ratio_check));
    out
}

fn json_number(x: f64) -> serde_json::Value {
    serde_json::Number::from_f64(x)
        .map(serde_json::Value::Number)
        .unwrap_or(serde_json::Value::Null)
}

fn json_opt(v: Option<f64>) -> serde_json::Value {
    v.map(json_number).unwrap_or(serde_json::Value::Null)
}

fn json_results(rep: &InfoReport) -> serde_json::Value {
    serde_json::json!({
        "i_m": json_number(rep.i_m),
        "i_s": json_number(rep.i_s),
        "i_d": json_opt(rep.i_d),
        "i_d_single": json_opt(rep.i_d_single),
        "i_m_asymptotic": json_opt(rep.i_m_asymptotic),
        "i_m_upper_bound": json_number(rep.i_m_upper_bound),
        "ratio_check": json_opt(rep.ratio_check),
    })
}

fn render_json_info(rep: &InfoReport) -> String {
    let doc = serde_json::json!({
        "parameters": {
            "n": rep.n,
            "alpha": json_number(rep.alpha),
            "r": json_number(rep.r),
        },
        "results": json_results(rep),
        "meta": { "version": env!("CARGO_PKG_VERSION") },
    });
    let mut out = serde_json::to_string_pretty(&doc).expect("static document serializes");
    out.push('\n');
    out
}

fn render_json_sweep(
    args: &SweepArgs,
    n_values: &[usize],
    alpha_values: &[f64],
    r_values: &[f64],
    quantities: &[Quantity],
    reports: &[InfoReport],
) -> String {
    let quantity_names: Vec<&str> = quantities
        .iter()
        .map(|q| match q {
            Quantity::IM => "i_m",
            Quantity::IS => "i_s",
            Quantity::ID => "i_d",
            Quantity::IDSingle => "i_d_single",
            Quantity::Asymptotic => "asymptotic",
            Quantity::Bound => "bound",
        })
        .collect();
    let rows: Vec<serde_json::Value> = reports
        .iter()
        .map(|rep| {
            serde_json::json!({
                "n": rep.n,
                "alpha": json_number(rep.alpha),
                "r": json_number(rep.r),
                "i_m": json_opt(selected(rep, Quantity::IM, quantities)),
                "i_s": json_opt(selected(rep, Quantity::IS, quantities)),
                "i_d": json_opt(selected(rep, Quantity::ID, quantities)),
                "i_d_single": json_opt(selected(rep, Quantity::IDSingle, quantities)),
                "i_m_asymptotic": json_opt(selected(rep, Quantity::Asymptotic, quantities)),
                "i_m_upper_bound": json_opt(selected(rep, Quantity::Bound, quantities)),
            })
        })
        .collect();
    let doc = serde_json::json!({
        "parameters": {
            "n_values": n_values,
            "alpha_values": alpha_values.iter().map(|&a| json_number(a)).collect::<Vec<_>>(),
            "r_values": r_values.iter().map(|&r| json_number(r)).collect::<Vec<_>>(),
            "quantities": quantity_names,
            "degrees": args.degrees,
        },
        "results": rows,
        "meta": { "version": env!("CARGO_PKG_VERSION") },
    });
    let mut out = serde_json::to_string_pretty(&doc).expect("static document serializes");
    out.push('\n');
    out
}
