//! The `binom-rare` command line.
//!
//! Exit codes: 0 success, 2 usage error, 3 I/O error, 4 numerical failure.

mod commands;
pub mod report;

use crate::case_study::CaseId;
use crate::error::Error;
use crate::estimators::EstimatorKind;
use crate::evaluation::{BoundView, EvalOptions};
use crate::reproduce::{TableId, P_LADDER};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use report::{Format, Style};
use std::ffi::OsString;
use std::io::{IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;
pub const EXIT_NUMERIC: i32 = 4;

/// Environment variable that disables colors, like `--no-color`.
pub const NO_COLOR_ENV: &str = "BINOM_RARE_NO_COLOR";

#[derive(Debug, Parser)]
#[command(name = "binom-rare", version, about = "Binomial confidence intervals for rare events")]
pub struct Cli {
    /// Significance level of the intervals.
    #[arg(long, global = true, default_value_t = 0.05)]
    pub alpha: f64,
    /// Output format; text by default, csv for `sweep` and `tables`.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[arg(long, global = true)]
    pub no_color: bool,
    /// Omit the timestamp header so identical flags give identical bytes.
    #[arg(long, global = true)]
    pub reproducible: bool,
    /// Binomial mass left out of enumeration windows.
    #[arg(long, global = true, default_value_t = crate::evaluation::DEFAULT_TAIL_TOL)]
    pub tail_tol: f64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Interval bounds for an observed count.
    Interval(IntervalArgs),
    /// Coverage and expected relative margin of error.
    Evaluate(EvaluateArgs),
    /// Sample size for a target margin of error.
    Plan(PlanArgs),
    /// Coverage and relative margin over a grid of n, for plotting.
    Sweep(SweepArgs),
    /// Recompute one of the published tables.
    Tables(TablesArgs),
    /// One of the worked examples.
    CaseStudy(CaseStudyArgs),
    /// Relative margin thresholds keeping n p* >= a.
    Thresholds(ThresholdsArgs),
}

/// `all`, or a comma-separated list such as `wald,wilson` or `W,CP`.
#[derive(Debug, Clone)]
pub struct Estimators(pub Vec<EstimatorKind>);

fn parse_estimators(s: &str) -> Result<Estimators, String> {
    if s.eq_ignore_ascii_case("all") {
        return Ok(Estimators(EstimatorKind::ALL.to_vec()));
    }
    let mut kinds = Vec::new();
    for part in s.split(',') {
        let k: EstimatorKind = part.trim().parse().map_err(|e: Error| e.to_string())?;
        if !kinds.contains(&k) {
            kinds.push(k);
        }
    }
    Ok(Estimators(kinds))
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("observed").required(true).args(["x", "p_hat"])))]
pub struct IntervalArgs {
    #[arg(long, default_value = "all", value_parser = parse_estimators)]
    pub estimator: Estimators,
    /// Number of successes.
    #[arg(long)]
    pub x: Option<u64>,
    /// Observed proportion, when only that is known.
    #[arg(long)]
    pub p_hat: Option<f64>,
    /// Number of trials.
    #[arg(long)]
    pub n: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WidthBounds {
    Raw,
    Clipped,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("size").required(true).args(["n", "n_start"])))]
pub struct EvaluateArgs {
    #[arg(long, default_value = "all", value_parser = parse_estimators)]
    pub estimator: Estimators,
    /// True proportion.
    #[arg(long)]
    pub p: f64,
    /// Reference proportion for the relative margin; defaults to `--p`.
    #[arg(long)]
    pub p_star: Option<f64>,
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long, requires = "n_end")]
    pub n_start: Option<u64>,
    #[arg(long, requires = "n_start")]
    pub n_end: Option<u64>,
    #[arg(long, default_value_t = 1)]
    pub n_step: u64,
    /// Bounds used for the expected width.
    #[arg(long, value_enum, default_value_t = WidthBounds::Raw)]
    pub width_bounds: WidthBounds,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("margin").required(true).args(["epsilon", "eps_r"])))]
pub struct PlanArgs {
    #[arg(long, default_value = "all", value_parser = parse_estimators)]
    pub estimator: Estimators,
    /// Anticipated proportion.
    #[arg(long)]
    pub p_star: f64,
    /// Absolute margin of error.
    #[arg(long)]
    pub epsilon: Option<f64>,
    /// Margin of error relative to `p*`.
    #[arg(long)]
    pub eps_r: Option<f64>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, default_value = "all", value_parser = parse_estimators)]
    pub estimator: Estimators,
    #[arg(long)]
    pub p: f64,
    #[arg(long)]
    pub p_star: Option<f64>,
    #[arg(long)]
    pub n_start: u64,
    #[arg(long)]
    pub n_end: u64,
    #[arg(long)]
    pub n_step: u64,
    /// Write here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TablesArgs {
    /// One of 1, 2, 3, 4, 6, 7, 8, 9, B1, B2.
    #[arg(long, value_parser = |s: &str| s.parse::<TableId>().map_err(|e| e.to_string()))]
    pub table: TableId,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CaseStudyArgs {
    /// adhd, covid or aircraft.
    #[arg(long, value_parser = |s: &str| s.parse::<CaseId>().map_err(|e| e.to_string()))]
    pub name: CaseId,
    /// Show Wald sample sizes for other relative margins instead.
    #[arg(long)]
    pub replan: bool,
    #[arg(long, value_delimiter = ',', default_values_t = [0.2, 0.3, 0.4, 0.5])]
    pub eps_r: Vec<f64>,
}

#[derive(Debug, Args)]
pub struct ThresholdsArgs {
    #[arg(long, value_delimiter = ',', default_values_t = P_LADDER)]
    pub p_star: Vec<f64>,
    /// Minimum expected counts.
    #[arg(long, value_delimiter = ',', default_values_t = [5.0, 10.0])]
    pub a: Vec<f64>,
    /// Significance levels of the grid.
    #[arg(long, value_delimiter = ',', default_values_t = [0.1, 0.05, 0.01])]
    pub alphas: Vec<f64>,
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Process-level facts that influence rendering.
#[derive(Debug, Clone, Copy)]
pub struct Terminal {
    pub stdout_is_tty: bool,
    pub no_color_env: bool,
    pub now_unix: u64,
}

impl Terminal {
    pub fn detect() -> Self {
        Terminal {
            stdout_is_tty: std::io::stdout().is_terminal(),
            no_color_env: std::env::var_os(NO_COLOR_ENV).is_some(),
            now_unix: std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Domain(_) => EXIT_USAGE,
        Error::NonConvergence { .. } | Error::Resource(_) => EXIT_NUMERIC,
    }
}

/// Parses `args` (including the program name) and runs the command,
/// capturing output. Files named by `--out` are written directly.
pub fn execute<I, T>(args: I, term: Terminal) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 { (text, String::new()) } else { (String::new(), text) };
            return Outcome { code, stdout, stderr };
        }
    };
    if !(cli.alpha > 0.0 && cli.alpha < 1.0) {
        return usage_failure(format!("--alpha {} must lie inside (0, 1)", cli.alpha));
    }
    if !(cli.tail_tol >= 0.0 && cli.tail_tol < 1.0) {
        return usage_failure(format!("--tail-tol {} must lie in [0, 1)", cli.tail_tol));
    }
    let opts = EvalOptions {
        tail_tol: cli.tail_tol,
        width_bounds: match &cli.command {
            Command::Evaluate(a) if a.width_bounds == WidthBounds::Clipped => BoundView::Clipped,
            _ => BoundView::Raw,
        },
    };
    let (report, out_path, default_format) = match &cli.command {
        Command::Interval(a) => (commands::interval(a, cli.alpha), None, Format::Text),
        Command::Evaluate(a) => (commands::evaluate(a, cli.alpha, &opts), None, Format::Text),
        Command::Plan(a) => (commands::plan(a, cli.alpha), None, Format::Text),
        Command::Sweep(a) => (commands::sweep(a, cli.alpha, &opts), a.out.clone(), Format::Csv),
        Command::Tables(a) => (commands::tables(a.table, cli.alpha, &opts), a.out.clone(), Format::Csv),
        Command::CaseStudy(a) => (commands::case_study(a, &opts), None, Format::Text),
        Command::Thresholds(a) => (commands::thresholds(a), None, Format::Text),
    };
    let report = match report {
        Ok(r) => r,
        Err(e) => {
            return Outcome { code: exit_code(&e), stdout: String::new(), stderr: format!("error: {e}\n") }
        }
    };
    let format = cli.format.unwrap_or(default_format);
    let style = Style {
        color: format == Format::Text
            && out_path.is_none()
            && !cli.no_color
            && !term.no_color_env
            && term.stdout_is_tty,
        stamp: (!cli.reproducible).then_some(term.now_unix),
    };
    let body = report.render(format, style);
    let stderr = if format == Format::Text {
        String::new()
    } else {
        report.notes.iter().map(|n| format!("note: {n}\n")).collect()
    };
    match out_path {
        Some(path) => match std::fs::write(&path, body.as_bytes()) {
            Ok(()) => Outcome { code: 0, stdout: String::new(), stderr },
            Err(e) => Outcome {
                code: EXIT_IO,
                stdout: String::new(),
                stderr: format!("error: cannot write {}: {e}\n", path.display()),
            },
        },
        None => Outcome { code: 0, stdout: body, stderr },
    }
}

fn usage_failure(msg: String) -> Outcome {
    Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {msg}\n") }
}

/// Entry point for the binary.
pub fn run() -> ExitCode {
    let outcome = execute(std::env::args_os(), Terminal::detect());
    // a closed pipe is not worth reporting
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
