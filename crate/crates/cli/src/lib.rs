//! Command-line driver for the `wordpoly` analyses.
//!
//! Every subcommand builds an [`AnalysisReport`]; `--json` prints it as
//! pretty JSON, otherwise as indented text.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

mod commands;
pub mod report;

pub use report::{AnalysisReport, Verdict, VerdictStatus};

pub const WORKERS_ENV: &str = "WORDPOLY_WORKERS";

#[derive(Debug, Parser)]
#[command(name = "wordpoly", version, about = "Polynomial methods for constant-free word equations")]
pub struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct BudgetArgs {
    /// Comma-separated letters of the enumeration alphabet.
    #[arg(long, default_value = "1,2")]
    pub alphabet: String,
    /// Largest total image length enumerated.
    #[arg(long = "max-total", visible_alias = "budget", default_value_t = 10)]
    pub max_total: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The polynomial P(w).
    Encode { word: String },
    /// The reduced rational function R(w).
    Ratfun { word: String },
    /// Primitive root and exponent, with the cyclotomic divisibility test.
    Primroot { word: String },
    /// Whether two words commute, compared with R(u) = R(v).
    Commute { u: String, v: String },
    /// The periodicity lemma on a common prefix of u^ω and v^ω.
    Finewilf { u: String, v: String, len: usize },
    #[command(subcommand)]
    Eq(EqCommand),
    #[command(subcommand)]
    Pair(PairCommand),
    #[command(subcommand)]
    System(SystemCommand),
    #[command(subcommand)]
    Chain(ChainCommand),
    /// Checks U_i = V_i on given indices and spot-checks all i.
    Powerid {
        specfile: PathBuf,
        /// Comma-separated indices i where U_i = V_i is assumed.
        #[arg(long)]
        indices: String,
        /// How far past the largest index to spot-check.
        #[arg(long, default_value_t = 5)]
        extra: usize,
    },
    /// Factorizes a solution through elementary transformations.
    Factorize { eqfile: PathBuf, morphismfile: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum EqCommand {
    /// The polynomials Q_{E,x,L} of a single equation.
    Coeffs {
        eqfile: PathBuf,
        #[arg(long)]
        lengths: String,
    },
    /// The coefficient matrix of a system and its rank over Q(X).
    Rank {
        systemfile: PathBuf,
        #[arg(long)]
        lengths: String,
        /// Comma-separated alphabet for the solutions of this length type.
        #[arg(long, default_value = "1,2")]
        alphabet: String,
    },
    /// Evaluates each equation under a morphism and its residual.
    Verify { eqfile: PathBuf, morphismfile: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum PairCommand {
    /// The minor t_kl of the S-polynomial matrix.
    Minor {
        pairfile: PathBuf,
        #[arg(short)]
        k: usize,
        #[arg(short)]
        l: usize,
    },
    /// The hyperplane cover of rank n-1 length types.
    Cover {
        pairfile: PathBuf,
        #[arg(long)]
        full_pairing: bool,
        #[arg(short, requires = "l")]
        k: Option<usize>,
        #[arg(short, requires = "k")]
        l: Option<usize>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Balance profiles and the unbalanced-equation check.
    Balance {
        pairfile: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// The shape of pairs sharing a nonperiodic rank n-1 solution.
    Form {
        pairfile: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Debug, Subcommand)]
pub enum SystemCommand {
    /// Components of the first-letter graph and the rank bound.
    Graph {
        systemfile: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// All solutions within the budget.
    Enumerate {
        systemfile: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Keep only solutions of this combinatorial rank.
        #[arg(long)]
        rank: Option<usize>,
        /// Keep only solutions of this length type.
        #[arg(long)]
        lengths: Option<String>,
        /// Also write the solutions as JSON lines to this file.
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Searches a separating witness for every proper subsystem.
    Independent {
        systemfile: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Debug, Subcommand)]
pub enum ChainCommand {
    /// Chain length bounds from the first equation.
    Bound {
        eqfile: PathBuf,
        #[arg(short)]
        k: usize,
        #[arg(short)]
        l: usize,
    },
    /// Strict descent of rank n-1 solution sets along the prefixes.
    Check {
        systemfile: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

/// Failure modes of a command, before any report exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Input(String),
    CheckFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::CheckFailed(_) => 2,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::CheckFailed(m) => m,
        }
    }
}

impl From<wordpoly::Error> for CliError {
    fn from(e: wordpoly::Error) -> Self {
        match e {
            wordpoly::Error::CheckFailed(m) => CliError::CheckFailed(m),
            other => CliError::Input(other.to_string()),
        }
    }
}

/// What one invocation prints and returns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Reads the worker count from the environment; unset means one.
pub fn workers_from_env() -> Result<usize, CliError> {
    match std::env::var(WORKERS_ENV) {
        Err(_) => Ok(1),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(w) if w >= 1 => Ok(w),
            _ => Err(CliError::Input(format!("{WORKERS_ENV} must be a positive integer, got {s:?}"))),
        },
    }
}

/// Runs one invocation. `argv[0]` is the program name.
pub fn run(argv: &[String], workers: usize) -> Outcome {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let echo: Vec<String> = argv.iter().skip(1).cloned().collect();
    let start = Instant::now();
    match commands::dispatch(&cli.command, echo, workers) {
        Ok(mut report) => {
            if cli.timing {
                report.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
            }
            let stdout = if cli.json { report.to_json() + "\n" } else { report.to_text() };
            let code = if report.any_failed() { 2 } else { 0 };
            Outcome { code, stdout, stderr: String::new() }
        }
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {}\n", e.message()),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn argv(s: &str) -> Vec<String> {
        std::iter::once("wordpoly").chain(s.split_whitespace()).map(String::from).collect()
    }

    #[test]
    fn library_check_failures_exit_two() {
        let e: CliError = wordpoly::Error::CheckFailed("x".into()).into();
        assert_eq!(e.exit_code(), 2);
        let e: CliError = wordpoly::Error::EmptyWord.into();
        assert_eq!(e.exit_code(), 1);
    }

    #[test]
    fn usage_errors_exit_one() {
        let out = run(&argv("pair minor"), 1);
        assert_eq!(out.code, 1);
        assert!(out.stdout.is_empty() && !out.stderr.is_empty());
    }

    #[test]
    fn json_flag_after_subcommand() {
        let out = run(&argv("encode 1212 --json"), 1);
        assert_eq!(out.code, 0);
        let r = AnalysisReport::from_json(&out.stdout).unwrap();
        assert_eq!(r.results["polynomial"], "1 + 2X + X^2 + 2X^3");
        assert_eq!(r.argv, ["encode", "1212", "--json"]);
    }

    #[test]
    fn empty_word_has_no_rational_function() {
        let out = run(&argv("ratfun eps"), 1);
        assert_eq!(out.code, 1);
        assert!(out.stderr.contains("nonempty"));
    }
}
