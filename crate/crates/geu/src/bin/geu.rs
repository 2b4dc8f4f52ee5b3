//! Command-line front end over the library: parses a problem document, runs
//! one command, prints the deterministic report to stdout, and encodes the
//! outcome in the exit code (0 all checks hold, 1 some check failed, 2 input
//! or validation error, 3 budget exceeded). Timing goes to stderr only.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use geu::cli::{execute, Command};
use geu::savage::{CheckIndex, Version};
use geu::synthesis::Construction;
use geu::{Budgets, Error, DEFAULT_ACT_BUDGET, DEFAULT_PARTITION_BUDGET, DEFAULT_PROBE_BUDGET};

#[derive(Parser)]
#[command(
    name = "geu",
    version,
    about = "Generalized expected utility: evaluation, representation synthesis, and postulate checking on finite decision problems"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// Report format on stdout
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Cap on |C|^|S| act enumerations
    #[arg(long, global = true, default_value_t = DEFAULT_ACT_BUDGET)]
    budget_acts: u64,

    /// Cap on set-partition enumeration
    #[arg(long, global = true, default_value_t = DEFAULT_PARTITION_BUDGET)]
    budget_partitions: u64,

    /// Cap on law-check probes
    #[arg(long, global = true, default_value_t = DEFAULT_PROBE_BUDGET)]
    budget_probes: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the domain laws and the measure laws of a problem document
    Validate { file: PathBuf },
    /// Expected utility of one act, optionally restricted to an event
    Eval {
        file: PathBuf,
        /// Act name
        #[arg(long)]
        act: String,
        /// Comma-separated state ids restricting the evaluation
        #[arg(long, value_delimiter = ',')]
        restrict: Option<Vec<String>>,
    },
    /// The preference relation induced by expected utility
    Prefs { file: PathBuf },
    /// Build a representing problem for the document's preference
    Synthesize {
        file: PathBuf,
        /// Construction: thm1, corollary, or fixed
        #[arg(long)]
        construction: String,
    },
    /// Decide postulates on the preference and axioms on the problem
    Check {
        file: PathBuf,
        /// Comma-separated indices from 1a,1b,2,3,4,5,6
        #[arg(long, value_delimiter = ',', default_value = "")]
        postulates: Vec<String>,
        /// Comma-separated indices from 1a,1b,2,3,4,5,6
        #[arg(long, value_delimiter = ',', default_value = "")]
        axioms: Vec<String>,
        /// general (bracketed guards) or special (requires all simple acts)
        #[arg(long, default_value = "general")]
        version: String,
    },
    /// Verify the axiom-postulate biconditionals on the problem
    Verify {
        file: PathBuf,
        /// Comma-separated indices from 1a,1b,2,3,4,5,6
        #[arg(long, value_delimiter = ',')]
        set: Vec<String>,
    },
    /// Act-set utilities
    Acts {
        file: PathBuf,
        /// List every simple act in lexicographic order
        #[arg(long)]
        enumerate: bool,
    },
}

fn indices(tokens: &[String]) -> Result<Vec<CheckIndex>, String> {
    tokens
        .iter()
        .filter(|t| !t.is_empty())
        .map(|t| CheckIndex::from_token(t).ok_or_else(|| format!("unknown check index {t:?}")))
        .collect()
}

fn build_command(cmd: &Cmd) -> Result<(PathBuf, Command), String> {
    Ok(match cmd {
        Cmd::Validate { file } => (file.clone(), Command::Validate),
        Cmd::Eval { file, act, restrict } => (
            file.clone(),
            Command::Eval { act: act.clone(), restrict: restrict.clone() },
        ),
        Cmd::Prefs { file } => (file.clone(), Command::Prefs),
        Cmd::Synthesize { file, construction } => {
            let construction = Construction::from_token(construction)
                .ok_or_else(|| format!("unknown construction {construction:?}"))?;
            (file.clone(), Command::Synthesize { construction })
        }
        Cmd::Check { file, postulates, axioms, version } => {
            let version = match version.as_str() {
                "general" => Version::General,
                "special" => Version::Special,
                other => return Err(format!("unknown version {other:?}")),
            };
            (
                file.clone(),
                Command::Check {
                    postulates: indices(postulates)?,
                    axioms: indices(axioms)?,
                    version,
                },
            )
        }
        Cmd::Verify { file, set } => (file.clone(), Command::Verify { set: indices(set)? }),
        Cmd::Acts { file, enumerate } => {
            if !enumerate {
                return Err("acts requires --enumerate".to_string());
            }
            (file.clone(), Command::EnumerateActs)
        }
    })
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = Cli::parse();
    let budgets = Budgets {
        acts: cli.budget_acts,
        partitions: cli.budget_partitions,
        probes: cli.budget_probes,
    };
    let (path, command) = match build_command(&cli.command) {
        Ok(parts) => parts,
        Err(message) => {
            eprintln!("error: {message}");
            return 2;
        }
    };
    let bytes = match std::fs::read(&path) {
        Ok(bytes) => bytes,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return 2;
        }
    };
    let start = Instant::now();
    match execute(&bytes, &command, budgets) {
        Ok(report) => {
            let rendered = match cli.format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
            };
            print!("{rendered}");
            eprintln!("# elapsed: {:?}", start.elapsed());
            report.exit_code()
        }
        Err(error) => {
            eprintln!("error: {error}");
            if matches!(error, Error::BudgetExceeded { .. }) {
                3
            } else {
                2
            }
        }
    }
}
