//! `chromex`: exact chromatic polynomials, mean colour numbers and
//! counterexample checks from the command line.
//!
//! Exit codes: 0 success, 1 a verification contradicted an asserted
//! identity or threshold, 2 usage/parse/IO errors, 3 resource guards.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use chromex::cache::{DiskCache, CACHE_ENV_VAR};
use chromex::chromatic::{EdgePolicy, EngineConfig, SharedStore};
use clap::{Parser, Subcommand, ValueEnum};

use crate::commands::CliError;

#[derive(Parser, Debug)]
#[command(
    name = "chromex",
    version,
    about = "Exact chromatic polynomials and mean colour numbers"
)]
struct Cli {
    /// Directory for the persistent polynomial cache.
    #[arg(long, global = true, env = CACHE_ENV_VAR)]
    cache: Option<PathBuf>,
    /// Disable memoization inside the deletion–contraction engine.
    #[arg(long, global = true)]
    no_memo: bool,
    /// Edge chosen at each deletion–contraction step.
    #[arg(long, global = true, value_enum, default_value_t = PolicyArg::MinDegree)]
    edge_policy: PolicyArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Edgelist,
    Graph6,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum PolicyArg {
    MaxDegreeSum,
    MinDegree,
    First,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum G0ModeArg {
    CliquePlusIsolated,
    CliquePlusPath,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum WhichGraph {
    G0,
    G1,
    G2,
    G3,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum TheoremArg {
    #[value(name = "5")]
    Five,
    #[value(name = "8")]
    Eight,
    Remark,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConjectureArg {
    C2,
    C3,
    Spanning,
}

#[derive(Debug, Clone, clap::Args)]
pub struct FamilyArgs {
    #[arg(long = "i")]
    pub i: u64,
    #[arg(long = "j")]
    pub j: u64,
    #[arg(long = "s")]
    pub s: u64,
    #[arg(long = "t")]
    pub t: u64,
    #[arg(long, value_enum, default_value_t = G0ModeArg::CliquePlusIsolated)]
    pub g0_mode: G0ModeArg,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Chromatic polynomial coefficients (ascending powers) and evaluations.
    Poly {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = FormatArg::Edgelist)]
        format: FormatArg,
        /// Evaluate the polynomial at this integer; repeatable.
        #[arg(long = "eval", allow_hyphen_values = true)]
        eval: Vec<i64>,
    },
    /// Exact mean colour number.
    Mu {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = FormatArg::Edgelist)]
        format: FormatArg,
    },
    /// τ(G1, G2, λ) = P(G1,λ)P(G2,λ-1) - P(G1,λ-1)P(G2,λ).
    Tau {
        #[arg(long)]
        g1: PathBuf,
        #[arg(long)]
        g2: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        lambda: i64,
        #[arg(long, value_enum, default_value_t = FormatArg::Edgelist)]
        format: FormatArg,
    },
    /// Emit one graph of the two-vertex attachment family.
    Construct {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum)]
        emit: WhichGraph,
        #[arg(long, value_enum, default_value_t = FormatArg::Edgelist)]
        format: FormatArg,
        /// Write here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Verification report for one family instance, as JSON.
    Verify {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = TheoremArg::Five)]
        theorem: TheoremArg,
    },
    /// Threshold table with each row's minimal instance re-verified.
    Scan {
        #[arg(long)]
        j_max: u64,
        #[arg(long)]
        s_max: u64,
        #[arg(long)]
        t_max: u64,
        #[arg(long, value_enum, default_value_t = G0ModeArg::CliquePlusIsolated)]
        g0_mode: G0ModeArg,
        /// CSV with a header row instead of JSON.
        #[arg(long)]
        csv: bool,
    },
    /// Exhaustive search over labelled graphs on n ≤ 7 vertices.
    Hunt {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        conjecture: ConjectureArg,
        /// Append-only NDJSON progress file; an existing file is resumed.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
}

fn engine_config(cli: &Cli) -> Result<EngineConfig, CliError> {
    let mut config = EngineConfig {
        memo_enabled: !cli.no_memo,
        edge_policy: match cli.edge_policy {
            PolicyArg::MaxDegreeSum => EdgePolicy::MaxDegreeSum,
            PolicyArg::MinDegree => EdgePolicy::MinDegree,
            PolicyArg::First => EdgePolicy::First,
        },
        ..EngineConfig::default()
    };
    if let Some(dir) = &cli.cache {
        let cache = DiskCache::open(dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
        config.store = Some(SharedStore(std::sync::Arc::new(cache)));
    }
    Ok(config)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = engine_config(&cli).and_then(|config| commands::run(cli.command, &config));
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(CliError::Refuted(text)) => {
            print!("{text}");
            eprintln!("error: the result contradicts an identity or threshold that should hold");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
