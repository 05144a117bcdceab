mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use psdzf::Limits;

use commands::{ExtremalOptions, Status};
use input::InputArgs;

#[derive(Parser, Debug)]
#[command(name = "psdzf", version, about = "Positive semidefinite zero forcing on small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit JSON lines instead of tables
    #[arg(long, global = true)]
    json: bool,

    #[command(flatten)]
    caps: Caps,
}

#[derive(Args, Debug)]
struct Caps {
    /// Largest order for exhaustive Z+ / pt+ searches
    #[arg(long, global = true, default_value_t = Limits::default().max_n)]
    max_n: usize,

    /// Largest number of candidate sets scanned per k
    #[arg(long, global = true, default_value_t = Limits::default().max_subsets)]
    max_subsets: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Z+, pt+ and an efficient set for each input graph
    Compute {
        #[command(flatten)]
        input: InputArgs,
        /// Also compute th+
        #[arg(long)]
        throttle: bool,
    },
    /// Step-by-step propagation from a blue set
    Simulate {
        #[command(flatten)]
        input: InputArgs,
        /// Comma-separated vertex ids or fixture names
        #[arg(long)]
        blue: String,
    },
    /// Single-vertex migration spreading the components of G - B
    Migrate1 {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        blue: String,
    },
    /// Multiple-vertex migration balancing the slowest components
    Migrate2 {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        blue: String,
    },
    /// Run a registered migration strategy by name
    Migrate {
        #[arg(long, required_unless_present = "list")]
        strategy: Option<String>,
        /// List registered strategies
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        blue: Option<String>,
    },
    /// Print a built-in family graph (lists families without an argument)
    Family { spec: Option<String> },
    /// All graphs with pt+ = n - k
    Extremal {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        throttle: bool,
        /// Include Nordhaus-Gaddum sums
        #[arg(long)]
        ng: bool,
        /// Cache per-order results here
        #[arg(long)]
        checkpoint_dir: Option<PathBuf>,
    },
    /// Maximum pt+ over graphs of order n with Z+ = k
    Zeta {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Nordhaus-Gaddum sums for the inputs, or a search over one order
    Ng {
        /// Search every graph of this order instead of reading inputs
        #[arg(long)]
        order: Option<usize>,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Check pt+(G,k) <= ceil((n-k)/2) for every k in [Z+, n]
    VerifyBounds {
        #[command(flatten)]
        input: InputArgs,
    },
}

fn run(cli: Cli, status: &mut Status) -> anyhow::Result<()> {
    let limits = Limits { max_n: cli.caps.max_n, max_subsets: cli.caps.max_subsets };
    let json = cli.json;
    match cli.command {
        Command::Compute { input, throttle } => commands::compute(&input, &limits, throttle, json, status),
        Command::Simulate { input, blue } => commands::simulate(&input, &blue, json),
        Command::Migrate1 { input, blue } => commands::migrate(&input, &blue, "algorithm1", json, status),
        Command::Migrate2 { input, blue } => commands::migrate(&input, &blue, "algorithm2", json, status),
        Command::Migrate { list: true, .. } => {
            commands::list_strategies();
            Ok(())
        }
        Command::Migrate { strategy, input, blue, .. } => {
            let blue = blue.ok_or_else(|| anyhow::anyhow!("--blue is required"))?;
            commands::migrate(&input, &blue, strategy.as_deref().unwrap_or_default(), json, status)
        }
        Command::Family { spec } => commands::family(spec.as_deref(), json),
        Command::Extremal { k, throttle, ng, checkpoint_dir } => {
            commands::extremal(&ExtremalOptions { k, throttle, ng, checkpoint_dir }, &limits, json)
        }
        Command::Zeta { n, k } => commands::zeta_cmd(n, k, &limits, json),
        Command::Ng { order, input } => commands::ng(order, &input, &limits, json, status),
        Command::VerifyBounds { input } => commands::verify_bounds(&input, &limits, json, status),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut status = Status::default();
    match run(cli, &mut status) {
        Ok(()) if !status.failed => ExitCode::SUCCESS,
        Ok(()) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
