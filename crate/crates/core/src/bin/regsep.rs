use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use regsep::pieces::DEFAULT_BUDGET;
use regsep::report::{self, exit_code, Input, Output, PtSeparateOptions};
use regsep::Error;

#[derive(Parser)]
#[command(name = "regsep", version, about = "Separation of regular languages by piecewise testable and unambiguous languages")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Work limit for abstraction and product enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    /// Directory for Graphviz renderings.
    #[arg(long, global = true)]
    dot: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Treat automaton arguments as regular expressions.
    #[arg(long, global = true)]
    regex: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Decide PT-separability in polynomial time.
    PtSeparate {
        a1: String,
        a2: String,
        /// Include the full witness paths.
        #[arg(long)]
        witness: bool,
        /// Pump the witness into a ~κ-equivalent word pair.
        #[arg(long, value_name = "KAPPA")]
        pump: Option<usize>,
    },
    /// Search for the least κ whose abstractions are disjoint.
    PtMinKappa {
        a1: String,
        a2: String,
        #[arg(long, default_value_t = 4)]
        max: usize,
        /// Write the separator automaton here when κ is found.
        #[arg(long)]
        separator: Option<PathBuf>,
    },
    /// Build the κ-level PT separator candidate for A1.
    PtSeparator {
        a1: String,
        a2: String,
        #[arg(long)]
        kappa: usize,
    },
    /// Search UL levels up to a maximum κ.
    UlSeparate {
        a1: String,
        a2: String,
        #[arg(long, default_value_t = 2)]
        max_kappa: usize,
    },
    /// Print the PT and UL level bounds.
    Bounds { a1: String, a2: String },
    /// Dump the syntactic monoid.
    Monoid { a: String },
    /// Cross-check the procedures on a seeded random corpus.
    Selfcheck {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
    },
}

fn load(arg: &str, regex: bool) -> regsep::Result<Input> {
    if regex {
        return Input::from_regex(arg);
    }
    let text = std::fs::read_to_string(arg).map_err(|e| Error::Io(format!("{arg}: {e}")))?;
    Input::from_json(arg, &text)
}

fn run(cli: &Cli) -> regsep::Result<Output> {
    let c = &cli.common;
    let ld = |s: &str| load(s, c.regex);
    match &cli.command {
        Command::PtSeparate { a1, a2, witness, pump } => report::pt_separate(
            &ld(a1)?,
            &ld(a2)?,
            &PtSeparateOptions {
                witness: *witness,
                pump: *pump,
                dot: c.dot.clone(),
            },
        ),
        Command::PtMinKappa { a1, a2, max, separator } => {
            report::pt_min_kappa(&ld(a1)?, &ld(a2)?, *max, c.budget, separator.as_deref())
        }
        Command::PtSeparator { a1, a2, kappa } => {
            report::pt_separator(&ld(a1)?, &ld(a2)?, *kappa, c.budget, c.dot.as_deref())
        }
        Command::UlSeparate { a1, a2, max_kappa } => {
            report::ul_separate(&ld(a1)?, &ld(a2)?, *max_kappa, c.budget)
        }
        Command::Bounds { a1, a2 } => report::bounds(&ld(a1)?, &ld(a2)?),
        Command::Monoid { a } => report::monoid(&ld(a)?),
        Command::Selfcheck { seed, count } => report::selfcheck(*seed, *count, c.budget),
    }
}

fn write(path: &Path, contents: &str) -> regsep::Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
    }
    std::fs::write(path, contents).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn emit(cli: &Cli, out: &Output) -> regsep::Result<()> {
    for a in &out.artifacts {
        write(&a.path, &a.contents)?;
    }
    let text = match cli.common.format {
        Format::Json => out.report.to_json(),
    };
    match &cli.common.out {
        Some(p) => write(p, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|out| emit(&cli, &out).map(|_| out));
    match result {
        Ok(out) => {
            // A failed self-check is the only answered run with a nonzero status.
            if out.report.command == "selfcheck" && out.report.result["ok"] == false {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("regsep: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
