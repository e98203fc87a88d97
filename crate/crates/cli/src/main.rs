use std::io::{self, IsTerminal};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use qa_cli::{run, CliConfig, OutputMode};

/// Answers simple English questions over a fact base.
#[derive(Debug, Parser)]
#[command(name = "qa", version)]
struct Args {
    /// Fact file
    #[arg(long)]
    facts: PathBuf,
    /// Lexicon file
    #[arg(long)]
    lexicon: PathBuf,
    /// Question file, one per line; omit for an interactive session
    #[arg(long)]
    batch: Option<PathBuf>,
    /// Print machine-readable answer lines
    #[arg(long)]
    machine: bool,
    /// Print parse results, candidate facts and slot verdicts to stderr
    #[arg(long)]
    trace: bool,
}

fn main() -> ExitCode {
    env_logger::init();
    let args = Args::parse();
    let config = CliConfig {
        facts_path: args.facts,
        lexicon_path: args.lexicon,
        batch_path: args.batch,
        output_mode: if args.machine {
            OutputMode::Machine
        } else {
            OutputMode::Plain
        },
        trace: args.trace,
    };
    let stdin = io::stdin();
    let prompt = stdin.is_terminal();
    let status = run(
        &config,
        &mut stdin.lock(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
        prompt,
    );
    ExitCode::from(status as u8)
}
