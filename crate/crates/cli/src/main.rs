use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use sigswitch::source::GraphSource;
use sigswitch::{run, CliError, Command, Format, RunConfig};

/// Switching classes and switching-isomorphism classes of signed graphs.
#[derive(Parser)]
#[command(name = "sigswitch", version)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand)]
enum Sub {
    /// Orbits of switching classes under the automorphism group
    Classify(GraphArgs),
    /// Number of signings and switching classes
    Count(GraphArgs),
    /// Run the check suite (the built-in one unless --graph is given)
    Verify(VerifyArgs),
    /// Orbit representatives as DOT (default) or JSON
    Export(GraphArgs),
}

#[derive(Args)]
struct GraphArgs {
    /// `k:n`, `gp:n:k`, or a graph6 file
    #[arg(long)]
    graph: GraphSource,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    graph: Option<GraphSource>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write to this file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, source, output) = match cli.command {
        Sub::Classify(a) => (Command::Classify, Some(a.graph), a.output),
        Sub::Count(a) => (Command::Count, Some(a.graph), a.output),
        Sub::Export(a) => (Command::Export, Some(a.graph), a.output),
        Sub::Verify(a) => (Command::Verify, a.graph, a.output),
    };
    let config = RunConfig { command, source, format: output.format };
    let result = run(&config).and_then(|out| {
        match &output.out {
            Some(path) => {
                std::fs::write(path, &out.text).map_err(|source| CliError::Io { path: path.clone(), source })?
            }
            None => print!("{}", out.text),
        }
        Ok(out.failed)
    });
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("sigswitch: {e}");
            ExitCode::from(2)
        }
    }
}
