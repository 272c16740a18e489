//! Command-line front end for `sigswitch-core`: graph sources, orbit
//! reports in text, JSON and DOT, and a verification suite.

pub mod report;
pub mod source;
pub mod verify;

use std::fmt;
use std::path::PathBuf;

use report::{Classification, CountReport};
use source::{load, GraphSource};
use verify::Check;

#[derive(Debug)]
pub enum CliError {
    Core(sigswitch_core::Error),
    Io { path: PathBuf, source: std::io::Error },
    Input(String),
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io { path, source } => write!(f, "{}: {source}", path.display()),
            CliError::Input(msg) | CliError::Usage(msg) => f.write_str(msg),
        }
    }
}

impl std::error::Error for CliError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            CliError::Core(e) => Some(e),
            CliError::Io { source, .. } => Some(source),
            _ => None,
        }
    }
}

impl From<sigswitch_core::Error> for CliError {
    fn from(e: sigswitch_core::Error) -> Self {
        CliError::Core(e)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Classify,
    Count,
    Verify,
    Export,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    /// Required by every command except `verify`.
    pub source: Option<GraphSource>,
    /// `None` picks the command's default.
    pub format: Option<Format>,
}

/// Rendered output plus whether any verification check failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub failed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, failed: false }
    }
}

fn require(source: &Option<GraphSource>, command: &str) -> Result<GraphSource, CliError> {
    source.clone().ok_or_else(|| CliError::Usage(format!("{command} needs --graph")))
}

fn unsupported(command: &str, format: Format) -> CliError {
    CliError::Usage(format!("{command} does not support --format {format:?}").to_lowercase())
}

pub fn cmd_count(source: &GraphSource) -> Result<CountReport, CliError> {
    Ok(CountReport::new(&load(source)?))
}

pub fn cmd_classify(source: &GraphSource) -> Result<Classification, CliError> {
    Ok(Classification::new(&load(source)?)?)
}

/// Without a graph, the built-in suite; with one, the checks for that graph.
pub fn cmd_verify(source: Option<&GraphSource>) -> Result<Vec<Check>, CliError> {
    match source {
        None => verify::default_suite(),
        Some(s) => verify::graph_suite(&load(s)?),
    }
}

pub fn cmd_export(source: &GraphSource, format: Format) -> Result<String, CliError> {
    let c = cmd_classify(source)?;
    match format {
        Format::Dot => Ok(c.render_dot()),
        Format::Json => Ok(c.render_json()),
        Format::Text => Err(unsupported("export", format)),
    }
}

pub fn run(config: &RunConfig) -> Result<Output, CliError> {
    match config.command {
        Command::Count => {
            let report = cmd_count(&require(&config.source, "count")?)?;
            match config.format.unwrap_or(Format::Text) {
                Format::Text => Ok(Output::ok(report.render_text())),
                Format::Json => Ok(Output::ok(report.render_json())),
                f => Err(unsupported("count", f)),
            }
        }
        Command::Classify => {
            let c = cmd_classify(&require(&config.source, "classify")?)?;
            Ok(Output::ok(match config.format.unwrap_or(Format::Text) {
                Format::Text => c.render_text(),
                Format::Json => c.render_json(),
                Format::Dot => c.render_dot(),
            }))
        }
        Command::Export => {
            let source = require(&config.source, "export")?;
            Ok(Output::ok(cmd_export(&source, config.format.unwrap_or(Format::Dot))?))
        }
        Command::Verify => {
            if let Some(f) = config.format.filter(|&f| f != Format::Text) {
                return Err(unsupported("verify", f));
            }
            let checks = cmd_verify(config.source.as_ref())?;
            let failed = checks.iter().filter(|c| !c.passed).count();
            let mut text: String = checks.iter().map(|c| format!("{c}\n")).collect();
            text.push_str(&format!("{} checks, {failed} failed\n", checks.len()));
            Ok(Output { text, failed: failed > 0 })
        }
    }
}
