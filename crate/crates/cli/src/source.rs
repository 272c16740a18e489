use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use sigswitch_core::symmetry::{brute_automorphisms, closure, complete_graph_generators, gp_generators};
use sigswitch_core::{complete_graph, generalized_petersen, parse_graph6, Error, Graph, PermutationGroup};

use crate::CliError;

/// Where the graph comes from: `k:n`, `gp:n:k`, or a graph6 file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSource {
    Complete(usize),
    Petersen { n: usize, k: usize },
    Graph6File(PathBuf),
}

impl FromStr for GraphSource {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let number = |part: &str| {
            part.parse::<usize>().map_err(|_| format!("`{part}` in graph spec `{s}` is not a non-negative integer"))
        };
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            ["k", n] => match number(n)? {
                0 => Err("k:n needs n >= 1".into()),
                n => Ok(GraphSource::Complete(n)),
            },
            ["gp", n, k] => Ok(GraphSource::Petersen { n: number(n)?, k: number(k)? }),
            ["k", ..] => Err(format!("expected `k:n`, got `{s}`")),
            ["gp", ..] => Err(format!("expected `gp:n:k`, got `{s}`")),
            _ if s.is_empty() => Err("empty graph spec".into()),
            _ => Ok(GraphSource::Graph6File(PathBuf::from(s))),
        }
    }
}

impl fmt::Display for GraphSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSource::Complete(n) => write!(f, "k:{n}"),
            GraphSource::Petersen { n, k } => write!(f, "gp:{n}:{k}"),
            GraphSource::Graph6File(path) => write!(f, "{}", path.display()),
        }
    }
}

/// A graph together with how it was named.
#[derive(Clone, Debug)]
pub struct LoadedGraph {
    pub source: GraphSource,
    pub graph: Graph,
}

impl LoadedGraph {
    /// Family string as used in reports: the spec for families, `graph6` for files.
    pub fn family(&self) -> String {
        match &self.source {
            GraphSource::Graph6File(_) => "graph6".into(),
            other => other.to_string(),
        }
    }

    /// Short human label, e.g. `K5` or `GP(7,2)`.
    pub fn label(&self) -> String {
        match &self.source {
            GraphSource::Complete(n) => format!("K{n}"),
            GraphSource::Petersen { n, k } => format!("GP({n},{k})"),
            GraphSource::Graph6File(path) => {
                path.file_name().map_or_else(|| "graph".into(), |name| name.to_string_lossy().into_owned())
            }
        }
    }

    /// The full automorphism group: generator closure for the families, with
    /// a backtracking search for the exceptional GP pairs and for files.
    pub fn automorphisms(&self) -> Result<PermutationGroup, Error> {
        let n = self.graph.vertex_count();
        match self.source {
            GraphSource::Complete(_) => closure(n, &complete_graph_generators(n)),
            GraphSource::Petersen { n, k } => match gp_generators(n, k) {
                Ok(gens) => closure(2 * n, &gens),
                Err(Error::ExceptionalGp { .. }) => brute_automorphisms(&self.graph),
                Err(e) => Err(e),
            },
            GraphSource::Graph6File(_) => brute_automorphisms(&self.graph),
        }
    }
}

pub fn load(source: &GraphSource) -> Result<LoadedGraph, CliError> {
    let graph = match source {
        GraphSource::Complete(n) => complete_graph(*n),
        GraphSource::Petersen { n, k } => generalized_petersen(*n, *k)?,
        GraphSource::Graph6File(path) => {
            let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.clone(), source })?;
            let line = text
                .lines()
                .find(|l| !l.trim().is_empty())
                .ok_or_else(|| CliError::Input(format!("{}: no graph6 line found", path.display())))?;
            parse_graph6(line.trim())?
        }
    };
    Ok(LoadedGraph { source: source.clone(), graph })
}
