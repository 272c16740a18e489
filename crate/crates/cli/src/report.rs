use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;
use sigswitch_core::classify::{SwitchingAction, MAX_ORBIT_LOG2_CLASSES};
use sigswitch_core::{Error, SwitchingSpace};

use crate::source::LoadedGraph;

#[derive(Clone, Debug, Serialize)]
pub struct GraphInfo {
    pub n: usize,
    pub m: usize,
    pub family: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitRow {
    pub id: usize,
    pub size: usize,
    pub mu: usize,
    pub signed_aut_order: usize,
    pub negative_edges: Vec<[usize; 2]>,
}

/// Orbits of the switching classes of one graph. Serializes to the JSON
/// export schema.
#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub graph: GraphInfo,
    pub classes: u64,
    pub orbits: Vec<OrbitRow>,
    #[serde(skip)]
    pub label: String,
    #[serde(skip)]
    pub edges: Vec<(usize, usize)>,
    #[serde(skip)]
    pub group_order: usize,
    #[serde(skip)]
    pub burnside: u64,
}

impl Classification {
    pub fn new(loaded: &LoadedGraph) -> Result<Self, Error> {
        let g = &loaded.graph;
        // refuse on class count before paying for the group
        let log2_classes = SwitchingSpace::new(g).log2_class_count();
        if log2_classes > MAX_ORBIT_LOG2_CLASSES {
            return Err(Error::ClassLimit { log2_classes, limit: MAX_ORBIT_LOG2_CLASSES });
        }
        let group = loaded.automorphisms()?;
        let action = SwitchingAction::new(g, &group)?;
        let reports = action.orbits()?;
        let burnside = action.burnside_count()?;
        let orbits = reports
            .iter()
            .enumerate()
            .map(|(i, r)| OrbitRow {
                id: i + 1,
                size: r.size,
                mu: r.mu,
                signed_aut_order: r.signed_aut_order,
                negative_edges: r.witness.negative_edges().map(|(u, v)| [u, v]).collect(),
            })
            .collect();
        Ok(Classification {
            graph: GraphInfo { n: g.vertex_count(), m: g.edge_count(), family: loaded.family() },
            classes: action.space().class_count()?,
            orbits,
            label: loaded.label(),
            edges: g.edges().to_vec(),
            group_order: group.order(),
            burnside,
        })
    }

    /// `count×size` pairs in increasing size, e.g. `4×1, 28×7, 4×14`.
    pub fn size_summary(&self) -> String {
        size_summary(self.orbits.iter().map(|o| o.size))
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let GraphInfo { n, m, family } = &self.graph;
        writeln!(out, "graph {family}: n = {n}, m = {m}, |Aut| = {}", self.group_order).unwrap();
        writeln!(out, "switching classes: {}", self.classes).unwrap();
        writeln!(out, "{:>4} {:>6} {:>4} {:>8}  negative edges", "id", "size", "mu", "|Aut(S)|").unwrap();
        for o in &self.orbits {
            let edges = if o.negative_edges.is_empty() {
                "-".to_string()
            } else {
                o.negative_edges.iter().map(|[u, v]| format!("{u}-{v}")).collect::<Vec<_>>().join(" ")
            };
            writeln!(out, "{:>4} {:>6} {:>4} {:>8}  {edges}", o.id, o.size, o.mu, o.signed_aut_order).unwrap();
        }
        writeln!(out, "orbits: {}", self.orbits.len()).unwrap();
        let verdict = if self.burnside == self.orbits.len() as u64 { "agrees" } else { "DISAGREES" };
        writeln!(out, "Burnside count: {} ({verdict})", self.burnside).unwrap();
        out
    }

    pub fn render_json(&self) -> String {
        let mut json = serde_json::to_string_pretty(self).expect("plain data serializes");
        json.push('\n');
        json
    }

    /// One undirected graph block per orbit; negative edges red, positive blue.
    pub fn render_dot(&self) -> String {
        let mut out = String::new();
        for o in &self.orbits {
            writeln!(out, "graph orbit_{} {{", o.id).unwrap();
            writeln!(
                out,
                "  label=\"{} orbit {}: size {}, mu {}, |Aut| {}\";",
                self.label, o.id, o.size, o.mu, o.signed_aut_order
            )
            .unwrap();
            for v in 0..self.graph.n {
                writeln!(out, "  v{v};").unwrap();
            }
            for &(u, v) in &self.edges {
                let color = if o.negative_edges.binary_search(&[u, v]).is_ok() { "red" } else { "blue" };
                writeln!(out, "  v{u} -- v{v} [color={color}];").unwrap();
            }
            writeln!(out, "}}").unwrap();
        }
        out
    }
}

pub fn size_summary(sizes: impl IntoIterator<Item = usize>) -> String {
    let mut histogram = BTreeMap::new();
    for s in sizes {
        *histogram.entry(s).or_insert(0usize) += 1;
    }
    histogram.iter().map(|(size, count)| format!("{count}×{size}")).collect::<Vec<_>>().join(", ")
}

/// Signing and class counts; no group needed.
#[derive(Clone, Debug, Serialize)]
pub struct CountReport {
    pub graph: GraphInfo,
    pub components: usize,
    pub signings_log2: usize,
    pub classes_log2: usize,
    /// `None` once the count no longer fits in 64 bits.
    pub signings: Option<u64>,
    pub classes: Option<u64>,
}

impl CountReport {
    pub fn new(loaded: &LoadedGraph) -> Self {
        let g = &loaded.graph;
        let (n, m) = (g.vertex_count(), g.edge_count());
        let c = g.connected_components().count;
        let exact = |e: usize| (e < 64).then(|| 1u64 << e);
        CountReport {
            graph: GraphInfo { n, m, family: loaded.family() },
            components: c,
            signings_log2: m,
            classes_log2: m + c - n,
            signings: exact(m),
            classes: exact(m + c - n),
        }
    }

    pub fn render_text(&self) -> String {
        let show = |exact: Option<u64>, e: usize| match exact {
            Some(v) => format!("{v} (2^{e})"),
            None => format!("2^{e}"),
        };
        format!(
            "graph {}\nn: {}\nm: {}\nc: {}\nsignings: {}\nswitching classes: {}\n",
            self.graph.family,
            self.graph.n,
            self.graph.m,
            self.components,
            show(self.signings, self.signings_log2),
            show(self.classes, self.classes_log2),
        )
    }

    pub fn render_json(&self) -> String {
        let mut json = serde_json::to_string_pretty(self).expect("plain data serializes");
        json.push('\n');
        json
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::source::{load, GraphSource};

    #[test]
    fn summary_format() {
        assert_eq!(size_summary([7, 1, 14, 7]), "1×1, 2×7, 1×14");
        assert_eq!(size_summary([]), "");
    }

    #[test]
    fn k3_has_two_singleton_orbits() {
        let c = Classification::new(&load(&GraphSource::Complete(3)).unwrap()).unwrap();
        let rows: Vec<_> = c.orbits.iter().map(|o| (o.mu, o.size)).collect();
        assert_eq!(rows, [(0, 1), (1, 1)]);
        assert_eq!(c.burnside, 2);
    }

    #[test]
    fn counts() {
        let r = CountReport::new(&load(&"gp:7:2".parse().unwrap()).unwrap());
        assert_eq!((r.signings, r.classes), (Some(2_097_152), Some(256)));
        let k2 = CountReport::new(&load(&GraphSource::Complete(2)).unwrap());
        assert_eq!(k2.classes, Some(1));
        let k12 = CountReport::new(&load(&GraphSource::Complete(12)).unwrap());
        assert_eq!((k12.signings, k12.classes), (None, Some(1 << 55)));
        assert!(k12.render_text().contains("signings: 2^66\n"));
    }
}
