//! Immutable simple graphs with a fixed lexicographic edge order.
//!
//! Every bit vector in the crate is indexed by this order: edge `i` is the
//! `i`-th pair `(u, v)`, `u < v`, in lexicographic order.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gf2::BitVector;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a simple graph. Pairs may be given in either orientation and any
    /// order; loops, repeated pairs and out-of-range vertices are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (a, b) in edges {
            for vertex in [a, b] {
                if vertex >= n {
                    return Err(Error::VertexOutOfRange { vertex, n });
                }
            }
            if a == b {
                return Err(Error::Loop { vertex: a });
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            let (u, v) = w[0];
            return Err(Error::DuplicateEdge { u, v });
        }
        let mut neighbors = vec![Vec::new(); n];
        for &(u, v) in &list {
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        for adj in &mut neighbors {
            adj.sort_unstable();
        }
        Ok(Graph { n, edges: list, neighbors })
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new(), neighbors: vec![Vec::new(); n] }
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|v| (v - 1, v))).expect("path edges are simple")
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::OutOfRange { what: "cycle length", value: n, min: 3, max: usize::MAX });
        }
        Self::new(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> (usize, usize) {
        self.edges[index]
    }

    /// Position of the unordered pair in the edge order.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.neighbors.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Degrees in ascending order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<_> = self.neighbors.iter().map(Vec::len).collect();
        d.sort_unstable();
        d
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn connected_components(&self) -> Components {
        connected_components(self)
    }

    /// Edges with exactly one endpoint in `vertices`.
    pub fn vertex_cut_edges(&self, vertices: &BitVector) -> Result<BitVector> {
        vertex_cut_edges(self, vertices)
    }

    /// Edges at `v`, i.e. the cut of `{v}`.
    pub fn star(&self, v: usize) -> BitVector {
        BitVector::from_indices(
            self.edges.len(),
            self.neighbors[v].iter().map(|&w| self.edge_index(v, w).expect("neighbor edge")),
        )
    }

    /// Graph on the same vertices whose edges are the set positions of `edges`.
    pub fn edge_subgraph(&self, edges: &BitVector) -> Result<Graph> {
        if edges.len() != self.edges.len() {
            return Err(Error::LengthMismatch { expected: self.edges.len(), found: edges.len() });
        }
        Graph::new(self.n, edges.iter_ones().map(|i| self.edges[i]))
    }
}

/// `K_n`.
pub fn complete_graph(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("complete graph is simple")
}

/// Vertex `(layer, position)` of a generalized Petersen graph, flattened as
/// `layer * n + position`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GpVertex {
    /// 0 for the outer cycle, 1 for the inner star polygon.
    pub layer: usize,
    pub position: usize,
}

impl GpVertex {
    pub fn new(layer: usize, position: usize, n: usize) -> Self {
        debug_assert!(layer < 2);
        GpVertex { layer, position: position % n }
    }

    pub fn id(self, n: usize) -> usize {
        self.layer * n + self.position
    }

    pub fn from_id(id: usize, n: usize) -> Self {
        GpVertex { layer: id / n, position: id % n }
    }
}

/// `GP(n, k)`: outer cycle `(0,j)(0,j+1)`, spokes `(0,j)(1,j)` and inner edges
/// `(1,j)(1,j+k)`, all positions mod `n`.
pub fn generalized_petersen(n: usize, k: usize) -> Result<Graph> {
    if n < 3 || k < 1 || k > (n - 1) / 2 {
        return Err(Error::InvalidGpParameters { n, k });
    }
    let id = |layer, position| GpVertex::new(layer, position, n).id(n);
    let edges = (0..n).flat_map(|j| [(id(0, j), id(0, j + 1)), (id(0, j), id(1, j)), (id(1, j), id(1, j + k))]);
    Graph::new(2 * n, edges)
}

/// Component count and a per-vertex component id. Ids are assigned in order of
/// each component's smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    pub count: usize,
    pub labels: Vec<usize>,
}

pub fn connected_components(g: &Graph) -> Components {
    const UNSEEN: usize = usize::MAX;
    let mut labels = vec![UNSEEN; g.n];
    let mut count = 0;
    let mut stack = Vec::new();
    for root in 0..g.n {
        if labels[root] != UNSEEN {
            continue;
        }
        labels[root] = count;
        stack.push(root);
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if labels[w] == UNSEEN {
                    labels[w] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    Components { count, labels }
}

/// The edge cut `[S, V \ S]` for the vertex set `vertices` (length `n`).
pub fn vertex_cut_edges(g: &Graph, vertices: &BitVector) -> Result<BitVector> {
    if vertices.len() != g.n {
        return Err(Error::LengthMismatch { expected: g.n, found: vertices.len() });
    }
    Ok(BitVector::from_indices(
        g.edges.len(),
        g.edges.iter().enumerate().filter(|(_, &(u, v))| vertices.get(u) != vertices.get(v)).map(|(i, _)| i),
    ))
}

/// Decodes a graph6 string (one-byte size header, so `n <= 62`).
///
/// A leading `>>graph6<<` header and trailing line terminators are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    use crate::error::Graph6Error as E;

    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(E::Empty.into());
    }
    if let Some((position, &byte)) = bytes.iter().enumerate().find(|(_, &b)| !(63..=126).contains(&b)) {
        return Err(E::InvalidChar { position, byte }.into());
    }
    if bytes[0] == 126 {
        return Err(E::LongForm.into());
    }
    let n = (bytes[0] - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = 1 + bits.div_ceil(6);
    if bytes.len() < expected {
        return Err(E::Truncated { expected, found: bytes.len() }.into());
    }
    if bytes.len() > expected {
        return Err(E::TrailingData { expected, found: bytes.len() }.into());
    }
    let data = &bytes[1..];
    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    // Upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}
