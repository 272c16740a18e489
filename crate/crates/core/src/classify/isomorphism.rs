use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::symmetry::search;

/// Vertex limit for brute-force isomorphism testing and small-graph census.
pub const MAX_ISO_VERTICES: usize = 8;

/// Whether some vertex bijection maps the edges of `g1` exactly onto those of
/// `g2`. Backtracking search with degree and adjacency pruning.
pub fn graphs_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool> {
    let n = g1.vertex_count().max(g2.vertex_count());
    if n > MAX_ISO_VERTICES {
        return Err(Error::VertexLimit { n, limit: MAX_ISO_VERTICES });
    }
    if g1.vertex_count() != g2.vertex_count()
        || g1.edge_count() != g2.edge_count()
        || g1.degree_sequence() != g2.degree_sequence()
    {
        return Ok(false);
    }
    let mut images = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut found = false;
    search(g1, g2, 0, &mut images, &mut used, &mut |_| {
        found = true;
        Ok(false)
    })?;
    Ok(found)
}

/// Isomorphism invariant used to bucket candidates: each vertex's degree with
/// the sorted degrees of its neighbours, as a sorted list.
fn invariant(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    let mut inv: Vec<_> = (0..g.vertex_count())
        .map(|v| {
            let mut nd: Vec<_> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect();
    inv.sort_unstable();
    inv
}

/// One graph per isomorphism class on `n` vertices with maximum degree at
/// most `max_degree`, ordered by edge count.
///
/// Built edge count by edge count: deleting any edge of a graph in the family
/// stays in the family, so every class with `e + 1` edges arises by adding an
/// edge to a representative with `e` edges.
pub fn enumerate_bounded_degree_graphs(n: usize, max_degree: usize) -> Result<Vec<Graph>> {
    if n > MAX_ISO_VERTICES {
        return Err(Error::VertexLimit { n, limit: MAX_ISO_VERTICES });
    }
    let mut level = vec![Graph::empty(n)];
    let mut all = level.clone();
    while !level.is_empty() {
        let mut buckets: BTreeMap<Vec<(usize, Vec<usize>)>, Vec<Graph>> = BTreeMap::new();
        for g in &level {
            for u in 0..n {
                for v in u + 1..n {
                    if g.has_edge(u, v) || g.degree(u) >= max_degree || g.degree(v) >= max_degree {
                        continue;
                    }
                    let h = Graph::new(n, g.edges().iter().copied().chain([(u, v)]))?;
                    let bucket = buckets.entry(invariant(&h)).or_default();
                    let mut known = false;
                    for other in bucket.iter() {
                        if graphs_isomorphic(other, &h)? {
                            known = true;
                            break;
                        }
                    }
                    if !known {
                        bucket.push(h);
                    }
                }
            }
        }
        level = buckets.into_values().flatten().collect();
        all.extend(level.iter().cloned());
    }
    Ok(all)
}
