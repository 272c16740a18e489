use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::isomorphism::{enumerate_bounded_degree_graphs, graphs_isomorphic};
use super::SwitchingAction;
use crate::error::{Error, Result};
use crate::gf2::BitVector;
use crate::graph::{complete_graph, generalized_petersen, GpVertex, Graph};
use crate::signing::SignedGraph;
use crate::symmetry::{closure, complete_graph_generators};

/// Largest `n` accepted by [`verify_lower_bound`].
pub const MAX_LOWER_BOUND_N: usize = 8;

/// Largest complete graph accepted by [`negative_iso_implies_same_orbit_check`].
const MAX_NEGATIVE_ISO_N: usize = 7;

/// The three edge orbits of the rotation on `GP(n, k)`, each listed by
/// position `j = 0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GpEdgeLayers {
    /// `(0,j)(0,j+1)`
    pub outer: Vec<usize>,
    /// `(1,j)(1,j+k)`
    pub inner: Vec<usize>,
    /// `(0,j)(1,j)`
    pub spokes: Vec<usize>,
}

impl GpEdgeLayers {
    pub fn layers(&self) -> [&[usize]; 3] {
        [&self.outer, &self.inner, &self.spokes]
    }

    /// Whether every layer carries a single sign.
    pub fn is_monochromatic(&self, signs: &BitVector) -> bool {
        self.layers().iter().all(|layer| layer.iter().all(|&e| signs.get(e) == signs.get(layer[0])))
    }

    /// The signing that is negative on exactly the layers selected by the low
    /// three bits of `mask` (outer, inner, spokes).
    pub fn layer_signing(&self, m: usize, mask: u8) -> BitVector {
        let chosen = self.layers().into_iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1);
        BitVector::from_indices(m, chosen.flat_map(|(_, l)| l.iter().copied()))
    }
}

pub fn gp_edge_layers(g: &Graph, n: usize, k: usize) -> Result<GpEdgeLayers> {
    let reference = generalized_petersen(n, k).map_err(|_| Error::NotGeneralizedPetersen { n, k })?;
    if *g != reference {
        return Err(Error::NotGeneralizedPetersen { n, k });
    }
    let id = |layer, position| GpVertex::new(layer, position, n).id(n);
    let index = |a, b| g.edge_index(a, b).expect("GP edge");
    Ok(GpEdgeLayers {
        outer: (0..n).map(|j| index(id(0, j), id(0, j + 1))).collect(),
        inner: (0..n).map(|j| index(id(1, j), id(1, j + k))).collect(),
        spokes: (0..n).map(|j| index(id(0, j), id(1, j))).collect(),
    })
}

/// Truth value of "`a⁻ ≅ b⁻` implies `a` and `b` are switching isomorphic"
/// for one pair of signings of a complete graph.
pub fn negative_iso_implies_same_orbit_check(g: &Graph, a: &SignedGraph<'_>, b: &SignedGraph<'_>) -> Result<bool> {
    if !g.is_complete() {
        return Err(Error::NotComplete);
    }
    let n = g.vertex_count();
    if n > MAX_NEGATIVE_ISO_N {
        return Err(Error::VertexLimit { n, limit: MAX_NEGATIVE_ISO_N });
    }
    if a.graph() != g || b.graph() != g {
        return Err(Error::GraphMismatch);
    }
    if !graphs_isomorphic(&a.negative_subgraph(), &b.negative_subgraph())? {
        return Ok(true);
    }
    let group = closure(n, &complete_graph_generators(n))?;
    SwitchingAction::new(g, &group)?.switching_isomorphic(a, b)
}

/// Outcome of checking the complete-graph lower bound at one `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LowerBound {
    /// Number of graphs on `n` vertices with maximum degree `⌊n/4⌋ - 1`.
    pub bound: usize,
    /// Whether the signings of `K_n` negative on those graphs are pairwise
    /// switching non-isomorphic.
    pub verified: bool,
}

pub fn verify_lower_bound(n: usize) -> Result<LowerBound> {
    if !(4..=MAX_LOWER_BOUND_N).contains(&n) {
        return Err(Error::OutOfRange { what: "n", value: n, min: 4, max: MAX_LOWER_BOUND_N });
    }
    let kn = complete_graph(n);
    let group = closure(n, &complete_graph_generators(n))?;
    let action = SwitchingAction::new(&kn, &group)?;
    let space = action.space();
    let graphs = enumerate_bounded_degree_graphs(n, n / 4 - 1)?;
    let classes = graphs
        .iter()
        .map(|h| {
            let s = SignedGraph::from_negative_edges(&kn, h.edges().iter().copied())?;
            space.class_of(&s)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut verified = true;
    for (i, c) in classes.iter().enumerate() {
        let orbit: BTreeSet<_> = action.orbit(c).into_iter().map(|x| space.class_index(&x)).collect();
        if classes[i + 1..].iter().any(|d| orbit.contains(&space.class_index(d))) {
            verified = false;
        }
    }
    Ok(LowerBound { bound: graphs.len(), verified })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetry::{gp_generators, induced_edge_perm};

    #[test]
    fn layers_partition_gp72() {
        let g = generalized_petersen(7, 2).unwrap();
        let layers = gp_edge_layers(&g, 7, 2).unwrap();
        let mut all: Vec<_> = layers.layers().iter().flat_map(|l| l.iter().copied()).collect();
        assert!(layers.layers().iter().all(|l| l.len() == 7));
        all.sort_unstable();
        assert_eq!(all, (0..21).collect::<Vec<_>>());
        for &e in &layers.spokes {
            let (u, v) = g.edge(e);
            assert_eq!((u / 7, v / 7), (0, 1));
        }
        let alpha = &gp_generators(7, 2).unwrap()[0];
        let ep = induced_edge_perm(&g, alpha).unwrap();
        for layer in layers.layers() {
            let mut orbit = alloc::vec![layer[0]];
            while orbit.len() < 7 {
                orbit.push(ep.apply(*orbit.last().unwrap()));
            }
            orbit.sort_unstable();
            let mut sorted = layer.to_vec();
            sorted.sort_unstable();
            assert_eq!(orbit, sorted);
        }
    }

    #[test]
    fn layers_reject_other_graphs() {
        let g = generalized_petersen(7, 3).unwrap();
        assert_eq!(gp_edge_layers(&g, 7, 2), Err(Error::NotGeneralizedPetersen { n: 7, k: 2 }));
        assert!(gp_edge_layers(&g, 4, 2).is_err());
    }

    #[test]
    fn monochromatic_layers() {
        let g = generalized_petersen(7, 2).unwrap();
        let layers = gp_edge_layers(&g, 7, 2).unwrap();
        for mask in 0..8 {
            assert!(layers.is_monochromatic(&layers.layer_signing(21, mask)));
        }
        assert!(!layers.is_monochromatic(&BitVector::from_indices(21, [layers.outer[3]])));
    }

    #[test]
    fn negative_iso_examples() {
        let k5 = complete_graph(5);
        let a = SignedGraph::from_negative_edges(&k5, [(0, 1)]).unwrap();
        let b = SignedGraph::from_negative_edges(&k5, [(3, 4)]).unwrap();
        assert!(negative_iso_implies_same_orbit_check(&k5, &a, &a).unwrap());
        assert!(negative_iso_implies_same_orbit_check(&k5, &a, &b).unwrap());
        let path = Graph::path(3);
        let p = SignedGraph::all_positive(&path);
        assert_eq!(negative_iso_implies_same_orbit_check(&path, &p, &p), Err(Error::NotComplete));
        let k8 = complete_graph(8);
        let q = SignedGraph::all_positive(&k8);
        assert!(matches!(negative_iso_implies_same_orbit_check(&k8, &q, &q), Err(Error::VertexLimit { .. })));
    }

    #[test]
    fn lower_bound_small_cases() {
        assert_eq!(verify_lower_bound(4).unwrap(), LowerBound { bound: 1, verified: true });
        assert_eq!(verify_lower_bound(5).unwrap(), LowerBound { bound: 1, verified: true });
        assert!(verify_lower_bound(3).is_err());
        assert!(verify_lower_bound(9).is_err());
    }
}
