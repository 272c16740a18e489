//! Switching isomorphism: the action of `Aut(Γ)` on switching classes.
//!
//! An automorphism `φ` sends a signing `σ` to `σ^φ(e) = σ(φ⁻¹(e))`, which
//! on sign vectors moves the bit of edge `e` to edge `φ(e)`. Switching
//! classes are mapped to switching classes, and two signings are switching
//! isomorphic exactly when their classes share an orbit.

mod bounds;
mod isomorphism;

pub use bounds::{
    gp_edge_layers, negative_iso_implies_same_orbit_check, verify_lower_bound, GpEdgeLayers, LowerBound,
    MAX_LOWER_BOUND_N,
};
pub use isomorphism::{enumerate_bounded_degree_graphs, graphs_isomorphic, MAX_ISO_VERTICES};

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gf2::BitVector;
use crate::graph::Graph;
use crate::signing::{SignedGraph, SwitchingClass, SwitchingSpace};
use crate::symmetry::{induced_edge_perm, EdgePermutation, PermutationGroup, VertexPermutation};

/// Orbit enumeration handles at most `2^20` switching classes.
pub const MAX_ORBIT_LOG2_CLASSES: usize = 20;

/// One switching-isomorphism class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitReport<'g> {
    /// Lexicographically smallest canonical class vector in the orbit.
    pub representative: SwitchingClass<'g>,
    pub size: usize,
    /// Fewest negative edges of any signing in the orbit.
    pub mu: usize,
    /// Minimum-weight member of the representative class; the signing that
    /// gets drawn and whose automorphisms are counted.
    pub witness: SignedGraph<'g>,
    /// `|Aut(Σ)|` of `witness`.
    pub signed_aut_order: usize,
}

/// A permutation group acting on the switching classes of a graph, with the
/// induced edge permutations precomputed.
#[derive(Clone, Debug)]
pub struct SwitchingAction<'g> {
    space: SwitchingSpace<'g>,
    group: &'g PermutationGroup,
    edge_perms: Vec<EdgePermutation>,
}

impl<'g> SwitchingAction<'g> {
    /// Fails with [`Error::NotAutomorphism`] if some group element does not
    /// preserve the edge set.
    pub fn new(graph: &'g Graph, group: &'g PermutationGroup) -> Result<Self> {
        let edge_perms = group.iter().map(|p| induced_edge_perm(graph, p)).collect::<Result<Vec<_>>>()?;
        Ok(SwitchingAction { space: SwitchingSpace::new(graph), group, edge_perms })
    }

    pub fn space(&self) -> &SwitchingSpace<'g> {
        &self.space
    }

    pub fn graph(&self) -> &'g Graph {
        self.space.graph()
    }

    pub fn group(&self) -> &'g PermutationGroup {
        self.group
    }

    /// Edge permutation of the `i`-th group element.
    pub fn edge_perm(&self, element: usize) -> &EdgePermutation {
        &self.edge_perms[element]
    }

    /// `σ^φ` for the `element`-th group member, not re-canonicalized.
    pub fn act_on_signs(&self, signs: &BitVector, element: usize) -> BitVector {
        self.edge_perms[element].permute(signs)
    }

    pub fn act_by_index(&self, class: &SwitchingClass<'_>, element: usize) -> SwitchingClass<'g> {
        let mut image = self.act_on_signs(class.canonical(), element);
        self.space.canonicalize_in_place(&mut image);
        self.space.class_from_canonical(image)
    }

    /// `[σ]^φ`. `p` must be a member of the group.
    pub fn act(&self, class: &SwitchingClass<'_>, p: &VertexPermutation) -> Result<SwitchingClass<'g>> {
        let element = self.group.elements().binary_search(p).map_err(|_| Error::NotAutomorphism)?;
        Ok(self.act_by_index(class, element))
    }

    fn image_index(&self, index: u64, element: usize) -> u64 {
        let class = self.space.class_at(index);
        self.space.class_index(&self.act_by_index(&class, element))
    }

    fn class_guard(&self) -> Result<u64> {
        let d = self.space.log2_class_count();
        if d > MAX_ORBIT_LOG2_CLASSES {
            return Err(Error::ClassLimit { log2_classes: d, limit: MAX_ORBIT_LOG2_CLASSES });
        }
        Ok(1 << d)
    }

    /// The orbit of `class`, sorted.
    pub fn orbit(&self, class: &SwitchingClass<'_>) -> Vec<SwitchingClass<'g>> {
        let mut out: Vec<_> = (0..self.group.order()).map(|i| self.act_by_index(class, i)).collect();
        out.sort();
        out.dedup();
        out
    }

    /// Number of group elements fixing `class`.
    pub fn stabilizer_order(&self, class: &SwitchingClass<'_>) -> usize {
        (0..self.group.order()).filter(|&i| self.act_by_index(class, i) == *class).count()
    }

    /// Partitions all switching classes into orbits. Reports are sorted by
    /// `(mu, size, representative)`.
    pub fn orbits(&self) -> Result<Vec<OrbitReport<'g>>> {
        let count = self.class_guard()?;
        const UNSEEN: u32 = u32::MAX;
        let mut orbit_of = vec![UNSEEN; count as usize];
        let mut reports = Vec::new();
        // Classes are visited in lexicographic order, so the first unseen
        // class is the smallest member of its orbit.
        for index in 0..count {
            if orbit_of[index as usize] != UNSEEN {
                continue;
            }
            let id = reports.len() as u32;
            let mut size = 0;
            for element in 0..self.group.order() {
                let image = self.image_index(index, element) as usize;
                if orbit_of[image] == UNSEEN {
                    orbit_of[image] = id;
                    size += 1;
                }
            }
            let representative = self.space.class_at(index);
            let witness = self.space.mu_witness(&representative)?;
            let signed_aut_order = self.signed_automorphism_group(&witness)?.order();
            reports.push(OrbitReport {
                mu: witness.negative_edge_count(),
                representative,
                size,
                witness,
                signed_aut_order,
            });
        }
        reports
            .sort_by(|a, b| (a.mu, a.size).cmp(&(b.mu, b.size)).then_with(|| a.representative.cmp(&b.representative)));
        Ok(reports)
    }

    /// Orbit count as the average number of fixed classes over the group.
    pub fn burnside_count(&self) -> Result<u64> {
        let count = self.class_guard()?;
        let fixed_points: u64 = (0..self.group.order())
            .map(|element| (0..count).filter(|&i| self.image_index(i, element) == i).count() as u64)
            .sum();
        let order = self.group.order();
        if !fixed_points.is_multiple_of(order as u64) {
            return Err(Error::BurnsideNotIntegral { fixed_points, order });
        }
        Ok(fixed_points / order as u64)
    }

    pub fn switching_isomorphic(&self, a: &SignedGraph<'_>, b: &SignedGraph<'_>) -> Result<bool> {
        let ca = self.space.class_of(a)?;
        let cb = self.space.class_of(b)?;
        Ok((0..self.group.order()).any(|i| self.act_by_index(&ca, i) == cb))
    }

    /// Group elements whose edge permutation fixes the signing itself (not
    /// just its class).
    pub fn signed_automorphism_group(&self, s: &SignedGraph<'_>) -> Result<PermutationGroup> {
        if s.graph() != self.graph() {
            return Err(Error::GraphMismatch);
        }
        let kept = self
            .edge_perms
            .iter()
            .zip(self.group.iter())
            .filter(|(ep, _)| ep.permute(s.signs()) == *s.signs())
            .map(|(_, p)| p.clone())
            .collect();
        Ok(PermutationGroup::from_elements_unchecked(self.group.degree(), kept))
    }
}

/// `[σ]^φ` for a single automorphism.
pub fn act_on_class<'g>(c: &SwitchingClass<'g>, p: &VertexPermutation) -> Result<SwitchingClass<'g>> {
    let graph = c.graph();
    let ep = induced_edge_perm(graph, p)?;
    let space = SwitchingSpace::new(graph);
    space.class_of_signs(&ep.permute(c.canonical()))
}

pub fn orbits<'g>(g: &'g Graph, grp: &'g PermutationGroup) -> Result<Vec<OrbitReport<'g>>> {
    SwitchingAction::new(g, grp)?.orbits()
}

pub fn burnside_count(g: &Graph, grp: &PermutationGroup) -> Result<u64> {
    SwitchingAction::new(g, grp)?.burnside_count()
}

pub fn switching_isomorphic(a: &SignedGraph<'_>, b: &SignedGraph<'_>, grp: &PermutationGroup) -> Result<bool> {
    if a.graph() != b.graph() {
        return Err(Error::GraphMismatch);
    }
    SwitchingAction::new(a.graph(), grp)?.switching_isomorphic(a, b)
}

/// `Aut(Σ) = Aut(Γ) ∩ Aut(Σ⁻)`: the members of `grp` mapping every negative
/// edge to a negative edge. Elements that are not automorphisms of the
/// underlying graph are dropped.
pub fn signed_automorphism_group(s: &SignedGraph<'_>, grp: &PermutationGroup) -> PermutationGroup {
    let g = s.graph();
    let kept = grp
        .iter()
        .filter(|p| {
            p.degree() == g.vertex_count()
                && g.edges().iter().enumerate().all(|(e, &(u, v))| {
                    g.edge_index(p.apply(u), p.apply(v)).is_some_and(|f| s.is_negative(f) == s.is_negative(e))
                })
        })
        .cloned()
        .collect();
    PermutationGroup::from_elements_unchecked(grp.degree(), kept)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, generalized_petersen};
    use crate::signing::{class_of, enumerate_classes};
    use crate::symmetry::{brute_automorphisms, closure, complete_graph_generators, gp_generators};

    fn sym(n: usize) -> PermutationGroup {
        closure(n, &complete_graph_generators(n)).unwrap()
    }

    #[test]
    fn act_examples() {
        let k3 = complete_graph(3);
        let classes: Vec<_> = enumerate_classes(&k3).unwrap().collect();
        let rot = VertexPermutation::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        for c in &classes {
            assert_eq!(act_on_class(c, &VertexPermutation::identity(3)).unwrap(), *c);
            assert_eq!(act_on_class(c, &rot).unwrap(), *c);
            for p in &sym(3) {
                assert_eq!(act_on_class(c, p).unwrap(), *c);
            }
        }
        let path = Graph::path(3);
        let c = class_of(&SignedGraph::all_positive(&path));
        let swap = VertexPermutation::from_cycles(3, &[&[0, 1]]).unwrap();
        assert_eq!(act_on_class(&c, &swap), Err(Error::NotAutomorphism));
    }

    #[test]
    fn k5_orbits() {
        let k5 = complete_graph(5);
        let grp = sym(5);
        let reports = orbits(&k5, &grp).unwrap();
        let sizes: Vec<_> = reports.iter().map(|r| r.size).collect();
        let mus: Vec<_> = reports.iter().map(|r| r.mu).collect();
        assert_eq!(mus, [0, 1, 2, 2, 3, 3, 4]);
        let mut sorted_sizes = sizes.clone();
        sorted_sizes.sort_unstable();
        assert_eq!(sorted_sizes, [1, 1, 10, 10, 12, 15, 15]);
        assert_eq!(sizes.iter().sum::<usize>(), 64);
        assert_eq!(burnside_count(&k5, &grp).unwrap(), 7);
        assert_eq!(burnside_count(&k5, &PermutationGroup::trivial(5)).unwrap(), 64);
    }

    #[test]
    fn gp72_and_petersen_orbits() {
        let gp = generalized_petersen(7, 2).unwrap();
        let grp = closure(14, &gp_generators(7, 2).unwrap()).unwrap();
        let reports = orbits(&gp, &grp).unwrap();
        assert_eq!(reports.len(), 36);
        let count = |s| reports.iter().filter(|r| r.size == s).count();
        assert_eq!((count(1), count(7), count(14)), (4, 28, 4));
        assert_eq!(burnside_count(&gp, &grp).unwrap(), 36);

        let petersen = generalized_petersen(5, 2).unwrap();
        let aut = brute_automorphisms(&petersen).unwrap();
        let reports = orbits(&petersen, &aut).unwrap();
        assert_eq!(reports.len(), 6);
        assert_eq!(reports.iter().map(|r| r.size).sum::<usize>(), 64);
    }

    #[test]
    fn switching_isomorphism_examples() {
        let k5 = complete_graph(5);
        let grp = sym(5);
        let one = SignedGraph::from_negative_edges(&k5, [(0, 1)]).unwrap();
        let other = SignedGraph::from_negative_edges(&k5, [(2, 4)]).unwrap();
        assert!(switching_isomorphic(&one, &other, &grp).unwrap());
        let adjacent = SignedGraph::from_negative_edges(&k5, [(0, 1), (0, 4)]).unwrap();
        let disjoint = SignedGraph::from_negative_edges(&k5, [(0, 1), (3, 4)]).unwrap();
        assert!(!switching_isomorphic(&adjacent, &disjoint, &grp).unwrap());
        let t = crate::signing::SwitchingFunction::from_vertices(5, [1, 3]).unwrap();
        assert!(switching_isomorphic(&adjacent, &adjacent.switch(&t).unwrap(), &grp).unwrap());
    }

    #[test]
    fn signed_automorphism_examples() {
        let k5 = complete_graph(5);
        let grp = sym(5);
        assert_eq!(signed_automorphism_group(&SignedGraph::all_positive(&k5), &grp).order(), 120);

        let gp = generalized_petersen(7, 2).unwrap();
        let a72 = closure(14, &gp_generators(7, 2).unwrap()).unwrap();
        let layers = gp_edge_layers(&gp, 7, 2).unwrap();
        let outer_negative = SignedGraph::new(&gp, BitVector::from_indices(21, layers.outer.iter().copied())).unwrap();
        assert_eq!(signed_automorphism_group(&outer_negative, &a72).order(), 14);
        for e in 0..21 {
            let single = SignedGraph::new(&gp, BitVector::from_indices(21, [e])).unwrap();
            let order = signed_automorphism_group(&single, &a72).order();
            assert!(order <= 2, "edge {e}: order {order}");
        }
        let action = SwitchingAction::new(&gp, &a72).unwrap();
        assert_eq!(action.signed_automorphism_group(&outer_negative).unwrap().order(), 14);
    }

    #[test]
    fn orbit_stabilizer() {
        let k5 = complete_graph(5);
        let grp = sym(5);
        let action = SwitchingAction::new(&k5, &grp).unwrap();
        for r in action.orbits().unwrap() {
            assert_eq!(grp.order() / action.stabilizer_order(&r.representative), r.size);
            assert_eq!(action.orbit(&r.representative).len(), r.size);
            assert_eq!(action.orbit(&r.representative)[0], r.representative);
        }
    }

    #[test]
    fn action_rejects_foreign_groups() {
        let path = Graph::path(3);
        let grp = sym(3);
        assert_eq!(SwitchingAction::new(&path, &grp).err(), Some(Error::NotAutomorphism));
    }

    #[test]
    fn class_guard_on_orbits() {
        let k8 = complete_graph(8);
        // 2^21 classes
        let grp = PermutationGroup::trivial(8);
        assert_eq!(
            orbits(&k8, &grp).err(),
            Some(Error::ClassLimit { log2_classes: 21, limit: MAX_ORBIT_LOG2_CLASSES })
        );
    }
}
