//! Signed graphs, switching, and switching classes.
//!
//! Switching at a vertex set `S` negates every edge of the cut `[S, V \ S]`,
//! so on sign vectors it is XOR with a cut vector. Two signings are switching
//! equivalent exactly when their XOR lies in the cut space, and each class is
//! named by its reduction against the cut-space basis.

use alloc::vec;
use alloc::vec::Vec;
use core::ptr;

use crate::error::{Error, Result};
use crate::gf2::{BitVector, Gf2Basis};
use crate::graph::Graph;

/// Most switching classes [`SwitchingSpace::class_count`] will report: `2^62`.
pub const MAX_LOG2_CLASSES: usize = 62;

fn same_graph(a: &Graph, b: &Graph) -> bool {
    ptr::eq(a, b) || a == b
}

/// A graph together with a sign on each edge. Bit `i` of `signs` set means
/// edge `i` is negative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedGraph<'g> {
    graph: &'g Graph,
    signs: BitVector,
}

impl<'g> SignedGraph<'g> {
    pub fn new(graph: &'g Graph, signs: BitVector) -> Result<Self> {
        if signs.len() != graph.edge_count() {
            return Err(Error::LengthMismatch { expected: graph.edge_count(), found: signs.len() });
        }
        Ok(SignedGraph { graph, signs })
    }

    pub fn all_positive(graph: &'g Graph) -> Self {
        SignedGraph { graph, signs: BitVector::zeros(graph.edge_count()) }
    }

    pub fn all_negative(graph: &'g Graph) -> Self {
        SignedGraph { graph, signs: BitVector::ones(graph.edge_count()) }
    }

    /// Signing whose negative edges are exactly the listed pairs.
    pub fn from_negative_edges<I>(graph: &'g Graph, negative: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut signs = BitVector::zeros(graph.edge_count());
        for (u, v) in negative {
            let e = graph.edge_index(u, v).ok_or(Error::MissingEdge { u, v })?;
            signs.set(e, true);
        }
        Ok(SignedGraph { graph, signs })
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn signs(&self) -> &BitVector {
        &self.signs
    }

    pub fn into_signs(self) -> BitVector {
        self.signs
    }

    pub fn is_negative(&self, edge: usize) -> bool {
        self.signs.get(edge)
    }

    pub fn negative_edge_count(&self) -> usize {
        self.signs.count_ones()
    }

    /// Negative edges as vertex pairs, in edge order.
    pub fn negative_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.signs.iter_ones().map(|e| self.graph.edge(e))
    }

    pub fn switch(&self, t: &SwitchingFunction) -> Result<Self> {
        switch(self, t)
    }

    pub fn negative_subgraph(&self) -> Graph {
        negative_subgraph(self)
    }

    pub fn positive_subgraph(&self) -> Graph {
        self.graph.edge_subgraph(&self.signs.complement()).expect("length checked at construction")
    }

    pub fn signed_degrees(&self, v: usize) -> Result<SignedDegrees> {
        signed_degrees(self, v)
    }
}

/// Positive and negative degree of a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignedDegrees {
    pub positive: usize,
    pub negative: usize,
}

/// A switching function, stored as the set of vertices it maps to `-1`.
///
/// `θ` and `-θ` switch identically; [`SwitchingFunction::normalized`] picks
/// the representative that leaves vertex 0 unflipped.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SwitchingFunction {
    flipped: BitVector,
}

impl SwitchingFunction {
    pub fn identity(n: usize) -> Self {
        SwitchingFunction { flipped: BitVector::zeros(n) }
    }

    pub fn from_set(flipped: BitVector) -> Self {
        SwitchingFunction { flipped }
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(n: usize, vertices: I) -> Result<Self> {
        let mut flipped = BitVector::zeros(n);
        for vertex in vertices {
            if vertex >= n {
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            flipped.set(vertex, true);
        }
        Ok(SwitchingFunction { flipped })
    }

    pub fn flipped(&self) -> &BitVector {
        &self.flipped
    }

    pub fn vertex_count(&self) -> usize {
        self.flipped.len()
    }

    /// `θ(v)` as `+1` / `-1`.
    pub fn value(&self, v: usize) -> i8 {
        if self.flipped.get(v) {
            -1
        } else {
            1
        }
    }

    /// `-θ`.
    pub fn negated(&self) -> Self {
        SwitchingFunction { flipped: self.flipped.complement() }
    }

    /// Of `θ` and `-θ`, the one with `θ(0) = +1`.
    pub fn normalized(&self) -> Self {
        if !self.flipped.is_empty() && self.flipped.get(0) {
            self.negated()
        } else {
            self.clone()
        }
    }
}

/// A switching class, named by its canonical sign vector: the class member
/// that is zero at every pivot of the cut-space basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwitchingClass<'g> {
    graph: &'g Graph,
    canonical: BitVector,
}

impl<'g> SwitchingClass<'g> {
    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn canonical(&self) -> &BitVector {
        &self.canonical
    }

    /// The canonical member as a signed graph.
    pub fn to_signed(&self) -> SignedGraph<'g> {
        SignedGraph { graph: self.graph, signs: self.canonical.clone() }
    }
}

impl Ord for SwitchingClass<'_> {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.canonical.cmp(&other.canonical)
    }
}

impl PartialOrd for SwitchingClass<'_> {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Cut-space basis of a graph plus the bookkeeping needed to name, count and
/// enumerate its switching classes.
#[derive(Clone, Debug)]
pub struct SwitchingSpace<'g> {
    graph: &'g Graph,
    basis: Gf2Basis,
    free: Vec<usize>,
}

impl<'g> SwitchingSpace<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        let basis = cut_space_basis(graph);
        let free = basis.free_coordinates();
        SwitchingSpace { graph, basis, free }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn basis(&self) -> &Gf2Basis {
        &self.basis
    }

    /// Free (non-pivot) edge indices; `m - n + c` of them.
    pub fn free_coordinates(&self) -> &[usize] {
        &self.free
    }

    /// `log2` of the number of switching classes, `m - n + c`.
    pub fn log2_class_count(&self) -> usize {
        self.free.len()
    }

    pub fn class_count(&self) -> Result<u64> {
        let d = self.free.len();
        if d > MAX_LOG2_CLASSES {
            return Err(Error::ClassLimit { log2_classes: d, limit: MAX_LOG2_CLASSES });
        }
        Ok(1u64 << d)
    }

    fn check_graph(&self, graph: &Graph) -> Result<()> {
        if same_graph(self.graph, graph) {
            Ok(())
        } else {
            Err(Error::GraphMismatch)
        }
    }

    pub fn class_of_signs(&self, signs: &BitVector) -> Result<SwitchingClass<'g>> {
        Ok(SwitchingClass { graph: self.graph, canonical: self.basis.reduce(signs)? })
    }

    pub fn class_of(&self, s: &SignedGraph<'_>) -> Result<SwitchingClass<'g>> {
        self.check_graph(s.graph)?;
        self.class_of_signs(&s.signs)
    }

    /// Canonicalizes a sign vector in place. The caller guarantees the length.
    pub(crate) fn canonicalize_in_place(&self, signs: &mut BitVector) {
        self.basis.reduce_in_place(signs);
    }

    pub(crate) fn class_from_canonical(&self, canonical: BitVector) -> SwitchingClass<'g> {
        debug_assert_eq!(self.basis.reduce(&canonical).as_ref(), Ok(&canonical));
        SwitchingClass { graph: self.graph, canonical }
    }

    pub fn equivalent(&self, a: &SignedGraph<'_>, b: &SignedGraph<'_>) -> Result<bool> {
        self.check_graph(a.graph)?;
        self.check_graph(b.graph)?;
        self.basis.in_span(&(&a.signs ^ &b.signs))
    }

    /// A switching taking `a` to `b`, normalized to leave vertex 0 unflipped,
    /// or `None` if they are not equivalent.
    ///
    /// Each component is walked from its smallest vertex, which stays
    /// unflipped; a crossing edge decides whether the far endpoint flips.
    pub fn switching_witness(&self, a: &SignedGraph<'_>, b: &SignedGraph<'_>) -> Result<Option<SwitchingFunction>> {
        self.check_graph(a.graph)?;
        self.check_graph(b.graph)?;
        let g = self.graph;
        let diff = &a.signs ^ &b.signs;
        let n = g.vertex_count();
        let mut seen = vec![false; n];
        let mut flipped = BitVector::zeros(n);
        let mut stack = Vec::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            stack.push(root);
            while let Some(v) = stack.pop() {
                for &w in g.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        let e = g.edge_index(v, w).expect("neighbor edge");
                        flipped.set(w, flipped.get(v) != diff.get(e));
                        stack.push(w);
                    }
                }
            }
        }
        let cut = g.vertex_cut_edges(&flipped)?;
        Ok((cut == diff).then_some(SwitchingFunction { flipped }))
    }

    /// Position of a class in the enumeration order: the free-coordinate
    /// pattern read with the lowest free edge as the most significant bit.
    pub fn class_index(&self, class: &SwitchingClass<'_>) -> u64 {
        let d = self.free.len();
        self.free.iter().enumerate().fold(
            0u64,
            |acc, (j, &f)| {
                if class.canonical.get(f) {
                    acc | 1 << (d - 1 - j)
                } else {
                    acc
                }
            },
        )
    }

    /// Inverse of [`class_index`](Self::class_index).
    pub fn class_at(&self, index: u64) -> SwitchingClass<'g> {
        let d = self.free.len();
        let mut canonical = BitVector::zeros(self.graph.edge_count());
        for (j, &f) in self.free.iter().enumerate() {
            if index >> (d - 1 - j) & 1 == 1 {
                canonical.set(f, true);
            }
        }
        SwitchingClass { graph: self.graph, canonical }
    }

    /// All classes in lexicographic order of their canonical vectors.
    pub fn classes(&self) -> Result<Classes<'_, 'g>> {
        let count = self.class_count()?;
        Ok(Classes { space: self, next: 0, end: count })
    }

    /// Minimum number of negative edges over the class.
    pub fn mu(&self, class: &SwitchingClass<'_>) -> Result<usize> {
        Ok(self.mu_witness(class)?.negative_edge_count())
    }

    /// A class member with the fewest negative edges (lexicographically
    /// smallest among ties).
    pub fn mu_witness(&self, class: &SwitchingClass<'_>) -> Result<SignedGraph<'g>> {
        self.check_graph(class.graph)?;
        let (_, witness) = self.basis.min_weight_coset_member(&class.canonical)?;
        Ok(SignedGraph { graph: self.graph, signs: witness })
    }
}

/// Iterator over the switching classes of a graph.
pub struct Classes<'s, 'g> {
    space: &'s SwitchingSpace<'g>,
    next: u64,
    end: u64,
}

impl<'g> Iterator for Classes<'_, 'g> {
    type Item = SwitchingClass<'g>;

    fn next(&mut self) -> Option<Self::Item> {
        (self.next < self.end).then(|| {
            self.next += 1;
            self.space.class_at(self.next - 1)
        })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = usize::try_from(self.end - self.next).unwrap_or(usize::MAX);
        (left, Some(left))
    }
}

/// Owning variant of [`Classes`] returned by [`enumerate_classes`].
pub struct OwnedClasses<'g> {
    space: SwitchingSpace<'g>,
    next: u64,
    end: u64,
}

impl<'g> Iterator for OwnedClasses<'g> {
    type Item = SwitchingClass<'g>;

    fn next(&mut self) -> Option<Self::Item> {
        (self.next < self.end).then(|| {
            self.next += 1;
            self.space.class_at(self.next - 1)
        })
    }
}

/// Row-reduced basis of the span of the vertex stars, inserted in vertex order.
pub fn cut_space_basis(g: &Graph) -> Gf2Basis {
    let mut basis = Gf2Basis::empty(g.edge_count());
    for v in 0..g.vertex_count() {
        basis.insert(g.star(v)).expect("star has edge-space length");
    }
    basis
}

pub fn switch<'g>(s: &SignedGraph<'g>, t: &SwitchingFunction) -> Result<SignedGraph<'g>> {
    let cut = s.graph.vertex_cut_edges(&t.flipped)?;
    Ok(SignedGraph { graph: s.graph, signs: &s.signs ^ &cut })
}

pub fn switching_equivalent(a: &SignedGraph<'_>, b: &SignedGraph<'_>) -> Result<bool> {
    if !same_graph(a.graph, b.graph) {
        return Err(Error::GraphMismatch);
    }
    SwitchingSpace::new(a.graph).equivalent(a, b)
}

pub fn class_of<'g>(s: &SignedGraph<'g>) -> SwitchingClass<'g> {
    SwitchingSpace::new(s.graph).class_of(s).expect("signing belongs to its own graph")
}

/// `2^(m - n + c)`.
pub fn count_classes(g: &Graph) -> Result<u64> {
    let d = g.edge_count() + g.connected_components().count - g.vertex_count();
    if d > MAX_LOG2_CLASSES {
        return Err(Error::ClassLimit { log2_classes: d, limit: MAX_LOG2_CLASSES });
    }
    Ok(1u64 << d)
}

pub fn enumerate_classes(g: &Graph) -> Result<OwnedClasses<'_>> {
    let space = SwitchingSpace::new(g);
    let end = space.class_count()?;
    Ok(OwnedClasses { space, next: 0, end })
}

pub fn mu(c: &SwitchingClass<'_>) -> Result<usize> {
    SwitchingSpace::new(c.graph).mu(c)
}

pub fn negative_subgraph(s: &SignedGraph<'_>) -> Graph {
    s.graph.edge_subgraph(&s.signs).expect("length checked at construction")
}

pub fn signed_degrees(s: &SignedGraph<'_>, v: usize) -> Result<SignedDegrees> {
    let n = s.graph.vertex_count();
    if v >= n {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    let negative = s.graph.neighbors(v).iter().filter(|&&w| s.signs.get(s.graph.edge_index(v, w).unwrap())).count();
    Ok(SignedDegrees { positive: s.graph.degree(v) - negative, negative })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, generalized_petersen};
    use alloc::collections::BTreeSet;

    fn all_switchings(n: usize) -> impl Iterator<Item = SwitchingFunction> {
        (0u64..1 << n).map(move |p| SwitchingFunction::from_set(BitVector::from_u64(n, p)))
    }

    #[test]
    fn cut_space_rank() {
        assert_eq!(cut_space_basis(&complete_graph(5)).rank(), 4);
        assert_eq!(cut_space_basis(&generalized_petersen(7, 2).unwrap()).rank(), 13);
        let e = cut_space_basis(&Graph::empty(3));
        assert_eq!(e.rank(), 0);
        assert!(e.rows().is_empty());
    }

    #[test]
    fn reduce_on_k5_agrees_over_the_whole_class() {
        let k5 = complete_graph(5);
        let basis = cut_space_basis(&k5);
        for row in basis.rows() {
            assert!(basis.reduce(row).unwrap().is_zero());
        }
        let v = BitVector::from_indices(10, [0]);
        let r = basis.reduce(&v).unwrap();
        assert!(!r.is_zero());
        assert!(basis.pivots().iter().all(|&p| !r.get(p)));
        // the 16 cuts of K5, built from vertex subsets containing vertex 4 or not
        let cuts: BTreeSet<_> = (0u64..32).map(|p| k5.vertex_cut_edges(&BitVector::from_u64(5, p)).unwrap()).collect();
        assert_eq!(cuts.len(), 16);
        for c in &cuts {
            assert_eq!(basis.reduce(&(&v ^ c)).unwrap(), r);
        }
    }

    #[test]
    fn in_span_examples() {
        let k5 = complete_graph(5);
        let b5 = cut_space_basis(&k5);
        assert!(b5.in_span(&k5.star(2)).unwrap());
        assert!(b5.in_span(&k5.vertex_cut_edges(&BitVector::from_indices(5, [0, 1])).unwrap()).unwrap());
        let k3 = complete_graph(3);
        let b3 = cut_space_basis(&k3);
        // every cut of K3 has even size, so no single edge is a cut
        for e in 0..3 {
            let single = BitVector::from_indices(3, [e]);
            assert!(!b3.in_span(&single).unwrap());
            assert!(all_switchings(3).all(|t| k3.vertex_cut_edges(t.flipped()).unwrap() != single));
        }
    }

    #[test]
    fn min_weight_examples() {
        let k5 = complete_graph(5);
        let b = cut_space_basis(&k5);
        assert_eq!(b.min_weight_coset_member(&BitVector::zeros(10)).unwrap(), (0, BitVector::zeros(10)));
        let single = BitVector::from_indices(10, [0]);
        assert_eq!(b.min_weight_coset_member(&single).unwrap(), (1, single.clone()));
        // star of 0 plus the disjoint edge (1,2)
        let e12 = BitVector::from_indices(10, [k5.edge_index(1, 2).unwrap()]);
        let v = &k5.star(0) ^ &e12;
        assert_eq!(b.min_weight_coset_member(&v).unwrap(), (1, e12));
    }

    #[test]
    fn switching_examples() {
        let k3 = complete_graph(3);
        let pos = SignedGraph::all_positive(&k3);
        assert_eq!(pos.switch(&SwitchingFunction::identity(3)).unwrap(), pos);
        assert_eq!(pos.switch(&SwitchingFunction::from_vertices(3, 0..3).unwrap()).unwrap(), pos);
        let flipped = pos.switch(&SwitchingFunction::from_vertices(3, [0]).unwrap()).unwrap();
        assert_eq!(flipped.negative_edges().collect::<Vec<_>>(), [(0, 1), (0, 2)]);
        assert!(SwitchingFunction::from_vertices(3, [3]).is_err());
    }

    #[test]
    fn equivalence_on_k3_matches_brute_force() {
        let k3 = complete_graph(3);
        let pos = SignedGraph::all_positive(&k3);
        let one = SignedGraph::from_negative_edges(&k3, [(0, 1)]).unwrap();
        let two = SignedGraph::from_negative_edges(&k3, [(0, 1), (0, 2)]).unwrap();
        let reach = |b: &SignedGraph<'_>| all_switchings(3).any(|t| pos.switch(&t).unwrap() == *b);
        assert!(!reach(&one));
        assert!(reach(&two));
        assert!(!switching_equivalent(&pos, &one).unwrap());
        assert!(switching_equivalent(&pos, &two).unwrap());
        let k4 = complete_graph(4);
        assert_eq!(switching_equivalent(&pos, &SignedGraph::all_positive(&k4)), Err(Error::GraphMismatch));
    }

    #[test]
    fn witness_is_normalized_and_correct() {
        let g = generalized_petersen(7, 2).unwrap();
        let space = SwitchingSpace::new(&g);
        let s = SignedGraph::from_negative_edges(&g, [(0, 1), (7, 9)]).unwrap();
        let t = SwitchingFunction::from_vertices(14, [0, 3, 8, 13]).unwrap();
        let switched = s.switch(&t).unwrap();
        let w = space.switching_witness(&s, &switched).unwrap().unwrap();
        assert_eq!(w, t.normalized());
        assert!(!w.flipped().get(0));
        let other = SignedGraph::from_negative_edges(&g, [(0, 1)]).unwrap();
        assert_eq!(space.switching_witness(&s, &other).unwrap(), None);
    }

    #[test]
    fn class_examples() {
        let k5 = complete_graph(5);
        let space = SwitchingSpace::new(&k5);
        assert!(class_of(&SignedGraph::all_positive(&k5)).canonical().is_zero());
        let one = SignedGraph::from_negative_edges(&k5, [(2, 4)]).unwrap();
        let c = space.class_of(&one).unwrap();
        assert!(!c.canonical().is_zero());
        for t in all_switchings(5) {
            assert_eq!(space.class_of(&one.switch(&t).unwrap()).unwrap(), c);
        }
    }

    #[test]
    fn class_counts() {
        assert_eq!(count_classes(&complete_graph(5)).unwrap(), 64);
        assert_eq!(count_classes(&generalized_petersen(7, 2).unwrap()).unwrap(), 256);
        assert_eq!(count_classes(&Graph::path(5)).unwrap(), 1);
        assert_eq!(count_classes(&complete_graph(12)).unwrap(), 1 << 55);
        assert_eq!(
            count_classes(&complete_graph(13)),
            Err(Error::ClassLimit { log2_classes: 66, limit: MAX_LOG2_CLASSES })
        );
    }

    #[test]
    fn enumeration_is_lexicographic_and_complete() {
        let k5 = complete_graph(5);
        let classes: Vec<_> = enumerate_classes(&k5).unwrap().collect();
        assert_eq!(classes.len(), 64);
        assert!(classes.windows(2).all(|w| w[0] < w[1]));
        let space = SwitchingSpace::new(&k5);
        for (i, c) in classes.iter().enumerate() {
            assert_eq!(space.class_index(c), i as u64);
        }
        let gp = generalized_petersen(7, 2).unwrap();
        let distinct: BTreeSet<_> = enumerate_classes(&gp).unwrap().map(|c| c.canonical().clone()).collect();
        assert_eq!(distinct.len(), 256);
    }

    #[test]
    fn k3_has_two_classes() {
        let k3 = complete_graph(3);
        let classes: Vec<_> = enumerate_classes(&k3).unwrap().collect();
        assert_eq!(classes.len(), 2);
        assert!(classes[0].canonical().is_zero());
        let e12 = SignedGraph::from_negative_edges(&k3, [(1, 2)]).unwrap();
        assert_eq!(classes[1], class_of(&e12));
        // exhaustive partition of the 8 signings
        let mut reps: Vec<SignedGraph<'_>> = Vec::new();
        for p in 0u64..8 {
            let s = SignedGraph::new(&k3, BitVector::from_u64(3, p)).unwrap();
            if !reps.iter().any(|r| switching_equivalent(r, &s).unwrap()) {
                reps.push(s);
            }
        }
        assert_eq!(reps.len(), 2);
    }

    #[test]
    fn mu_examples() {
        let k5 = complete_graph(5);
        assert_eq!(mu(&class_of(&SignedGraph::all_positive(&k5))).unwrap(), 0);
        // vertices p1..p5 of the drawings are 0..4 here
        let path3 = SignedGraph::from_negative_edges(&k5, [(0, 1), (0, 4), (3, 4)]).unwrap();
        assert_eq!(mu(&class_of(&path3)).unwrap(), 3);
        let tri_plus_edge = SignedGraph::from_negative_edges(&k5, [(0, 1), (0, 4), (1, 4), (2, 3)]).unwrap();
        assert_eq!(mu(&class_of(&tri_plus_edge)).unwrap(), 4);
        assert_eq!(class_of(&tri_plus_edge), class_of(&SignedGraph::all_negative(&k5)));
    }

    #[test]
    fn negative_subgraph_and_degrees() {
        let k5 = complete_graph(5);
        assert_eq!(SignedGraph::all_positive(&k5).negative_subgraph(), Graph::empty(5));
        let k3 = complete_graph(3);
        assert_eq!(SignedGraph::all_negative(&k3).negative_subgraph(), k3);
        let two = SignedGraph::from_negative_edges(&k5, [(0, 1), (0, 4)]).unwrap();
        let neg = two.negative_subgraph();
        assert_eq!(neg.edge_count(), 2);
        assert_eq!(neg.degree_sequence(), [0, 0, 1, 1, 2]);
        assert_eq!(
            signed_degrees(&SignedGraph::all_positive(&k5), 3).unwrap(),
            SignedDegrees { positive: 4, negative: 0 }
        );
        assert_eq!(
            signed_degrees(&SignedGraph::all_negative(&k5), 3).unwrap(),
            SignedDegrees { positive: 0, negative: 4 }
        );
        let tri = SignedGraph::from_negative_edges(&k5, [(0, 1), (0, 4), (1, 4)]).unwrap();
        assert_eq!(tri.signed_degrees(4).unwrap(), SignedDegrees { positive: 2, negative: 2 });
        assert!(tri.signed_degrees(5).is_err());
        assert_eq!(tri.positive_subgraph().edge_count(), 7);
    }
}
