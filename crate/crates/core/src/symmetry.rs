//! Vertex permutations, automorphism groups and the edge permutations they
//! induce.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gf2::BitVector;
use crate::graph::{GpVertex, Graph};

/// Closure and brute-force search stop once a group passes this many elements.
pub const MAX_GROUP_ORDER: usize = 1_000_000;

/// Vertex limit for [`brute_automorphisms`].
pub const MAX_SEARCH_VERTICES: usize = 12;

/// `(n, k)` pairs whose automorphism group is not the one generated by
/// rotation, reflection and (when defined) the layer swap.
pub const EXCEPTIONAL_GP: [(usize, usize); 7] = [(4, 1), (5, 2), (8, 3), (10, 2), (10, 3), (12, 5), (24, 5)];

/// A bijection on `0..n`; `images[v]` is the image of `v`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexPermutation {
    images: Vec<usize>,
}

impl VertexPermutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || core::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation);
            }
        }
        Ok(VertexPermutation { images })
    }

    pub fn identity(n: usize) -> Self {
        VertexPermutation { images: (0..n).collect() }
    }

    /// Product of the given cycles on `n` points.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut moved = vec![false; n];
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                if a >= n || core::mem::replace(&mut moved[a], true) {
                    return Err(Error::InvalidPermutation);
                }
                images[a] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(VertexPermutation { images })
    }

    /// Number of points acted on.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.images[v]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "composing permutations of different degree");
        VertexPermutation { images: other.images.iter().map(|&v| self.images[v]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (v, &w) in self.images.iter().enumerate() {
            images[w] = v;
        }
        VertexPermutation { images }
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(v, &w)| v == w)
    }
}

/// Permutation of edge indices induced by a graph automorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgePermutation {
    images: Vec<usize>,
}

impl EdgePermutation {
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, e: usize) -> usize {
        self.images[e]
    }

    /// Moves the bit at edge `e` to edge `images[e]`, so the result satisfies
    /// `out[φ(e)] = signs[e]`, i.e. `out(e) = signs(φ⁻¹(e))`.
    pub fn permute(&self, signs: &BitVector) -> BitVector {
        assert_eq!(signs.len(), self.images.len(), "sign vector length mismatch");
        BitVector::from_indices(signs.len(), signs.iter_ones().map(|e| self.images[e]))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        EdgePermutation { images: other.images.iter().map(|&e| self.images[e]).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(v, &w)| v == w)
    }
}

/// A finite permutation group stored as its full element list, sorted
/// lexicographically by image list (so the identity comes first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationGroup {
    degree: usize,
    elements: Vec<VertexPermutation>,
}

impl PermutationGroup {
    pub fn trivial(degree: usize) -> Self {
        PermutationGroup { degree, elements: vec![VertexPermutation::identity(degree)] }
    }

    fn from_set(degree: usize, set: BTreeSet<VertexPermutation>) -> Self {
        PermutationGroup { degree, elements: set.into_iter().collect() }
    }

    /// Wraps an element list without checking closure. Sorts and deduplicates.
    pub(crate) fn from_elements_unchecked(degree: usize, elements: Vec<VertexPermutation>) -> Self {
        Self::from_set(degree, elements.into_iter().collect())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[VertexPermutation] {
        &self.elements
    }

    pub fn iter(&self) -> core::slice::Iter<'_, VertexPermutation> {
        self.elements.iter()
    }

    pub fn contains(&self, p: &VertexPermutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Whether every element of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &Self) -> bool {
        self.elements.iter().all(|p| other.contains(p))
    }
}

impl<'a> IntoIterator for &'a PermutationGroup {
    type Item = &'a VertexPermutation;
    type IntoIter = core::slice::Iter<'a, VertexPermutation>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

pub fn is_automorphism(g: &Graph, p: &VertexPermutation) -> bool {
    // p is a bijection, so mapping every edge onto an edge is enough.
    p.degree() == g.vertex_count() && g.edges().iter().all(|&(u, v)| g.has_edge(p.apply(u), p.apply(v)))
}

/// Rotation `α`, reflection `β` and, when `k² ≡ ±1 (mod n)`, the layer swap
/// `γ` of `GP(n, k)`. Exceptional pairs are refused so callers fall back to
/// [`brute_automorphisms`].
pub fn gp_generators(n: usize, k: usize) -> Result<Vec<VertexPermutation>> {
    if n < 3 || k < 1 || k > (n - 1) / 2 {
        return Err(Error::InvalidGpParameters { n, k });
    }
    if EXCEPTIONAL_GP.contains(&(n, k)) {
        return Err(Error::ExceptionalGp { n, k });
    }
    let map = |f: &dyn Fn(GpVertex) -> GpVertex| VertexPermutation {
        images: (0..2 * n).map(|id| f(GpVertex::from_id(id, n)).id(n)).collect(),
    };
    let alpha = map(&|v| GpVertex::new(v.layer, v.position + 1, n));
    let beta = map(&|v| GpVertex::new(v.layer, n - v.position, n));
    let mut gens = vec![alpha, beta];
    let k2 = k * k % n;
    if k2 == 1 || k2 == n - 1 {
        gens.push(map(&|v| GpVertex::new(1 - v.layer, k * v.position, n)));
    }
    let g = crate::graph::generalized_petersen(n, k)?;
    if !gens.iter().all(|p| is_automorphism(&g, p)) {
        return Err(Error::NotAutomorphism);
    }
    Ok(gens)
}

/// Transposition `(0 1)` and the cycle `(0 1 … n-1)`, which generate `S_n`.
pub fn complete_graph_generators(n: usize) -> Vec<VertexPermutation> {
    if n < 2 {
        return vec![VertexPermutation::identity(n)];
    }
    let mut swap: Vec<usize> = (0..n).collect();
    swap.swap(0, 1);
    let cycle = (0..n).map(|v| (v + 1) % n).collect();
    vec![VertexPermutation { images: swap }, VertexPermutation { images: cycle }]
}

/// Smallest group on `degree` points containing `gens`.
pub fn closure(degree: usize, gens: &[VertexPermutation]) -> Result<PermutationGroup> {
    closure_with_limit(degree, gens, MAX_GROUP_ORDER)
}

fn closure_with_limit(degree: usize, gens: &[VertexPermutation], limit: usize) -> Result<PermutationGroup> {
    if let Some(p) = gens.iter().find(|p| p.degree() != degree) {
        return Err(Error::DegreeMismatch { expected: degree, found: p.degree() });
    }
    let identity = VertexPermutation::identity(degree);
    let mut seen = BTreeSet::new();
    seen.insert(identity.clone());
    let mut frontier = vec![identity];
    while let Some(p) = frontier.pop() {
        for g in gens {
            let q = g.compose(&p);
            if !seen.contains(&q) {
                if seen.len() == limit {
                    return Err(Error::GroupOrderLimit { limit });
                }
                seen.insert(q.clone());
                frontier.push(q);
            }
        }
    }
    Ok(PermutationGroup::from_set(degree, seen))
}

/// Every automorphism of `g`, by backtracking over vertex images with degree
/// and adjacency pruning.
pub fn brute_automorphisms(g: &Graph) -> Result<PermutationGroup> {
    let n = g.vertex_count();
    if n > MAX_SEARCH_VERTICES {
        return Err(Error::VertexLimit { n, limit: MAX_SEARCH_VERTICES });
    }
    let mut found = Vec::new();
    let mut images = vec![usize::MAX; n];
    let mut used = vec![false; n];
    search(g, g, 0, &mut images, &mut used, &mut |images| {
        if found.len() == MAX_GROUP_ORDER {
            return Err(Error::GroupOrderLimit { limit: MAX_GROUP_ORDER });
        }
        found.push(VertexPermutation { images: images.to_vec() });
        Ok(true)
    })?;
    // the search visits images in lexicographic order already
    Ok(PermutationGroup { degree: n, elements: found })
}

/// Depth-first extension of a partial vertex map `from -> to`. `visit` is
/// called on every complete isomorphism and returns whether to continue.
/// Returns `Ok(false)` once `visit` asks to stop.
pub(crate) fn search<F>(
    from: &Graph,
    to: &Graph,
    depth: usize,
    images: &mut [usize],
    used: &mut [bool],
    visit: &mut F,
) -> Result<bool>
where
    F: FnMut(&[usize]) -> Result<bool>,
{
    let n = from.vertex_count();
    if depth == n {
        return visit(images);
    }
    let v = depth;
    for w in 0..n {
        if used[w] || from.degree(v) != to.degree(w) {
            continue;
        }
        let consistent = (0..depth).all(|u| from.has_edge(u, v) == to.has_edge(images[u], w));
        if !consistent {
            continue;
        }
        images[v] = w;
        used[w] = true;
        let go_on = search(from, to, depth + 1, images, used, visit)?;
        used[w] = false;
        images[v] = usize::MAX;
        if !go_on {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Edge `(u, v)` maps to the index of `(p(u), p(v))`.
pub fn induced_edge_perm(g: &Graph, p: &VertexPermutation) -> Result<EdgePermutation> {
    if p.degree() != g.vertex_count() {
        return Err(Error::DegreeMismatch { expected: g.vertex_count(), found: p.degree() });
    }
    let images = g
        .edges()
        .iter()
        .map(|&(u, v)| g.edge_index(p.apply(u), p.apply(v)).ok_or(Error::NotAutomorphism))
        .collect::<Result<Vec<_>>>()?;
    Ok(EdgePermutation { images })
}
