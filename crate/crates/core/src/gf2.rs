//! Bit vectors over GF(2) and row-reduced bases.
//!
//! A [`BitVector`] of length `m` doubles as a sign function on the edges of a
//! graph (bit `i` set means edge `i` is negative) and as a vector of the edge
//! space. A [`Gf2Basis`] kept in reduced row-echelon form gives every coset of
//! its span a canonical member: the one that is zero at every pivot.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{BitAnd, BitXor, BitXorAssign};

use crate::error::{Error, Result};

const WORD: usize = 64;

/// Largest rank for which [`Gf2Basis::min_weight_coset_member`] exhausts the coset.
pub const MAX_COSET_RANK: usize = 20;

/// Fixed-length packed bit vector. Bits past `len` are always zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector { len, words: vec![0; len.div_ceil(WORD)] }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self::zeros(len);
        for (i, w) in v.words.iter_mut().enumerate() {
            let bits = (len - i * WORD).min(WORD);
            *w = if bits == WORD { u64::MAX } else { (1u64 << bits) - 1 };
        }
        v
    }

    /// Vector with exactly the listed positions set.
    ///
    /// # Panics
    /// If an index is not below `len`.
    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, indices: I) -> Self {
        let mut v = Self::zeros(len);
        for i in indices {
            v.set(i, true);
        }
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        Self::from_indices(bits.len(), bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i))
    }

    /// The low `len` bits of `pattern`, bit `i` of the integer becoming position `i`.
    pub fn from_u64(len: usize, pattern: u64) -> Self {
        assert!(len <= WORD, "from_u64 supports at most 64 positions");
        let mut v = Self::zeros(len);
        if len > 0 {
            let mask = if len == WORD { u64::MAX } else { (1u64 << len) - 1 };
            v.words[0] = pattern & mask;
        }
        v
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Lowest set position.
    pub fn first_one(&self) -> Option<usize> {
        self.words.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn iter_ones(&self) -> Ones<'_> {
        Ones { words: &self.words, index: 0, current: self.words.first().copied().unwrap_or(0) }
    }

    /// Bitwise complement within `len`.
    pub fn complement(&self) -> Self {
        let mut out = self.clone();
        out ^= &Self::ones(self.len);
        out
    }

    fn check_len(&self, other: &Self) {
        assert_eq!(self.len, other.len, "bit vector length mismatch");
    }
}

/// Iterator over set positions, ascending.
pub struct Ones<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.index * WORD + bit)
    }
}

impl BitXorAssign<&BitVector> for BitVector {
    fn bitxor_assign(&mut self, rhs: &BitVector) {
        self.check_len(rhs);
        for (a, b) in self.words.iter_mut().zip(&rhs.words) {
            *a ^= b;
        }
    }
}

impl BitXor for &BitVector {
    type Output = BitVector;

    fn bitxor(self, rhs: &BitVector) -> BitVector {
        let mut out = self.clone();
        out ^= rhs;
        out
    }
}

impl BitAnd for &BitVector {
    type Output = BitVector;

    fn bitand(self, rhs: &BitVector) -> BitVector {
        self.check_len(rhs);
        BitVector { len: self.len, words: self.words.iter().zip(&rhs.words).map(|(a, b)| a & b).collect() }
    }
}

/// Lexicographic order on the bit sequence, position 0 most significant.
/// Vectors of different lengths order by length first.
impl Ord for BitVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len.cmp(&other.len).then_with(|| {
            for (a, b) in self.words.iter().zip(&other.words) {
                let diff = a ^ b;
                if diff != 0 {
                    let bit = diff.trailing_zeros();
                    return if a >> bit & 1 == 1 { Ordering::Greater } else { Ordering::Less };
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for BitVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

/// Basis of a subspace of GF(2)^len in reduced row-echelon form.
///
/// Row `i` has its lowest set bit at `pivots[i]`, pivots strictly increase,
/// and no row has a one in another row's pivot column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2Basis {
    len: usize,
    rows: Vec<BitVector>,
    pivots: Vec<usize>,
}

impl Gf2Basis {
    pub fn empty(len: usize) -> Self {
        Gf2Basis { len, rows: Vec::new(), pivots: Vec::new() }
    }

    /// Row-reduces the span of `generators`, inserting them in order.
    pub fn from_generators<I>(len: usize, generators: I) -> Result<Self>
    where
        I: IntoIterator<Item = BitVector>,
    {
        let mut basis = Self::empty(len);
        for g in generators {
            basis.insert(g)?;
        }
        Ok(basis)
    }

    /// Adds `v` to the spanning set. Returns whether the rank grew.
    pub fn insert(&mut self, mut v: BitVector) -> Result<bool> {
        self.check(&v)?;
        self.reduce_in_place(&mut v);
        let Some(pivot) = v.first_one() else {
            return Ok(false);
        };
        // v is zero at every existing pivot, so clearing its pivot column from
        // the other rows keeps their leading ones in place.
        for row in &mut self.rows {
            if row.get(pivot) {
                *row ^= &v;
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(at, pivot);
        self.rows.insert(at, v);
        Ok(true)
    }

    /// Ambient dimension.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Non-pivot coordinates, ascending. These carry the identity of a coset.
    pub fn free_coordinates(&self) -> Vec<usize> {
        let mut pivots = self.pivots.iter().peekable();
        (0..self.len)
            .filter(|&i| {
                if pivots.peek() == Some(&&i) {
                    pivots.next();
                    false
                } else {
                    true
                }
            })
            .collect()
    }

    fn check(&self, v: &BitVector) -> Result<()> {
        if v.len() != self.len {
            return Err(Error::LengthMismatch { expected: self.len, found: v.len() });
        }
        Ok(())
    }

    /// Clears every pivot coordinate of `v` by adding rows.
    ///
    /// # Panics
    /// If `v` has the wrong length.
    pub fn reduce_in_place(&self, v: &mut BitVector) {
        for (row, &pivot) in self.rows.iter().zip(&self.pivots) {
            if v.get(pivot) {
                *v ^= row;
            }
        }
    }

    /// The member of `v + span` that is zero at every pivot.
    pub fn reduce(&self, v: &BitVector) -> Result<BitVector> {
        self.check(v)?;
        let mut out = v.clone();
        self.reduce_in_place(&mut out);
        Ok(out)
    }

    pub fn in_span(&self, v: &BitVector) -> Result<bool> {
        Ok(self.reduce(v)?.is_zero())
    }

    /// Minimum-weight member of `v + span`, ties broken towards the
    /// lexicographically smallest vector. Walks all `2^rank` members in Gray
    /// code order.
    pub fn min_weight_coset_member(&self, v: &BitVector) -> Result<(usize, BitVector)> {
        self.check(v)?;
        let rank = self.rank();
        if rank > MAX_COSET_RANK {
            return Err(Error::RankLimit { rank, limit: MAX_COSET_RANK });
        }
        let mut current = v.clone();
        let mut best = current.clone();
        let mut best_weight = best.count_ones();
        for step in 1u64..(1u64 << rank) {
            current ^= &self.rows[step.trailing_zeros() as usize];
            let weight = current.count_ones();
            if weight < best_weight || (weight == best_weight && current < best) {
                best_weight = weight;
                best.clone_from(&current);
            }
        }
        Ok((best_weight, best))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    fn span_members(rows: &[BitVector], len: usize) -> Vec<BitVector> {
        (0u32..1 << rows.len())
            .map(|mask| {
                let mut acc = BitVector::zeros(len);
                for (i, r) in rows.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        acc ^= r;
                    }
                }
                acc
            })
            .collect()
    }

    #[test]
    fn trailing_bits_stay_clear() {
        let v = BitVector::ones(70);
        assert_eq!(v.count_ones(), 70);
        assert_eq!(v.words()[1], (1 << 6) - 1);
        assert_eq!(v.complement().count_ones(), 0);
        assert_eq!(BitVector::from_u64(3, 0xff).count_ones(), 3);
    }

    #[test]
    fn lexicographic_order_puts_position_zero_first() {
        let a = BitVector::from_indices(4, [1]);
        let b = BitVector::from_indices(4, [0]);
        let c = BitVector::from_indices(4, [1, 2, 3]);
        assert!(a < b);
        assert!(c < b);
        assert!(a < c);
        let wide_a = BitVector::from_indices(130, [100]);
        let wide_b = BitVector::from_indices(130, [64]);
        assert!(wide_a < wide_b);
    }

    #[test]
    fn ones_iterator_crosses_words() {
        let v = BitVector::from_indices(200, [0, 63, 64, 127, 199]);
        let got: Vec<_> = v.iter_ones().collect();
        assert_eq!(got, [0, 63, 64, 127, 199]);
        assert_eq!(v.first_one(), Some(0));
        assert_eq!(BitVector::zeros(10).iter_ones().next(), None);
    }

    #[test]
    fn insert_keeps_rref() {
        let gens = [
            BitVector::from_indices(6, [1, 2, 5]),
            BitVector::from_indices(6, [0, 1]),
            BitVector::from_indices(6, [0, 2, 5]),
            BitVector::from_indices(6, [3, 4]),
        ];
        let b = Gf2Basis::from_generators(6, gens.iter().cloned()).unwrap();
        assert_eq!(b.rank(), 3);
        assert_eq!(b.pivots(), &[0, 1, 3]);
        for (row, &p) in b.rows().iter().zip(b.pivots()) {
            assert_eq!(row.first_one(), Some(p));
            for &q in b.pivots() {
                assert_eq!(row.get(q), q == p);
            }
        }
        assert_eq!(b.free_coordinates(), [2, 4, 5]);
        for g in &gens {
            assert!(b.in_span(g).unwrap());
        }
    }

    #[test]
    fn reduce_rejects_wrong_length() {
        let b = Gf2Basis::empty(4);
        assert_eq!(b.reduce(&BitVector::zeros(5)), Err(Error::LengthMismatch { expected: 4, found: 5 }));
        assert!(b.min_weight_coset_member(&BitVector::zeros(3)).is_err());
    }

    #[test]
    fn rank_guard() {
        let gens = (0..21).map(|i| BitVector::from_indices(21, [i]));
        let b = Gf2Basis::from_generators(21, gens).unwrap();
        assert_eq!(
            b.min_weight_coset_member(&BitVector::zeros(21)),
            Err(Error::RankLimit { rank: 21, limit: MAX_COSET_RANK })
        );
    }

    #[test]
    fn min_weight_matches_exhaustion() {
        let gens = [
            BitVector::from_indices(7, [0, 1, 2]),
            BitVector::from_indices(7, [2, 3, 4]),
            BitVector::from_indices(7, [4, 5, 6, 0]),
        ];
        let b = Gf2Basis::from_generators(7, gens.iter().cloned()).unwrap();
        let members = span_members(&gens, 7);
        for pattern in 0u64..128 {
            let v = BitVector::from_u64(7, pattern);
            let expected = members
                .iter()
                .map(|s| s ^ &v)
                .min_by(|x, y| x.count_ones().cmp(&y.count_ones()).then(x.cmp(y)))
                .unwrap();
            let (w, witness) = b.min_weight_coset_member(&v).unwrap();
            assert_eq!(w, expected.count_ones());
            assert_eq!(witness, expected);
        }
    }

    #[test]
    fn distinct_reductions_count_cosets() {
        let gens = [BitVector::from_indices(5, [0, 1]), BitVector::from_indices(5, [1, 2, 3])];
        let b = Gf2Basis::from_generators(5, gens.iter().cloned()).unwrap();
        let images: BTreeSet<_> = (0u64..32).map(|p| b.reduce(&BitVector::from_u64(5, p)).unwrap()).collect();
        assert_eq!(images.len(), 1 << (5 - b.rank()));
    }
}
