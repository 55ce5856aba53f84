//! Exact linear algebra over the two-element field.
//!
//! Vectors and matrix rows are packed 64 bits per word and eliminated with
//! word-level XOR. Echelon forms use the declared basis order, lowest index
//! first, so every canonical representative is reproducible.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum F2Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("boundary space is not contained in the cycle space (witness boundary #{index})")]
    NotContained { index: usize },
    #[error("vector is not in the span of the cycle space")]
    NotACycle,
}

/// A vector over GF(2) indexed by a basis of fixed dimension.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2Vec {
    len: usize,
    words: Vec<u64>,
}

impl F2Vec {
    pub fn zeros(len: usize) -> Self {
        Self { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    pub fn from_indices(len: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in ones {
            v.flip(i);
        }
        v
    }

    /// Low `len` bits of a machine word (`len <= 64`).
    pub fn from_word(len: usize, word: u64) -> Self {
        assert!(len <= 64);
        let mut v = Self::zeros(len);
        if len > 0 {
            v.words[0] = if len == 64 { word } else { word & ((1u64 << len) - 1) };
        }
        v
    }

    /// First word of the vector; only meaningful when `len <= 64`.
    pub fn to_word(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn xor_assign(&mut self, other: &F2Vec) {
        assert_eq!(self.len, other.len, "vector length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &F2Vec) -> F2Vec {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    pub fn dot(&self, other: &F2Vec) -> bool {
        assert_eq!(self.len, other.len, "vector length mismatch");
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    /// Index of the lowest set bit.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(k * 64 + t)
                }
            })
        })
    }
}

impl fmt::Debug for F2Vec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect();
        write!(f, "F2Vec({s})")
    }
}

/// Dense row-major matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<F2Vec>,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![F2Vec::zeros(cols); rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<F2Vec>) -> Result<Self, F2Error> {
        for r in &rows {
            if r.len() != cols {
                return Err(F2Error::DimensionMismatch { expected: cols, found: r.len() });
            }
        }
        Ok(Self { rows: rows.len(), cols, data: rows })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[F2Vec]) -> Result<Self, F2Error> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(F2Error::DimensionMismatch { expected: rows, found: c.len() });
            }
            for i in c.ones() {
                m.set(i, j, true);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &F2Vec {
        &self.data[i]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.data[i].set(j, value);
    }

    pub fn column(&self, j: usize) -> F2Vec {
        F2Vec::from_bits(&(0..self.rows).map(|i| self.get(i, j)).collect::<Vec<_>>())
    }

    pub fn transpose(&self) -> F2Matrix {
        let mut t = F2Matrix::zeros(self.cols, self.rows);
        for (i, r) in self.data.iter().enumerate() {
            for j in r.ones() {
                t.set(j, i, true);
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &F2Vec) -> Result<F2Vec, F2Error> {
        if v.len() != self.cols {
            return Err(F2Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok(F2Vec::from_bits(&self.data.iter().map(|r| r.dot(v)).collect::<Vec<_>>()))
    }

    pub fn mul(&self, other: &F2Matrix) -> Result<F2Matrix, F2Error> {
        if self.cols != other.rows {
            return Err(F2Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = F2Matrix::zeros(self.rows, other.cols);
        for (i, r) in self.data.iter().enumerate() {
            for k in r.ones() {
                out.data[i].xor_assign(&other.data[k]);
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F2Vec::is_zero)
    }

    pub fn rank(&self) -> usize {
        Echelon::new(self.data.clone()).rank()
    }

    /// Solves `self * x = b`.
    pub fn solve(&self, b: &F2Vec) -> Result<AffineSolutionSet, F2Error> {
        if b.len() != self.rows {
            return Err(F2Error::DimensionMismatch { expected: self.rows, found: b.len() });
        }
        // Eliminate on the augmented rows [A | b].
        let n = self.cols;
        let aug: Vec<F2Vec> = self
            .data
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut v = F2Vec::zeros(n + 1);
                for j in r.ones() {
                    v.set(j, true);
                }
                if b.get(i) {
                    v.set(n, true);
                }
                v
            })
            .collect();
        let ech = Echelon::new(aug);
        let mut particular = Some(F2Vec::zeros(n));
        let mut pivot_of_col = vec![None; n];
        for (r, &p) in ech.pivots.iter().enumerate() {
            if p == n {
                particular = None;
            } else {
                pivot_of_col[p] = Some(r);
            }
        }
        if let Some(x) = particular.as_mut() {
            for (r, &p) in ech.pivots.iter().enumerate() {
                if ech.rows[r].get(n) {
                    x.set(p, true);
                }
            }
        }
        let mut kernel_basis = Vec::new();
        for free in 0..n {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut k = F2Vec::unit(n, free);
            for (r, &p) in ech.pivots.iter().enumerate() {
                if p < n && ech.rows[r].get(free) {
                    k.set(p, true);
                }
            }
            kernel_basis.push(k);
        }
        Ok(AffineSolutionSet { particular, kernel_basis })
    }

    pub fn kernel(&self) -> Vec<F2Vec> {
        self.solve(&F2Vec::zeros(self.rows))
            .map(|s| s.kernel_basis)
            .unwrap_or_default()
    }
}

/// Fully reduced row echelon form; `pivots[r]` is the pivot column of row `r`.
#[derive(Clone, Debug)]
pub struct Echelon {
    rows: Vec<F2Vec>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(mut input: Vec<F2Vec>) -> Self {
        let mut rows: Vec<F2Vec> = Vec::new();
        let mut pivots: Vec<usize> = Vec::new();
        for mut v in input.drain(..) {
            for (r, &p) in rows.iter().zip(&pivots) {
                if v.get(p) {
                    v.xor_assign(r);
                }
            }
            if let Some(p) = v.first_one() {
                for r in rows.iter_mut() {
                    if r.get(p) {
                        r.xor_assign(&v);
                    }
                }
                let at = pivots.partition_point(|&q| q < p);
                pivots.insert(at, p);
                rows.insert(at, v);
            }
        }
        Self { rows, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[F2Vec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against every pivot; the result is zero iff `v` is in the span.
    pub fn reduce(&self, v: &F2Vec) -> F2Vec {
        let mut v = v.clone();
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_assign(r);
            }
        }
        v
    }

    pub fn contains(&self, v: &F2Vec) -> bool {
        self.reduce(v).is_zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolutionSet {
    pub particular: Option<F2Vec>,
    pub kernel_basis: Vec<F2Vec>,
}

impl AffineSolutionSet {
    pub fn is_solvable(&self) -> bool {
        self.particular.is_some()
    }
}

/// Quotient of a cycle space by a boundary subspace.
#[derive(Clone, Debug)]
pub struct QuotientSpace {
    ambient_dim: usize,
    boundaries: Echelon,
    transversal: Echelon,
    cycle_rank: usize,
}

impl QuotientSpace {
    pub fn new(ambient_dim: usize, cycles: &[F2Vec], boundaries: &[F2Vec]) -> Result<Self, F2Error> {
        for v in cycles.iter().chain(boundaries) {
            if v.len() != ambient_dim {
                return Err(F2Error::DimensionMismatch { expected: ambient_dim, found: v.len() });
            }
        }
        let cyc = Echelon::new(cycles.to_vec());
        for (index, b) in boundaries.iter().enumerate() {
            if !cyc.contains(b) {
                return Err(F2Error::NotContained { index });
            }
        }
        let bnd = Echelon::new(boundaries.to_vec());
        let reduced: Vec<F2Vec> = cyc.rows().iter().map(|c| bnd.reduce(c)).collect();
        let transversal = Echelon::new(reduced);
        Ok(Self { ambient_dim, boundaries: bnd, transversal, cycle_rank: cyc.rank() })
    }

    pub fn dimension(&self) -> usize {
        self.transversal.rank()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn cycle_rank(&self) -> usize {
        self.cycle_rank
    }

    pub fn boundary_rank(&self) -> usize {
        self.boundaries.rank()
    }

    pub fn boundary_basis(&self) -> &[F2Vec] {
        self.boundaries.rows()
    }

    /// Reduced-echelon representatives of a basis of the quotient.
    pub fn transversal(&self) -> &[F2Vec] {
        self.transversal.rows()
    }

    /// Canonical coset representative of `v` modulo boundaries.
    pub fn reduce(&self, v: &F2Vec) -> F2Vec {
        self.boundaries.reduce(v)
    }

    pub fn is_boundary(&self, v: &F2Vec) -> bool {
        self.boundaries.contains(v)
    }

    /// Coordinates of the class of a cycle in the transversal basis.
    pub fn coordinates(&self, v: &F2Vec) -> Result<F2Vec, F2Error> {
        if v.len() != self.ambient_dim {
            return Err(F2Error::DimensionMismatch { expected: self.ambient_dim, found: v.len() });
        }
        let mut r = self.boundaries.reduce(v);
        let mut coords = F2Vec::zeros(self.dimension());
        for (i, (row, &p)) in self.transversal.rows.iter().zip(&self.transversal.pivots).enumerate() {
            if r.get(p) {
                r.xor_assign(row);
                coords.set(i, true);
            }
        }
        if r.is_zero() {
            Ok(coords)
        } else {
            Err(F2Error::NotACycle)
        }
    }

    pub fn representative(&self, coords: &F2Vec) -> F2Vec {
        let mut v = F2Vec::zeros(self.ambient_dim);
        for i in coords.ones() {
            v.xor_assign(&self.transversal.rows[i]);
        }
        v
    }
}

/// Enumerates `base + span(directions)` in Gray-code order, so consecutive
/// outputs differ by a single direction vector.
pub struct GrayAffine<'a> {
    current: F2Vec,
    directions: &'a [F2Vec],
    step: u64,
    total: u64,
}

impl<'a> GrayAffine<'a> {
    pub fn new(base: F2Vec, directions: &'a [F2Vec]) -> Self {
        assert!(directions.len() < 64, "affine space too large to enumerate");
        Self { current: base, directions, step: 0, total: 1u64 << directions.len() }
    }
}

impl Iterator for GrayAffine<'_> {
    type Item = F2Vec;

    fn next(&mut self) -> Option<F2Vec> {
        if self.step >= self.total {
            return None;
        }
        if self.step > 0 {
            let flip = self.step.trailing_zeros() as usize;
            self.current.xor_assign(&self.directions[flip]);
        }
        self.step += 1;
        Some(self.current.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[u8]]) -> F2Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        F2Matrix::from_rows(
            cols,
            rows.iter()
                .map(|r| F2Vec::from_bits(&r.iter().map(|&b| b == 1).collect::<Vec<_>>()))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(F2Matrix::identity(3).rank(), 3);
        assert_eq!(F2Matrix::zeros(4, 2).rank(), 0);
        assert_eq!(m(&[&[1, 1], &[1, 1]]).rank(), 1);
    }

    #[test]
    fn solve_examples() {
        let b = F2Vec::from_bits(&[true, false, true]);
        let s = F2Matrix::identity(3).solve(&b).unwrap();
        assert_eq!(s.particular, Some(b));
        assert!(s.kernel_basis.is_empty());

        let s = F2Matrix::zeros(2, 2).solve(&F2Vec::zeros(2)).unwrap();
        assert_eq!(s.particular, Some(F2Vec::zeros(2)));
        assert_eq!(s.kernel_basis.len(), 2);

        // [[1,1]] x = [1]: enumerating all four x gives {(1,0),(0,1)}.
        let s = m(&[&[1, 1]]).solve(&F2Vec::from_bits(&[true])).unwrap();
        assert_eq!(s.particular, Some(F2Vec::from_bits(&[true, false])));
        assert_eq!(s.kernel_basis, vec![F2Vec::from_bits(&[true, true])]);
    }

    #[test]
    fn solve_rejects_bad_lengths() {
        assert!(matches!(
            F2Matrix::identity(2).solve(&F2Vec::zeros(3)),
            Err(F2Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn inconsistent_system_has_no_particular() {
        let s = m(&[&[1, 0], &[1, 0]]).solve(&F2Vec::from_bits(&[true, false])).unwrap();
        assert!(s.particular.is_none());
        assert_eq!(s.kernel_basis, vec![F2Vec::from_bits(&[false, true])]);
    }

    #[test]
    fn quotient_examples() {
        let c = vec![F2Vec::from_bits(&[true, true, false])];
        assert_eq!(QuotientSpace::new(3, &c, &c).unwrap().dimension(), 0);
        let all: Vec<F2Vec> = (0..3).map(|i| F2Vec::unit(3, i)).collect();
        assert_eq!(QuotientSpace::new(3, &all, &[]).unwrap().dimension(), 3);
        assert_eq!(QuotientSpace::new(3, &all, &c).unwrap().dimension(), 2);
    }

    #[test]
    fn quotient_rejects_non_containment() {
        let c = vec![F2Vec::unit(2, 0)];
        let b = vec![F2Vec::unit(2, 1)];
        assert_eq!(QuotientSpace::new(2, &c, &b).unwrap_err(), F2Error::NotContained { index: 0 });
    }

    #[test]
    fn coordinates_round_trip() {
        let all: Vec<F2Vec> = (0..4).map(|i| F2Vec::unit(4, i)).collect();
        let b = vec![F2Vec::from_bits(&[true, true, false, false])];
        let q = QuotientSpace::new(4, &all, &b).unwrap();
        for bits in 0..8u64 {
            let coords = F2Vec::from_word(3, bits);
            let rep = q.representative(&coords);
            assert_eq!(q.coordinates(&rep).unwrap(), coords);
            assert_eq!(q.coordinates(&rep.xor(&b[0])).unwrap(), coords);
        }
    }

    #[test]
    fn gray_enumeration_covers_affine_space() {
        let dirs = vec![F2Vec::unit(3, 0), F2Vec::unit(3, 2)];
        let got: Vec<_> = GrayAffine::new(F2Vec::unit(3, 1), &dirs).collect();
        assert_eq!(got.len(), 4);
        let mut sorted = got.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 4);
        assert!(got.iter().all(|v| v.get(1)));
    }

    #[test]
    fn ones_iterates_across_words() {
        let v = F2Vec::from_indices(130, [0, 63, 64, 129]);
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![0, 63, 64, 129]);
        assert_eq!(v.first_one(), Some(0));
    }
}
