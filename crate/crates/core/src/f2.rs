//! Dense bit-packed linear algebra over F2.
//!
//! Rows are stored in 64-bit words; elimination is word-parallel row XOR.
//! All target matrices are desk-scale (up to roughly 20,000 columns), so
//! plain Gaussian elimination is used throughout.

use crate::error::{Error, Result};
use std::fmt;

const WORD_BITS: usize = 64;

fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

/// A binary vector packed into 64-bit words. Padding bits are kept zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinVec {
    len: usize,
    words: Vec<u64>,
}

impl BinVec {
    pub fn zeros(len: usize) -> Self {
        BinVec {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = BinVec::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    pub fn from_support(len: usize, support: &[usize]) -> Self {
        let mut v = BinVec::zeros(len);
        for &i in support {
            v.set(i, true);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    pub fn xor_assign(&mut self, other: &BinVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    #[inline]
    pub fn xor_words(&mut self, words: &[u64]) {
        debug_assert_eq!(self.words.len(), words.len());
        for (a, b) in self.words.iter_mut().zip(words) {
            *a ^= b;
        }
    }

    pub fn weight(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Indices of the nonzero coordinates, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * WORD_BITS + b)
                }
            })
        })
    }

    /// Bitwise AND weight, i.e. the size of the support intersection.
    pub fn intersection_weight(&self, other: &BinVec) -> u64 {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as u64)
            .sum()
    }

    /// Concatenation `[self, other]`.
    pub fn concat(&self, other: &BinVec) -> BinVec {
        let mut out = BinVec::zeros(self.len + other.len);
        for i in self.ones() {
            out.set(i, true);
        }
        for i in other.ones() {
            out.set(self.len + i, true);
        }
        out
    }

    /// The slice `self[lo..hi]` as a new vector.
    pub fn slice(&self, lo: usize, hi: usize) -> BinVec {
        debug_assert!(lo <= hi && hi <= self.len);
        let mut out = BinVec::zeros(hi - lo);
        for i in 0..hi - lo {
            if self.get(lo + i) {
                out.set(i, true);
            }
        }
        out
    }
}

impl fmt::Debug for BinVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", self.get(i) as u8)?;
        }
        Ok(())
    }
}

/// A dense binary matrix, rows packed into 64-bit words.
#[derive(Clone, PartialEq, Eq)]
pub struct BinMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    words: Vec<u64>,
}

impl BinMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        BinMatrix {
            rows,
            cols,
            stride,
            words: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BinMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = BinMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// Build from 0/1 entries given row-major.
    pub fn from_dense(rows: &[&[u8]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        BinMatrix::from_fn(r, c, |i, j| rows[i][j] != 0)
    }

    /// Matrix with independent fair-coin entries.
    pub fn random(rng: &mut crate::rng::Rng, rows: usize, cols: usize) -> Self {
        BinMatrix::from_fn(rows, cols, |_, _| rng.coin())
    }

    pub fn from_rows(rows: Vec<BinVec>, cols: usize) -> Self {
        let mut m = BinMatrix::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            debug_assert_eq!(row.len(), cols);
            m.row_mut(i).copy_from_slice(row.words());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.rows && j < self.cols);
        self.words[i * self.stride + j / WORD_BITS] >> (j % WORD_BITS) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        debug_assert!(i < self.rows && j < self.cols);
        let mask = 1u64 << (j % WORD_BITS);
        let w = &mut self.words[i * self.stride + j / WORD_BITS];
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u64] {
        &self.words[i * self.stride..(i + 1) * self.stride]
    }

    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.words[i * self.stride..(i + 1) * self.stride]
    }

    pub fn row_vec(&self, i: usize) -> BinVec {
        BinVec {
            len: self.cols,
            words: self.row(i).to_vec(),
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let (a, b) = (a.min(b), a.max(b));
        let (top, bottom) = self.words.split_at_mut(b * self.stride);
        top[a * self.stride..(a + 1) * self.stride].swap_with_slice(&mut bottom[..self.stride]);
    }

    /// `row(dst) ^= row(src)`.
    pub fn xor_row_into(&mut self, src: usize, dst: usize) {
        debug_assert_ne!(src, dst);
        let (lo, hi) = (src.min(dst), src.max(dst));
        let (top, bottom) = self.words.split_at_mut(hi * self.stride);
        let lo_row = &top[lo * self.stride..(lo + 1) * self.stride];
        let hi_row = &mut bottom[..self.stride];
        if src < dst {
            for (d, s) in hi_row.iter_mut().zip(lo_row) {
                *d ^= s;
            }
        } else {
            // src is the hi row; xor it into the lo row via a temp-free loop
            let src_copy: Vec<u64> = hi_row.to_vec();
            let dst_row = &mut top[lo * self.stride..(lo + 1) * self.stride];
            for (d, s) in dst_row.iter_mut().zip(&src_copy) {
                *d ^= s;
            }
        }
    }

    pub fn row_weight(&self, i: usize) -> u64 {
        self.row(i).iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn col_weight(&self, j: usize) -> u64 {
        (0..self.rows).filter(|&i| self.get(i, j)).count() as u64
    }

    pub fn max_row_weight(&self) -> u64 {
        (0..self.rows).map(|i| self.row_weight(i)).max().unwrap_or(0)
    }

    pub fn max_col_weight(&self) -> u64 {
        (0..self.cols).map(|j| self.col_weight(j)).max().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn transpose(&self) -> BinMatrix {
        let mut t = BinMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in self.row_ones(i) {
                t.set(j, i, true);
            }
        }
        t
    }

    /// Indices of the ones in row `i`.
    pub fn row_ones(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.row(i);
        row.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * WORD_BITS + b)
                }
            })
        })
    }

    /// Matrix product over F2.
    pub fn mul(&self, other: &BinMatrix) -> BinMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = BinMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in self.row_ones(i) {
                let src = other.row(k).to_vec();
                let dst = out.row_mut(i);
                for (d, s) in dst.iter_mut().zip(&src) {
                    *d ^= s;
                }
            }
        }
        out
    }

    /// Matrix-vector product `Mv`.
    pub fn mul_vec(&self, v: &BinVec) -> BinVec {
        assert_eq!(self.cols, v.len());
        let mut out = BinVec::zeros(self.rows);
        for i in 0..self.rows {
            let mut acc = 0u64;
            for (a, b) in self.row(i).iter().zip(v.words()) {
                acc ^= a & b;
            }
            if acc.count_ones() & 1 == 1 {
                out.set(i, true);
            }
        }
        out
    }

    /// Kronecker product, outer index major and inner index minor.
    pub fn kron(&self, other: &BinMatrix) -> BinMatrix {
        let mut out = BinMatrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i1 in 0..self.rows {
            for j1 in self.row_ones(i1).collect::<Vec<_>>() {
                for i2 in 0..other.rows {
                    for j2 in other.row_ones(i2) {
                        out.set(i1 * other.rows + i2, j1 * other.cols + j2, true);
                    }
                }
            }
        }
        out
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &BinMatrix) -> BinMatrix {
        assert_eq!(self.rows, other.rows);
        let mut out = BinMatrix::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in self.row_ones(i) {
                out.set(i, j, true);
            }
            for j in other.row_ones(i) {
                out.set(i, self.cols + j, true);
            }
        }
        out
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &BinMatrix) -> BinMatrix {
        assert_eq!(self.cols, other.cols);
        let mut out = BinMatrix::zeros(self.rows + other.rows, self.cols);
        for i in 0..self.rows {
            out.row_mut(i).copy_from_slice(self.row(i));
        }
        for i in 0..other.rows {
            out.row_mut(self.rows + i).copy_from_slice(other.row(i));
        }
        out
    }

    /// Copy `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn paste(&mut self, r0: usize, c0: usize, block: &BinMatrix) {
        debug_assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for i in 0..block.rows {
            for j in block.row_ones(i) {
                self.set(r0 + i, c0 + j, true);
            }
        }
    }

    /// Row rank over F2. The input is left unmodified.
    pub fn rank(&self) -> usize {
        let mut work = self.clone();
        echelonize(&mut work, false).len()
    }

    /// A matrix whose rows form a basis of `{v : Mv = 0}`.
    ///
    /// The row count always equals `cols - rank`.
    pub fn kernel_basis(&self) -> BinMatrix {
        let mut work = self.clone();
        let pivots = echelonize(&mut work, true);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&j| !is_pivot[j]).collect();
        let mut basis = BinMatrix::zeros(free.len(), self.cols);
        for (bi, &f) in free.iter().enumerate() {
            basis.set(bi, f, true);
            for (ri, &p) in pivots.iter().enumerate() {
                if work.get(ri, f) {
                    basis.set(bi, p, true);
                }
            }
        }
        basis
    }

    /// Is `v` an F2 linear combination of the rows of `self`?
    pub fn in_row_space(&self, v: &BinVec) -> Result<bool> {
        if v.len() != self.cols {
            return Err(Error::Dimension {
                context: "row-space membership",
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok(Echelon::new(self).contains(v))
    }
}

impl fmt::Debug for BinMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                write!(f, "{}", self.get(i, j) as u8)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Reduce to row echelon form in place; returns the pivot columns.
/// With `reduced` set, clears above the pivots as well (RREF).
fn echelonize(m: &mut BinMatrix, reduced: bool) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(pivot_row) = (r..m.rows).find(|&i| m.get(i, col)) else {
            continue;
        };
        m.swap_rows(r, pivot_row);
        for i in (r + 1)..m.rows {
            if m.get(i, col) {
                m.xor_row_into(r, i);
            }
        }
        if reduced {
            for i in 0..r {
                if m.get(i, col) {
                    m.xor_row_into(r, i);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

/// A reduced row echelon form kept around for repeated row-space queries.
#[derive(Clone)]
pub struct Echelon {
    mat: BinMatrix,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(m: &BinMatrix) -> Self {
        let mut work = m.clone();
        let pivots = echelonize(&mut work, true);
        Echelon { mat: work, pivots }
    }

    /// Echelon form with no rows, representing the zero space.
    pub fn empty(cols: usize) -> Self {
        Echelon {
            mat: BinMatrix::zeros(0, cols),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// The nonzero echelon rows (a row basis of the original matrix).
    pub fn basis_rows(&self) -> Vec<BinVec> {
        (0..self.rank()).map(|i| self.mat.row_vec(i)).collect()
    }

    /// Reduce `v` against the echelon rows in place.
    pub fn reduce(&self, v: &mut BinVec) {
        for (i, &p) in self.pivots.iter().enumerate() {
            if v.get(p) {
                v.xor_words(self.mat.row(i));
            }
        }
    }

    pub fn contains(&self, v: &BinVec) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        w.is_zero()
    }
}
