//! Chain complexes over F2 and over group algebras: tensor products,
//! block-lifting, CSS extraction, homology dimensions, and the
//! distance-balancing construction.
//!
//! Complexes are graded `C_n -> ... -> C_1 -> C_0` with `d^2 = 0` checked
//! eagerly by every constructor. In tensor products the direct summands
//! `C_i (x) D_{k-i}` of grade `k` are concatenated by *descending* `i`,
//! which makes the extracted CSS code of a product of two 1-dimensional
//! complexes coincide bit-for-bit with the hypergraph / lifted product
//! block layouts.

use crate::css::CssCode;
use crate::error::{Error, Result};
use crate::f2::BinMatrix;
use crate::group::{AlgMatrix, GroupSpec};
use serde::Serialize;

/// A chain complex over F2. `boundaries[i]` is the matrix of `d_{i+1}`,
/// mapping grade `i+1` to grade `i`; `cells[i]` counts the `i`-cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComplex {
    cells: Vec<usize>,
    boundaries: Vec<BinMatrix>,
}

impl ChainComplex {
    /// Build from explicit cell counts and boundary maps, verifying the
    /// shape chain and `d_i d_{i+1} = 0`.
    pub fn new(cells: Vec<usize>, boundaries: Vec<BinMatrix>) -> Result<Self> {
        if cells.len() != boundaries.len() + 1 {
            return Err(Error::Invalid {
                what: "chain complex",
                why: format!(
                    "{} cell grades cannot carry {} boundary maps",
                    cells.len(),
                    boundaries.len()
                ),
            });
        }
        for (i, b) in boundaries.iter().enumerate() {
            if b.rows() != cells[i] || b.cols() != cells[i + 1] {
                return Err(Error::Invalid {
                    what: "chain complex",
                    why: format!("boundary {} has shape {}x{}", i + 1, b.rows(), b.cols()),
                });
            }
        }
        for i in 0..boundaries.len().saturating_sub(1) {
            if !boundaries[i].mul(&boundaries[i + 1]).is_zero() {
                return Err(Error::Invalid {
                    what: "chain complex",
                    why: format!("d_{} d_{} != 0", i + 1, i + 2),
                });
            }
        }
        Ok(ChainComplex { cells, boundaries })
    }

    /// The 1-dimensional complex of a parity-check matrix: `d_1 = H`.
    pub fn from_matrix(h: &BinMatrix) -> Self {
        ChainComplex {
            cells: vec![h.rows(), h.cols()],
            boundaries: vec![h.clone()],
        }
    }

    /// A complex concentrated in grade 0 with `c0` cells and no maps.
    pub fn point(c0: usize) -> Self {
        ChainComplex {
            cells: vec![c0],
            boundaries: Vec::new(),
        }
    }

    /// The 2-dimensional complex of a CSS code: `d_2 = HZ^T`, `d_1 = HX`.
    pub fn from_css(code: &CssCode) -> Self {
        ChainComplex {
            cells: vec![code.hx().rows(), code.len(), code.hz().rows()],
            boundaries: vec![code.hx().clone(), code.hz().transpose()],
        }
    }

    /// Number of boundary maps (the top grade).
    pub fn dimension(&self) -> usize {
        self.boundaries.len()
    }

    pub fn cells(&self, grade: usize) -> usize {
        self.cells[grade]
    }

    /// The matrix of `d_q` (1-indexed grade).
    pub fn boundary(&self, q: usize) -> &BinMatrix {
        &self.boundaries[q - 1]
    }

    /// Tensor product of complexes over F2, summands in descending
    /// left-grade order, boundary `d = d_C (x) id + id (x) d_D`.
    pub fn tensor(&self, other: &ChainComplex) -> ChainComplex {
        let nc = self.dimension();
        let nd = other.dimension();
        let n = nc + nd;
        // grade k summands (i, k-i), descending i
        let summands = |k: usize| -> Vec<(usize, usize)> {
            (0..=k.min(nc))
                .rev()
                .filter(|&i| k - i <= nd)
                .map(|i| (i, k - i))
                .collect()
        };
        let grade_cells = |blocks: &[(usize, usize)]| -> usize {
            blocks.iter().map(|&(i, j)| self.cells[i] * other.cells[j]).sum()
        };
        let mut cells = Vec::with_capacity(n + 1);
        let mut boundaries = Vec::with_capacity(n);
        for k in 0..=n {
            cells.push(grade_cells(&summands(k)));
        }
        for k in 1..=n {
            let rows_blocks = summands(k - 1);
            let cols_blocks = summands(k);
            let row_offset = |target: (usize, usize)| -> Option<usize> {
                let mut off = 0;
                for &(i, j) in &rows_blocks {
                    if (i, j) == target {
                        return Some(off);
                    }
                    off += self.cells[i] * other.cells[j];
                }
                None
            };
            let mut m = BinMatrix::zeros(cells[k - 1], cells[k]);
            let mut col_off = 0;
            for &(i, j) in &cols_blocks {
                let block_cols = self.cells[i] * other.cells[j];
                if i > 0 {
                    if let Some(row_off) = row_offset((i - 1, j)) {
                        let block = self.boundaries[i - 1].kron(&BinMatrix::identity(other.cells[j]));
                        m.paste(row_off, col_off, &block);
                    }
                }
                if j > 0 {
                    if let Some(row_off) = row_offset((i, j - 1)) {
                        let block = BinMatrix::identity(self.cells[i]).kron(&other.boundaries[j - 1]);
                        m.paste(row_off, col_off, &block);
                    }
                }
                col_off += block_cols;
            }
            boundaries.push(m);
        }
        ChainComplex::new(cells, boundaries).expect("tensor of complexes satisfies d^2 = 0")
    }

    /// Extract the CSS code at grade `q`: qubits are the `q`-cells,
    /// `HX = d_q`, `HZ = d_{q+1}^T`.
    pub fn css_at(&self, q: usize) -> Result<CssCode> {
        if q < 1 || q >= self.dimension() {
            return Err(Error::GradeOutOfRange {
                grade: q,
                max: self.dimension().saturating_sub(1),
            });
        }
        CssCode::new(self.boundary(q).clone(), self.boundary(q + 1).transpose())
    }

    /// `dim ker d_q - rk d_{q+1}`, with the boundary maps beyond the ends
    /// treated as zero.
    pub fn homology_dim(&self, q: usize) -> usize {
        let ker = if q == 0 {
            self.cells[0]
        } else if q <= self.dimension() {
            self.cells[q] - self.boundary(q).rank()
        } else {
            0
        };
        let im = if q + 1 <= self.dimension() {
            self.boundary(q + 1).rank()
        } else {
            0
        };
        ker - im
    }
}

/// A chain complex of free modules over a group algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingChainComplex {
    group: GroupSpec,
    cells: Vec<usize>,
    boundaries: Vec<AlgMatrix>,
}

impl RingChainComplex {
    pub fn new(group: GroupSpec, cells: Vec<usize>, boundaries: Vec<AlgMatrix>) -> Result<Self> {
        if cells.len() != boundaries.len() + 1 {
            return Err(Error::Invalid {
                what: "ring chain complex",
                why: "cell grades and boundary maps disagree".into(),
            });
        }
        for (i, b) in boundaries.iter().enumerate() {
            if b.group() != &group {
                return Err(Error::GroupMismatch);
            }
            if b.rows() != cells[i] || b.cols() != cells[i + 1] {
                return Err(Error::Invalid {
                    what: "ring chain complex",
                    why: format!("boundary {} has shape {}x{}", i + 1, b.rows(), b.cols()),
                });
            }
        }
        for i in 0..boundaries.len().saturating_sub(1) {
            let prod = boundaries[i].mul(&boundaries[i + 1])?;
            let zero = prod
                .weight_matrix()
                .max_line_sum();
            if zero != 0 {
                return Err(Error::Invalid {
                    what: "ring chain complex",
                    why: format!("d_{} d_{} != 0", i + 1, i + 2),
                });
            }
        }
        Ok(RingChainComplex {
            group,
            cells,
            boundaries,
        })
    }

    pub fn from_matrix(a: &AlgMatrix) -> Self {
        RingChainComplex {
            group: a.group().clone(),
            cells: vec![a.rows(), a.cols()],
            boundaries: vec![a.clone()],
        }
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn dimension(&self) -> usize {
        self.boundaries.len()
    }

    pub fn cells(&self, grade: usize) -> usize {
        self.cells[grade]
    }

    pub fn boundary(&self, q: usize) -> &AlgMatrix {
        &self.boundaries[q - 1]
    }

    /// Tensor product over the ring, same grading conventions as the
    /// binary [`ChainComplex::tensor`].
    pub fn tensor(&self, other: &RingChainComplex) -> Result<RingChainComplex> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        let g = self.group.clone();
        let nc = self.dimension();
        let nd = other.dimension();
        let n = nc + nd;
        let summands = |k: usize| -> Vec<(usize, usize)> {
            (0..=k.min(nc))
                .rev()
                .filter(|&i| k - i <= nd)
                .map(|i| (i, k - i))
                .collect()
        };
        let mut cells = Vec::with_capacity(n + 1);
        for k in 0..=n {
            cells.push(
                summands(k)
                    .iter()
                    .map(|&(i, j)| self.cells[i] * other.cells[j])
                    .sum(),
            );
        }
        let mut boundaries = Vec::with_capacity(n);
        for k in 1..=n {
            let rows_blocks = summands(k - 1);
            let cols_blocks = summands(k);
            let row_offset = |target: (usize, usize)| -> Option<usize> {
                let mut off = 0;
                for &(i, j) in &rows_blocks {
                    if (i, j) == target {
                        return Some(off);
                    }
                    off += self.cells[i] * other.cells[j];
                }
                None
            };
            let mut m = AlgMatrix::zeros(g.clone(), cells[k - 1], cells[k]);
            let mut col_off = 0;
            for &(i, j) in &cols_blocks {
                let block_cols = self.cells[i] * other.cells[j];
                if i > 0 {
                    if let Some(row_off) = row_offset((i - 1, j)) {
                        let block = self.boundaries[i - 1]
                            .kron(&AlgMatrix::identity(g.clone(), other.cells[j]))?;
                        paste_alg(&mut m, row_off, col_off, &block);
                    }
                }
                if j > 0 {
                    if let Some(row_off) = row_offset((i, j - 1)) {
                        let block = AlgMatrix::identity(g.clone(), self.cells[i])
                            .kron(&other.boundaries[j - 1])?;
                        paste_alg(&mut m, row_off, col_off, &block);
                    }
                }
                col_off += block_cols;
            }
            boundaries.push(m);
        }
        RingChainComplex::new(g, cells, boundaries)
    }

    /// Expand every boundary map to its binary block matrix.
    pub fn lift(&self) -> ChainComplex {
        let l = self.group.order();
        let cells = self.cells.iter().map(|c| c * l).collect();
        let boundaries = self.boundaries.iter().map(|b| b.block_lift()).collect();
        ChainComplex::new(cells, boundaries).expect("lift preserves d^2 = 0")
    }
}

fn paste_alg(dst: &mut AlgMatrix, r0: usize, c0: usize, block: &AlgMatrix) {
    for i in 0..block.rows() {
        for j in 0..block.cols() {
            let e = block.entry(i, j);
            if !e.is_zero() {
                dst.set_entry(r0 + i, c0 + j, e.clone());
            }
        }
    }
}

/// Tensor two ring complexes and lift the result to a binary complex.
pub fn lifted_tensor(a: &RingChainComplex, b: &RingChainComplex) -> Result<ChainComplex> {
    Ok(a.tensor(b)?.lift())
}

/// Parameter bounds for distance balancing of an `[[N, K, dZ, dX]]` code
/// with an `[n, k, d]` classical code: one balancing step multiplies the
/// Z-distance bound by `d`, a second step (on the swapped code) does the
/// same for X.
#[derive(Debug, Clone, Serialize)]
pub struct BalanceBounds {
    pub single_len_max: u64,
    pub single_k: u64,
    pub single_dz_min: u64,
    pub single_dx_min: u64,
    pub double_len_max: u64,
    pub double_k: u64,
    pub double_dz_min: u64,
    pub double_dx_min: u64,
}

/// `N' <= 2nN, K' = kK, dZ' >= d dZ, dX' >= dX` for one step and
/// `N'' <= 4n^2 N, K'' = k^2 K, dZ'' >= d dZ, dX'' >= d dX` for two.
pub fn balance_params(
    (n_len, k_dim, dz, dx): (u64, u64, u64, u64),
    (cn, ck, cd): (u64, u64, u64),
) -> BalanceBounds {
    BalanceBounds {
        single_len_max: 2 * cn * n_len,
        single_k: ck * k_dim,
        single_dz_min: cd * dz,
        single_dx_min: dx,
        double_len_max: 4 * cn * cn * n_len,
        double_k: ck * ck * k_dim,
        double_dz_min: cd * dz,
        double_dx_min: cd * dx,
    }
}

/// Distance balancing: tensor the code's 2-dimensional complex with the
/// 1-dimensional complex of a classical check matrix and extract the CSS
/// code at grade `q` of the 3-dimensional result.
///
/// With a full-row-rank `h_c` of an `[n, k, d]` code, grade 2 carries
/// dimension `k * K` and a Z-distance at least `d * dZ`.
pub fn balance_construct(code: &CssCode, h_c: &BinMatrix, q: usize) -> Result<CssCode> {
    let product = ChainComplex::from_css(code).tensor(&ChainComplex::from_matrix(h_c));
    product.css_at(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::{exact_distance, Side};
    use crate::group::AlgElem;
    use crate::products::{hp, lp};
    use crate::rng::Rng;

    fn toric_code() -> CssCode {
        let g = GroupSpec::cyclic(3);
        let c = AlgElem::from_support(g, &[0, 1]).block_lift();
        hp(&c, &c).unwrap()
    }

    #[test]
    fn one_dimensional_complex_shape() {
        let h = BinMatrix::from_dense(&[&[1, 1]]);
        let c = ChainComplex::from_matrix(&h);
        assert_eq!(c.dimension(), 1);
        assert_eq!((c.cells(0), c.cells(1)), (1, 2));
        assert_eq!(c.homology_dim(1), 1);
    }

    #[test]
    fn tensor_of_repetition_checks_gives_4_0_code() {
        let h = BinMatrix::from_dense(&[&[1, 1]]);
        let c = ChainComplex::from_matrix(&h);
        let product = c.tensor(&c);
        let code = product.css_at(1).unwrap();
        assert_eq!((code.len(), code.dimension()), (4, 0));
    }

    #[test]
    fn tensor_matches_hp_bit_for_bit() {
        let mut rng = Rng::new(5);
        for _ in 0..20 {
            let (ra, ca) = (1 + rng.below(3) as usize, 1 + rng.below(4) as usize);
            let (rb, cb) = (1 + rng.below(3) as usize, 1 + rng.below(4) as usize);
            let a = BinMatrix::random(&mut rng, ra, ca);
            let b = BinMatrix::random(&mut rng, rb, cb);
            let product = ChainComplex::from_matrix(&a).tensor(&ChainComplex::from_matrix(&b));
            let from_complex = product.css_at(1).unwrap();
            let direct = hp(&a, &b).unwrap();
            assert_eq!(from_complex.hx(), direct.hx());
            assert_eq!(from_complex.hz(), direct.hz());
        }
    }

    #[test]
    fn lifted_tensor_matches_lp_bit_for_bit() {
        let mut rng = Rng::new(6);
        for _ in 0..20 {
            let l = 1 + rng.below(6) as usize;
            let g = GroupSpec::cyclic(l);
            let (ra, ca) = (1 + rng.below(2) as usize, 1 + rng.below(3) as usize);
            let (rb, cb) = (1 + rng.below(2) as usize, 1 + rng.below(3) as usize);
            let a = AlgMatrix::random(&mut rng, g.clone(), ra, ca);
            let b = AlgMatrix::random(&mut rng, g.clone(), rb, cb);
            let product = lifted_tensor(
                &RingChainComplex::from_matrix(&a),
                &RingChainComplex::from_matrix(&b),
            )
            .unwrap();
            let from_complex = product.css_at(1).unwrap();
            let direct = lp(&a, &b).unwrap();
            assert_eq!(from_complex.hx(), direct.hx());
            assert_eq!(from_complex.hz(), direct.hz());
        }
    }

    #[test]
    fn lifted_tensor_with_trivial_group_is_plain_tensor() {
        let mut rng = Rng::new(8);
        let g = GroupSpec::cyclic(1);
        let a = AlgMatrix::random(&mut rng, g.clone(), 2, 3);
        let b = AlgMatrix::random(&mut rng, g.clone(), 1, 2);
        let lifted = lifted_tensor(
            &RingChainComplex::from_matrix(&a),
            &RingChainComplex::from_matrix(&b),
        )
        .unwrap();
        let plain = ChainComplex::from_matrix(&a.block_lift())
            .tensor(&ChainComplex::from_matrix(&b.block_lift()));
        assert_eq!(lifted, plain);
    }

    #[test]
    fn tensor_with_point_is_isomorphic_copy() {
        let h = BinMatrix::from_dense(&[&[1, 1, 0], &[0, 1, 1]]);
        let c = ChainComplex::from_matrix(&h);
        let p = ChainComplex::point(1);
        let t = c.tensor(&p);
        assert_eq!(t, c);
    }

    #[test]
    fn toric_complex_homology() {
        let code = toric_code();
        let c = ChainComplex::from_css(&code);
        assert_eq!(c.homology_dim(1), 2);
        // the extracted code at grade 1 is the original
        let back = c.css_at(1).unwrap();
        assert_eq!(back.hx(), code.hx());
        assert_eq!(back.hz(), code.hz());
    }

    #[test]
    fn homology_of_tensor_is_gradewise_convolution() {
        let mut rng = Rng::new(13);
        for _ in 0..50 {
            let (ra, ca) = (1 + rng.below(3) as usize, 1 + rng.below(4) as usize);
            let (rb, cb) = (1 + rng.below(3) as usize, 1 + rng.below(4) as usize);
            let a = ChainComplex::from_matrix(&BinMatrix::random(&mut rng, ra, ca));
            let b = ChainComplex::from_matrix(&BinMatrix::random(&mut rng, rb, cb));
            let t = a.tensor(&b);
            for k in 0..=t.dimension() {
                let expected: usize = (0..=k)
                    .map(|i| {
                        let j = k - i;
                        let ha = if i <= a.dimension() { a.homology_dim(i) } else { 0 };
                        let hb = if j <= b.dimension() { b.homology_dim(j) } else { 0 };
                        ha * hb
                    })
                    .sum();
                assert_eq!(t.homology_dim(k), expected, "grade {}", k);
            }
        }
    }

    #[test]
    fn three_dimensional_extraction_gives_two_valid_codes() {
        let code = toric_code();
        let rep = BinMatrix::from_dense(&[&[1, 1, 0], &[0, 1, 1]]);
        let product = ChainComplex::from_css(&code).tensor(&ChainComplex::from_matrix(&rep));
        assert_eq!(product.dimension(), 3);
        let q1 = product.css_at(1).unwrap();
        let q2 = product.css_at(2).unwrap();
        assert_ne!(q1.len(), 0);
        assert_ne!(q2.len(), 0);
        assert!(product.css_at(0).is_err());
        assert!(product.css_at(3).is_err());
    }

    #[test]
    fn balance_params_examples() {
        let b = balance_params((100, 2, 10, 10), (3, 1, 3));
        assert_eq!(b.double_len_max, 3600);
        assert_eq!(b.double_k, 2);
        assert_eq!(b.double_dz_min, 30);
        assert_eq!(b.double_dx_min, 30);
        // trivial classical code collapses the bounds to the original
        let t = balance_params((50, 4, 5, 7), (1, 1, 1));
        assert_eq!(t.single_k, 4);
        assert_eq!(t.single_dz_min, 5);
        assert_eq!(t.single_dx_min, 7);
        assert_eq!(t.double_k, 4);
    }

    #[test]
    fn balance_multiplies_z_distance() {
        // small [[8,2]] product code balanced with the [3,1,3] repetition code
        let g = GroupSpec::cyclic(2);
        let c = AlgElem::from_support(g, &[0, 1]).block_lift();
        let code = hp(&c, &c).unwrap();
        assert_eq!((code.len(), code.dimension()), (8, 2));
        let dz0 = exact_distance(&code, Side::Z, 20).unwrap().finite().unwrap();

        let rep = BinMatrix::from_dense(&[&[1, 1, 0], &[0, 1, 1]]);
        let balanced = balance_construct(&code, &rep, 2).unwrap();
        assert_eq!(balanced.dimension(), 2); // k * K = 1 * 2
        let dz = exact_distance(&balanced, Side::Z, 20).unwrap().finite().unwrap();
        assert!(dz >= 3 * dz0, "dz = {} < 3 * {}", dz, dz0);
        // the X side keeps at least the original X distance
        let dx0 = exact_distance(&code, Side::X, 20).unwrap().finite().unwrap();
        let dx = exact_distance(&balanced, Side::X, 20).unwrap().finite().unwrap();
        assert!(dx >= dx0);
    }
}
