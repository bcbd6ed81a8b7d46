//! Product constructions: hypergraph products (binary and over extension
//! fields), generalized bicycle codes, and lifted products over abelian
//! group algebras, together with their closed-form dimension formulas.
//!
//! Every constructor routes the result through [`CssCode::new`], so the
//! orthogonality invariant is always re-verified rather than assumed.

use crate::css::CssCode;
use crate::error::{Error, Result};
use crate::f2::BinMatrix;
use crate::factor::{eval_matrix, factor_cyclic};
use crate::gf::GfMatrix;
use crate::group::{AlgElem, AlgMatrix};
use crate::poly::F2Poly;

/// Hypergraph product of two binary parity-check matrices:
/// `HX = [A x I_mB | I_mA x B]`, `HZ = [I_nA x B^T | A^T x I_nB]`.
pub fn hp(a: &BinMatrix, b: &BinMatrix) -> Result<CssCode> {
    let (ma, na) = (a.rows(), a.cols());
    let (mb, nb) = (b.rows(), b.cols());
    let hx = a
        .kron(&BinMatrix::identity(mb))
        .hstack(&BinMatrix::identity(ma).kron(b));
    let hz = BinMatrix::identity(na)
        .kron(&b.transpose())
        .hstack(&a.transpose().kron(&BinMatrix::identity(nb)));
    debug_assert_eq!(hx.cols(), na * mb + nb * ma);
    CssCode::new(hx, hz)
}

/// Length and dimension of a hypergraph product from the factor code
/// parameters: `N = nA mB + nB mA`,
/// `K = 2 kA kB - kA (nB - mB) - kB (nA - mA)`.
pub fn hp_params(
    (na, ma, ka): (usize, usize, usize),
    (nb, mb, kb): (usize, usize, usize),
) -> (usize, i64) {
    let n = na * mb + nb * ma;
    let k = 2 * (ka as i64) * (kb as i64)
        - (ka as i64) * (nb as i64 - mb as i64)
        - (kb as i64) * (na as i64 - ma as i64);
    (n, k)
}

/// Hypergraph product dimension over a field, from the ranks of the two
/// factors. Exact for any parity-check matrices, full rank or not.
pub fn hp_dim_gf(a: &GfMatrix, b: &GfMatrix) -> usize {
    let ka = a.cols() - a.rank();
    let kb = b.cols() - b.rank();
    let (_, k) = hp_params((a.cols(), a.rows(), ka), (b.cols(), b.rows(), kb));
    debug_assert!(k >= 0);
    k as usize
}

/// Generalized bicycle code of two commuting square blocks:
/// `HX = [B(a) | B(b)]`, `HZ = [B(b)^T | B(a)^T]`.
pub fn gb(a: &AlgElem, b: &AlgElem) -> Result<CssCode> {
    if a.group() != b.group() {
        return Err(Error::GroupMismatch);
    }
    let ba = a.block_lift();
    let bb = b.block_lift();
    let hx = ba.hstack(&bb);
    let hz = bb.transpose().hstack(&ba.transpose());
    CssCode::new(hx, hz)
}

/// Lifted product of two matrices over the same commutative group algebra:
/// the hypergraph product is formed over the ring and then expanded to
/// binary block matrices. Orthogonality holds because all entries commute.
pub fn lp(a: &AlgMatrix, b: &AlgMatrix) -> Result<CssCode> {
    if a.group() != b.group() {
        return Err(Error::GroupMismatch);
    }
    let g = a.group().clone();
    let (ma, na) = (a.rows(), a.cols());
    let (mb, nb) = (b.rows(), b.cols());
    let hx = a
        .kron(&AlgMatrix::identity(g.clone(), mb))?
        .hstack(&AlgMatrix::identity(g.clone(), ma).kron(b)?)?;
    let hz = AlgMatrix::identity(g.clone(), na)
        .kron(&b.conj_transpose())?
        .hstack(&a.conj_transpose().kron(&AlgMatrix::identity(g, nb))?)?;
    CssCode::new(hx.block_lift(), hz.block_lift())
}

/// Two-block lifted product `LP(A, b)` with a single ring element `b`:
/// `HX = [A | b I_m]`, `HZ = [antipode(b) I_n | A*]`, expanded to binary.
/// Identical to `lp(A, [b])` including the qubit ordering.
pub fn lp_ab(a: &AlgMatrix, b: &AlgElem) -> Result<CssCode> {
    if a.group() != b.group() {
        return Err(Error::GroupMismatch);
    }
    let hx = a.hstack(&AlgMatrix::scalar(b, a.rows()))?;
    let hz = AlgMatrix::scalar(&b.antipode(), a.cols()).hstack(&a.conj_transpose())?;
    CssCode::new(hx.block_lift(), hz.block_lift())
}

/// Dimension of `LP(A, b)` for an irreducible factor `b` of `x^l - 1`:
/// `deg b * (dim ker A(beta) + dim ker A^T(beta))`, ranks taken over the
/// field cut out by `b`.
pub fn lp_ab_dim(a: &AlgMatrix, b: &F2Poly) -> Result<usize> {
    let eval = eval_matrix(a, b)?;
    let degree = b.degree().expect("irreducible factors are nonzero");
    let rank = eval.rank();
    // rank over a field is transpose-invariant
    let ker = eval.cols() - rank;
    let ker_t = eval.rows() - rank;
    Ok(degree * (ker + ker_t))
}

/// Dimension of `LP(A, B)` over `R_l` with odd `l`, by splitting the ring
/// into fields: one non-binary hypergraph product per irreducible factor
/// of `x^l - 1`, weighted by the field degree.
pub fn lp_dim_crt(a: &AlgMatrix, b: &AlgMatrix) -> Result<usize> {
    if a.group() != b.group() {
        return Err(Error::GroupMismatch);
    }
    if !a.group().is_cyclic() {
        return Err(Error::NotCyclic);
    }
    let factors = factor_cyclic(a.group().order())?;
    let mut total = 0usize;
    for f in factors.factors() {
        let ai = eval_matrix(a, f)?;
        let bi = eval_matrix(b, f)?;
        total += f.degree().unwrap() * hp_dim_gf(&ai, &bi);
    }
    Ok(total)
}

/// The square lifted product `LP(A) = LP(A, A*)`, of length `l(n^2 + m^2)`
/// and dimension at least `l(n - m)^2`.
pub fn lp_square(a: &AlgMatrix) -> Result<CssCode> {
    lp(a, &a.conj_transpose())
}

/// Lifted product of two matrices over `F_{2^r}`: each entry of the
/// field-level hypergraph product is replaced by its r x r companion
/// matrix (transposed on the HZ side). The dimension is `r` times the
/// field-level hypergraph product dimension.
pub fn lp_from_field(a: &GfMatrix, b: &GfMatrix) -> Result<CssCode> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    let field = a.field().clone();
    let (ma, na) = (a.rows(), a.cols());
    let (mb, nb) = (b.rows(), b.cols());
    let eye = |n: usize| GfMatrix::from_fn(field.clone(), n, n, |i, j| u32::from(i == j));
    let hx_field = gf_hstack(&gf_kron(a, &eye(mb)), &gf_kron(&eye(ma), b));
    let hz_field = gf_hstack(
        &gf_kron(&eye(na), &b.transpose()),
        &gf_kron(&a.transpose(), &eye(nb)),
    );
    let hx = expand_companion(&hx_field, false);
    let hz = expand_companion(&hz_field, true);
    CssCode::new(hx, hz)
}

fn gf_kron(a: &GfMatrix, b: &GfMatrix) -> GfMatrix {
    let field = a.field().clone();
    GfMatrix::from_fn(
        field.clone(),
        a.rows() * b.rows(),
        a.cols() * b.cols(),
        |i, j| {
            let (i1, i2) = (i / b.rows(), i % b.rows());
            let (j1, j2) = (j / b.cols(), j % b.cols());
            field.mul(a.get(i1, j1), b.get(i2, j2))
        },
    )
}

fn gf_hstack(a: &GfMatrix, b: &GfMatrix) -> GfMatrix {
    assert_eq!(a.rows(), b.rows());
    GfMatrix::from_fn(a.field().clone(), a.rows(), a.cols() + b.cols(), |i, j| {
        if j < a.cols() {
            a.get(i, j)
        } else {
            b.get(i, j - a.cols())
        }
    })
}

/// Replace each field entry by its companion matrix (or its transpose).
fn expand_companion(m: &GfMatrix, transpose: bool) -> BinMatrix {
    let r = m.field().degree();
    let mut out = BinMatrix::zeros(m.rows() * r, m.cols() * r);
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let entry = m.get(i, j);
            if entry == 0 {
                continue;
            }
            let block = m.field().companion_matrix(entry);
            let block = if transpose { block.transpose() } else { block };
            out.paste(i * r, j * r, &block);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2::BinMatrix;
    use crate::gf::FieldSpec;
    use crate::group::GroupSpec;
    use crate::rng::Rng;

    fn circulant_one_plus_x(l: usize) -> BinMatrix {
        let g = GroupSpec::cyclic(l);
        AlgElem::from_support(g, &[0, 1]).block_lift()
    }

    #[test]
    fn toric_style_hp_is_18_2() {
        let c = circulant_one_plus_x(3);
        let code = hp(&c, &c).unwrap();
        assert_eq!(code.len(), 18);
        assert_eq!(code.dimension(), 2);
    }

    #[test]
    fn hp_of_single_ones_is_2_0() {
        let one = BinMatrix::from_dense(&[&[1]]);
        let code = hp(&one, &one).unwrap();
        assert_eq!((code.len(), code.dimension()), (2, 0));
    }

    #[test]
    fn hp_params_examples() {
        assert_eq!(hp_params((3, 3, 1), (3, 3, 1)), (18, 2));
        assert_eq!(hp_params((2, 1, 1), (2, 1, 1)), (4, 0));
    }

    #[test]
    fn hp_params_matches_rank_dimension_on_random_pairs() {
        let mut rng = Rng::new(101);
        for _ in 0..50 {
            let (ra, ca) = (1 + rng.below(4) as usize, 1 + rng.below(5) as usize);
            let (rb, cb) = (1 + rng.below(4) as usize, 1 + rng.below(5) as usize);
            let a = BinMatrix::random(&mut rng, ra, ca);
            let b = BinMatrix::random(&mut rng, rb, cb);
            let code = hp(&a, &b).unwrap();
            let ka = a.cols() - a.rank();
            let kb = b.cols() - b.rank();
            let (n, k) = hp_params((a.cols(), a.rows(), ka), (b.cols(), b.rows(), kb));
            assert_eq!(code.len(), n);
            assert_eq!(code.dimension() as i64, k);
        }
    }

    #[test]
    fn lp_with_trivial_group_is_hp_bit_for_bit() {
        let mut rng = Rng::new(7);
        let g = GroupSpec::cyclic(1);
        for _ in 0..20 {
            let rows = 1 + rng.below(3) as usize;
            let cols = 1 + rng.below(4) as usize;
            let a = AlgMatrix::random(&mut rng, g.clone(), rows, cols);
            let (rb, cb) = (1 + rng.below(3) as usize, 1 + rng.below(4) as usize);
            let b = AlgMatrix::random(&mut rng, g.clone(), rb, cb);
            let lifted = lp(&a, &b).unwrap();
            let plain = hp(&a.block_lift(), &b.block_lift()).unwrap();
            assert_eq!(lifted.hx(), plain.hx());
            assert_eq!(lifted.hz(), plain.hz());
        }
    }

    #[test]
    fn gb_is_lp_of_one_by_one_matrices() {
        let mut rng = Rng::new(19);
        for &l in &[2usize, 3, 5, 6] {
            let g = GroupSpec::cyclic(l);
            let a = AlgElem::random(&mut rng, g.clone());
            let b = AlgElem::random(&mut rng, g.clone());
            let via_gb = gb(&a, &b).unwrap();
            let am = AlgMatrix::from_entries(g.clone(), 1, 1, vec![a]).unwrap();
            let bm = AlgMatrix::from_entries(g.clone(), 1, 1, vec![b]).unwrap();
            let via_lp = lp(&am, &bm).unwrap();
            assert_eq!(via_gb.hx(), via_lp.hx());
            assert_eq!(via_gb.hz(), via_lp.hz());
        }
    }

    #[test]
    fn gb_examples() {
        let g = GroupSpec::cyclic(3);
        let a = AlgElem::from_support(g.clone(), &[0, 1]);
        let code = gb(&a, &a).unwrap();
        assert_eq!((code.len(), code.dimension()), (6, 2));

        // bicycle specialization B = A^T
        let code2 = gb(&a, &a.antipode()).unwrap();
        assert_eq!(code2.len(), 6);

        // an invertible block forces k = 0
        let one = AlgElem::one(g.clone());
        let b = AlgElem::from_support(g, &[0, 2]);
        assert_eq!(gb(&one, &b).unwrap().dimension(), 0);
    }

    #[test]
    fn lp_ab_equals_lp_with_scalar_matrix() {
        let mut rng = Rng::new(31);
        for &l in &[3usize, 5] {
            let g = GroupSpec::cyclic(l);
            let a = AlgMatrix::random(&mut rng, g.clone(), 2, 3);
            let b = AlgElem::random(&mut rng, g.clone());
            let direct = lp_ab(&a, &b).unwrap();
            let bm = AlgMatrix::from_entries(g.clone(), 1, 1, vec![b]).unwrap();
            let via_lp = lp(&a, &bm).unwrap();
            assert_eq!(direct.hx(), via_lp.hx());
            assert_eq!(direct.hz(), via_lp.hz());
        }
    }

    #[test]
    fn lp_ab_dimension_examples() {
        let g = GroupSpec::cyclic(3);
        // A = [[x]], b = 1+x: both checks have full rank 3
        let a =
            AlgMatrix::from_entries(g.clone(), 1, 1, vec![AlgElem::monomial_exps(g.clone(), &[1])])
                .unwrap();
        let b = AlgElem::from_support(g.clone(), &[0, 1]);
        let code = lp_ab(&a, &b).unwrap();
        assert_eq!((code.len(), code.dimension()), (6, 0));

        // A = [[1+x+x^2]], b = 1+x+x^2: all-ones blocks of rank 1
        let full = AlgElem::from_support(g.clone(), &[0, 1, 2]);
        let a2 = AlgMatrix::from_entries(g.clone(), 1, 1, vec![full.clone()]).unwrap();
        let code2 = lp_ab(&a2, &full).unwrap();
        assert_eq!((code2.len(), code2.dimension()), (6, 4));
    }

    #[test]
    fn lp_ab_dim_formula_examples() {
        let g = GroupSpec::cyclic(3);
        let a =
            AlgMatrix::from_entries(g.clone(), 1, 1, vec![AlgElem::monomial_exps(g.clone(), &[1])])
                .unwrap();
        assert_eq!(lp_ab_dim(&a, &F2Poly::from_support(&[0, 1])).unwrap(), 0);

        let full = AlgElem::from_support(g.clone(), &[0, 1, 2]);
        let a2 = AlgMatrix::from_entries(g.clone(), 1, 1, vec![full]).unwrap();
        assert_eq!(lp_ab_dim(&a2, &F2Poly::from_support(&[0, 1, 2])).unwrap(), 4);
    }

    #[test]
    fn lp_ab_dim_matches_rank_dimension_small_sweep() {
        let mut rng = Rng::new(53);
        for &l in &[1usize, 3, 5, 7, 9] {
            let g = GroupSpec::cyclic(l);
            let factors = factor_cyclic(l).unwrap();
            for _ in 0..5 {
                let rows = 1 + rng.below(2) as usize;
                let cols = 1 + rng.below(3) as usize;
                let a = AlgMatrix::random(&mut rng, g.clone(), rows, cols);
                for f in factors.factors() {
                    let b = AlgElem::from_poly(g.clone(), f).unwrap();
                    let code = lp_ab(&a, &b).unwrap();
                    assert_eq!(
                        lp_ab_dim(&a, f).unwrap(),
                        code.dimension(),
                        "l={} b={}",
                        l,
                        f
                    );
                }
            }
        }
    }

    #[test]
    fn lp_dimension_lower_bound_for_tall_b() {
        // mA < nA and mB > nB gives K >= l (nA - mA)(mB - nB)
        let mut rng = Rng::new(61);
        for &l in &[2usize, 3, 4] {
            let g = GroupSpec::cyclic(l);
            let a = AlgMatrix::random(&mut rng, g.clone(), 1, 3);
            let b = AlgMatrix::random(&mut rng, g.clone(), 3, 1);
            let code = lp(&a, &b).unwrap();
            assert!(code.dimension() >= l * 2 * 2);
        }
    }

    #[test]
    fn lp_dim_crt_matches_rank_dimension() {
        let mut rng = Rng::new(71);
        for &l in &[1usize, 3, 5, 9] {
            let g = GroupSpec::cyclic(l);
            for _ in 0..5 {
                let (ra, ca) = (1 + rng.below(2) as usize, 1 + rng.below(3) as usize);
                let (rb, cb) = (1 + rng.below(2) as usize, 1 + rng.below(3) as usize);
                let a = AlgMatrix::random(&mut rng, g.clone(), ra, ca);
                let b = AlgMatrix::random(&mut rng, g.clone(), rb, cb);
                let code = lp(&a, &b).unwrap();
                assert_eq!(lp_dim_crt(&a, &b).unwrap(), code.dimension());
            }
        }
    }

    #[test]
    fn lp_square_of_identity_entry() {
        for &l in &[2usize, 5] {
            let g = GroupSpec::cyclic(l);
            let a = AlgMatrix::identity(g, 1);
            let code = lp_square(&a).unwrap();
            assert_eq!((code.len(), code.dimension()), (2 * l, 0));
        }
    }

    #[test]
    fn lp_from_field_over_f2_is_hp() {
        let mut rng = Rng::new(83);
        let f2 = FieldSpec::binary();
        for _ in 0..10 {
            let rows = 1 + rng.below(3) as usize;
            let cols = 1 + rng.below(3) as usize;
            let a_bits = BinMatrix::random(&mut rng, rows, cols);
            let b_bits = BinMatrix::random(&mut rng, 2, 2);
            let a = GfMatrix::from_fn(f2.clone(), rows, cols, |i, j| a_bits.get(i, j) as u32);
            let b = GfMatrix::from_fn(f2.clone(), 2, 2, |i, j| b_bits.get(i, j) as u32);
            let field_code = lp_from_field(&a, &b).unwrap();
            let plain = hp(&a_bits, &b_bits).unwrap();
            assert_eq!(field_code.hx(), plain.hx());
            assert_eq!(field_code.hz(), plain.hz());
        }
    }

    #[test]
    fn lp_from_field_dimension_is_degree_times_hp_dim() {
        let f4 = FieldSpec::new(0b111).unwrap();
        let mut rng = Rng::new(97);
        for _ in 0..10 {
            let ra = 1 + rng.below(2) as usize;
            let ca = 1 + rng.below(3) as usize;
            let rb = 1 + rng.below(2) as usize;
            let cb = 1 + rng.below(3) as usize;
            let a = GfMatrix::from_fn(f4.clone(), ra, ca, |_, _| rng.below(4) as u32);
            let b = GfMatrix::from_fn(f4.clone(), rb, cb, |_, _| rng.below(4) as u32);
            let code = lp_from_field(&a, &b).unwrap();
            assert_eq!(code.dimension(), 2 * hp_dim_gf(&a, &b));
        }
    }

    #[test]
    fn random_two_block_codes_always_pass_orthogonality() {
        let mut rng = Rng::new(113);
        for _ in 0..20 {
            let l = 1 + rng.below(8) as usize;
            let g = GroupSpec::cyclic(l);
            let (ra, ca) = (1 + rng.below(3) as usize, 1 + rng.below(3) as usize);
            let a = AlgMatrix::random(&mut rng, g.clone(), ra, ca);
            let b = AlgElem::from_support(g.clone(), &[0, 1 % l]);
            assert!(lp_ab(&a, &b).is_ok());
        }
    }

    #[test]
    fn field_mismatch_is_rejected() {
        let f4 = FieldSpec::new(0b111).unwrap();
        let f8 = FieldSpec::new(0b1011).unwrap();
        let a = GfMatrix::zeros(f4, 1, 1);
        let b = GfMatrix::zeros(f8, 1, 1);
        assert!(matches!(lp_from_field(&a, &b), Err(Error::FieldMismatch)));
    }
}
