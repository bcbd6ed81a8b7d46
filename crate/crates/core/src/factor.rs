//! Factorization of `x^l - 1` over F2 for odd `l`, and the quotient maps
//! from `R_l` onto the fields cut out by the irreducible factors.
//!
//! For odd `l` the polynomial `x^l - 1` is square-free and splits into
//! distinct irreducible factors; each factor `b` gives a ring homomorphism
//! `u -> u mod b` onto `F_{2^deg b}`, and together they decompose `R_l`
//! into a product of fields.

use crate::error::{Error, Result};
use crate::gf::{FieldSpec, GfMatrix};
use crate::group::{AlgElem, AlgMatrix};
use crate::poly::F2Poly;

/// Largest factor degree for which the exhaustive equal-degree split is
/// attempted. Components that are already irreducible are unaffected.
const EDF_DEGREE_CAP: usize = 24;

/// The complete irreducible factorization of `x^l - 1`, `l` odd.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyFactorization {
    ell: usize,
    factors: Vec<F2Poly>, // sorted by (degree, coefficient bits), pairwise distinct
}

impl PolyFactorization {
    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn factors(&self) -> &[F2Poly] {
        &self.factors
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.degree().unwrap()).collect()
    }

    /// Multiply the factors back and compare against `x^l - 1`.
    pub fn verify(&self) -> bool {
        let mut prod = F2Poly::one();
        for f in &self.factors {
            prod = prod.mul(f);
        }
        prod == F2Poly::cyclic(self.ell) && self.factors.iter().all(is_irreducible)
    }
}

/// Irreducibility over F2: the Frobenius fixes the polynomial's splitting
/// behaviour, so `f` of degree `d` is irreducible iff `x^{2^d} = x (mod f)`
/// and `gcd(x^{2^i} - x, f) = 1` for `1 <= i <= d/2`.
pub fn is_irreducible(f: &F2Poly) -> bool {
    let Some(d) = f.degree() else {
        return false;
    };
    if d == 0 {
        return false;
    }
    let x = F2Poly::x();
    if x.pow_2k_mod(d, f) != x.rem(f) {
        return false;
    }
    for i in 1..=d / 2 {
        let probe = x.pow_2k_mod(i, f).add(&x);
        if !f.gcd(&probe).is_one() {
            return false;
        }
    }
    true
}

/// Factor `x^l - 1` into distinct irreducible polynomials over F2.
///
/// Only odd `l` is supported: for even `l` the factorization has repeated
/// factors and the quotient rings are not fields.
pub fn factor_cyclic(ell: usize) -> Result<PolyFactorization> {
    if ell == 0 || ell % 2 == 0 {
        return Err(Error::EvenLiftSize { ell });
    }
    let mut factors = Vec::new();
    let mut remaining = F2Poly::cyclic(ell);

    // distinct-degree splitting: gcd with x^{2^d} - x collects every factor
    // of degree dividing d; processing d in ascending order leaves exactly
    // the degree-d factors in each extracted component
    let mut frob = F2Poly::x().rem(&remaining); // x^{2^d} mod remaining
    let mut d = 0;
    while remaining.degree().map_or(false, |deg| deg > 0) {
        d += 1;
        let deg_left = remaining.degree().unwrap();
        if 2 * d > deg_left {
            // what is left is a single irreducible factor
            factors.push(remaining.clone());
            break;
        }
        frob = frob.square().rem(&remaining);
        let component = remaining.gcd(&frob.add(&F2Poly::x()));
        if component.is_one() {
            continue;
        }
        split_equal_degree(&component, d, &mut factors)?;
        remaining = remaining.divrem(&component).0;
        frob = frob.rem(&remaining);
    }

    factors.sort_by_key(|f| (f.degree().unwrap(), f.support()));
    let result = PolyFactorization { ell, factors };
    debug_assert!(result.verify());
    Ok(result)
}

/// Split a product of distinct irreducibles of known equal degree `d` by
/// exhaustive trial division over the monic degree-`d` candidates.
fn split_equal_degree(component: &F2Poly, d: usize, out: &mut Vec<F2Poly>) -> Result<()> {
    let total = component.degree().unwrap();
    debug_assert_eq!(total % d, 0);
    if total == d {
        out.push(component.clone());
        return Ok(());
    }
    if d > EDF_DEGREE_CAP {
        let required = if d >= 128 { u128::MAX } else { 1u128 << (d - 1) };
        return Err(Error::EnumerationBudget {
            required,
            budget: 1u128 << (EDF_DEGREE_CAP - 1),
        });
    }
    let mut rest = component.clone();
    // candidates have the leading bit and, being coprime to x, the constant bit
    for mid in 0..(1u64 << (d - 1)) {
        let bits = (1u64 << d) | (mid << 1) | 1;
        let candidate = F2Poly::from_bits(bits);
        if candidate.divides(&rest) && is_irreducible(&candidate) {
            out.push(candidate.clone());
            rest = rest.divrem(&candidate).0;
            if rest.degree() == Some(d) {
                out.push(rest.clone());
                return Ok(());
            }
            if rest.is_one() {
                return Ok(());
            }
        }
    }
    debug_assert!(rest.is_one());
    Ok(())
}

fn divisor_field(ell: usize, b: &F2Poly) -> Result<FieldSpec> {
    if !is_irreducible(b) {
        return Err(Error::NotIrreducible);
    }
    if !b.divides(&F2Poly::cyclic(ell)) {
        return Err(Error::NotADivisor { ell });
    }
    FieldSpec::from_poly(b)
}

/// The quotient morphism `u -> u mod b` from `R_l` to `F_{2^deg b}`,
/// returned together with the target field. For `b = 1 + x` the image is
/// the parity of the coefficient weight.
pub fn reduce_mod(a: &AlgElem, b: &F2Poly) -> Result<(FieldSpec, u32)> {
    let group = a.group();
    if !group.is_cyclic() {
        return Err(Error::NotCyclic);
    }
    let field = divisor_field(group.order(), b)?;
    let residue = a.to_poly()?.rem(b);
    Ok((field, residue.low_bits() as u32))
}

/// Entrywise quotient morphism: `A` over `R_l` becomes `A(beta)` over
/// `F_{2^deg b}`, `beta` a root of `b`.
pub fn eval_matrix(a: &AlgMatrix, b: &F2Poly) -> Result<GfMatrix> {
    let group = a.group();
    if !group.is_cyclic() {
        return Err(Error::NotCyclic);
    }
    let field = divisor_field(group.order(), b)?;
    let mut out = GfMatrix::zeros(field, a.rows(), a.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let residue = a.entry(i, j).to_poly()?.rem(b);
            out.set(i, j, residue.low_bits() as u32);
        }
    }
    Ok(out)
}

/// Decompose a matrix over `R_l` (odd cyclic `l`) into its field components,
/// one `A(beta_i)` per irreducible factor `f_i` of `x^l - 1`. The field
/// degrees sum to `l`.
pub fn crt_decompose(a: &AlgMatrix) -> Result<Vec<GfMatrix>> {
    let group = a.group();
    if !group.is_cyclic() {
        return Err(Error::NotCyclic);
    }
    let ell = group.order();
    let factorization = factor_cyclic(ell)?;
    factorization
        .factors()
        .iter()
        .map(|f| eval_matrix(a, f))
        .collect()
}
