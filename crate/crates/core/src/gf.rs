//! Arithmetic and elimination over extension fields F_{2^r}.
//!
//! Elements are polynomial residues modulo an irreducible binary polynomial,
//! stored in the low `r` bits of a `u32`. Multiplication is shift-and-reduce,
//! inversion is the extended Euclidean algorithm. Degrees up to 16 cover
//! every irreducible factor of `x^l - 1` at desk scale.

use crate::error::{Error, Result};
use crate::poly::F2Poly;

pub const MAX_FIELD_DEGREE: usize = 16;

/// A finite field F_{2^r} fixed by an irreducible modulus polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    degree: usize,
    modulus: u32, // bit i = coefficient of x^i; bit `degree` is set
}

impl FieldSpec {
    /// Builds the field from the modulus bits, verifying irreducibility.
    pub fn new(modulus: u32) -> Result<Self> {
        let degree = 31 - modulus.leading_zeros() as usize;
        if modulus == 0 || degree == 0 {
            return Err(Error::NotIrreducible);
        }
        if degree > MAX_FIELD_DEGREE {
            return Err(Error::FieldDegree {
                degree,
                max: MAX_FIELD_DEGREE,
            });
        }
        let spec = FieldSpec { degree, modulus };
        if !spec.modulus_is_irreducible() {
            return Err(Error::NotIrreducible);
        }
        Ok(spec)
    }

    pub fn from_poly(p: &F2Poly) -> Result<Self> {
        match p.degree() {
            Some(d) if d <= MAX_FIELD_DEGREE => FieldSpec::new(p.low_bits() as u32),
            Some(d) => Err(Error::FieldDegree {
                degree: d,
                max: MAX_FIELD_DEGREE,
            }),
            None => Err(Error::NotIrreducible),
        }
    }

    /// The prime field F2.
    pub fn binary() -> Self {
        FieldSpec {
            degree: 1,
            modulus: 0b11, // 1+x
        }
    }

    /// No factor of degree <= r/2 may divide the modulus:
    /// gcd(modulus, x^{2^i} - x mod modulus) = 1 for 1 <= i <= r/2.
    fn modulus_is_irreducible(&self) -> bool {
        let m = F2Poly::from_bits(self.modulus as u64);
        let x = F2Poly::x();
        // Frobenius closure: x^{2^r} = x mod m is necessary
        if x.pow_2k_mod(self.degree, &m) != x.rem(&m) {
            return false;
        }
        for i in 1..=self.degree / 2 {
            let probe = x.pow_2k_mod(i, &m).add(&x);
            if !m.gcd(&probe).is_one() {
                return false;
            }
        }
        true
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus_bits(&self) -> u32 {
        self.modulus
    }

    pub fn modulus_poly(&self) -> F2Poly {
        F2Poly::from_bits(self.modulus as u64)
    }

    pub fn order(&self) -> u64 {
        1 << self.degree
    }

    /// The class of `x`, a root of the modulus.
    pub fn generator(&self) -> u32 {
        if self.degree == 1 {
            self.modulus & 1 // for 1+x the root is 1
        } else {
            0b10
        }
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        a ^ b
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let mut acc: u64 = 0;
        let a = a as u64;
        let mut b = b as u64;
        let mut shift = 0;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a << shift;
            }
            b >>= 1;
            shift += 1;
        }
        self.reduce(acc)
    }

    fn reduce(&self, mut v: u64) -> u32 {
        let m = self.modulus as u64;
        let d = self.degree as u32;
        while v >> d != 0 {
            let top = 63 - v.leading_zeros();
            v ^= m << (top - d);
        }
        v as u32
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        // invariants: s*a = r (mod modulus), t*a = q (mod modulus)
        let mut r = self.modulus as u64;
        let mut new_r = a as u64;
        let mut t: u64 = 0;
        let mut new_t: u64 = 1;
        while new_r != 0 {
            let (quot, rem) = poly_divrem_u64(r, new_r);
            let next_t = t ^ clmul(quot, new_t);
            r = new_r;
            new_r = rem;
            t = new_t;
            new_t = next_t;
        }
        debug_assert_eq!(r, 1, "modulus must be irreducible");
        Some(self.reduce(t))
    }

    /// The r x r binary matrix of `x -> a*x` in the polynomial basis
    /// `{1, b, ..., b^{r-1}}`, where `b` is the class of `x`.
    pub fn companion_matrix(&self, a: u32) -> crate::f2::BinMatrix {
        let r = self.degree;
        let mut m = crate::f2::BinMatrix::zeros(r, r);
        for j in 0..r {
            let col = self.mul(a, 1 << j);
            for (i, row) in (0..r).map(|i| (i, col >> i & 1)) {
                if row == 1 {
                    m.set(i, j, true);
                }
            }
        }
        m
    }
}

fn clmul(a: u64, b: u64) -> u64 {
    let mut acc = 0;
    let mut b = b;
    let mut shift = 0;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a << shift;
        }
        b >>= 1;
        shift += 1;
    }
    acc
}

fn poly_divrem_u64(a: u64, b: u64) -> (u64, u64) {
    debug_assert_ne!(b, 0);
    let db = 63 - b.leading_zeros();
    let mut rem = a;
    let mut quot = 0;
    while rem != 0 {
        let dr = 63 - rem.leading_zeros();
        if dr < db {
            break;
        }
        quot ^= 1 << (dr - db);
        rem ^= b << (dr - db);
    }
    (quot, rem)
}

/// A dense matrix over F_{2^r}, entries stored as reduced residues.
#[derive(Debug, Clone, PartialEq)]
pub struct GfMatrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

impl GfMatrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        GfMatrix {
            field,
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> u32,
    ) -> Self {
        let mut m = GfMatrix::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.entries[i * cols + j] = f(i, j);
            }
        }
        m
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        debug_assert!(v < (1 << self.field.degree()));
        self.entries[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> GfMatrix {
        GfMatrix::from_fn(self.field.clone(), self.cols, self.rows, |i, j| {
            self.get(j, i)
        })
    }

    /// Rank over F_{2^r} by Gaussian elimination with field inversion.
    pub fn rank(&self) -> usize {
        let f = &self.field;
        let mut m = self.entries.clone();
        let (rows, cols) = (self.rows, self.cols);
        let at = |m: &Vec<u32>, i: usize, j: usize| m[i * cols + j];
        let mut rank = 0;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let Some(pivot) = (rank..rows).find(|&i| at(&m, i, col) != 0) else {
                continue;
            };
            for j in 0..cols {
                m.swap(rank * cols + j, pivot * cols + j);
            }
            let inv = f.inv(at(&m, rank, col)).expect("nonzero pivot");
            for j in col..cols {
                m[rank * cols + j] = f.mul(inv, at(&m, rank, j));
            }
            for i in 0..rows {
                if i != rank && at(&m, i, col) != 0 {
                    let factor = at(&m, i, col);
                    for j in col..cols {
                        let sub = f.mul(factor, at(&m, rank, j));
                        m[i * cols + j] ^= sub;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// `cols - rank`, the dimension of the right kernel.
    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_reducible_modulus() {
        // x^2 + 1 = (x+1)^2
        assert!(matches!(FieldSpec::new(0b101), Err(Error::NotIrreducible)));
        // x^2 + x = x(x+1)
        assert!(matches!(FieldSpec::new(0b110), Err(Error::NotIrreducible)));
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        // F4, F8, F16
        for modulus in [0b111u32, 0b1011, 0b10011] {
            let f = FieldSpec::new(modulus).unwrap();
            let q = f.order() as u32;
            for a in 0..q {
                for b in 0..q {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    }
                }
                if a != 0 {
                    let inv = f.inv(a).unwrap();
                    assert_eq!(f.mul(a, inv), 1, "a={} in q={}", a, q);
                }
            }
        }
    }

    #[test]
    fn gf_rank_examples() {
        let f4 = FieldSpec::new(0b111).unwrap();
        let zero = GfMatrix::zeros(f4.clone(), 1, 1);
        assert_eq!(zero.rank(), 0);
        let mut beta = GfMatrix::zeros(f4.clone(), 1, 1);
        beta.set(0, 0, 0b10);
        assert_eq!(beta.rank(), 1);
        // all-ones 3x5 over F2 has rank 1
        let f2 = FieldSpec::binary();
        let ones = GfMatrix::from_fn(f2, 3, 5, |_, _| 1);
        assert_eq!(ones.rank(), 1);
        assert_eq!(ones.kernel_dim(), 4);
    }

    #[test]
    fn companion_matrix_of_one_is_identity() {
        for modulus in [0b111u32, 0b1011] {
            let f = FieldSpec::new(modulus).unwrap();
            assert_eq!(
                f.companion_matrix(1),
                crate::f2::BinMatrix::identity(f.degree())
            );
        }
    }

    #[test]
    fn companion_is_multiplicative() {
        let f = FieldSpec::new(0b1011).unwrap(); // F8
        for a in 0..8u32 {
            for b in 0..8u32 {
                let lhs = f.companion_matrix(f.mul(a, b));
                let rhs = f.companion_matrix(a).mul(&f.companion_matrix(b));
                assert_eq!(lhs, rhs);
            }
        }
    }
}
