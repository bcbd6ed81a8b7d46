//! Binary polynomials of arbitrary degree, bit-packed.
//!
//! Bit `i` of the word vector is the coefficient of `x^i`. Addition is XOR,
//! multiplication is shift-and-XOR; this is enough for factoring `x^l - 1`
//! at circulant sizes up to a few thousand.

use std::fmt;

const WORD_BITS: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Poly {
    words: Vec<u64>, // normalized: no trailing zero words
}

impl F2Poly {
    pub fn zero() -> Self {
        F2Poly { words: Vec::new() }
    }

    pub fn one() -> Self {
        F2Poly { words: vec![1] }
    }

    pub fn x() -> Self {
        F2Poly { words: vec![2] }
    }

    pub fn monomial(degree: usize) -> Self {
        let mut words = vec![0u64; degree / WORD_BITS + 1];
        words[degree / WORD_BITS] = 1 << (degree % WORD_BITS);
        F2Poly { words }
    }

    /// `x^l - 1` (equal to `x^l + 1` over F2).
    pub fn cyclic(l: usize) -> Self {
        let mut p = F2Poly::monomial(l);
        p.flip(0);
        p.normalize();
        p
    }

    pub fn from_support(exponents: &[usize]) -> Self {
        let mut p = F2Poly::zero();
        for &e in exponents {
            p.flip(e);
        }
        p.normalize();
        p
    }

    /// Low 64 coefficient bits, for small-degree polynomials.
    pub fn low_bits(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    pub fn from_bits(bits: u64) -> Self {
        let mut p = F2Poly { words: vec![bits] };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    fn flip(&mut self, i: usize) {
        if i / WORD_BITS >= self.words.len() {
            self.words.resize(i / WORD_BITS + 1, 0);
        }
        self.words[i / WORD_BITS] ^= 1 << (i % WORD_BITS);
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words
            .get(i / WORD_BITS)
            .is_some_and(|w| w >> (i % WORD_BITS) & 1 == 1)
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words == [1]
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let last = self.words.last()?;
        Some((self.words.len() - 1) * WORD_BITS + (63 - last.leading_zeros() as usize))
    }

    pub fn weight(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn support(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (wi, &w) in self.words.iter().enumerate() {
            let mut bits = w;
            while bits != 0 {
                out.push(wi * WORD_BITS + bits.trailing_zeros() as usize);
                bits &= bits - 1;
            }
        }
        out
    }

    pub fn add(&self, other: &F2Poly) -> F2Poly {
        let mut words = vec![0u64; self.words.len().max(other.words.len())];
        for (i, w) in words.iter_mut().enumerate() {
            *w = self.words.get(i).copied().unwrap_or(0) ^ other.words.get(i).copied().unwrap_or(0);
        }
        let mut p = F2Poly { words };
        p.normalize();
        p
    }

    pub fn shl(&self, k: usize) -> F2Poly {
        if self.is_zero() {
            return F2Poly::zero();
        }
        let word_shift = k / WORD_BITS;
        let bit_shift = k % WORD_BITS;
        let mut words = vec![0u64; self.words.len() + word_shift + 1];
        for (i, &w) in self.words.iter().enumerate() {
            words[i + word_shift] |= w << bit_shift;
            if bit_shift > 0 {
                words[i + word_shift + 1] |= w >> (WORD_BITS - bit_shift);
            }
        }
        let mut p = F2Poly { words };
        p.normalize();
        p
    }

    pub fn mul(&self, other: &F2Poly) -> F2Poly {
        if self.is_zero() || other.is_zero() {
            return F2Poly::zero();
        }
        // shift-and-add over the sparser operand
        let (a, b) = if self.weight() <= other.weight() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = F2Poly::zero();
        for e in a.support() {
            acc = acc.add(&b.shl(e));
        }
        acc
    }

    /// Squaring spreads the coefficient bits: `(sum a_i x^i)^2 = sum a_i x^{2i}`.
    pub fn square(&self) -> F2Poly {
        let mut p = F2Poly::zero();
        for e in self.support() {
            p.flip(2 * e);
        }
        p.normalize();
        p
    }

    /// Quotient and remainder of polynomial long division.
    pub fn divrem(&self, divisor: &F2Poly) -> (F2Poly, F2Poly) {
        let d = divisor.degree().expect("division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = F2Poly::zero();
        while let Some(rd) = rem.degree() {
            if rd < d {
                break;
            }
            let shift = rd - d;
            quot.flip(shift);
            rem = rem.add(&divisor.shl(shift));
        }
        quot.normalize();
        (quot, rem)
    }

    pub fn rem(&self, divisor: &F2Poly) -> F2Poly {
        self.divrem(divisor).1
    }

    pub fn divides(&self, other: &F2Poly) -> bool {
        other.rem(self).is_zero()
    }

    pub fn gcd(&self, other: &F2Poly) -> F2Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    /// Formal derivative; over F2 only odd-degree terms survive.
    pub fn derivative(&self) -> F2Poly {
        let mut p = F2Poly::zero();
        for e in self.support() {
            if e % 2 == 1 {
                p.flip(e - 1);
            }
        }
        p.normalize();
        p
    }

    /// `x^e mod m` by square-and-multiply.
    pub fn x_pow_mod(e: u64, modulus: &F2Poly) -> F2Poly {
        let mut result = F2Poly::one().rem(modulus);
        let mut bit = 63 - e.leading_zeros() as i32;
        if e == 0 {
            return result;
        }
        while bit >= 0 {
            result = result.square().rem(modulus);
            if e >> bit & 1 == 1 {
                result = result.shl(1).rem(modulus);
            }
            bit -= 1;
        }
        result
    }

    /// `self^(2^k) mod m` by repeated squaring.
    pub fn pow_2k_mod(&self, k: usize, modulus: &F2Poly) -> F2Poly {
        let mut r = self.rem(modulus);
        for _ in 0..k {
            r = r.square().rem(modulus);
        }
        r
    }
}

impl fmt::Display for F2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for e in self.support() {
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match e {
                0 => write!(f, "1")?,
                1 => write!(f, "x")?,
                _ => write!(f, "x^{}", e)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for F2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
