//! Finite abelian group algebras F2[G] and their block lifts.
//!
//! `G` is a product of cyclic groups `C_l1 x ... x C_lk`; the single-factor
//! case `C_l` gives the circulant ring `R_l = F2[x]/(x^l - 1)`. Group
//! elements are enumerated lexicographically over multi-indices (first
//! coordinate major), so block lifts are bit-reproducible across runs.

use crate::error::{Error, Result};
use crate::f2::{BinMatrix, BinVec};
use crate::poly::F2Poly;
use std::fmt;

/// A finite abelian group given by its cyclic factor orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    orders: Vec<usize>,
}

impl GroupSpec {
    pub fn cyclic(l: usize) -> Self {
        assert!(l >= 1);
        GroupSpec { orders: vec![l] }
    }

    pub fn product(orders: Vec<usize>) -> Self {
        assert!(!orders.is_empty() && orders.iter().all(|&l| l >= 1));
        GroupSpec { orders }
    }

    /// Group order, the lift size l.
    pub fn order(&self) -> usize {
        self.orders.iter().product()
    }

    pub fn orders(&self) -> &[usize] {
        &self.orders
    }

    pub fn is_cyclic(&self) -> bool {
        self.orders.len() == 1
    }

    pub fn identity(&self) -> usize {
        0
    }

    fn unrank(&self, mut idx: usize) -> Vec<usize> {
        let mut digits = vec![0; self.orders.len()];
        for (d, &l) in digits.iter_mut().zip(&self.orders).rev() {
            *d = idx % l;
            idx /= l;
        }
        digits
    }

    fn rank(&self, digits: &[usize]) -> usize {
        let mut idx = 0;
        for (&d, &l) in digits.iter().zip(&self.orders) {
            idx = idx * l + d % l;
        }
        idx
    }

    pub fn mul_index(&self, a: usize, b: usize) -> usize {
        if self.orders.len() == 1 {
            return (a + b) % self.orders[0];
        }
        let da = self.unrank(a);
        let db = self.unrank(b);
        let sum: Vec<usize> = da
            .iter()
            .zip(&db)
            .zip(&self.orders)
            .map(|((&x, &y), &l)| (x + y) % l)
            .collect();
        self.rank(&sum)
    }

    pub fn inv_index(&self, a: usize) -> usize {
        if self.orders.len() == 1 {
            let l = self.orders[0];
            return (l - a % l) % l;
        }
        let da = self.unrank(a);
        let neg: Vec<usize> = da
            .iter()
            .zip(&self.orders)
            .map(|(&x, &l)| (l - x % l) % l)
            .collect();
        self.rank(&neg)
    }
}

/// An element of F2[G]: a formal F2-sum of group elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgElem {
    group: GroupSpec,
    coeffs: BinVec,
}

impl AlgElem {
    pub fn zero(group: GroupSpec) -> Self {
        let l = group.order();
        AlgElem {
            group,
            coeffs: BinVec::zeros(l),
        }
    }

    pub fn one(group: GroupSpec) -> Self {
        AlgElem::monomial(group, 0)
    }

    /// The single group element with rank `idx`.
    pub fn monomial(group: GroupSpec, idx: usize) -> Self {
        let mut e = AlgElem::zero(group);
        e.coeffs.set(idx, true);
        e
    }

    /// Monomial given by per-factor exponents (reduced modulo the orders).
    pub fn monomial_exps(group: GroupSpec, exps: &[usize]) -> Self {
        let idx = group.rank(
            &exps
                .iter()
                .zip(group.orders())
                .map(|(&e, &l)| e % l)
                .collect::<Vec<_>>(),
        );
        AlgElem::monomial(group, idx)
    }

    /// The all-one element, the sum of every group element.
    pub fn all_one(group: GroupSpec) -> Self {
        let l = group.order();
        let mut e = AlgElem::zero(group);
        for i in 0..l {
            e.coeffs.set(i, true);
        }
        e
    }

    pub fn from_support(group: GroupSpec, indices: &[usize]) -> Self {
        let mut e = AlgElem::zero(group);
        for &i in indices {
            e.coeffs.flip(i);
        }
        e
    }

    /// Element with independent fair-coin coefficients.
    pub fn random(rng: &mut crate::rng::Rng, group: GroupSpec) -> Self {
        let l = group.order();
        let mut e = AlgElem::zero(group);
        for i in 0..l {
            if rng.coin() {
                e.coeffs.set(i, true);
            }
        }
        e
    }

    /// Random monomial (a single uniformly chosen group element).
    pub fn random_monomial(rng: &mut crate::rng::Rng, group: GroupSpec) -> Self {
        let l = group.order() as u64;
        let idx = rng.below(l) as usize;
        AlgElem::monomial(group, idx)
    }

    /// Interpret a binary polynomial in `R_l` (cyclic groups only),
    /// reducing exponents modulo `l`.
    pub fn from_poly(group: GroupSpec, p: &F2Poly) -> Result<Self> {
        if !group.is_cyclic() {
            return Err(Error::NotCyclic);
        }
        let l = group.order();
        let mut e = AlgElem::zero(group);
        for exp in p.support() {
            e.coeffs.flip(exp % l);
        }
        Ok(e)
    }

    /// The canonical polynomial representative (cyclic groups only).
    pub fn to_poly(&self) -> Result<F2Poly> {
        if !self.group.is_cyclic() {
            return Err(Error::NotCyclic);
        }
        Ok(F2Poly::from_support(&self.support()))
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn coeff(&self, idx: usize) -> bool {
        self.coeffs.get(idx)
    }

    pub fn support(&self) -> Vec<usize> {
        self.coeffs.ones().collect()
    }

    pub fn weight(&self) -> u64 {
        self.coeffs.weight()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    pub fn add(&self, other: &AlgElem) -> Result<AlgElem> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        let mut out = self.clone();
        out.coeffs.xor_assign(&other.coeffs);
        Ok(out)
    }

    /// Group-algebra product (convolution over G).
    pub fn mul(&self, other: &AlgElem) -> Result<AlgElem> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        let mut out = AlgElem::zero(self.group.clone());
        for a in self.coeffs.ones() {
            for b in other.coeffs.ones() {
                out.coeffs.flip(self.group.mul_index(a, b));
            }
        }
        Ok(out)
    }

    /// The antipode: the coefficient of `g` moves to `g^{-1}`.
    /// For `R_l` this sends `a(x)` to `x^l a(x^{-1})`.
    pub fn antipode(&self) -> AlgElem {
        let mut out = AlgElem::zero(self.group.clone());
        for a in self.coeffs.ones() {
            out.coeffs.set(self.group.inv_index(a), true);
        }
        out
    }

    /// Multiply by the monomial of rank `idx` (a permutation of coefficients).
    pub fn shift(&self, idx: usize) -> AlgElem {
        let mut out = AlgElem::zero(self.group.clone());
        for a in self.coeffs.ones() {
            out.coeffs.set(self.group.mul_index(a, idx), true);
        }
        out
    }

    /// The l x l binary matrix representing left multiplication by `self`
    /// in the fixed enumeration of G.
    pub fn block_lift(&self) -> BinMatrix {
        let l = self.group.order();
        let mut m = BinMatrix::zeros(l, l);
        for s in self.coeffs.ones() {
            for j in 0..l {
                m.set(self.group.mul_index(s, j), j, true);
            }
        }
        m
    }
}

impl fmt::Display for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let k = self.group.orders().len();
        let mut first = true;
        for idx in self.coeffs.ones() {
            if !first {
                write!(f, "+")?;
            }
            first = false;
            let digits = self.group.unrank(idx);
            if digits.iter().all(|&d| d == 0) {
                write!(f, "1")?;
                continue;
            }
            let mut first_factor = true;
            for (pos, &d) in digits.iter().enumerate() {
                if d == 0 {
                    continue;
                }
                if !first_factor {
                    write!(f, "*")?;
                }
                first_factor = false;
                if k == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x{}", pos + 1)?;
                }
                if d > 1 {
                    write!(f, "^{}", d)?;
                }
            }
        }
        Ok(())
    }
}

/// A matrix over F2[G].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgMatrix {
    group: GroupSpec,
    rows: usize,
    cols: usize,
    entries: Vec<AlgElem>,
}

impl AlgMatrix {
    pub fn zeros(group: GroupSpec, rows: usize, cols: usize) -> Self {
        let entries = vec![AlgElem::zero(group.clone()); rows * cols];
        AlgMatrix {
            group,
            rows,
            cols,
            entries,
        }
    }

    pub fn identity(group: GroupSpec, n: usize) -> Self {
        let mut m = AlgMatrix::zeros(group.clone(), n, n);
        for i in 0..n {
            m.entries[i * n + i] = AlgElem::one(group.clone());
        }
        m
    }

    /// `b * I_n`.
    pub fn scalar(b: &AlgElem, n: usize) -> Self {
        let mut m = AlgMatrix::zeros(b.group().clone(), n, n);
        for i in 0..n {
            m.entries[i * n + i] = b.clone();
        }
        m
    }

    /// Matrix with independent random entries.
    pub fn random(rng: &mut crate::rng::Rng, group: GroupSpec, rows: usize, cols: usize) -> Self {
        AlgMatrix::from_fn(group.clone(), rows, cols, |_, _| {
            AlgElem::random(rng, group.clone())
        })
    }

    pub fn from_entries(group: GroupSpec, rows: usize, cols: usize, entries: Vec<AlgElem>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension {
                context: "matrix entries",
                expected: rows * cols,
                found: entries.len(),
            });
        }
        if entries.iter().any(|e| e.group() != &group) {
            return Err(Error::GroupMismatch);
        }
        Ok(AlgMatrix {
            group,
            rows,
            cols,
            entries,
        })
    }

    pub fn from_fn(
        group: GroupSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> AlgElem,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let e = f(i, j);
                assert_eq!(e.group(), &group);
                entries.push(e);
            }
        }
        AlgMatrix {
            group,
            rows,
            cols,
            entries,
        }
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &AlgElem {
        &self.entries[i * self.cols + j]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, e: AlgElem) {
        assert_eq!(e.group(), &self.group);
        self.entries[i * self.cols + j] = e;
    }

    pub fn add(&self, other: &AlgMatrix) -> Result<AlgMatrix> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension {
                context: "matrix addition",
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b).expect("groups checked"))
            .collect();
        Ok(AlgMatrix {
            group: self.group.clone(),
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn mul(&self, other: &AlgMatrix) -> Result<AlgMatrix> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::Dimension {
                context: "matrix product",
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = AlgMatrix::zeros(self.group.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = AlgElem::zero(self.group.clone());
                for k in 0..self.cols {
                    let prod = self.entry(i, k).mul(other.entry(k, j)).expect("groups checked");
                    acc = acc.add(&prod).expect("groups checked");
                }
                out.entries[i * other.cols + j] = acc;
            }
        }
        Ok(out)
    }

    /// Plain transpose: entries are moved, not conjugated.
    pub fn transpose(&self) -> AlgMatrix {
        AlgMatrix::from_fn(self.group.clone(), self.cols, self.rows, |i, j| {
            self.entry(j, i).clone()
        })
    }

    /// Conjugate transpose `A* = (antipode(a_ji))`; its block lift is the
    /// transpose of the block lift of `A`.
    pub fn conj_transpose(&self) -> AlgMatrix {
        AlgMatrix::from_fn(self.group.clone(), self.cols, self.rows, |i, j| {
            self.entry(j, i).antipode()
        })
    }

    /// Kronecker product over the ring, outer index major.
    pub fn kron(&self, other: &AlgMatrix) -> Result<AlgMatrix> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        let mut out = AlgMatrix::zeros(
            self.group.clone(),
            self.rows * other.rows,
            self.cols * other.cols,
        );
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.entry(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..other.rows {
                    for j2 in 0..other.cols {
                        let b = other.entry(i2, j2);
                        if b.is_zero() {
                            continue;
                        }
                        out.entries[(i1 * other.rows + i2) * out.cols + (j1 * other.cols + j2)] =
                            a.mul(b).expect("groups checked");
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn hstack(&self, other: &AlgMatrix) -> Result<AlgMatrix> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        if self.rows != other.rows {
            return Err(Error::Dimension {
                context: "horizontal stack",
                expected: self.rows,
                found: other.rows,
            });
        }
        Ok(AlgMatrix::from_fn(
            self.group.clone(),
            self.rows,
            self.cols + other.cols,
            |i, j| {
                if j < self.cols {
                    self.entry(i, j).clone()
                } else {
                    other.entry(i, j - self.cols).clone()
                }
            },
        ))
    }

    /// Expand to the `lm x ln` binary block matrix.
    pub fn block_lift(&self) -> BinMatrix {
        let l = self.group.order();
        let mut m = BinMatrix::zeros(self.rows * l, self.cols * l);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = self.entry(i, j);
                for s in e.support() {
                    for jj in 0..l {
                        m.set(i * l + self.group.mul_index(s, jj), j * l + jj, true);
                    }
                }
            }
        }
        m
    }

    /// The integer weight matrix `W(A)`, also called the base matrix.
    pub fn weight_matrix(&self) -> WeightMatrix {
        WeightMatrix::from_fn(self.rows, self.cols, |i, j| self.entry(i, j).weight())
    }

    /// The block lift is `w`-limited exactly when every row and column sum
    /// of the weight matrix is at most `w`; this returns that maximum sum.
    pub fn w_limit(&self) -> u64 {
        self.weight_matrix().max_line_sum()
    }

    pub fn map_entries(&self, mut f: impl FnMut(&AlgElem) -> AlgElem) -> AlgMatrix {
        AlgMatrix::from_fn(self.group.clone(), self.rows, self.cols, |i, j| {
            f(self.entry(i, j))
        })
    }

    /// Canonical text form (see [`parse_alg_matrix`]).
    pub fn to_text(&self) -> String {
        let header = self
            .group
            .orders()
            .iter()
            .map(|l| format!("C{}", l))
            .collect::<Vec<_>>()
            .join("x");
        let mut out = format!("group: {}\n", header);
        for i in 0..self.rows {
            let row = (0..self.cols)
                .map(|j| self.entry(i, j).to_string())
                .collect::<Vec<_>>()
                .join(", ");
            out.push_str(&row);
            out.push('\n');
        }
        out
    }
}

/// A matrix of non-negative integers (block weights).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

impl WeightMatrix {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u64) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        WeightMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_grid(grid: &[Vec<u64>]) -> Result<Self> {
        let rows = grid.len();
        let cols = grid.first().map_or(0, |r| r.len());
        if grid.iter().any(|r| r.len() != cols) {
            return Err(Error::Invalid {
                what: "weight matrix",
                why: "ragged rows".into(),
            });
        }
        Ok(WeightMatrix::from_fn(rows, cols, |i, j| grid[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.cols + j]
    }

    pub fn row_sum(&self, i: usize) -> u64 {
        (0..self.cols).map(|j| self.get(i, j)).sum()
    }

    pub fn col_sum(&self, j: usize) -> u64 {
        (0..self.rows).map(|i| self.get(i, j)).sum()
    }

    pub fn max_line_sum(&self) -> u64 {
        let r = (0..self.rows).map(|i| self.row_sum(i)).max().unwrap_or(0);
        let c = (0..self.cols).map(|j| self.col_sum(j)).max().unwrap_or(0);
        r.max(c)
    }

    /// Parse a whitespace-separated integer grid.
    pub fn parse(text: &str) -> Result<Self> {
        let mut grid = Vec::new();
        for (ln, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut row = Vec::new();
            for tok in line.split_whitespace() {
                let v: u64 = tok
                    .parse()
                    .map_err(|_| Error::parse(ln + 1, 1, format!("bad integer `{}`", tok)))?;
                row.push(v);
            }
            grid.push(row);
        }
        WeightMatrix::from_grid(&grid)
    }
}

impl fmt::Display for WeightMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row = (0..self.cols)
                .map(|j| self.get(i, j).to_string())
                .collect::<Vec<_>>()
                .join(" ");
            writeln!(f, "{}", row)?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Text format for polynomial matrices
//
//   group: C3            (or C3xC5 for multi-cyclic groups)
//   1, 0, 1+x^2
//   1+x, 1+x+x^2, x^2
//
// Entries are `0` or sums of monomials joined by `+`; monomials are `1`,
// `x`, `x^k` (multi-cyclic groups use `x1^a*x2^b`). Whitespace around
// separators is ignored; blank lines and `#` comments are skipped.
// ---------------------------------------------------------------------------

pub fn parse_alg_matrix(text: &str) -> Result<AlgMatrix> {
    let mut group: Option<GroupSpec> = None;
    let mut rows: Vec<Vec<AlgElem>> = Vec::new();
    for (ln0, raw) in text.lines().enumerate() {
        let ln = ln0 + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if group.is_none() {
            let Some(rest) = line.strip_prefix("group:") else {
                return Err(Error::parse(ln, 1, "expected `group: C<l>...` header"));
            };
            group = Some(parse_group(rest.trim(), ln)?);
            continue;
        }
        let g = group.clone().unwrap();
        let mut row = Vec::new();
        let mut col_base = raw.len() - raw.trim_start().len() + 1;
        for piece in line.split(',') {
            let elem = parse_alg_elem_at(&g, piece, ln, col_base)?;
            row.push(elem);
            col_base += piece.len() + 1;
        }
        rows.push(row);
    }
    let Some(group) = group else {
        return Err(Error::parse(1, 1, "missing `group:` header"));
    };
    if rows.is_empty() {
        return Err(Error::parse(1, 1, "matrix has no rows"));
    }
    let cols = rows[0].len();
    if rows.iter().any(|r| r.len() != cols) {
        return Err(Error::parse(1, 1, "rows have differing entry counts"));
    }
    let entries: Vec<AlgElem> = rows.into_iter().flatten().collect();
    AlgMatrix::from_entries(group, entries.len() / cols, cols, entries)
}

fn parse_group(s: &str, ln: usize) -> Result<GroupSpec> {
    let mut orders = Vec::new();
    for part in s.split('x') {
        let part = part.trim();
        let Some(num) = part.strip_prefix('C') else {
            return Err(Error::parse(ln, 1, format!("bad group factor `{}`", part)));
        };
        let l: usize = num
            .parse()
            .map_err(|_| Error::parse(ln, 1, format!("bad cyclic order `{}`", num)))?;
        if l == 0 {
            return Err(Error::parse(ln, 1, "cyclic order must be at least 1"));
        }
        orders.push(l);
    }
    Ok(GroupSpec::product(orders))
}

/// Parse a single element like `1+x+x^2` for the given group.
pub fn parse_alg_elem(group: &GroupSpec, s: &str) -> Result<AlgElem> {
    parse_alg_elem_at(group, s, 1, 1)
}

fn parse_alg_elem_at(group: &GroupSpec, s: &str, ln: usize, col_base: usize) -> Result<AlgElem> {
    let trimmed = s.trim();
    let col = col_base + (s.len() - s.trim_start().len());
    if trimmed.is_empty() {
        return Err(Error::parse(ln, col, "empty entry"));
    }
    if trimmed == "0" {
        return Ok(AlgElem::zero(group.clone()));
    }
    let mut out = AlgElem::zero(group.clone());
    let mut offset = 0;
    for term in trimmed.split('+') {
        let term_col = col + offset;
        offset += term.len() + 1;
        let term = term.trim();
        if term.is_empty() {
            return Err(Error::parse(ln, term_col, "empty term in sum"));
        }
        let mono = parse_monomial(group, term, ln, term_col)?;
        out = out.add(&mono).expect("same group");
    }
    Ok(out)
}

fn parse_monomial(group: &GroupSpec, term: &str, ln: usize, col: usize) -> Result<AlgElem> {
    if term == "1" {
        return Ok(AlgElem::one(group.clone()));
    }
    let k = group.orders().len();
    let mut exps = vec![0usize; k];
    for factor in term.split('*') {
        let factor = factor.trim();
        let Some(rest) = factor.strip_prefix('x') else {
            return Err(Error::parse(ln, col, format!("bad monomial `{}`", term)));
        };
        let (var_part, exp_part) = match rest.find('^') {
            Some(pos) => (&rest[..pos], Some(&rest[pos + 1..])),
            None => (rest, None),
        };
        let var_index = if var_part.is_empty() {
            if k != 1 {
                return Err(Error::parse(
                    ln,
                    col,
                    "plain `x` is only valid for a single cyclic factor; use x1, x2, ...",
                ));
            }
            0
        } else {
            let idx: usize = var_part
                .parse()
                .map_err(|_| Error::parse(ln, col, format!("bad variable `x{}`", var_part)))?;
            if idx == 0 || idx > k {
                return Err(Error::parse(
                    ln,
                    col,
                    format!("variable x{} out of range (group has {} factors)", idx, k),
                ));
            }
            idx - 1
        };
        let exp = match exp_part {
            Some(e) if e.is_empty() => {
                return Err(Error::parse(ln, col, format!("bad monomial `{}`", term)))
            }
            Some(e) => e
                .parse::<usize>()
                .map_err(|_| Error::parse(ln, col, format!("bad exponent `{}`", e)))?,
            None => 1,
        };
        exps[var_index] += exp;
    }
    Ok(AlgElem::monomial_exps(group.clone(), &exps))
}
