//! Dense linear algebra over a prime field `F_p`.
//!
//! Elimination follows a fixed pivot rule (first nonzero entry, scanning
//! top-to-bottom, in the leftmost unsolved column) so every result here is
//! deterministic. Entries are stored reduced in `[0, p)`; row operations run
//! on unreduced `u64` accumulators and are reduced lazily before they could
//! overflow.

use std::fmt;

use crate::error::{Error, Result};

/// The prime field `F_p` for an odd prime `p < 2^31`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl fmt::Debug for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p <= 2 || p >= (1 << 31) {
            if p >= 2 && !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            return Err(Error::ModulusOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (if s >= self.p as u64 { s - self.p as u64 } else { s }) as u32
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + (self.p - b)
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(&self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1u32;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero in {:?}", self);
        self.pow(a, self.p as u64 - 2)
    }

    /// Signed representative in `(-p/2, p/2]`, used for display.
    pub fn centered(&self, a: u32) -> i64 {
        let a = a as i64;
        let p = self.p as i64;
        if a > p / 2 {
            a - p
        } else {
            a
        }
    }

    /// Largest number of `x += f * y` updates (with `f, y < p`) a `u64`
    /// accumulator holding a value `< p` can absorb without overflow.
    fn lazy_budget(&self) -> u64 {
        let q = (self.p as u64 - 1) * (self.p as u64 - 1);
        (u64::MAX - self.p as u64) / q
    }
}

/// A dense matrix over `F_p`, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct FpMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FpMatrix {}x{} over {:?}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl FpMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        FpMatrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from signed integer rows, reducing every entry mod p.
    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(field, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {} has {} entries, expected {}",
                    i,
                    row.len(),
                    cols
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                m.data[i * cols + j] = field.from_i64(v);
            }
        }
        Ok(m)
    }

    /// Builds a matrix whose columns are the given (reduced) vectors.
    pub fn from_columns(field: PrimeField, nrows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Self::zeros(field, nrows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            debug_assert_eq!(c.len(), nrows);
            for (i, &v) in c.iter().enumerate() {
                m.data[i * m.cols + j] = v;
            }
        }
        m
    }

    pub fn from_row_vectors(field: PrimeField, ncols: usize, rows: &[Vec<u32>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * ncols);
        for r in rows {
            debug_assert_eq!(r.len(), ncols);
            data.extend_from_slice(r);
        }
        FpMatrix { field, rows: rows.len(), cols: ncols, data }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        debug_assert!(v < self.field.p);
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u32>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    pub fn mul(&self, other: &FpMatrix) -> Result<FpMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.p, other.field.p));
        }
        let p = self.field.p as u64;
        let budget = self.field.lazy_budget();
        let mut out = Self::zeros(self.field, self.rows, other.cols);
        let mut acc = vec![0u64; other.cols];
        for r in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            let mut pending = 0u64;
            for k in 0..self.cols {
                let a = self.data[r * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let orow = other.row(k);
                for (x, &y) in acc.iter_mut().zip(orow) {
                    *x += a * y as u64;
                }
                pending += 1;
                if pending >= budget {
                    acc.iter_mut().for_each(|x| *x %= p);
                    pending = 0;
                }
            }
            for (c, &x) in acc.iter().enumerate() {
                out.data[r * other.cols + c] = (x % p) as u32;
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[u32]) -> Result<Vec<u32>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let p = self.field.p as u64;
        Ok((0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let mut acc = 0u64;
                for (&a, &b) in row.iter().zip(v) {
                    acc = (acc + a as u64 * b as u64) % p;
                }
                acc as u32
            })
            .collect())
    }

    pub fn add(&self, other: &FpMatrix) -> Result<FpMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("matrix sum".into()));
        }
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Ok(FpMatrix { field: f, rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, s: u32) -> FpMatrix {
        let f = self.field;
        FpMatrix { field: f, rows: self.rows, cols: self.cols, data: self.data.iter().map(|&a| f.mul(a, s)).collect() }
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &FpMatrix) -> Result<FpMatrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!("hstack of {} and {} rows", self.rows, other.rows)));
        }
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(other.row(r));
        }
        Ok(FpMatrix { field: self.field, rows: self.rows, cols, data })
    }

    pub fn select_columns(&self, idx: &[usize]) -> FpMatrix {
        let mut m = Self::zeros(self.field, self.rows, idx.len());
        for r in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                m.data[r * idx.len() + j] = self.get(r, c);
            }
        }
        m
    }

    /// Reduced row echelon form and the pivot columns, in increasing order.
    pub fn rref(&self) -> (FpMatrix, Vec<usize>) {
        let mut work = Elimination::new(self);
        work.run(true);
        work.finish()
    }

    pub fn rank(&self) -> usize {
        let mut work = Elimination::new(self);
        work.run(false);
        work.pivots.len()
    }

    /// Columns form a basis of the right kernel `{v : M v = 0}`.
    pub fn kernel_basis(&self) -> FpMatrix {
        let (r, pivots) = self.rref();
        let f = self.field;
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut k = Self::zeros(f, self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            k.data[fc * free.len() + j] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                k.data[pc * free.len() + j] = f.neg(r.get(i, fc));
            }
        }
        k
    }

    /// Some `x` with `M x = b`, or `None` when `b` lies outside the column space.
    pub fn solve(&self, b: &[u32]) -> Result<Option<Vec<u32>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        let aug = self.hstack(&FpMatrix::from_columns(self.field, self.rows, &[b.to_vec()]))?;
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![0u32; self.cols];
        for (i, &c) in pivots.iter().enumerate() {
            x[c] = r.get(i, self.cols);
        }
        Ok(Some(x))
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<FpMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&FpMatrix::identity(self.field, n)).ok()?;
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let idx: Vec<usize> = (n..2 * n).collect();
        Some(r.select_columns(&idx))
    }

    /// A basis of the column space: the pivot columns of `self`.
    pub fn column_space(&self) -> FpMatrix {
        let (_, pivots) = self.rref();
        self.select_columns(&pivots)
    }
}

/// Basis matrix (columns) of `col(A) ∩ col(B)`.
pub fn intersect_subspaces(a: &FpMatrix, b: &FpMatrix) -> Result<FpMatrix> {
    if a.rows != b.rows {
        return Err(Error::DimensionMismatch(format!("subspaces of F^{} and F^{}", a.rows, b.rows)));
    }
    let a = a.column_space();
    let b = b.column_space();
    // a x = b y  <=>  [a | -b] (x, y) = 0
    let stacked = a.hstack(&b.scale(a.field.neg(1)))?;
    let ker = stacked.kernel_basis();
    let xs: Vec<usize> = (0..a.cols).collect();
    let coeffs = ker.transpose().select_columns(&xs).transpose();
    let span = a.mul(&coeffs)?;
    Ok(span.column_space())
}

struct Elimination {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
    pending: Vec<u64>,
    pivots: Vec<usize>,
}

impl Elimination {
    fn new(m: &FpMatrix) -> Self {
        Elimination {
            field: m.field,
            rows: m.rows,
            cols: m.cols,
            data: m.data.iter().map(|&v| v as u64).collect(),
            pending: vec![0; m.rows],
            pivots: Vec::new(),
        }
    }

    fn reduce_row(&mut self, r: usize, from: usize) {
        let p = self.field.p as u64;
        for x in &mut self.data[r * self.cols + from..(r + 1) * self.cols] {
            *x %= p;
        }
        self.pending[r] = 0;
    }

    /// Gauss(-Jordan) elimination in place. With `full`, entries above each
    /// pivot are cleared as well.
    fn run(&mut self, full: bool) {
        let p = self.field.p as u64;
        let budget = self.field.lazy_budget();
        let cols = self.cols;
        let mut cur = 0usize;
        for col in 0..cols {
            if cur == self.rows {
                break;
            }
            let mut found = None;
            for r in cur..self.rows {
                let v = &mut self.data[r * cols + col];
                *v %= p;
                if *v != 0 {
                    found = Some(r);
                    break;
                }
            }
            let Some(pr) = found else { continue };
            if pr != cur {
                for c in col..cols {
                    self.data.swap(pr * cols + c, cur * cols + c);
                }
                self.pending.swap(pr, cur);
            }
            self.reduce_row(cur, col);
            let inv = self.field.inv(self.data[cur * cols + col] as u32) as u64;
            if inv != 1 {
                for x in &mut self.data[cur * cols + col..(cur + 1) * cols] {
                    *x = *x * inv % p;
                }
            }
            let start = if full { 0 } else { cur + 1 };
            let (head, tail) = self.data.split_at_mut(cur * cols);
            let (pivot_row, rest) = tail.split_at_mut(cols);
            let pivot_slice = &pivot_row[col..];
            for r in start..self.rows {
                if r == cur {
                    continue;
                }
                let row = if r < cur {
                    &mut head[r * cols..(r + 1) * cols]
                } else {
                    let off = (r - cur - 1) * cols;
                    &mut rest[off..off + cols]
                };
                let f = row[col] % p;
                if f == 0 {
                    row[col] = 0;
                    continue;
                }
                let g = p - f;
                for (x, &y) in row[col..].iter_mut().zip(pivot_slice) {
                    *x += g * y;
                }
                self.pending[r] += 1;
                if self.pending[r] >= budget {
                    for x in row[col..].iter_mut() {
                        *x %= p;
                    }
                    self.pending[r] = 0;
                }
            }
            self.pivots.push(col);
            cur += 1;
        }
    }

    fn finish(self) -> (FpMatrix, Vec<usize>) {
        let p = self.field.p as u64;
        let data = self.data.iter().map(|&x| (x % p) as u32).collect();
        (FpMatrix { field: self.field, rows: self.rows, cols: self.cols, data }, self.pivots)
    }
}

/// Incrementally built echelon basis of a subspace of `F_p^dim`.
///
/// Every stored vector is normalized to 1 at its pivot and vanishes at the
/// pivots of all vectors stored before it, so reducing a vector against the
/// basis in insertion order clears every pivot position.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    field: PrimeField,
    dim: usize,
    vectors: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(field: PrimeField, dim: usize) -> Self {
        EchelonBasis { field, dim, vectors: Vec::new(), pivots: Vec::new() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<u32>] {
        &self.vectors
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` in place against the basis and returns whether anything
    /// survived.
    pub fn reduce(&self, v: &mut [u32]) -> bool {
        let p = self.field.p as u64;
        for (b, &piv) in self.vectors.iter().zip(&self.pivots) {
            let f = v[piv];
            if f == 0 {
                continue;
            }
            let g = p - f as u64;
            for (x, &y) in v[piv..].iter_mut().zip(&b[piv..]) {
                if y != 0 {
                    *x = ((*x as u64 + g * y as u64) % p) as u32;
                }
            }
        }
        v.iter().any(|&x| x != 0)
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        !self.reduce(&mut w)
    }

    /// Adds `v` to the span; returns `true` when the dimension grew.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        debug_assert_eq!(v.len(), self.dim);
        let mut w = v.to_vec();
        if !self.reduce(&mut w) {
            return false;
        }
        let piv = w.iter().position(|&x| x != 0).unwrap();
        let inv = self.field.inv(w[piv]);
        if inv != 1 {
            for x in &mut w[piv..] {
                *x = self.field.mul(*x, inv);
            }
        }
        self.vectors.push(w);
        self.pivots.push(piv);
        true
    }

    /// Basis as the columns of a matrix.
    pub fn to_matrix(&self) -> FpMatrix {
        FpMatrix::from_columns(self.field, self.dim, &self.vectors)
    }
}

/// Basis (as columns) of the subspace spanned by the given vectors.
pub fn span_basis(field: PrimeField, dim: usize, vectors: &[Vec<u32>]) -> FpMatrix {
    let mut e = EchelonBasis::new(field, dim);
    for v in vectors {
        e.insert(v);
    }
    e.to_matrix()
}

/// `true` when the column spans of `a` and `b` coincide.
pub fn same_span(a: &FpMatrix, b: &FpMatrix) -> bool {
    if a.rows != b.rows {
        return false;
    }
    let ra = a.rank();
    ra == b.rank() && a.hstack(b).map(|m| m.rank() == ra).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f5() -> PrimeField {
        PrimeField::new(5).unwrap()
    }

    fn mat(rows: &[Vec<i64>]) -> FpMatrix {
        FpMatrix::from_rows(f5(), rows).unwrap()
    }

    #[test]
    fn field_construction() {
        assert!(PrimeField::new(101).is_ok());
        assert_eq!(PrimeField::new(4), Err(Error::NotPrime(4)));
        assert_eq!(PrimeField::new(2), Err(Error::ModulusOutOfRange(2)));
        assert!(PrimeField::new(2147483647).is_ok());
        assert!(PrimeField::new(1 << 31).is_err());
        assert!(PrimeField::new(2147483629).is_ok());
        let f = f5();
        assert_eq!(f.mul(f.inv(3), 3), 1);
        assert_eq!(f.from_i64(-1), 4);
    }

    #[test]
    fn rref_examples() {
        let id = FpMatrix::identity(f5(), 2);
        assert_eq!(id.rref(), (id.clone(), vec![0, 1]));
        let z = FpMatrix::zeros(f5(), 2, 2);
        assert_eq!(z.rref(), (z.clone(), vec![]));
        let m = mat(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(m.rref(), (mat(&[vec![1, 2], vec![0, 0]]), vec![0]));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(FpMatrix::identity(f5(), 2).kernel_basis().cols(), 0);
        let k = FpMatrix::zeros(f5(), 2, 3).kernel_basis();
        assert_eq!(k.cols(), 3);
        assert_eq!(k.rank(), 3);
        let k = mat(&[vec![1, 2]]).kernel_basis();
        assert_eq!(k.cols(), 1);
        assert_eq!(k.column(0), vec![3, 1]);
    }

    #[test]
    fn solve_examples() {
        let id = FpMatrix::identity(f5(), 2);
        assert_eq!(id.solve(&[3, 4]).unwrap(), Some(vec![3, 4]));
        let z = FpMatrix::zeros(f5(), 2, 2);
        assert_eq!(z.solve(&[1, 0]).unwrap(), None);
        let m = mat(&[vec![1, 2], vec![2, 4]]);
        let x = m.solve(&[1, 2]).unwrap().unwrap();
        assert_eq!(f5().add(x[0], f5().mul(2, x[1])), 1);
        assert!(m.solve(&[1]).is_err());
    }

    #[test]
    fn intersection_examples() {
        let a = mat(&[vec![1, 0], vec![1, 0], vec![0, 1]]);
        assert!(same_span(&intersect_subspaces(&a, &a).unwrap(), &a));
        let e1 = mat(&[vec![1], vec![0], vec![0]]);
        let e23 = mat(&[vec![0, 0], vec![1, 0], vec![0, 1]]);
        assert_eq!(intersect_subspaces(&e1, &e23).unwrap().cols(), 0);
        let b = mat(&[vec![1], vec![1], vec![1]]);
        let i = intersect_subspaces(&a, &b).unwrap();
        assert!(same_span(&i, &b));
        assert!(intersect_subspaces(&a, &mat(&[vec![1], vec![1]])).is_err());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = mat(&[vec![1, 2], vec![3, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), FpMatrix::identity(f5(), 2));
        assert!(mat(&[vec![1, 2], vec![2, 4]]).inverse().is_none());
    }

    #[test]
    fn lazy_reduction_large_prime() {
        // Forces many pending updates near the overflow budget.
        let f = PrimeField::new(2147483629).unwrap();
        let n = 12;
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| ((i * 7919 + j * 104729) % 2147483629) as i64 - 1_000_000_000).collect())
            .collect();
        let m = FpMatrix::from_rows(f, &rows).unwrap();
        let k = m.kernel_basis();
        assert!(m.mul(&k).unwrap().is_zero());
        assert_eq!(m.rank() + k.cols(), n);
    }

    fn arb_matrix() -> impl Strategy<Value = (Vec<Vec<i64>>, u64)> {
        (1usize..7, 1usize..7, prop::sample::select(vec![3u64, 5, 7, 101]))
            .prop_flat_map(|(r, c, p)| (prop::collection::vec(prop::collection::vec(0i64..(p as i64), c), r), Just(p)))
    }

    proptest! {
        #[test]
        fn rank_nullity((rows, p) in arb_matrix()) {
            let m = FpMatrix::from_rows(PrimeField::new(p).unwrap(), &rows).unwrap();
            let k = m.kernel_basis();
            prop_assert_eq!(m.rank() + k.cols(), m.cols());
            prop_assert!(m.mul(&k).unwrap().is_zero());
            prop_assert_eq!(k.rank(), k.cols());
        }

        #[test]
        fn rref_idempotent((rows, p) in arb_matrix()) {
            let m = FpMatrix::from_rows(PrimeField::new(p).unwrap(), &rows).unwrap();
            let (r, piv) = m.rref();
            let (r2, piv2) = r.rref();
            prop_assert_eq!(&r, &r2);
            prop_assert_eq!(piv, piv2);
            prop_assert!(same_span(&m.transpose(), &r.transpose()));
        }

        #[test]
        fn echelon_matches_rank((rows, p) in arb_matrix()) {
            let f = PrimeField::new(p).unwrap();
            let m = FpMatrix::from_rows(f, &rows).unwrap();
            let cols = m.columns();
            let mut e = EchelonBasis::new(f, m.rows());
            for c in &cols {
                e.insert(c);
            }
            prop_assert_eq!(e.len(), m.rank());
            for c in &cols {
                prop_assert!(e.contains(c));
            }
        }
    }
}
