//! Dense complex matrices, row-major vectorization and the vec algebra.
//!
//! Index conventions are 0-based throughout: entry `(a, b)` of a matrix with
//! `q` columns lives at flat position `a * q + b`, so vectorization is a
//! reinterpretation of the storage rather than a copy.

use crate::error::{Error, Result};

pub type Complex64 = num_complex::Complex<f64>;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Outputs with at least this many entries use the rayon path when the
/// `parallel` feature is enabled. Each output entry is still filled by a fixed
/// sequential inner loop, so both paths produce bit-identical results.
#[cfg(feature = "parallel")]
const PAR_MIN_ENTRIES: usize = 1 << 12;

/// Fuse a row index and a column index into a single flat index.
///
/// This is the 0-based form of the 1-based bookkeeping rule `q(a-1)+b`; the
/// shift to 0-based indices removes the `b = 0` edge case of the 1-based
/// inverse.
pub fn index_fuse(a: usize, b: usize, q: usize) -> Result<usize> {
    if b >= q {
        return Err(Error::InvalidArgument(format!(
            "column index {b} out of range for {q} columns"
        )));
    }
    Ok(a * q + b)
}

/// Split a flat index back into `(row, column)`; inverse of [`index_fuse`].
pub fn index_split(alpha: usize, q: usize) -> Result<(usize, usize)> {
    if q == 0 {
        return Err(Error::InvalidArgument(
            "column count must be positive".into(),
        ));
    }
    Ok((alpha / q, alpha % q))
}

/// Which tensor factor survives a partial trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    First,
    Second,
}

/// Dense rectangular complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Complex64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidArgument(
                "matrix dimensions must be positive".into(),
            ));
        }
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Complex64::ZERO; rows * cols],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim, dim);
        for i in 0..dim {
            m.entries[i * dim + i] = Complex64::ONE;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for a in 0..rows {
            for b in 0..cols {
                entries.push(f(a, b));
            }
        }
        Self {
            rows,
            cols,
            entries,
        }
    }

    /// Matrix unit `E_a^b`: a single 1 at entry `(a, b)`.
    pub fn matrix_unit(rows: usize, cols: usize, a: usize, b: usize) -> Self {
        let mut m = Self::zeros(rows, cols);
        m.entries[a * cols + b] = Complex64::ONE;
        m
    }

    /// Builds a matrix from `(re, im)` pairs in row-major order.
    pub fn from_re_im(rows: usize, cols: usize, pairs: &[(f64, f64)]) -> Result<Self> {
        Self::new(
            rows,
            cols,
            pairs.iter().map(|&(re, im)| Complex64::new(re, im)).collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> Complex64 {
        self.entries[a * self.cols + b]
    }

    #[inline]
    pub fn set(&mut self, a: usize, b: usize, value: Complex64) {
        self.entries[a * self.cols + b] = value;
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other, "add")?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(x, y)| x + y)
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other, "sub")?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(x, y)| x - y)
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * factor).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |a, b| self.get(b, a))
    }

    pub fn conjugate(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x.conj()).collect(),
        }
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |a, b| self.get(b, a).conj())
    }

    /// Sum of diagonal entries. Meaningful for square matrices.
    pub fn trace(&self) -> Complex64 {
        let n = self.rows.min(self.cols);
        let mut sum = Complex64::ZERO;
        for i in 0..n {
            sum += self.entries[i * self.cols + i];
        }
        sum
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let (m, k, n) = (self.rows, self.cols, other.cols);
        let mut entries = vec![Complex64::ZERO; m * n];
        let fill_row = |i: usize, row: &mut [Complex64]| {
            for kk in 0..k {
                let a = self.entries[i * k + kk];
                let b_row = &other.entries[kk * n..(kk + 1) * n];
                for (out, b) in row.iter_mut().zip(b_row) {
                    *out += a * b;
                }
            }
        };
        fill_chunks(&mut entries, n, fill_row);
        Ok(Self {
            rows: m,
            cols: n,
            entries,
        })
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} matrix applied to length-{} vector",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = Vec::with_capacity(self.rows);
        for a in 0..self.rows {
            let mut sum = Complex64::ZERO;
            for (x, y) in self.entries[a * self.cols..(a + 1) * self.cols].iter().zip(v) {
                sum += x * y;
            }
            out.push(sum);
        }
        Ok(out)
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|x| x.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        self.check_same_shape(other, "max_abs_diff")?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max))
    }

    /// Max-abs deviation from the adjoint; infinite for rectangular matrices.
    pub fn hermiticity_deviation(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let mut dev: f64 = 0.0;
        for a in 0..self.rows {
            for b in a..self.cols {
                dev = dev.max((self.get(a, b) - self.get(b, a).conj()).norm());
            }
        }
        dev
    }

    /// `(M + M^dag) / 2`.
    pub fn hermitized(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch(
                "cannot symmetrize a rectangular matrix".into(),
            ));
        }
        Ok(Self::from_fn(self.rows, self.cols, |a, b| {
            (self.get(a, b) + self.get(b, a).conj()) * 0.5
        }))
    }

    /// Row-stacking vectorization; clones the storage.
    pub fn vectorize(&self) -> VecOperator {
        VecOperator {
            src_rows: self.rows,
            src_cols: self.cols,
            entries: self.entries.clone(),
        }
    }

    /// Zero-copy vectorization: the row-major storage already is `vec(M)`.
    pub fn into_vectorized(self) -> VecOperator {
        VecOperator {
            src_rows: self.rows,
            src_cols: self.cols,
            entries: self.entries,
        }
    }

    fn check_same_shape(&self, other: &Self, op: &str) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "{op}: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }
}

/// A vectorized matrix: `vec(M)` tagged with the shape of `M` so that
/// devectorization is total and exact.
#[derive(Debug, Clone, PartialEq)]
pub struct VecOperator {
    src_rows: usize,
    src_cols: usize,
    entries: Vec<Complex64>,
}

impl VecOperator {
    pub fn new(src_rows: usize, src_cols: usize, entries: Vec<Complex64>) -> Result<Self> {
        if src_rows == 0 || src_cols == 0 {
            return Err(Error::InvalidArgument(
                "source dimensions must be positive".into(),
            ));
        }
        if entries.len() != src_rows * src_cols {
            return Err(Error::ShapeMismatch(format!(
                "shape ({src_rows}, {src_cols}) inconsistent with vector length {}",
                entries.len()
            )));
        }
        Ok(Self {
            src_rows,
            src_cols,
            entries,
        })
    }

    pub fn src_rows(&self) -> usize {
        self.src_rows
    }

    pub fn src_cols(&self) -> usize {
        self.src_cols
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.entries
    }

    /// Devectorization: restores the matrix form exactly.
    pub fn to_matrix(&self) -> ComplexMatrix {
        ComplexMatrix {
            rows: self.src_rows,
            cols: self.src_cols,
            entries: self.entries.clone(),
        }
    }

    /// Zero-copy devectorization.
    pub fn into_matrix(self) -> ComplexMatrix {
        ComplexMatrix {
            rows: self.src_rows,
            cols: self.src_cols,
            entries: self.entries,
        }
    }

    /// `v^dag w`, the ordinary inner product of vectorized matrices.
    pub fn inner(&self, other: &Self) -> Result<Complex64> {
        if self.len() != other.len() {
            return Err(Error::ShapeMismatch(format!(
                "inner product of lengths {} and {}",
                self.len(),
                other.len()
            )));
        }
        let mut sum = Complex64::ZERO;
        for (x, y) in self.entries.iter().zip(&other.entries) {
            sum += x.conj() * y;
        }
        Ok(sum)
    }

    /// Outer product `v w^dag` as a dense matrix.
    pub fn outer(&self, other: &Self) -> ComplexMatrix {
        let rows = self.len();
        let cols = other.len();
        let mut entries = Vec::with_capacity(rows * cols);
        for x in &self.entries {
            for y in &other.entries {
                entries.push(x * y.conj());
            }
        }
        ComplexMatrix {
            rows,
            cols,
            entries,
        }
    }
}

/// Hilbert-Schmidt inner product `tr(A^dag B)`, equal to
/// `vec(A)^dag vec(B)`. Summation order is fixed (row-major).
pub fn hs_inner(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<Complex64> {
    if a.rows != b.rows || a.cols != b.cols {
        return Err(Error::ShapeMismatch(format!(
            "hs_inner: {}x{} vs {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    let mut sum = Complex64::ZERO;
    for (x, y) in a.entries.iter().zip(&b.entries) {
        sum += x.conj() * y;
    }
    Ok(sum)
}

/// Kronecker product with lexicographic index fusion: row `(a1, a2)` of the
/// result maps to `a1 * b.rows() + a2`, matching the vectorization convention.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let rows = a.rows * b.rows;
    let cols = a.cols * b.cols;
    let mut entries = vec![Complex64::ZERO; rows * cols];
    let fill_row = |r: usize, row: &mut [Complex64]| {
        let a1 = r / b.rows;
        let a2 = r % b.rows;
        for b1 in 0..a.cols {
            let av = a.entries[a1 * a.cols + b1];
            let out = &mut row[b1 * b.cols..(b1 + 1) * b.cols];
            let b_row = &b.entries[a2 * b.cols..(a2 + 1) * b.cols];
            for (o, bv) in out.iter_mut().zip(b_row) {
                *o = av * bv;
            }
        }
    };
    fill_chunks(&mut entries, cols, fill_row);
    ComplexMatrix {
        rows,
        cols,
        entries,
    }
}

/// Kronecker product of flat vectors.
pub fn kron_vec(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x * y);
        }
    }
    out
}

/// `A (x) I_r`: the matrix realizing left multiplication on vectorized
/// operands, `(A (x) I_r) vec(B) = vec(A B)` for any `q x r` matrix `B`.
pub fn left_action(a: &ComplexMatrix, r: usize) -> ComplexMatrix {
    kron(a, &ComplexMatrix::identity(r))
}

/// `I_p (x) B^T`: right multiplication on vectorized operands,
/// `(I_p (x) B^T) vec(A) = vec(A B)` for any `p x q` matrix `A`.
pub fn right_action(b: &ComplexMatrix, p: usize) -> ComplexMatrix {
    kron(&ComplexMatrix::identity(p), &b.transpose())
}

/// Triple product via the vectorization identity:
/// `vec(A X B) = (A (x) B^T) vec(X)`.
///
/// Evaluated literally through the Kronecker form so tests can compare it
/// against a plain double matrix multiply.
pub fn vec_triple(
    a: &ComplexMatrix,
    x: &ComplexMatrix,
    b: &ComplexMatrix,
) -> Result<VecOperator> {
    if a.cols != x.rows || x.cols != b.rows {
        return Err(Error::ShapeMismatch(format!(
            "vec_triple: ({}x{}) ({}x{}) ({}x{})",
            a.rows, a.cols, x.rows, x.cols, b.rows, b.cols
        )));
    }
    let op = kron(a, &b.transpose());
    let out = op.mul_vec(x.entries())?;
    VecOperator::new(a.rows, b.cols, out)
}

/// Partial trace of an operator on a `d1 (x) d2` space.
pub fn partial_trace(
    tau: &ComplexMatrix,
    d1: usize,
    d2: usize,
    keep: Subsystem,
) -> Result<ComplexMatrix> {
    let d = d1 * d2;
    if tau.rows != d || tau.cols != d {
        return Err(Error::ShapeMismatch(format!(
            "partial trace of {}x{} matrix with factors {}x{}",
            tau.rows, tau.cols, d1, d2
        )));
    }
    match keep {
        Subsystem::First => {
            let mut out = ComplexMatrix::zeros(d1, d1);
            for a1 in 0..d1 {
                for b1 in 0..d1 {
                    let mut sum = Complex64::ZERO;
                    for a2 in 0..d2 {
                        sum += tau.get(a1 * d2 + a2, b1 * d2 + a2);
                    }
                    out.set(a1, b1, sum);
                }
            }
            Ok(out)
        }
        Subsystem::Second => {
            let mut out = ComplexMatrix::zeros(d2, d2);
            for a2 in 0..d2 {
                for b2 in 0..d2 {
                    let mut sum = Complex64::ZERO;
                    for a1 in 0..d1 {
                        sum += tau.get(a1 * d2 + a2, a1 * d2 + b2);
                    }
                    out.set(a2, b2, sum);
                }
            }
            Ok(out)
        }
    }
}

/// Fills `entries` chunk by chunk, in parallel when the `parallel` feature is
/// on and the output is large enough. The per-chunk closure is shared by both
/// paths, so they produce identical bits.
fn fill_chunks<F>(entries: &mut [Complex64], chunk: usize, fill_row: F)
where
    F: Fn(usize, &mut [Complex64]) + Sync,
{
    #[cfg(feature = "parallel")]
    if entries.len() >= PAR_MIN_ENTRIES {
        entries
            .par_chunks_mut(chunk)
            .enumerate()
            .for_each(|(i, row)| fill_row(i, row));
        return;
    }
    for (i, row) in entries.chunks_mut(chunk).enumerate() {
        fill_row(i, row);
    }
}
