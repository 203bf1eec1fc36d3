//! SWAP and reshuffling permutations on fused tensor indices.
//!
//! Permutations are stored as index maps and applied in O(n); the explicit
//! permutation matrix is materialized only on request. The application
//! convention is `out[perm(i)] = in[i]`, and [`Permutation::to_matrix`]
//! realizes the same action as a matrix, so multiplying by the matrix and
//! applying the map agree entry for entry.

use crate::error::{Error, Result};
use crate::veclib::matrix::{Complex64, ComplexMatrix};

/// A bijection on `{0, ..., n-1}` applied as `out[map[i]] = in[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            map: (0..n).collect(),
        }
    }

    pub fn from_map(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &j in &map {
            if j >= n || seen[j] {
                return Err(Error::InvalidArgument(
                    "index map is not a bijection".into(),
                ));
            }
            seen[j] = true;
        }
        Ok(Self { map })
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.map.len()];
        for (i, &j) in self.map.iter().enumerate() {
            inv[j] = i;
        }
        Self { map: inv }
    }

    /// Applies the permutation: `out[map[i]] = in[i]`.
    pub fn apply<T: Copy + Default>(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.map.len() {
            return Err(Error::ShapeMismatch(format!(
                "permutation on {} indices applied to length-{} vector",
                self.map.len(),
                v.len()
            )));
        }
        let mut out = vec![T::default(); v.len()];
        for (i, &j) in self.map.iter().enumerate() {
            out[j] = v[i];
        }
        Ok(out)
    }

    /// Applies the inverse permutation: `out[i] = in[map[i]]`.
    pub fn apply_inverse<T: Copy + Default>(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.map.len() {
            return Err(Error::ShapeMismatch(format!(
                "permutation on {} indices applied to length-{} vector",
                self.map.len(),
                v.len()
            )));
        }
        Ok(self.map.iter().map(|&j| v[j]).collect())
    }

    /// Explicit permutation matrix `P` with `P v = apply(v)`, i.e. column `i`
    /// is `e_{map[i]}`.
    pub fn to_matrix(&self) -> ComplexMatrix {
        let n = self.map.len();
        let mut m = ComplexMatrix::zeros(n, n);
        for (i, &j) in self.map.iter().enumerate() {
            m.set(j, i, Complex64::ONE);
        }
        m
    }

    /// Conjugation `P X P^{-1}`, computed without materializing `P`.
    pub fn conjugate(&self, x: &ComplexMatrix) -> Result<ComplexMatrix> {
        let n = self.map.len();
        if x.rows() != n || x.cols() != n {
            return Err(Error::ShapeMismatch(format!(
                "permutation on {} indices conjugating {}x{} matrix",
                n,
                x.rows(),
                x.cols()
            )));
        }
        let mut out = ComplexMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(self.map[i], self.map[j], x.get(i, j));
            }
        }
        Ok(out)
    }
}

/// SWAP of the two factors of a tensor product: applied to `u (x) w` with
/// `dim(u) = r` and `dim(w) = p`, it produces `w (x) u`.
///
/// As a matrix it satisfies `S(r,p)^T = S(r,p)^{-1} = S(p,r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwapSpec {
    r: usize,
    p: usize,
    perm: Permutation,
}

impl SwapSpec {
    pub fn new(r: usize, p: usize) -> Result<Self> {
        if r == 0 || p == 0 {
            return Err(Error::InvalidArgument(
                "swap dimensions must be positive".into(),
            ));
        }
        let mut map = vec![0; r * p];
        for c1 in 0..r {
            for c2 in 0..p {
                map[c1 * p + c2] = c2 * r + c1;
            }
        }
        Ok(Self {
            r,
            p,
            perm: Permutation { map },
        })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.r * self.p
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn apply(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        self.perm.apply(v)
    }

    pub fn to_matrix(&self) -> ComplexMatrix {
        self.perm.to_matrix()
    }
}

/// Reshuffling of fused indices: relates `vec(M) (x) vec(N)` to
/// `vec(M (x) N)` for `M` of size `p x q` and `N` of size `r x s`.
///
/// The underlying map swaps the middle two of the four concatenated indices
/// `(a1, b1, a2, b2) -> (a1, a2, b1, b2)`, which is the fused-index action of
/// `I_p (x) SWAP (x) I_s` on the `q * r` middle block. When `p = q = r = s`
/// the permutation is an involution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReshuffleSpec {
    p: usize,
    q: usize,
    r: usize,
    s: usize,
    perm: Permutation,
}

impl ReshuffleSpec {
    pub fn new(p: usize, q: usize, r: usize, s: usize) -> Result<Self> {
        if p == 0 || q == 0 || r == 0 || s == 0 {
            return Err(Error::InvalidArgument(
                "reshuffle dimensions must be positive".into(),
            ));
        }
        let mut map = vec![0; p * q * r * s];
        for a1 in 0..p {
            for b1 in 0..q {
                for a2 in 0..r {
                    for b2 in 0..s {
                        let from = ((a1 * q + b1) * r + a2) * s + b2;
                        let to = ((a1 * r + a2) * q + b1) * s + b2;
                        map[from] = to;
                    }
                }
            }
        }
        Ok(Self {
            p,
            q,
            r,
            s,
            perm: Permutation { map },
        })
    }

    /// Reshuffler for a `d`-dimensional channel: relates the vectorized Choi
    /// matrix to the superoperator. Self-inverse.
    pub fn square(d: usize) -> Result<Self> {
        Self::new(d, d, d, d)
    }

    pub fn dims(&self) -> (usize, usize, usize, usize) {
        (self.p, self.q, self.r, self.s)
    }

    pub fn dim(&self) -> usize {
        self.p * self.q * self.r * self.s
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn apply(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        self.perm.apply(v)
    }

    pub fn apply_inverse(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        self.perm.apply_inverse(v)
    }

    pub fn to_matrix(&self) -> ComplexMatrix {
        self.perm.to_matrix()
    }

    /// Conjugation `R X R^{-1}`.
    pub fn conjugate(&self, x: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.perm.conjugate(x)
    }
}
