//! Dense numerical kernels: Hermitian eigendecomposition (cyclic Jacobi with
//! complex rotations), LU solves with partial pivoting, condition numbers and
//! pseudo-inverses.
//!
//! Everything here is deterministic: fixed sweep order, fixed pivot tie
//! breaking, fixed summation order.

use crate::error::{Error, Result};
use crate::veclib::{Complex64, ComplexMatrix};

const MAX_JACOBI_SWEEPS: usize = 64;

/// Eigendecomposition of a Hermitian matrix.
///
/// Eigenvalues are real and sorted in descending order; `eigenvectors` holds
/// the matching orthonormal eigenvectors as columns.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
}

/// Cyclic Jacobi eigendecomposition for Hermitian matrices.
///
/// The caller is responsible for Hermiticity; only the upper triangle and the
/// real parts of the diagonal are read.
pub fn hermitian_eigen(m: &ComplexMatrix) -> Result<HermitianEigen> {
    if !m.is_square() {
        return Err(Error::ShapeMismatch(format!(
            "eigendecomposition of {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    let mut a = m.clone();
    let mut v = ComplexMatrix::identity(n);

    let scale = frobenius(&a).max(f64::MIN_POSITIVE);
    let stop = 1e-14 * scale;

    for _ in 0..MAX_JACOBI_SWEEPS {
        let mut off: f64 = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off = off.max(a.get(p, q).norm());
            }
        }
        if off <= stop {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a.get(j, j)
            .re
            .partial_cmp(&a.get(i, i).re)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(i.cmp(&j))
    });

    let eigenvalues: Vec<f64> = order.iter().map(|&i| a.get(i, i).re).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, n, |row, col| v.get(row, order[col]));
    Ok(HermitianEigen {
        eigenvalues,
        eigenvectors,
    })
}

/// One complex Jacobi rotation zeroing `a[p][q]`.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a.get(p, q);
    let mag = apq.norm();
    if mag == 0.0 {
        return;
    }
    let app = a.get(p, p).re;
    let aqq = a.get(q, q).re;
    // Phase factor turning the (p, q) block into a real symmetric one.
    let w = apq.conj() / mag;
    let tau = (aqq - app) / (2.0 * mag);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let sw = w * s;
    let cw = w * c;

    let n = a.rows();
    // Right multiplication by U: columns p and q of every row.
    for i in 0..n {
        let aip = a.get(i, p);
        let aiq = a.get(i, q);
        a.set(i, p, aip * c - aiq * sw);
        a.set(i, q, aip * s + aiq * cw);
    }
    // Left multiplication by U^dag: rows p and q of every column.
    for j in 0..n {
        let apj = a.get(p, j);
        let aqj = a.get(q, j);
        a.set(p, j, apj * c - aqj * sw.conj());
        a.set(q, j, apj * s + aqj * cw.conj());
    }
    // Restore exact Hermiticity of the rotated block.
    a.set(p, q, Complex64::ZERO);
    a.set(q, p, Complex64::ZERO);
    a.set(p, p, Complex64::new(app - t * mag, 0.0));
    a.set(q, q, Complex64::new(aqq + t * mag, 0.0));

    for i in 0..n {
        let vip = v.get(i, p);
        let viq = v.get(i, q);
        v.set(i, p, vip * c - viq * sw);
        v.set(i, q, vip * s + viq * cw);
    }
}

fn frobenius(m: &ComplexMatrix) -> f64 {
    m.entries()
        .iter()
        .map(|z| z.norm_sqr())
        .sum::<f64>()
        .sqrt()
}

/// LU factorization with partial pivoting.
struct Lu {
    n: usize,
    data: Vec<Complex64>,
    pivots: Vec<usize>,
}

fn lu_factor(a: &ComplexMatrix) -> Result<Lu> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch(format!(
            "LU factorization of {}x{} matrix",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    let mut data = a.entries().to_vec();
    let mut pivots = Vec::with_capacity(n);
    for k in 0..n {
        let mut best = k;
        let mut best_mag = data[k * n + k].norm();
        for i in (k + 1)..n {
            let mag = data[i * n + k].norm();
            if mag > best_mag {
                best = i;
                best_mag = mag;
            }
        }
        if best_mag == 0.0 {
            return Err(Error::Singular);
        }
        pivots.push(best);
        if best != k {
            for j in 0..n {
                data.swap(k * n + j, best * n + j);
            }
        }
        let pivot = data[k * n + k];
        for i in (k + 1)..n {
            let factor = data[i * n + k] / pivot;
            data[i * n + k] = factor;
            for j in (k + 1)..n {
                let delta = factor * data[k * n + j];
                data[i * n + j] -= delta;
            }
        }
    }
    Ok(Lu { n, data, pivots })
}

impl Lu {
    fn solve_in_place(&self, b: &mut [Complex64]) {
        let n = self.n;
        // The stored multipliers sit in final row positions, so every pivot
        // interchange must hit the right-hand side before elimination.
        for k in 0..n {
            b.swap(k, self.pivots[k]);
        }
        for k in 0..n {
            for i in (k + 1)..n {
                let delta = self.data[i * n + k] * b[k];
                b[i] -= delta;
            }
        }
        for k in (0..n).rev() {
            b[k] /= self.data[k * n + k];
            for i in 0..k {
                let delta = self.data[i * n + k] * b[k];
                b[i] -= delta;
            }
        }
    }
}

/// Solves `A X = B` column by column through one LU factorization.
pub fn solve(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    if a.rows() != b.rows() {
        return Err(Error::ShapeMismatch(format!(
            "solve: {}x{} system with {}x{} right-hand side",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    let lu = lu_factor(a)?;
    let n = a.rows();
    let mut out = ComplexMatrix::zeros(n, b.cols());
    let mut col = vec![Complex64::ZERO; n];
    for j in 0..b.cols() {
        for i in 0..n {
            col[i] = b.get(i, j);
        }
        lu.solve_in_place(&mut col);
        for i in 0..n {
            out.set(i, j, col[i]);
        }
    }
    Ok(out)
}

/// Solves `X A = B`, i.e. `X = B A^{-1}`, via the transposed system.
pub fn solve_right(b: &ComplexMatrix, a: &ComplexMatrix) -> Result<ComplexMatrix> {
    Ok(solve(&a.transpose(), &b.transpose())?.transpose())
}

pub fn solve_vec(a: &ComplexMatrix, v: &[Complex64]) -> Result<Vec<Complex64>> {
    if v.len() != a.rows() {
        return Err(Error::ShapeMismatch(format!(
            "solve: {}x{} system with length-{} right-hand side",
            a.rows(),
            a.cols(),
            v.len()
        )));
    }
    let lu = lu_factor(a)?;
    let mut out = v.to_vec();
    lu.solve_in_place(&mut out);
    Ok(out)
}

pub fn inverse(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    solve(a, &ComplexMatrix::identity(a.rows()))
}

/// Compact singular value decomposition `A = U diag(s) V^dag` with
/// `k = min(rows, cols)` columns in `U` and `V`.
#[derive(Debug, Clone)]
pub struct Svd {
    pub u: ComplexMatrix,
    pub singular_values: Vec<f64>,
    pub v: ComplexMatrix,
}

/// One-sided Jacobi SVD: rotates column pairs until mutually orthogonal.
///
/// Unlike the Gram-matrix route this resolves singular values down to
/// machine precision relative to the largest one, which the rank and
/// condition-number thresholds rely on.
pub fn svd(a: &ComplexMatrix) -> Result<Svd> {
    if a.rows() < a.cols() {
        let flipped = svd(&a.adjoint())?;
        return Ok(Svd {
            u: flipped.v,
            singular_values: flipped.singular_values,
            v: flipped.u,
        });
    }
    let m = a.rows();
    let n = a.cols();
    let mut w = a.clone();
    let mut v = ComplexMatrix::identity(n);

    for _ in 0..MAX_JACOBI_SWEEPS {
        let mut rotated = false;
        for i in 0..n {
            for j in (i + 1)..n {
                let mut alpha = 0.0;
                let mut beta = 0.0;
                let mut gamma = Complex64::ZERO;
                for row in 0..m {
                    let wi = w.get(row, i);
                    let wj = w.get(row, j);
                    alpha += wi.norm_sqr();
                    beta += wj.norm_sqr();
                    gamma += wi.conj() * wj;
                }
                let g = gamma.norm();
                if g == 0.0 || g <= f64::EPSILON * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let phase = gamma.conj() / g;
                let tau = (beta - alpha) / (2.0 * g);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let sp = phase * s;
                let cp = phase * c;
                for row in 0..m {
                    let wi = w.get(row, i);
                    let wj = w.get(row, j);
                    w.set(row, i, wi * c - wj * sp);
                    w.set(row, j, wi * s + wj * cp);
                }
                for row in 0..n {
                    let vi = v.get(row, i);
                    let vj = v.get(row, j);
                    v.set(row, i, vi * c - vj * sp);
                    v.set(row, j, vi * s + vj * cp);
                }
            }
        }
        if !rotated {
            break;
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    let norms: Vec<f64> = (0..n)
        .map(|j| {
            (0..m)
                .map(|i| w.get(i, j).norm_sqr())
                .sum::<f64>()
                .sqrt()
        })
        .collect();
    order.sort_by(|&i, &j| {
        norms[j]
            .partial_cmp(&norms[i])
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(i.cmp(&j))
    });
    let singular_values: Vec<f64> = order.iter().map(|&j| norms[j]).collect();
    let u = ComplexMatrix::from_fn(m, n, |i, col| {
        let j = order[col];
        if norms[j] > 0.0 {
            w.get(i, j) / norms[j]
        } else {
            Complex64::ZERO
        }
    });
    let v = ComplexMatrix::from_fn(n, n, |i, col| v.get(i, order[col]));
    Ok(Svd {
        u,
        singular_values,
        v,
    })
}

/// Singular values in descending order.
pub fn singular_values(a: &ComplexMatrix) -> Result<Vec<f64>> {
    Ok(svd(a)?.singular_values)
}

/// Two-norm condition number; infinite when the smallest singular value
/// underflows to zero.
pub fn condition_number(a: &ComplexMatrix) -> Result<f64> {
    let sv = singular_values(a)?;
    let max = sv[0];
    let min = sv[sv.len() - 1];
    if min == 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok(max / min)
}

/// Numerical rank: singular values above `rel_tol * sigma_max`.
pub fn rank(a: &ComplexMatrix, rel_tol: f64) -> Result<usize> {
    let sv = singular_values(a)?;
    let cutoff = rel_tol * sv[0];
    Ok(sv.iter().filter(|&&s| s > cutoff && s > 0.0).count())
}

/// Moore-Penrose pseudo-inverse; singular values below `rcond * sigma_max`
/// are treated as zero.
pub fn pseudo_inverse(a: &ComplexMatrix, rcond: f64) -> Result<ComplexMatrix> {
    let decomposition = svd(a)?;
    let sigma_max = decomposition.singular_values.first().copied().unwrap_or(0.0);
    if sigma_max == 0.0 {
        return Ok(ComplexMatrix::zeros(a.cols(), a.rows()));
    }
    let cutoff = rcond * sigma_max;
    let k = decomposition.singular_values.len();
    let mut out = ComplexMatrix::zeros(a.cols(), a.rows());
    for idx in 0..k {
        let sigma = decomposition.singular_values[idx];
        if sigma <= cutoff {
            continue;
        }
        let g = 1.0 / sigma;
        for i in 0..a.cols() {
            for j in 0..a.rows() {
                let add = decomposition.v.get(i, idx) * decomposition.u.get(j, idx).conj() * g;
                out.set(i, j, out.get(i, j) + add);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random;
    use rand::SeedableRng;
    use rand_chacha::ChaCha12Rng;

    fn random_hermitian(n: usize, rng: &mut ChaCha12Rng) -> ComplexMatrix {
        let g = random::gaussian_matrix(n, n, rng);
        g.add(&g.adjoint()).unwrap().scale(Complex64::new(0.5, 0.0))
    }

    #[test]
    fn jacobi_reconstructs_matrix() {
        let mut rng = ChaCha12Rng::seed_from_u64(7);
        for n in [1, 2, 3, 5, 9, 16] {
            let a = random_hermitian(n, &mut rng);
            let eig = hermitian_eigen(&a).unwrap();
            let v = &eig.eigenvectors;
            // V Lambda V^dag = A
            let lambda = ComplexMatrix::from_fn(n, n, |i, j| {
                if i == j {
                    Complex64::new(eig.eigenvalues[i], 0.0)
                } else {
                    Complex64::ZERO
                }
            });
            let rebuilt = v.matmul(&lambda).unwrap().matmul(&v.adjoint()).unwrap();
            assert!(rebuilt.max_abs_diff(&a).unwrap() < 1e-12 * (1.0 + a.max_abs()));
            // Orthonormal columns.
            let gram = v.adjoint().matmul(v).unwrap();
            assert!(gram.max_abs_diff(&ComplexMatrix::identity(n)).unwrap() < 1e-12);
            // Descending order.
            for w in eig.eigenvalues.windows(2) {
                assert!(w[0] >= w[1]);
            }
        }
    }

    #[test]
    fn jacobi_on_diagonal_matrix() {
        let d = ComplexMatrix::from_fn(3, 3, |i, j| {
            if i == j {
                Complex64::new([3.0, -1.0, 2.0][i], 0.0)
            } else {
                Complex64::ZERO
            }
        });
        let eig = hermitian_eigen(&d).unwrap();
        assert_eq!(eig.eigenvalues, vec![3.0, 2.0, -1.0]);
    }

    #[test]
    fn lu_solve_recovers_solution() {
        let mut rng = ChaCha12Rng::seed_from_u64(11);
        for n in [2, 4, 9] {
            let a = random::gaussian_matrix(n, n, &mut rng);
            let x = random::gaussian_matrix(n, 3, &mut rng);
            let b = a.matmul(&x).unwrap();
            let solved = solve(&a, &b).unwrap();
            assert!(solved.max_abs_diff(&x).unwrap() < 1e-10);
        }
    }

    #[test]
    fn solve_right_matches_inverse() {
        let mut rng = ChaCha12Rng::seed_from_u64(13);
        let a = random::gaussian_matrix(4, 4, &mut rng);
        let b = random::gaussian_matrix(4, 4, &mut rng);
        let x = solve_right(&b, &a).unwrap();
        let direct = b.matmul(&inverse(&a).unwrap()).unwrap();
        assert!(x.max_abs_diff(&direct).unwrap() < 1e-10);
    }

    #[test]
    fn singular_matrix_detected() {
        let a = ComplexMatrix::zeros(3, 3);
        assert_eq!(solve(&a, &ComplexMatrix::identity(3)), Err(Error::Singular));
    }

    #[test]
    fn condition_number_of_diagonal() {
        let d = ComplexMatrix::from_fn(2, 2, |i, j| {
            if i == j {
                Complex64::new(if i == 0 { 4.0 } else { 0.5 }, 0.0)
            } else {
                Complex64::ZERO
            }
        });
        let cond = condition_number(&d).unwrap();
        assert!((cond - 8.0).abs() < 1e-10);
    }

    #[test]
    fn rank_one_matrix() {
        let v = ComplexMatrix::from_fn(3, 1, |i, _| Complex64::new(1.0 + i as f64, 0.0));
        let m = v.matmul(&v.adjoint()).unwrap();
        assert_eq!(rank(&m, 1e-10).unwrap(), 1);
        assert_eq!(condition_number(&m).unwrap(), f64::INFINITY);
    }

    #[test]
    fn svd_reconstructs_rectangular_matrices() {
        let mut rng = ChaCha12Rng::seed_from_u64(19);
        for (m, n) in [(4, 4), (5, 3), (3, 5)] {
            let a = random::gaussian_matrix(m, n, &mut rng);
            let dec = svd(&a).unwrap();
            let k = m.min(n);
            let sigma = ComplexMatrix::from_fn(k, k, |i, j| {
                if i == j {
                    Complex64::new(dec.singular_values[i], 0.0)
                } else {
                    Complex64::ZERO
                }
            });
            let rebuilt = dec.u.matmul(&sigma).unwrap().matmul(&dec.v.adjoint()).unwrap();
            assert!(rebuilt.max_abs_diff(&a).unwrap() < 1e-12 * (1.0 + a.max_abs()));
            let gram = dec.v.adjoint().matmul(&dec.v).unwrap();
            assert!(gram.max_abs_diff(&ComplexMatrix::identity(k)).unwrap() < 1e-12);
        }
    }

    #[test]
    fn pseudo_inverse_properties() {
        let mut rng = ChaCha12Rng::seed_from_u64(17);
        // Full-rank square: matches the inverse.
        let a = random::gaussian_matrix(4, 4, &mut rng);
        let pinv = pseudo_inverse(&a, 1e-12).unwrap();
        assert!(pinv.max_abs_diff(&inverse(&a).unwrap()).unwrap() < 1e-8);
        // Rank-deficient: A A+ A = A.
        let v = random::gaussian_matrix(4, 2, &mut rng);
        let low = v.matmul(&v.adjoint()).unwrap();
        let pinv = pseudo_inverse(&low, 1e-10).unwrap();
        let rebuilt = low.matmul(&pinv).unwrap().matmul(&low).unwrap();
        assert!(rebuilt.max_abs_diff(&low).unwrap() < 1e-9);
    }
}
