//! Seeded random fixtures: Haar-like unitaries, density matrices and CPTP
//! channels generated from unitary dilations.

use rand::Rng;

use crate::channels::{kraus_from_dilation, Channel};
use crate::error::Result;
use crate::veclib::{Complex64, ComplexMatrix};

/// Standard normal sample via Box-Muller.
fn standard_normal(rng: &mut impl Rng) -> f64 {
    let u: f64 = 1.0 - rng.random::<f64>();
    let v: f64 = rng.random();
    (-2.0 * u.ln()).sqrt() * (std::f64::consts::TAU * v).cos()
}

/// Matrix with independent complex standard-normal entries.
pub fn gaussian_matrix(rows: usize, cols: usize, rng: &mut impl Rng) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |_, _| {
        Complex64::new(standard_normal(rng), standard_normal(rng))
    })
}

/// Random unitary: QR of a complex Gaussian matrix by modified Gram-Schmidt
/// with one re-orthogonalization pass, diagonal phases fixed from R.
pub fn unitary(dim: usize, rng: &mut impl Rng) -> ComplexMatrix {
    let g = gaussian_matrix(dim, dim, rng);
    let mut cols: Vec<Vec<Complex64>> = (0..dim)
        .map(|j| (0..dim).map(|i| g.get(i, j)).collect())
        .collect();
    let mut phases = vec![Complex64::ONE; dim];
    for j in 0..dim {
        for _pass in 0..2 {
            for k in 0..j {
                let mut proj = Complex64::ZERO;
                for i in 0..dim {
                    proj += cols[k][i].conj() * cols[j][i];
                }
                for i in 0..dim {
                    let delta = proj * cols[k][i];
                    cols[j][i] -= delta;
                }
            }
        }
        let norm: f64 = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for z in &mut cols[j] {
            *z /= norm;
        }
        // The Haar phase correction from the sign of the R diagonal.
        let mut r_jj = Complex64::ZERO;
        for i in 0..dim {
            r_jj += cols[j][i].conj() * g.get(i, j);
        }
        if r_jj.norm() > 0.0 {
            phases[j] = r_jj / r_jj.norm();
        }
    }
    ComplexMatrix::from_fn(dim, dim, |i, j| cols[j][i] * phases[j])
}

/// Full-rank random density matrix `G G^dag / tr(G G^dag)`.
pub fn density_matrix(dim: usize, rng: &mut impl Rng) -> ComplexMatrix {
    let g = gaussian_matrix(dim, dim, rng);
    let rho = g.matmul(&g.adjoint()).expect("square product");
    let tr = rho.trace();
    rho.scale(Complex64::new(1.0 / tr.re, 0.0))
}

/// Random CPTP channel in Kraus form, generated from a unitary dilation with
/// an environment of dimension `dim * dim` prepared in its ground state.
pub fn cptp_channel(dim: usize, rng: &mut impl Rng) -> Result<Channel> {
    let env = dim * dim;
    let u = unitary(dim * env, rng);
    let kraus = kraus_from_dilation(&u, dim)?;
    Ok(Channel::Kraus(kraus))
}

/// Density matrix of a random pure state on a `dim x dim` bipartite space
/// with full Schmidt rank; Schmidt coefficients are bounded away from zero so
/// the realigned matrix stays well conditioned.
pub fn full_schmidt_pure_state(dim: usize, rng: &mut impl Rng) -> ComplexMatrix {
    let u = unitary(dim, rng);
    let v = unitary(dim, rng);
    let mut weights: Vec<f64> = (0..dim).map(|_| 0.3 + 0.7 * rng.random::<f64>()).collect();
    let total: f64 = weights.iter().sum();
    for w in &mut weights {
        *w /= total;
    }
    // Psi = U diag(sqrt(w)) V^dag, vectorized row-major, state = psi psi^dag.
    let core = ComplexMatrix::from_fn(dim, dim, |i, j| {
        if i == j {
            Complex64::new(weights[i].sqrt(), 0.0)
        } else {
            Complex64::ZERO
        }
    });
    let psi = u
        .matmul(&core)
        .and_then(|m| m.matmul(&v.adjoint()))
        .expect("square products")
        .into_vectorized();
    psi.outer(&psi)
}
