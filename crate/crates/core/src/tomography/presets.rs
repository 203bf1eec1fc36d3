//! Named tomographic fixtures: well-conditioned input sets and
//! informationally complete POVMs.

use crate::linalg;
use crate::tomography::{MeasurementSet, TomographySet};
use crate::veclib::{Complex64, ComplexMatrix};

fn projector(amplitudes: &[Complex64]) -> ComplexMatrix {
    let norm: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let d = amplitudes.len();
    ComplexMatrix::from_fn(d, d, |i, j| {
        amplitudes[i] * amplitudes[j].conj() / (norm * norm)
    })
}

/// The default qubit input set `{|0><0|, |1><1|, |+><+|, |+i><+i|}`.
pub fn qubit_input_states() -> TomographySet {
    let one = Complex64::ONE;
    let i = Complex64::I;
    let zero = Complex64::ZERO;
    TomographySet::new(vec![
        projector(&[one, zero]),
        projector(&[zero, one]),
        projector(&[one, one]),
        projector(&[one, i]),
    ])
    .expect("preset is a valid tomographic set")
}

/// The symmetric informationally complete qubit POVM built from tetrahedron
/// directions on the Bloch sphere: `M_k = (I + s_k . sigma) / 4`.
pub fn tetrahedral_povm() -> MeasurementSet {
    let dirs = [
        [1.0, 1.0, 1.0],
        [1.0, -1.0, -1.0],
        [-1.0, 1.0, -1.0],
        [-1.0, -1.0, 1.0],
    ];
    let inv_sqrt3 = 1.0 / 3.0_f64.sqrt();
    let elements = dirs
        .iter()
        .map(|s| {
            let (x, y, z) = (s[0] * inv_sqrt3, s[1] * inv_sqrt3, s[2] * inv_sqrt3);
            ComplexMatrix::from_re_im(
                2,
                2,
                &[
                    ((1.0 + z) / 4.0, 0.0),
                    (x / 4.0, -y / 4.0),
                    (x / 4.0, y / 4.0),
                    ((1.0 - z) / 4.0, 0.0),
                ],
            )
            .expect("shape")
        })
        .collect();
    MeasurementSet::new(elements).expect("preset is a valid POVM")
}

/// Six-outcome qubit POVM from the Pauli eigenprojectors, each weighted 1/3;
/// over-complete (N = 6 > 4).
pub fn pauli_projector_povm() -> MeasurementSet {
    let one = Complex64::ONE;
    let i = Complex64::I;
    let zero = Complex64::ZERO;
    let third = Complex64::new(1.0 / 3.0, 0.0);
    let kets: [Vec<Complex64>; 6] = [
        vec![one, zero],
        vec![zero, one],
        vec![one, one],
        vec![one, -one],
        vec![one, i],
        vec![one, -i],
    ];
    let elements = kets.iter().map(|k| projector(k).scale(third)).collect();
    MeasurementSet::new(elements).expect("preset is a valid POVM")
}

/// General-dimension tomographically complete input set: the `d` basis
/// projectors plus, for each pair `a < b`, the projectors onto
/// `(|a> + |b>)/sqrt(2)` and `(|a> + i|b>)/sqrt(2)`.
pub fn standard_input_states(d: usize) -> TomographySet {
    let mut states = Vec::with_capacity(d * d);
    for a in 0..d {
        let mut amps = vec![Complex64::ZERO; d];
        amps[a] = Complex64::ONE;
        states.push(projector(&amps));
    }
    for a in 0..d {
        for b in (a + 1)..d {
            let mut plus = vec![Complex64::ZERO; d];
            plus[a] = Complex64::ONE;
            plus[b] = Complex64::ONE;
            states.push(projector(&plus));
            let mut imag = vec![Complex64::ZERO; d];
            imag[a] = Complex64::ONE;
            imag[b] = Complex64::I;
            states.push(projector(&imag));
        }
    }
    TomographySet::new(states).expect("preset is a valid tomographic set")
}

/// Informationally complete POVM for any dimension, obtained by frame
/// normalization: with `P = sum_mu sigma_mu` over [`standard_input_states`],
/// the elements `P^{-1/2} sigma_mu P^{-1/2}` are positive, complete and span
/// the operator space.
pub fn ic_povm(d: usize) -> MeasurementSet {
    let states = standard_input_states(d);
    let mut frame = ComplexMatrix::zeros(d, d);
    for s in states.states() {
        frame = frame.add(s).expect("shape");
    }
    let eig = linalg::hermitian_eigen(&frame).expect("square");
    let v = &eig.eigenvectors;
    let mut inv_sqrt = ComplexMatrix::zeros(d, d);
    for k in 0..d {
        let g = 1.0 / eig.eigenvalues[k].sqrt();
        for i in 0..d {
            for j in 0..d {
                let add = v.get(i, k) * v.get(j, k).conj() * g;
                inv_sqrt.set(i, j, inv_sqrt.get(i, j) + add);
            }
        }
    }
    let elements = states
        .states()
        .iter()
        .map(|s| {
            inv_sqrt
                .matmul(s)
                .and_then(|m| m.matmul(&inv_sqrt))
                .expect("shape")
        })
        .collect();
    MeasurementSet::new(elements).expect("frame normalization yields a POVM")
}
