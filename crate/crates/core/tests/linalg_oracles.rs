//! Cross-checks of the in-crate numerical kernels against nalgebra, which is
//! used here purely as an independent oracle.

use nalgebra::{Complex, DMatrix};
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use vecq::channels::{kraus_to_choi, pauli_x, KrausSet};
use vecq::linalg;
use vecq::random;
use vecq::veclib::{Complex64, ComplexMatrix};

fn to_nalgebra(m: &ComplexMatrix) -> DMatrix<Complex<f64>> {
    DMatrix::from_row_slice(m.rows(), m.cols(), m.entries())
}

fn rng(seed: u64) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(seed)
}

fn random_hermitian(n: usize, rng: &mut ChaCha12Rng) -> ComplexMatrix {
    let g = random::gaussian_matrix(n, n, rng);
    g.add(&g.adjoint()).unwrap().scale(Complex64::new(0.5, 0.0))
}

#[test]
fn hermitian_eigenvalues_match_nalgebra() {
    let mut rng = rng(31);
    for n in [2, 3, 5, 9, 16] {
        let a = random_hermitian(n, &mut rng);
        let mine = linalg::hermitian_eigen(&a).unwrap();
        let theirs = to_nalgebra(&a).symmetric_eigen();
        let mut reference: Vec<f64> = theirs.eigenvalues.iter().copied().collect();
        reference.sort_by(|x, y| y.partial_cmp(x).unwrap());
        for (mine, theirs) in mine.eigenvalues.iter().zip(&reference) {
            assert!(
                (mine - theirs).abs() < 1e-11 * (1.0 + a.max_abs()),
                "n = {n}: {mine} vs {theirs}"
            );
        }
    }
}

#[test]
fn singular_values_match_nalgebra() {
    let mut rng = rng(32);
    for (m, n) in [(4, 4), (6, 3), (3, 6), (9, 9)] {
        let a = random::gaussian_matrix(m, n, &mut rng);
        let mine = linalg::singular_values(&a).unwrap();
        let theirs = to_nalgebra(&a).svd(false, false);
        let mut reference: Vec<f64> = theirs.singular_values.iter().copied().collect();
        reference.sort_by(|x, y| y.partial_cmp(x).unwrap());
        for (mine, theirs) in mine.iter().zip(&reference) {
            assert!((mine - theirs).abs() < 1e-10 * (1.0 + reference[0]));
        }
    }
}

#[test]
fn condition_number_matches_svd_oracle() {
    let mut rng = rng(33);
    for n in [3, 4, 9] {
        let a = random::gaussian_matrix(n, n, &mut rng);
        let mine = linalg::condition_number(&a).unwrap();
        let sv = to_nalgebra(&a).svd(false, false).singular_values;
        let reference = sv.max() / sv.min();
        assert!(
            (mine - reference).abs() <= 1e-8 * reference,
            "n = {n}: {mine} vs {reference}"
        );
    }
}

#[test]
fn tomographic_set_condition_number_matches_svd_oracle() {
    for set in [
        vecq::tomography::presets::qubit_input_states(),
        vecq::tomography::presets::standard_input_states(3),
    ] {
        let mine = set.condition_number();
        let sv = to_nalgebra(&set.state_matrix()).svd(false, false).singular_values;
        let reference = sv.max() / sv.min();
        assert!((mine - reference).abs() <= 1e-8 * reference);
    }
}

#[test]
fn lu_solve_matches_nalgebra() {
    let mut rng = rng(34);
    let a = random::gaussian_matrix(6, 6, &mut rng);
    let b = random::gaussian_matrix(6, 2, &mut rng);
    let mine = linalg::solve(&a, &b).unwrap();
    let theirs = to_nalgebra(&a)
        .lu()
        .solve(&to_nalgebra(&b))
        .expect("invertible");
    for i in 0..6 {
        for j in 0..2 {
            assert!((mine.get(i, j) - theirs[(i, j)]).norm() < 1e-10);
        }
    }
}

#[test]
fn choi_rank_matches_svd_rank_of_kraus_stack() {
    // Rank of the Choi matrix equals the number of linearly independent
    // Kraus operators; the oracle ranks the stacked vectorized operators.
    let eye = ComplexMatrix::identity(2);
    let dependent = eye.add(&pauli_x()).unwrap();
    let sets: Vec<Vec<ComplexMatrix>> = vec![
        vec![eye.clone()],
        vec![eye.clone(), pauli_x()],
        vec![eye.clone(), pauli_x(), dependent],
    ];
    for ops in sets {
        let stacked = ComplexMatrix::from_fn(4, ops.len(), |i, j| ops[j].entries()[i]);
        let oracle_rank = to_nalgebra(&stacked).svd(false, false).rank(1e-10);
        let choi = kraus_to_choi(&KrausSet::new(ops).unwrap());
        let eig = linalg::hermitian_eigen(choi.matrix()).unwrap();
        let choi_rank = eig.eigenvalues.iter().filter(|&&l| l > 1e-10).count();
        assert_eq!(choi_rank, oracle_rank);
    }
}

#[test]
fn dual_basis_agrees_with_frame_operator_route() {
    // Independent construction of the duals: D_nu = mat(P^{-1} vec(rho_nu))
    // with the frame operator P = [rho][rho]^dag, solved by nalgebra.
    let set = vecq::tomography::presets::qubit_input_states();
    let duals = set.dual_basis().unwrap();
    let state_matrix = to_nalgebra(&set.state_matrix());
    let frame = &state_matrix * state_matrix.adjoint();
    let lu = frame.lu();
    for (nu, dual) in duals.duals().iter().enumerate() {
        let rho_vec = DMatrix::from_row_slice(4, 1, set.states()[nu].vectorize().as_slice());
        let oracle = lu.solve(&rho_vec).expect("invertible frame");
        for i in 0..4 {
            assert!((dual.vectorize().as_slice()[i] - oracle[(i, 0)]).norm() < 1e-10);
        }
    }
}

#[test]
fn dual_basis_solves_generic_linear_system() {
    // The defining orthogonality relation as a 16x16 linear system, solved
    // by the oracle and compared entrywise.
    let set = vecq::tomography::presets::qubit_input_states();
    let duals = set.dual_basis().unwrap();
    // Unknowns: the 16 entries of [D]; equations: [rho]^dag [D] = I.
    let a = to_nalgebra(&set.state_matrix()).adjoint();
    let rhs = DMatrix::<Complex<f64>>::identity(4, 4);
    let oracle = a.lu().solve(&rhs).expect("invertible");
    let mine = to_nalgebra(&duals.dual_matrix());
    for i in 0..4 {
        for j in 0..4 {
            assert!((mine[(i, j)] - oracle[(i, j)]).norm() < 1e-12);
        }
    }
    assert!(duals.orthogonality_deviation(set.states()) < 1e-12);
}

#[test]
fn measurement_dual_of_sic_povm_matches_linear_solve() {
    let meas = vecq::tomography::presets::tetrahedral_povm();
    let duals = vecq::tomography::measurement_dual(&meas).unwrap();
    let a = to_nalgebra(&meas.element_matrix()).adjoint();
    let oracle = a
        .lu()
        .solve(&DMatrix::<Complex<f64>>::identity(4, 4))
        .expect("invertible");
    let mine = to_nalgebra(&duals.dual_matrix());
    for i in 0..4 {
        for j in 0..4 {
            assert!((mine[(i, j)] - oracle[(i, j)]).norm() < 1e-12);
        }
    }
    assert!(duals.orthogonality_deviation(meas.elements()) < 1e-12);
}

#[test]
fn povm_domain_rank_matches_affine_rank_of_probability_vectors() {
    // The tetrahedral POVM explores the full 3-dimensional Bloch ball: over
    // random states, the affine span of outcome-probability vectors has the
    // same dimension as the operator-space rank computation.
    let meas = vecq::tomography::presets::tetrahedral_povm();
    let mut rng = rng(35);
    let base = random::density_matrix(2, &mut rng);
    let probe = |rho: &ComplexMatrix| -> Vec<f64> {
        meas.elements()
            .iter()
            .map(|m| vecq::veclib::hs_inner(m, rho).unwrap().re)
            .collect()
    };
    let base_probs = probe(&base);
    let mut rows = Vec::new();
    for _ in 0..50 {
        let rho = random::density_matrix(2, &mut rng);
        let probs = probe(&rho);
        let diff: Vec<Complex<f64>> = probs
            .iter()
            .zip(&base_probs)
            .map(|(p, b)| Complex::new(p - b, 0.0))
            .collect();
        rows.extend(diff);
    }
    let matrix = DMatrix::from_row_slice(50, 4, &rows);
    let affine_rank = matrix.svd(false, false).rank(1e-9);
    assert_eq!(
        vecq::tomography::povm_domain_dimension(&meas).unwrap(),
        affine_rank
    );
}
