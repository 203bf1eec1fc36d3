//! End-to-end tomography invariants: dual-expansion consistency, exactness of
//! standard process tomography on noiseless data, the joint-evolution
//! identity, the entanglement-assisted loop through the channel-state
//! correspondence, and statistical behavior of sampled frequencies.

use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use vecq::channels::{depolarizing, jamiolkowski_state};
use vecq::random;
use vecq::tomography::{
    aapt_reconstruct, eapt_reconstruct, joint_superop, povm_domain_dimension,
    presets, simulate_probs, spt_from_outputs, spt_from_probs, JointState, MeasurementSet,
    TomographySet,
};
use vecq::veclib::{hs_inner, kron, Complex64, ComplexMatrix};
use vecq::{Error, Superoperator};

fn rng(seed: u64) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(seed)
}

fn random_set(d: usize, rng: &mut ChaCha12Rng) -> TomographySet {
    // Random full-rank states are almost surely well conditioned as a set;
    // retry on the rare bad draw.
    loop {
        let states: Vec<ComplexMatrix> = (0..d * d).map(|_| random::density_matrix(d, rng)).collect();
        let set = TomographySet::new(states).unwrap();
        if set.condition_number() < 1e4 {
            return set;
        }
    }
}

#[test]
fn dual_expansion_reconstructs_arbitrary_states() {
    let mut rng = rng(51);
    for d in [2usize, 3] {
        let set = presets::standard_input_states(d);
        let duals = set.dual_basis().unwrap();
        for _ in 0..10 {
            let rho = random::density_matrix(d, &mut rng);
            let mut rebuilt = ComplexMatrix::zeros(d, d);
            for (dual, state) in duals.duals().iter().zip(set.states()) {
                let w = hs_inner(dual, &rho).unwrap();
                rebuilt = rebuilt.add(&state.scale(w)).unwrap();
            }
            assert!(rebuilt.max_abs_diff(&rho).unwrap() < 1e-10);
        }
    }
}

#[test]
fn spt_routes_agree_and_recover_truth() {
    let mut rng = rng(52);
    for d in [2usize, 3] {
        let set = if d == 2 {
            presets::qubit_input_states()
        } else {
            presets::standard_input_states(d)
        };
        let meas = if d == 2 {
            presets::tetrahedral_povm()
        } else {
            presets::ic_povm(d)
        };
        let duals = set.dual_basis().unwrap();
        for _ in 0..10 {
            let chan = random::cptp_channel(d, &mut rng).unwrap();
            let truth = chan.to_superop();
            let outputs: Vec<ComplexMatrix> = set
                .states()
                .iter()
                .map(|rho| chan.apply(rho).unwrap())
                .collect();
            let from_outputs = spt_from_outputs(&set, &outputs).unwrap();
            let probs = simulate_probs(&chan, &set, &meas, None, 0).unwrap();
            let from_probs = spt_from_probs(&meas, &probs, &duals).unwrap();
            assert!(
                from_outputs.matrix().max_abs_diff(truth.matrix()).unwrap() < 1e-8,
                "outputs route, d = {d}"
            );
            assert!(
                from_probs.matrix().max_abs_diff(truth.matrix()).unwrap() < 1e-8,
                "probability route, d = {d}"
            );
            assert!(
                from_outputs
                    .matrix()
                    .max_abs_diff(from_probs.matrix())
                    .unwrap()
                    < 1e-10,
                "route agreement, d = {d}"
            );
        }
    }
}

#[test]
fn spt_with_random_input_sets() {
    let mut rng = rng(53);
    let d = 3;
    let chan = random::cptp_channel(d, &mut rng).unwrap();
    let set = random_set(d, &mut rng);
    let outputs: Vec<ComplexMatrix> = set
        .states()
        .iter()
        .map(|rho| chan.apply(rho).unwrap())
        .collect();
    let phi = spt_from_outputs(&set, &outputs).unwrap();
    assert!(phi.matrix().max_abs_diff(chan.to_superop().matrix()).unwrap() < 1e-8);
}

#[test]
fn joint_evolution_identity_on_product_states() {
    // Evolving one factor of a product state equals evolving it alone.
    let mut rng = rng(54);
    for trial in 0..50 {
        let d1 = 2 + (trial % 2);
        let d2 = 2 + ((trial / 2) % 2);
        let chan = random::cptp_channel(d1, &mut rng).unwrap();
        let joint = joint_superop(&chan.to_superop(), d2);
        let rho = random::density_matrix(d1, &mut rng);
        let omega = random::density_matrix(d2, &mut rng);
        let product = kron(&rho, &omega);
        let evolved = joint.matrix().mul_vec(product.entries()).unwrap();
        let evolved = ComplexMatrix::new(d1 * d2, d1 * d2, evolved).unwrap();
        let expected = kron(&chan.apply(&rho).unwrap(), &omega);
        assert!(evolved.max_abs_diff(&expected).unwrap() < 1e-10);
    }
}

#[test]
fn channel_state_correspondence_closes_the_loop() {
    // d * (T (x) I)(tau_+) equals the Choi matrix, and reconstructing from
    // that output state returns the channel.
    let mut rng = rng(55);
    for d in [2usize, 3] {
        for _ in 0..25 {
            let chan = random::cptp_channel(d, &mut rng).unwrap();
            let tau_plus = JointState::maximally_entangled(d);
            let tau_out = tau_plus.evolve_first(&chan.to_superop()).unwrap();
            let choi = chan.to_choi();
            let scaled = tau_out.matrix().scale(Complex64::new(d as f64, 0.0));
            assert!(scaled.max_abs_diff(choi.matrix()).unwrap() < 1e-10);
            // The propagated state is exactly the channel-state image.
            let jam = jamiolkowski_state(&chan).unwrap();
            assert!(tau_out.matrix().max_abs_diff(&jam).unwrap() < 1e-10);
        }
    }
}

#[test]
fn entanglement_assisted_reconstruction_inverts_the_correspondence() {
    let mut rng = rng(56);
    for d in [2usize, 3] {
        for _ in 0..25 {
            let chan = random::cptp_channel(d, &mut rng).unwrap();
            let jam = jamiolkowski_state(&chan).unwrap();
            let tau_out = JointState::new(d, d, jam).unwrap();
            let phi = eapt_reconstruct(&tau_out).unwrap();
            assert!(
                phi.matrix().max_abs_diff(chan.to_superop().matrix()).unwrap() < 1e-10,
                "d = {d}"
            );
            // Agreement with the general ancilla-assisted route.
            let via_aapt =
                aapt_reconstruct(&JointState::maximally_entangled(d), &tau_out).unwrap();
            assert!(phi.matrix().max_abs_diff(via_aapt.matrix()).unwrap() < 1e-10);
        }
    }
}

#[test]
fn ancilla_assisted_reconstruction_from_random_inputs() {
    let mut rng = rng(57);
    for trial in 0..20 {
        let d = 2 + (trial % 2);
        let chan = random::cptp_channel(d, &mut rng).unwrap();
        let truth = chan.to_superop();
        let tau_in = JointState::new(d, d, random::full_schmidt_pure_state(d, &mut rng)).unwrap();
        let tau_out = tau_in.evolve_first(&truth).unwrap();
        let phi = aapt_reconstruct(&tau_in, &tau_out).unwrap();
        assert!(
            phi.matrix().max_abs_diff(truth.matrix()).unwrap() < 1e-8,
            "trial {trial}, d = {d}"
        );
    }
}

#[test]
fn ancilla_assisted_rejects_unentangled_inputs() {
    let mut rng = rng(58);
    let rho = random::density_matrix(2, &mut rng);
    let omega = ComplexMatrix::matrix_unit(2, 2, 1, 1);
    let tau = JointState::new(2, 2, kron(&rho, &omega)).unwrap();
    match aapt_reconstruct(&tau, &tau) {
        Err(Error::IllConditionedAncillaState { condition }) => {
            assert!(condition > 1e8 || condition.is_infinite());
        }
        other => panic!("expected ill-conditioned error, got {other:?}"),
    }
}

#[test]
fn sampled_frequencies_converge_with_shot_count() {
    // Mean absolute error should scale like 1/sqrt(shots): going from 1e4 to
    // 1e6 shots shrinks it by about 10, checked within a loose 3x band.
    let chan = depolarizing(2, 0.35).unwrap();
    let set = presets::qubit_input_states();
    let meas = presets::tetrahedral_povm();
    let exact = simulate_probs(&chan, &set, &meas, None, 0).unwrap();
    let mean_abs_err = |shots: u64, seed: u64| -> f64 {
        let sampled = simulate_probs(&chan, &set, &meas, Some(shots), seed).unwrap();
        let mut total = 0.0;
        for mu in 0..sampled.outcomes() {
            for nu in 0..sampled.inputs() {
                total += (sampled.get(mu, nu) - exact.get(mu, nu)).abs();
            }
        }
        total / (sampled.outcomes() * sampled.inputs()) as f64
    };
    // Average over a few seeds to stabilize the ratio.
    let coarse: f64 = (0..3).map(|s| mean_abs_err(10_000, s)).sum::<f64>() / 3.0;
    let fine: f64 = (0..3).map(|s| mean_abs_err(1_000_000, s)).sum::<f64>() / 3.0;
    let ratio = coarse / fine;
    assert!(
        ratio > 10.0 / 3.0 && ratio < 30.0,
        "shot-noise ratio {ratio} outside the loose band"
    );
}

#[test]
fn reconstruction_from_sampled_frequencies_is_close() {
    // Best-effort check: with 1e6 shots the linear inversion lands within a
    // generous multiple of the shot-noise scale. Not an exactness test.
    let chan = depolarizing(2, 0.35).unwrap();
    let set = presets::qubit_input_states();
    let meas = presets::tetrahedral_povm();
    let duals = set.dual_basis().unwrap();
    let probs = simulate_probs(&chan, &set, &meas, Some(1_000_000), 7).unwrap();
    let phi = spt_from_probs(&meas, &probs, &duals).unwrap();
    let dev = phi
        .matrix()
        .max_abs_diff(chan.to_superop().matrix())
        .unwrap();
    assert!(dev < 10.0 * 1e-3, "sampled reconstruction off by {dev}");
}

#[test]
fn povm_domain_dimension_bounds_over_random_povms() {
    let mut rng = rng(59);
    for trial in 0..100 {
        let d = 2 + (trial % 3);
        let outcomes = 1 + (trial % 6);
        // Random PSD parts, scaled below the identity, plus a completing
        // element.
        let mut parts: Vec<ComplexMatrix> = Vec::new();
        let mut total = ComplexMatrix::zeros(d, d);
        for _ in 0..outcomes {
            let g = random::gaussian_matrix(d, d, &mut rng);
            let part = g.matmul(&g.adjoint()).unwrap();
            total = total.add(&part).unwrap();
            parts.push(part);
        }
        let lambda_max = vecq::linalg::hermitian_eigen(&total).unwrap().eigenvalues[0];
        let scale = Complex64::new(0.5 / lambda_max, 0.0);
        let mut elements: Vec<ComplexMatrix> =
            parts.into_iter().map(|p| p.scale(scale)).collect();
        let remainder = ComplexMatrix::identity(d)
            .sub(&total.scale(scale))
            .unwrap();
        elements.push(remainder);
        let meas = MeasurementSet::new(elements).unwrap();
        let dim = povm_domain_dimension(&meas).unwrap();
        assert!(dim <= (meas.len() - 1).min(d * d - 1), "trial {trial}");
    }
}

#[test]
fn joint_superop_matches_direct_kraus_dilation_action() {
    // Evolving a joint state through R (Phi (x) I) R^{-1} agrees with the
    // operator-sum action of K_n (x) I on the joint space.
    let mut rng = rng(60);
    let d = 2;
    let chan = random::cptp_channel(d, &mut rng).unwrap();
    let kraus = chan.to_kraus(None).unwrap();
    let tau = JointState::new(d, d, random::full_schmidt_pure_state(d, &mut rng)).unwrap();
    let evolved = tau.evolve_first(&chan.to_superop()).unwrap();
    let mut direct = ComplexMatrix::zeros(d * d, d * d);
    for k in kraus.operators() {
        let lifted = kron(k, &ComplexMatrix::identity(d));
        let term = lifted
            .matmul(tau.matrix())
            .unwrap()
            .matmul(&lifted.adjoint())
            .unwrap();
        direct = direct.add(&term).unwrap();
    }
    assert!(evolved.matrix().max_abs_diff(&direct).unwrap() < 1e-11);
}

#[test]
fn superoperator_shape_guard() {
    assert!(Superoperator::new(ComplexMatrix::zeros(5, 5)).is_err());
}
