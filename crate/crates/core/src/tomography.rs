//! Linear-inversion process tomography in the vectorized picture.
//!
//! The standard scheme reconstructs the superoperator from a tomographically
//! complete input set and either the reconstructed output states
//! (`Phi = [rho_out] [rho_in]^{-1}`) or a table of outcome probabilities
//! (`Phi = [E] [m] [D]^dag`). The ancilla-assisted scheme inverts the
//! realigned joint input state; with the maximally entangled input the
//! inversion degenerates to a rescaling.

pub mod presets;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::channels::{validate_density_matrix, Channel, Superoperator};
use crate::error::{Error, Result};
use crate::linalg;
use crate::tol;
use crate::veclib::{hs_inner, kron, Complex64, ComplexMatrix, ReshuffleSpec};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How tomographic linear systems are inverted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Solver {
    /// LU solve; rejects sets with condition number above
    /// [`tol::CONDITION_LIMIT`].
    #[default]
    Exact,
    /// Moore-Penrose pseudo-inverse dropping singular values below
    /// [`tol::PINV_RCOND`] relative to the largest.
    PseudoInverse,
}

/// A tomographically complete family of `d^2` input states.
#[derive(Debug, Clone, PartialEq)]
pub struct TomographySet {
    dim: usize,
    states: Vec<ComplexMatrix>,
}

impl TomographySet {
    /// Validates count, shape and physicality (Hermitian, PSD, unit trace).
    pub fn new(states: Vec<ComplexMatrix>) -> Result<Self> {
        let set = Self::from_states_unchecked(states)?;
        for state in &set.states {
            validate_density_matrix(state, tol::VERIFICATION)?;
        }
        Ok(set)
    }

    /// Shape checks only; accepts non-physical operator families such as the
    /// matrix-unit basis.
    pub fn from_states_unchecked(states: Vec<ComplexMatrix>) -> Result<Self> {
        let first = states
            .first()
            .ok_or_else(|| Error::InvalidArgument("input set must be nonempty".into()))?;
        if !first.is_square() {
            return Err(Error::ShapeMismatch("input states must be square".into()));
        }
        let dim = first.rows();
        if states.len() != dim * dim {
            return Err(Error::InvalidArgument(format!(
                "a tomographically complete set on dimension {} needs {} states, got {}",
                dim,
                dim * dim,
                states.len()
            )));
        }
        for s in &states {
            if s.rows() != dim || s.cols() != dim {
                return Err(Error::ShapeMismatch(
                    "all input states must share one dimension".into(),
                ));
            }
        }
        Ok(Self { dim, states })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn states(&self) -> &[ComplexMatrix] {
        &self.states
    }

    /// `[rho_in]`: the `d^2 x d^2` matrix whose column `mu` is `vec(rho_mu)`.
    pub fn state_matrix(&self) -> ComplexMatrix {
        columns_matrix(&self.states)
    }

    pub fn condition_number(&self) -> f64 {
        linalg::condition_number(&self.state_matrix()).unwrap_or(f64::INFINITY)
    }

    pub fn dual_basis(&self) -> Result<DualBasis> {
        self.dual_basis_with(Solver::Exact)
    }

    /// Duals as columns of `[rho_in]^{-dag}`, so that
    /// `tr(D_nu^dag rho_mu) = delta_{nu mu}`.
    pub fn dual_basis_with(&self, solver: Solver) -> Result<DualBasis> {
        let m = self.state_matrix();
        let dual_matrix = match solver {
            Solver::Exact => {
                let condition = self.condition_number();
                if !condition.is_finite() || condition > tol::CONDITION_LIMIT {
                    return Err(Error::IllConditionedSet { condition });
                }
                linalg::solve(&m.adjoint(), &ComplexMatrix::identity(m.rows()))?
            }
            Solver::PseudoInverse => linalg::pseudo_inverse(&m.adjoint(), tol::PINV_RCOND)?,
        };
        Ok(DualBasis {
            dim: self.dim,
            duals: matrix_columns(&dual_matrix, self.dim, self.dim),
        })
    }
}

/// The Hilbert-Schmidt dual family of a tomographic set.
#[derive(Debug, Clone, PartialEq)]
pub struct DualBasis {
    dim: usize,
    duals: Vec<ComplexMatrix>,
}

impl DualBasis {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.duals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.duals.is_empty()
    }

    pub fn duals(&self) -> &[ComplexMatrix] {
        &self.duals
    }

    /// `[D]`: columns are the vectorized duals.
    pub fn dual_matrix(&self) -> ComplexMatrix {
        columns_matrix(&self.duals)
    }

    /// Max-abs deviation of `tr(D_nu^dag rho_mu)` from the Kronecker delta.
    pub fn orthogonality_deviation(&self, states: &[ComplexMatrix]) -> f64 {
        let mut dev: f64 = 0.0;
        for (nu, dual) in self.duals.iter().enumerate() {
            for (mu, rho) in states.iter().enumerate() {
                let ip = hs_inner(dual, rho).unwrap_or(Complex64::ZERO);
                let target = if nu == mu { 1.0 } else { 0.0 };
                dev = dev.max((ip - Complex64::new(target, 0.0)).norm());
            }
        }
        dev
    }
}

/// A POVM: positive elements summing to the identity.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementSet {
    dim: usize,
    elements: Vec<ComplexMatrix>,
}

impl MeasurementSet {
    pub fn new(elements: Vec<ComplexMatrix>) -> Result<Self> {
        let set = Self::from_elements_unchecked(elements)?;
        let mut sum = ComplexMatrix::zeros(set.dim, set.dim);
        for element in &set.elements {
            let dev = element.hermiticity_deviation();
            if dev > tol::HERMITICITY {
                return Err(Error::NotHermitian { deviation: dev });
            }
            let eig = linalg::hermitian_eigen(&element.hermitized()?)?;
            let lambda_min = eig.eigenvalues.last().copied().unwrap_or(0.0);
            if lambda_min < -tol::VERIFICATION {
                return Err(Error::InvalidArgument(format!(
                    "POVM element has negative eigenvalue {lambda_min:.3e}"
                )));
            }
            sum = sum.add(element)?;
        }
        let completeness = sum.max_abs_diff(&ComplexMatrix::identity(set.dim))?;
        if completeness > tol::VERIFICATION {
            return Err(Error::InvalidArgument(format!(
                "POVM elements sum away from the identity by {completeness:.3e}"
            )));
        }
        Ok(set)
    }

    /// Shape checks only; accepts non-positive operator families.
    pub fn from_elements_unchecked(elements: Vec<ComplexMatrix>) -> Result<Self> {
        let first = elements
            .first()
            .ok_or_else(|| Error::InvalidArgument("measurement set must be nonempty".into()))?;
        if !first.is_square() {
            return Err(Error::ShapeMismatch(
                "measurement elements must be square".into(),
            ));
        }
        let dim = first.rows();
        for e in &elements {
            if e.rows() != dim || e.cols() != dim {
                return Err(Error::ShapeMismatch(
                    "all measurement elements must share one dimension".into(),
                ));
            }
        }
        Ok(Self { dim, elements })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[ComplexMatrix] {
        &self.elements
    }

    /// `[M]`: the `d^2 x N` matrix of vectorized elements.
    pub fn element_matrix(&self) -> ComplexMatrix {
        columns_matrix(&self.elements)
    }
}

/// Dual family of a measurement set.
///
/// For `N = d^2` linearly independent elements this is the exact dual
/// `[E] = [M]^{-dag}`; for `N > d^2` it is the minimal-norm generalized dual
/// `[E] = ([M][M]^dag)^{-1}[M]`, which reproduces every state from its
/// outcome probabilities.
pub fn measurement_dual(meas: &MeasurementSet) -> Result<DualBasis> {
    measurement_dual_with(meas, Solver::Exact)
}

pub fn measurement_dual_with(meas: &MeasurementSet, solver: Solver) -> Result<DualBasis> {
    let d = meas.dim();
    let required = d * d;
    let m = meas.element_matrix();
    let rank = linalg::rank(&m, tol::PINV_RCOND)?;
    if rank < required {
        return Err(Error::SpanDeficient { rank, required });
    }
    let dual_matrix = match (meas.len() == required, solver) {
        (true, Solver::Exact) => linalg::solve(&m.adjoint(), &ComplexMatrix::identity(required))?,
        (false, Solver::Exact) => {
            let frame = m.matmul(&m.adjoint())?;
            linalg::solve(&frame, &m)?
        }
        (_, Solver::PseudoInverse) => linalg::pseudo_inverse(&m.adjoint(), tol::PINV_RCOND)?,
    };
    Ok(DualBasis {
        dim: d,
        duals: matrix_columns(&dual_matrix, d, d),
    })
}

/// The `m[mu][nu] = tr(M_mu^dag rho'_nu)` table: outcomes down, inputs across.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityMatrix {
    outcomes: usize,
    inputs: usize,
    entries: Vec<f64>,
    shots: Option<u64>,
}

impl ProbabilityMatrix {
    pub fn new(
        outcomes: usize,
        inputs: usize,
        entries: Vec<f64>,
        shots: Option<u64>,
    ) -> Result<Self> {
        if entries.len() != outcomes * inputs {
            return Err(Error::ShapeMismatch(format!(
                "{outcomes}x{inputs} probability table needs {} entries, got {}",
                outcomes * inputs,
                entries.len()
            )));
        }
        Ok(Self {
            outcomes,
            inputs,
            entries,
            shots,
        })
    }

    pub fn outcomes(&self) -> usize {
        self.outcomes
    }

    pub fn inputs(&self) -> usize {
        self.inputs
    }

    /// Shot count per input column; `None` for noiseless probabilities.
    pub fn shots(&self) -> Option<u64> {
        self.shots
    }

    pub fn get(&self, outcome: usize, input: usize) -> f64 {
        self.entries[outcome * self.inputs + input]
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn column_sum(&self, input: usize) -> f64 {
        (0..self.outcomes).map(|mu| self.get(mu, input)).sum()
    }

    fn to_complex(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.outcomes, self.inputs, |i, j| {
            Complex64::new(self.get(i, j), 0.0)
        })
    }
}

/// Simulates the probability table for a channel, input set and POVM.
///
/// With `shots = None` the exact probabilities `tr(M_mu rho'_nu)` are
/// returned; with `shots = Some(n)` each column holds multinomial relative
/// frequencies drawn with a per-column generator derived from `seed`, so the
/// result is deterministic and independent of threading.
pub fn simulate_probs(
    channel: &Channel,
    set: &TomographySet,
    meas: &MeasurementSet,
    shots: Option<u64>,
    seed: u64,
) -> Result<ProbabilityMatrix> {
    if channel.dim() != set.dim() || channel.dim() != meas.dim() {
        return Err(Error::ShapeMismatch(format!(
            "channel ({}), input set ({}) and measurement ({}) dimensions differ",
            channel.dim(),
            set.dim(),
            meas.dim()
        )));
    }
    let superop = channel.to_superop();
    let n_out = meas.len();
    let columns: Vec<Vec<f64>> = run_columns(set.len(), |nu| {
        let evolved = superop.apply(&set.states()[nu]).expect("dims checked");
        let mut col: Vec<f64> = meas
            .elements()
            .iter()
            .map(|m| hs_inner(m, &evolved).expect("dims checked").re)
            .collect();
        if let Some(shots) = shots {
            let mut rng = column_rng(seed, nu);
            let counts = sample_multinomial(&col, shots, &mut rng);
            for (c, k) in col.iter_mut().zip(counts) {
                *c = k as f64 / shots as f64;
            }
        }
        col
    });
    let mut entries = vec![0.0; n_out * set.len()];
    for (nu, col) in columns.iter().enumerate() {
        for (mu, &value) in col.iter().enumerate() {
            entries[mu * set.len() + nu] = value;
        }
    }
    ProbabilityMatrix::new(n_out, set.len(), entries, shots)
}

fn run_columns(n: usize, job: impl Fn(usize) -> Vec<f64> + Send + Sync) -> Vec<Vec<f64>> {
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(job).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(job).collect()
    }
}

/// Independent deterministic generator for one input column.
fn column_rng(seed: u64, column: usize) -> ChaCha12Rng {
    let mixed = seed ^ (column as u64 + 1).wrapping_mul(0x9e37_79b9_7f4a_7c15);
    ChaCha12Rng::seed_from_u64(mixed)
}

fn sample_multinomial(probs: &[f64], shots: u64, rng: &mut impl Rng) -> Vec<u64> {
    let clamped: Vec<f64> = probs.iter().map(|&p| p.max(0.0)).collect();
    let total: f64 = clamped.iter().sum();
    let mut cumulative = Vec::with_capacity(clamped.len());
    let mut acc = 0.0;
    for p in &clamped {
        acc += p / total;
        cumulative.push(acc);
    }
    if let Some(last) = cumulative.last_mut() {
        *last = 1.0;
    }
    let mut counts = vec![0u64; probs.len()];
    for _ in 0..shots {
        let u: f64 = rng.random();
        let idx = cumulative.partition_point(|&c| c < u);
        counts[idx.min(probs.len() - 1)] += 1;
    }
    counts
}

/// Standard process tomography from reconstructed output states:
/// `Phi = [rho_out] [rho_in]^{-1}`.
pub fn spt_from_outputs(set: &TomographySet, outputs: &[ComplexMatrix]) -> Result<Superoperator> {
    spt_from_outputs_with(set, outputs, Solver::Exact)
}

pub fn spt_from_outputs_with(
    set: &TomographySet,
    outputs: &[ComplexMatrix],
    solver: Solver,
) -> Result<Superoperator> {
    if outputs.len() != set.len() {
        return Err(Error::ShapeMismatch(format!(
            "{} outputs for {} inputs",
            outputs.len(),
            set.len()
        )));
    }
    let d = set.dim();
    for out in outputs {
        if out.rows() != d || out.cols() != d {
            return Err(Error::ShapeMismatch(
                "output states must match the input dimension".into(),
            ));
        }
    }
    let inputs = set.state_matrix();
    let out_matrix = columns_matrix(outputs);
    let phi = match solver {
        Solver::Exact => {
            let condition = set.condition_number();
            if !condition.is_finite() || condition > tol::CONDITION_LIMIT {
                return Err(Error::IllConditionedSet { condition });
            }
            linalg::solve_right(&out_matrix, &inputs)?
        }
        Solver::PseudoInverse => {
            out_matrix.matmul(&linalg::pseudo_inverse(&inputs, tol::PINV_RCOND)?)?
        }
    };
    Superoperator::new(phi)
}

/// Standard process tomography from outcome probabilities:
/// `Phi = [E] [m] [D]^dag`, with `[E]` the measurement dual and `[D]` the
/// dual of the input set.
pub fn spt_from_probs(
    meas: &MeasurementSet,
    probs: &ProbabilityMatrix,
    duals: &DualBasis,
) -> Result<Superoperator> {
    spt_from_probs_with(meas, probs, duals, Solver::Exact)
}

pub fn spt_from_probs_with(
    meas: &MeasurementSet,
    probs: &ProbabilityMatrix,
    duals: &DualBasis,
    solver: Solver,
) -> Result<Superoperator> {
    let d = meas.dim();
    if duals.dim() != d {
        return Err(Error::ShapeMismatch(
            "measurement and dual-basis dimensions differ".into(),
        ));
    }
    if probs.outcomes() != meas.len() || probs.inputs() != duals.len() {
        return Err(Error::ShapeMismatch(format!(
            "{}x{} probability table for {} outcomes and {} inputs",
            probs.outcomes(),
            probs.inputs(),
            meas.len(),
            duals.len()
        )));
    }
    let e = measurement_dual_with(meas, solver)?.dual_matrix();
    let phi = e
        .matmul(&probs.to_complex())?
        .matmul(&duals.dual_matrix().adjoint())?;
    Superoperator::new(phi)
}

/// A density matrix on a bipartite `d1 (x) d2` space.
#[derive(Debug, Clone, PartialEq)]
pub struct JointState {
    d1: usize,
    d2: usize,
    matrix: ComplexMatrix,
}

impl JointState {
    pub fn new(d1: usize, d2: usize, matrix: ComplexMatrix) -> Result<Self> {
        let state = Self::from_matrix_unchecked(d1, d2, matrix)?;
        validate_density_matrix(&state.matrix, tol::STATE_VALIDITY)?;
        Ok(state)
    }

    pub fn from_matrix_unchecked(d1: usize, d2: usize, matrix: ComplexMatrix) -> Result<Self> {
        let dim = d1 * d2;
        if dim == 0 || matrix.rows() != dim || matrix.cols() != dim {
            return Err(Error::ShapeMismatch(format!(
                "joint state on {d1} (x) {d2} needs a {dim}x{dim} matrix, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(Self { d1, d2, matrix })
    }

    /// The maximally entangled state `sum_{ij} |ii><jj| / d`.
    pub fn maximally_entangled(d: usize) -> Self {
        let inv = Complex64::new(1.0 / d as f64, 0.0);
        let matrix = ComplexMatrix::from_fn(d * d, d * d, |row, col| {
            let (i, i2) = (row / d, row % d);
            let (j, j2) = (col / d, col % d);
            if i == i2 && j == j2 {
                inv
            } else {
                Complex64::ZERO
            }
        });
        Self {
            d1: d,
            d2: d,
            matrix,
        }
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.d1, self.d2)
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    /// The realigned matrix `mat(R^{-1} vec(tau))` of shape `d1^2 x d2^2`:
    /// entry `((a1, b1), (a2, b2))` is `tau[(a1, a2), (b1, b2)]`. Its
    /// invertibility is what makes ancilla-assisted reconstruction possible.
    pub fn realigned(&self) -> ComplexMatrix {
        let r = ReshuffleSpec::new(self.d1, self.d1, self.d2, self.d2).expect("positive dims");
        let shuffled = r.apply_inverse(self.matrix.entries()).expect("length");
        ComplexMatrix::new(self.d1 * self.d1, self.d2 * self.d2, shuffled).expect("length")
    }

    /// Evolves the first factor by the given superoperator, leaving the
    /// second untouched.
    pub fn evolve_first(&self, superop: &Superoperator) -> Result<JointState> {
        let joint = joint_superop(superop, self.d2);
        let out = joint.matrix().mul_vec(self.matrix.entries())?;
        Ok(JointState {
            d1: self.d1,
            d2: self.d2,
            matrix: ComplexMatrix::new(self.matrix.rows(), self.matrix.cols(), out)?,
        })
    }
}

/// Superoperator of `T (x) I` on a joint `d1 (x) d2` space:
/// `R (Phi_T (x) I) R^{-1}` with the reshuffler for `(d1, d1, d2, d2)`.
pub fn joint_superop(phi: &Superoperator, d2: usize) -> Superoperator {
    let d1 = phi.dim();
    let lifted = kron(
        phi.matrix(),
        &ComplexMatrix::identity(d2 * d2),
    );
    let r = ReshuffleSpec::new(d1, d1, d2, d2).expect("positive dims");
    let conjugated = r.conjugate(&lifted).expect("shape");
    Superoperator::new(conjugated).expect("square of square")
}

/// Ancilla-assisted reconstruction: solves
/// `realigned(tau_out) = Phi * realigned(tau_in)` for the superoperator.
pub fn aapt_reconstruct(tau_in: &JointState, tau_out: &JointState) -> Result<Superoperator> {
    aapt_reconstruct_with(tau_in, tau_out, Solver::Exact)
}

pub fn aapt_reconstruct_with(
    tau_in: &JointState,
    tau_out: &JointState,
    solver: Solver,
) -> Result<Superoperator> {
    if tau_in.dims() != tau_out.dims() {
        return Err(Error::ShapeMismatch(format!(
            "joint input on {:?} but output on {:?}",
            tau_in.dims(),
            tau_out.dims()
        )));
    }
    let (d1, d2) = tau_in.dims();
    if d1 != d2 {
        return Err(Error::InvalidArgument(format!(
            "ancilla dimension {d2} must equal the system dimension {d1} for inversion"
        )));
    }
    let input = tau_in.realigned();
    let output = tau_out.realigned();
    let phi = match solver {
        Solver::Exact => {
            let condition = linalg::condition_number(&input).unwrap_or(f64::INFINITY);
            if !condition.is_finite() || condition > tol::CONDITION_LIMIT {
                return Err(Error::IllConditionedAncillaState { condition });
            }
            linalg::solve_right(&output, &input)?
        }
        Solver::PseudoInverse => {
            output.matmul(&linalg::pseudo_inverse(&input, tol::PINV_RCOND)?)?
        }
    };
    Superoperator::new(phi)
}

/// Entanglement-assisted reconstruction: with the maximally entangled input
/// the realigned input is `I / d`, so `Phi = d * realigned(tau_out)`.
pub fn eapt_reconstruct(tau_out: &JointState) -> Result<Superoperator> {
    let (d1, d2) = tau_out.dims();
    if d1 != d2 {
        return Err(Error::InvalidArgument(format!(
            "entanglement-assisted output must live on a squared space, got {d1} (x) {d2}"
        )));
    }
    let phi = tau_out.realigned().scale(Complex64::new(d1 as f64, 0.0));
    Superoperator::new(phi)
}

/// Orthonormal basis of traceless Hermitian matrices (generalized Gell-Mann
/// construction), `d^2 - 1` elements.
pub fn traceless_hermitian_basis(d: usize) -> Vec<ComplexMatrix> {
    let mut basis = Vec::with_capacity(d * d - 1);
    let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
    for a in 0..d {
        for b in (a + 1)..d {
            let mut sym = ComplexMatrix::zeros(d, d);
            sym.set(a, b, Complex64::new(inv_sqrt2, 0.0));
            sym.set(b, a, Complex64::new(inv_sqrt2, 0.0));
            basis.push(sym);
            let mut anti = ComplexMatrix::zeros(d, d);
            anti.set(a, b, Complex64::new(0.0, -inv_sqrt2));
            anti.set(b, a, Complex64::new(0.0, inv_sqrt2));
            basis.push(anti);
        }
    }
    for l in 1..d {
        let norm = 1.0 / ((l * (l + 1)) as f64).sqrt();
        let mut diag = ComplexMatrix::zeros(d, d);
        for i in 0..l {
            diag.set(i, i, Complex64::new(norm, 0.0));
        }
        diag.set(l, l, Complex64::new(-(l as f64) * norm, 0.0));
        basis.push(diag);
    }
    basis
}

/// Dimension of the affine span of outcome-probability vectors over all
/// states: the rank of `tr(M_mu G_k)` over a traceless Hermitian basis.
/// Never exceeds `min(N - 1, d^2 - 1)`.
pub fn povm_domain_dimension(meas: &MeasurementSet) -> Result<usize> {
    let basis = traceless_hermitian_basis(meas.dim());
    if basis.is_empty() {
        return Ok(0);
    }
    let table = ComplexMatrix::from_fn(meas.len(), basis.len(), |mu, k| {
        let overlap = hs_inner(&meas.elements()[mu], &basis[k]).expect("same shape");
        Complex64::new(overlap.re, 0.0)
    });
    linalg::rank(&table, 1e-9)
}

fn columns_matrix(operators: &[ComplexMatrix]) -> ComplexMatrix {
    let len = operators[0].rows() * operators[0].cols();
    ComplexMatrix::from_fn(len, operators.len(), |i, j| operators[j].entries()[i])
}

fn matrix_columns(m: &ComplexMatrix, rows: usize, cols: usize) -> Vec<ComplexMatrix> {
    (0..m.cols())
        .map(|j| {
            let entries: Vec<Complex64> = (0..m.rows()).map(|i| m.get(i, j)).collect();
            ComplexMatrix::new(rows, cols, entries).expect("column length")
        })
        .collect()
}
