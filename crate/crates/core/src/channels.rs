//! Completely positive maps: Kraus, Choi and superoperator representations,
//! lossless conversions between them, CP/TP/unital verification, the
//! channel-state correspondence and unitary-dilation evaluation.
//!
//! Index conventions: the Choi matrix of a `d`-dimensional map stores
//! `D[fuse(a, c), fuse(b, e)] = sum_n K_n[a, c] * conj(K_n[b, e])`, so the
//! superoperator is obtained from it by the square reshuffling permutation
//! and equals `sum_n K_n (x) conj(K_n)` acting on row-stacked states.

use crate::error::{Error, Result};
use crate::linalg;
use crate::tol;
use crate::veclib::{
    kron, partial_trace, Complex64, ComplexMatrix, ReshuffleSpec, Subsystem, SwapSpec,
};

pub fn pauli_x() -> ComplexMatrix {
    ComplexMatrix::from_re_im(2, 2, &[(0.0, 0.0), (1.0, 0.0), (1.0, 0.0), (0.0, 0.0)]).unwrap()
}

pub fn pauli_y() -> ComplexMatrix {
    ComplexMatrix::from_re_im(2, 2, &[(0.0, 0.0), (0.0, -1.0), (0.0, 1.0), (0.0, 0.0)]).unwrap()
}

pub fn pauli_z() -> ComplexMatrix {
    ComplexMatrix::from_re_im(2, 2, &[(1.0, 0.0), (0.0, 0.0), (0.0, 0.0), (-1.0, 0.0)]).unwrap()
}

/// Weyl shift-and-phase unitary `X^j Z^k` on a `d`-level system.
pub fn weyl(d: usize, j: usize, k: usize) -> ComplexMatrix {
    let omega = std::f64::consts::TAU / d as f64;
    let mut m = ComplexMatrix::zeros(d, d);
    for n in 0..d {
        let phase = omega * (k * n) as f64;
        m.set((n + j) % d, n, Complex64::new(phase.cos(), phase.sin()));
    }
    m
}

fn perfect_sqrt(n: usize) -> Option<usize> {
    let r = (n as f64).sqrt().round() as usize;
    (r * r == n).then_some(r)
}

/// Checks Hermiticity, unit trace and positivity of a candidate state.
pub fn validate_density_matrix(m: &ComplexMatrix, tolerance: f64) -> Result<()> {
    if !m.is_square() {
        return Err(Error::ShapeMismatch(format!(
            "density matrix must be square, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let dev = m.hermiticity_deviation();
    if dev > tolerance {
        return Err(Error::NotHermitian { deviation: dev });
    }
    let tr = m.trace();
    if (tr - Complex64::ONE).norm() > tolerance {
        return Err(Error::InvalidArgument(format!(
            "density matrix trace {} is not 1",
            tr.re
        )));
    }
    let eig = linalg::hermitian_eigen(&m.hermitized()?)?;
    let lambda_min = eig.eigenvalues.last().copied().unwrap_or(0.0);
    if lambda_min < -tolerance {
        return Err(Error::InvalidArgument(format!(
            "density matrix has negative eigenvalue {lambda_min:.3e}"
        )));
    }
    Ok(())
}

/// A set of Kraus operators on a `d`-dimensional system.
#[derive(Debug, Clone, PartialEq)]
pub struct KrausSet {
    dim: usize,
    operators: Vec<ComplexMatrix>,
}

impl KrausSet {
    pub fn new(operators: Vec<ComplexMatrix>) -> Result<Self> {
        let first = operators
            .first()
            .ok_or_else(|| Error::InvalidArgument("Kraus set must be nonempty".into()))?;
        if !first.is_square() {
            return Err(Error::ShapeMismatch(
                "Kraus operators must be square".into(),
            ));
        }
        let dim = first.rows();
        for op in &operators {
            if op.rows() != dim || op.cols() != dim {
                return Err(Error::ShapeMismatch(
                    "all Kraus operators must share one dimension".into(),
                ));
            }
        }
        Ok(Self { dim, operators })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn operators(&self) -> &[ComplexMatrix] {
        &self.operators
    }

    pub fn len(&self) -> usize {
        self.operators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.operators.is_empty()
    }

    /// Operator sum `sum_n K_n rho K_n^dag` in a fixed order over `n`.
    pub fn apply(&self, rho: &ComplexMatrix) -> Result<ComplexMatrix> {
        if rho.rows() != self.dim || rho.cols() != self.dim {
            return Err(Error::ShapeMismatch(format!(
                "state is {}x{}, channel dimension is {}",
                rho.rows(),
                rho.cols(),
                self.dim
            )));
        }
        let mut out = ComplexMatrix::zeros(self.dim, self.dim);
        for k in &self.operators {
            let term = k.matmul(rho)?.matmul(&k.adjoint())?;
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Max-abs deviation of `sum_n K_n^dag K_n` from the identity.
    pub fn completeness_deviation(&self) -> f64 {
        let mut sum = ComplexMatrix::zeros(self.dim, self.dim);
        for k in &self.operators {
            sum = sum.add(&k.adjoint().matmul(k).expect("square")).expect("shape");
        }
        sum.max_abs_diff(&ComplexMatrix::identity(self.dim))
            .expect("shape")
    }

    pub fn is_trace_preserving(&self, tolerance: f64) -> bool {
        self.completeness_deviation() <= tolerance
    }
}

/// The dynamical (Choi) matrix of a map on a `d`-dimensional system.
#[derive(Debug, Clone, PartialEq)]
pub struct ChoiMatrix {
    dim: usize,
    matrix: ComplexMatrix,
}

impl ChoiMatrix {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::ShapeMismatch(
                "Choi matrix must be square".into(),
            ));
        }
        let dim = perfect_sqrt(matrix.rows()).ok_or_else(|| {
            Error::ShapeMismatch(format!(
                "Choi matrix side {} is not a perfect square",
                matrix.rows()
            ))
        })?;
        Ok(Self { dim, matrix })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn trace(&self) -> Complex64 {
        self.matrix.trace()
    }

    /// Evaluates the map as `tr_2[D (I (x) rho^T)]`.
    pub fn apply(&self, rho: &ComplexMatrix) -> Result<ComplexMatrix> {
        if rho.rows() != self.dim || rho.cols() != self.dim {
            return Err(Error::ShapeMismatch(format!(
                "state is {}x{}, channel dimension is {}",
                rho.rows(),
                rho.cols(),
                self.dim
            )));
        }
        let lifted = kron(&ComplexMatrix::identity(self.dim), &rho.transpose());
        let product = self.matrix.matmul(&lifted)?;
        partial_trace(&product, self.dim, self.dim, Subsystem::First)
    }

    /// Smallest eigenvalue together with the CP verdict.
    ///
    /// With `tolerance = None` the threshold is `CP_EIGENVALUE * tr(D)`.
    pub fn cp_check(&self, tolerance: Option<f64>) -> Result<CpCheck> {
        let dev = self.matrix.hermiticity_deviation();
        if dev > tol::HERMITICITY {
            return Err(Error::NotHermitian { deviation: dev });
        }
        let tolerance =
            tolerance.unwrap_or_else(|| tol::CP_EIGENVALUE * self.trace().re.max(0.0));
        let eig = linalg::hermitian_eigen(&self.matrix.hermitized()?)?;
        let lambda_min = eig.eigenvalues.last().copied().unwrap_or(0.0);
        Ok(CpCheck {
            is_cp: lambda_min >= -tolerance,
            lambda_min,
        })
    }
}

/// The linear superoperator acting on row-stacked density matrices.
#[derive(Debug, Clone, PartialEq)]
pub struct Superoperator {
    dim: usize,
    matrix: ComplexMatrix,
}

impl Superoperator {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::ShapeMismatch(
                "superoperator must be square".into(),
            ));
        }
        let dim = perfect_sqrt(matrix.rows()).ok_or_else(|| {
            Error::ShapeMismatch(format!(
                "superoperator side {} is not a perfect square",
                matrix.rows()
            ))
        })?;
        Ok(Self { dim, matrix })
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            dim,
            matrix: ComplexMatrix::identity(dim * dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    /// `mat(Phi vec(rho))`.
    pub fn apply(&self, rho: &ComplexMatrix) -> Result<ComplexMatrix> {
        if rho.rows() != self.dim || rho.cols() != self.dim {
            return Err(Error::ShapeMismatch(format!(
                "state is {}x{}, channel dimension is {}",
                rho.rows(),
                rho.cols(),
                self.dim
            )));
        }
        let out = self.matrix.mul_vec(rho.entries())?;
        ComplexMatrix::new(self.dim, self.dim, out)
    }
}

/// CP verdict with the diagnostic minimum Choi eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CpCheck {
    pub is_cp: bool,
    pub lambda_min: f64,
}

/// Verification summary for a channel.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub cp: bool,
    pub tp: bool,
    pub unital: bool,
    pub lambda_min: f64,
    pub choi_trace: f64,
    pub tp_deviation: f64,
    pub unital_deviation: f64,
    pub hermiticity_deviation: f64,
}

/// A channel held in exactly one representation.
#[derive(Debug, Clone, PartialEq)]
pub enum Channel {
    Kraus(KrausSet),
    Choi(ChoiMatrix),
    Superop(Superoperator),
}

impl Channel {
    pub fn dim(&self) -> usize {
        match self {
            Channel::Kraus(k) => k.dim(),
            Channel::Choi(c) => c.dim(),
            Channel::Superop(s) => s.dim(),
        }
    }

    pub fn apply(&self, rho: &ComplexMatrix) -> Result<ComplexMatrix> {
        match self {
            Channel::Kraus(k) => k.apply(rho),
            Channel::Choi(c) => c.apply(rho),
            Channel::Superop(s) => s.apply(rho),
        }
    }

    pub fn to_choi(&self) -> ChoiMatrix {
        match self {
            Channel::Kraus(k) => kraus_to_choi(k),
            Channel::Choi(c) => c.clone(),
            Channel::Superop(s) => superop_to_choi(s),
        }
    }

    pub fn to_superop(&self) -> Superoperator {
        match self {
            Channel::Kraus(k) => kraus_to_superop(k),
            Channel::Choi(c) => choi_to_superop(c),
            Channel::Superop(s) => s.clone(),
        }
    }

    pub fn to_kraus(&self, cutoff: Option<f64>) -> Result<KrausSet> {
        match self {
            Channel::Kraus(k) => Ok(k.clone()),
            Channel::Choi(c) => choi_to_kraus(c, cutoff),
            Channel::Superop(s) => superop_to_kraus(s, cutoff),
        }
    }

    pub fn cp_check(&self, tolerance: Option<f64>) -> Result<CpCheck> {
        self.to_choi().cp_check(tolerance)
    }

    /// Trace preservation: the completeness relation for a Kraus set, the
    /// partial-trace constraint (input side reduces to the identity) for the
    /// other representations.
    pub fn is_tp(&self, tolerance: Option<f64>) -> bool {
        self.tp_deviation() <= tolerance.unwrap_or(tol::VERIFICATION)
    }

    pub fn tp_deviation(&self) -> f64 {
        match self {
            Channel::Kraus(k) => k.completeness_deviation(),
            _ => {
                let choi = self.to_choi();
                let d = choi.dim();
                partial_trace(choi.matrix(), d, d, Subsystem::Second)
                    .and_then(|m| m.max_abs_diff(&ComplexMatrix::identity(d)))
                    .expect("choi shape")
            }
        }
    }

    /// Unitality: the maximally mixed state is a fixed point, equivalently
    /// the output-side partial trace of the Choi matrix is the identity.
    pub fn is_unital(&self, tolerance: Option<f64>) -> bool {
        self.unital_deviation() <= tolerance.unwrap_or(tol::VERIFICATION)
    }

    pub fn unital_deviation(&self) -> f64 {
        let choi = self.to_choi();
        let d = choi.dim();
        partial_trace(choi.matrix(), d, d, Subsystem::First)
            .and_then(|m| m.max_abs_diff(&ComplexMatrix::identity(d)))
            .expect("choi shape")
    }

    pub fn verify(&self, tolerance: Option<f64>) -> Result<VerificationReport> {
        let choi = self.to_choi();
        let cp = choi.cp_check(tolerance)?;
        let tol_v = tolerance.unwrap_or(tol::VERIFICATION);
        let tp_deviation = self.tp_deviation();
        let unital_deviation = self.unital_deviation();
        Ok(VerificationReport {
            cp: cp.is_cp,
            tp: tp_deviation <= tol_v,
            unital: unital_deviation <= tol_v,
            lambda_min: cp.lambda_min,
            choi_trace: choi.trace().re,
            tp_deviation,
            unital_deviation,
            hermiticity_deviation: choi.matrix().hermiticity_deviation(),
        })
    }
}

/// `D = sum_n vec(K_n) vec(K_n)^dag`; Hermitian by construction.
pub fn kraus_to_choi(k: &KrausSet) -> ChoiMatrix {
    let d = k.dim();
    let mut m = ComplexMatrix::zeros(d * d, d * d);
    for op in k.operators() {
        let v = op.vectorize();
        m = m.add(&v.outer(&v)).expect("shape");
    }
    ChoiMatrix { dim: d, matrix: m }
}

/// `Phi = sum_n K_n (x) conj(K_n)` in a fixed order over `n`.
pub fn kraus_to_superop(k: &KrausSet) -> Superoperator {
    let d = k.dim();
    let mut m = ComplexMatrix::zeros(d * d, d * d);
    for op in k.operators() {
        m = m.add(&kron(op, &op.conjugate())).expect("shape");
    }
    Superoperator { dim: d, matrix: m }
}

/// `Phi = mat(R vec(D))`: a pure index permutation.
pub fn choi_to_superop(choi: &ChoiMatrix) -> Superoperator {
    let d = choi.dim();
    let r = ReshuffleSpec::square(d).expect("positive dim");
    let shuffled = r.apply(choi.matrix().entries()).expect("length");
    Superoperator {
        dim: d,
        matrix: ComplexMatrix::new(d * d, d * d, shuffled).expect("length"),
    }
}

/// `D = mat(R^{-1} vec(Phi))`: exact inverse of [`choi_to_superop`].
pub fn superop_to_choi(superop: &Superoperator) -> ChoiMatrix {
    let d = superop.dim();
    let r = ReshuffleSpec::square(d).expect("positive dim");
    let shuffled = r.apply_inverse(superop.matrix().entries()).expect("length");
    ChoiMatrix {
        dim: d,
        matrix: ComplexMatrix::new(d * d, d * d, shuffled).expect("length"),
    }
}

/// Kraus extraction from the Choi eigendecomposition, `K_n = sqrt(l_n) M_n`.
///
/// The matrix is symmetrized first (rejected if it deviates from Hermitian by
/// more than [`tol::HERMITICITY`]). Eigenvalues above `cutoff` are kept,
/// eigenvalues below `-cutoff * d` fail the extraction; with `cutoff = None`
/// the default is `KRAUS_CUTOFF * tr(D)`. Each eigenvector phase is fixed by
/// rotating its largest-magnitude component (lowest index on ties) to the
/// positive real axis, so the returned set is reproducible.
pub fn choi_to_kraus(choi: &ChoiMatrix, cutoff: Option<f64>) -> Result<KrausSet> {
    let dev = choi.matrix().hermiticity_deviation();
    if dev > tol::HERMITICITY {
        return Err(Error::NotHermitian { deviation: dev });
    }
    let d = choi.dim();
    let symmetrized = choi.matrix().hermitized()?;
    let cutoff = cutoff.unwrap_or_else(|| tol::KRAUS_CUTOFF * symmetrized.trace().re.max(0.0));
    let eig = linalg::hermitian_eigen(&symmetrized)?;
    let lambda_min = eig.eigenvalues.last().copied().unwrap_or(0.0);
    if lambda_min < -cutoff * d as f64 {
        return Err(Error::NotCompletelyPositive { lambda_min });
    }
    let mut operators = Vec::new();
    for (n, &lambda) in eig.eigenvalues.iter().enumerate() {
        if lambda <= cutoff {
            continue;
        }
        let mut column: Vec<Complex64> = (0..d * d).map(|i| eig.eigenvectors.get(i, n)).collect();
        fix_phase(&mut column);
        let scale = lambda.sqrt();
        for z in &mut column {
            *z *= scale;
        }
        operators.push(ComplexMatrix::new(d, d, column)?);
    }
    if operators.is_empty() {
        return Err(Error::InvalidArgument(
            "Choi matrix has no eigenvalue above the cutoff".into(),
        ));
    }
    Ok(KrausSet {
        dim: d,
        operators,
    })
}

pub fn superop_to_kraus(superop: &Superoperator, cutoff: Option<f64>) -> Result<KrausSet> {
    choi_to_kraus(&superop_to_choi(superop), cutoff)
}

/// Rotates the largest-magnitude component (lowest index on ties) onto the
/// positive real axis.
fn fix_phase(v: &mut [Complex64]) {
    let mut best = 0;
    let mut best_mag = 0.0;
    for (i, z) in v.iter().enumerate() {
        let mag = z.norm();
        if mag > best_mag {
            best = i;
            best_mag = mag;
        }
    }
    if best_mag == 0.0 {
        return;
    }
    let w = v[best].conj() / best_mag;
    for z in v.iter_mut() {
        *z *= w;
    }
}

/// State associated with a CP trace-preserving channel: `D / d`, the image of
/// the maximally entangled state under `T (x) I`.
pub fn jamiolkowski_state(channel: &Channel) -> Result<ComplexMatrix> {
    let choi = channel.to_choi();
    let check = choi.cp_check(None)?;
    if !check.is_cp {
        return Err(Error::NotCompletelyPositive {
            lambda_min: check.lambda_min,
        });
    }
    Ok(choi
        .matrix
        .scale(Complex64::new(1.0 / choi.dim as f64, 0.0)))
}

fn unitarity_deviation(u: &ComplexMatrix) -> f64 {
    if !u.is_square() {
        return f64::INFINITY;
    }
    u.adjoint()
        .matmul(u)
        .and_then(|m| m.max_abs_diff(&ComplexMatrix::identity(u.rows())))
        .unwrap_or(f64::INFINITY)
}

/// Evaluates the dilated evolution `tr_2[U (rho (x) omega) U^dag]`.
///
/// `rho` lives on the first factor, `omega` on the second; the map defined by
/// fixing `omega` and `u12` is CP and trace-preserving.
pub fn stinespring_apply(
    u12: &ComplexMatrix,
    omega: &ComplexMatrix,
    rho: &ComplexMatrix,
) -> Result<ComplexMatrix> {
    if !rho.is_square() || !omega.is_square() {
        return Err(Error::ShapeMismatch(
            "states in a dilation must be square".into(),
        ));
    }
    let d1 = rho.rows();
    let d2 = omega.rows();
    if u12.rows() != d1 * d2 || u12.cols() != d1 * d2 {
        return Err(Error::ShapeMismatch(format!(
            "dilation unitary is {}x{}, expected {0}x{0} with side {}",
            u12.rows(),
            u12.cols(),
            d1 * d2
        )));
    }
    let dev = unitarity_deviation(u12);
    if dev > tol::UNITARITY {
        return Err(Error::InvalidArgument(format!(
            "dilation matrix is not unitary (|U^dag U - I| = {dev:.3e})"
        )));
    }
    validate_density_matrix(omega, tol::STATE_VALIDITY)?;
    let joint = kron(rho, omega);
    let evolved = u12.matmul(&joint)?.matmul(&u12.adjoint())?;
    partial_trace(&evolved, d1, d2, Subsystem::First)
}

/// Kraus operators of the channel defined by a dilation unitary with the
/// environment prepared in its ground state:
/// `K_n = (I (x) <n|) U (I (x) |0>)`.
pub fn kraus_from_dilation(u12: &ComplexMatrix, d_sys: usize) -> Result<KrausSet> {
    if !u12.is_square() || d_sys == 0 || u12.rows() % d_sys != 0 {
        return Err(Error::ShapeMismatch(format!(
            "dilation of side {} does not factor over system dimension {}",
            u12.rows(),
            d_sys
        )));
    }
    let d_env = u12.rows() / d_sys;
    let dev = unitarity_deviation(u12);
    if dev > tol::UNITARITY {
        return Err(Error::InvalidArgument(format!(
            "dilation matrix is not unitary (|U^dag U - I| = {dev:.3e})"
        )));
    }
    let operators = (0..d_env)
        .map(|n| {
            ComplexMatrix::from_fn(d_sys, d_sys, |a, b| u12.get(a * d_env + n, b * d_env))
        })
        .collect();
    KrausSet::new(operators)
}

/// The identity channel on a `d`-dimensional system.
pub fn identity_channel(d: usize) -> Channel {
    Channel::Kraus(KrausSet {
        dim: d,
        operators: vec![ComplexMatrix::identity(d)],
    })
}

/// Unitary conjugation `rho -> U rho U^dag`.
pub fn unitary_channel(u: ComplexMatrix) -> Result<Channel> {
    let dev = unitarity_deviation(&u);
    if dev > tol::UNITARITY {
        return Err(Error::InvalidArgument(format!(
            "matrix is not unitary (|U^dag U - I| = {dev:.3e})"
        )));
    }
    Ok(Channel::Kraus(KrausSet {
        dim: u.rows(),
        operators: vec![u],
    }))
}

/// Depolarizing channel `rho -> (1 - p) rho + p I/d`, in Weyl-operator Kraus
/// form; for a qubit the operators are proportional to `{I, X, Y, Z}`.
pub fn depolarizing(d: usize, p: f64) -> Result<Channel> {
    if d == 0 {
        return Err(Error::InvalidArgument("dimension must be positive".into()));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidArgument(format!(
            "depolarizing strength {p} outside [0, 1]"
        )));
    }
    let dd = (d * d) as f64;
    let w0 = 1.0 - p + p / dd;
    let w = p / dd;
    let mut operators = Vec::new();
    if w0 > 0.0 {
        operators.push(ComplexMatrix::identity(d).scale(Complex64::new(w0.sqrt(), 0.0)));
    }
    if w > 0.0 {
        for j in 0..d {
            for k in 0..d {
                if j == 0 && k == 0 {
                    continue;
                }
                operators.push(weyl(d, j, k).scale(Complex64::new(w.sqrt(), 0.0)));
            }
        }
    }
    Ok(Channel::Kraus(KrausSet { dim: d, operators }))
}

/// Qubit amplitude damping with decay probability `gamma`.
pub fn amplitude_damping(gamma: f64) -> Result<Channel> {
    if !(0.0..=1.0).contains(&gamma) {
        return Err(Error::InvalidArgument(format!(
            "damping rate {gamma} outside [0, 1]"
        )));
    }
    let k0 = ComplexMatrix::from_re_im(
        2,
        2,
        &[(1.0, 0.0), (0.0, 0.0), (0.0, 0.0), ((1.0 - gamma).sqrt(), 0.0)],
    )?;
    let k1 = ComplexMatrix::from_re_im(
        2,
        2,
        &[(0.0, 0.0), (gamma.sqrt(), 0.0), (0.0, 0.0), (0.0, 0.0)],
    )?;
    Ok(Channel::Kraus(KrausSet {
        dim: 2,
        operators: vec![k0, k1],
    }))
}

/// Qubit phase damping with rate `lambda`.
pub fn phase_damping(lambda: f64) -> Result<Channel> {
    if !(0.0..=1.0).contains(&lambda) {
        return Err(Error::InvalidArgument(format!(
            "damping rate {lambda} outside [0, 1]"
        )));
    }
    let k0 = ComplexMatrix::from_re_im(
        2,
        2,
        &[(1.0, 0.0), (0.0, 0.0), (0.0, 0.0), ((1.0 - lambda).sqrt(), 0.0)],
    )?;
    let k1 = ComplexMatrix::from_re_im(
        2,
        2,
        &[(0.0, 0.0), (0.0, 0.0), (0.0, 0.0), (lambda.sqrt(), 0.0)],
    )?;
    Ok(Channel::Kraus(KrausSet {
        dim: 2,
        operators: vec![k0, k1],
    }))
}

/// The transpose map, carried in Choi form: its Choi matrix is the SWAP
/// operator, which is not positive semidefinite, so no Kraus form exists.
pub fn transpose_map(d: usize) -> Result<Channel> {
    let swap = SwapSpec::new(d, d)?.to_matrix();
    Ok(Channel::Choi(ChoiMatrix {
        dim: d,
        matrix: swap,
    }))
}

/// Max-abs entrywise distance between the superoperator matrices of two
/// channels; zero exactly when they describe the same map.
pub fn channel_distance(a: &Channel, b: &Channel) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(Error::ShapeMismatch(format!(
            "channels of dimension {} and {}",
            a.dim(),
            b.dim()
        )));
    }
    a.to_superop().matrix().max_abs_diff(b.to_superop().matrix())
}
