//! Default numerical tolerances.
//!
//! Every verification routine takes an explicit tolerance; these constants are
//! the defaults used when the caller passes `None`.

/// CP check: a Choi eigenvalue is counted as negative when it is below
/// `-CP_EIGENVALUE * tr(D)`.
pub const CP_EIGENVALUE: f64 = 1e-10;

/// Kraus extraction: Choi eigenvalues below `KRAUS_CUTOFF * tr(D)` are dropped.
pub const KRAUS_CUTOFF: f64 = 1e-12;

/// Maximum allowed `|D - D^dag|` before a Choi matrix is rejected instead of
/// being symmetrized.
pub const HERMITICITY: f64 = 1e-8;

/// Default tolerance for trace-preservation, unitality and POVM completeness
/// checks.
pub const VERIFICATION: f64 = 1e-10;

/// Condition numbers above this raise an ill-conditioned error in tomography.
pub const CONDITION_LIMIT: f64 = 1e8;

/// Pseudo-inverse mode: singular values below `PINV_RCOND * sigma_max` are
/// treated as zero.
pub const PINV_RCOND: f64 = 1e-10;

/// Maximum allowed `|U^dag U - I|` for a matrix accepted as unitary.
pub const UNITARITY: f64 = 1e-8;

/// Loose validity tolerance for density-matrix inputs (Hermiticity, trace,
/// positivity) accepted by simulation entry points.
pub const STATE_VALIDITY: f64 = 1e-8;
