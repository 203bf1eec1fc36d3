//! Vectorized treatment of quantum operations.
//!
//! The crate is organized around the row-major vectorization map `vec`, which
//! identifies a `p x q` matrix with a length-`pq` column vector by stacking its
//! rows. On top of that identification it provides:
//!
//! - [`veclib`]: the vectorization algebra itself — index fusion, Kronecker
//!   products, left/right action, the triple-product identity, SWAP and
//!   reshuffling permutations, and the partial trace;
//! - [`channels`]: completely positive maps in Kraus, Choi and superoperator
//!   form, lossless conversions between them, and CP/TP/unital verification;
//! - [`tomography`]: dual-basis construction and linear-inversion process
//!   tomography (standard, ancilla-assisted and entanglement-assisted),
//!   including noiseless and shot-sampled measurement simulation;
//! - [`linalg`]: the dense numerical kernels backing the above (Hermitian
//!   eigendecomposition, LU solves, condition numbers, pseudo-inverses);
//! - [`random`]: seeded generators for unitaries, states and CPTP channels.
//!
//! All operations are pure functions over immutable values. Reductions run in
//! a fixed order, so results are bit-reproducible whether or not the
//! `parallel` feature (rayon data-parallel kernels) is enabled.

pub mod channels;
pub mod error;
pub mod linalg;
pub mod random;
pub mod tol;
pub mod tomography;
pub mod veclib;

pub use channels::{Channel, ChoiMatrix, KrausSet, Superoperator};
pub use error::{Error, Result};
pub use veclib::{Complex64, ComplexMatrix, ReshuffleSpec, Subsystem, SwapSpec, VecOperator};
