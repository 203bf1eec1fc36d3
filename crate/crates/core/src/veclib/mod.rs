//! Vectorization algebra: index conventions, `vec`/`mat`, Kronecker products,
//! SWAP and reshuffling permutations, and the partial trace.

mod matrix;
mod perm;

pub use matrix::{
    hs_inner, index_fuse, index_split, kron, kron_vec, left_action, partial_trace, right_action,
    vec_triple, Complex64, ComplexMatrix, Subsystem, VecOperator,
};
pub use perm::{Permutation, ReshuffleSpec, SwapSpec};
