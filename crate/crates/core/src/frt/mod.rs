//! Graded matrices, the braid matrix and the RTT / RLL relations.

pub mod checks;
pub mod matrix;

pub use matrix::{
    graded_kron, graded_kron_scalar, graded_permutation, permutation, r_hat, CycMatrix, GradingConvention, PolyMatrix,
};
