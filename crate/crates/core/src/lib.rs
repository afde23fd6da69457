//! Entanglement of two-qubit states built from nonorthogonal coherent states.
//!
//! A state `mu|alpha,beta> + lambda|alpha,delta> + rho|gamma,beta> + nu|gamma,delta>`
//! with real amplitudes and coefficients is analysed three ways:
//!
//! * [`analytic`]: closed-form norm, orthonormal-basis amplitudes and concurrence;
//! * [`classify`]: the maximal/separable verdict at a common overlap `x`;
//! * [`oracle`]: brute-force concurrence from a truncated Fock-space expansion.
//!
//! [`scanner`] searches coefficient space for maximally entangled states and
//! checks that they fall into the two known classes.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analytic;
pub mod classify;
pub mod coherent;
pub mod error;
pub mod oracle;
pub mod scanner;

pub use analytic::{
    concurrence, concurrence_from_amplitudes, gram_norm_squared, maximality_residual, orthonormal_amplitudes,
    OrthonormalAmplitudes, SuperpositionCoeffs,
};
pub use classify::{classify, ClassificationResult, MaximalClass, RootReport, Verdict};
pub use coherent::{default_truncation, fock_vector, overlap, CoherentConfig, FockVector, OverlapPair};
pub use error::{Error, Result};
pub use oracle::{oracle_concurrence, oracle_concurrence_default};
pub use scanner::{ScanConfig, ScanRecord};
