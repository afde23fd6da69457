//! Brute-force concurrence from a truncated two-mode Fock-space state.
//!
//! The state is expanded over number states and the concurrence is read off
//! its Schmidt coefficients, `C = 2 s1 s2`. The purity of the reduced density
//! matrix gives the same number through `sqrt(2 (1 - Tr rho^2))`, but that
//! square root turns rounding at 1e-16 into errors near 1e-8 for separable
//! states, so it is kept as a cross-check only. None of this shares code with
//! the closed-form path beyond the coherent-state expansion itself.

use nalgebra::{DMatrix, SymmetricEigen};

use crate::analytic::SuperpositionCoeffs;
use crate::coherent::{default_truncation, fock_vector, CoherentConfig};
use crate::error::{Error, Result};

/// Third reduced-density eigenvalue above which the Schmidt rank exceeds two.
pub const SCHMIDT_RANK_LIMIT: f64 = 1e-6;

/// Normalized two-mode state stored row-major: index `m * truncation + n`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductStateVector {
    coefficients: Vec<f64>,
    truncation: usize,
    norm_before_normalization: f64,
}

impl ProductStateVector {
    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn norm_before_normalization(&self) -> f64 {
        self.norm_before_normalization
    }

    /// Amplitude matrix with mode 1 along rows and mode 2 along columns.
    pub fn as_matrix(&self) -> DMatrix<f64> {
        DMatrix::from_row_slice(self.truncation, self.truncation, &self.coefficients)
    }
}

/// Expands `mu|a,b> + lambda|a,d> + rho|g,b> + nu|g,d>` over the first
/// `truncation` number states of each mode.
pub fn build_state(
    config: &CoherentConfig,
    coeffs: &SuperpositionCoeffs,
    truncation: usize,
) -> Result<ProductStateVector> {
    let fa = fock_vector(config.alpha, truncation)?;
    let fb = fock_vector(config.beta, truncation)?;
    let fg = fock_vector(config.gamma, truncation)?;
    let fd = fock_vector(config.delta, truncation)?;
    let (fa, fb, fg, fd) = (fa.coefficients(), fb.coefficients(), fg.coefficients(), fd.coefficients());
    let SuperpositionCoeffs { mu, lambda, rho, nu } = *coeffs;

    let mut coefficients = Vec::with_capacity(truncation * truncation);
    for m in 0..truncation {
        // Factor the mode-1 amplitudes out of each row.
        let (left_b, left_d) = (mu * fa[m] + rho * fg[m], lambda * fa[m] + nu * fg[m]);
        coefficients.extend((0..truncation).map(|n| left_b * fb[n] + left_d * fd[n]));
    }

    let norm = coefficients.iter().map(|c| c * c).sum::<f64>().sqrt();
    if !(norm > 0.0) {
        return Err(Error::DegenerateState { norm_squared: norm * norm });
    }
    coefficients.iter_mut().for_each(|c| *c /= norm);
    Ok(ProductStateVector { coefficients, truncation, norm_before_normalization: norm })
}

/// Reduced density matrix of one mode.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedDensity {
    matrix: DMatrix<f64>,
}

impl ReducedDensity {
    /// Wraps a square, symmetric, unit-trace matrix.
    pub fn from_matrix(matrix: DMatrix<f64>) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::Domain("reduced density must be square".into()));
        }
        let asym = (&matrix - matrix.transpose()).amax();
        if asym > 1e-12 {
            return Err(Error::Domain(format!("reduced density not symmetric ({asym:e})")));
        }
        if (matrix.trace() - 1.0).abs() > 1e-10 {
            return Err(Error::Domain(format!("reduced density trace {} != 1", matrix.trace())));
        }
        Ok(Self { matrix })
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    /// `Tr rho^2`, the squared Frobenius norm for a symmetric matrix.
    pub fn purity(&self) -> f64 {
        self.matrix.iter().map(|v| v * v).sum()
    }

    /// Eigenvalues in descending order.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut ev: Vec<f64> = SymmetricEigen::new(self.matrix.clone()).eigenvalues.iter().copied().collect();
        ev.sort_by(|a, b| b.total_cmp(a));
        ev
    }
}

/// Traces out mode 2: `rho_A[m, m'] = sum_n psi[m, n] psi[m', n]`.
pub fn reduced_density(state: &ProductStateVector) -> ReducedDensity {
    let psi = state.as_matrix();
    ReducedDensity { matrix: &psi * psi.transpose() }
}

/// Traces out mode 1 instead.
pub fn reduced_density_second(state: &ProductStateVector) -> ReducedDensity {
    let psi = state.as_matrix();
    ReducedDensity { matrix: psi.transpose() * &psi }
}

/// `sqrt(2 (1 - Tr rho^2))`, valid for pure states of Schmidt rank at most two.
pub fn purity_concurrence(rho: &ReducedDensity) -> Result<f64> {
    let ev = rho.eigenvalues();
    if let Some(&third) = ev.get(2) {
        if third > SCHMIDT_RANK_LIMIT {
            return Err(Error::InternalConsistency(format!("Schmidt rank exceeds two: third eigenvalue {third:e}")));
        }
    }
    Ok((2.0 * (1.0 - rho.purity())).max(0.0).sqrt().min(1.0))
}

/// Singular values of the amplitude matrix in descending order.
pub fn schmidt_coefficients(state: &ProductStateVector) -> Vec<f64> {
    let mut sv: Vec<f64> = state.as_matrix().singular_values().iter().copied().collect();
    sv.sort_by(|a, b| b.total_cmp(a));
    sv
}

/// `2 s1 s2` from the two leading Schmidt coefficients.
pub fn schmidt_concurrence(state: &ProductStateVector) -> Result<f64> {
    let sv = schmidt_coefficients(state);
    if let Some(&third) = sv.get(2) {
        if third * third > SCHMIDT_RANK_LIMIT {
            return Err(Error::InternalConsistency(format!(
                "Schmidt rank exceeds two: third eigenvalue {:e}",
                third * third
            )));
        }
    }
    let s1 = sv.first().copied().unwrap_or(0.0);
    let s2 = sv.get(1).copied().unwrap_or(0.0);
    Ok((2.0 * s1 * s2).min(1.0))
}

/// End-to-end oracle at a given truncation.
pub fn oracle_concurrence(config: &CoherentConfig, coeffs: &SuperpositionCoeffs, truncation: usize) -> Result<f64> {
    schmidt_concurrence(&build_state(config, coeffs, truncation)?)
}

/// Oracle at the default truncation for the configuration's largest amplitude.
pub fn oracle_concurrence_default(config: &CoherentConfig, coeffs: &SuperpositionCoeffs) -> Result<f64> {
    oracle_concurrence(config, coeffs, default_truncation(config.max_amplitude()))
}
