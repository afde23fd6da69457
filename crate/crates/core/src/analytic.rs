//! Closed-form normalization, orthonormal-basis amplitudes and concurrence
//! of `mu|a,b> + lambda|a,d> + rho|g,b> + nu|g,d>` for real parameters.

use serde::{Deserialize, Serialize};

use crate::coherent::OverlapPair;
use crate::error::{domain, Error, Result};

/// Norm-squared values at or below this are treated as a dependent state.
pub const DEGENERATE_NORM_SQUARED: f64 = 1e-14;

/// Concurrence values up to `1 + CONSISTENCY_LIMIT` are rounding noise and are
/// clamped to one; anything larger is reported as a bug.
const CONSISTENCY_LIMIT: f64 = 1e-9;

/// Coefficients `(mu, lambda, rho, nu)` of the four product terms.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SuperpositionCoeffs {
    pub mu: f64,
    pub lambda: f64,
    pub rho: f64,
    pub nu: f64,
}

impl SuperpositionCoeffs {
    pub fn new(mu: f64, lambda: f64, rho: f64, nu: f64) -> Result<Self> {
        let c = Self { mu, lambda, rho, nu };
        if !c.as_array().iter().all(|v| v.is_finite()) {
            return Err(domain("coefficients must be finite"));
        }
        if c.as_array().iter().all(|&v| v == 0.0) {
            return Err(domain("all four coefficients are zero"));
        }
        Ok(c)
    }

    /// Coefficients in the `mu = 1` gauge.
    pub fn gauged(lambda: f64, rho: f64, nu: f64) -> Result<Self> {
        Self::new(1.0, lambda, rho, nu)
    }

    pub fn as_array(&self) -> [f64; 4] {
        [self.mu, self.lambda, self.rho, self.nu]
    }

    pub fn scaled(&self, k: f64) -> Self {
        Self { mu: self.mu * k, lambda: self.lambda * k, rho: self.rho * k, nu: self.nu * k }
    }

    /// Exchanges the roles of the two modes (`lambda <-> rho`).
    pub fn swapped(&self) -> Self {
        Self { lambda: self.rho, rho: self.lambda, ..*self }
    }

    pub(crate) fn require_unit_mu(&self) -> Result<()> {
        if self.mu != 1.0 {
            return Err(domain(format!("mu = {} but this operation requires mu = 1", self.mu)));
        }
        Ok(())
    }
}

/// Amplitudes on the orthonormal product basis built from `|alpha>` and `|delta>`.
///
/// The state is `(a|00> + b|01> + c|10> + d|11>) / norm`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OrthonormalAmplitudes {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub norm: f64,
}

impl OrthonormalAmplitudes {
    /// Unit-norm amplitudes `[a, b, c, d] / norm`.
    pub fn normalized(&self) -> [f64; 4] {
        [self.a, self.b, self.c, self.d].map(|v| v / self.norm)
    }
}

/// Squared norm of the superposition, expanded over the nonorthogonal basis.
pub fn gram_norm_squared(coeffs: &SuperpositionCoeffs, overlaps: &OverlapPair) -> Result<f64> {
    let SuperpositionCoeffs { mu, lambda, rho, nu } = *coeffs;
    let (p1, p2) = (overlaps.p1(), overlaps.p2());
    let n2 = (mu * mu + lambda * lambda + rho * rho + nu * nu)
        + 2.0 * (mu * lambda + rho * nu) * p2
        + 2.0 * (mu * rho + lambda * nu) * p1
        + 2.0 * (mu * nu + lambda * rho) * p1 * p2;
    if !(n2 > DEGENERATE_NORM_SQUARED) {
        return Err(Error::DegenerateState { norm_squared: n2 });
    }
    Ok(n2)
}

/// Rewrites the state on the orthonormal basis
/// `{|alpha>, (|gamma> - p1|alpha>)/N1} x {|delta>, (|beta> - p2|delta>)/N2}`.
pub fn orthonormal_amplitudes(coeffs: &SuperpositionCoeffs, overlaps: &OverlapPair) -> Result<OrthonormalAmplitudes> {
    let SuperpositionCoeffs { mu, lambda, rho, nu } = *coeffs;
    let (p1, p2) = (overlaps.p1(), overlaps.p2());
    let (n1, n2) = (overlaps.n1(), overlaps.n2());
    let norm = gram_norm_squared(coeffs, overlaps)?.sqrt();
    Ok(OrthonormalAmplitudes {
        a: mu * p2 + lambda + rho * p1 * p2 + nu * p1,
        b: n2 * (mu + rho * p1),
        c: n1 * (nu + rho * p2),
        d: rho * n1 * n2,
        norm,
    })
}

fn clamp_concurrence(c: f64) -> Result<f64> {
    if c > 1.0 + CONSISTENCY_LIMIT || c.is_nan() {
        return Err(Error::InternalConsistency(format!("concurrence {c} exceeds one")));
    }
    Ok(c.min(1.0))
}

/// Pure-state concurrence `2|ad - bc| / norm^2`.
pub fn concurrence_from_amplitudes(amps: &OrthonormalAmplitudes) -> Result<f64> {
    let n2 = amps.norm * amps.norm;
    clamp_concurrence(2.0 * (amps.a * amps.d - amps.b * amps.c).abs() / n2)
}

/// Closed-form concurrence `2|mu nu - lambda rho| N1 N2 / N^2`.
pub fn concurrence(coeffs: &SuperpositionCoeffs, overlaps: &OverlapPair) -> Result<f64> {
    let n2 = gram_norm_squared(coeffs, overlaps)?;
    let det = coeffs.mu * coeffs.nu - coeffs.lambda * coeffs.rho;
    clamp_concurrence(2.0 * det.abs() * overlaps.n1() * overlaps.n2() / n2)
}

/// The two branches of the maximality residual at common overlap `x`.
///
/// Each branch is `N^2 -/+ 2 (mu nu - lambda rho)(1 - x^2)` written as a sum of
/// squares, so both are nonnegative and free of cancellation:
///
/// * first:  `(mu - nu)^2 (1 - x^2) + (lambda + rho + (mu + nu) x)^2`
/// * second: `(mu + nu + (lambda + rho) x)^2 + (lambda - rho)^2 (1 - x^2)`
pub fn residual_branches(coeffs: &SuperpositionCoeffs, x: f64) -> (f64, f64) {
    let SuperpositionCoeffs { mu, lambda, rho, nu } = *coeffs;
    let s = lambda + rho;
    let w = 1.0 - x * x;
    let first = (mu - nu).powi(2) * w + (s + (mu + nu) * x).powi(2);
    let second = (mu + nu + s * x).powi(2) + (lambda - rho).powi(2) * w;
    (first, second)
}

/// `N^2 - 2|mu nu - lambda rho|(1 - x^2)` at `p1 = p2 = x`.
///
/// Nonnegative, and zero exactly when the concurrence equals one.
pub fn maximality_residual(coeffs: &SuperpositionCoeffs, x: f64) -> f64 {
    let (first, second) = residual_branches(coeffs, x);
    first.min(second)
}

/// `1 - C` at `p1 = p2 = x`, evaluated without subtracting nearly equal numbers.
pub fn concurrence_deficit(coeffs: &SuperpositionCoeffs, x: f64) -> Result<f64> {
    let overlaps = OverlapPair::limit(x, x)?;
    let n2 = gram_norm_squared(coeffs, &overlaps)?;
    Ok(maximality_residual(coeffs, x) / n2)
}
