//! Coherent-state primitives: real-amplitude overlaps and truncated
//! number-state (Fock) expansions.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

/// Largest amplitude magnitude accepted at the API boundary.
pub const MAX_AMPLITUDE: f64 = 8.0;

/// Largest photon-number cutoff per mode.
pub const MAX_TRUNCATION: usize = 256;

/// Default minimum separation between the two amplitudes of one mode.
pub const DEFAULT_DISTINCTNESS_TOL: f64 = 1e-9;

/// Tail mass above which a truncation is rejected.
pub const TAIL_MASS_LIMIT: f64 = 1e-10;

/// Overlap `<a1|a2>` of two coherent states with real amplitudes.
pub fn overlap(a1: f64, a2: f64) -> Result<f64> {
    if !a1.is_finite() || !a2.is_finite() {
        return Err(domain(format!("non-finite amplitude ({a1}, {a2})")));
    }
    let d = a1 - a2;
    Ok((-0.5 * d * d).exp())
}

/// The four real amplitudes spanning the two modes.
///
/// Mode 1 is spanned by `|alpha>` and `|gamma>`, mode 2 by `|beta>` and
/// `|delta>`. Construction rejects pairs that are not linearly independent.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoherentConfig {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub delta: f64,
}

impl CoherentConfig {
    pub fn new(alpha: f64, beta: f64, gamma: f64, delta: f64) -> Result<Self> {
        Self::with_tolerance(alpha, beta, gamma, delta, DEFAULT_DISTINCTNESS_TOL)
    }

    pub fn with_tolerance(alpha: f64, beta: f64, gamma: f64, delta: f64, tol: f64) -> Result<Self> {
        for (name, v) in [("alpha", alpha), ("beta", beta), ("gamma", gamma), ("delta", delta)] {
            if !v.is_finite() {
                return Err(domain(format!("{name} is not finite")));
            }
            if v.abs() > MAX_AMPLITUDE {
                return Err(domain(format!("|{name}| = {} exceeds {MAX_AMPLITUDE}", v.abs())));
            }
        }
        if (alpha - gamma).abs() <= tol {
            return Err(domain("alpha and gamma are not distinct; mode 1 basis is dependent"));
        }
        if (beta - delta).abs() <= tol {
            return Err(domain("beta and delta are not distinct; mode 2 basis is dependent"));
        }
        Ok(Self { alpha, beta, gamma, delta })
    }

    /// Symmetric configuration `beta = alpha`, `delta = gamma` with common overlap `x`.
    ///
    /// Places `alpha` at the origin and `gamma = sqrt(-2 ln x)`.
    pub fn symmetric_for_overlap(x: f64) -> Result<Self> {
        if !(x > 0.0 && x < 1.0) {
            return Err(domain(format!("overlap {x} outside (0,1)")));
        }
        let gamma = (-2.0 * x.ln()).sqrt();
        Self::new(0.0, 0.0, gamma, gamma)
    }

    /// `p1 = <alpha|gamma>`, `p2 = <delta|beta>`.
    pub fn overlaps(&self) -> OverlapPair {
        // Constructor guarantees finite, distinct amplitudes.
        let p1 = overlap(self.alpha, self.gamma).expect("finite");
        let p2 = overlap(self.delta, self.beta).expect("finite");
        OverlapPair { p1, p2 }
    }

    pub fn max_amplitude(&self) -> f64 {
        [self.alpha, self.beta, self.gamma, self.delta].into_iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}

/// Overlaps `p1 = <alpha|gamma>` and `p2 = <delta|beta>`, both strictly inside (0,1).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OverlapPair {
    p1: f64,
    p2: f64,
}

impl OverlapPair {
    pub fn new(p1: f64, p2: f64) -> Result<Self> {
        for (name, p) in [("p1", p1), ("p2", p2)] {
            if !(p > 0.0 && p < 1.0) {
                return Err(domain(format!("{name} = {p} outside the open interval (0,1)")));
            }
        }
        Ok(Self { p1, p2 })
    }

    /// Both overlaps equal to `x`.
    pub fn symmetric(x: f64) -> Result<Self> {
        Self::new(x, x)
    }

    /// Unchecked constructor allowing the closed interval `[0,1)`.
    ///
    /// Used for orthogonal-basis limits, which sit outside the open interval
    /// required for coherent states but keep the algebra well defined.
    pub fn limit(p1: f64, p2: f64) -> Result<Self> {
        for (name, p) in [("p1", p1), ("p2", p2)] {
            if !(0.0..1.0).contains(&p) {
                return Err(domain(format!("{name} = {p} outside [0,1)")));
            }
        }
        Ok(Self { p1, p2 })
    }

    pub fn p1(&self) -> f64 {
        self.p1
    }

    pub fn p2(&self) -> f64 {
        self.p2
    }

    pub fn swapped(&self) -> Self {
        Self { p1: self.p2, p2: self.p1 }
    }

    /// `sqrt(1 - p1^2)`, norm of the component of `|gamma>` orthogonal to `|alpha>`.
    pub fn n1(&self) -> f64 {
        (1.0 - self.p1 * self.p1).sqrt()
    }

    /// `sqrt(1 - p2^2)`, norm of the component of `|beta>` orthogonal to `|delta>`.
    pub fn n2(&self) -> f64 {
        (1.0 - self.p2 * self.p2).sqrt()
    }
}

/// Truncated number-state expansion of a real coherent state.
#[derive(Debug, Clone, PartialEq)]
pub struct FockVector {
    coefficients: Vec<f64>,
    tail_mass: f64,
}

impl FockVector {
    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    pub fn truncation(&self) -> usize {
        self.coefficients.len()
    }

    /// Probability mass beyond the cutoff, before renormalization.
    pub fn tail_mass(&self) -> f64 {
        self.tail_mass
    }

    pub fn dot(&self, other: &FockVector) -> f64 {
        self.coefficients.iter().zip(&other.coefficients).map(|(a, b)| a * b).sum()
    }
}

/// Cutoff that keeps the tail mass below 1e-12 for every amplitude up to `max_amp`.
pub fn default_truncation(max_amp: f64) -> usize {
    let a = max_amp.abs();
    (a * a + 10.0 * a + 20.0).ceil() as usize
}

/// Expands `|a>` over the first `truncation` number states and renormalizes.
///
/// Coefficients follow `c_{n+1} = c_n a / sqrt(n+1)` from `c_0 = exp(-a^2/2)`.
pub fn fock_vector(a: f64, truncation: usize) -> Result<FockVector> {
    if !a.is_finite() || a.abs() > MAX_AMPLITUDE {
        return Err(domain(format!("amplitude {a} outside [-{MAX_AMPLITUDE}, {MAX_AMPLITUDE}]")));
    }
    if truncation == 0 || truncation > MAX_TRUNCATION {
        return Err(domain(format!("truncation {truncation} outside [1, {MAX_TRUNCATION}]")));
    }

    let mut coefficients = Vec::with_capacity(truncation);
    let mut c = (-0.5 * a * a).exp();
    for n in 0..truncation {
        coefficients.push(c);
        c *= a / ((n + 1) as f64).sqrt();
    }

    // Sum the tail directly; 1 - sum(kept) would lose it to cancellation.
    let peak = a * a;
    let mut tail_mass = 0.0;
    let mut n = truncation;
    loop {
        let term = c * c;
        tail_mass += term;
        if (n as f64 > peak && term <= tail_mass * 1e-17) || term == 0.0 || n > 4 * MAX_TRUNCATION {
            break;
        }
        c *= a / ((n + 1) as f64).sqrt();
        n += 1;
    }

    if tail_mass >= TAIL_MASS_LIMIT {
        return Err(Error::Truncation { truncation, tail_mass });
    }

    let norm = coefficients.iter().map(|c| c * c).sum::<f64>().sqrt();
    coefficients.iter_mut().for_each(|c| *c /= norm);
    Ok(FockVector { coefficients, tail_mass })
}
