//! Input document describing one state.
//!
//! ```text
//! # either amplitudes ...
//! alpha = 0
//! beta = 0
//! gamma = 1
//! delta = 1
//! # ... or overlaps (p1, p2, or x for both)
//! # p1 = 0.5
//! mu = 1
//! lambda = 0
//! rho = 0
//! nu = -1
//! truncation = 40
//! ```

use coherent_concurrence::{CoherentConfig, OverlapPair, SuperpositionCoeffs};

use crate::error::CliError;
use crate::kv::Document;

const KEYS: &[&str] = &["alpha", "beta", "gamma", "delta", "p1", "p2", "x", "mu", "lambda", "rho", "nu", "truncation"];

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Basis {
    Amplitudes(CoherentConfig),
    Overlaps(OverlapPair),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateSpec {
    pub basis: Basis,
    pub coeffs: SuperpositionCoeffs,
    pub truncation: Option<usize>,
}

impl StateSpec {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        Self::from_document(&Document::parse(text)?)
    }

    pub fn from_document(doc: &Document) -> Result<Self, CliError> {
        doc.check_keys(KEYS)?;
        let amp_keys = ["alpha", "beta", "gamma", "delta"];
        let has_amps = amp_keys.iter().any(|k| doc.contains(k));
        let has_overlaps = ["p1", "p2", "x"].iter().any(|k| doc.contains(k));

        let basis = match (has_amps, has_overlaps) {
            (true, true) => return Err(CliError::Input("give either amplitudes or overlaps, not both".into())),
            (false, false) => return Err(CliError::Input("no amplitudes or overlaps given".into())),
            (true, false) => {
                let mut v = [0.0; 4];
                for (slot, key) in v.iter_mut().zip(amp_keys) {
                    *slot = doc.get_f64(key)?.ok_or_else(|| CliError::Input(format!("amplitude `{key}` missing")))?;
                }
                Basis::Amplitudes(CoherentConfig::new(v[0], v[1], v[2], v[3])?)
            }
            (false, true) => {
                let x = doc.get_f64("x")?;
                let (p1, p2) = match (x, doc.get_f64("p1")?, doc.get_f64("p2")?) {
                    (Some(x), None, None) => (x, x),
                    (None, Some(p1), Some(p2)) => (p1, p2),
                    _ => return Err(CliError::Input("give `x`, or both `p1` and `p2`".into())),
                };
                Basis::Overlaps(OverlapPair::new(p1, p2)?)
            }
        };

        let coeff = |k: &str, default: f64| -> Result<f64, CliError> { Ok(doc.get_f64(k)?.unwrap_or(default)) };
        let coeffs =
            SuperpositionCoeffs::new(coeff("mu", 1.0)?, coeff("lambda", 0.0)?, coeff("rho", 0.0)?, coeff("nu", 0.0)?)?;
        let truncation = doc.get_usize("truncation")?;
        if truncation == Some(0) {
            return Err(CliError::Input("truncation must be at least 1".into()));
        }
        Ok(Self { basis, coeffs, truncation })
    }

    pub fn overlaps(&self) -> OverlapPair {
        match self.basis {
            Basis::Amplitudes(c) => c.overlaps(),
            Basis::Overlaps(p) => p,
        }
    }

    /// Serializes with shortest round-trip float formatting.
    pub fn to_document(&self) -> Document {
        let mut d = Document::default();
        match self.basis {
            Basis::Amplitudes(c) => {
                d.set("alpha", c.alpha.to_string());
                d.set("beta", c.beta.to_string());
                d.set("gamma", c.gamma.to_string());
                d.set("delta", c.delta.to_string());
            }
            Basis::Overlaps(p) => {
                d.set("p1", p.p1().to_string());
                d.set("p2", p.p2().to_string());
            }
        }
        let SuperpositionCoeffs { mu, lambda, rho, nu } = self.coeffs;
        for (k, v) in [("mu", mu), ("lambda", lambda), ("rho", rho), ("nu", nu)] {
            d.set(k, v.to_string());
        }
        if let Some(t) = self.truncation {
            d.set("truncation", t.to_string());
        }
        d
    }
}
