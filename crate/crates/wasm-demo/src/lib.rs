//! Browser bindings: a concurrence heat map over (lambda, rho), a single-state
//! classifier, and concurrence as a function of the overlap.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

use coherent_concurrence::analytic::concurrence;
use coherent_concurrence::classify::classify;
use coherent_concurrence::{OverlapPair, SuperpositionCoeffs};
use wasm_bindgen::prelude::*;

/// Largest grid edge or curve length the page may request.
pub const MAX_STEPS: usize = 1024;

fn js_err(e: impl std::fmt::Display) -> JsValue {
    JsValue::from_str(&e.to_string())
}

fn check_steps(steps: usize) -> Result<(), String> {
    if (2..=MAX_STEPS).contains(&steps) {
        Ok(())
    } else {
        Err(format!("steps must be between 2 and {MAX_STEPS}, got {steps}"))
    }
}

fn linspace(min: f64, max: f64, steps: usize, i: usize) -> f64 {
    min + (max - min) * i as f64 / (steps - 1) as f64
}

fn heatmap_impl(nu: f64, x: f64, min: f64, max: f64, steps: usize) -> Result<Vec<f64>, String> {
    check_steps(steps)?;
    if !(min < max && min.is_finite() && max.is_finite()) {
        return Err(format!("empty range [{min}, {max}]"));
    }
    let overlaps = OverlapPair::symmetric(x).map_err(|e| e.to_string())?;
    let mut out = Vec::with_capacity(steps * steps);
    for row in 0..steps {
        let rho = linspace(max, min, steps, row);
        for col in 0..steps {
            let lambda = linspace(min, max, steps, col);
            // All-zero coefficients are impossible with mu = 1, so only a vanishing norm can fail.
            let c = SuperpositionCoeffs::gauged(lambda, rho, nu)
                .and_then(|k| concurrence(&k, &overlaps))
                .unwrap_or(f64::NAN);
            out.push(c);
        }
    }
    Ok(out)
}

/// Row-major `steps x steps` concurrence values. Columns run over lambda from
/// `min` to `max`, rows over rho from `max` down to `min` (image orientation).
#[wasm_bindgen]
pub fn concurrence_heatmap(nu: f64, x: f64, min: f64, max: f64, steps: usize) -> Result<Vec<f64>, JsValue> {
    heatmap_impl(nu, x, min, max, steps).map_err(js_err)
}

fn curve_impl(lambda: f64, rho: f64, nu: f64, steps: usize) -> Result<Vec<f64>, String> {
    check_steps(steps)?;
    let coeffs = SuperpositionCoeffs::gauged(lambda, rho, nu).map_err(|e| e.to_string())?;
    (0..steps)
        .map(|i| {
            // Open interval: skip the endpoints x = 0 and x = 1.
            let x = (i as f64 + 0.5) / steps as f64;
            let overlaps = OverlapPair::symmetric(x).map_err(|e| e.to_string())?;
            Ok(concurrence(&coeffs, &overlaps).unwrap_or(f64::NAN))
        })
        .collect()
}

/// Concurrence sampled at `x = (i + 1/2) / steps`.
#[wasm_bindgen]
pub fn concurrence_curve(lambda: f64, rho: f64, nu: f64, steps: usize) -> Result<Vec<f64>, JsValue> {
    curve_impl(lambda, rho, nu, steps).map_err(js_err)
}

#[wasm_bindgen]
pub struct Classification {
    verdict: String,
    pub concurrence: f64,
    pub class_a_residual: f64,
    pub class_b_residual: f64,
    pub separability_residual: f64,
}

#[wasm_bindgen]
impl Classification {
    #[wasm_bindgen(getter)]
    pub fn verdict(&self) -> String {
        self.verdict.clone()
    }
}

fn classify_impl(lambda: f64, rho: f64, nu: f64, x: f64, tol: f64) -> Result<Classification, String> {
    let coeffs = SuperpositionCoeffs::gauged(lambda, rho, nu).map_err(|e| e.to_string())?;
    let r = classify(&coeffs, x, tol).map_err(|e| e.to_string())?;
    Ok(Classification {
        verdict: r.verdict.as_str().to_string(),
        concurrence: r.concurrence,
        class_a_residual: r.residuals.class_a,
        class_b_residual: r.residuals.class_b,
        separability_residual: r.residuals.separability,
    })
}

#[wasm_bindgen]
pub fn classify_state(lambda: f64, rho: f64, nu: f64, x: f64, tol: f64) -> Result<Classification, JsValue> {
    classify_impl(lambda, rho, nu, x, tol).map_err(js_err)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heatmap_shape_and_values() {
        let map = heatmap_impl(1.0, 0.5, -2.0, 2.0, 5).unwrap();
        assert_eq!(map.len(), 25);
        // Row 3 is rho = -1, column 2 is lambda = 0: lambda + rho = -2x, class A.
        assert!((map[3 * 5 + 2] - 1.0).abs() < 1e-12);
        // Row 0 is rho = 2, column 4 is lambda = 2: nu = 1 vs lambda rho = 4.
        assert!(map[4] < 1.0);
        assert!(map.iter().all(|c| (0.0..=1.0).contains(c)));
    }

    #[test]
    fn heatmap_rejects_bad_input() {
        assert!(heatmap_impl(1.0, 1.5, -2.0, 2.0, 5).is_err());
        assert!(heatmap_impl(1.0, 0.5, 2.0, -2.0, 5).is_err());
        assert!(heatmap_impl(1.0, 0.5, -2.0, 2.0, 1).is_err());
        assert!(heatmap_impl(1.0, 0.5, -2.0, 2.0, MAX_STEPS + 1).is_err());
    }

    #[test]
    fn curve_matches_closed_form() {
        let steps = 10;
        let curve = curve_impl(0.0, 0.0, 1.0, steps).unwrap();
        for (i, c) in curve.iter().enumerate() {
            let x = (i as f64 + 0.5) / steps as f64;
            assert!((c - (1.0 - x * x) / (1.0 + x * x)).abs() < 1e-12);
        }
        // Antisymmetric combination stays maximal at every overlap.
        assert!(curve_impl(0.0, 0.0, -1.0, 50).unwrap().iter().all(|c| (c - 1.0).abs() < 1e-12));
    }

    #[test]
    fn classification() {
        assert_eq!(classify_impl(-0.5, -0.5, 1.0, 0.5, 1e-9).unwrap().verdict, "MaximalClassA");
        assert_eq!(classify_impl(-2.0, -2.0, 1.0, 0.5, 1e-9).unwrap().verdict, "MaximalClassB");
        assert_eq!(classify_impl(1.0, 1.0, 1.0, 0.5, 1e-9).unwrap().verdict, "Separable");
        let r = classify_impl(0.0, 0.0, 1.0, 0.5, 1e-9).unwrap();
        assert_eq!(r.verdict(), "Intermediate");
        assert!((r.concurrence - 0.6).abs() < 1e-12);
        assert!(classify_impl(0.0, 0.0, 1.0, 0.0, 1e-9).is_err());
    }
}
