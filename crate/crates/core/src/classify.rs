//! Classification of maximally entangled and separable states at a common
//! overlap `x = <alpha|gamma> = <delta|beta>`, and the root analysis of the
//! two quadratics that the maximality condition splits into.
//!
//! With `mu = 1` the state has concurrence one exactly when
//!
//! * class A: `nu = 1` and `lambda + rho = -2x`, or
//! * class B: `lambda = rho` and `nu + 1 = -2 lambda x`,
//!
//! and it is separable exactly when `nu = lambda rho`.

use serde::{Deserialize, Serialize};

use crate::analytic::{concurrence, SuperpositionCoeffs};
use crate::coherent::OverlapPair;
use crate::error::{domain, Result};

/// Default tolerance on the linear condition residuals.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Roots closer than this to 0 or 1 are outside the open interval.
pub const BOUNDARY_MARGIN: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MaximalClass {
    A,
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    MaximalClassA,
    MaximalClassB,
    Separable,
    Intermediate,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::MaximalClassA => "MaximalClassA",
            Verdict::MaximalClassB => "MaximalClassB",
            Verdict::Separable => "Separable",
            Verdict::Intermediate => "Intermediate",
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConditionResiduals {
    /// `|nu - 1| + |lambda + rho + 2x|`
    pub class_a: f64,
    /// `|lambda - rho| + |nu + 1 + 2 lambda x|`
    pub class_b: f64,
    /// `|nu - lambda rho|`
    pub separability: f64,
}

impl ConditionResiduals {
    pub fn new(lambda: f64, rho: f64, nu: f64, x: f64) -> Self {
        Self {
            class_a: (nu - 1.0).abs() + (lambda + rho + 2.0 * x).abs(),
            class_b: (lambda - rho).abs() + (nu + 1.0 + 2.0 * lambda * x).abs(),
            separability: (nu - lambda * rho).abs(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassificationResult {
    pub verdict: Verdict,
    pub concurrence: f64,
    pub residuals: ConditionResiduals,
}

pub(crate) fn require_open_unit(x: f64) -> Result<()> {
    if !(x > 0.0 && x < 1.0) {
        return Err(domain(format!("overlap x = {x} outside the open interval (0,1)")));
    }
    Ok(())
}

fn check_preconditions(coeffs: &SuperpositionCoeffs, x: f64, tol: f64) -> Result<()> {
    coeffs.require_unit_mu()?;
    require_open_unit(x)?;
    if !(tol > 0.0) {
        return Err(domain(format!("tolerance {tol} must be positive")));
    }
    Ok(())
}

/// `nu = 1` and `lambda + rho = -2x`, each within `tol`.
pub fn check_class_a(coeffs: &SuperpositionCoeffs, x: f64, tol: f64) -> Result<bool> {
    check_preconditions(coeffs, x, tol)?;
    Ok((coeffs.nu - 1.0).abs() <= tol && (coeffs.lambda + coeffs.rho + 2.0 * x).abs() <= tol)
}

/// `lambda = rho` and `nu + 1 = -2 lambda x`, each within `tol`.
pub fn check_class_b(coeffs: &SuperpositionCoeffs, x: f64, tol: f64) -> Result<bool> {
    check_preconditions(coeffs, x, tol)?;
    Ok((coeffs.lambda - coeffs.rho).abs() <= tol && (coeffs.nu + 1.0 + 2.0 * coeffs.lambda * x).abs() <= tol)
}

/// Full verdict at `p1 = p2 = x`.
///
/// Separability is tested first, then class A, then class B. All residuals
/// are reported regardless of the verdict.
pub fn classify(coeffs: &SuperpositionCoeffs, x: f64, tol: f64) -> Result<ClassificationResult> {
    check_preconditions(coeffs, x, tol)?;
    let conc = concurrence(coeffs, &OverlapPair::symmetric(x)?)?;
    let residuals = ConditionResiduals::new(coeffs.lambda, coeffs.rho, coeffs.nu, x);
    let verdict = if residuals.separability <= tol {
        Verdict::Separable
    } else if check_class_a(coeffs, x, tol)? {
        Verdict::MaximalClassA
    } else if check_class_b(coeffs, x, tol)? {
        Verdict::MaximalClassB
    } else {
        Verdict::Intermediate
    };
    Ok(ClassificationResult { verdict, concurrence: conc, residuals })
}

/// A point on the requested maximal manifold, parameterized by `lambda = free_param`.
pub fn solve_coefficients_for_x(class: MaximalClass, x: f64, free_param: f64) -> Result<SuperpositionCoeffs> {
    require_open_unit(x)?;
    match class {
        MaximalClass::A => SuperpositionCoeffs::gauged(free_param, -2.0 * x - free_param, 1.0),
        MaximalClass::B => SuperpositionCoeffs::gauged(free_param, free_param, -1.0 - 2.0 * free_param * x),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RootCase {
    /// Branch `nu > lambda rho`.
    Case1,
    /// Branch `nu < lambda rho`.
    Case2,
}

/// Real roots of one branch quadratic and the subset lying in (0,1).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootReport {
    pub case: RootCase,
    /// Coefficients `[x^2, x, 1]`.
    pub coefficients: [f64; 3],
    pub discriminant: f64,
    /// Distinct real roots in ascending order; a double root appears once.
    pub roots: Vec<f64>,
    pub feasible_roots: Vec<f64>,
    /// Every coefficient vanishes, so every `x` solves the equation.
    pub identically_zero: bool,
}

impl RootReport {
    pub fn evaluate(&self, x: f64) -> f64 {
        let [a, b, c] = self.coefficients;
        (a * x + b) * x + c
    }

    pub fn has_feasible_root(&self) -> bool {
        self.identically_zero || !self.feasible_roots.is_empty()
    }
}

fn is_feasible(r: f64) -> bool {
    r > BOUNDARY_MARGIN && r < 1.0 - BOUNDARY_MARGIN
}

/// Solves `a x^2 + b x + c = 0` given an exactly factored discriminant.
fn solve_quadratic(case: RootCase, a: f64, b: f64, c: f64, discriminant: f64) -> RootReport {
    let mut roots = Vec::new();
    let mut identically_zero = false;
    if a == 0.0 {
        if b != 0.0 {
            roots.push(-c / b);
        } else if c == 0.0 {
            identically_zero = true;
        }
    } else if discriminant == 0.0 {
        roots.push(-b / (2.0 * a));
    } else if discriminant > 0.0 {
        let sq = discriminant.sqrt();
        let q = -0.5 * (b + if b >= 0.0 { sq } else { -sq });
        let (r1, r2) = (q / a, c / q);
        roots.push(r1.min(r2));
        roots.push(r1.max(r2));
    }
    let feasible_roots = roots.iter().copied().filter(|&r| is_feasible(r)).collect();
    RootReport { case, coefficients: [a, b, c], discriminant, roots, feasible_roots, identically_zero }
}

/// `4 nu x^2 + 2(lambda + rho)(1 + nu) x + (1 - nu)^2 + (lambda + rho)^2 = 0`.
///
/// Discriminant (reduced, i.e. `b^2/4 - ac` over 4) is `(1 - nu)^2 ((lambda + rho)^2 - 4 nu)`.
/// The `nu = 0` equation is linear with the single root
/// `(1 + (lambda + rho)^2) / (-2 (lambda + rho))`.
pub fn quadratic_roots_case1(lambda: f64, rho: f64, nu: f64) -> RootReport {
    let s = lambda + rho;
    let a = 4.0 * nu;
    let b = 2.0 * s * (1.0 + nu);
    let c = (1.0 - nu).powi(2) + s * s;
    let reduced = (1.0 - nu).powi(2) * (s * s - 4.0 * nu);
    solve_quadratic(RootCase::Case1, a, b, c, 4.0 * reduced)
}

/// `4 lambda rho x^2 + 2(lambda + rho)(1 + nu) x + (1 + nu)^2 + (lambda - rho)^2 = 0`.
///
/// The discriminant factors as `4 (lambda - rho)^2 ((1 + nu)^2 - 4 lambda rho)`.
pub fn quadratic_roots_case2(lambda: f64, rho: f64, nu: f64) -> RootReport {
    let s = lambda + rho;
    let a = 4.0 * lambda * rho;
    let b = 2.0 * s * (1.0 + nu);
    let c = (1.0 + nu).powi(2) + (lambda - rho).powi(2);
    let reduced = (lambda - rho).powi(2) * ((1.0 + nu).powi(2) - 4.0 * lambda * rho);
    solve_quadratic(RootCase::Case2, a, b, c, 4.0 * reduced)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn gauged(l: f64, r: f64, n: f64) -> SuperpositionCoeffs {
        SuperpositionCoeffs::gauged(l, r, n).unwrap()
    }

    #[test]
    fn class_a_examples() {
        let x = 0.5;
        assert!(check_class_a(&gauged(-x, -x, 1.0), x, DEFAULT_TOL).unwrap());
        assert!(check_class_a(&gauged(-2.0 * x, 0.0, 1.0), x, DEFAULT_TOL).unwrap());
        assert!(!check_class_a(&gauged(0.0, 0.0, -1.0), x, DEFAULT_TOL).unwrap());
    }

    #[test]
    fn class_b_examples() {
        for x in [0.1, 0.5, 0.9] {
            assert!(check_class_b(&gauged(0.0, 0.0, -1.0), x, DEFAULT_TOL).unwrap());
        }
        let x = 0.5;
        assert!(check_class_b(&gauged(-1.0 / x, -1.0 / x, 1.0), x, DEFAULT_TOL).unwrap());
        assert!(check_class_b(&gauged(1.0 / x, 1.0 / x, -3.0), x, DEFAULT_TOL).unwrap());
    }

    #[test]
    fn class_checks_reject_bad_inputs() {
        let c = gauged(0.0, 0.0, -1.0);
        for x in [0.0, 1.0, -0.2, f64::NAN] {
            assert!(check_class_a(&c, x, DEFAULT_TOL).is_err());
            assert!(check_class_b(&c, x, DEFAULT_TOL).is_err());
            assert!(classify(&c, x, DEFAULT_TOL).is_err());
        }
        assert!(check_class_a(&c, 0.5, 0.0).is_err());
        let scaled = SuperpositionCoeffs::new(2.0, 0.0, 0.0, -2.0).unwrap();
        assert!(classify(&scaled, 0.5, DEFAULT_TOL).is_err());
    }

    #[test]
    fn classify_examples() {
        let r = classify(&gauged(0.3, 0.7, 0.21), 0.6065306597, DEFAULT_TOL).unwrap();
        assert_eq!(r.verdict, Verdict::Separable);
        assert_eq!(r.concurrence, 0.0);

        let r = classify(&gauged(0.5, -1.5, 1.0), 0.5, DEFAULT_TOL).unwrap();
        assert_eq!(r.verdict, Verdict::MaximalClassA);
        assert_abs_diff_eq!(r.concurrence, 1.0, epsilon = 1e-12);

        let r = classify(&gauged(0.2, -0.3, 0.5), 0.5, DEFAULT_TOL).unwrap();
        assert_eq!(r.verdict, Verdict::Intermediate);
        assert!(r.concurrence > 0.0 && r.concurrence < 1.0);
        assert!(r.residuals.class_a > 0.0 && r.residuals.class_b > 0.0 && r.residuals.separability > 0.0);

        let r = classify(&gauged(-2.0, -2.0, 1.0), 0.5, DEFAULT_TOL).unwrap();
        assert_eq!(r.verdict, Verdict::MaximalClassB);
        let r = classify(&gauged(1.0, 1.0, 1.0), 0.5, DEFAULT_TOL).unwrap();
        assert_eq!(r.verdict, Verdict::Separable);
    }

    #[test]
    fn solve_coefficients_examples() {
        let a = solve_coefficients_for_x(MaximalClass::A, 0.5, -0.5).unwrap();
        assert_eq!(a.as_array(), [1.0, -0.5, -0.5, 1.0]);
        let b = solve_coefficients_for_x(MaximalClass::B, 0.5, 0.0).unwrap();
        assert_eq!(b.as_array(), [1.0, 0.0, 0.0, -1.0]);
        let limit = solve_coefficients_for_x(MaximalClass::A, 1e-12, 0.7).unwrap();
        assert_abs_diff_eq!(limit.rho, -0.7, epsilon = 1e-11);
        assert!(solve_coefficients_for_x(MaximalClass::B, 1.0, 0.0).is_err());
    }

    #[test]
    fn case1_double_root() {
        let r = quadratic_roots_case1(-0.6, -0.6, 1.0);
        assert_eq!(r.discriminant, 0.0);
        assert_eq!(r.roots.len(), 1);
        assert_abs_diff_eq!(r.roots[0], 0.6, epsilon = 1e-15);
        assert_eq!(r.feasible_roots.len(), 1);
    }

    #[test]
    fn case1_linear_branch_is_infeasible() {
        let r = quadratic_roots_case1(-0.5, -0.5, 0.0);
        assert_eq!(r.roots, vec![1.0]);
        assert!(r.feasible_roots.is_empty());
        // (1 + s^2)/(-2s) is never inside (0,1): it equals 1 + (1+s)^2/(-2s) for s < 0.
        for s in [-3.0, -2.0, -1.5, -0.9, -0.1, 0.3, 2.0] {
            let r = quadratic_roots_case1(s, 0.0, 0.0);
            assert!(r.feasible_roots.is_empty(), "s={s} -> {:?}", r.roots);
        }
    }

    #[test]
    fn case1_no_real_roots() {
        let r = quadratic_roots_case1(1.0, -1.0, 2.0);
        assert!(r.discriminant < 0.0);
        assert!(r.roots.is_empty());
    }

    #[test]
    fn case2_examples() {
        let r = quadratic_roots_case2(-1.0, -1.0, 0.0);
        assert_eq!(r.roots, vec![0.5]);
        assert_eq!(r.feasible_roots, vec![0.5]);

        let r = quadratic_roots_case2(1.0, 1.0, -1.0);
        assert_eq!(r.coefficients, [4.0, 0.0, 0.0]);
        assert_eq!(r.roots, vec![0.0]);
        assert!(r.feasible_roots.is_empty());

        let r = quadratic_roots_case2(1.0, 2.0, 0.0);
        assert!(r.feasible_roots.is_empty());
        // Independent sweep over (0,1): the quadratic stays away from zero.
        let min = (1..10_000).map(|i| r.evaluate(i as f64 * 1e-4)).fold(f64::INFINITY, f64::min);
        assert!(min > 0.5, "min {min}");
    }

    #[test]
    fn case2_identically_zero() {
        let r = quadratic_roots_case2(0.0, 0.0, -1.0);
        assert!(r.identically_zero);
        assert!(r.has_feasible_root());
    }

    #[test]
    fn roots_vanish() {
        for (l, r, n) in [(0.3, -1.7, -2.0), (2.0, 0.5, 0.1), (-1.0, 3.0, 0.5)] {
            for rep in [quadratic_roots_case1(l, r, n), quadratic_roots_case2(l, r, n)] {
                for &root in &rep.roots {
                    assert!(rep.evaluate(root).abs() < 1e-10, "{rep:?}");
                }
            }
        }
    }

    proptest! {
        #[test]
        fn class_conditions_are_disjoint(l in -4.0f64..4.0, r in -4.0f64..4.0, n in -4.0f64..4.0, x in 0.01f64..0.99) {
            let c = gauged(l, r, n);
            let a = check_class_a(&c, x, 1e-9).unwrap();
            let b = check_class_b(&c, x, 1e-9).unwrap();
            prop_assert!(!(a && b));
        }

        #[test]
        fn manifold_points_classify(x in 0.01f64..0.99, free in -3.0f64..3.0) {
            let a = solve_coefficients_for_x(MaximalClass::A, x, free).unwrap();
            let ra = classify(&a, x, DEFAULT_TOL).unwrap();
            prop_assert!((ra.concurrence - 1.0).abs() < 1e-10);
            prop_assert!(ra.verdict == Verdict::MaximalClassA);

            let b = solve_coefficients_for_x(MaximalClass::B, x, free).unwrap();
            let rb = classify(&b, x, DEFAULT_TOL).unwrap();
            prop_assert!((rb.concurrence - 1.0).abs() < 1e-10);
            // lambda = 0 on class B gives nu = -1; lambda rho = 0 keeps it off the separable set.
            prop_assert!(rb.verdict == Verdict::MaximalClassB);
        }
    }
}
