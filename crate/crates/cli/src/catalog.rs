//! Reference states: eleven maximally entangled and four separable
//! superpositions, parameterized by the squared amplitude gap `(alpha - gamma)^2`.
//!
//! Every state is stated in the `mu = 1` gauge. With `x = exp(-gap/2)` the
//! maximal ones sit on class A (`nu = 1`, `lambda + rho = -2x`) or class B
//! (`lambda = rho`, `nu + 1 = -2 lambda x`); the separable ones satisfy
//! `nu = lambda rho`.

use coherent_concurrence::{CoherentConfig, MaximalClass, Result, SuperpositionCoeffs};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Expected {
    Maximal(MaximalClass),
    Separable,
}

impl Expected {
    pub fn label(&self) -> &'static str {
        match self {
            Expected::Maximal(MaximalClass::A) => "maximal (class A)",
            Expected::Maximal(MaximalClass::B) => "maximal (class B)",
            Expected::Separable => "separable",
        }
    }
}

/// Which pair of amplitudes spans mode 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ModeTwo {
    /// `beta = g/2`, `delta = -g/2`: distinct from mode 1 but with the same overlap.
    Shifted,
    /// `beta = alpha`, `delta = gamma`.
    Mirrored,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct CatalogState {
    pub name: &'static str,
    pub expected: Expected,
    pub mode_two: ModeTwo,
    pub coeffs: SuperpositionCoeffs,
    pub config: CoherentConfig,
    pub x: f64,
}

type Builder = fn(f64) -> [f64; 3];
type Entry = (&'static str, ModeTwo, Builder);

const MAXIMAL_A: [(&str, ModeTwo, Builder); 6] = [
    ("A1: ab - x ad - x gb + gd", ModeTwo::Shifted, |x| [-x, -x, 1.0]),
    ("A2: ab - 2x ad + gd", ModeTwo::Shifted, |x| [-2.0 * x, 0.0, 1.0]),
    ("A3: ab + x ad - 3x gb + gd", ModeTwo::Shifted, |x| [x, -3.0 * x, 1.0]),
    ("A4: aa - x ag - x ga + gg", ModeTwo::Mirrored, |x| [-x, -x, 1.0]),
    ("A5: aa + x ag - 3x ga + gg", ModeTwo::Mirrored, |x| [x, -3.0 * x, 1.0]),
    ("A6: aa - 2x ag + gg", ModeTwo::Mirrored, |x| [-2.0 * x, 0.0, 1.0]),
];

const MAXIMAL_B: [(&str, ModeTwo, Builder); 5] = [
    ("B1: ab - gd", ModeTwo::Shifted, |_| [0.0, 0.0, -1.0]),
    ("B2: ab - ad/x - gb/x + gd", ModeTwo::Shifted, |x| [-1.0 / x, -1.0 / x, 1.0]),
    ("B3: ab - 2ad/x - 2gb/x + 3gd", ModeTwo::Shifted, |x| [-2.0 / x, -2.0 / x, 3.0]),
    ("B4: ab + ad/x + gb/x - 3gd", ModeTwo::Shifted, |x| [1.0 / x, 1.0 / x, -3.0]),
    ("B5: ab - ad/(2x) - gb/(2x)", ModeTwo::Shifted, |x| [-0.5 / x, -0.5 / x, 0.0]),
];

const SEPARABLE: [(&str, ModeTwo, Builder); 4] = [
    ("S1: ab + ad + gb + gd", ModeTwo::Shifted, |_| [1.0, 1.0, 1.0]),
    ("S2: ab + l ad + r gb + l r gd (l=0.3, r=0.7)", ModeTwo::Shifted, |_| [0.3, 0.7, 0.3 * 0.7]),
    ("S3: ab - ad + gb - gd", ModeTwo::Shifted, |_| [-1.0, 1.0, -1.0]),
    ("S4: ab + ad + r gb + r gd (r=-1.7)", ModeTwo::Shifted, |_| [1.0, -1.7, -1.7]),
];

fn config_for(gap_squared: f64, mode_two: ModeTwo) -> Result<CoherentConfig> {
    let g = gap_squared.sqrt();
    match mode_two {
        ModeTwo::Shifted => CoherentConfig::new(0.0, 0.5 * g, g, -0.5 * g),
        ModeTwo::Mirrored => CoherentConfig::new(0.0, 0.0, g, g),
    }
}

/// All fifteen reference states at the given `(alpha - gamma)^2`.
pub fn catalog(gap_squared: f64) -> Result<Vec<CatalogState>> {
    if !(gap_squared > 0.0) || !gap_squared.is_finite() {
        return Err(coherent_concurrence::Error::Domain(format!("gap squared {gap_squared} must be positive")));
    }
    let x = (-0.5 * gap_squared).exp();
    let groups: [(Expected, &[Entry]); 3] = [
        (Expected::Maximal(MaximalClass::A), &MAXIMAL_A),
        (Expected::Maximal(MaximalClass::B), &MAXIMAL_B),
        (Expected::Separable, &SEPARABLE),
    ];
    let mut out = Vec::new();
    for (expected, entries) in groups {
        for &(name, mode_two, build) in entries {
            let [lambda, rho, nu] = build(x);
            out.push(CatalogState {
                name,
                expected,
                mode_two,
                coeffs: SuperpositionCoeffs::gauged(lambda, rho, nu)?,
                config: config_for(gap_squared, mode_two)?,
                x,
            });
        }
    }
    Ok(out)
}
