//! Parameter-space search for maximally entangled states.
//!
//! Grid (or seeded random) evaluation of the closed-form concurrence over
//! `(lambda, rho, nu, x)`, derivative-free refinement of every hit, and a
//! check that the refined maxima split into the two disjoint classes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analytic::{concurrence, concurrence_deficit, SuperpositionCoeffs};
use crate::classify::{check_class_a, check_class_b, require_open_unit, ConditionResiduals};
use crate::coherent::{CoherentConfig, OverlapPair};
use crate::error::{domain, Error, Result};
use crate::oracle::oracle_concurrence_default;

/// Largest number of points a single scan may evaluate.
pub const MAX_GRID_POINTS: u128 = 100_000_000;

/// Refined records with `C > 1 - MAXIMAL_GAP` count as maximally entangled.
pub const MAXIMAL_GAP: f64 = 1e-10;

/// Minimum concurrence accepted by [`refine`].
pub const REFINE_MIN_CONCURRENCE: f64 = 0.9;

const CHUNK: usize = 1 << 14;

/// Inclusive `[min, max]` sampled at `steps` evenly spaced values.
///
/// `steps == 1` requires `min == max` and pins the parameter.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParamRange {
    pub min: f64,
    pub max: f64,
    pub steps: usize,
}

impl ParamRange {
    pub fn new(min: f64, max: f64, steps: usize) -> Result<Self> {
        if !min.is_finite() || !max.is_finite() {
            return Err(domain("range bounds must be finite"));
        }
        match steps {
            0 => Err(domain("range needs at least one step")),
            1 if min != max => Err(domain("a swept range needs at least two steps")),
            _ if min > max => Err(domain(format!("range min {min} exceeds max {max}"))),
            _ => Ok(Self { min, max, steps }),
        }
    }

    pub fn fixed(value: f64) -> Result<Self> {
        Self::new(value, value, 1)
    }

    pub fn value(&self, i: usize) -> f64 {
        if self.steps == 1 {
            return self.min;
        }
        if i + 1 == self.steps {
            return self.max;
        }
        self.min + (self.max - self.min) * i as f64 / (self.steps - 1) as f64
    }

    pub fn spacing(&self) -> f64 {
        if self.steps == 1 {
            0.0
        } else {
            (self.max - self.min) / (self.steps - 1) as f64
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ScanMode {
    Grid,
    /// Uniform draws inside the ranges; each x value gets `samples` points.
    Random {
        samples: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanConfig {
    pub lambda: ParamRange,
    pub rho: ParamRange,
    pub nu: ParamRange,
    pub x_values: Vec<f64>,
    pub concurrence_threshold: f64,
    pub seed: u64,
    pub mode: ScanMode,
    /// Fraction of hits re-checked against the Fock-space oracle.
    pub oracle_fraction: f64,
    pub refine: bool,
}

impl ScanConfig {
    pub fn new(lambda: ParamRange, rho: ParamRange, nu: ParamRange, x_values: Vec<f64>) -> Self {
        Self {
            lambda,
            rho,
            nu,
            x_values,
            concurrence_threshold: 0.999,
            seed: 0,
            mode: ScanMode::Grid,
            oracle_fraction: 0.01,
            refine: true,
        }
    }

    pub fn validate(&self) -> Result<()> {
        for r in [&self.lambda, &self.rho, &self.nu] {
            ParamRange::new(r.min, r.max, r.steps)?;
        }
        if self.x_values.is_empty() {
            return Err(domain("no x values given"));
        }
        for &x in &self.x_values {
            require_open_unit(x)?;
        }
        let t = self.concurrence_threshold;
        if !(t > 0.0 && t <= 1.0) {
            return Err(domain(format!("concurrence threshold {t} outside (0,1]")));
        }
        if !(0.0..=1.0).contains(&self.oracle_fraction) {
            return Err(domain("oracle fraction outside [0,1]"));
        }
        if let ScanMode::Random { samples: 0 } = self.mode {
            return Err(domain("random mode needs at least one sample"));
        }
        Ok(())
    }

    pub fn point_count(&self) -> u128 {
        let per_x = match self.mode {
            ScanMode::Grid => self.lambda.steps as u128 * self.rho.steps as u128 * self.nu.steps as u128,
            ScanMode::Random { samples } => samples as u128,
        };
        per_x * self.x_values.len() as u128
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RefineStatus {
    Unrefined,
    Converged,
    /// Sweep cap reached while still improving.
    Unconverged,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub lambda: f64,
    pub rho: f64,
    pub nu: f64,
    pub x: f64,
    pub concurrence: f64,
    pub class_a_residual: f64,
    pub class_b_residual: f64,
    /// `1 - C`, evaluated in cancellation-free form.
    pub deficit: f64,
    pub status: RefineStatus,
}

impl ScanRecord {
    pub fn evaluate(lambda: f64, rho: f64, nu: f64, x: f64) -> Result<Self> {
        let coeffs = SuperpositionCoeffs::gauged(lambda, rho, nu)?;
        let conc = concurrence(&coeffs, &OverlapPair::symmetric(x)?)?;
        let deficit = concurrence_deficit(&coeffs, x)?;
        let res = ConditionResiduals::new(lambda, rho, nu, x);
        Ok(Self {
            lambda,
            rho,
            nu,
            x,
            concurrence: conc,
            class_a_residual: res.class_a,
            class_b_residual: res.class_b,
            deficit,
            status: RefineStatus::Unrefined,
        })
    }

    pub fn coeffs(&self) -> SuperpositionCoeffs {
        SuperpositionCoeffs { mu: 1.0, lambda: self.lambda, rho: self.rho, nu: self.nu }
    }

    pub fn is_maximal(&self) -> bool {
        self.concurrence > 1.0 - MAXIMAL_GAP
    }
}

fn grid_point(config: &ScanConfig, index: usize) -> (f64, f64, f64, f64) {
    let (nl, nr, nn) = (config.lambda.steps, config.rho.steps, config.nu.steps);
    let per_x = nl * nr * nn;
    let (xi, rem) = (index / per_x, index % per_x);
    let (li, rem) = (rem / (nr * nn), rem % (nr * nn));
    let (ri, ni) = (rem / nn, rem % nn);
    (config.lambda.value(li), config.rho.value(ri), config.nu.value(ni), config.x_values[xi])
}

fn draw(rng: &mut ChaCha8Rng, r: &ParamRange) -> f64 {
    if r.steps == 1 {
        r.min
    } else {
        rng.gen_range(r.min..=r.max)
    }
}

fn scan_chunk(config: &ScanConfig, chunk: usize, total: usize) -> Result<Vec<ScanRecord>> {
    let start = chunk * CHUNK;
    let end = (start + CHUNK).min(total);
    // Per-chunk stream keeps random mode independent of the thread count.
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(chunk as u64);
    let mut hits = Vec::new();
    for index in start..end {
        let (l, r, n, x) = match config.mode {
            ScanMode::Grid => grid_point(config, index),
            ScanMode::Random { samples } => {
                let x = config.x_values[index / samples];
                (draw(&mut rng, &config.lambda), draw(&mut rng, &config.rho), draw(&mut rng, &config.nu), x)
            }
        };
        let rec = ScanRecord::evaluate(l, r, n, x)?;
        if rec.concurrence >= config.concurrence_threshold {
            hits.push(rec);
        }
    }
    Ok(hits)
}

/// Records with `C >= threshold`, in grid (or draw) order.
pub fn grid_scan(config: &ScanConfig) -> Result<Vec<ScanRecord>> {
    config.validate()?;
    let points = config.point_count();
    if points > MAX_GRID_POINTS {
        return Err(Error::GridTooLarge { points, limit: MAX_GRID_POINTS });
    }
    let total = points as usize;
    let chunks = total.div_ceil(CHUNK);
    let per_chunk: Vec<Vec<ScanRecord>> =
        (0..chunks).into_par_iter().map(|c| scan_chunk(config, c, total)).collect::<Result<_>>()?;
    Ok(per_chunk.into_iter().flatten().collect())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RefineOptions {
    pub max_sweeps: usize,
    /// Initial half-width of each golden-section bracket.
    pub bracket: f64,
    /// Deficit `1 - C` at which the search stops early.
    pub target_deficit: f64,
}

impl Default for RefineOptions {
    fn default() -> Self {
        Self { max_sweeps: 2000, bracket: 0.5, target_deficit: 1e-28 }
    }
}

const GOLDEN: f64 = 0.618_033_988_749_894_9;
const MIN_BRACKET: f64 = 1e-15;

/// Golden-section search for a minimum of `f` on `[lo, hi]`; returns the best point seen.
fn golden_section(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> (f64, f64) {
    let mut x1 = hi - GOLDEN * (hi - lo);
    let mut x2 = lo + GOLDEN * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..200 {
        if hi - lo <= 4.0 * f64::EPSILON * (lo.abs() + hi.abs()) + f64::MIN_POSITIVE {
            break;
        }
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - GOLDEN * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + GOLDEN * (hi - lo);
            f2 = f(x2);
        }
    }
    if f1 <= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Coordinate descent on `1 - C` over `(lambda, rho, nu)` at fixed `x`.
///
/// `1 - C` is the maximality residual divided by `N^2`; it vanishes on the
/// same set and never lets a step lower the concurrence.
pub fn refine_with(record: &ScanRecord, options: &RefineOptions) -> Result<ScanRecord> {
    if !(record.concurrence >= REFINE_MIN_CONCURRENCE) {
        return Err(domain(format!(
            "refine needs concurrence >= {REFINE_MIN_CONCURRENCE}, got {}",
            record.concurrence
        )));
    }
    let x = record.x;
    require_open_unit(x)?;
    let objective = |p: &[f64; 3]| {
        let c = SuperpositionCoeffs { mu: 1.0, lambda: p[0], rho: p[1], nu: p[2] };
        concurrence_deficit(&c, x).unwrap_or(f64::INFINITY)
    };

    let mut p = [record.lambda, record.rho, record.nu];
    let mut best = objective(&p);
    let mut width = [options.bracket; 3];
    let mut status = RefineStatus::Unconverged;
    for _ in 0..options.max_sweeps {
        if best <= options.target_deficit {
            status = RefineStatus::Converged;
            break;
        }
        let before = best;
        for k in 0..3 {
            let centre = p[k];
            let line = |t: f64| {
                let mut q = p;
                q[k] = t;
                objective(&q)
            };
            let (t, ft) = golden_section(line, centre - width[k], centre + width[k]);
            if ft < best {
                width[k] = (4.0 * (t - centre).abs()).max(MIN_BRACKET * (1.0 + t.abs()));
                p[k] = t;
                best = ft;
            } else {
                width[k] = (0.5 * width[k]).max(MIN_BRACKET * (1.0 + centre.abs()));
            }
        }
        let stalled = best >= before && width.iter().zip(&p).all(|(w, v)| *w <= MIN_BRACKET * (1.0 + v.abs()));
        if stalled {
            status = RefineStatus::Converged;
            break;
        }
    }

    let mut out = ScanRecord::evaluate(p[0], p[1], p[2], x)?;
    if out.concurrence < record.concurrence {
        // Only rounding in the closed form can get here; keep the input point.
        out = *record;
    }
    out.status = status;
    Ok(out)
}

pub fn refine(record: &ScanRecord) -> Result<ScanRecord> {
    refine_with(record, &RefineOptions::default())
}

/// Outcome of checking that refined maxima fall into exactly one class.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DisjointnessReport {
    pub tol: f64,
    pub total: usize,
    pub maximal: usize,
    pub class_a: usize,
    pub class_b: usize,
    pub unconverged: usize,
    /// Records satisfying both class conditions.
    pub in_both: Vec<ScanRecord>,
    /// Maximal records satisfying neither class condition.
    pub in_neither: Vec<ScanRecord>,
}

impl DisjointnessReport {
    pub fn passed(&self) -> bool {
        self.in_both.is_empty() && self.in_neither.is_empty()
    }

    pub fn failures(&self) -> Vec<String> {
        let fmt = |tag: &str, r: &ScanRecord| {
            format!(
                "{tag}: lambda={:.17e} rho={:.17e} nu={:.17e} x={:.17e} C={:.17e} res_a={:.3e} res_b={:.3e}",
                r.lambda, r.rho, r.nu, r.x, r.concurrence, r.class_a_residual, r.class_b_residual
            )
        };
        self.in_both
            .iter()
            .map(|r| fmt("both classes", r))
            .chain(self.in_neither.iter().map(|r| fmt("maximal but in neither class", r)))
            .collect()
    }

    pub fn into_result(self) -> Result<Self> {
        if self.passed() {
            Ok(self)
        } else {
            Err(Error::InternalConsistency(self.failures().join("\n")))
        }
    }
}

/// Every maximal record must satisfy exactly one class condition at `tol`,
/// and no record may satisfy both.
pub fn verify_disjoint_classes(records: &[ScanRecord], tol: f64) -> Result<DisjointnessReport> {
    let mut report = DisjointnessReport {
        tol,
        total: records.len(),
        maximal: 0,
        class_a: 0,
        class_b: 0,
        unconverged: 0,
        in_both: Vec::new(),
        in_neither: Vec::new(),
    };
    for r in records {
        let coeffs = r.coeffs();
        let a = check_class_a(&coeffs, r.x, tol)?;
        let b = check_class_b(&coeffs, r.x, tol)?;
        if r.status == RefineStatus::Unconverged {
            report.unconverged += 1;
        }
        if a && b {
            report.in_both.push(*r);
        }
        if !r.is_maximal() {
            continue;
        }
        report.maximal += 1;
        match (a, b) {
            (true, false) => report.class_a += 1,
            (false, true) => report.class_b += 1,
            (false, false) => report.in_neither.push(*r),
            (true, true) => {}
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OracleSpotCheck {
    pub index: usize,
    pub analytic: f64,
    pub oracle: f64,
}

impl OracleSpotCheck {
    pub fn discrepancy(&self) -> f64 {
        (self.analytic - self.oracle).abs()
    }
}

/// Re-evaluates a seeded random subset of records with the Fock-space oracle,
/// using `beta = alpha = 0` and `delta = gamma = sqrt(-2 ln x)`.
pub fn oracle_spot_check(records: &[ScanRecord], fraction: f64, seed: u64) -> Result<Vec<OracleSpotCheck>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let chosen: Vec<usize> = (0..records.len()).filter(|_| rng.gen::<f64>() < fraction).collect();
    chosen
        .into_par_iter()
        .map(|index| {
            let r = &records[index];
            let config = CoherentConfig::symmetric_for_overlap(r.x)?;
            let oracle = oracle_concurrence_default(&config, &r.coeffs())?;
            Ok(OracleSpotCheck { index, analytic: r.concurrence, oracle })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanOutcome {
    pub evaluated: u128,
    pub records: Vec<ScanRecord>,
    pub report: DisjointnessReport,
    pub oracle_checks: Vec<OracleSpotCheck>,
}

/// Scan, refine every hit that qualifies, spot-check against the oracle and
/// verify the class split.
pub fn run_scan(config: &ScanConfig, tol: f64) -> Result<ScanOutcome> {
    let hits = grid_scan(config)?;
    let records: Vec<ScanRecord> = if config.refine {
        hits.par_iter()
            .map(|r| if r.concurrence >= REFINE_MIN_CONCURRENCE { refine(r) } else { Ok(*r) })
            .collect::<Result<_>>()?
    } else {
        hits
    };
    let report = verify_disjoint_classes(&records, tol)?;
    let oracle_checks = oracle_spot_check(&records, config.oracle_fraction, config.seed)?;
    Ok(ScanOutcome { evaluated: config.point_count(), records, report, oracle_checks })
}
