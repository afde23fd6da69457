//! Subcommand implementations. Each one builds a typed report, renders it as
//! aligned text or JSON, and picks an exit status.

use std::fmt::Write as _;
use std::path::Path;

use coherent_concurrence::analytic::{concurrence, gram_norm_squared, orthonormal_amplitudes};
use coherent_concurrence::classify::{classify, solve_coefficients_for_x, ClassificationResult, Verdict};
use coherent_concurrence::oracle::{build_state, schmidt_concurrence};
use coherent_concurrence::scanner::{run_scan, DisjointnessReport, RefineStatus, ScanRecord};
use coherent_concurrence::{
    default_truncation, CoherentConfig, MaximalClass, OrthonormalAmplitudes, OverlapPair, SuperpositionCoeffs,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::catalog::{catalog, Expected};
use crate::error::{CliError, ExitStatus};
use crate::scan_config::parse_scan_config;
use crate::state_spec::{Basis, StateSpec};

/// `concurrence` exits with status 3 when analytic and oracle differ by more than this.
pub const CONCURRENCE_ORACLE_LIMIT: f64 = 1e-6;
/// `classify` requires `|p1 - p2|` at most this.
pub const CLASSIFY_SCOPE_TOL: f64 = 1e-12;
/// Reference states: tolerance on the closed-form concurrence.
pub const EXAMPLE_ANALYTIC_TOL: f64 = 1e-10;
/// Reference states: tolerance on the oracle concurrence.
pub const EXAMPLE_ORACLE_TOL: f64 = 1e-8;
/// `oracle-check` gate on both concurrence and norm discrepancies.
pub const ORACLE_CHECK_LIMIT: f64 = 1e-8;
/// Scan spot checks against the oracle must agree to this.
pub const SCAN_ORACLE_LIMIT: f64 = 1e-6;

pub struct CommandOutput {
    pub text: String,
    pub json: serde_json::Value,
    pub status: ExitStatus,
}

impl CommandOutput {
    fn new(report: &impl Serialize, text: String, status: ExitStatus) -> Self {
        let json = serde_json::to_value(report).expect("reports serialize");
        Self { text, json, status }
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            serde_json::to_string_pretty(&self.json).expect("json value renders") + "\n"
        } else {
            self.text.clone()
        }
    }
}

fn line(out: &mut String, key: &str, value: impl std::fmt::Display) {
    let _ = writeln!(out, "{key:<24} {value}");
}

fn fmt_coeffs(c: &SuperpositionCoeffs) -> String {
    format!("mu={} lambda={} rho={} nu={}", c.mu, c.lambda, c.rho, c.nu)
}

// ---------------------------------------------------------------- concurrence

#[derive(Debug, Clone, Serialize)]
pub struct OracleComparison {
    pub truncation: usize,
    pub concurrence: f64,
    pub discrepancy: f64,
    pub norm_squared: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConcurrenceReport {
    pub p1: f64,
    pub p2: f64,
    pub coeffs: SuperpositionCoeffs,
    pub norm_squared: f64,
    pub amplitudes: OrthonormalAmplitudes,
    pub concurrence: f64,
    pub oracle: Option<OracleComparison>,
}

fn oracle_comparison(
    config: &CoherentConfig,
    coeffs: &SuperpositionCoeffs,
    analytic: f64,
    truncation: Option<usize>,
) -> Result<OracleComparison, CliError> {
    let truncation = truncation.unwrap_or_else(|| default_truncation(config.max_amplitude()));
    let state = build_state(config, coeffs, truncation)?;
    let c = schmidt_concurrence(&state)?;
    Ok(OracleComparison {
        truncation,
        concurrence: c,
        discrepancy: (c - analytic).abs(),
        norm_squared: state.norm_before_normalization().powi(2),
    })
}

pub fn concurrence_report(spec: &StateSpec, truncation: Option<usize>) -> Result<ConcurrenceReport, CliError> {
    let overlaps = spec.overlaps();
    let norm_squared = gram_norm_squared(&spec.coeffs, &overlaps)?;
    let amplitudes = orthonormal_amplitudes(&spec.coeffs, &overlaps)?;
    let c = concurrence(&spec.coeffs, &overlaps)?;
    let oracle = match spec.basis {
        Basis::Amplitudes(config) => Some(oracle_comparison(&config, &spec.coeffs, c, truncation.or(spec.truncation))?),
        Basis::Overlaps(_) => None,
    };
    Ok(ConcurrenceReport {
        p1: overlaps.p1(),
        p2: overlaps.p2(),
        coeffs: spec.coeffs,
        norm_squared,
        amplitudes,
        concurrence: c,
        oracle,
    })
}

pub fn cmd_concurrence(spec: &StateSpec, truncation: Option<usize>) -> Result<CommandOutput, CliError> {
    let r = concurrence_report(spec, truncation)?;
    let mut text = String::new();
    line(&mut text, "overlaps", format!("p1={} p2={}", r.p1, r.p2));
    line(&mut text, "coefficients", fmt_coeffs(&r.coeffs));
    line(&mut text, "norm squared", r.norm_squared);
    let a = &r.amplitudes;
    line(&mut text, "amplitudes (a,b,c,d)", format!("{} {} {} {}", a.a, a.b, a.c, a.d));
    line(&mut text, "norm N", a.norm);
    line(&mut text, "concurrence", r.concurrence);
    let mut status = ExitStatus::Success;
    if let Some(o) = &r.oracle {
        line(&mut text, "oracle truncation", o.truncation);
        line(&mut text, "oracle concurrence", o.concurrence);
        line(&mut text, "discrepancy", format!("{:e}", o.discrepancy));
        if o.discrepancy > CONCURRENCE_ORACLE_LIMIT {
            status = ExitStatus::Inconsistent;
            line(&mut text, "status", "INCONSISTENT");
        }
    }
    Ok(CommandOutput::new(&r, text, status))
}

// ------------------------------------------------------------------- classify

#[derive(Debug, Clone, Serialize)]
pub struct ClassifyReport {
    pub x: f64,
    pub tol: f64,
    /// Coefficients after dividing through by `mu`.
    pub coeffs: SuperpositionCoeffs,
    pub result: ClassificationResult,
}

pub fn classify_report(spec: &StateSpec, tol: f64) -> Result<ClassifyReport, CliError> {
    let p = spec.overlaps();
    if (p.p1() - p.p2()).abs() > CLASSIFY_SCOPE_TOL {
        return Err(CliError::OutOfScope(format!(
            "p1 = {} and p2 = {} differ; the classification needs equal overlaps",
            p.p1(),
            p.p2()
        )));
    }
    if spec.coeffs.mu == 0.0 {
        return Err(CliError::OutOfScope("mu = 0 cannot be brought to the mu = 1 gauge".into()));
    }
    if !(tol > 0.0) {
        return Err(CliError::Input(format!("tolerance {tol} must be positive")));
    }
    let coeffs = if spec.coeffs.mu == 1.0 { spec.coeffs } else { spec.coeffs.scaled(1.0 / spec.coeffs.mu) };
    let coeffs = SuperpositionCoeffs { mu: 1.0, ..coeffs };
    let x = p.p1();
    let result = classify(&coeffs, x, tol)?;
    Ok(ClassifyReport { x, tol, coeffs, result })
}

pub fn cmd_classify(spec: &StateSpec, tol: f64) -> Result<CommandOutput, CliError> {
    let r = classify_report(spec, tol)?;
    let mut text = String::new();
    line(&mut text, "x", r.x);
    line(&mut text, "coefficients", fmt_coeffs(&r.coeffs));
    line(&mut text, "verdict", r.result.verdict);
    line(&mut text, "concurrence", r.result.concurrence);
    line(&mut text, "class A residual", format!("{:e}", r.result.residuals.class_a));
    line(&mut text, "class B residual", format!("{:e}", r.result.residuals.class_b));
    line(&mut text, "separability residual", format!("{:e}", r.result.residuals.separability));
    line(&mut text, "tolerance", format!("{:e}", r.tol));
    Ok(CommandOutput::new(&r, text, ExitStatus::Success))
}

// ------------------------------------------------------------------- examples

#[derive(Debug, Clone, Serialize)]
pub struct ExampleRow {
    pub name: &'static str,
    pub expected: &'static str,
    pub config: CoherentConfig,
    pub coeffs: SuperpositionCoeffs,
    pub analytic: f64,
    pub oracle: f64,
    pub verdict: Verdict,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExamplesReport {
    pub gap_squared: f64,
    pub x: f64,
    pub rows: Vec<ExampleRow>,
    pub all_passed: bool,
}

pub fn examples_report(gap_squared: f64, truncation: Option<usize>, tol: f64) -> Result<ExamplesReport, CliError> {
    let states = catalog(gap_squared)?;
    let x = (-0.5 * gap_squared).exp();
    let mut rows = Vec::with_capacity(states.len());
    for s in states {
        let overlaps = s.config.overlaps();
        let analytic = concurrence(&s.coeffs, &overlaps)?;
        let oracle = oracle_comparison(&s.config, &s.coeffs, analytic, truncation)?.concurrence;
        let verdict = classify(&s.coeffs, s.x, tol)?.verdict;
        let passed = match s.expected {
            Expected::Maximal(class) => {
                let want = match class {
                    MaximalClass::A => Verdict::MaximalClassA,
                    MaximalClass::B => Verdict::MaximalClassB,
                };
                (analytic - 1.0).abs() <= EXAMPLE_ANALYTIC_TOL
                    && (oracle - 1.0).abs() <= EXAMPLE_ORACLE_TOL
                    && verdict == want
            }
            Expected::Separable => {
                analytic <= EXAMPLE_ANALYTIC_TOL && oracle <= EXAMPLE_ORACLE_TOL && verdict == Verdict::Separable
            }
        };
        rows.push(ExampleRow {
            name: s.name,
            expected: s.expected.label(),
            config: s.config,
            coeffs: s.coeffs,
            analytic,
            oracle,
            verdict,
            passed,
        });
    }
    let all_passed = rows.iter().all(|r| r.passed);
    Ok(ExamplesReport { gap_squared, x, rows, all_passed })
}

pub fn cmd_examples(gap_squared: f64, truncation: Option<usize>, tol: f64) -> Result<CommandOutput, CliError> {
    let r = examples_report(gap_squared, truncation, tol)?;
    let mut text = String::new();
    let _ = writeln!(text, "(alpha-gamma)^2 = {}   x = {}", r.gap_squared, r.x);
    let _ = writeln!(
        text,
        "{:<46} {:>9} {:>9} {:>9} {:>22} {:>22}  {:<14} ok",
        "state", "lambda", "rho", "nu", "analytic C", "oracle C", "verdict"
    );
    for row in &r.rows {
        let _ = writeln!(
            text,
            "{:<46} {:>9.5} {:>9.5} {:>9.5} {:>22.17} {:>22.17}  {:<14} {}",
            row.name,
            row.coeffs.lambda,
            row.coeffs.rho,
            row.coeffs.nu,
            row.analytic,
            row.oracle,
            row.verdict.as_str(),
            if row.passed { "ok" } else { "FAIL" }
        );
    }
    let status = if r.all_passed { ExitStatus::Success } else { ExitStatus::Inconsistent };
    let _ =
        writeln!(text, "{}", if r.all_passed { "all reference states reproduced" } else { "reference state mismatch" });
    Ok(CommandOutput::new(&r, text, status))
}

// ----------------------------------------------------------------- bell-limit

#[derive(Debug, Clone, Serialize)]
pub struct BellFamily {
    pub class: &'static str,
    pub coeffs: SuperpositionCoeffs,
    pub amplitudes: [f64; 4],
    pub target: [f64; 4],
    pub max_deviation: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct BellLimitReport {
    pub lambda: f64,
    pub x: f64,
    pub class_a: BellFamily,
    pub class_b: BellFamily,
}

fn bell_family(
    class: &'static str,
    coeffs: SuperpositionCoeffs,
    x: f64,
    target: [f64; 4],
) -> Result<BellFamily, CliError> {
    let amplitudes = orthonormal_amplitudes(&coeffs, &OverlapPair::symmetric(x)?)?.normalized();
    let max_deviation = amplitudes.iter().zip(&target).map(|(a, t)| (a - t).abs()).fold(0.0, f64::max);
    Ok(BellFamily { class, coeffs, amplitudes, target, max_deviation })
}

pub fn bell_limit_report(lambda: f64, x: f64) -> Result<BellLimitReport, CliError> {
    if !(x > 0.0 && x <= 1e-4) {
        return Err(CliError::Input(format!("x_small = {x} must lie in (0, 1e-4]")));
    }
    if !lambda.is_finite() {
        return Err(CliError::Input("lambda must be finite".into()));
    }
    let k = (2.0 * (1.0 + lambda * lambda)).sqrt();
    let class_a = bell_family(
        "A",
        SuperpositionCoeffs::gauged(lambda, -lambda, 1.0)?,
        x,
        [lambda / k, 1.0 / k, 1.0 / k, -lambda / k],
    )?;
    let class_b = bell_family(
        "B",
        solve_coefficients_for_x(MaximalClass::B, x, lambda)?,
        x,
        [lambda / k, 1.0 / k, -1.0 / k, lambda / k],
    )?;
    Ok(BellLimitReport { lambda, x, class_a, class_b })
}

pub fn cmd_bell_limit(lambda: f64, x: f64) -> Result<CommandOutput, CliError> {
    let r = bell_limit_report(lambda, x)?;
    let mut text = String::new();
    line(&mut text, "lambda", r.lambda);
    line(&mut text, "x", r.x);
    for f in [&r.class_a, &r.class_b] {
        let _ = writeln!(text, "class {}: {}", f.class, fmt_coeffs(&f.coeffs));
        let fmt4 = |v: &[f64; 4]| format!("{:+.12} {:+.12} {:+.12} {:+.12}", v[0], v[1], v[2], v[3]);
        line(&mut text, "  amplitudes |00>..|11>", fmt4(&f.amplitudes));
        line(&mut text, "  orthogonal limit", fmt4(&f.target));
        line(&mut text, "  max deviation", format!("{:e}", f.max_deviation));
    }
    Ok(CommandOutput::new(&r, text, ExitStatus::Success))
}

// ----------------------------------------------------------------------- scan

pub const CSV_HEADER: &str = "lambda,rho,nu,x,concurrence,class_a_residual,class_b_residual,verdict";

pub fn csv_row(r: &ScanRecord, tol: f64) -> String {
    let verdict = classify(&r.coeffs(), r.x, tol).map(|c| c.verdict.as_str()).unwrap_or("Invalid");
    format!(
        "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{}",
        r.lambda, r.rho, r.nu, r.x, r.concurrence, r.class_a_residual, r.class_b_residual, verdict
    )
}

pub fn write_csv(records: &[ScanRecord], tol: f64) -> String {
    let mut out = String::with_capacity(160 * (records.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&csv_row(r, tol));
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    pub evaluated: u128,
    pub records: usize,
    pub unconverged: usize,
    pub disjointness: DisjointnessReport,
    pub oracle_checks: usize,
    pub oracle_max_discrepancy: f64,
    pub passed: bool,
}

pub fn cmd_scan(config_path: &Path, out_path: &Path, tol: f64, seed: Option<u64>) -> Result<CommandOutput, CliError> {
    let text = std::fs::read_to_string(config_path)
        .map_err(|source| CliError::Io { path: config_path.display().to_string(), source })?;
    let mut config = parse_scan_config(&text)?;
    if let Some(seed) = seed {
        config.seed = seed;
    }
    let outcome = run_scan(&config, tol)?;
    std::fs::write(out_path, write_csv(&outcome.records, tol))
        .map_err(|source| CliError::Io { path: out_path.display().to_string(), source })?;

    let oracle_max = outcome.oracle_checks.iter().map(|c| c.discrepancy()).fold(0.0, f64::max);
    let report = ScanReport {
        evaluated: outcome.evaluated,
        records: outcome.records.len(),
        unconverged: outcome.records.iter().filter(|r| r.status == RefineStatus::Unconverged).count(),
        passed: outcome.report.passed(),
        disjointness: outcome.report,
        oracle_checks: outcome.oracle_checks.len(),
        oracle_max_discrepancy: oracle_max,
    };

    let mut text = String::new();
    line(&mut text, "points evaluated", report.evaluated);
    line(&mut text, "records written", format!("{} -> {}", report.records, out_path.display()));
    line(&mut text, "unconverged refinements", report.unconverged);
    line(&mut text, "maximal records", report.disjointness.maximal);
    line(&mut text, "class A", report.disjointness.class_a);
    line(&mut text, "class B", report.disjointness.class_b);
    line(&mut text, "oracle spot checks", format!("{} (max discrepancy {:e})", report.oracle_checks, oracle_max));
    let status = if !report.passed {
        for f in report.disjointness.failures() {
            let _ = writeln!(text, "  {f}");
        }
        line(&mut text, "report", "THEOREM VIOLATION");
        ExitStatus::TheoremViolation
    } else if oracle_max > SCAN_ORACLE_LIMIT {
        line(&mut text, "report", "classes disjoint; ORACLE MISMATCH");
        ExitStatus::Inconsistent
    } else {
        line(&mut text, "report", "classes disjoint");
        ExitStatus::Success
    };
    Ok(CommandOutput::new(&report, text, status))
}

// --------------------------------------------------------------- oracle-check

#[derive(Debug, Clone, Serialize)]
pub struct OracleCheckReport {
    pub count: usize,
    pub seed: u64,
    pub max_concurrence_discrepancy: f64,
    pub max_norm_discrepancy: f64,
    pub worst_config: Option<CoherentConfig>,
    pub worst_coeffs: Option<SuperpositionCoeffs>,
    pub passed: bool,
}

/// Random state with amplitudes in `[-2,2]` and `mu = 1`, other coefficients in `[-3,3]`.
pub fn random_state(rng: &mut ChaCha8Rng) -> (CoherentConfig, SuperpositionCoeffs) {
    let config = loop {
        let a: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-2.0..=2.0));
        if let Ok(c) = CoherentConfig::new(a[0], a[1], a[2], a[3]) {
            break c;
        }
    };
    let c: [f64; 3] = std::array::from_fn(|_| rng.gen_range(-3.0..=3.0));
    (config, SuperpositionCoeffs { mu: 1.0, lambda: c[0], rho: c[1], nu: c[2] })
}

pub fn oracle_check_report(count: usize, seed: u64, truncation: Option<usize>) -> Result<OracleCheckReport, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = OracleCheckReport {
        count,
        seed,
        max_concurrence_discrepancy: 0.0,
        max_norm_discrepancy: 0.0,
        worst_config: None,
        worst_coeffs: None,
        passed: true,
    };
    for _ in 0..count {
        let (config, coeffs) = random_state(&mut rng);
        let overlaps = config.overlaps();
        let analytic = concurrence(&coeffs, &overlaps)?;
        let n2 = gram_norm_squared(&coeffs, &overlaps)?;
        let o = oracle_comparison(&config, &coeffs, analytic, truncation)?;
        if o.discrepancy > report.max_concurrence_discrepancy {
            report.max_concurrence_discrepancy = o.discrepancy;
            report.worst_config = Some(config);
            report.worst_coeffs = Some(coeffs);
        }
        report.max_norm_discrepancy = report.max_norm_discrepancy.max((o.norm_squared - n2).abs());
    }
    report.passed =
        report.max_concurrence_discrepancy < ORACLE_CHECK_LIMIT && report.max_norm_discrepancy < ORACLE_CHECK_LIMIT;
    Ok(report)
}

pub fn cmd_oracle_check(count: usize, seed: u64, truncation: Option<usize>) -> Result<CommandOutput, CliError> {
    let r = oracle_check_report(count, seed, truncation)?;
    let mut text = String::new();
    line(&mut text, "states", r.count);
    line(&mut text, "seed", r.seed);
    line(&mut text, "max |C - C_oracle|", format!("{:e}", r.max_concurrence_discrepancy));
    line(&mut text, "max |N^2 - N^2_oracle|", format!("{:e}", r.max_norm_discrepancy));
    line(&mut text, "result", if r.passed { "agree" } else { "DISAGREE" });
    let status = if r.passed { ExitStatus::Success } else { ExitStatus::Inconsistent };
    Ok(CommandOutput::new(&r, text, status))
}
