//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits nonzero if any fails.

use std::path::Path;
use std::time::{Duration, Instant};

use coherent_concurrence::analytic::{concurrence, gram_norm_squared};
use coherent_concurrence::classify::{check_class_a, check_class_b, quadratic_roots_case1, quadratic_roots_case2};
use coherent_concurrence::oracle::{build_state, oracle_concurrence_default};
use coherent_concurrence::scanner::{run_scan, RefineStatus, ScanOutcome};
use coherent_concurrence::{default_truncation, CoherentConfig, OverlapPair, SuperpositionCoeffs};
use ecs_cli::catalog::Expected;
use ecs_cli::commands::{bell_limit_report, examples_report, oracle_check_report};
use ecs_cli::scan_config::parse_scan_config;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit_secs: u64, what: &str) -> Result<(), String> {
    ensure(elapsed.as_secs_f64() < limit_secs as f64, || format!("{what} took {elapsed:?}, limit {limit_secs} s"))
}

fn coeffs(l: f64, r: f64, n: f64) -> SuperpositionCoeffs {
    SuperpositionCoeffs::gauged(l, r, n).unwrap()
}

fn c_at(l: f64, r: f64, n: f64, x: f64) -> f64 {
    concurrence(&coeffs(l, r, n), &OverlapPair::symmetric(x).unwrap()).unwrap()
}

fn reference_states() -> Check {
    let start = Instant::now();
    let report = examples_report(1.0, None, 1e-9).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let maximal = report.rows.iter().filter(|r| r.expected != Expected::Separable.label()).count();
    ensure(maximal == 11 && report.rows.len() == 15, || {
        format!("catalog has {maximal} maximal of {}", report.rows.len())
    })?;
    let mut worst_analytic: f64 = 0.0;
    let mut worst_oracle: f64 = 0.0;
    for row in &report.rows {
        let target = if row.expected == Expected::Separable.label() { 0.0 } else { 1.0 };
        worst_analytic = worst_analytic.max((row.analytic - target).abs());
        worst_oracle = worst_oracle.max((row.oracle - target).abs());
        ensure(row.passed, || {
            format!("{}: analytic {} oracle {} verdict {}", row.name, row.analytic, row.oracle, row.verdict)
        })?;
    }
    ensure(worst_analytic <= 1e-10 && worst_oracle <= 1e-8, || "tolerance".into())?;
    within(elapsed, 5, "reference states")?;
    Ok(format!("15/15 states, max analytic dev {worst_analytic:.1e}, oracle dev {worst_oracle:.1e}, {elapsed:.2?}"))
}

fn oracle_equivalence() -> Check {
    let start = Instant::now();
    let r = oracle_check_report(1000, 2024, None).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(r.max_concurrence_discrepancy < 1e-8, || format!("max |dC| = {:e}", r.max_concurrence_discrepancy))?;
    ensure(r.max_norm_discrepancy < 1e-8, || format!("max |dN^2| = {:e}", r.max_norm_discrepancy))?;
    within(elapsed, 60, "oracle check")?;
    Ok(format!(
        "1000 states, max |dC| {:.1e}, max |dN^2| {:.1e}, {elapsed:.2?}",
        r.max_concurrence_discrepancy, r.max_norm_discrepancy
    ))
}

fn forward_direction() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let x: f64 = rng.gen_range(1e-3..1.0 - 1e-3);
        let l: f64 = rng.gen_range(-3.0..3.0);
        let a = c_at(l, -2.0 * x - l, 1.0, x);
        let b = c_at(l, l, -1.0 - 2.0 * l * x, x);
        worst = worst.max((a - 1.0).abs()).max((b - 1.0).abs());
    }
    ensure(worst <= 1e-10, || format!("max |C - 1| = {worst:e}"))?;
    Ok(format!("2 x 1000 manifold points, max |C - 1| {worst:.1e}"))
}

fn scan_checks(outcome: &ScanOutcome) -> Result<(usize, usize), String> {
    ensure(outcome.report.passed(), || outcome.report.failures().join("; "))?;
    let mut counts = (0, 0);
    for r in &outcome.records {
        ensure(r.status != RefineStatus::Unconverged, || format!("unconverged refinement at {r:?}"))?;
        if r.concurrence <= 1.0 - 1e-10 {
            continue;
        }
        let c = r.coeffs();
        let a = check_class_a(&c, r.x, 1e-8).map_err(|e| e.to_string())?;
        let b = check_class_b(&c, r.x, 1e-8).map_err(|e| e.to_string())?;
        ensure(a != b, || format!("record {r:?}: class A {a}, class B {b}"))?;
        if a {
            counts.0 += 1;
        } else {
            counts.1 += 1;
        }
    }
    Ok(counts)
}

fn reverse_direction() -> Check {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("configs/theorem_check.cfg");
    let config =
        parse_scan_config(&std::fs::read_to_string(path).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    ensure(config.point_count() == 61 * 61 * 61 * 3, || "bundled grid is not 61^3 x 3".into())?;

    let start = Instant::now();
    let parallel = run_scan(&config, 1e-8).map_err(|e| e.to_string())?;
    let t_par = start.elapsed();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().map_err(|e| e.to_string())?;
    let start = Instant::now();
    let serial = pool.install(|| run_scan(&config, 1e-8)).map_err(|e| e.to_string())?;
    let t_ser = start.elapsed();

    ensure(parallel.records == serial.records, || "parallel and single-threaded records differ".into())?;
    let (a, b) = scan_checks(&parallel)?;
    ensure(a > 0 && b > 0, || format!("vacuous scan: {a} class A, {b} class B"))?;
    within(t_par, 120, "parallel scan")?;
    within(t_ser, 600, "single-threaded scan")?;
    Ok(format!("{} points, {a} class A + {b} class B maximal, none off-manifold or in both; {t_par:.2?} parallel, {t_ser:.2?} serial", parallel.evaluated))
}

/// Expected Case 1 / Case 2 feasibility for a draw built with known structure.
struct Draw {
    lambda: f64,
    rho: f64,
    nu: f64,
    case1_root: Option<f64>,
    case2_root: Option<f64>,
}

fn draw(rng: &mut ChaCha8Rng) -> Draw {
    let u = |rng: &mut ChaCha8Rng| rng.gen_range(-3.0..3.0);
    match rng.gen_range(0..6) {
        // Generic point.
        0 => Draw { lambda: u(rng), rho: u(rng), nu: u(rng), case1_root: None, case2_root: None },
        // nu = 1 with lambda + rho inside (-2, 0).
        1 => {
            let s: f64 = rng.gen_range(-2.0 + 1e-6..-1e-6);
            let lambda = u(rng);
            let rho = s - lambda;
            Draw { lambda, rho, nu: 1.0, case1_root: Some(-(lambda + rho) / 2.0), case2_root: None }
        }
        // nu = 1 with lambda + rho outside [-2, 0].
        2 => {
            let s: f64 = if rng.gen() { rng.gen_range(-6.0..-2.0 - 1e-6) } else { rng.gen_range(1e-6..6.0) };
            let lambda = u(rng);
            Draw { lambda, rho: s - lambda, nu: 1.0, case1_root: None, case2_root: None }
        }
        // lambda = rho with nu + 1 = -2 lambda x0 for some x0 in (0,1).
        3 => {
            let lambda = u(rng);
            let x0: f64 = rng.gen_range(1e-6..1.0 - 1e-6);
            Draw { lambda, rho: lambda, nu: -1.0 - 2.0 * lambda * x0, case1_root: None, case2_root: Some(x0) }
        }
        // lambda = rho with nu off the reachable interval.
        4 => {
            let lambda = u(rng);
            let x0: f64 = if rng.gen() { rng.gen_range(-3.0..-1e-6) } else { rng.gen_range(1.0 + 1e-6..4.0) };
            Draw { lambda, rho: lambda, nu: -1.0 - 2.0 * lambda * x0, case1_root: None, case2_root: None }
        }
        // Just off a manifold.
        _ => {
            let lambda = u(rng);
            let eps = rng.gen_range(1e-6..1e-3) * if rng.gen() { 1.0 } else { -1.0 };
            if rng.gen() {
                Draw { lambda, rho: -1.0 - lambda, nu: 1.0 + eps, case1_root: None, case2_root: None }
            } else {
                Draw { lambda, rho: lambda + eps, nu: -1.0 - lambda, case1_root: None, case2_root: None }
            }
        }
    }
}

fn quadratic_analysis() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut feasible = (0, 0);
    for i in 0..100_000 {
        let d = draw(&mut rng);
        let r1 = quadratic_roots_case1(d.lambda, d.rho, d.nu);
        let r2 = quadratic_roots_case2(d.lambda, d.rho, d.nu);
        let on_a = d.nu == 1.0 && (-2.0..0.0).contains(&(d.lambda + d.rho)) && d.lambda + d.rho != -2.0;
        ensure(r1.has_feasible_root() == on_a, || format!("draw {i}: case 1 feasibility {r1:?} for {}", fmt(&d)))?;
        if let Some(x0) = d.case1_root {
            let root = r1.feasible_roots[0];
            ensure(r1.feasible_roots.len() == 1 && (root - x0).abs() < 1e-9, || {
                format!("draw {i}: case 1 root {root} vs {x0}")
            })?;
            feasible.0 += 1;
        }
        let on_b =
            d.lambda == d.rho && r2.feasible_roots.iter().any(|&x| (d.nu + 1.0 + 2.0 * d.lambda * x).abs() < 1e-9);
        ensure(r2.has_feasible_root() == (on_b || r2.identically_zero), || {
            format!("draw {i}: case 2 {r2:?} for {}", fmt(&d))
        })?;
        ensure(r2.has_feasible_root() == d.case2_root.is_some(), || {
            format!("draw {i}: case 2 expected {:?}, got {r2:?}", d.case2_root)
        })?;
        if let Some(x0) = d.case2_root {
            ensure(r2.feasible_roots.iter().any(|&x| (x - x0).abs() < 1e-6), || {
                format!("draw {i}: case 2 roots {:?} vs {x0}", r2.feasible_roots)
            })?;
            feasible.1 += 1;
        }
    }
    // nu = 0: linear equation whose only root would need (1 + lambda + rho)^2 < 0.
    for i in 0..10_000 {
        let s: f64 = if i == 0 { -1.0 } else { rng.gen_range(-6.0..6.0) };
        let lambda: f64 = rng.gen_range(-3.0..3.0);
        let r = quadratic_roots_case1(lambda, s - lambda, 0.0);
        ensure(!r.has_feasible_root(), || format!("nu = 0, lambda + rho = {s}: {r:?}"))?;
        if let Some(&root) = r.roots.first() {
            // (1 - root) 2s = (1 + s)^2, so for s < 0 a root below 1 needs (1 + s)^2 < 0.
            let gap = (1.0 - root) * (2.0 * s);
            ensure(s >= 0.0 || (gap - (1.0 + s).powi(2)).abs() < 1e-9 * (1.0 + s * s), || {
                format!("identity at s = {s}")
            })?;
        }
    }
    Ok(format!(
        "1e5 draws ({} case 1, {} case 2 feasible), plus 1e4 nu = 0 draws all infeasible",
        feasible.0, feasible.1
    ))
}

fn fmt(d: &Draw) -> String {
    format!("lambda={} rho={} nu={}", d.lambda, d.rho, d.nu)
}

fn separability() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut separable = 0;
    for i in 0..10_000 {
        let x: f64 = rng.gen_range(0.01..0.99);
        let l: f64 = rng.gen_range(-3.0..3.0);
        let r: f64 = rng.gen_range(-3.0..3.0);
        let n = match i % 3 {
            0 => l * r,
            1 => l * r + rng.gen_range(1e-7..1e-2) * if rng.gen() { 1.0 } else { -1.0 },
            _ => rng.gen_range(-3.0..3.0),
        };
        let c = c_at(l, r, n, x);
        let zero = (n - l * r).abs() <= 1e-12;
        separable += zero as usize;
        ensure((c <= 1e-12) == zero, || {
            format!("lambda={l} rho={r} nu={n} x={x}: C={c:e}, |nu - lambda rho|={:e}", (n - l * r).abs())
        })?;
    }
    Ok(format!("1e4 tuples, {separable} separable, equivalence holds"))
}

fn bell_limits() -> Check {
    let mut worst: f64 = 0.0;
    for lambda in [0.0, 0.5, 1.0] {
        let r = bell_limit_report(lambda, 1e-8).map_err(|e| e.to_string())?;
        worst = worst.max(r.class_a.max_deviation).max(r.class_b.max_deviation);
    }
    let r = bell_limit_report(0.0, 1e-8).map_err(|e| e.to_string())?;
    let h = std::f64::consts::FRAC_1_SQRT_2;
    for (got, want) in
        r.class_a.amplitudes.iter().zip([0.0, h, h, 0.0]).chain(r.class_b.amplitudes.iter().zip([0.0, h, -h, 0.0]))
    {
        ensure((got - want).abs() < 1e-6, || format!("lambda = 0 amplitude {got} vs {want}"))?;
    }
    ensure(worst < 1e-6, || format!("max deviation {worst:e}"))?;
    Ok(format!("lambda in {{0, 0.5, 1}}, max deviation {worst:.1e}"))
}

fn known_values() -> Check {
    let mut worst: f64 = 0.0;
    for k in 1..=9 {
        let x = k as f64 / 10.0;
        worst = worst.max((c_at(0.0, 0.0, 1.0, x) - (1.0 - x * x) / (1.0 + x * x)).abs());
    }
    ensure(worst <= 1e-12, || format!("max deviation {worst:e}"))?;
    let x = (-0.5f64).exp();
    let analytic = c_at(0.0, 0.0, 1.0, x);
    let config = CoherentConfig::new(0.0, 0.0, 1.0, 1.0).map_err(|e| e.to_string())?;
    let oracle = oracle_concurrence_default(&config, &coeffs(0.0, 0.0, 1.0)).map_err(|e| e.to_string())?;
    ensure((analytic - oracle).abs() < 1e-8, || format!("x = e^-1/2: analytic {analytic}, oracle {oracle}"))?;
    Ok(format!("x = 0.1..0.9 max dev {worst:.1e}; x = e^-1/2 C = {analytic:.15} vs oracle {oracle:.15}"))
}

fn normalization_prefactor() -> Check {
    let x = (-0.5f64).exp();
    let state = coeffs(-x, -x, 1.0);
    let expected = 2.0 * (1.0 - x * x).powi(2);
    let printed = 2.0 * (1.0 - x * x);
    let analytic = gram_norm_squared(&state, &OverlapPair::symmetric(x).unwrap()).map_err(|e| e.to_string())?;
    let config = CoherentConfig::new(0.0, 0.5, 1.0, -0.5).map_err(|e| e.to_string())?;
    let built = build_state(&config, &state, default_truncation(config.max_amplitude())).map_err(|e| e.to_string())?;
    let oracle = built.norm_before_normalization().powi(2);
    ensure((analytic - expected).abs() < 1e-12, || format!("analytic N^2 {analytic} vs {expected}"))?;
    ensure((oracle - expected).abs() < 1e-10, || format!("oracle N^2 {oracle} vs {expected}"))?;
    ensure((analytic - printed).abs() > 0.1, || "N^2 matches the single-power form".into())?;
    Ok(format!("N^2 = 2(1-x^2)^2 = {expected:.15}; analytic {analytic:.15}, oracle {oracle:.15}; 2(1-x^2) = {printed:.6} rejected"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("reference state reproduction", reference_states),
        ("oracle equivalence", oracle_equivalence),
        ("maximal manifolds reach C = 1", forward_direction),
        ("grid scan finds only the two classes", reverse_direction),
        ("branch quadratic root analysis", quadratic_analysis),
        ("separability iff nu = lambda rho", separability),
        ("orthogonal-limit Bell states", bell_limits),
        ("known concurrence values", known_values),
        ("normalization prefactor", normalization_prefactor),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
