//! Acceptance criteria: one PASS/FAIL line each, with the measured figures.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::Instant;

use gegen_core::expansions::{
    evaluate_cauchy_u_elementary, evaluate_chebyshev_t_form, evaluate_chebyshev_u_form, evaluate_durand_cauchy,
    evaluate_legendre_form, evaluate_polynomial_form, evaluate_theorem1, ExpansionSpec,
};
use gegen_core::legendre_q::{legendre_q, LegendreQParams};
use gegen_core::orthopoly::{expand_in_lower_order, gegenbauer, legendre_p};
use gegen_core::polyharmonic::{
    degeneracy, evaluate_corollary, fundamental_solution, laplace_expansion_3d, EuclideanPointPair,
    HypersphericalGeometry, PolyharmonicParams,
};
use gegen_core::scalar::{c64, real, Complex64};
use gegen_core::verify::{run_verification, Suite, SuiteSelection, VerifyOptions};
use gegen_core::{Result, TruncationPolicy};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const GRID_NU: [f64; 3] = [1.0 / 3.0, 1.5, 2.6];
const GRID_MU: [f64; 3] = [0.6, 1.0, 2.5];
const GRID_Z: [f64; 2] = [1.5, 3.0];
const GRID_X: [f64; 3] = [-0.9, 0.0, 0.9];
const CAUCHY_PAIRS: [(f64, f64); 3] = [(2.0, 0.5), (1.5, -0.3), (4.0, 0.9)];

struct Outcome {
    passed: bool,
    detail: String,
}

type Criterion = (&'static str, fn() -> Result<Outcome>);

fn rel(value: Complex64, reference: Complex64) -> f64 {
    let abs = (value - reference).norm();
    if reference.norm() > 0.0 {
        abs / reference.norm()
    } else {
        abs
    }
}

fn policy_300() -> TruncationPolicy {
    TruncationPolicy::default().with_max_terms(300)
}

fn grid() -> impl Iterator<Item = (f64, f64, f64, f64)> {
    GRID_NU.into_iter().flat_map(|nu| {
        GRID_MU.into_iter().flat_map(move |mu| {
            GRID_Z
                .into_iter()
                .flat_map(move |z| GRID_X.into_iter().map(move |x| (nu, mu, z, x)))
        })
    })
}

fn theorem1_reproduction() -> Result<Outcome> {
    let start = Instant::now();
    let (mut worst, mut max_terms, mut points, mut all_converged) = (0.0f64, 0, 0, true);
    for (nu, mu, z, x) in grid() {
        let spec = ExpansionSpec::z_form(real(nu), mu, real(z), real(x));
        let eval = evaluate_theorem1(&spec, &policy_300())?;
        worst = worst.max(rel(eval.value, real((z - x).powf(-nu))));
        max_terms = max_terms.max(eval.terms_used);
        all_converged &= eval.converged;
        points += 1;
    }
    let elapsed = start.elapsed().as_secs_f64();
    Ok(Outcome {
        passed: points == 54 && all_converged && worst <= 1e-9 && max_terms <= 300 && elapsed < 10.0,
        detail: format!("{points} points, worst rel {worst:.2e}, max terms {max_terms}, {elapsed:.3} s"),
    })
}

fn generating_function_recovery() -> Result<Outcome> {
    let (rho, n_max) = (0.4f64, 60u64);
    let mut worst = 0.0f64;
    for nu in [0.75, 1.5] {
        for x in [-0.8, 0.2, 0.9] {
            let mut partial = real(0.0);
            for n in 0..=n_max {
                partial += gegenbauer(n, nu, real(x))? * rho.powi(n as i32);
            }
            let spec = ExpansionSpec::rho_form(real(nu), nu, real(rho), real(x));
            let series = evaluate_theorem1(&spec, &TruncationPolicy::fixed_terms(n_max as usize + 1))?;
            worst = worst.max(rel(series.value, partial));
        }
    }
    Ok(Outcome {
        passed: worst <= 1e-10,
        detail: format!("6 points at N = {n_max}, worst rel {worst:.2e}"),
    })
}

/// Σ (2n+1) Q_n(z) P_n(x), summed term by term.
fn heine_sum(z: f64, x: f64) -> Result<Complex64> {
    let mut sum = real(0.0);
    let mut small = 0;
    for n in 0..2000u64 {
        let q = legendre_q(
            &LegendreQParams::new(real(n as f64), real(0.0), real(z)),
            &TruncationPolicy::default(),
        )?;
        let term = q.value * legendre_p(n, real(x)) * (2 * n + 1) as f64;
        sum += term;
        small = if term.norm() <= 1e-17 * sum.norm() {
            small + 1
        } else {
            0
        };
        if small == 3 {
            break;
        }
    }
    Ok(sum)
}

fn heine_formula() -> Result<Outcome> {
    let (mut worst_form, mut worst_sum) = (0.0f64, 0.0f64);
    for (z, x) in CAUCHY_PAIRS {
        let exact = real(1.0 / (z - x));
        let form = evaluate_legendre_form(real(1.0), real(z), real(x), &TruncationPolicy::default())?;
        worst_form = worst_form.max(rel(form.value, exact));
        worst_sum = worst_sum.max(rel(heine_sum(z, x)?, exact));
    }
    Ok(Outcome {
        passed: worst_form <= 1e-10 && worst_sum <= 1e-10,
        detail: format!("worst rel {worst_form:.2e} (Legendre-form evaluator), {worst_sum:.2e} (explicit Q_n sum)"),
    })
}

fn elementary_u_expansion() -> Result<Outcome> {
    let p = TruncationPolicy::default();
    let (mut worst_direct, mut worst_form) = (0.0f64, 0.0f64);
    for (z, x) in CAUCHY_PAIRS {
        let elementary = evaluate_cauchy_u_elementary(real(z), real(x), &p)?.value;
        let form = evaluate_chebyshev_u_form(real(1.0), real(z), real(x), &p)?.value;
        worst_direct = worst_direct.max(rel(elementary, real(1.0 / (z - x))));
        worst_form = worst_form.max(rel(elementary, form));
    }
    Ok(Outcome {
        passed: worst_direct <= 1e-10 && worst_form <= 1e-9,
        detail: format!("worst rel {worst_direct:.2e} vs 1/(z-x), {worst_form:.2e} vs Chebyshev-U form"),
    })
}

fn polynomial_exactness() -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut points = Vec::new();
    while points.len() < 20 {
        let z = c64(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
        let x = c64(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
        if (z * z - 1.0).norm() > 0.1 {
            points.push((z, x));
        }
    }
    let (mut worst, mut worst_scaled, mut failures) = (0.0f64, 0.0f64, 0);
    for &(z, x) in &points {
        for q in 0..=5u32 {
            let exact = (z - x).powu(q);
            let value = evaluate_polynomial_form(q as u64, z, x)?;
            let err = rel(value, exact);
            worst = worst.max(err);
            worst_scaled = worst_scaled.max((value - exact).norm() / (z.norm() + x.norm()).powi(q as i32));
            failures += (err > 1e-12) as usize;
        }
    }
    Ok(Outcome {
        passed: worst <= 1e-12,
        detail: format!(
            "120 cases, worst rel {worst:.2e} ({failures} above 1e-12); worst error relative to (|z|+|x|)^q {worst_scaled:.2e}"
        ),
    })
}

fn connection_identity() -> Result<Outcome> {
    let start = Instant::now();
    let (mut worst, mut cases) = (0.0f64, 0);
    for (nu, mu) in [(1.5, 0.5), (2.6, 1.0), (0.8, 0.3)] {
        for n in 0..=12u64 {
            for i in 0..=10 {
                let x = real(-1.0 + 0.2 * i as f64);
                worst = worst.max(rel(expand_in_lower_order(n, nu, mu, x)?, gegenbauer(n, nu, x)?));
                cases += 1;
            }
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    Ok(Outcome {
        passed: worst <= 1e-11 && elapsed < 5.0,
        detail: format!("{cases} cases, worst rel {worst:.2e}, {elapsed:.3} s"),
    })
}

fn watson_sum_check() -> Result<Outcome> {
    let report = run_verification(SuiteSelection::One(Suite::Watson), &VerifyOptions::default())?;
    let count = |id: &str| report.rows.iter().filter(|r| r.identity == id).count();
    let worst = report.rows.iter().map(|r| r.rel_error).fold(0.0f64, f64::max);
    Ok(Outcome {
        passed: report.all_passed() && count("watson_terminating") == 10 && count("watson_convergent") == 10,
        detail: format!(
            "{} terminating + {} convergent sets, worst rel {worst:.2e}",
            count("watson_terminating"),
            count("watson_convergent")
        ),
    })
}

fn laplace_expansion() -> Result<Outcome> {
    let mut worst = 0.0f64;
    for ratio in [0.3, 0.6] {
        for cos_gamma in [-0.9, 0.0, 0.9] {
            let (r, rp) = (1.0, ratio);
            let eval = laplace_expansion_3d(r, rp, cos_gamma, &TruncationPolicy::default())?;
            let exact = 1.0 / (r * r + rp * rp - 2.0 * r * rp * cos_gamma).sqrt();
            worst = worst.max(rel(eval.value, real(exact)));
        }
    }
    Ok(Outcome {
        passed: worst <= 1e-10,
        detail: format!("6 points, worst rel {worst:.2e}"),
    })
}

fn corollary_reproduction() -> Result<Outcome> {
    let (mut worst, mut max_terms, mut all_converged, mut points) = (0.0f64, 0, true, 0);
    for d in [3u32, 4, 5] {
        for nu in [-1.0, -2.5, 0.6] {
            for ratio in [0.3, 0.6] {
                for cos_gamma in [-0.9, 0.0, 0.9] {
                    let g = HypersphericalGeometry::new(1.0, ratio, cos_gamma, d)?;
                    let eval = evaluate_corollary(&g, real(nu), &policy_300())?;
                    worst = worst.max(rel(eval.value, real(g.distance().powf(nu))));
                    max_terms = max_terms.max(eval.terms_used);
                    all_converged &= eval.converged;
                    points += 1;
                }
            }
        }
    }
    Ok(Outcome {
        passed: all_converged && worst <= 1e-8 && max_terms <= 300,
        detail: format!("{points} points, worst rel {worst:.2e}, max terms {max_terms}"),
    })
}

fn binomial(m: u64, j: u64) -> u128 {
    if j > m {
        return 0;
    }
    (0..j).fold(1u128, |acc, i| acc * (m - i) as u128 / (i as u128 + 1))
}

fn degeneracy_counts() -> Result<Outcome> {
    let mut mismatches = 0;
    for n in 0..=20u64 {
        mismatches += (degeneracy(n, 3)? != (2 * n + 1) as u128) as usize;
        mismatches += (degeneracy(n, 4)? != ((n + 1) * (n + 1)) as u128) as usize;
    }
    for n in 0..=10u64 {
        for d in 3..=7u64 {
            let brute = binomial(n + d - 1, d - 1) - binomial(n + d - 3, d - 1);
            mismatches += (degeneracy(n, d as u32)? != brute) as usize;
        }
    }
    Ok(Outcome {
        passed: mismatches == 0,
        detail: format!("{mismatches} mismatches over 42 closed-form and 55 brute-force cases"),
    })
}

fn realness() -> Result<Outcome> {
    let p = policy_300();
    let (mut worst, mut values) = (0.0f64, 0);
    let mut record = |v: Complex64| {
        worst = worst.max(v.im.abs() / v.norm());
        values += 1;
    };
    for (nu, mu, z, x) in grid() {
        let (nu_c, z_c, x_c) = (real(nu), real(z), real(x));
        record(evaluate_theorem1(&ExpansionSpec::z_form(nu_c, mu, z_c, x_c), &p)?.value);
        record(evaluate_legendre_form(nu_c, z_c, x_c, &p)?.value);
        record(evaluate_chebyshev_u_form(nu_c, z_c, x_c, &p)?.value);
        record(evaluate_chebyshev_t_form(nu_c, z_c, x_c, &p)?.value);
        record(evaluate_durand_cauchy(mu, z_c, x_c, &p)?.value);
        record(evaluate_cauchy_u_elementary(z_c, x_c, &p)?.value);
    }
    Ok(Outcome {
        passed: worst <= 1e-10,
        detail: format!("{values} values on the reproduction grid, worst |Im|/|value| {worst:.2e}"),
    })
}

fn point_pair(d: usize, distance: f64) -> Result<EuclideanPointPair> {
    let mut x = vec![0.0; d];
    x[0] = distance;
    EuclideanPointPair::new(x, vec![0.0; d])
}

fn fundamental_solution_spot_values() -> Result<Outcome> {
    let (mut worst3, mut worst2) = (0.0f64, 0.0f64);
    let mut sample = String::new();
    for r in [0.5, 2.0, 7.0] {
        let g3 = fundamental_solution(&PolyharmonicParams::new(3, 1)?, &point_pair(3, r)?)?;
        worst3 = worst3.max(rel(real(g3), real(1.0 / (4.0 * PI * r))));
        let g2 = fundamental_solution(&PolyharmonicParams::new(2, 1)?, &point_pair(2, r)?)?;
        let target = r.ln() / (2.0 * PI);
        worst2 = worst2.max(rel(real(g2), real(target)));
        if r == 2.0 {
            sample = format!("at r = 2: computed {g2:.6e}, expected log(r)/(2π) = {target:.6e}");
        }
    }
    Ok(Outcome {
        passed: worst3 <= 1e-14 && worst2 <= 1e-14,
        detail: format!("d=3 worst rel {worst3:.2e}; d=2 worst rel {worst2:.2e} ({sample})"),
    })
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        (
            "generalized generating function on the 54-point grid",
            theorem1_reproduction,
        ),
        (
            "Gegenbauer generating-function partial sums",
            generating_function_recovery,
        ),
        ("Heine's formula", heine_formula),
        ("elementary Chebyshev-U expansion of 1/(z-x)", elementary_u_expansion),
        ("polynomial (z-x)^q exactness", polynomial_exactness),
        ("connection relation between Gegenbauer orders", connection_identity),
        ("Watson's sum", watson_sum_check),
        ("Laplace expansion in three dimensions", laplace_expansion),
        ("hyperspherical expansion of distance powers", corollary_reproduction),
        ("hyperspherical-harmonic degeneracy", degeneracy_counts),
        ("realness for real parameters", realness),
        ("fundamental-solution spot values", fundamental_solution_spot_values),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = check().unwrap_or_else(|e| Outcome {
            passed: false,
            detail: format!("error: {e}"),
        });
        let status = if outcome.passed { "PASS" } else { "FAIL" };
        println!("{status} {:>2} {name}: {}", i + 1, outcome.detail);
        failed += !outcome.passed as usize;
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
