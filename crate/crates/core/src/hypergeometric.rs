//! Gauss ₂F₁ and unit-argument ₃F₂ series, Watson's closed-form ₃F₂ sum and
//! the quadratic transformation of ₂F₁(a, b; a-b+1; z).
//!
//! All series are summed term-to-term with multiplicative ratios. A series
//! with a non-positive integer numerator parameter is detected up front and
//! summed exactly.

use crate::error::{Error, Result};
use crate::scalar::{as_nonpositive_integer, complex_power, log_gamma, real, Complex64, HALF_LN_PI};
use crate::series::{SeriesAccumulator, SeriesEvaluation, Step, TailModel, TruncationPolicy};

fn one() -> Complex64 {
    real(1.0)
}

/// Smallest termination index among the numerator parameters.
fn termination_index(params: &[Complex64]) -> Option<u64> {
    params.iter().filter_map(|&p| as_nonpositive_integer(p)).min()
}

/// Errors when a denominator parameter hits zero at or before `last_term`.
fn check_denominators(params: &[Complex64], last_term: Option<u64>) -> Result<()> {
    for &c in params {
        if let Some(p) = as_nonpositive_integer(c) {
            // (c)_n vanishes once n ≥ p + 1
            if last_term.is_none_or(|m| m > p) {
                return Err(Error::Parameter(format!(
                    "denominator parameter {c} is a non-positive integer before the series terminates"
                )));
            }
        }
    }
    Ok(())
}

fn sum_terminating(
    numer: &[Complex64],
    denom: &[Complex64],
    z: Complex64,
    last_term: u64,
    policy: &TruncationPolicy,
) -> SeriesEvaluation {
    let mut term = one();
    let mut acc = SeriesAccumulator::new(TruncationPolicy::fixed_terms(usize::MAX), TailModel::Geometric);
    let cap = policy.max_terms as u64;
    let count = (last_term + 1).min(cap);
    for n in 0..count {
        acc.push(term);
        let k = n as f64;
        let num = numer.iter().fold(one(), |p, &a| p * (a + k));
        let den = denom.iter().fold(real(k + 1.0), |p, &b| p * (b + k));
        term = term * num / den * z;
    }
    let sum = acc.partial_sum();
    if count == last_term + 1 {
        SeriesEvaluation::exact(sum, count as usize)
    } else {
        SeriesEvaluation {
            value: sum,
            terms_used: count as usize,
            tail_estimate: term.norm(),
            converged: false,
        }
    }
}

/// Gauss hypergeometric series ₂F₁(a, b; c; z) for `|z| < 1`, or any `z` when
/// the series terminates.
///
/// When `c - a` or `c - b` is a non-positive integer the value is taken from
/// Euler's transformation `(1-z)^{c-a-b} ₂F₁(c-a, c-b; c; z)`, which is then a
/// finite sum valid for any `z ≠ 1` off the cut `[1, ∞)`.
pub fn gauss_2f1(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    z: Complex64,
    policy: &TruncationPolicy,
) -> Result<SeriesEvaluation> {
    policy.validate()?;
    if let Some(m) = termination_index(&[a, b]) {
        check_denominators(&[c], Some(m))?;
        return Ok(sum_terminating(&[a, b], &[c], z, m, policy));
    }
    check_denominators(&[c], None)?;
    let (ca, cb) = (c - a, c - b);
    if let Some(m) = termination_index(&[ca, cb]) {
        if z == one() {
            return Err(Error::Domain("Euler-transformed 2F1 is singular at z = 1".into()));
        }
        let prefactor = complex_power(1.0 - z, c - a - b)?;
        return Ok(sum_terminating(&[ca, cb], &[c], z, m, policy).scaled(prefactor));
    }
    if z.norm() >= 1.0 {
        return Err(Error::Domain(format!(
            "2F1 series needs |z| < 1 unless it terminates (z = {z})"
        )));
    }

    let mut acc = SeriesAccumulator::geometric(*policy);
    let mut term = one();
    let mut n = 0.0;
    while acc.push(term) == Step::Continue {
        term = term * ((a + n) * (b + n)) / ((c + n) * (n + 1.0)) * z;
        n += 1.0;
    }
    acc.finish().ensure_finite("2F1 series")
}

/// ₃F₂(a1, a2, a3; b1, b2; 1).
///
/// Converges when the series terminates or when the parameter excess
/// `Re(b1 + b2 - a1 - a2 - a3)` is positive; terms then decay algebraically
/// and the tail is estimated accordingly.
pub fn series_3f2_unit(
    a1: Complex64,
    a2: Complex64,
    a3: Complex64,
    b1: Complex64,
    b2: Complex64,
    policy: &TruncationPolicy,
) -> Result<SeriesEvaluation> {
    policy.validate()?;
    let numer = [a1, a2, a3];
    let denom = [b1, b2];
    if let Some(m) = termination_index(&numer) {
        check_denominators(&denom, Some(m)).map_err(|e| Error::Pole(e.to_string()))?;
        return Ok(sum_terminating(&numer, &denom, one(), m, policy));
    }
    let excess = (b1 + b2 - a1 - a2 - a3).re;
    if excess <= 0.0 {
        return Err(Error::Divergent(format!(
            "3F2 at unit argument needs Re(b1+b2-a1-a2-a3) > 0, got {excess}"
        )));
    }
    check_denominators(&denom, None).map_err(|e| Error::Pole(e.to_string()))?;

    let mut acc = SeriesAccumulator::new(*policy, TailModel::Algebraic { excess });
    let mut term = one();
    let mut n = 0.0;
    while acc.push(term) == Step::Continue {
        term = term * (a1 + n) * (a2 + n) * (a3 + n) / ((b1 + n) * (b2 + n) * (n + 1.0));
        n += 1.0;
    }
    acc.finish().ensure_finite("3F2 series")
}

/// Watson's closed form for ₃F₂(a, b, c; (a+b+1)/2, 2c; 1).
///
/// A gamma pole in the denominator makes the value exactly zero.
pub fn watson_sum(a: Complex64, b: Complex64, c: Complex64) -> Result<Complex64> {
    let condition = (2.0 * c - a - b).re;
    if condition <= -1.0 {
        return Err(Error::Domain(format!(
            "Watson's sum needs Re(2c-a-b) > -1, got {condition}"
        )));
    }
    let numer = [c + 0.5, (a + b + 1.0) / 2.0, c + (1.0 - a - b) / 2.0];
    let denom = [
        (a + 1.0) / 2.0,
        (b + 1.0) / 2.0,
        c + (1.0 - a) / 2.0,
        c + (1.0 - b) / 2.0,
    ];
    let mut log_value = real(HALF_LN_PI);
    for g in numer {
        log_value +=
            log_gamma(g).map_err(|_| Error::Domain(format!("Watson's sum: numerator gamma has a pole at {g}")))?;
    }
    for g in denom {
        match log_gamma(g) {
            Ok(lg) => log_value -= lg,
            Err(_) => return Ok(real(0.0)),
        }
    }
    let value = log_value.exp();
    if value.re.is_finite() && value.im.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite("Watson's sum"))
    }
}

/// ₂F₁(a, b; a-b+1; z) through `(1+z)^{-a} ₂F₁(a/2, (a+1)/2; a-b+1; 4z/(1+z)²)`.
///
/// The transformed series needs `|4z/(1+z)²| < 1` unless it terminates.
pub fn quadratic_transform_2f1(
    a: Complex64,
    b: Complex64,
    z: Complex64,
    policy: &TruncationPolicy,
) -> Result<SeriesEvaluation> {
    let c = a - b + 1.0;
    if let Some(p) = as_nonpositive_integer(c) {
        return Err(Error::Parameter(format!("a-b+1 = -{p} is a non-positive integer")));
    }
    if z.norm() >= 1.0 {
        return Err(Error::Domain(format!(
            "quadratic transformation needs |z| < 1 (z = {z})"
        )));
    }
    let one_plus = 1.0 + z;
    let w = 4.0 * z / (one_plus * one_plus);
    let inner = gauss_2f1(a / 2.0, (a + 1.0) / 2.0, c, w, policy)?;
    Ok(inner.scaled(complex_power(one_plus, -a)?))
}
