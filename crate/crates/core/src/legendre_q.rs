//! Associated Legendre functions of the second kind `Q_ν^μ(z)` off the cut
//! `(-∞, 1]`.
//!
//! Two routes are provided. [`legendre_q`] sums a ₂F₁ in `1/z²` and needs
//! `|z| > 1`. [`q_from_rho`] evaluates the functions that appear in the
//! generalized generating function through the variable `ρ` with
//! `z = (1 + ρ²) / (2ρ)`, summing a ₂F₁ in `ρ²`.

use crate::error::{Error, Result};
use crate::hypergeometric::gauss_2f1;
use crate::scalar::{as_nonpositive_integer, exp_i_pi, log_gamma, principal_ln, real, Complex64, HALF_LN_PI};
use crate::series::{SeriesEvaluation, TruncationPolicy};

use std::f64::consts::LN_2;

/// Arguments within this distance of the unit circle are rejected.
pub const NEAR_CUT_GUARD: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LegendreQParams {
    pub degree: Complex64,
    pub order: Complex64,
    pub z: Complex64,
}

impl LegendreQParams {
    pub fn new(degree: Complex64, order: Complex64, z: Complex64) -> Self {
        Self { degree, order, z }
    }

    pub fn validate(&self) -> Result<()> {
        let z = self.z;
        if !(z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::Domain(format!("argument {z} is not finite")));
        }
        if z.im == 0.0 && z.re <= 1.0 {
            return Err(Error::Domain(format!("argument {z} lies on the cut (-inf, 1]")));
        }
        if z.norm() <= 1.0 + NEAR_CUT_GUARD {
            return Err(Error::Domain(format!(
                "the series in 1/z^2 needs |z| > 1, got |z| = {}",
                z.norm()
            )));
        }
        let sum = self.degree + self.order + 1.0;
        if as_nonpositive_integer(sum).is_some() {
            return Err(Error::Pole(format!(
                "degree + order + 1 = {sum} is a non-positive integer"
            )));
        }
        let c = self.degree + 1.5;
        if as_nonpositive_integer(c).is_some() {
            return Err(Error::Pole(format!("degree + 3/2 = {c} is a non-positive integer")));
        }
        Ok(())
    }
}

/// A Q value split as `exp(log_scale) · exp(iπ phase) · series`.
///
/// Keeping the prefactor in log form lets callers combine it with other
/// large or small factors before exponentiating.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct QParts {
    pub log_scale: Complex64,
    pub phase: Complex64,
    pub series: SeriesEvaluation,
}

impl QParts {
    pub fn evaluate(self) -> Result<SeriesEvaluation> {
        let factor = self.log_scale.exp() * exp_i_pi(self.phase);
        self.series.scaled(factor).ensure_finite("Legendre Q")
    }
}

pub(crate) fn legendre_q_parts(params: &LegendreQParams, policy: &TruncationPolicy) -> Result<QParts> {
    params.validate()?;
    let LegendreQParams {
        degree: nu,
        order: mu,
        z,
    } = *params;
    let log_scale = HALF_LN_PI + log_gamma(nu + mu + 1.0)? - log_gamma(nu + 1.5)? - (nu + 1.0) * LN_2
        + mu / 2.0 * (principal_ln(z - 1.0) + principal_ln(z + 1.0))
        - (nu + mu + 1.0) * principal_ln(z);
    let series = gauss_2f1(
        (nu + mu + 2.0) / 2.0,
        (nu + mu + 1.0) / 2.0,
        nu + 1.5,
        1.0 / (z * z),
        policy,
    )?;
    Ok(QParts {
        log_scale,
        phase: mu,
        series,
    })
}

/// `Q_ν^μ(z)` from its hypergeometric representation in `1/z²`.
///
/// `(z² - 1)^{μ/2}` is taken as `(z - 1)^{μ/2} (z + 1)^{μ/2}` with principal
/// branches, and `z^{ν+μ+1}` is principal.
pub fn legendre_q(params: &LegendreQParams, policy: &TruncationPolicy) -> Result<SeriesEvaluation> {
    legendre_q_parts(params, policy)?.evaluate()
}

fn check_rho(rho: Complex64) -> Result<()> {
    let r = rho.norm();
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::Domain(format!(
            "rho must satisfy 0 < |rho| < 1, got |rho| = {r}"
        )));
    }
    Ok(())
}

pub(crate) fn q_from_rho_parts(
    k: u64,
    mu: f64,
    nu: Complex64,
    rho: Complex64,
    policy: &TruncationPolicy,
) -> Result<QParts> {
    check_rho(rho)?;
    q_from_rho_parts_unchecked(k, mu, nu, rho, policy)
}

/// As [`q_from_rho_parts`] without the `|ρ| < 1` requirement; only
/// meaningful when the ₂F₁ terminates, possibly after Euler's transformation.
pub(crate) fn q_from_rho_parts_unchecked(
    k: u64,
    mu: f64,
    nu: Complex64,
    rho: Complex64,
    policy: &TruncationPolicy,
) -> Result<QParts> {
    let kf = k as f64;
    let lower = real(mu + kf + 1.0);
    if as_nonpositive_integer(lower).is_some() {
        return Err(Error::Pole(format!(
            "mu + k + 1 = {} is a non-positive integer",
            lower.re
        )));
    }
    let rho2 = rho * rho;
    let log_scale = HALF_LN_PI + log_gamma(nu + kf)? - log_gamma(lower)?
        + (mu + kf + 0.5) * principal_ln(rho)
        + (nu - mu - 0.5) * principal_ln(1.0 - rho2);
    let series = gauss_2f1(nu + kf, nu - mu, lower, rho2, policy)?;
    Ok(QParts {
        log_scale,
        phase: nu - mu - 0.5,
        series,
    })
}

/// `Q_{k+μ-1/2}^{ν-μ-1/2}((1 + ρ²) / (2ρ))` for `0 < |ρ| < 1`, through
/// ₂F₁(ν+k, ν-μ; μ+k+1; ρ²).
pub fn q_from_rho(
    k: u64,
    mu: f64,
    nu: Complex64,
    rho: Complex64,
    policy: &TruncationPolicy,
) -> Result<SeriesEvaluation> {
    q_from_rho_parts(k, mu, nu, rho, policy)?.evaluate()
}

/// `ρ = z - (z - 1)^{1/2} (z + 1)^{1/2}`, the inverse of `z = (1 + ρ²) / (2ρ)`
/// with `|ρ| < 1` for `z ∉ [-1, 1]`.
pub fn rho_from_z(z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 && z.re.abs() <= 1.0 {
        return Err(Error::Domain(format!("z = {z} lies on [-1, 1]")));
    }
    let rho = z - (z - 1.0).sqrt() * (z + 1.0).sqrt();
    check_rho(rho)?;
    Ok(rho)
}

pub fn z_from_rho(rho: Complex64) -> Result<Complex64> {
    check_rho(rho)?;
    Ok((1.0 + rho * rho) / (2.0 * rho))
}
