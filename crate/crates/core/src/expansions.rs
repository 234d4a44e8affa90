//! Gegenbauer expansions of `(z - x)^{-ν}` and their special cases.
//!
//! Every evaluator sums `coefficient_n · p_n(x)` where `p_n` is a Gegenbauer,
//! Legendre or Chebyshev polynomial and the coefficient carries an associated
//! Legendre function of the second kind. Prefactors and the Q prefactor are
//! combined in log space and exponentiated once per term; the stop rule is
//! applied to the full terms.

use crate::error::{Error, Result};
use crate::legendre_q::{
    legendre_q_parts, q_from_rho_parts, q_from_rho_parts_unchecked, rho_from_z, z_from_rho, LegendreQParams, QParts,
    NEAR_CUT_GUARD,
};
use crate::orthopoly::{check_gegenbauer_order, ChebyshevTSequence, GegenbauerSequence};
use crate::scalar::{
    as_nonpositive_integer, complex_power, exp_i_pi, log_gamma, neumann_factor, principal_ln, real, Complex64,
    HALF_LN_PI,
};
use crate::series::{sum_series, SeriesEvaluation, TailModel, TruncationPolicy};

use std::f64::consts::LN_2;

/// Where the expansion is evaluated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PointForm {
    /// `(z - x)^{-ν}` with `z ∉ (-∞, 1]`.
    Z { z: Complex64, x: Complex64 },
    /// `(1 + ρ² - 2ρx)^{-ν}` with `0 < |ρ| < 1`.
    Rho { rho: Complex64, x: Complex64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpansionSpec {
    pub nu: Complex64,
    pub mu: f64,
    pub point: PointForm,
}

impl ExpansionSpec {
    pub fn z_form(nu: Complex64, mu: f64, z: Complex64, x: Complex64) -> Self {
        Self {
            nu,
            mu,
            point: PointForm::Z { z, x },
        }
    }

    pub fn rho_form(nu: Complex64, mu: f64, rho: Complex64, x: Complex64) -> Self {
        Self {
            nu,
            mu,
            point: PointForm::Rho { rho, x },
        }
    }

    pub fn x(&self) -> Complex64 {
        match self.point {
            PointForm::Z { x, .. } | PointForm::Rho { x, .. } => x,
        }
    }

    /// The argument of the Legendre functions, `z` itself or `(1 + ρ²) / (2ρ)`.
    pub fn z(&self) -> Result<Complex64> {
        match self.point {
            PointForm::Z { z, .. } => Ok(z),
            PointForm::Rho { rho, .. } => z_from_rho(rho),
        }
    }

    pub fn validate(&self) -> Result<()> {
        check_nu(self.nu)?;
        check_gegenbauer_order(self.mu)?;
        match self.point {
            PointForm::Z { z, .. } => check_z(z),
            PointForm::Rho { rho, .. } => z_from_rho(rho).map(|_| ()),
        }
    }

    /// Whether `Re(μ - ν) > -1`, the condition under which the underlying
    /// ₃F₂ reduction was derived. Reported, not enforced.
    pub fn watson_condition(&self) -> bool {
        (self.mu - self.nu).re > -1.0
    }

    /// The closed-form left-hand side the expansion reproduces.
    pub fn direct_value(&self) -> Result<Complex64> {
        match self.point {
            PointForm::Z { z, x } => complex_power(z - x, -self.nu),
            PointForm::Rho { rho, x } => complex_power(1.0 + rho * rho - 2.0 * rho * x, -self.nu),
        }
    }
}

fn check_nu(nu: Complex64) -> Result<()> {
    if !(nu.re.is_finite() && nu.im.is_finite()) || as_nonpositive_integer(nu).is_some() {
        return Err(Error::Parameter(format!("nu must be finite and not in -N_0, got {nu}")));
    }
    Ok(())
}

fn check_z(z: Complex64) -> Result<()> {
    if !(z.re.is_finite() && z.im.is_finite()) || (z.im == 0.0 && z.re <= 1.0) {
        return Err(Error::Domain(format!("z = {z} lies on the cut (-inf, 1]")));
    }
    Ok(())
}

fn ellipse_sums(z: Complex64, x: Complex64) -> (f64, f64) {
    ((x - 1.0).norm() + (x + 1.0).norm(), (z - 1.0).norm() + (z + 1.0).norm())
}

/// True when `x` lies strictly inside the ellipse with foci `±1` through `z`.
pub fn check_convergence_region(z: Complex64, x: Complex64) -> bool {
    let (x_sum, z_sum) = ellipse_sums(z, x);
    x_sum < z_sum
}

fn require_region(z: Complex64, x: Complex64) -> Result<()> {
    let (x_sum, z_sum) = ellipse_sums(z, x);
    if x_sum < z_sum {
        Ok(())
    } else {
        Err(Error::Region { x_sum, z_sum })
    }
}

/// `ln(z - 1) + ln(z + 1)`, the logarithm of `z² - 1` split across the two
/// principal-branch factors.
fn ln_z2m1(z: Complex64) -> Complex64 {
    principal_ln(z - 1.0) + principal_ln(z + 1.0)
}

/// How the Legendre functions `Q_{n+μ-1/2}^{ν-μ-1/2}(z)` are obtained.
#[derive(Debug, Clone, Copy)]
enum QSource {
    /// The series in `1/z²`.
    Direct(Complex64),
    /// The series in `ρ²`.
    Rho(Complex64),
}

impl QSource {
    fn for_z(z: Complex64) -> Result<Self> {
        if z.norm() > 1.0 + NEAR_CUT_GUARD {
            Ok(Self::Direct(z))
        } else {
            Ok(Self::Rho(rho_from_z(z)?))
        }
    }

    fn parts(self, n: u64, mu: f64, nu: Complex64, policy: &TruncationPolicy) -> Result<QParts> {
        match self {
            Self::Direct(z) => {
                let params = LegendreQParams::new(real(n as f64 + mu - 0.5), nu - mu - 0.5, z);
                legendre_q_parts(&params, policy)
            }
            Self::Rho(rho) => q_from_rho_parts(n, mu, nu, rho, policy),
        }
    }
}

/// `exp(log) · exp(iπ phase)`, kept unexpanded until a term is assembled.
#[derive(Debug, Clone, Copy)]
struct Prefactor {
    log: Complex64,
    phase: Complex64,
}

impl Prefactor {
    fn with_q(self, q: &QParts, weight: f64) -> Complex64 {
        (self.log + q.log_scale).exp() * exp_i_pi(self.phase + q.phase) * q.series.value * weight
    }
}

/// One expansion: prefactor, Q family and weights, summed against `polys`.
struct Expansion<W, P> {
    prefactor: Prefactor,
    source: QSource,
    mu: f64,
    nu: Complex64,
    weight: W,
    polys: P,
}

impl<W, P> Expansion<W, P>
where
    W: Fn(u64) -> f64,
    P: Iterator<Item = Complex64>,
{
    fn coefficient(&self, n: u64, policy: &TruncationPolicy) -> Result<(Complex64, SeriesEvaluation)> {
        let q = self.source.parts(n, self.mu, self.nu, policy)?;
        Ok((self.prefactor.with_q(&q, (self.weight)(n)), q.series))
    }

    fn sum(mut self, policy: &TruncationPolicy) -> Result<SeriesEvaluation> {
        let eval = sum_series(*policy, TailModel::Geometric, |n, acc| {
            let p = self.polys.next().expect("polynomial sequences are infinite");
            if p == real(0.0) {
                return Ok(real(0.0));
            }
            let (coefficient, inner) = self.coefficient(n as u64, policy)?;
            acc.note_inner(&inner);
            Ok(coefficient * p)
        })?;
        eval.ensure_finite("Gegenbauer expansion")
    }
}

fn theorem1_expansion(spec: &ExpansionSpec) -> Result<Expansion<impl Fn(u64) -> f64, GegenbauerSequence>> {
    spec.validate()?;
    let (nu, mu) = (spec.nu, spec.mu);
    let common = log_gamma(real(mu))? - HALF_LN_PI - log_gamma(nu)?;
    let phase = mu - nu + 0.5;
    let (prefactor, source) = match spec.point {
        PointForm::Z { z, .. } => (
            Prefactor {
                log: common + (mu + 0.5) * LN_2 - ((nu - mu) / 2.0 - 0.25) * ln_z2m1(z),
                phase,
            },
            QSource::for_z(z)?,
        ),
        PointForm::Rho { rho, .. } => (
            Prefactor {
                log: common - (mu + 0.5) * principal_ln(rho) - (nu - mu - 0.5) * principal_ln(1.0 - rho * rho),
                phase,
            },
            QSource::Rho(rho),
        ),
    };
    Ok(Expansion {
        prefactor,
        source,
        mu,
        nu,
        weight: move |n| n as f64 + mu,
        polys: GegenbauerSequence::new(mu, spec.x())?,
    })
}

/// The coefficient of `C_n^μ(x)` in the Gegenbauer expansion of `(z - x)^{-ν}`
/// (z-form) or `(1 + ρ² - 2ρx)^{-ν}` (ρ-form).
pub fn theorem1_coefficient(n: u64, spec: &ExpansionSpec, policy: &TruncationPolicy) -> Result<Complex64> {
    policy.validate()?;
    let (coefficient, _) = theorem1_expansion(spec)?.coefficient(n, policy)?;
    Ok(coefficient)
}

/// `Σ_n theorem1_coefficient(n) · C_n^μ(x)`.
///
/// Rejects `x` outside the ellipse with foci `±1` through `z`; in ρ-form the
/// ellipse passes through `(1 + ρ²) / (2ρ)`.
pub fn evaluate_theorem1(spec: &ExpansionSpec, policy: &TruncationPolicy) -> Result<SeriesEvaluation> {
    spec.validate()?;
    require_region(spec.z()?, spec.x())?;
    evaluate_theorem1_unchecked(spec, policy)
}

/// [`evaluate_theorem1`] without the ellipse test. Outside the ellipse the
/// partial sums do not converge.
pub fn evaluate_theorem1_unchecked(spec: &ExpansionSpec, policy: &TruncationPolicy) -> Result<SeriesEvaluation> {
    theorem1_expansion(spec)?.sum(policy)
}

fn z_form_checks(nu: Complex64, z: Complex64, x: Complex64) -> Result<()> {
    check_nu(nu)?;
    check_z(z)?;
    require_region(z, x)
}

/// Expansion of `(z - x)^{-ν}` over Legendre polynomials.
pub fn evaluate_legendre_form(
    nu: Complex64,
    z: Complex64,
    x: Complex64,
    policy: &TruncationPolicy,
) -> Result<SeriesEvaluation> {
    z_form_checks(nu, z, x)?;
    Expansion {
        prefactor: Prefactor {
            log: (1.0 - nu) / 2.0 * ln_z2m1(z) - log_gamma(nu)?,
            phase: 1.0 - nu,
        },
        source: QSource::for_z(z)?,
        mu: 0.5,
        nu,
        weight: |n| 2.0 * n as f64 + 1.0,
        polys: GegenbauerSequence::new(0.5, x)?,
    }
    .sum(policy)
}

/// Expansion of `(z - x)^{-ν}` over Chebyshev polynomials of the second kind.
pub fn evaluate_chebyshev_u_form(
    nu: Complex64,
    z: Complex64,
    x: Complex64,
    policy: &TruncationPolicy,
) -> Result<SeriesEvaluation> {
    z_form_checks(nu, z, x)?;
    Expansion {
        prefactor: Prefactor {
            log: 1.5 * LN_2 - HALF_LN_PI - log_gamma(nu)? - (nu / 2.0 - 0.75) * ln_z2m1(z),
            phase: 1.5 - nu,
        },
        source: QSource::for_z(z)?,
        mu: 1.0,
        nu,
        weight: |n| n as f64 + 1.0,
        polys: GegenbauerSequence::new(1.0, x)?,
    }
    .sum(policy)
}

/// `1/(z - x) = 2 Σ U_n(x) w^{-(n+1)}` with `w = z ± (z² - 1)^{1/2}`, the
/// root taken so that `|w| ≥ 1`.
pub fn evaluate_cauchy_u_elementary(z: Complex64, x: Complex64, policy: &TruncationPolicy) -> Result<SeriesEvaluation> {
    check_z(z)?;
    require_region(z, x)?;
    let root = (z - 1.0).sqrt() * (z + 1.0).sqrt();
    let w = if (z + root).norm() >= 1.0 { z + root } else { z - root };
    let inv = 1.0 / w;
    let mut polys = GegenbauerSequence::new(1.0, x)?;
    let mut power = inv;
    let eval = sum_series(*policy, TailModel::Geometric, |_, _| {
        let term = 2.0 * polys.next().expect("infinite") * power;
        power *= inv;
        Ok(term)
    })?;
    eval.ensure_finite("elementary U expansion")
}

/// Expansion of `(z - x)^{-ν}` over Chebyshev polynomials of the first kind.
pub fn evaluate_chebyshev_t_form(
    nu: Complex64,
    z: Complex64,
    x: Complex64,
    policy: &TruncationPolicy,
) -> Result<SeriesEvaluation> {
    z_form_checks(nu, z, x)?;
    Expansion {
        prefactor: Prefactor {
            log: 0.5 * LN_2 - HALF_LN_PI - log_gamma(nu)? + (0.25 - nu / 2.0) * ln_z2m1(z),
            phase: 0.5 - nu,
        },
        source: QSource::for_z(z)?,
        mu: 0.0,
        nu,
        weight: |n| neumann_factor(n) as f64,
        polys: ChebyshevTSequence::new(x),
    }
    .sum(policy)
}

/// Gegenbauer expansion of the Cauchy denominator `1/(z - x)`.
pub fn evaluate_durand_cauchy(
    mu: f64,
    z: Complex64,
    x: Complex64,
    policy: &TruncationPolicy,
) -> Result<SeriesEvaluation> {
    check_gegenbauer_order(mu)?;
    z_form_checks(real(1.0), z, x)?;
    Expansion {
        prefactor: Prefactor {
            log: (mu + 0.5) * LN_2 - HALF_LN_PI + log_gamma(real(mu))? + (mu / 2.0 - 0.25) * ln_z2m1(z),
            phase: real(mu - 0.5),
        },
        source: QSource::for_z(z)?,
        mu,
        nu: real(1.0),
        weight: move |n| n as f64 + mu,
        polys: GegenbauerSequence::new(mu, x)?,
    }
    .sum(policy)
}

/// `(z - x)^q` as the finite Chebyshev sum with half-odd-degree Q functions.
///
/// Valid for all complex `z` and `x`. For `q = 0`, and within `1e-8` of
/// `z² = 1`, the power is returned directly.
pub fn evaluate_polynomial_form(q: u64, z: Complex64, x: Complex64) -> Result<Complex64> {
    if !(z.re.is_finite() && z.im.is_finite() && x.re.is_finite() && x.im.is_finite()) {
        return Err(Error::Domain("arguments must be finite".into()));
    }
    if q == 0 || (z * z - 1.0).norm() < 1e-8 {
        return Ok((z - x).powu(q as u32));
    }
    let qf = q as f64;
    // both roots ρ and 1/ρ map to z; the Q functions here are finite sums,
    // so |ρ| = 1 on (-1, 1) is allowed
    let rho = z - (z - 1.0).sqrt() * (z + 1.0).sqrt();
    let policy = TruncationPolicy::default();
    let prefactor = Prefactor {
        log: 0.5 * LN_2 - HALF_LN_PI + real(qf / 2.0 + 0.25) * ln_z2m1(z),
        phase: real(qf + 1.5),
    };
    let nu = real(qf + 1.0);
    let mut total = real(0.0);
    for (n, t) in (0..=q).zip(ChebyshevTSequence::new(x)) {
        // (-q)_n / (q+n)!
        let ratio = (0..n).fold(1.0, |acc, i| acc * (i as f64 - qf)) / crate::scalar::factorial(q + n);
        let weight = neumann_factor(n) as f64 * ratio;
        let parts = q_from_rho_parts_unchecked(n, 0.0, nu, rho, &policy)?;
        total += prefactor.with_q(&parts, weight) * t;
    }
    if total.re.is_finite() && total.im.is_finite() {
        Ok(total)
    } else {
        Err(Error::NonFinite("polynomial expansion"))
    }
}

/// `ρ^{(d-1)/2} (1-ρ²)^{ν-(d-1)/2} (1 + ρ² - 2ρx)^{-ν}` from its expansion
/// over `C_n^{d/2-1}(x)`.
pub fn evaluate_dim_specialized(
    d: u32,
    nu: Complex64,
    rho: Complex64,
    x: Complex64,
    policy: &TruncationPolicy,
) -> Result<SeriesEvaluation> {
    if d < 3 {
        return Err(Error::Parameter(format!("dimension must be at least 3, got {d}")));
    }
    check_nu(nu)?;
    let z = z_from_rho(rho)?;
    require_region(z, x)?;
    let df = d as f64;
    let mu = df / 2.0 - 1.0;
    Expansion {
        prefactor: Prefactor {
            log: log_gamma(real(mu))? - LN_2 - HALF_LN_PI - log_gamma(nu)?,
            phase: (df - 1.0) / 2.0 - nu,
        },
        source: QSource::Rho(rho),
        mu,
        nu,
        weight: move |n| 2.0 * n as f64 + df - 2.0,
        polys: GegenbauerSequence::new(mu, x)?,
    }
    .sum(policy)
}

/// Closed form of the left side expanded by [`evaluate_dim_specialized`].
pub fn dim_specialized_direct(d: u32, nu: Complex64, rho: Complex64, x: Complex64) -> Result<Complex64> {
    let half = (d as f64 - 1.0) / 2.0;
    Ok(complex_power(rho, real(half))?
        * complex_power(1.0 - rho * rho, nu - half)?
        * complex_power(1.0 + rho * rho - 2.0 * rho * x, -nu)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orthopoly::gegenbauer;
    use crate::scalar::c64;

    fn policy() -> TruncationPolicy {
        TruncationPolicy::default()
    }

    fn rel(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn region_predicate() {
        assert!(check_convergence_region(real(2.0), real(0.0)));
        assert!(!check_convergence_region(real(2.0), real(2.0)));
        let (x_sum, z_sum) = ellipse_sums(real(1.1), c64(0.99, 0.1));
        assert!((x_sum - 2.093_009_734_850_975_4).abs() < 1e-14);
        assert!((z_sum - 2.2).abs() < 1e-15);
        assert!(check_convergence_region(real(1.1), c64(0.99, 0.1)));
    }

    #[test]
    fn theorem1_z_form_examples() {
        let cases = [(0.5, 0.5, 3.0, 0.0), (2.6, 1.0, 1.8, -0.5), (0.3, 2.2, 1.2, 0.8)];
        for (nu, mu, z, x) in cases {
            let spec = ExpansionSpec::z_form(real(nu), mu, real(z), real(x));
            let v = evaluate_theorem1(&spec, &policy()).unwrap();
            assert!(v.converged, "{nu} {mu} {z} {x}");
            let expect = real((z - x).powf(-nu));
            assert!(rel(v.value, expect) < 1e-11, "{nu} {mu} {z} {x}: {}", v.value);
        }
    }

    #[test]
    fn theorem1_complex_arguments() {
        let cases = [
            (c64(0.7, 0.4), 0.8, c64(1.5, 1.0), c64(0.2, 0.1)),
            (c64(1.2, 0.0), 1.5, c64(-1.4, 0.6), c64(-0.3, -0.2)),
            (c64(-0.6, 0.0), 0.4, c64(0.1, 0.9), c64(0.1, 0.05)),
        ];
        for (nu, mu, z, x) in cases {
            let spec = ExpansionSpec::z_form(nu, mu, z, x);
            let v = evaluate_theorem1(&spec, &policy().with_max_terms(2000)).unwrap();
            assert!(v.converged, "{nu} {mu} {z} {x}");
            assert!(
                rel(v.value, spec.direct_value().unwrap()) < 1e-10,
                "{nu} {mu} {z} {x}: {}",
                v.value
            );
        }
    }

    #[test]
    fn theorem1_rho_form_generating_function() {
        let spec = ExpansionSpec::rho_form(real(0.75), 0.75, real(0.4), real(0.6));
        let v = evaluate_theorem1(&spec, &policy()).unwrap();
        assert!(rel(v.value, real(0.68f64.powf(-0.75))) < 1e-13);
        for n in 0..8 {
            let c = theorem1_coefficient(n, &spec, &policy()).unwrap();
            assert!(rel(c, real(0.4f64.powi(n as i32))) < 1e-13);
        }
    }

    #[test]
    fn theorem1_coefficient_values() {
        let spec = ExpansionSpec::z_form(real(1.0), 0.5, real(2.0), real(0.0));
        let c = theorem1_coefficient(0, &spec, &policy()).unwrap();
        assert!(rel(c, real(0.5 * 3.0f64.ln())) < 1e-13);
        let spec = ExpansionSpec::z_form(real(1.0 / 3.0), 1.0, real(2.5), real(0.0));
        let c = theorem1_coefficient(3, &spec, &policy()).unwrap();
        assert!(rel(c, real(0.001_151_531_854_514_929_7)) < 1e-12, "{c}");
    }

    #[test]
    fn theorem1_rejects_bad_input() {
        let p = policy();
        let outside = ExpansionSpec::z_form(real(0.5), 0.5, real(1.5), real(1.6));
        assert!(matches!(evaluate_theorem1(&outside, &p), Err(Error::Region { .. })));
        let cut = ExpansionSpec::z_form(real(0.5), 0.5, real(0.5), real(0.0));
        assert!(matches!(evaluate_theorem1(&cut, &p), Err(Error::Domain(_))));
        let nu = ExpansionSpec::z_form(real(-2.0), 0.5, real(2.0), real(0.0));
        assert!(matches!(evaluate_theorem1(&nu, &p), Err(Error::Parameter(_))));
        let mu = ExpansionSpec::z_form(real(0.5), 0.0, real(2.0), real(0.0));
        assert!(matches!(evaluate_theorem1(&mu, &p), Err(Error::Parameter(_))));
        let rho = ExpansionSpec::rho_form(real(0.5), 0.5, real(1.0), real(0.0));
        assert!(matches!(evaluate_theorem1(&rho, &p), Err(Error::Domain(_))));
    }

    #[test]
    fn legendre_form() {
        let v = evaluate_legendre_form(real(0.5), real(2.0), real(0.0), &policy()).unwrap();
        assert!(rel(v.value, real(0.5f64.sqrt())) < 1e-12);
        // Heine
        let v = evaluate_legendre_form(real(1.0), real(1.7), real(0.3), &policy()).unwrap();
        assert!(rel(v.value, real(1.0 / 1.4)) < 1e-12);
    }

    #[test]
    fn chebyshev_u_forms() {
        let v = evaluate_chebyshev_u_form(real(1.7), real(2.2), real(0.3), &policy()).unwrap();
        assert!(rel(v.value, real(1.9f64.powf(-1.7))) < 1e-12);
        let e = evaluate_cauchy_u_elementary(real(2.0), real(0.0), &policy()).unwrap();
        assert!(rel(e.value, real(0.5)) < 1e-13);
        let e = evaluate_cauchy_u_elementary(real(1.5), real(0.9), &policy().with_max_terms(2000)).unwrap();
        assert!(rel(e.value, real(1.0 / 0.6)) < 1e-12);
        let z = c64(-0.4, 0.9);
        let x = c64(0.1, 0.2);
        let e = evaluate_cauchy_u_elementary(z, x, &policy()).unwrap();
        assert!(rel(e.value, 1.0 / (z - x)) < 1e-12);
    }

    #[test]
    fn chebyshev_t_form() {
        let v = evaluate_chebyshev_t_form(real(0.5), real(2.0), real(0.5), &policy()).unwrap();
        assert!(rel(v.value, real(1.5f64.powf(-0.5))) < 1e-12);
        let v = evaluate_chebyshev_t_form(real(1.3), real(3.0), real(-0.4), &policy()).unwrap();
        assert!(rel(v.value, real(3.4f64.powf(-1.3))) < 1e-12);
    }

    #[test]
    fn durand_form() {
        let v = evaluate_durand_cauchy(0.5, real(2.0), real(0.0), &policy()).unwrap();
        assert!(rel(v.value, real(0.5)) < 1e-12);
        let v = evaluate_durand_cauchy(1.5, real(2.5), real(0.7), &policy()).unwrap();
        assert!(rel(v.value, real(1.0 / 1.8)) < 1e-12);
    }

    #[test]
    fn polynomial_form() {
        assert!(rel(evaluate_polynomial_form(0, real(3.0), real(1.0)).unwrap(), real(1.0)) < 1e-14);
        assert!(rel(evaluate_polynomial_form(1, real(5.0), real(2.0)).unwrap(), real(3.0)) < 1e-13);
        let (z, x) = (c64(1.2, 0.4), real(-2.0));
        assert!(rel(evaluate_polynomial_form(3, z, x).unwrap(), (z - x).powu(3)) < 1e-12);
        for (z, x) in [
            (c64(0.3, 0.0), c64(0.7, 0.0)),
            (c64(-2.0, -0.3), c64(1.5, 2.0)),
            (c64(-0.2, 0.1), c64(4.0, -1.0)),
        ] {
            for q in 0..6u64 {
                let got = evaluate_polynomial_form(q, z, x).unwrap();
                assert!(rel(got, (z - x).powu(q as u32)) < 1e-12, "{q} {z} {x}: {got}");
            }
        }
        assert_eq!(evaluate_polynomial_form(2, real(1.0), real(0.5)).unwrap(), real(0.25));
    }

    #[test]
    fn dim_specialized() {
        let v = evaluate_dim_specialized(4, real(0.8), real(0.5), real(0.2), &policy()).unwrap();
        assert!(rel(v.value, real(0.415_872_959_383_018_64)) < 1e-12, "{}", v.value);
        let direct = dim_specialized_direct(4, real(0.8), real(0.5), real(0.2)).unwrap();
        assert!(rel(direct, real(0.415_872_959_383_018_64)) < 1e-14);
        // d = 3, ν = 1/2: Legendre generating function times ρ (1-ρ²)^{-1/2}
        let (rho, x) = (0.3f64, 0.4f64);
        let v = evaluate_dim_specialized(3, real(0.5), real(rho), real(x), &policy()).unwrap();
        let expect = rho / (1.0 - rho * rho).sqrt() / (1.0 + rho * rho - 2.0 * rho * x).sqrt();
        assert!(rel(v.value, real(expect)) < 1e-13);
        assert!(evaluate_dim_specialized(2, real(0.5), real(rho), real(x), &policy()).is_err());
    }

    #[test]
    fn generating_function_partial_sums() {
        let (nu, rho, x) = (1.3, 0.45, 0.2);
        let spec = ExpansionSpec::rho_form(real(nu), nu, real(rho), real(x));
        let mut partial = real(0.0);
        for n in 0..12u64 {
            partial += gegenbauer(n, nu, real(x)).unwrap() * rho.powi(n as i32);
            let v = evaluate_theorem1(&spec, &TruncationPolicy::fixed_terms(n as usize + 1)).unwrap();
            assert!((v.value - partial).norm() < 1e-10);
        }
    }
}
