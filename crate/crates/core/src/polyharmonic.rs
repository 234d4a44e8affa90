//! Fundamental solutions of powers of the Laplacian on `ℝ^d`, hyperspherical
//! two-point geometry, and Gegenbauer expansions of `‖x - x′‖^ν`.

use std::f64::consts::{LN_2, PI};

use crate::error::{Error, Result};
use crate::legendre_q::{q_from_rho_parts, QParts};
use crate::orthopoly::GegenbauerSequence;
use crate::scalar::{
    as_integer, exp_i_pi, factorial, gamma_half_integer, harmonic_number, log_gamma, neumann_factor, real, Complex64,
    RationalValue, HALF_LN_PI,
};
use crate::series::{sum_series, SeriesEvaluation, TailModel, TruncationPolicy};

/// Tolerance for `|cos γ| > 1` caused by round-off in the dot product.
pub const COS_GAMMA_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelBranch {
    /// `‖x - x′‖^{2k-d}`: odd `d`, or even `d` with `k < d/2`.
    PowerLaw,
    /// `‖x - x′‖^{2p} (log ‖x - x′‖ - β_{p,d})`, `p = k - d/2`: even `d`, `k ≥ d/2`.
    Logarithmic,
}

/// Dimension `d` and power `k` of `(-Δ)^k` on `ℝ^d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolyharmonicParams {
    pub d: u32,
    pub k: u32,
}

impl PolyharmonicParams {
    pub fn new(d: u32, k: u32) -> Result<Self> {
        if d < 1 || k < 1 {
            return Err(Error::Parameter(format!(
                "need d >= 1 and k >= 1, got d = {d}, k = {k}"
            )));
        }
        Ok(Self { d, k })
    }

    pub fn branch(&self) -> KernelBranch {
        if self.d.is_multiple_of(2) && 2 * self.k >= self.d {
            KernelBranch::Logarithmic
        } else {
            KernelBranch::PowerLaw
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EuclideanPointPair {
    x: Vec<f64>,
    x_prime: Vec<f64>,
}

impl EuclideanPointPair {
    pub fn new(x: Vec<f64>, x_prime: Vec<f64>) -> Result<Self> {
        if x.is_empty() || x.len() != x_prime.len() {
            return Err(Error::Parameter(format!(
                "points must have the same positive dimension, got {} and {}",
                x.len(),
                x_prime.len()
            )));
        }
        if x.iter().chain(&x_prime).any(|c| !c.is_finite()) {
            return Err(Error::Parameter("point coordinates must be finite".into()));
        }
        Ok(Self { x, x_prime })
    }

    pub fn dimension(&self) -> usize {
        self.x.len()
    }

    pub fn x(&self) -> &[f64] {
        &self.x
    }

    pub fn x_prime(&self) -> &[f64] {
        &self.x_prime
    }

    pub fn distance(&self) -> f64 {
        self.x
            .iter()
            .zip(&self.x_prime)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt()
    }

    pub fn radii(&self) -> (f64, f64) {
        let norm = |v: &[f64]| v.iter().map(|c| c * c).sum::<f64>().sqrt();
        (norm(&self.x), norm(&self.x_prime))
    }

    fn separated_distance(&self) -> Result<f64> {
        let r = self.distance();
        if r == 0.0 {
            Err(Error::CoincidentPoints)
        } else {
            Ok(r)
        }
    }
}

/// Two points described by their radii and the cosine of their separation angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypersphericalGeometry {
    pub r: f64,
    pub r_prime: f64,
    pub cos_gamma: f64,
    pub d: u32,
}

impl HypersphericalGeometry {
    pub fn new(r: f64, r_prime: f64, cos_gamma: f64, d: u32) -> Result<Self> {
        if !(r >= 0.0 && r_prime >= 0.0 && r.is_finite() && r_prime.is_finite()) {
            return Err(Error::Parameter(format!(
                "radii must be finite and non-negative, got {r}, {r_prime}"
            )));
        }
        if r == 0.0 && r_prime == 0.0 {
            return Err(Error::ZeroRadius("both radii are zero".into()));
        }
        if d < 2 {
            return Err(Error::Parameter(format!("dimension must be at least 2, got {d}")));
        }
        Ok(Self {
            r,
            r_prime,
            cos_gamma: clamp_cos(cos_gamma)?,
            d,
        })
    }

    pub fn from_points(pair: &EuclideanPointPair) -> Result<Self> {
        let (r, r_prime) = pair.radii();
        let d = u32::try_from(pair.dimension()).map_err(|_| Error::Parameter("dimension too large".into()))?;
        Self::new(r, r_prime, separation_angle_cos(pair)?, d)
    }

    pub fn r_less(&self) -> f64 {
        self.r.min(self.r_prime)
    }

    pub fn r_greater(&self) -> f64 {
        self.r.max(self.r_prime)
    }

    pub fn toroidal(&self) -> Result<f64> {
        toroidal_parameter(self.r, self.r_prime)
    }

    /// `‖x - x′‖` from the law of cosines.
    pub fn distance(&self) -> f64 {
        let (r, s) = (self.r, self.r_prime);
        (r * r + s * s - 2.0 * r * s * self.cos_gamma).max(0.0).sqrt()
    }

    /// `r_< / r_>`, rejecting equal or zero radii.
    fn rho(&self) -> Result<f64> {
        if self.r == 0.0 || self.r_prime == 0.0 {
            return Err(Error::ZeroRadius("the expansion needs both radii positive".into()));
        }
        if self.r == self.r_prime {
            return Err(Error::Domain("equal radii give toroidal parameter z = 1".into()));
        }
        Ok(self.r_less() / self.r_greater())
    }
}

fn clamp_cos(c: f64) -> Result<f64> {
    if !c.is_finite() || c.abs() > 1.0 + COS_GAMMA_SLACK {
        return Err(Error::Domain(format!("cos(gamma) = {c} lies outside [-1, 1]")));
    }
    Ok(c.clamp(-1.0, 1.0))
}

/// `β_{p,d} = (H_p + H_{d/2+p-1} - H_{d/2-1}) / 2` for even `d`.
pub fn beta_coefficient(p: u64, d: u32) -> Result<RationalValue> {
    if d < 2 || d % 2 == 1 {
        return Err(Error::Parameter(format!("beta coefficient needs even d >= 2, got {d}")));
    }
    let half = (d / 2) as u64;
    harmonic_number(p)?
        .checked_add(harmonic_number(half + p - 1)?)?
        .checked_sub(harmonic_number(half - 1)?)?
        .checked_half()
}

/// The fundamental solution `𝒢_k^d(x, x′)` of `(-Δ)^k` on `ℝ^d`.
pub fn fundamental_solution(params: &PolyharmonicParams, pair: &EuclideanPointPair) -> Result<f64> {
    let r = pair.separated_distance()?;
    let PolyharmonicParams { d, k } = *params;
    let exponent = 2 * k as i32 - d as i32;
    let pi_power = PI.powf(d as f64 / 2.0);
    match params.branch() {
        KernelBranch::Logarithmic => {
            let p = k - d / 2;
            let sign = if (k + d / 2 + 1) % 2 == 0 { 1.0 } else { -1.0 };
            let denominator = factorial(k as u64 - 1) * factorial(p as u64) * 2f64.powi(2 * k as i32 - 1) * pi_power;
            let beta = beta_coefficient(p as u64, d)?.to_f64();
            Ok(sign * r.powi(exponent) / denominator * (r.ln() - beta))
        }
        KernelBranch::PowerLaw => {
            let gamma = gamma_half_integer(d as i64 - 2 * k as i64)?;
            Ok(gamma * r.powi(exponent) / (factorial(k as u64 - 1) * 2f64.powi(2 * k as i32) * pi_power))
        }
    }
}

/// `‖x - x′‖^{2k-d}` on the power-law branch.
pub fn power_law_kernel(params: &PolyharmonicParams, pair: &EuclideanPointPair) -> Result<f64> {
    if params.branch() != KernelBranch::PowerLaw {
        return Err(Error::Branch(format!(
            "d = {}, k = {} calls for the logarithmic kernel",
            params.d, params.k
        )));
    }
    let r = pair.separated_distance()?;
    Ok(r.powi(2 * params.k as i32 - params.d as i32))
}

/// `‖x - x′‖^{2p} (log ‖x - x′‖ - β_{p,d})` with `p = k - d/2` on the logarithmic branch.
pub fn log_kernel(params: &PolyharmonicParams, pair: &EuclideanPointPair) -> Result<f64> {
    if params.branch() != KernelBranch::Logarithmic {
        return Err(Error::Branch(format!(
            "d = {}, k = {} calls for the power-law kernel",
            params.d, params.k
        )));
    }
    let r = pair.separated_distance()?;
    let p = params.k - params.d / 2;
    let beta = beta_coefficient(p as u64, params.d)?.to_f64();
    Ok(r.powi(2 * p as i32) * (r.ln() - beta))
}

/// `z = (r² + r′²) / (2 r r′)`.
pub fn toroidal_parameter(r: f64, r_prime: f64) -> Result<f64> {
    if !(r > 0.0 && r_prime > 0.0) {
        return Err(Error::ZeroRadius(format!(
            "toroidal parameter needs positive radii, got {r}, {r_prime}"
        )));
    }
    Ok((r * r + r_prime * r_prime) / (2.0 * r * r_prime))
}

/// `cos γ = (x, x′) / (r r′)`, clamped to `[-1, 1]`.
pub fn separation_angle_cos(pair: &EuclideanPointPair) -> Result<f64> {
    let (r, r_prime) = pair.radii();
    if r == 0.0 || r_prime == 0.0 {
        return Err(Error::ZeroRadius(
            "separation angle needs both points away from the origin".into(),
        ));
    }
    let dot: f64 = pair.x.iter().zip(&pair.x_prime).map(|(a, b)| a * b).sum();
    clamp_cos(dot / (r * r_prime))
}

/// True for `ν ∈ {0, 2, 4, ...}`, where `1/Γ(-ν/2)` vanishes.
fn is_even_nonnegative(nu: Complex64) -> bool {
    nu.im == 0.0 && matches!(as_integer(nu.re), Some(m) if m >= 0 && m % 2 == 0)
}

fn check_nu(nu: Complex64) -> Result<()> {
    if nu.re.is_finite() && nu.im.is_finite() {
        Ok(())
    } else {
        Err(Error::Parameter(format!("nu must be finite, got {nu}")))
    }
}

fn assemble(log: Complex64, phase: Complex64, q: &QParts, weight: f64) -> Complex64 {
    (log + q.log_scale).exp() * exp_i_pi(phase + q.phase) * q.series.value * weight
}

/// `‖x - x′‖^ν` from its expansion over `C_n^{d/2-1}(cos γ)` with Legendre
/// functions of the toroidal parameter.
///
/// For `ν ∈ {0, 2, 4, ...}` the series prefactor vanishes; the power is
/// returned directly with `terms_used = 0`.
pub fn evaluate_corollary(
    geom: &HypersphericalGeometry,
    nu: Complex64,
    policy: &TruncationPolicy,
) -> Result<SeriesEvaluation> {
    policy.validate()?;
    check_nu(nu)?;
    if geom.d < 3 {
        return Err(Error::Parameter(format!("the expansion needs d >= 3, got {}", geom.d)));
    }
    let rho = geom.rho()?;
    if is_even_nonnegative(nu) {
        return Ok(SeriesEvaluation::exact(real(geom.distance().powf(nu.re)), 0));
    }
    let df = geom.d as f64;
    let mu = df / 2.0 - 1.0;
    let (small, big) = (geom.r_less(), geom.r_greater());
    let log = log_gamma(real(mu))? - LN_2 - HALF_LN_PI - log_gamma(-nu / 2.0)?
        + (nu + df - 1.0) / 2.0 * (big * big - small * small).ln()
        - (df - 1.0) / 2.0 * (geom.r * geom.r_prime).ln();
    let phase = (nu + df - 1.0) / 2.0;
    let mut polys = GegenbauerSequence::new(mu, real(geom.cos_gamma))?;
    let eval = sum_series(*policy, TailModel::Geometric, |n, acc| {
        let c = polys.next().expect("infinite");
        if c == real(0.0) {
            return Ok(c);
        }
        let q = q_from_rho_parts(n as u64, mu, -nu / 2.0, real(rho), policy)?;
        acc.note_inner(&q.series);
        Ok(assemble(log, phase, &q, 2.0 * n as f64 + df - 2.0) * c)
    })?;
    eval.ensure_finite("hyperspherical expansion")
}

/// `Σ r_<^n / r_>^{n+1} P_n(cos γ)`, which equals `1/‖x - x′‖` on `ℝ³`.
pub fn laplace_expansion_3d(
    r: f64,
    r_prime: f64,
    cos_gamma: f64,
    policy: &TruncationPolicy,
) -> Result<SeriesEvaluation> {
    let geom = HypersphericalGeometry::new(r, r_prime, cos_gamma, 3)?;
    let rho = geom.rho()?;
    let big = geom.r_greater();
    let mut polys = GegenbauerSequence::new(0.5, real(geom.cos_gamma))?;
    let mut weight = 1.0 / big;
    sum_series(*policy, TailModel::Geometric, |_, _| {
        let term = polys.next().expect("infinite") * weight;
        weight *= rho;
        Ok(term)
    })
}

/// `‖x - x′‖^ν` for planar points in polar form, as a cosine series in the
/// azimuthal difference `Δφ` with Legendre functions of half-odd degree.
pub fn evaluate_d2_fourier(
    nu: Complex64,
    r: f64,
    r_prime: f64,
    delta_phi: f64,
    policy: &TruncationPolicy,
) -> Result<SeriesEvaluation> {
    policy.validate()?;
    check_nu(nu)?;
    if is_even_nonnegative(nu) {
        return Err(Error::Parameter(format!(
            "the planar expansion excludes nu in {{0, 2, 4, ...}}, got {nu}"
        )));
    }
    if !delta_phi.is_finite() {
        return Err(Error::Parameter("azimuthal difference must be finite".into()));
    }
    let geom = HypersphericalGeometry::new(r, r_prime, delta_phi.cos(), 2)?;
    let rho = geom.rho()?;
    let (small, big) = (geom.r_less(), geom.r_greater());
    let log =
        -log_gamma(-nu / 2.0)? + (nu + 1.0) / 2.0 * (big * big - small * small).ln() - 0.5 * (PI * r * r_prime).ln();
    let phase = (nu + 1.0) / 2.0;
    let eval = sum_series(*policy, TailModel::Geometric, |m, acc| {
        let q = q_from_rho_parts(m as u64, 0.0, -nu / 2.0, real(rho), policy)?;
        acc.note_inner(&q.series);
        let c = (m as f64 * delta_phi).cos();
        Ok(assemble(log, phase, &q, neumann_factor(m as u64) as f64) * c)
    })?;
    eval.ensure_finite("planar Fourier expansion")
}

fn binomial(m: u64, j: u64) -> Result<u128> {
    let mut c: u128 = 1;
    for i in 0..j {
        c = c
            .checked_mul((m - i) as u128)
            .ok_or(Error::Overflow("binomial coefficient"))?
            / (i as u128 + 1);
    }
    Ok(c)
}

/// Number of linearly independent hyperspherical harmonics of degree `n` on
/// `S^{d-1}`: `(2n + d - 2) (n + d - 3)! / (n! (d - 2)!)`.
pub fn degeneracy(n: u64, d: u32) -> Result<u128> {
    if d < 3 {
        return Err(Error::Parameter(format!("degeneracy needs d >= 3, got {d}")));
    }
    let d = d as u64;
    // (n+d-3)! / (n! (d-2)!) = C(n+d-3, n) / (d-2)
    let numerator = binomial(n + d - 3, n)?
        .checked_mul((2 * n + d - 2) as u128)
        .ok_or(Error::Overflow("degeneracy"))?;
    Ok(numerator / (d as u128 - 2))
}
