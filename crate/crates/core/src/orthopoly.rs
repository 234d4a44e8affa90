//! Gegenbauer, Jacobi, Legendre and Chebyshev polynomials, and the
//! order-changing connection relation for Gegenbauer polynomials.
//!
//! Evaluation runs on the three-term recurrences. The terminating
//! hypergeometric definitions are kept as a second evaluation path
//! ([`PolynomialMethod::Hypergeometric`]); they lose accuracy to cancellation
//! once the degree grows past about 15.

use crate::error::{Error, Result};
use crate::hypergeometric::{gauss_2f1, series_3f2_unit};
use crate::scalar::{log_gamma, pochhammer_real, real, Complex64};
use crate::series::TruncationPolicy;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PolynomialMethod {
    #[default]
    Recurrence,
    Hypergeometric,
}

/// Gegenbauer orders must lie in `(-1/2, ∞) \ {0}`.
pub fn check_gegenbauer_order(mu: f64) -> Result<()> {
    if mu.is_finite() && mu > -0.5 && mu != 0.0 {
        Ok(())
    } else {
        Err(Error::Parameter(format!(
            "Gegenbauer order must lie in (-1/2, inf) without 0, got {mu}"
        )))
    }
}

fn check_jacobi_parameters(alpha: f64, beta: f64) -> Result<()> {
    if alpha.is_finite() && beta.is_finite() && alpha > -1.0 && beta > -1.0 {
        Ok(())
    } else {
        Err(Error::Parameter(format!(
            "Jacobi parameters must exceed -1, got alpha = {alpha}, beta = {beta}"
        )))
    }
}

fn terminating_policy(n: u64) -> TruncationPolicy {
    TruncationPolicy::default().with_max_terms((n as usize + 1).max(500))
}

/// Successive values `C_0^μ(x), C_1^μ(x), ...`.
///
/// At `x = ±1` the values come from `C_n^μ(±1) = (±1)^n (2μ)_n / n!`.
#[derive(Debug, Clone)]
pub struct GegenbauerSequence {
    mu: f64,
    x: Complex64,
    endpoint: Option<f64>,
    n: u64,
    prev: Complex64,
    curr: Complex64,
}

impl GegenbauerSequence {
    pub fn new(mu: f64, x: Complex64) -> Result<Self> {
        check_gegenbauer_order(mu)?;
        let endpoint = (x.im == 0.0 && x.re.abs() == 1.0).then_some(x.re);
        Ok(Self {
            mu,
            x,
            endpoint,
            n: 0,
            prev: real(0.0),
            curr: real(1.0),
        })
    }
}

impl Iterator for GegenbauerSequence {
    type Item = Complex64;

    fn next(&mut self) -> Option<Complex64> {
        let out = self.curr;
        let n = (self.n + 1) as f64;
        let next = match self.endpoint {
            Some(sign) => self.curr * sign * (2.0 * self.mu + n - 1.0) / n,
            None if self.n == 0 => self.x * (2.0 * self.mu),
            None => (self.x * self.curr * (2.0 * (n + self.mu - 1.0)) - self.prev * (n + 2.0 * self.mu - 2.0)) / n,
        };
        self.prev = self.curr;
        self.curr = next;
        self.n += 1;
        Some(out)
    }
}

/// Successive Chebyshev polynomials of the first kind `T_0(x), T_1(x), ...`.
#[derive(Debug, Clone)]
pub struct ChebyshevTSequence {
    x: Complex64,
    prev: Complex64,
    curr: Complex64,
    started: bool,
}

impl ChebyshevTSequence {
    pub fn new(x: Complex64) -> Self {
        Self {
            x,
            prev: real(1.0),
            curr: real(1.0),
            started: false,
        }
    }
}

impl Iterator for ChebyshevTSequence {
    type Item = Complex64;

    fn next(&mut self) -> Option<Complex64> {
        if !self.started {
            self.started = true;
            self.curr = self.x;
            return Some(real(1.0));
        }
        let out = self.curr;
        let next = 2.0 * self.x * self.curr - self.prev;
        self.prev = self.curr;
        self.curr = next;
        Some(out)
    }
}

/// Gegenbauer polynomial `C_n^μ(x)`.
pub fn gegenbauer(n: u64, mu: f64, x: Complex64) -> Result<Complex64> {
    gegenbauer_with(n, mu, x, PolynomialMethod::Recurrence)
}

pub fn gegenbauer_with(n: u64, mu: f64, x: Complex64, method: PolynomialMethod) -> Result<Complex64> {
    check_gegenbauer_order(mu)?;
    match method {
        PolynomialMethod::Recurrence => Ok(GegenbauerSequence::new(mu, x)?
            .nth(n as usize)
            .expect("sequence is infinite")),
        PolynomialMethod::Hypergeometric => {
            let nf = n as f64;
            let series = gauss_2f1(
                real(-nf),
                real(nf + 2.0 * mu),
                real(mu + 0.5),
                (1.0 - x) / 2.0,
                &terminating_policy(n),
            )?;
            let lead = (1..=n).fold(1.0, |acc, i| acc * (2.0 * mu + i as f64 - 1.0) / i as f64);
            Ok(series.value * lead)
        }
    }
}

/// Jacobi polynomial `P_n^{(α,β)}(x)`.
pub fn jacobi(n: u64, alpha: f64, beta: f64, x: Complex64) -> Result<Complex64> {
    jacobi_with(n, alpha, beta, x, PolynomialMethod::Recurrence)
}

pub fn jacobi_with(n: u64, alpha: f64, beta: f64, x: Complex64, method: PolynomialMethod) -> Result<Complex64> {
    check_jacobi_parameters(alpha, beta)?;
    match method {
        PolynomialMethod::Hypergeometric => {
            let nf = n as f64;
            let series = gauss_2f1(
                real(-nf),
                real(nf + alpha + beta + 1.0),
                real(alpha + 1.0),
                (1.0 - x) / 2.0,
                &terminating_policy(n),
            )?;
            let lead = (1..=n).fold(1.0, |acc, i| acc * (alpha + i as f64) / i as f64);
            Ok(series.value * lead)
        }
        PolynomialMethod::Recurrence => {
            if n == 0 {
                return Ok(real(1.0));
            }
            let ab = alpha + beta;
            let mut prev = real(1.0);
            let mut curr = (alpha + 1.0) + (ab + 2.0) * (x - 1.0) / 2.0;
            for m in 2..=n {
                let m = m as f64;
                let s = 2.0 * m + ab;
                let lead = 2.0 * m * (m + ab) * (s - 2.0);
                let linear = (s - 1.0) * (x * (s * (s - 2.0)) + (alpha * alpha - beta * beta));
                let back = 2.0 * (m + alpha - 1.0) * (m + beta - 1.0) * s;
                let next = (linear * curr - prev * back) / lead;
                prev = curr;
                curr = next;
            }
            Ok(curr)
        }
    }
}

/// Legendre polynomial `P_n(x) = C_n^{1/2}(x)`.
pub fn legendre_p(n: u64, x: Complex64) -> Complex64 {
    gegenbauer(n, 0.5, x).expect("1/2 is an admissible order")
}

pub fn legendre_p_with(n: u64, x: Complex64, method: PolynomialMethod) -> Result<Complex64> {
    match method {
        PolynomialMethod::Recurrence => Ok(legendre_p(n, x)),
        PolynomialMethod::Hypergeometric => {
            let nf = n as f64;
            let series = gauss_2f1(
                real(-nf),
                real(nf + 1.0),
                real(1.0),
                (1.0 - x) / 2.0,
                &terminating_policy(n),
            )?;
            Ok(series.value)
        }
    }
}

/// Chebyshev polynomial of the first kind `T_n(x)`.
pub fn chebyshev_t(n: u64, x: Complex64) -> Complex64 {
    ChebyshevTSequence::new(x)
        .nth(n as usize)
        .expect("sequence is infinite")
}

pub fn chebyshev_t_with(n: u64, x: Complex64, method: PolynomialMethod) -> Result<Complex64> {
    match method {
        PolynomialMethod::Recurrence => Ok(chebyshev_t(n, x)),
        PolynomialMethod::Hypergeometric => {
            let nf = n as f64;
            let series = gauss_2f1(real(-nf), real(nf), real(0.5), (1.0 - x) / 2.0, &terminating_policy(n))?;
            Ok(series.value)
        }
    }
}

/// Chebyshev polynomial of the second kind `U_n(x) = C_n^1(x)`.
pub fn chebyshev_u(n: u64, x: Complex64) -> Complex64 {
    gegenbauer(n, 1.0, x).expect("1 is an admissible order")
}

fn ln_pochhammer(a: f64, m: u64) -> Result<Complex64> {
    Ok(log_gamma(real(a + m as f64))? - log_gamma(real(a))?)
}

/// How the terminating ₃F₂ in the connection coefficient is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ConnectionMethod {
    /// Watson's closed form. With `n - k = 2j` the ₃F₂ equals
    /// `(1/2)_j (ν-μ)_j / ((ν+k+1/2)_j (μ+k+1)_j)`; it vanishes for odd `n - k`.
    #[default]
    Watson,
    /// Direct summation of the ₃F₂ series, which cancels badly past `n ≈ 8`.
    Series,
}

/// Coefficient of `C_k^μ` when `C_n^ν` is expanded over Gegenbauer
/// polynomials of order `μ`.
pub fn connection_coefficient(n: u64, k: u64, nu: f64, mu: f64) -> Result<f64> {
    connection_coefficient_with(n, k, nu, mu, ConnectionMethod::Watson)
}

pub fn connection_coefficient_with(n: u64, k: u64, nu: f64, mu: f64, method: ConnectionMethod) -> Result<f64> {
    check_gegenbauer_order(nu)?;
    check_gegenbauer_order(mu)?;
    if k > n {
        return Ok(0.0);
    }
    let (nf, kf) = (n as f64, k as f64);
    let hyper = match method {
        ConnectionMethod::Watson => {
            if (n - k) % 2 == 1 {
                return Ok(0.0);
            }
            let j = (n - k) / 2;
            pochhammer_real(0.5, j) * pochhammer_real(nu - mu, j)
                / (pochhammer_real(nu + kf + 0.5, j) * pochhammer_real(mu + kf + 1.0, j))
        }
        ConnectionMethod::Series => {
            series_3f2_unit(
                real(kf - nf),
                real(nf + kf + 2.0 * nu),
                real(mu + kf + 0.5),
                real(nu + kf + 0.5),
                real(2.0 * mu + 2.0 * kf + 1.0),
                &terminating_policy(n),
            )?
            .value
            .re
        }
    };
    if hyper == 0.0 {
        return Ok(0.0);
    }
    let log_prefactor = ln_pochhammer(2.0 * nu, n)? - ln_pochhammer(nu + 0.5, n)?
        + ln_pochhammer(nu + kf + 0.5, n - k)?
        + ln_pochhammer(2.0 * nu + nf, k)?
        + ln_pochhammer(mu + 0.5, k)?
        - log_gamma(real(nf - kf + 1.0))?
        - ln_pochhammer(2.0 * mu, k)?
        + log_gamma(real(2.0 * mu + kf))?
        - log_gamma(real(2.0 * mu + 2.0 * kf))?;
    Ok(log_prefactor.exp().re * hyper)
}

/// `Σ_k connection_coefficient(n, k, ν, μ) C_k^μ(x)`, which reproduces `C_n^ν(x)`.
pub fn expand_in_lower_order(n: u64, nu: f64, mu: f64, x: Complex64) -> Result<Complex64> {
    let basis = GegenbauerSequence::new(mu, x)?;
    let mut total = real(0.0);
    for (k, c_k) in (0..=n).zip(basis) {
        total += c_k * connection_coefficient(n, k, nu, mu)?;
    }
    Ok(total)
}

/// `(2μ)_n / n!`, the value of `C_n^μ(1)`.
pub fn gegenbauer_at_one(n: u64, mu: f64) -> f64 {
    pochhammer_real(2.0 * mu, n) / crate::scalar::factorial(n)
}
