//! Dispatch of `eval` functions and `expand` identities onto the core crate.

use clap::ValueEnum;
use gegen_core::expansions::{
    dim_specialized_direct, evaluate_cauchy_u_elementary, evaluate_chebyshev_t_form, evaluate_chebyshev_u_form,
    evaluate_dim_specialized, evaluate_durand_cauchy, evaluate_legendre_form, evaluate_polynomial_form,
    evaluate_theorem1, ExpansionSpec,
};
use gegen_core::hypergeometric::{gauss_2f1, watson_sum};
use gegen_core::legendre_q::{legendre_q, LegendreQParams};
use gegen_core::orthopoly::{chebyshev_t, chebyshev_u, gegenbauer, jacobi, legendre_p};
use gegen_core::polyharmonic::{
    beta_coefficient, degeneracy, evaluate_corollary, evaluate_d2_fourier, fundamental_solution, laplace_expansion_3d,
    EuclideanPointPair, HypersphericalGeometry, PolyharmonicParams,
};
use gegen_core::scalar::{complex_power, real};
use gegen_core::{Complex64, SeriesEvaluation, TruncationPolicy};

use crate::error::CliError;
use crate::params::Params;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum EvalFunction {
    /// C_n^mu(x): --n --mu --x
    Gegenbauer,
    /// P_n^(alpha,beta)(x): --n --alpha --beta --x
    Jacobi,
    /// P_n(x): --n --x
    LegendreP,
    /// T_n(x): --n --x
    ChebyshevT,
    /// U_n(x): --n --x
    ChebyshevU,
    /// Q_nu^order(z): --nu --order --z
    LegendreQ,
    /// 2F1(a, b; c; z): --a --b --c --z
    Gauss2f1,
    /// Watson's closed form for 3F2(a, b, c; (a+b+1)/2, 2c; 1): --a --b --c
    WatsonSum,
    /// Fundamental solution of (-Laplacian)^k: --d --k --distance
    FundamentalSolution,
    /// Dimension of degree-n hyperspherical harmonics: --n --d
    Degeneracy,
    /// Logarithmic-kernel coefficient beta_{p,d}: --p --d
    Beta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum ExpandIdentity {
    /// (z-x)^(-nu) in C_n^mu(x): --nu --mu --x and --z or --rho
    Theorem1,
    /// (z-x)^q as a finite Legendre sum: --q --z --x
    Polynomial,
    /// ||x-x'||^nu on hyperspheres: --d --nu --r --rp --cosgamma
    Corollary,
    /// (z-x)^(-nu) in Legendre polynomials: --nu --z --x
    Legendre,
    /// (z-x)^(-nu) in Chebyshev U: --nu --z --x
    ChebyshevU,
    /// (z-x)^(-nu) in Chebyshev T: --nu --z --x
    ChebyshevT,
    /// 1/(z-x) in Chebyshev U with elementary coefficients: --z --x
    Elementary,
    /// 1/(z-x) in C_n^mu(x): --mu --z --x
    Durand,
    /// (1+rho^2-2 rho x)^(-nu) in C_n^(d/2-1)(x): --d --nu --rho --x
    Dim,
    /// 1/||x-x'|| in three dimensions: --r --rp --cosgamma
    Laplace,
    /// ||x-x'||^nu in the plane as a Fourier series: --nu --r --rp --dphi
    D2,
}

impl EvalFunction {
    pub fn name(self) -> String {
        self.to_possible_value()
            .map(|v| v.get_name().to_string())
            .unwrap_or_default()
    }
}

impl ExpandIdentity {
    pub fn name(self) -> String {
        self.to_possible_value()
            .map(|v| v.get_name().to_string())
            .unwrap_or_default()
    }
}

/// A computed value with its optional independent comparator.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub value: SeriesEvaluation,
    pub comparator: Option<Complex64>,
    /// Exact integer or rational form, when the result has one.
    pub exact: Option<String>,
}

impl Outcome {
    fn plain(value: SeriesEvaluation) -> Self {
        Self {
            value,
            comparator: None,
            exact: None,
        }
    }

    fn compared(value: SeriesEvaluation, comparator: Complex64) -> Self {
        Self {
            value,
            comparator: Some(comparator),
            exact: None,
        }
    }

    pub fn abs_error(&self) -> Option<f64> {
        self.comparator.map(|c| (self.value.value - c).norm())
    }

    pub fn rel_error(&self) -> Option<f64> {
        self.comparator.map(|c| {
            let abs = (self.value.value - c).norm();
            if c.norm() > 0.0 {
                abs / c.norm()
            } else {
                abs
            }
        })
    }
}

fn finite_sum(n: u64, value: Complex64) -> SeriesEvaluation {
    SeriesEvaluation::exact(value, n as usize + 1)
}

fn closed_form(value: f64) -> SeriesEvaluation {
    SeriesEvaluation::exact(real(value), 0)
}

/// Two points on the first coordinate axis, `distance` apart.
fn axis_pair(d: u32, distance: f64) -> Result<EuclideanPointPair, CliError> {
    if d == 0 {
        return Err(CliError::Usage("--d must be at least 1".into()));
    }
    let mut x = vec![0.0; d as usize];
    x[0] = distance;
    Ok(EuclideanPointPair::new(x, vec![0.0; d as usize])?)
}

pub fn eval(function: EvalFunction, p: &Params, policy: &TruncationPolicy) -> Result<Outcome, CliError> {
    let outcome = match function {
        EvalFunction::Gegenbauer => {
            let n = p.natural("n")?;
            Outcome::plain(finite_sum(n, gegenbauer(n, p.real("mu")?, p.complex("x")?)?))
        }
        EvalFunction::Jacobi => {
            let n = p.natural("n")?;
            let value = jacobi(n, p.real("alpha")?, p.real("beta")?, p.complex("x")?)?;
            Outcome::plain(finite_sum(n, value))
        }
        EvalFunction::LegendreP => {
            let n = p.natural("n")?;
            Outcome::plain(finite_sum(n, legendre_p(n, p.complex("x")?)))
        }
        EvalFunction::ChebyshevT => {
            let n = p.natural("n")?;
            Outcome::plain(finite_sum(n, chebyshev_t(n, p.complex("x")?)))
        }
        EvalFunction::ChebyshevU => {
            let n = p.natural("n")?;
            Outcome::plain(finite_sum(n, chebyshev_u(n, p.complex("x")?)))
        }
        EvalFunction::LegendreQ => {
            let params = LegendreQParams::new(p.complex("nu")?, p.complex("order")?, p.complex("z")?);
            Outcome::plain(legendre_q(&params, policy)?)
        }
        EvalFunction::Gauss2f1 => Outcome::plain(gauss_2f1(
            p.complex("a")?,
            p.complex("b")?,
            p.complex("c")?,
            p.complex("z")?,
            policy,
        )?),
        EvalFunction::WatsonSum => {
            let value = watson_sum(p.complex("a")?, p.complex("b")?, p.complex("c")?)?;
            Outcome::plain(SeriesEvaluation::exact(value, 0))
        }
        EvalFunction::FundamentalSolution => {
            let d = p.small_natural("d")?;
            let params = PolyharmonicParams::new(d, p.small_natural("k")?)?;
            let pair = axis_pair(d, p.real("distance")?)?;
            Outcome::plain(closed_form(fundamental_solution(&params, &pair)?))
        }
        EvalFunction::Degeneracy => {
            let count = degeneracy(p.natural("n")?, p.small_natural("d")?)?;
            Outcome {
                value: closed_form(count as f64),
                comparator: None,
                exact: Some(count.to_string()),
            }
        }
        EvalFunction::Beta => {
            let beta = beta_coefficient(p.natural("p")?, p.small_natural("d")?)?;
            Outcome {
                value: closed_form(beta.to_f64()),
                comparator: None,
                exact: Some(beta.to_string()),
            }
        }
    };
    Ok(outcome)
}

fn cauchy_power(z: Complex64, x: Complex64, nu: Complex64) -> Result<Complex64, CliError> {
    Ok(complex_power(z - x, -nu)?)
}

pub fn expand(identity: ExpandIdentity, p: &Params, policy: &TruncationPolicy) -> Result<Outcome, CliError> {
    let outcome = match identity {
        ExpandIdentity::Theorem1 => {
            let (nu, mu, x) = (p.complex("nu")?, p.real("mu")?, p.complex("x")?);
            let spec = match (p.has("z"), p.has("rho")) {
                (true, false) => ExpansionSpec::z_form(nu, mu, p.complex("z")?, x),
                (false, true) => ExpansionSpec::rho_form(nu, mu, p.complex("rho")?, x),
                _ => return Err(CliError::Usage("give exactly one of --z and --rho".into())),
            };
            spec.validate()?;
            let series = evaluate_theorem1(&spec, policy)?;
            Outcome::compared(series, spec.direct_value()?)
        }
        ExpandIdentity::Polynomial => {
            let q = p.natural("q")?;
            let (z, x) = (p.complex("z")?, p.complex("x")?);
            let exponent = u32::try_from(q).map_err(|_| CliError::Usage("--q is too large".into()))?;
            let value = evaluate_polynomial_form(q, z, x)?;
            Outcome::compared(finite_sum(q, value), (z - x).powu(exponent))
        }
        ExpandIdentity::Corollary => {
            let geom =
                HypersphericalGeometry::new(p.real("r")?, p.real("rp")?, p.real("cosgamma")?, p.small_natural("d")?)?;
            let nu = p.complex("nu")?;
            let series = evaluate_corollary(&geom, nu, policy)?;
            Outcome::compared(series, complex_power(real(geom.distance()), nu)?)
        }
        ExpandIdentity::Legendre => {
            let (nu, z, x) = (p.complex("nu")?, p.complex("z")?, p.complex("x")?);
            Outcome::compared(evaluate_legendre_form(nu, z, x, policy)?, cauchy_power(z, x, nu)?)
        }
        ExpandIdentity::ChebyshevU => {
            let (nu, z, x) = (p.complex("nu")?, p.complex("z")?, p.complex("x")?);
            Outcome::compared(evaluate_chebyshev_u_form(nu, z, x, policy)?, cauchy_power(z, x, nu)?)
        }
        ExpandIdentity::ChebyshevT => {
            let (nu, z, x) = (p.complex("nu")?, p.complex("z")?, p.complex("x")?);
            Outcome::compared(evaluate_chebyshev_t_form(nu, z, x, policy)?, cauchy_power(z, x, nu)?)
        }
        ExpandIdentity::Elementary => {
            let (z, x) = (p.complex("z")?, p.complex("x")?);
            Outcome::compared(
                evaluate_cauchy_u_elementary(z, x, policy)?,
                cauchy_power(z, x, real(1.0))?,
            )
        }
        ExpandIdentity::Durand => {
            let (mu, z, x) = (p.real("mu")?, p.complex("z")?, p.complex("x")?);
            Outcome::compared(
                evaluate_durand_cauchy(mu, z, x, policy)?,
                cauchy_power(z, x, real(1.0))?,
            )
        }
        ExpandIdentity::Dim => {
            let d = p.small_natural("d")?;
            let (nu, rho, x) = (p.complex("nu")?, p.complex("rho")?, p.complex("x")?);
            let series = evaluate_dim_specialized(d, nu, rho, x, policy)?;
            Outcome::compared(series, dim_specialized_direct(d, nu, rho, x)?)
        }
        ExpandIdentity::Laplace => {
            let (r, rp, cos_gamma) = (p.real("r")?, p.real("rp")?, p.real("cosgamma")?);
            let geom = HypersphericalGeometry::new(r, rp, cos_gamma, 3)?;
            let series = laplace_expansion_3d(r, rp, cos_gamma, policy)?;
            Outcome::compared(series, real(1.0 / geom.distance()))
        }
        ExpandIdentity::D2 => {
            let (nu, r, rp, dphi) = (p.complex("nu")?, p.real("r")?, p.real("rp")?, p.real("dphi")?);
            let geom = HypersphericalGeometry::new(r, rp, dphi.cos(), 2)?;
            let series = evaluate_d2_fourier(nu, r, rp, dphi, policy)?;
            Outcome::compared(series, complex_power(real(geom.distance()), nu)?)
        }
    };
    Ok(outcome)
}
