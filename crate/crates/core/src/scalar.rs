//! Scalar kernels: complex log-gamma, Pochhammer symbols, principal-branch
//! powers, harmonic numbers and the Neumann factor.
//!
//! Every complex logarithm in the crate goes through [`principal_ln`], which
//! pins `arg` to `(-π, π]` even for inputs carrying a negative-zero imaginary
//! part.

use std::f64::consts::PI;
use std::fmt;

pub use num_complex::Complex64;

use crate::error::{Error, Result};

/// Relative slack used when deciding that a float "is" an integer.
const INTEGER_SLACK: f64 = 1e-12;

/// `0.5 * ln(2π)`.
pub const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

/// `0.5 * ln(π)`.
pub const HALF_LN_PI: f64 = 0.572_364_942_924_700_1;

// Godfrey's g = 607/128, n = 15 Lanczos coefficients.
const LANCZOS_G: f64 = 607.0 / 128.0;
const LANCZOS_COEFFS: [f64; 15] = [
    0.999_999_999_999_997_1,
    57.156_235_665_862_92,
    -59.597_960_355_475_49,
    14.136_097_974_741_747,
    -0.491_913_816_097_620_2,
    0.339_946_499_848_118_9e-4,
    0.465_236_289_270_485_8e-4,
    -0.983_744_753_048_795_6e-4,
    0.158_088_703_224_912_5e-3,
    -0.210_264_441_724_104_9e-3,
    0.217_439_618_115_212_6e-3,
    -0.164_318_106_536_763_9e-3,
    0.844_182_239_838_527_4e-4,
    -0.261_908_384_015_814_1e-4,
    0.368_991_826_595_316_2e-5,
];

#[inline]
pub fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[inline]
pub fn real(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Returns `Some(m)` when `z` equals `-m` for some `m ∈ ℕ₀`.
pub fn as_nonpositive_integer(z: Complex64) -> Option<u64> {
    let rounded = z.re.round();
    let slack = INTEGER_SLACK * rounded.abs().max(1.0);
    if rounded <= 0.0 && (z.re - rounded).abs() <= slack && z.im.abs() <= slack {
        Some((-rounded) as u64)
    } else {
        None
    }
}

/// Returns `Some(m)` when the real `x` equals the integer `m`.
pub fn as_integer(x: f64) -> Option<i64> {
    let rounded = x.round();
    if (x - rounded).abs() <= INTEGER_SLACK * rounded.abs().max(1.0) {
        Some(rounded as i64)
    } else {
        None
    }
}

/// Principal logarithm with `arg ∈ (-π, π]`.
pub fn principal_ln(z: Complex64) -> Complex64 {
    if z.im == 0.0 {
        if z.re < 0.0 {
            c64((-z.re).ln(), PI)
        } else {
            c64(z.re.ln(), 0.0)
        }
    } else {
        z.ln()
    }
}

/// `exp(iπ t)` for complex `t`, with exact values at integer and half-integer real `t`.
pub fn exp_i_pi(t: Complex64) -> Complex64 {
    let scale = (-PI * t.im).exp();
    let re = t.re;
    let twice = 2.0 * re;
    if twice == twice.round() {
        let quarter = (twice.round() as i64).rem_euclid(4);
        let unit = match quarter {
            0 => c64(1.0, 0.0),
            1 => c64(0.0, 1.0),
            2 => c64(-1.0, 0.0),
            _ => c64(0.0, -1.0),
        };
        return unit * scale;
    }
    let (s, c) = (PI * re).sin_cos();
    c64(c * scale, s * scale)
}

/// Principal-branch `base^exponent = exp(exponent · Ln base)`.
pub fn complex_power(base: Complex64, exponent: Complex64) -> Result<Complex64> {
    if base == Complex64::new(0.0, 0.0) {
        if exponent.re > 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        return Err(Error::Domain(format!(
            "0 raised to exponent {exponent} with non-positive real part"
        )));
    }
    if exponent.im == 0.0 && base.im == 0.0 && base.re > 0.0 {
        return Ok(real(base.re.powf(exponent.re)));
    }
    Ok((exponent * principal_ln(base)).exp())
}

/// Rising factorial `(z)_n = z (z+1) ··· (z+n-1)`.
pub fn pochhammer(z: Complex64, n: u64) -> Complex64 {
    let mut acc = Complex64::new(1.0, 0.0);
    for i in 0..n {
        acc *= z + i as f64;
    }
    acc
}

/// Real rising factorial.
pub fn pochhammer_real(x: f64, n: u64) -> f64 {
    (0..n).fold(1.0, |acc, i| acc * (x + i as f64))
}

fn lanczos_ln_gamma(z: Complex64) -> Complex64 {
    let w = z - 1.0;
    let mut series = real(LANCZOS_COEFFS[0]);
    for (k, &coeff) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        series += coeff / (w + k as f64);
    }
    let t = w + LANCZOS_G + 0.5;
    (w + 0.5) * principal_ln(t) - t + principal_ln(series) + HALF_LN_2PI
}

/// Logarithm of the gamma function.
///
/// Lanczos approximation on `Re z ≥ 1/2`, reflection below. The imaginary part
/// is only meaningful modulo `2π`; `exp(log_gamma(z))` reproduces `Γ(z)`.
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::Domain(format!("log_gamma of non-finite argument {z}")));
    }
    if let Some(m) = as_nonpositive_integer(z) {
        return Err(Error::Pole(format!("gamma function at -{m}")));
    }
    if z.re < 0.5 {
        // Γ(z) Γ(1-z) = π / sin(πz)
        let sine = (z * PI).sin();
        Ok(real(PI.ln()) - principal_ln(sine) - lanczos_ln_gamma(1.0 - z))
    } else {
        Ok(lanczos_ln_gamma(z))
    }
}

pub fn gamma(z: Complex64) -> Result<Complex64> {
    Ok(log_gamma(z)?.exp())
}

/// `1/Γ(z)`, which is entire: zero at the poles of `Γ`.
pub fn recip_gamma(z: Complex64) -> Complex64 {
    match log_gamma(z) {
        Ok(lg) => (-lg).exp(),
        Err(_) => Complex64::new(0.0, 0.0),
    }
}

/// `Γ(m/2)` for integer `m`, by exact recurrence from `Γ(1) = 1`, `Γ(1/2) = √π`.
pub fn gamma_half_integer(twice_arg: i64) -> Result<f64> {
    if twice_arg <= 0 && twice_arg % 2 == 0 {
        return Err(Error::Pole(format!("gamma function at {}", twice_arg / 2)));
    }
    let (mut value, mut arg2) = if twice_arg % 2 == 0 {
        (1.0, 2_i64)
    } else {
        (PI.sqrt(), 1_i64)
    };
    while arg2 < twice_arg {
        value *= arg2 as f64 / 2.0;
        arg2 += 2;
    }
    while arg2 > twice_arg {
        arg2 -= 2;
        value /= arg2 as f64 / 2.0;
    }
    Ok(value)
}

pub fn factorial(n: u64) -> f64 {
    (1..=n).fold(1.0, |acc, i| acc * i as f64)
}

/// Neumann factor `ε_n = 2 - δ_{n,0}`.
pub fn neumann_factor(n: u64) -> u32 {
    if n == 0 {
        1
    } else {
        2
    }
}

/// Exact rational in lowest terms with a positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalValue {
    numerator: i64,
    denominator: i64,
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl RationalValue {
    pub const ZERO: RationalValue = RationalValue {
        numerator: 0,
        denominator: 1,
    };

    pub fn new(numerator: i64, denominator: i64) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::Parameter("zero denominator".into()));
        }
        let g = gcd(numerator, denominator).max(1);
        let sign = if denominator < 0 { -1 } else { 1 };
        let numerator = (numerator / g)
            .checked_mul(sign)
            .ok_or(Error::Overflow("rational normalisation"))?;
        let denominator = (denominator / g)
            .checked_mul(sign)
            .ok_or(Error::Overflow("rational normalisation"))?;
        Ok(Self { numerator, denominator })
    }

    pub fn integer(value: i64) -> Self {
        Self {
            numerator: value,
            denominator: 1,
        }
    }

    pub fn numerator(&self) -> i64 {
        self.numerator
    }

    pub fn denominator(&self) -> i64 {
        self.denominator
    }

    pub fn to_f64(&self) -> f64 {
        self.numerator as f64 / self.denominator as f64
    }

    pub fn checked_add(self, other: Self) -> Result<Self> {
        let g = gcd(self.denominator, other.denominator);
        let lhs_scale = other.denominator / g;
        let rhs_scale = self.denominator / g;
        let overflow = || Error::Overflow("rational addition");
        let numerator = self
            .numerator
            .checked_mul(lhs_scale)
            .and_then(|a| other.numerator.checked_mul(rhs_scale).and_then(|b| a.checked_add(b)))
            .ok_or_else(overflow)?;
        let denominator = self.denominator.checked_mul(lhs_scale).ok_or_else(overflow)?;
        Self::new(numerator, denominator)
    }

    pub fn checked_sub(self, other: Self) -> Result<Self> {
        let negated = RationalValue {
            numerator: other
                .numerator
                .checked_neg()
                .ok_or(Error::Overflow("rational negation"))?,
            denominator: other.denominator,
        };
        self.checked_add(negated)
    }

    /// Halves the value exactly.
    pub fn checked_half(self) -> Result<Self> {
        if self.numerator % 2 == 0 {
            Self::new(self.numerator / 2, self.denominator)
        } else {
            let denominator = self
                .denominator
                .checked_mul(2)
                .ok_or(Error::Overflow("rational halving"))?;
            Self::new(self.numerator, denominator)
        }
    }
}

impl fmt::Display for RationalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator == 1 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, self.denominator)
        }
    }
}

/// Harmonic number `H_j = 1 + 1/2 + ... + 1/j` as an exact rational.
pub fn harmonic_number(j: u64) -> Result<RationalValue> {
    let mut acc = RationalValue::ZERO;
    for i in 1..=j {
        let i = i64::try_from(i).map_err(|_| Error::Overflow("harmonic number"))?;
        acc = acc.checked_add(RationalValue::new(1, i)?)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol * b.norm().max(1e-300)
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(real(3.0), 4), real(360.0));
        assert_eq!(pochhammer(c64(0.3, -2.0), 0), real(1.0));
        assert_eq!(pochhammer(real(-2.0), 3), real(0.0));
    }

    #[test]
    fn log_gamma_examples() {
        assert!(close(log_gamma(real(5.0)).unwrap(), real(24f64.ln()), 1e-14));
        assert!(close(log_gamma(real(0.5)).unwrap(), real(0.5 * PI.ln()), 1e-14));
        // multiprecision: loggamma(2.5+1.5i)
        let expected = c64(-0.227_112_240_793_227_32, 1.171_292_934_664_603);
        assert!(close(log_gamma(c64(2.5, 1.5)).unwrap(), expected, 1e-14));
    }

    #[test]
    fn log_gamma_rejects_poles() {
        for m in 0..5 {
            assert!(matches!(log_gamma(real(-(m as f64))), Err(Error::Pole(_))));
        }
        assert_eq!(recip_gamma(real(-3.0)), real(0.0));
    }

    #[test]
    fn reflection_region() {
        // Γ(-1/2) = -2√π
        let g = gamma(real(-0.5)).unwrap();
        assert!(close(g, real(-2.0 * PI.sqrt()), 1e-14));
        assert!((gamma_half_integer(-1).unwrap() + 2.0 * PI.sqrt()).abs() < 1e-15);
        assert_eq!(gamma_half_integer(10).unwrap(), 24.0);
        assert!(gamma_half_integer(-4).is_err());
    }

    #[test]
    fn harmonic_examples() {
        assert_eq!(harmonic_number(0).unwrap(), RationalValue::ZERO);
        assert_eq!(harmonic_number(3).unwrap(), RationalValue::new(11, 6).unwrap());
        assert_eq!(harmonic_number(6).unwrap(), RationalValue::new(49, 20).unwrap());
    }

    #[test]
    fn harmonic_overflow_is_an_error() {
        assert!(matches!(harmonic_number(200), Err(Error::Overflow(_))));
    }

    #[test]
    fn neumann() {
        assert_eq!(neumann_factor(0), 1);
        assert_eq!(neumann_factor(1), 2);
        assert_eq!(neumann_factor(7), 2);
    }

    #[test]
    fn power_examples() {
        assert!(close(complex_power(real(4.0), real(0.5)).unwrap(), real(2.0), 1e-15));
        assert!(close(
            complex_power(real(-1.0), real(0.5)).unwrap(),
            c64(0.0, 1.0),
            1e-15
        ));
        assert!(close(
            complex_power(c64(-1.0, -0.0), real(0.5)).unwrap(),
            c64(0.0, 1.0),
            1e-15
        ));
        let expected = c64(1.382_006_962_332_578, 0.152_442_779_415_895_18);
        assert!(close(complex_power(real(3.0), c64(0.3, 0.1)).unwrap(), expected, 1e-14));
        assert!(matches!(complex_power(real(0.0), real(-1.0)), Err(Error::Domain(_))));
        assert_eq!(complex_power(real(0.0), real(2.0)).unwrap(), real(0.0));
    }

    #[test]
    fn exp_i_pi_exact_quarters() {
        assert_eq!(exp_i_pi(real(0.5)), c64(0.0, 1.0));
        assert_eq!(exp_i_pi(real(-1.0)), c64(-1.0, 0.0));
        assert!(close(
            exp_i_pi(real(0.3)),
            c64((0.3 * PI).cos(), (0.3 * PI).sin()),
            1e-15
        ));
    }

    #[test]
    fn principal_branch_on_negative_zero() {
        assert_eq!(principal_ln(c64(-2.0, -0.0)).im, PI);
    }
}
