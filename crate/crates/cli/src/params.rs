//! Command-line parameter bundle and value parsing.

use clap::Args;
use gegen_core::scalar::c64;
use gegen_core::Complex64;

use crate::error::CliError;

macro_rules! param_bundle {
    ($($field:ident => $help:literal,)*) => {
        /// Every named parameter accepted by `eval`, `expand` and `sweep`.
        /// Each command reads the subset it needs and rejects missing ones.
        #[derive(Debug, Clone, Default, Args)]
        pub struct Params {
            $(
                #[arg(long, allow_hyphen_values = true, value_name = "VALUE", help = $help)]
                pub $field: Option<String>,
            )*
        }

        impl Params {
            /// The parameters that were given, in declaration order.
            pub fn entries(&self) -> Vec<(&'static str, &str)> {
                let mut out = Vec::new();
                $(
                    if let Some(v) = &self.$field {
                        out.push((stringify!($field), v.as_str()));
                    }
                )*
                out
            }

            pub fn set(&mut self, name: &str, value: String) -> Result<(), CliError> {
                match name {
                    $(stringify!($field) => self.$field = Some(value),)*
                    other => return Err(CliError::Usage(format!("unknown parameter '{other}'"))),
                }
                Ok(())
            }

            fn raw(&self, name: &str) -> Option<&str> {
                match name {
                    $(stringify!($field) => self.$field.as_deref(),)*
                    _ => None,
                }
            }
        }
    };
}

param_bundle! {
    n => "Degree or summation index (non-negative integer)",
    k => "Polyharmonic power or secondary index (integer)",
    p => "Index of the beta coefficient (non-negative integer)",
    q => "Power in the polynomial expansion (non-negative integer)",
    d => "Dimension (integer)",
    mu => "Gegenbauer order mu (real)",
    nu => "Exponent or order nu (complex, a+bi)",
    alpha => "Jacobi parameter alpha (real)",
    beta => "Jacobi parameter beta (real)",
    order => "Order of the Legendre function (complex)",
    x => "Polynomial argument (complex)",
    z => "Singularity or function argument (complex)",
    rho => "Expansion variable rho (complex)",
    a => "First hypergeometric parameter (complex)",
    b => "Second hypergeometric parameter (complex)",
    c => "Third hypergeometric parameter (complex)",
    r => "First radius (real)",
    rp => "Second radius (real)",
    cosgamma => "Cosine of the separation angle (real)",
    dphi => "Azimuthal separation in radians (real)",
    distance => "Distance between the two points (real)",
}

/// Names of the parameters that hold integers.
pub const INTEGER_PARAMS: [&str; 5] = ["n", "k", "p", "q", "d"];

impl Params {
    fn required(&self, name: &str) -> Result<&str, CliError> {
        self.raw(name)
            .ok_or_else(|| CliError::Usage(format!("missing required parameter --{name}")))
    }

    pub fn has(&self, name: &str) -> bool {
        self.raw(name).is_some()
    }

    pub fn real(&self, name: &str) -> Result<f64, CliError> {
        parse_real(self.required(name)?).map_err(|e| CliError::Usage(format!("--{name}: {e}")))
    }

    pub fn complex(&self, name: &str) -> Result<Complex64, CliError> {
        parse_complex(self.required(name)?).map_err(|e| CliError::Usage(format!("--{name}: {e}")))
    }

    pub fn natural(&self, name: &str) -> Result<u64, CliError> {
        let raw = self.required(name)?;
        raw.parse::<u64>()
            .map_err(|_| CliError::Usage(format!("--{name}: expected a non-negative integer, got '{raw}'")))
    }

    pub fn small_natural(&self, name: &str) -> Result<u32, CliError> {
        let value = self.natural(name)?;
        u32::try_from(value).map_err(|_| CliError::Usage(format!("--{name}: {value} is too large")))
    }
}

pub fn parse_real(s: &str) -> Result<f64, String> {
    let value: f64 = s.parse().map_err(|_| format!("expected a real number, got '{s}'"))?;
    if value.is_finite() {
        Ok(value)
    } else {
        Err(format!("expected a finite number, got '{s}'"))
    }
}

fn parse_imaginary(coefficient: &str) -> Result<f64, String> {
    match coefficient {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        c => parse_real(c),
    }
}

/// Parses `a+bi`, `a-bi`, `bi`, `i` or a bare real, without spaces.
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let bad = || format!("expected a complex number like 1.5-2i, got '{s}'");
    if s.is_empty() || s.chars().any(char::is_whitespace) {
        return Err(bad());
    }
    let Some(body) = s.strip_suffix('i') else {
        return parse_real(s).map(|re| c64(re, 0.0)).map_err(|_| bad());
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| matches!(bytes[i], b'+' | b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    match split {
        Some(i) => {
            let re = parse_real(&body[..i]).map_err(|_| bad())?;
            let im = parse_imaginary(&body[i..]).map_err(|_| bad())?;
            Ok(c64(re, im))
        }
        None => parse_imaginary(body).map(|im| c64(0.0, im)).map_err(|_| bad()),
    }
}
