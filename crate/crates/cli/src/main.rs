//! `gegen`: evaluate Gegenbauer-type functions and expansions, run the
//! verification suites, and sweep parameters for plotting.

mod commands;
mod error;
mod params;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gegen_core::verify::{run_verification, SuiteSelection, VerifyOptions};
use gegen_core::TruncationPolicy;
use rayon::prelude::*;

use crate::commands::{EvalFunction, ExpandIdentity, Outcome};
use crate::error::{CliError, EXIT_NOT_CONVERGED, EXIT_VERIFICATION_FAILED};
use crate::params::{parse_real, Params, INTEGER_PARAMS};
use crate::report::{Format, Record};

/// Environment variable naming a TOML file with default truncation policy fields.
pub const POLICY_ENV: &str = "GEGEN_POLICY";

const DEFAULT_EXPAND_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Parser)]
#[command(
    name = "gegen",
    version,
    about = "Gegenbauer generating-function expansions, Legendre Q functions and polyharmonic kernels",
    after_help = "Complex values are written a+bi or a-bi without spaces; bare reals are accepted.\n\
                  Policy defaults can be read from the TOML file named by GEGEN_POLICY \
                  (keys max_terms, rel_tol, abs_tol, consecutive_small); flags override it.\n\
                  Exit codes: 0 success, 1 verification failure, 2 invalid parameters, \
                  3 non-convergence, 4 point outside the convergence ellipse."
)]
struct Cli {
    #[command(flatten)]
    global: GlobalOptions,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalOptions {
    /// Output format [default: json, or csv for sweep]
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output to this file instead of standard output
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
    /// Maximum number of series terms [default: 500]
    #[arg(long, global = true, value_name = "N")]
    max_terms: Option<usize>,
    /// Relative stopping tolerance [default: 1e-13]
    #[arg(long, global = true, value_name = "TOL")]
    rel_tol: Option<f64>,
    /// Absolute stopping tolerance [default: 1e-300]
    #[arg(long, global = true, value_name = "TOL")]
    abs_tol: Option<f64>,
    /// Successive small terms required before stopping [default: 3]
    #[arg(long, global = true, value_name = "N")]
    consecutive_small: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a special function
    Eval {
        #[arg(value_enum)]
        function: EvalFunction,
        #[command(flatten)]
        params: Params,
    },
    /// Sum a series expansion and compare it with the direct value
    Expand {
        #[arg(value_enum)]
        identity: ExpandIdentity,
        /// Relative error below which the row passes
        #[arg(long, default_value_t = DEFAULT_EXPAND_TOLERANCE)]
        tolerance: f64,
        #[command(flatten)]
        params: Params,
    },
    /// Run a verification suite: theorem1, limits, connection, watson, polyharmonic or all
    Verify {
        suite: String,
        /// Replace every row's built-in tolerance
        #[arg(long)]
        tolerance: Option<f64>,
        /// Seed for the randomized grids
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Evaluate over a range of one parameter
    Sweep {
        #[command(subcommand)]
        target: SweepTarget,
    },
}

#[derive(Debug, Subcommand)]
enum SweepTarget {
    /// Sweep an `eval` function
    Eval {
        #[arg(value_enum)]
        function: EvalFunction,
        #[command(flatten)]
        range: SweepRange,
        #[command(flatten)]
        params: Params,
    },
    /// Sweep an `expand` identity
    Expand {
        #[arg(value_enum)]
        identity: ExpandIdentity,
        /// Relative error below which a row passes
        #[arg(long, default_value_t = DEFAULT_EXPAND_TOLERANCE)]
        tolerance: f64,
        #[command(flatten)]
        range: SweepRange,
        #[command(flatten)]
        params: Params,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Spacing {
    Linear,
    Log,
}

#[derive(Debug, Args)]
struct SweepRange {
    /// Name of the swept parameter
    #[arg(long = "param", value_name = "NAME")]
    swept: String,
    /// First value
    #[arg(long, allow_hyphen_values = true, value_name = "VALUE")]
    from: String,
    /// Last value
    #[arg(long, allow_hyphen_values = true, value_name = "VALUE")]
    to: String,
    /// Number of points, including both ends
    #[arg(long, conflicts_with = "step")]
    points: Option<usize>,
    /// Linear step between points
    #[arg(long, value_name = "H")]
    step: Option<f64>,
    #[arg(long, value_enum, default_value_t = Spacing::Linear)]
    spacing: Spacing,
}

impl SweepRange {
    fn values(&self) -> Result<Vec<f64>, CliError> {
        let usage = |m: String| CliError::Usage(m);
        let from = parse_real(&self.from).map_err(|e| usage(format!("--from: {e}")))?;
        let to = parse_real(&self.to).map_err(|e| usage(format!("--to: {e}")))?;
        let points = match (self.points, self.step) {
            (Some(n), None) => n,
            (None, Some(h)) => {
                if self.spacing == Spacing::Log {
                    return Err(usage("--step applies to linear spacing only; use --points".into()));
                }
                if !(h.is_finite() && h != 0.0 && (to - from) / h >= 0.0) {
                    return Err(usage(format!("--step {h} does not lead from {from} to {to}")));
                }
                ((to - from) / h).round() as usize + 1
            }
            _ => return Err(usage("give exactly one of --points and --step".into())),
        };
        if points == 0 {
            return Err(usage("a sweep needs at least one point".into()));
        }
        let fraction = |i: usize| {
            if points == 1 {
                0.0
            } else {
                i as f64 / (points - 1) as f64
            }
        };
        match self.spacing {
            Spacing::Linear => Ok((0..points).map(|i| from + (to - from) * fraction(i)).collect()),
            Spacing::Log => {
                if !(from > 0.0 && to > 0.0) {
                    return Err(usage("log spacing needs positive end points".into()));
                }
                let (lf, lt) = (from.ln(), to.ln());
                Ok((0..points)
                    .map(|i| match i {
                        0 => from,
                        i if i + 1 == points => to,
                        i => (lf + (lt - lf) * fraction(i)).exp(),
                    })
                    .collect())
            }
        }
    }

    /// Renders a swept value in the form the parameter parser expects.
    fn format_value(&self, v: f64) -> Result<String, CliError> {
        if INTEGER_PARAMS.contains(&self.swept.as_str()) {
            let rounded = v.round();
            if (v - rounded).abs() > 1e-9 {
                return Err(CliError::Usage(format!(
                    "--{} takes integers, sweep produced {v}",
                    self.swept
                )));
            }
            Ok(format!("{}", rounded as i64))
        } else {
            Ok(format!("{v:?}"))
        }
    }
}

fn load_policy(global: &GlobalOptions) -> Result<TruncationPolicy, CliError> {
    let mut policy = match std::env::var_os(POLICY_ENV) {
        Some(path) if !path.is_empty() => {
            let path = Path::new(&path);
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read policy file {}: {e}", path.display())))?;
            toml::from_str::<TruncationPolicy>(&text)
                .map_err(|e| CliError::Usage(format!("invalid policy file {}: {e}", path.display())))?
        }
        _ => TruncationPolicy::default(),
    };
    if let Some(v) = global.max_terms {
        policy.max_terms = v;
    }
    if let Some(v) = global.rel_tol {
        policy.rel_tol = v;
    }
    if let Some(v) = global.abs_tol {
        policy.abs_tol = v;
    }
    if let Some(v) = global.consecutive_small {
        policy.consecutive_small = v;
    }
    policy.validate()?;
    Ok(policy)
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), CliError> {
    match output {
        Some(path) => std::fs::write(path, text)?,
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}

fn owned_params(params: &Params) -> Vec<(String, String)> {
    params
        .entries()
        .into_iter()
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect()
}

fn single(
    command: String,
    params: &Params,
    outcome: Outcome,
    tolerance: Option<f64>,
    global: &GlobalOptions,
) -> Result<ExitCode, CliError> {
    let converged = outcome.value.converged;
    let record = Record {
        params: owned_params(params),
        outcome: Ok(outcome),
        tolerance,
    };
    let text = report::render_records(&command, &[record], global.format.unwrap_or(Format::Json), true)?;
    emit(&text, global.output.as_deref())?;
    if converged {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("series did not converge within the truncation policy");
        Ok(ExitCode::from(EXIT_NOT_CONVERGED))
    }
}

fn sweep(
    command: String,
    range: &SweepRange,
    params: &Params,
    tolerance: Option<f64>,
    global: &GlobalOptions,
    evaluate: impl Fn(&Params) -> Result<Outcome, CliError> + Sync,
) -> Result<ExitCode, CliError> {
    if params.has(&range.swept) {
        return Err(CliError::Usage(format!(
            "--{} is swept and cannot also be fixed",
            range.swept
        )));
    }
    let mut points = Vec::new();
    for v in range.values()? {
        let mut p = params.clone();
        p.set(&range.swept, range.format_value(v)?)?;
        points.push(p);
    }
    let records: Vec<Record> = points
        .par_iter()
        .map(|p| Record {
            params: owned_params(p),
            outcome: evaluate(p).map_err(|e| e.to_string()),
            tolerance,
        })
        .collect();
    let text = report::render_records(&command, &records, global.format.unwrap_or(Format::Csv), false)?;
    emit(&text, global.output.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let policy = load_policy(&cli.global)?;
    let global = &cli.global;
    match &cli.command {
        Command::Eval { function, params } => {
            let outcome = commands::eval(*function, params, &policy)?;
            single(format!("eval {}", function.name()), params, outcome, None, global)
        }
        Command::Expand {
            identity,
            tolerance,
            params,
        } => {
            let outcome = commands::expand(*identity, params, &policy)?;
            single(
                format!("expand {}", identity.name()),
                params,
                outcome,
                Some(*tolerance),
                global,
            )
        }
        Command::Verify { suite, tolerance, seed } => {
            let selection: SuiteSelection = suite.parse()?;
            let options = VerifyOptions {
                tolerance: *tolerance,
                seed: *seed,
                policy,
            };
            let report = run_verification(selection, &options)?;
            let text = report::render_verification(&report, suite, *seed, global.format.unwrap_or(Format::Json))?;
            emit(&text, global.output.as_deref())?;
            eprint!("{}", report::verification_digest(&report));
            if report.all_passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(EXIT_VERIFICATION_FAILED))
            }
        }
        Command::Sweep { target } => match target {
            SweepTarget::Eval {
                function,
                range,
                params,
            } => {
                let name = format!("eval {}", function.name());
                sweep(name, range, params, None, global, |p| {
                    commands::eval(*function, p, &policy)
                })
            }
            SweepTarget::Expand {
                identity,
                tolerance,
                range,
                params,
            } => {
                let name = format!("expand {}", identity.name());
                sweep(name, range, params, Some(*tolerance), global, |p| {
                    commands::expand(*identity, p, &policy)
                })
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn help_documents_policy_defaults() {
        let defaults = TruncationPolicy::default();
        let cmd = Cli::command();
        let help = |id: &str| {
            cmd.get_arguments()
                .find(|a| a.get_id() == id)
                .and_then(|a| a.get_help())
                .map(|h| h.to_string())
                .unwrap()
        };
        assert!(help("max_terms").contains(&format!("[default: {}]", defaults.max_terms)));
        assert!(help("rel_tol").contains(&format!("[default: {:e}]", defaults.rel_tol)));
        assert!(help("abs_tol").contains(&format!("[default: {:e}]", defaults.abs_tol)));
        assert!(help("consecutive_small").contains(&format!("[default: {}]", defaults.consecutive_small)));
    }

    fn range(from: &str, to: &str, points: Option<usize>, step: Option<f64>, spacing: Spacing) -> SweepRange {
        SweepRange {
            swept: "x".into(),
            from: from.into(),
            to: to.into(),
            points,
            step,
            spacing,
        }
    }

    #[test]
    fn sweep_grids() {
        let by_step = range("-0.95", "0.95", None, Some(0.05), Spacing::Linear)
            .values()
            .unwrap();
        assert_eq!(by_step.len(), 39);
        assert_eq!(by_step[0], -0.95);
        assert_eq!(by_step[38], 0.95);
        let log = range("0.01", "100", Some(5), None, Spacing::Log).values().unwrap();
        assert_eq!(log.len(), 5);
        assert!((log[2] - 1.0).abs() < 1e-15);
        assert!(range("0", "1", Some(3), None, Spacing::Log).values().is_err());
        assert!(range("0", "1", None, None, Spacing::Linear).values().is_err());
        assert!(range("0", "1", None, Some(-0.1), Spacing::Linear).values().is_err());
    }
}
