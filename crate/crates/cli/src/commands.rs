//! Command-line grammar and dispatch.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use midconv::datum::{canonical_datum, is_stable, phi};
use midconv::exactalg::GaussianRational;
use midconv::functors::{dr_middle_convolution, hd, mc, okubo_to_pair};
use midconv::normalform::{
    compute_normal_form, hat_kernel_dim, select_alpha, stabilizer_dim, KernelMode, NormalForm,
    StabilizerMode,
};
use midconv::rigidity::{katz_reduce, katz_step, orbit_dim, rigidity_index};
use midconv::systems::{
    add_scalar, equivalent, is_irreducible, PrincipalPart, ScalarSystem, System,
};
use serde_json::{json, Value};
use thiserror::Error;

use crate::check::run_checks;
use crate::document::{
    datum_value, matrix_value, parse_any, parse_document, parse_okubo, parse_scalar_arg,
    scalar_value, serialize_document, system_value, to_line, AnyDocument, DocumentError,
    SystemDocument,
};

#[derive(Debug, Parser)]
#[command(
    name = "midconv",
    version,
    about = "Exact middle convolution and Harnad duality for linear ODE systems"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit the canonical datum of a system.
    Canon { input: PathBuf },
    /// Turn a datum document back into a system.
    Phi { input: PathBuf },
    /// Harnad dual.
    Hd { input: PathBuf },
    /// Add a rank-one system `alpha` as a scalar.
    Add {
        #[arg(long)]
        alpha: PathBuf,
        input: PathBuf,
    },
    /// Middle convolution with parameter `alpha`.
    Mc {
        #[arg(long)]
        alpha: PathBuf,
        input: PathBuf,
    },
    /// Classical middle convolution of a Fuchsian system.
    Dr {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_scalar_arg)]
        lambda: GaussianRational,
        input: PathBuf,
    },
    /// Stability of a datum (or of the canonical datum of a system).
    Stable { input: PathBuf },
    /// Irreducibility of a system.
    Irred { input: PathBuf },
    /// Search for an invertible `f` with `f A = B f`.
    Equiv { a: PathBuf, b: PathBuf },
    /// Normal forms at one pole or at all poles.
    NormalForm {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_scalar_arg)]
        point: Option<GaussianRational>,
        input: PathBuf,
    },
    /// Stabilizer dimension of the principal part at a pole.
    StabDim {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_scalar_arg)]
        point: GaussianRational,
        input: PathBuf,
    },
    /// Scalar principal part maximizing the kernel dimension at a pole.
    SelectAlpha {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_scalar_arg)]
        point: GaussianRational,
        input: PathBuf,
    },
    /// Orbit dimension of the local data.
    OrbitDim { input: PathBuf },
    /// Rigidity index of an irreducible system without singularity at infinity.
    Rigidity { input: PathBuf },
    /// One reduction step `add_alpha . mc . add_alpha`.
    KatzStep {
        #[arg(long)]
        alpha: PathBuf,
        input: PathBuf,
    },
    /// Reduce a rigid system to rank one.
    KatzReduce { input: PathBuf },
    /// Convert an Okubo document `(z - T) u' = R u` into a system.
    Okubo { input: PathBuf },
    /// Run the invariant suite on the input with seeded random data.
    Check {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        trials: usize,
        input: PathBuf,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Document { path: String, source: DocumentError },
    #[error(transparent)]
    Domain(#[from] midconv::Error),
    #[error("{0}")]
    Input(String),
    #[error("{0} invariant check(s) failed")]
    CheckFailed(usize, String),
}

impl CliError {
    pub fn name(&self) -> &'static str {
        match self {
            CliError::Io { .. } => "IoError",
            CliError::Document { source, .. } => source.name(),
            CliError::Domain(e) => e.name(),
            CliError::Input(_) => "InputError",
            CliError::CheckFailed(..) => "CheckFailed",
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn with_path<T>(path: &Path, r: Result<T, DocumentError>) -> Result<T, CliError> {
    r.map_err(|source| CliError::Document {
        path: path.display().to_string(),
        source,
    })
}

fn load_system(path: &Path) -> Result<System, CliError> {
    Ok(with_path(path, parse_document(&read(path)?))?.system)
}

fn load_scalar(path: &Path) -> Result<ScalarSystem, CliError> {
    Ok(ScalarSystem::new(load_system(path)?)?)
}

fn part_at(sys: &System, t: &GaussianRational) -> Result<PrincipalPart, CliError> {
    sys.part_at(t)
        .cloned()
        .ok_or_else(|| CliError::Input(format!("the system has no pole at {t}")))
}

fn report(command: &str, result: Value, diagnostics: Vec<String>) -> String {
    to_line(&json!({ "command": command, "result": result, "diagnostics": diagnostics }))
}

fn system_output(s: &System) -> String {
    serialize_document(&SystemDocument::new(s.clone()))
}

pub fn normal_form_value(nf: &NormalForm) -> Value {
    json!({
        "point": scalar_value(&nf.point),
        "spectra": nf.spectra.iter().map(|s| json!({
            "lambda": s.lambda.iter().map(scalar_value).collect::<Vec<_>>(),
            "dim": s.dim,
            "gamma": matrix_value(&s.gamma),
        })).collect::<Vec<_>>(),
    })
}

/// Runs one command and returns what it prints on standard output.
pub fn execute(command: &Command) -> Result<String, CliError> {
    Ok(match command {
        Command::Canon { input } => to_line(&datum_value(&canonical_datum(&load_system(input)?))),
        Command::Phi { input } => {
            let datum = with_path(input, crate::document::parse_datum(&read(input)?))?;
            system_output(&phi(&datum))
        }
        Command::Hd { input } => system_output(&hd(&load_system(input)?)?),
        Command::Add { alpha, input } => {
            system_output(&add_scalar(&load_system(input)?, &load_scalar(alpha)?))
        }
        Command::Mc { alpha, input } => {
            system_output(&mc(&load_system(input)?, &load_scalar(alpha)?)?)
        }
        Command::Dr { lambda, input } => {
            system_output(&dr_middle_convolution(&load_system(input)?, lambda)?)
        }
        Command::Stable { input } => {
            let datum = match with_path(input, parse_any(&read(input)?))? {
                AnyDocument::Datum(d) => d,
                AnyDocument::System(doc) => canonical_datum(&doc.system),
            };
            report("stable", json!(is_stable(&datum)?), vec![])
        }
        Command::Irred { input } => {
            report("irred", json!(is_irreducible(&load_system(input)?)), vec![])
        }
        Command::Equiv { a, b } => {
            let witness = equivalent(&load_system(a)?, &load_system(b)?)?;
            let result = json!({
                "equivalent": witness.is_some(),
                "witness": witness.as_ref().map(matrix_value),
            });
            report("equiv", result, vec![])
        }
        Command::NormalForm { point, input } => {
            let sys = load_system(input)?;
            let parts = match point {
                Some(t) => vec![part_at(&sys, t)?],
                None => sys.parts.clone(),
            };
            let forms = parts
                .iter()
                .map(|p| Ok(normal_form_value(&compute_normal_form(p)?)))
                .collect::<Result<Vec<_>, CliError>>()?;
            report("normal-form", json!(forms), vec![])
        }
        Command::StabDim { point, input } => {
            let part = part_at(&load_system(input)?, point)?;
            let linear = stabilizer_dim(&part, StabilizerMode::Linear)?;
            let mut diagnostics = Vec::new();
            let formula = match stabilizer_dim(&part, StabilizerMode::Formula) {
                Ok(v) => {
                    if v != linear {
                        diagnostics.push(format!("formula mode gives {v}, linear mode {linear}"));
                    }
                    Some(v)
                }
                Err(e) => {
                    diagnostics.push(format!("formula mode unavailable: {}", e.name()));
                    None
                }
            };
            report(
                "stab-dim",
                json!({ "linear": linear, "formula": formula }),
                diagnostics,
            )
        }
        Command::SelectAlpha { point, input } => {
            let part = part_at(&load_system(input)?, point)?;
            let alpha = select_alpha(&part)?;
            let coefficients = alpha.scalar_coefficients();
            let kernel = hat_kernel_dim(&part, &coefficients, KernelMode::Direct)?;
            let result = json!({
                "point": scalar_value(point),
                "coefficients": coefficients.iter().map(scalar_value).collect::<Vec<_>>(),
                "kernel_dim": kernel,
            });
            report("select-alpha", result, vec![])
        }
        Command::OrbitDim { input } => {
            report("orbit-dim", json!(orbit_dim(&load_system(input)?)?), vec![])
        }
        Command::Rigidity { input } => report(
            "rigidity",
            json!(rigidity_index(&load_system(input)?)?),
            vec![],
        ),
        Command::KatzStep { alpha, input } => {
            system_output(&katz_step(&load_system(input)?, &load_scalar(alpha)?)?)
        }
        Command::KatzReduce { input } => {
            let trace = katz_reduce(&load_system(input)?)?;
            let steps: Vec<Value> = trace
                .steps
                .iter()
                .map(|s| {
                    json!({
                        "alpha": system_value(s.alpha.system()),
                        "lambda": scalar_value(&s.lambda),
                        "rank_before": s.rank_before,
                        "rank_after": s.rank_after,
                        "result": system_value(&s.result),
                    })
                })
                .collect();
            report("katz-reduce", json!({ "steps": steps }), vec![])
        }
        Command::Okubo { input } => {
            let triple = with_path(input, parse_okubo(&read(input)?))?;
            system_output(&okubo_to_pair(&triple)?)
        }
        Command::Check {
            seed,
            trials,
            input,
        } => {
            let sys = load_system(input)?;
            let outcomes = run_checks(&sys, *seed, *trials);
            let failed = outcomes.iter().filter(|o| o.status == "fail").count();
            let result = json!({
                "seed": seed,
                "trials": trials,
                "checks": outcomes.iter().map(|o| json!({ "name": o.name, "status": o.status, "detail": o.detail })).collect::<Vec<_>>(),
            });
            let text = report("check", result, vec![]);
            if failed > 0 {
                return Err(CliError::CheckFailed(failed, text));
            }
            text
        }
    })
}
