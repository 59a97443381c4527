//! `decostab`: JSON front end to the decorated bundle stability calculus.

mod commands;

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use decostab_core::json::JsonError;
use decostab_core::{Error, DEFAULT_BUDGET};
use serde_json::Value;

#[derive(Debug, Parser)]
#[command(
    name = "decostab",
    version,
    about = "Exact Hilbert–Mumford calculus for decorated vector bundles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Input document; `-` reads standard input.
    #[arg(long, global = true)]
    file: Option<String>,

    /// Representation, overriding the document's `rep` field.
    #[arg(long, global = true)]
    rep: Option<String>,

    /// State subset, overriding the document's `A` field.
    #[arg(long = "A", global = true)]
    a: Option<String>,

    /// Compact output with sorted keys.
    #[arg(long, global = true)]
    canonical: bool,

    /// Maximum number of state subsets enumerated by `k-rho` and `simplify`.
    #[arg(long, global = true, env = "DECOSTAB_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u128,

    /// Exit with status 4 when a stability check fails.
    #[arg(long, global = true)]
    assert_pass: bool,
}

#[derive(Debug, Clone, Copy, Subcommand)]
pub enum Command {
    /// Torus states of `rep` with multiplicities.
    States,
    /// Homogeneity degree of `rep`.
    Degree,
    /// Homogenize `summands` to degree `kappa`.
    Homogenize,
    /// Whether the states of `rep` fit in those of `a`, `b`, `c`.
    EnvelopeCheck,
    /// μ of `gamma` with respect to the states `A`.
    Mu,
    /// Corner coefficients of `gamma`.
    Decompose,
    /// Extreme rays of a cone inside the dominant cone.
    Cone,
    /// The cell of `chi` in the fan of `A`.
    Cell,
    /// All cells of `A` and their generators.
    Fan,
    /// Whether `A` has generators beyond the corners.
    Critical,
    /// Generators over all state subsets of `rep`.
    KRho,
    /// The degree term of a filtration.
    MValue,
    /// Evaluate the stability inequality for a filtration.
    Check,
    /// Evaluate the inequality for a single subbundle.
    CheckSubbundle,
    /// Weighted direct sum of decorations.
    Combine,
    /// Inequality in terms of sections of the twisted bundle.
    Sectional,
    /// Gieseker exponent and ε.
    Epsilon,
    /// The constant C₁.
    C1,
    /// Finite list of inequalities for `rep`.
    Simplify,
    /// Smallest δ at which a filtration stops destabilizing.
    Threshold,
    /// μ for the worked decoration families.
    #[command(subcommand)]
    Profile(ProfileCommand),
}

#[derive(Debug, Clone, Copy, Subcommand)]
pub enum ProfileCommand {
    Extension,
    Framed,
    Hitchin,
    ConicSupport,
    ConicMu,
    ConicType,
    HitchinNilpotent,
}

fn read_document(cli: &Cli) -> Result<Value, JsonError> {
    let mut doc = match cli.file.as_deref() {
        None => Value::Object(Default::default()),
        Some(path) => {
            let text = if path == "-" {
                let mut s = String::new();
                std::io::stdin()
                    .read_to_string(&mut s)
                    .map_err(|e| JsonError::new("", format!("cannot read standard input: {e}")))?;
                s
            } else {
                std::fs::read_to_string(path)
                    .map_err(|e| JsonError::new("", format!("cannot read {path}: {e}")))?
            };
            serde_json::from_str(&text)
                .map_err(|e| JsonError::new("", format!("invalid JSON: {e}")))?
        }
    };
    for (key, value) in [("rep", &cli.rep), ("A", &cli.a)] {
        if let Some(text) = value {
            let v = serde_json::from_str(text)
                .map_err(|e| JsonError::new(format!("/{key}"), format!("invalid JSON: {e}")))?;
            doc.as_object_mut()
                .ok_or_else(|| JsonError::new("", "expected an object"))?
                .insert(key.into(), v);
        }
    }
    Ok(doc)
}

fn exit_code(err: &JsonError) -> u8 {
    match err.source {
        Some(Error::TooManyStates { .. }) => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = read_document(&cli).and_then(|doc| commands::run(cli.command, &doc, cli.budget));
    match result {
        Ok(out) => {
            let text = if cli.canonical {
                serde_json::to_string(&out.document)
            } else {
                serde_json::to_string_pretty(&out.document)
            };
            println!("{}", text.expect("values serialize"));
            if cli.assert_pass && out.passes == Some(false) {
                ExitCode::from(4)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(err) => {
            eprintln!("{}", err.to_json());
            ExitCode::from(exit_code(&err))
        }
    }
}
