//! Command-line front end: parse forms and chains from JSON, run the
//! operators, solve for potentials, and run the brute-force verification
//! suite.
//!
//! Exit codes: 0 success, 1 a checked property does not hold, 2 malformed
//! input (unreadable file, schema violation, ring mismatch), 3 domain error
//! (out-of-box cell, too-small extents, unsupported degree, non-closed
//! input to a solver). Every failure prints one line to stderr.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use difforms_core::json::{
    chain_from_json_str, chain_to_json_string, field_from_json_str, field_to_json_string,
    form_from_json_str, form_to_json_string, FormJson, VectorFieldJson,
};
use difforms_core::poincare::{closedness_violation, pathsum_scalar_potential};
use difforms_core::{
    boundary, curl, div, exterior_derivative, grad, oracle, pair, scalar_potential3,
    solve_potential, stokes_verify, vector_potential3, wedge, Chain, CoreError, GridForm,
    MultiIndex, Ring, RingSpec, ScalarGrid, VectorField3,
};

#[derive(Parser)]
#[command(
    name = "difforms",
    version,
    about = "Discrete differential forms, chains, and potential solvers on lattice boxes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply the exterior derivative to a form
    Derive(IoArgs),
    /// Apply the boundary map to a chain
    Boundary(IoArgs),
    /// Evaluate the pairing of a form against a chain
    Pair(ChainOpArgs),
    /// Wedge the input form with a second form
    Wedge(WedgeArgs),
    /// Test whether a form is closed; exits 1 when it is not
    CheckClosed(IoArgs),
    /// Solve for a potential of a closed form
    Solve(SolveArgs),
    /// Solve a degree-1 system by iterated path sums
    Pathsum(IoArgs),
    /// Compare both sides of the Stokes identity; exits 1 on mismatch
    Stokes(ChainOpArgs),
    /// Gradient of a degree-0 form on a 3-dimensional box
    Vec3Grad(IoArgs),
    /// Curl of a vector field
    Vec3Curl(IoArgs),
    /// Divergence of a vector field
    Vec3Div(IoArgs),
    /// Recover b with grad b = a
    Vec3ScalarPotential(IoArgs),
    /// Recover b with curl b = a
    Vec3VectorPotential(IoArgs),
    /// Run the brute-force verification suite on a box over the rationals
    Verify(VerifyArgs),
}

#[derive(Args)]
struct IoArgs {
    /// Input file
    #[arg(short = 'i', long)]
    input: PathBuf,
    /// Output file; stdout when omitted
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
    /// Require every input to use this ring
    /// (integer | rational | modular:M | float:TOL)
    #[arg(long)]
    ring: Option<String>,
}

#[derive(Args)]
struct ChainOpArgs {
    #[command(flatten)]
    io: IoArgs,
    /// Chain operand
    #[arg(short = 'c', long)]
    chain: PathBuf,
}

#[derive(Args)]
struct WedgeArgs {
    #[command(flatten)]
    io: IoArgs,
    /// Second form operand
    #[arg(short = 'f', long)]
    form: PathBuf,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    io: IoArgs,
    /// Construction to use for the potential
    #[arg(long, value_enum, default_value_t = Method::Homotopy)]
    method: Method,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Recursive homotopy-operator construction, any degree
    Homotopy,
    /// Iterated path sums, degree 1 only
    Pathsum,
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated box extents
    #[arg(long, default_value = "3,3,3")]
    extents: String,
}

/// A failure plus the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Failure {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<CoreError> for Failure {
    fn from(err: CoreError) -> Failure {
        let code = match err {
            CoreError::Config(_)
            | CoreError::Parse(_)
            | CoreError::Mismatch(_)
            | CoreError::Validation(_) => 2,
            CoreError::Degree(_)
            | CoreError::EmptyDomain(_)
            | CoreError::OutOfDomain(_)
            | CoreError::NotClosed { .. }
            | CoreError::Resource(_) => 3,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct ValueReport {
    value: String,
}

#[derive(Serialize, Deserialize)]
struct ClosedReport {
    closed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    component: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    point: Option<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct StokesJson {
    lhs: String,
    rhs: String,
    equal: bool,
}

#[derive(Serialize, Deserialize)]
struct PotentialJson<T> {
    kind: String,
    guarantee_extents: Vec<usize>,
    potential: T,
}

const POTENTIAL_KIND: &str = "potential";

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Derive(args) => {
            let form = load_form(&args.input, args.ring.as_deref())?;
            let result = exterior_derivative(&form)?;
            emit(&args.output, form_to_json_string(&result))?;
            Ok(0)
        }
        Command::Boundary(args) => {
            let chain = load_chain(&args.input, args.ring.as_deref())?;
            let result = boundary(&chain)?;
            emit(&args.output, chain_to_json_string(&result))?;
            Ok(0)
        }
        Command::Pair(args) => {
            let form = load_form(&args.io.input, args.io.ring.as_deref())?;
            let chain = load_chain(&args.chain, args.io.ring.as_deref())?;
            let value = pair(&form, &chain)?;
            let report = ValueReport {
                value: form.ring().format(&value),
            };
            emit(&args.io.output, to_json(&report))?;
            Ok(0)
        }
        Command::Wedge(args) => {
            let left = load_form(&args.io.input, args.io.ring.as_deref())?;
            let right = load_form(&args.form, args.io.ring.as_deref())?;
            let result = wedge(&left, &right)?;
            emit(&args.io.output, form_to_json_string(&result))?;
            Ok(0)
        }
        Command::CheckClosed(args) => {
            let form = load_form(&args.input, args.ring.as_deref())?;
            let violation = closedness_violation(&form)?;
            let report = ClosedReport {
                closed: violation.is_none(),
                component: violation.as_ref().map(|(mi, _)| {
                    mi.indices()
                        .iter()
                        .map(|i| i.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                }),
                point: violation.as_ref().map(|(_, p)| p.coords().to_vec()),
            };
            let closed = report.closed;
            emit(&args.output, to_json(&report))?;
            Ok(if closed { 0 } else { 1 })
        }
        Command::Solve(args) => {
            let form = load_form(&args.io.input, args.io.ring.as_deref())?;
            let report = match args.method {
                Method::Homotopy => {
                    let result = solve_potential(&form)?;
                    PotentialJson {
                        kind: POTENTIAL_KIND.to_string(),
                        guarantee_extents: result.guarantee_box.extents().to_vec(),
                        potential: FormJson::from_form(&result.potential),
                    }
                }
                Method::Pathsum => pathsum_report(&form)?,
            };
            emit(&args.io.output, to_json(&report))?;
            Ok(0)
        }
        Command::Pathsum(args) => {
            let form = load_form(&args.input, args.ring.as_deref())?;
            let report = pathsum_report(&form)?;
            emit(&args.output, to_json(&report))?;
            Ok(0)
        }
        Command::Stokes(args) => {
            let form = load_form(&args.io.input, args.io.ring.as_deref())?;
            let chain = load_chain(&args.chain, args.io.ring.as_deref())?;
            let report = stokes_verify(&form, &chain)?;
            let json = StokesJson {
                lhs: form.ring().format(&report.lhs),
                rhs: form.ring().format(&report.rhs),
                equal: report.equal,
            };
            emit(&args.io.output, to_json(&json))?;
            Ok(if report.equal { 0 } else { 1 })
        }
        Command::Vec3Grad(args) => {
            let form = load_form(&args.input, args.ring.as_deref())?;
            let result = grad(form.as_scalar()?)?;
            emit(&args.output, field_to_json_string(&result))?;
            Ok(0)
        }
        Command::Vec3Curl(args) => {
            let field = load_field(&args.input, args.ring.as_deref())?;
            let result = curl(&field)?;
            emit(&args.output, field_to_json_string(&result))?;
            Ok(0)
        }
        Command::Vec3Div(args) => {
            let field = load_field(&args.input, args.ring.as_deref())?;
            let result = GridForm::from_scalar(div(&field)?);
            emit(&args.output, form_to_json_string(&result))?;
            Ok(0)
        }
        Command::Vec3ScalarPotential(args) => {
            let field = load_field(&args.input, args.ring.as_deref())?;
            let guarantee = field.domain().shrink()?;
            let potential = scalar_potential3(&field)?;
            let report = PotentialJson {
                kind: POTENTIAL_KIND.to_string(),
                guarantee_extents: guarantee.extents().to_vec(),
                potential: FormJson::from_form(&GridForm::from_scalar(potential)),
            };
            emit(&args.output, to_json(&report))?;
            Ok(0)
        }
        Command::Vec3VectorPotential(args) => {
            let field = load_field(&args.input, args.ring.as_deref())?;
            let guarantee = field.domain().shrink()?;
            let potential = vector_potential3(&field)?;
            let report = PotentialJson {
                kind: POTENTIAL_KIND.to_string(),
                guarantee_extents: guarantee.extents().to_vec(),
                potential: VectorFieldJson::from_field(&potential),
            };
            emit(&args.output, to_json(&report))?;
            Ok(0)
        }
        Command::Verify(args) => {
            let extents = parse_extents(&args.extents)?;
            let checks = oracle::verify_box(&extents)?;
            let mut all_passed = true;
            for check in &checks {
                all_passed &= check.passed;
                let status = if check.passed { "PASS" } else { "FAIL" };
                if check.detail.is_empty() {
                    println!("{status} {}", check.name);
                } else {
                    println!("{status} {} ({})", check.name, check.detail);
                }
            }
            println!(
                "{} of {} checks passed on extents {extents:?}",
                checks.iter().filter(|c| c.passed).count(),
                checks.len()
            );
            Ok(if all_passed { 0 } else { 1 })
        }
    }
}

/// Path-sum solve on a degree-1 form: split into component grids, solve the
/// gradient system, wrap the result like the homotopy method does.
fn pathsum_report(form: &GridForm) -> Result<PotentialJson<FormJson>, Failure> {
    if form.degree() != 1 {
        return Err(CoreError::Degree(format!(
            "the path-sum method needs a degree-1 form, got degree {}",
            form.degree()
        ))
        .into());
    }
    let guarantee = form.domain().shrink()?;
    let fields: Vec<ScalarGrid> = (1..=form.dimension())
        .map(|axis| form.component(&MultiIndex::singleton(axis)).cloned())
        .collect::<Result<_, _>>()?;
    let potential = pathsum_scalar_potential(&fields)?;
    Ok(PotentialJson {
        kind: POTENTIAL_KIND.to_string(),
        guarantee_extents: guarantee.extents().to_vec(),
        potential: FormJson::from_form(&GridForm::from_scalar(potential)),
    })
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))
}

fn load_form(path: &Path, ring: Option<&str>) -> Result<GridForm, Failure> {
    let form = form_from_json_str(&read(path)?)?;
    check_ring(form.ring(), ring)?;
    Ok(form)
}

fn load_chain(path: &Path, ring: Option<&str>) -> Result<Chain, Failure> {
    let chain = chain_from_json_str(&read(path)?)?;
    check_ring(chain.ring(), ring)?;
    Ok(chain)
}

fn load_field(path: &Path, ring: Option<&str>) -> Result<VectorField3, Failure> {
    let field = field_from_json_str(&read(path)?)?;
    check_ring(field.ring(), ring)?;
    Ok(field)
}

/// When `--ring` is given, every loaded object must use exactly that ring.
fn check_ring(actual: &Ring, required: Option<&str>) -> Result<(), Failure> {
    let Some(required) = required else {
        return Ok(());
    };
    let expected = parse_ring_flag(required)?;
    if actual != &expected {
        return Err(Failure::input(format!(
            "ring mismatch: input uses {:?}, --ring requires {:?}",
            actual.spec(),
            expected.spec()
        )));
    }
    Ok(())
}

fn parse_ring_flag(s: &str) -> Result<Ring, Failure> {
    let spec = match s.split_once(':') {
        None => match s {
            "integer" => RingSpec::Integer,
            "rational" => RingSpec::Rational,
            other => {
                return Err(Failure::input(format!(
                    "unknown ring {other:?}; expected integer, rational, modular:M, or float:TOL"
                )))
            }
        },
        Some(("modular", m)) => RingSpec::Modular {
            modulus: m
                .parse()
                .map_err(|e| Failure::input(format!("bad modulus {m:?}: {e}")))?,
        },
        Some(("float", tol)) => RingSpec::Float {
            tolerance: tol
                .parse()
                .map_err(|e| Failure::input(format!("bad tolerance {tol:?}: {e}")))?,
        },
        Some((other, _)) => {
            return Err(Failure::input(format!(
                "unknown ring {other:?}; expected integer, rational, modular:M, or float:TOL"
            )))
        }
    };
    Ok(Ring::from_spec(&spec)?)
}

fn parse_extents(s: &str) -> Result<Vec<usize>, Failure> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|e| Failure::input(format!("bad extent {part:?}: {e}")))
        })
        .collect()
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("reports serialize")
}

fn emit(output: &Option<PathBuf>, json: String) -> Result<(), Failure> {
    match output {
        Some(path) => std::fs::write(path, json + "\n")
            .map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{json}");
            Ok(())
        }
    }
}
