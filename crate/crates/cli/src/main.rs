//! `iwcon`: contractions of 3-dimensional Lie algebras and certification of
//! contracted representations from the command line.

mod commands;
mod scaling;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use iwcon::algebra::{AlgebraError, DivergenceError};
use iwcon::direct_limit::DirectLimitError;
use iwcon::reps::RepError;
use iwcon::verify::VerifyError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Divergence(#[from] DivergenceError),
    /// Verification ran and at least one check failed.
    #[error("verification failed: {0}")]
    Failed(String),
    #[error("{0}")]
    Runtime(String),
    #[error("cannot write `{path}`: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => 1,
            CliError::Divergence(_) => 2,
            CliError::Failed(_) | CliError::Runtime(_) => 3,
        }
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::Divergence(d) => CliError::Divergence(d),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<RepError> for CliError {
    fn from(e: RepError) -> Self {
        match e {
            RepError::UnknownCase(_) | RepError::InvalidParam(_) => CliError::Usage(e.to_string()),
            other => CliError::Runtime(other.to_string()),
        }
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::ScheduleMismatch(_) | VerifyError::InvalidSchedule(_) => {
                CliError::Usage(e.to_string())
            }
            VerifyError::Rep(r) => r.into(),
            other => CliError::Runtime(other.to_string()),
        }
    }
}

impl From<DirectLimitError> for CliError {
    fn from(e: DirectLimitError) -> Self {
        match e {
            DirectLimitError::Verify(v) => v.into(),
            DirectLimitError::Rep(r) => r.into(),
            DirectLimitError::Domain(_) => CliError::Usage(e.to_string()),
            other => CliError::Runtime(other.to_string()),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "iwcon", version, about = "Inonu-Wigner contractions of 3-dimensional real Lie algebras and their representations")]
struct Cli {
    /// Worker threads for schedule points (never changes the output)
    #[arg(long, global = true, env = "IWCON_PARALLEL")]
    parallel: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct CaseArgs {
    /// Contraction case, e.g. ea-to-h or su2-to-iso2
    #[arg(long)]
    pub case: String,
    /// Amplitude A of the h-valued limits
    #[arg(long = "A", allow_negative_numbers = true)]
    pub amp: Option<f64>,
    /// R in ε_l = R/l
    #[arg(long = "R", allow_negative_numbers = true)]
    pub radius: Option<f64>,
    /// λ of the g and l sources, as a rational
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    pub a: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub b: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub r: Option<f64>,
}

#[derive(Args, Debug, Clone)]
#[group(multiple = false)]
pub struct ScheduleArgs {
    /// Decreasing ε values for the continuous cases
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub eps: Option<Vec<f64>>,
    /// Increasing degrees l (ε = R/l)
    #[arg(long, value_delimiter = ',')]
    pub l: Option<Vec<i64>>,
    /// Increasing n of the Kirillov model (ε = 4b/n²)
    #[arg(long, value_delimiter = ',')]
    pub n: Option<Vec<i64>>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the catalog of 3-dimensional real Lie algebras
    Algebras {
        #[arg(long)]
        json: bool,
        /// Show a single family
        #[arg(long)]
        family: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
    },
    /// Contract a catalog algebra along a scaling map and classify the limit
    Contract {
        /// Source family
        #[arg(long)]
        source: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        /// `diag:a,b,c` with entries [-]q[e^k], inline JSON or a JSON file
        #[arg(long)]
        map: String,
        #[arg(long)]
        json: bool,
    },
    /// Identify an algebra with a catalog family
    Classify {
        /// Catalog family to start from
        #[arg(long, conflicts_with = "structure")]
        family: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        /// New basis as a JSON 3x3 matrix whose columns are the basis vectors
        #[arg(long, requires = "family")]
        basis: Option<String>,
        /// Structure constants c[i][j][k] as inline JSON or a JSON file
        #[arg(long)]
        structure: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Check that a case's family and limit are Lie algebra homomorphisms
    VerifyRep {
        #[command(flatten)]
        case: CaseArgs,
        /// ε of the family member (defaults to the first schedule point)
        #[arg(long)]
        eps: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the four-condition protocol on a case and write the report
    Verify {
        #[command(flatten)]
        case: CaseArgs,
        #[command(flatten)]
        schedule: ScheduleArgs,
        /// JSON report path (stdout when absent)
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the error table as CSV
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Tabulate sup and L² errors per generator and schedule point
    Sweep {
        #[command(flatten)]
        case: CaseArgs,
        #[command(flatten)]
        schedule: ScheduleArgs,
        /// CSV path (stdout when absent)
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Matrix elements of the scaled su(2) generators and their iso(2) limits
    MatrixElements {
        #[arg(long = "R", default_value_t = 1.0)]
        radius: f64,
        #[arg(long, value_delimiter = ',')]
        l: Option<Vec<i64>>,
        /// Largest |m| and |s|
        #[arg(long, default_value_t = 3)]
        max_m: i64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

fn dispatch(cmd: Command) -> Result<(), CliError> {
    match cmd {
        Command::Algebras { json, family, lambda } => commands::algebras(json, family, lambda),
        Command::Contract { source, lambda, map, json } => commands::contract(&source, lambda, &map, json),
        Command::Classify {
            family,
            lambda,
            basis,
            structure,
            json,
        } => commands::classify(family, lambda, basis, structure, json),
        Command::VerifyRep { case, eps, out } => commands::verify_rep(&case, eps, out),
        Command::Verify {
            case,
            schedule,
            out,
            csv,
        } => commands::verify(&case, &schedule, out, csv),
        Command::Sweep { case, schedule, csv } => commands::sweep(&case, &schedule, csv),
        Command::MatrixElements {
            radius,
            l,
            max_m,
            out,
            csv,
        } => commands::matrix_elements(radius, l, max_m, out, csv),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let threads = cli.parallel.unwrap_or(0);
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    match pool.install(|| dispatch(cli.command)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
