//! `hecke`: command-line front end for the Hecke algebra engine.
//!
//! Exit codes: 0 success, 1 a check failed or a computation could not be
//! completed, 2 usage or unreadable input, 3 input violates an axiom or a
//! supplied resolution is not a resolution, 4 unstable truncation.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hecke_core::brst::BrstError;
use hecke_core::complexes::ComplexError;
use hecke_core::hecke::HeckeError;
use hecke_core::input::InputError;
use hecke_core::reduction::ReductionError;
use hecke_core::resolutions::ResolutionError;

#[derive(Parser)]
#[command(
    name = "hecke",
    version,
    about = "Graded Hecke algebras of finite-dimensional algebra pairs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Clone, Debug)]
pub struct Common {
    /// Input document (JSON).
    pub input: PathBuf,
    /// Resolution of K over B: `bar`, `ce`, or `file:<path>`.
    #[arg(long, default_value = "bar")]
    pub resolution: String,
    /// Truncation window L.
    #[arg(short = 'L', long = "truncation", default_value_t = 4)]
    pub window: usize,
    #[arg(long, default_value_t = 3)]
    pub max_degree: i64,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub min_degree: i64,
    /// Number of consecutive windows that must agree.
    #[arg(long, default_value_t = 2)]
    pub stability_passes: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Clone, Debug)]
pub struct ModuleArgs {
    #[command(flatten)]
    pub common: Common,
    /// Name of a module in the input's `modules` section.
    #[arg(long)]
    pub module: String,
}

#[derive(Subcommand)]
enum Command {
    /// Cohomology algebra Hk^* with product table and stability flags.
    Hecke(Common),
    /// Degree-zero algebra from invariants of A ⊗_B K, compared with Hk^0.
    Hk0(Common),
    /// Ext_B(K, V) and Ext_A(A ⊗_B K, A ⊗_B K); `--module` picks V.
    Ext {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        module: Option<String>,
    },
    /// Tor^B(A, K) by two independent routes.
    Tor(Common),
    /// Check that products of candidates with a basis of B form a basis of A.
    FreeCert {
        #[command(flatten)]
        common: Common,
        /// Candidate element of A as `i` or `i:c,j:c` (repeatable).
        #[arg(long = "candidate", required = true)]
        candidates: Vec<String>,
    },
    /// Compare the two bar-model constructions entry by entry.
    Thm3(Common),
    /// Hk dims against Ext_A and Ext_B, Tor vanishing and Hk^0.
    Triangle(Common),
    /// Module (co)homology and the universal reduction check.
    Reduce(ModuleArgs),
    /// Action of an Hk class on a module (co)homology class.
    Act {
        #[command(flatten)]
        args: ModuleArgs,
        /// Degree of the Hk class.
        #[arg(long, default_value_t = 0)]
        hk_degree: i64,
        #[arg(long, default_value_t = 0)]
        hk_class: usize,
        /// Degree of the module class.
        #[arg(long, default_value_t = 0)]
        degree: usize,
        #[arg(long, default_value_t = 0)]
        class: usize,
    },
    /// Operators preserving the invariants V^B.
    Observables(ModuleArgs),
    /// BRST model of the Chevalley-Eilenberg endomorphism complex.
    Brst(Common),
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Input(#[from] InputError),
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error(transparent)]
    Brst(#[from] BrstError),
    #[error(transparent)]
    Reduction(#[from] ReductionError),
    #[error(transparent)]
    Resolution(#[from] ResolutionError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        let invalid_resolution = |r: &ResolutionError| {
            matches!(
                r,
                ResolutionError::NotAResolution { .. }
                    | ResolutionError::NotAComplex { .. }
                    | ResolutionError::InvalidLieAction(_)
            )
        };
        match self {
            Self::Usage(_) => 2,
            Self::Input(InputError::Validation { .. }) => 3,
            Self::Input(InputError::Complex(_)) => 3,
            Self::Input(_) => 2,
            Self::Hecke(HeckeError::UnstableTruncation { .. }) => 4,
            Self::Hecke(HeckeError::Validation(_)) => 3,
            Self::Hecke(HeckeError::Resolution(r)) | Self::Resolution(r)
                if invalid_resolution(r) =>
            {
                3
            }
            Self::Brst(BrstError::Validation(_)) => 3,
            _ => 1,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (format, result) = match cli.command {
        Command::Hecke(c) => (c.format, commands::hecke(&c)),
        Command::Hk0(c) => (c.format, commands::hk0(&c)),
        Command::Ext { common, module } => {
            (common.format, commands::ext(&common, module.as_deref()))
        }
        Command::Tor(c) => (c.format, commands::tor(&c)),
        Command::FreeCert { common, candidates } => {
            (common.format, commands::free_cert(&common, &candidates))
        }
        Command::Thm3(c) => (c.format, commands::thm3(&c)),
        Command::Triangle(c) => (c.format, commands::triangle(&c)),
        Command::Reduce(a) => (a.common.format, commands::reduce(&a)),
        Command::Act {
            args,
            hk_degree,
            hk_class,
            degree,
            class,
        } => (
            args.common.format,
            commands::act(&args, hk_degree, hk_class, degree, class),
        ),
        Command::Observables(a) => (a.common.format, commands::observables(&a)),
        Command::Brst(c) => (c.format, commands::brst(&c)),
    };
    match result {
        Ok(report) => {
            print!("{}", report.render(format == Format::Json));
            if report.unstable {
                eprintln!("warning: some degrees are not stable at this window; raise -L");
                ExitCode::from(4)
            } else if report.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
