use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use wzeta::{
    analyze, compare, polynomial_from_file, polynomial_from_str, recover, selftest, zeta, Budget,
    CliError, Outcome, SelftestConfig,
};
use wzeta_core::newton::SparsePoly;

#[derive(Parser)]
#[command(
    name = "wzeta",
    version,
    about = "Modified zeta functions and weight recovery for weighted homogeneous polynomials"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Weights, pure exponents, compact faces and non-degeneracy.
    Analyze(Input),
    /// Coefficients of the modified zeta function and its rational form.
    Zeta {
        #[command(flatten)]
        input: Input,
        /// Number of coefficients.
        #[arg(long, short = 'n', default_value_t = 12)]
        order: u64,
        /// Run the identity check with a sign error in the B_f term.
        #[arg(long)]
        corrupt: bool,
    },
    /// Recover the pure exponents and weights from zeta data alone.
    Recover {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Compare two polynomials through their recovered weights.
    Compare {
        /// Polynomial files (JSON or text); give two inputs in total.
        #[arg(long, short = 'i')]
        input: Vec<PathBuf>,
        /// Inline polynomials.
        #[arg(long, allow_hyphen_values = true)]
        poly: Vec<String>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Run reduced versions of the invariant suites.
    Selftest {
        /// Smaller profiles and orders.
        #[arg(long)]
        quick: bool,
        /// Largest order m in the lattice-sum comparisons.
        #[arg(long, default_value_t = 60, value_parser = clap::value_parser!(u64).range(1..=500))]
        caps: u64,
        /// Negative control: the identity check must fail.
        #[arg(long)]
        corrupt: bool,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Polynomial file, JSON or text.
    #[arg(long, short = 'i')]
    input: Option<PathBuf>,
    /// Inline polynomial, e.g. "x1^2 + x2^3".
    #[arg(long, allow_hyphen_values = true)]
    poly: Option<String>,
}

#[derive(Args)]
struct BudgetArgs {
    /// Largest N tried when estimating S.
    #[arg(long, default_value_t = 1 << 16)]
    budget: u64,
    /// Bound the exponents by every decomposition of S, ignoring the oracle.
    #[arg(long)]
    unfiltered: bool,
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        let b = Budget::with_max_n(self.budget);
        if self.unfiltered {
            b.unfiltered()
        } else {
            b
        }
    }
}

impl Input {
    fn load(&self) -> Result<SparsePoly, CliError> {
        match (&self.input, &self.poly) {
            (Some(path), _) => polynomial_from_file(path),
            (None, Some(text)) => polynomial_from_str(text),
            (None, None) => unreachable!("clap requires one input"),
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Analyze(input) => analyze(&input.load()?),
        Command::Zeta {
            input,
            order,
            corrupt,
        } => zeta(&input.load()?, *order, *corrupt),
        Command::Recover { input, budget } => recover(&input.load()?, &budget.budget()),
        Command::Compare {
            input,
            poly,
            budget,
        } => {
            let mut polys = Vec::new();
            for path in input {
                polys.push(polynomial_from_file(path)?);
            }
            for text in poly {
                polys.push(polynomial_from_str(text)?);
            }
            if polys.len() != 2 {
                return Err(CliError::Gate(format!(
                    "compare needs two polynomials, got {}",
                    polys.len()
                )));
            }
            compare(&polys[0], &polys[1], &budget.budget())
        }
        Command::Selftest {
            quick,
            caps,
            corrupt,
        } => Ok(selftest(&SelftestConfig {
            quick: *quick,
            max_m: *caps,
            corrupt: *corrupt,
        })),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.render(cli.format == Format::Json));
            ExitCode::from(outcome.status as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.status() as u8)
        }
    }
}
