//! `polyseq`: compute, verify and export the polynomial sequence `P_n(x)`.
//!
//! Exit codes: 0 success, 1 a check was refuted or errored, 2 usage error,
//! 3 I/O error.

mod output;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use polyseq::coeffs::Basis;
use polyseq::conjectures::DEFAULT_DIVISOR_CAP;
use polyseq::export::Order;

/// Default bound for verification runs.
const DEFAULT_N_MAX: usize = 161;
const DEFAULT_K_MAX: i64 = 30;

#[derive(Parser)]
#[command(
    name = "polyseq",
    version,
    about = "Exact computation and verification of the polynomials P_n(x)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print P_n, or P_1..P_N with --n-max
    Compute(ComputeArgs),
    /// Run identity and conjecture checks
    Verify(VerifyArgs),
    /// Run the identity suite only, or list its check ids
    Identities(IdentitiesArgs),
    /// Write the coefficient rows of P_1..P_N to a file or stdout
    Export(ExportArgs),
    /// Read a JSON-lines export back and compare it with the recursion
    Import(ImportArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BasisArg {
    Power,
    Binomial,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Self {
        match b {
            BasisArg::Power => Basis::Power,
            BasisArg::Binomial => Basis::Binomial,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Ascending,
    Descending,
}

impl From<OrderArg> for Order {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Ascending => Order::Ascending,
            OrderArg::Descending => Order::Descending,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Bfile,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExportFormat {
    Json,
    Bfile,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("range").required(true).args(["n", "n_max"]))]
struct ComputeArgs {
    /// Index of the single polynomial to print
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    n: Option<u64>,
    /// Print P_1..P_N
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    n_max: Option<u64>,
    #[arg(long, value_enum, default_value = "power")]
    basis: BasisArg,
    /// bfile always flattens the rows P_1..P_N
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Coefficient order within a row; required for bfile
    #[arg(long, value_enum)]
    order: Option<OrderArg>,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("target").required(true).args(["all", "conjecture", "identity"]))]
struct VerifyArgs {
    /// Every identity check plus one aggregated record per conjecture
    #[arg(long)]
    all: bool,
    /// One record per applicable n for a single conjecture
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=7))]
    conjecture: Option<u8>,
    /// A single identity check by id, e.g. 8.7
    #[arg(long)]
    identity: Option<String>,
    #[arg(long, default_value_t = DEFAULT_N_MAX as u64, value_parser = clap::value_parser!(u64).range(1..))]
    n_max: u64,
    #[arg(long, default_value_t = DEFAULT_K_MAX, value_parser = clap::value_parser!(i64).range(1..))]
    k_max: i64,
    /// Candidate cap for the rational root search
    #[arg(long, default_value_t = DEFAULT_DIVISOR_CAP)]
    divisor_cap: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: ReportFormat,
}

#[derive(Args)]
struct IdentitiesArgs {
    /// Print check ids and descriptions without running anything large
    #[arg(long)]
    list: bool,
    #[arg(long, default_value_t = DEFAULT_N_MAX as u64, value_parser = clap::value_parser!(u64).range(1..))]
    n_max: u64,
    #[arg(long, default_value_t = DEFAULT_K_MAX, value_parser = clap::value_parser!(i64).range(1..))]
    k_max: i64,
    #[arg(long, value_enum, default_value = "text")]
    format: ReportFormat,
}

#[derive(Args)]
struct ExportArgs {
    #[arg(long, default_value_t = DEFAULT_N_MAX as u64)]
    n_max: u64,
    #[arg(long, value_enum, default_value = "power")]
    basis: BasisArg,
    #[arg(long, value_enum)]
    format: ExportFormat,
    /// Coefficient order within a row; required for bfile
    #[arg(long, value_enum)]
    order: Option<OrderArg>,
    /// Output file; stdout when absent
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ImportArgs {
    /// JSON-lines file written by `export --format json`
    path: PathBuf,
}

/// Usage error in the same shape and with the same exit code as clap's own.
fn usage(kind: clap::error::ErrorKind, msg: impl std::fmt::Display) -> ! {
    Cli::command().error(kind, msg).exit()
}

fn bfile_order(format_is_bfile: bool, order: Option<OrderArg>) -> Option<Order> {
    match (format_is_bfile, order) {
        (true, None) => usage(
            clap::error::ErrorKind::MissingRequiredArgument,
            "--order is required with --format bfile",
        ),
        (_, o) => o.map(Order::from),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Compute(a) => {
            let order = bfile_order(a.format == Format::Bfile, a.order);
            let (n, single) = match (a.n, a.n_max) {
                (Some(n), _) => (n as usize, true),
                (None, Some(n)) => (n as usize, false),
                (None, None) => unreachable!("clap enforces the group"),
            };
            output::compute(n, single, a.basis.into(), a.format, order)
        }
        Command::Verify(a) => {
            let target = if a.all {
                verify::Target::All
            } else if let Some(c) = a.conjecture {
                verify::Target::Conjecture(c)
            } else {
                let id = a.identity.expect("clap enforces the group");
                if !verify::known_identity(&id) {
                    usage(
                        clap::error::ErrorKind::InvalidValue,
                        format!("unknown identity id {id:?}; see `polyseq identities --list`"),
                    );
                }
                verify::Target::Identity(id)
            };
            let cfg = verify::Config {
                n_max: a.n_max as usize,
                k_max: a.k_max,
                divisor_cap: a.divisor_cap,
                json: a.format == ReportFormat::Json,
            };
            verify::run(&target, &cfg)
        }
        Command::Identities(a) => {
            if a.list {
                verify::list()
            } else {
                let cfg = verify::Config {
                    n_max: a.n_max as usize,
                    k_max: a.k_max,
                    divisor_cap: DEFAULT_DIVISOR_CAP,
                    json: a.format == ReportFormat::Json,
                };
                verify::run(&verify::Target::Identities, &cfg)
            }
        }
        Command::Export(a) => {
            if a.n_max == 0 {
                usage(clap::error::ErrorKind::ValueValidation, "--n-max must be at least 1");
            }
            let order = bfile_order(a.format == ExportFormat::Bfile, a.order);
            let format = match a.format {
                ExportFormat::Json => Format::Json,
                ExportFormat::Bfile => Format::Bfile,
            };
            output::export(a.n_max as usize, a.basis.into(), format, order, a.output.as_deref())
        }
        Command::Import(a) => output::import(&a.path),
    };
    ExitCode::from(code)
}
