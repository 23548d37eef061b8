//! `packbound`: exact rectangle-packing solves and certified bounds from the
//! command line.
//!
//! Every command prints exactly one JSON document to stdout; progress notes,
//! timing, and solver statistics go to stderr so that stdout stays
//! byte-deterministic for identical inputs. Exit codes: 0 on success, 2 on
//! input or precondition errors, 3 when a budget cap downgraded a solve to
//! certified bounds.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use packbound_bounds::Mode;

mod commands;
mod inputs;
mod report;
mod svg;

pub(crate) const EXIT_OK: u8 = 0;
pub(crate) const EXIT_INPUT: u8 = 2;
pub(crate) const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "packbound",
    version,
    about = "Exact minimal-area rectangle packing and certified efficiency bounds",
    after_help = "Set PACKBOUND_THREADS to cap solver parallelism; results never depend on it."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a rectangle set exactly: T0, eta0, and a canonical packing.
    Solve(SolveArgs),
    /// Enclose the supremum efficiency of a family from a solved prefix.
    Interval(FamilyRunArgs),
    /// Try to rule out a perfect packing for a family.
    Refute(FamilyRunArgs),
    /// Apply a registered transform to a positioning.
    Transform(TransformArgs),
    /// Pack a batch into a strip of fixed height.
    Pack(PackArgs),
    /// Render a positioning to SVG.
    Render(RenderArgs),
    /// Family tooling.
    #[command(subcommand)]
    Families(FamiliesCommand),
}

#[derive(Subcommand)]
enum FamiliesCommand {
    /// Check the structural profile (C1/C2) of a family.
    Validate(ValidateArgs),
}

#[derive(Args)]
struct SolveArgs {
    /// Rectangle-set JSON file: {"rects":[{"w":"1/2","l":"1"},...]}.
    #[arg(long)]
    input: PathBuf,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Significant digits for decimal echoes of exact values.
    #[arg(long, default_value_t = 12)]
    digits: usize,
}

#[derive(Args)]
struct FamilyRunArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Prefix length to solve exactly.
    #[arg(long)]
    prefix: usize,
    /// Tail-cost flavor: the analytic a^2/8 term or the constructive
    /// charge of the shelf packer.
    #[arg(long, value_enum, default_value_t = ModeArg::Analytic)]
    mode: ModeArg,
    #[command(flatten)]
    budget: BudgetArgs,
    #[arg(long, default_value_t = 12)]
    digits: usize,
}

#[derive(Args)]
struct TransformArgs {
    /// Positioning JSON file: {"rects":[...],"origins":[...]}.
    #[arg(long)]
    input: PathBuf,
    /// Op spec JSON, e.g. '{"op":"extend_x","index":0,"dx":"1/2"}'.
    /// Known ops: retract_x/y, extend_x/y/xy, squeeze_x/y, remove_tail,
    /// scale.
    op_spec: String,
    #[arg(long, default_value_t = 12)]
    digits: usize,
}

#[derive(Args)]
struct PackArgs {
    /// Rectangle-set JSON file for the batch.
    #[arg(long)]
    input: PathBuf,
    /// Strip height `a`; every length in the batch must fit.
    #[arg(long)]
    strip_height: String,
    #[arg(long, default_value_t = 12)]
    digits: usize,
}

#[derive(Args)]
struct RenderArgs {
    /// Positioning JSON file.
    #[arg(long)]
    input: PathBuf,
    /// Output SVG path.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct ValidateArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// How many leading rectangles the C2 check inspects.
    #[arg(long, default_value_t = 32)]
    prefix: usize,
}

/// Family selection. `--family` takes a registered kind (plus its parameter
/// flags) or a complete family-spec JSON object.
#[derive(Args)]
struct FamilyArgs {
    /// harmonic | power_squares | custom, or inline JSON like
    /// '{"family":"power_squares","t":"3/5"}'.
    #[arg(long)]
    family: String,
    /// Exponent for power_squares, as a rational string.
    #[arg(long)]
    t: Option<String>,
    /// Enclosure precision for irrational sides, in bits.
    #[arg(long)]
    precision_bits: Option<u64>,
    /// Rectangle-set JSON file for custom families.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct BudgetArgs {
    /// Cap on explored placement nodes; exceeding it downgrades the solve
    /// to certified bounds (exit 3 for `solve`).
    #[arg(long)]
    budget_nodes: Option<u64>,
    /// Wall-clock cap in seconds.
    #[arg(long)]
    budget_seconds: Option<f64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Analytic,
    Constructive,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Analytic => Mode::Analytic,
            ModeArg::Constructive => Mode::Constructive,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Solve(args) => commands::solve(args),
        Command::Interval(args) => commands::interval(args),
        Command::Refute(args) => commands::refute(args),
        Command::Transform(args) => commands::transform(args),
        Command::Pack(args) => commands::pack(args),
        Command::Render(args) => commands::render(args),
        Command::Families(FamiliesCommand::Validate(args)) => commands::validate(args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
