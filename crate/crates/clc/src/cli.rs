//! Command-line front end. The binary itself only forwards to
//! [`main`]; everything is implemented here so it stays testable.
//!
//! Exit codes: 0 on success, 1 when a check fails or an internal
//! invariant breaks (which a valid build should never produce), 2 on
//! unreadable or invalid input.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::profile::{
    parse_matrix_tsv, parse_profile, render_matrix_tsv, render_profile, LlullMatrix, Profile,
    UnlistedPolicy,
};
use crate::rational::{parse_rational, Rational};
use crate::report::TallyReport;
use crate::verify::{invariant_report, random_gamma_matrix, random_profile, rng};

#[derive(Parser)]
#[command(
    name = "clc",
    about = "Rank-like rating of complete preferential votes (Continuous Llull Condorcet)"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tally an election and print the rates (all stages with --detailed).
    Tally(TallyArgs),
    /// Run every stage invariant against an input and print PASS/FAIL lines.
    Check(CheckArgs),
    /// Emit a random ballot file or score matrix for experimentation.
    Generate(GenerateArgs),
}

#[derive(clap::Args)]
struct InputArgs {
    /// Ballot file (see the repository README for the grammar).
    #[arg(long, value_name = "FILE", conflicts_with = "matrix")]
    ballots: Option<PathBuf>,
    /// Score matrix as TSV: header row and first column are candidate
    /// names, entries are decimals or p/q rationals, diagonal ignored.
    #[arg(long, value_name = "FILE")]
    matrix: Option<PathBuf>,
    /// Divide matrix entries by this weight (absolute-count matrices).
    #[arg(long, value_name = "W", requires = "matrix")]
    total_weight: Option<String>,
    /// What to do with candidates a ballot does not mention.
    #[arg(long, value_enum, default_value_t = Unlisted::Error)]
    unlisted: Unlisted,
}

#[derive(clap::Args)]
struct TallyArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Print every intermediate stage as a table.
    #[arg(long)]
    detailed: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Fractional digits for decimal output.
    #[arg(long, default_value_t = 4)]
    digits: usize,
}

#[derive(clap::Args)]
struct CheckArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Check a freshly generated random complete matrix of this size
    /// instead of reading a file.
    #[arg(long, value_name = "N", conflicts_with_all = ["ballots", "matrix"])]
    random: Option<usize>,
    /// Seed for --random.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(clap::Args)]
struct GenerateArgs {
    #[arg(long, value_enum, default_value_t = Kind::Matrix)]
    kind: Kind,
    /// Number of candidates.
    #[arg(long, default_value_t = 6)]
    candidates: usize,
    /// Number of ballots (profile kind only).
    #[arg(long, default_value_t = 10)]
    ballots: usize,
    /// Percentage chance that a candidate ties with the previous one.
    #[arg(long, default_value_t = 20)]
    ties: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Unlisted {
    /// Reject ballots that do not mention every candidate.
    Error,
    /// Tie unmentioned candidates in one final tier.
    TiedLast,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Matrix,
    Profile,
}

impl From<Unlisted> for UnlistedPolicy {
    fn from(u: Unlisted) -> UnlistedPolicy {
        match u {
            Unlisted::Error => UnlistedPolicy::Error,
            Unlisted::TiedLast => UnlistedPolicy::TiedLast,
        }
    }
}

/// Parses `std::env::args` and runs; returns the process exit code.
pub fn main() -> i32 {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    run(cli, &mut stdout.lock())
}

pub fn run(cli: Cli, out: &mut impl Write) -> i32 {
    let result = match cli.command {
        Command::Tally(args) => run_tally(args, out),
        Command::Check(args) => run_check(args, out),
        Command::Generate(args) => run_generate(args, out),
    };
    match result {
        Ok(code) => code,
        Err(error) => {
            eprintln!("error: {error}");
            exit_code_for(&error)
        }
    }
}

fn exit_code_for(error: &Error) -> i32 {
    match error {
        Error::Parse { .. }
        | Error::UnknownCandidate(_)
        | Error::DuplicateCandidate { .. }
        | Error::NegativeWeight { .. }
        | Error::IncompleteBallot { .. }
        | Error::ZeroTotalWeight
        | Error::NotComplete(_)
        | Error::InvalidPartition
        | Error::InvalidLift(_)
        | Error::NotAutonomous(_)
        | Error::BoundExceeded { .. } => 2,
        Error::MinInequality { .. }
        | Error::NotPartialOrder(_)
        | Error::NotAnExtension { .. }
        | Error::NotAdmissible { .. } => 1,
    }
}

enum Input {
    Profile(Profile),
    Matrix(LlullMatrix, Option<Rational>),
}

fn load_input(args: &InputArgs) -> Result<Input, Error> {
    let read = |path: &PathBuf| {
        std::fs::read_to_string(path).map_err(|e| Error::Parse {
            line: 0,
            message: format!("{}: {e}", path.display()),
        })
    };
    if let Some(path) = &args.ballots {
        let profile = parse_profile(&read(path)?, args.unlisted.into())?;
        return Ok(Input::Profile(profile));
    }
    if let Some(path) = &args.matrix {
        let total = match &args.total_weight {
            Some(text) => Some(parse_rational(text).ok_or_else(|| Error::Parse {
                line: 0,
                message: format!("invalid total weight \"{text}\""),
            })?),
            None => None,
        };
        let matrix = parse_matrix_tsv(&read(path)?, total.as_ref())?;
        return Ok(Input::Matrix(matrix, total));
    }
    Err(Error::Parse {
        line: 0,
        message: "exactly one of --ballots or --matrix is required".into(),
    })
}

fn run_tally(args: TallyArgs, out: &mut impl Write) -> Result<i32, Error> {
    let report = match load_input(&args.input)? {
        Input::Profile(profile) => TallyReport::from_profile(&profile)?,
        Input::Matrix(matrix, total) => TallyReport::from_matrix(matrix, total)?,
    };
    let text = match (args.format, args.detailed) {
        (Format::Json, _) => format!("{:#}\n", report.to_json(args.digits)),
        (Format::Text, true) => report.render_detailed(args.digits),
        (Format::Text, false) => report.render_rates(args.digits),
    };
    out.write_all(text.as_bytes()).ok();
    Ok(0)
}

fn run_check(args: CheckArgs, out: &mut impl Write) -> Result<i32, Error> {
    let matrix = if let Some(n) = args.random {
        let mut rng = rng(args.seed);
        random_gamma_matrix(&mut rng, n.max(1), 100)
    } else {
        match load_input(&args.input)? {
            Input::Profile(profile) => crate::profile::aggregate(&profile)?,
            Input::Matrix(matrix, _) => matrix,
        }
    };
    let checks = invariant_report(&matrix);
    let mut all_passed = true;
    for check in &checks {
        if check.passed {
            writeln!(out, "PASS {}", check.name).ok();
        } else {
            all_passed = false;
            writeln!(out, "FAIL {}: {}", check.name, check.detail).ok();
        }
    }
    Ok(if all_passed { 0 } else { 1 })
}

fn run_generate(args: GenerateArgs, out: &mut impl Write) -> Result<i32, Error> {
    let mut rng = rng(args.seed);
    let n = args.candidates.max(1);
    let text = match args.kind {
        Kind::Matrix => render_matrix_tsv(&random_gamma_matrix(&mut rng, n, 100)),
        Kind::Profile => render_profile(&random_profile(
            &mut rng,
            n,
            args.ballots.max(1),
            3,
            args.ties.min(100),
        )),
    };
    out.write_all(text.as_bytes()).ok();
    Ok(0)
}
