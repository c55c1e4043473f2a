//! Command-line front end: `count`, `table`, `verify`, `enumerate`, `bench`.
//!
//! Exit codes are 0 on success, 1 when a verification or consistency check
//! fails, and 2 for usage and domain errors.

pub mod record;
pub mod verify;

use std::io::{self, Write};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use menage_core::{evaluate, EvaluationPath};
use menage_oracles::{
    enumerate_domino_placements, is_discordant, is_valid_menage_seating, permutations, seatings,
    OracleError,
};

use crate::record::{build_records, write_csv, write_json, write_text};
use crate::verify::{Formulas, Suite};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Success,
    CheckFailed,
    Usage,
}

impl Exit {
    pub fn code(self) -> u8 {
        match self {
            Exit::Success => 0,
            Exit::CheckFailed => 1,
            Exit::Usage => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "menage",
    version,
    about = "Exact ménage numbers, Tait counts and domino placements"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print one exact count.
    Count {
        kind: CountKind,
        /// Couple count n (menage, tait) or cycle length m (dominos).
        value: u64,
        /// Number of dominos (dominos only).
        r: Option<u64>,
    },
    /// Print Tait and ménage counts for a range of n.
    Table {
        from: u64,
        to: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Include the per-term breakdown of each Touchard sum.
        #[arg(long)]
        terms: bool,
    },
    /// Check the formulas against each other and the brute-force oracles.
    Verify {
        max_n: u64,
        #[arg(value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
    /// List the objects the oracles count, one per line.
    Enumerate {
        #[command(subcommand)]
        what: EnumerateWhat,
    },
    /// Time the incremental and direct evaluations of the Tait count.
    Bench { n: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountKind {
    Menage,
    Tait,
    Dominos,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Formulas,
    Oracles,
    Ie,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Formulas => Suite::Formulas,
            SuiteArg::Oracles => Suite::Oracles,
            SuiteArg::Ie => Suite::Ie,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum EnumerateWhat {
    /// Domino placements on an m-cycle, as sorted start lists.
    Placements { m: u64, r: u64 },
    /// Permutations of 0..n in one-line notation.
    Permutations {
        n: u64,
        /// Only permutations discordant with the identity and the cyclic shift.
        #[arg(long)]
        discordant: bool,
    },
    /// Seatings of n couples, seat by seat.
    Seatings {
        n: u64,
        /// Only valid ménage seatings.
        #[arg(long)]
        valid: bool,
    },
}

fn core_error<E: Write>(err: &mut E, e: menage_core::Error) -> io::Result<Exit> {
    writeln!(err, "error: {e}")?;
    Ok(match e {
        menage_core::Error::InexactDivision { .. } => Exit::CheckFailed,
        _ => Exit::Usage,
    })
}

fn oracle_error<E: Write>(err: &mut E, e: OracleError) -> io::Result<Exit> {
    writeln!(err, "error: {e}")?;
    Ok(Exit::Usage)
}

/// Runs a parsed command line, writing data to `out` and diagnostics,
/// warnings and timings to `err`.
pub fn run<O: Write, E: Write>(cli: Cli, out: &mut O, err: &mut E) -> io::Result<Exit> {
    match cli.command {
        Command::Count { kind, value, r } => count(kind, value, r, out, err),
        Command::Table {
            from,
            to,
            format,
            terms,
        } => table(from, to, format, terms, out, err),
        Command::Verify { max_n, suite } => {
            verify(max_n, suite.into(), &Formulas::standard(), out, err)
        }
        Command::Enumerate { what } => enumerate(what, out, err),
        Command::Bench { n } => bench(n, out, err),
    }
}

fn count<O: Write, E: Write>(
    kind: CountKind,
    value: u64,
    r: Option<u64>,
    out: &mut O,
    err: &mut E,
) -> io::Result<Exit> {
    let result = match (kind, r) {
        (CountKind::Menage, None) => menage_core::menage_count(value),
        (CountKind::Tait, None) => menage_core::tait_count(value),
        (CountKind::Dominos, Some(r)) => menage_core::domino_count(value, r),
        (CountKind::Dominos, None) => {
            writeln!(err, "error: count dominos requires a domino count r")?;
            return Ok(Exit::Usage);
        }
        (_, Some(_)) => {
            writeln!(err, "error: only count dominos takes a domino count r")?;
            return Ok(Exit::Usage);
        }
    };
    match result {
        Ok(v) => {
            writeln!(out, "{v}")?;
            Ok(Exit::Success)
        }
        Err(e) => core_error(err, e),
    }
}

fn table<O: Write, E: Write>(
    from: u64,
    to: u64,
    format: Format,
    terms: bool,
    out: &mut O,
    err: &mut E,
) -> io::Result<Exit> {
    if from < 2 || from > to {
        writeln!(
            err,
            "error: table needs 2 <= from <= to, got from = {from}, to = {to}"
        )?;
        return Ok(Exit::Usage);
    }
    let records = match build_records(from, to, terms) {
        Ok(r) => r,
        Err(e) => return core_error(err, e),
    };
    match format {
        Format::Text => write_text(out, &records)?,
        Format::Csv => write_csv(out, &records)?,
        Format::Json => write_json(out, &records)?,
    }
    Ok(Exit::Success)
}

/// The `verify` subcommand against an explicit formula table.
pub fn verify<O: Write, E: Write>(
    max_n: u64,
    suite: Suite,
    formulas: &Formulas,
    out: &mut O,
    err: &mut E,
) -> io::Result<Exit> {
    if max_n < 2 {
        writeln!(err, "error: verify needs max_n >= 2, got {max_n}")?;
        return Ok(Exit::Usage);
    }
    let report = verify::run(max_n, suite, formulas);
    for w in &report.warnings {
        writeln!(err, "{w}")?;
    }
    for c in &report.checks {
        writeln!(out, "{c}")?;
    }
    writeln!(out, "{}", report.summary())?;
    Ok(if report.all_passed() {
        Exit::Success
    } else {
        Exit::CheckFailed
    })
}

fn enumerate<O: Write, E: Write>(
    what: EnumerateWhat,
    out: &mut O,
    err: &mut E,
) -> io::Result<Exit> {
    match what {
        EnumerateWhat::Placements { m, r } => match enumerate_domino_placements(m, r) {
            Ok(all) => {
                for p in all {
                    writeln!(out, "{p}")?;
                }
            }
            Err(e) => return oracle_error(err, e),
        },
        EnumerateWhat::Permutations { n, discordant } => {
            if !(1..=9).contains(&n) {
                return oracle_error(
                    err,
                    OracleError::OutOfBounds {
                        what: "n",
                        value: n,
                        min: 1,
                        max: 9,
                    },
                );
            }
            for p in permutations(n as usize).filter(|p| !discordant || is_discordant(p)) {
                writeln!(out, "{p}")?;
            }
        }
        EnumerateWhat::Seatings { n, valid } => match seatings(n) {
            Ok(all) => {
                for s in all.filter(|s| !valid || is_valid_menage_seating(s)) {
                    writeln!(out, "{s}")?;
                }
            }
            Err(e) => return oracle_error(err, e),
        },
    }
    Ok(Exit::Success)
}

fn bench<O: Write, E: Write>(n: u64, out: &mut O, err: &mut E) -> io::Result<Exit> {
    let start = Instant::now();
    let incremental = match evaluate(n, EvaluationPath::Incremental) {
        Ok(e) => e,
        Err(e) => return core_error(err, e),
    };
    let incremental_time = start.elapsed();
    let start = Instant::now();
    let direct = match evaluate(n, EvaluationPath::Direct) {
        Ok(e) => e,
        Err(e) => return core_error(err, e),
    };
    let direct_time = start.elapsed();

    if incremental.value != direct.value {
        writeln!(
            err,
            "error: incremental and direct evaluations disagree at n = {n}"
        )?;
        return Ok(Exit::CheckFailed);
    }
    let digits = incremental.value.to_string().trim_start_matches('-').len();
    writeln!(
        out,
        "n = {n}: incremental and direct agree ({digits} decimal digits)"
    )?;
    for (label, ops) in [("incremental", incremental.ops), ("direct", direct.ops)] {
        writeln!(
            out,
            "{label}: {} multiplications, {} divisions, {} additions",
            ops.multiplications, ops.divisions, ops.additions
        )?;
    }
    writeln!(
        err,
        "incremental: {:.3} ms",
        incremental_time.as_secs_f64() * 1e3
    )?;
    writeln!(err, "direct: {:.3} ms", direct_time.as_secs_f64() * 1e3)?;
    Ok(Exit::Success)
}
