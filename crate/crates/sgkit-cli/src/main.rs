//! Command-line front end: parse Cayley table files, validate and analyze
//! them, factorize through idempotents, and enumerate small semigroups.
//!
//! Exit codes: 0 success, 1 domain failure (non-associative table, theorem
//! violations, impossible factorization), 2 usage or parse error.

mod document;
mod parse;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Mutex;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use sgkit::enumerate::{enumerate_with_first_row, first_rows, MAX_ENUM_ORDER};
use sgkit::factor::{self, FactorKind, Factorization};
use sgkit::structure;
use sgkit::table::{AssocStatus, CayleyTable};
use sgkit::theorems::{check_all_theorems, registered_theorems, Violation};

use document::AnalysisDocument;
use parse::{parse_table_file, FileError};
use render::{factorization_line, render_analysis};

#[derive(Parser)]
#[command(name = "sgkit", version, about = "Finite semigroup analysis toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check associativity; exit 0 iff the table is a semigroup.
    Validate { file: PathBuf },

    /// Full structural analysis of one table.
    Analyze {
        file: PathBuf,
        /// Emit the machine-readable document instead of text.
        #[arg(long)]
        json: bool,
        /// Include all factorization enumerations in the report.
        #[arg(long)]
        factorizations: bool,
    },

    /// Factorize the table (or all its subsemigroups) through an idempotent.
    Factorize {
        file: PathBuf,
        /// The anchor idempotent.
        #[arg(long)]
        e: usize,
        #[arg(long, value_enum)]
        kind: Kind,
        /// List every subsemigroup factorization of this kind through e,
        /// instead of factorizing the whole table.
        #[arg(long)]
        enumerate: bool,
    },

    /// Enumerate all semigroups of a given order.
    Enumerate {
        #[arg(long)]
        order: usize,
        /// Print only the count.
        #[arg(long, conflicts_with = "check_theorems")]
        count_only: bool,
        /// Run the full claim suite over every enumerated semigroup.
        #[arg(long)]
        check_theorems: bool,
        /// Worker threads (branches split by first row).
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Permit the long order-5 run.
        #[arg(long)]
        allow_slow: bool,
    },

    /// Run the claim suite against one table; exit 0 iff no violations.
    Check { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Rect,
    RightGroup,
    LeftGroup,
}

#[derive(Debug, Error)]
enum CmdError {
    #[error("{0}")]
    File(#[from] FileError),
    #[error("{0}")]
    Domain(#[from] sgkit::Error),
    #[error("{0}")]
    Failure(String),
    #[error("{0}")]
    Usage(String),
}

impl CmdError {
    fn exit_code(&self) -> ExitCode {
        match self {
            CmdError::File(_) | CmdError::Usage(_) => ExitCode::from(2),
            CmdError::Domain(_) | CmdError::Failure(_) => ExitCode::from(1),
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CmdError> {
    match cli.command {
        Command::Validate { file } => cmd_validate(&file),
        Command::Analyze {
            file,
            json,
            factorizations,
        } => cmd_analyze(&file, json, factorizations),
        Command::Factorize {
            file,
            e,
            kind,
            enumerate,
        } => cmd_factorize(&file, e, kind, enumerate),
        Command::Enumerate {
            order,
            count_only,
            check_theorems,
            jobs,
            allow_slow,
        } => cmd_enumerate(order, count_only, check_theorems, jobs, allow_slow),
        Command::Check { file } => cmd_check(&file),
    }
}

fn cmd_validate(file: &PathBuf) -> Result<ExitCode, CmdError> {
    let table = parse_table_file(file)?;
    match table.status() {
        AssocStatus::Valid => {
            println!("associative");
            Ok(ExitCode::SUCCESS)
        }
        AssocStatus::Invalid(w) => {
            let left = table.product(table.product(w.i, w.j), w.k);
            let right = table.product(w.i, table.product(w.j, w.k));
            println!(
                "not associative: ({i}·{j})·{k} = {left} but {i}·({j}·{k}) = {right}",
                i = w.i,
                j = w.j,
                k = w.k
            );
            Ok(ExitCode::from(1))
        }
        AssocStatus::Unchecked => unreachable!("parser validates the table"),
    }
}

fn cmd_analyze(file: &PathBuf, json: bool, factorizations: bool) -> Result<ExitCode, CmdError> {
    let table = parse_table_file(file)?;
    let doc = AnalysisDocument::build(&table, factorizations)?;
    if json {
        print!("{}", doc.to_json());
    } else {
        print!("{}", render_analysis(&doc));
    }
    if matches!(table.status(), AssocStatus::Valid) {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn cmd_factorize(
    file: &PathBuf,
    e: usize,
    kind: Kind,
    enumerate: bool,
) -> Result<ExitCode, CmdError> {
    let table = parse_table_file(file)?;
    if enumerate {
        let list = match kind {
            Kind::Rect => factor::enumerate_rect_bands(&table, e)?,
            Kind::RightGroup => factor::enumerate_right_subgroups(&table, e)?,
            Kind::LeftGroup => factor::enumerate_left_subgroups(&table, e)?,
        };
        let name = match kind {
            Kind::Rect => "rect-band",
            Kind::RightGroup => "right-group",
            Kind::LeftGroup => "left-group",
        };
        println!("{name} factorizations through e = {e}: {}", list.len());
        for f in &list {
            println!("{}", factorization_line(f));
        }
        Ok(ExitCode::SUCCESS)
    } else {
        let f = whole_table_factorization(&table, e, kind)?;
        println!("{}", factorization_line(&f));
        Ok(ExitCode::SUCCESS)
    }
}

/// Factorizes all of `S` at `e`: `(Se)(eS)` for a rectangular band,
/// `H(e)·RZ(e)` for a right group, `LZ(e)·H(e)` for a left group.
fn whole_table_factorization(
    table: &CayleyTable,
    e: usize,
    kind: Kind,
) -> Result<Factorization, CmdError> {
    table.require_associative()?;
    match kind {
        Kind::Rect => {
            if !table.is_rectangular_band()? {
                return Err(CmdError::Failure(
                    "table is not a rectangular band; use --enumerate to list rectangular \
                     band subsemigroups through e"
                        .to_string(),
                ));
            }
            Ok(factor::rect_band_factorize(table, &table.universe(), e)?)
        }
        Kind::RightGroup => {
            if !table.is_right_group() {
                return Err(CmdError::Failure(
                    "table is not a right group; use --enumerate to list right subgroups \
                     through e"
                        .to_string(),
                ));
            }
            let left = structure::max_subgroup(table, e)?;
            let right = structure::max_right_zero(table, e)?;
            let product = table.product_sets(&left, &right)?;
            Ok(Factorization {
                kind: FactorKind::RightGroup,
                left,
                right,
                product,
                anchor: e,
            })
        }
        Kind::LeftGroup => {
            if !table.is_left_group() {
                return Err(CmdError::Failure(
                    "table is not a left group; use --enumerate to list left subgroups \
                     through e"
                        .to_string(),
                ));
            }
            let left = structure::max_left_zero(table, e)?;
            let right = structure::max_subgroup(table, e)?;
            let product = table.product_sets(&left, &right)?;
            Ok(Factorization {
                kind: FactorKind::LeftGroup,
                left,
                right,
                product,
                anchor: e,
            })
        }
    }
}

fn cmd_enumerate(
    order: usize,
    count_only: bool,
    check_theorems: bool,
    jobs: usize,
    allow_slow: bool,
) -> Result<ExitCode, CmdError> {
    if order == MAX_ENUM_ORDER && !allow_slow {
        return Err(CmdError::Usage(format!(
            "order {MAX_ENUM_ORDER} enumerates 183732 semigroups; pass --allow-slow to run it"
        )));
    }
    let branches = first_rows(order)?;
    let jobs = jobs.max(1).min(branches.len().max(1));

    struct Progress {
        done: usize,
        count: u64,
    }
    let progress = Mutex::new(Progress { done: 0, count: 0 });
    let total_branches = branches.len();

    let run_branch = |row: &Vec<usize>| -> Result<(u64, Vec<Violation>), CmdError> {
        let mut violations = Vec::new();
        let report = enumerate_with_first_row(order, row, |table| {
            if check_theorems {
                violations.extend(
                    check_all_theorems(table).expect("enumerated table must be associative"),
                );
            }
        })?;
        if !count_only {
            let mut progress = progress.lock().expect("progress lock");
            progress.done += 1;
            progress.count += report.labeled_count;
            eprintln!(
                "first row {row:?}: {} semigroups ({} so far, branch {}/{total_branches})",
                report.labeled_count, progress.count, progress.done
            );
        }
        Ok((report.labeled_count, violations))
    };

    let mut total = 0u64;
    let mut violations: Vec<Violation> = Vec::new();
    if jobs == 1 {
        for row in &branches {
            let (count, mut branch_violations) = run_branch(row)?;
            total += count;
            violations.append(&mut branch_violations);
        }
    } else {
        let results: Vec<Result<(u64, Vec<Violation>), CmdError>> =
            std::thread::scope(|scope| {
                let run_branch = &run_branch;
                let mut handles = Vec::new();
                for worker in 0..jobs {
                    let branches = &branches;
                    handles.push(scope.spawn(move || {
                        let mut subtotal = 0u64;
                        let mut collected = Vec::new();
                        for row in branches.iter().skip(worker).step_by(jobs) {
                            let (count, mut branch_violations) = run_branch(row)?;
                            subtotal += count;
                            collected.append(&mut branch_violations);
                        }
                        Ok((subtotal, collected))
                    }));
                }
                handles
                    .into_iter()
                    .map(|h| h.join().expect("enumeration worker panicked"))
                    .collect()
            });
        for result in results {
            let (count, mut branch_violations) = result?;
            total += count;
            violations.append(&mut branch_violations);
        }
    }

    if count_only {
        println!("{total}");
        return Ok(ExitCode::SUCCESS);
    }

    println!("order {order}: {total} semigroups");
    if check_theorems {
        violations.sort_by_key(|v| (v.table.entries().collect::<Vec<_>>(), v.theorem));
        for violation in &violations {
            println!("{violation}");
        }
        println!("violations: {}", violations.len());
        if !violations.is_empty() {
            return Ok(ExitCode::from(1));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_check(file: &PathBuf) -> Result<ExitCode, CmdError> {
    let table = parse_table_file(file)?;
    let violations = check_all_theorems(&table)?;
    println!("theorem checks: {}", registered_theorems().count());
    for violation in &violations {
        println!("{violation}");
    }
    println!("violations: {}", violations.len());
    if violations.is_empty() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}
