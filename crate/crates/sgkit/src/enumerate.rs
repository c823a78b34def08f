//! Exhaustive enumeration of all labeled semigroups of a small order.
//!
//! Tables are filled cell by cell in row-major order; after each placement,
//! every product triple whose four lookups just became fully determined is
//! checked, and the branch is abandoned on the first failure. Complete tables
//! reaching the bottom of the search are therefore associative, and they are
//! produced in lexicographic entry order.

use std::time::{Duration, Instant};

use crate::error::Error;
use crate::table::CayleyTable;
use crate::theorems::{check_all_theorems, Violation};

/// Soft ceiling for enumeration; order 5 already takes a long breath
/// (183732 semigroups).
pub const MAX_ENUM_ORDER: usize = 5;

const UNSET: usize = usize::MAX;

/// Outcome of one enumeration run.
#[derive(Debug, Clone)]
pub struct EnumerationReport {
    pub order: usize,
    /// Number of associative tables produced.
    pub labeled_count: u64,
    /// Number of cell placements attempted: the size of the explored search
    /// tree, always at least `labeled_count`.
    pub tables_visited: u64,
    /// Failures reported by the claim suite, when it was run.
    pub violations: Vec<Violation>,
    pub elapsed: Duration,
}

impl EnumerationReport {
    fn new(order: usize) -> Self {
        EnumerationReport {
            order,
            labeled_count: 0,
            tables_visited: 0,
            violations: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    fn absorb(&mut self, other: EnumerationReport) {
        self.labeled_count += other.labeled_count;
        self.tables_visited += other.tables_visited;
        self.violations.extend(other.violations);
    }
}

fn require_order(n: usize) -> Result<(), Error> {
    if n == 0 || n > MAX_ENUM_ORDER {
        Err(Error::Order {
            order: n,
            max: MAX_ENUM_ORDER,
        })
    } else {
        Ok(())
    }
}

struct Search<'a, F: FnMut(&[usize])> {
    n: usize,
    table: Vec<usize>,
    attempts: u64,
    emit: &'a mut F,
}

impl<F: FnMut(&[usize])> Search<'_, F> {
    #[inline]
    fn get(&self, i: usize, j: usize) -> usize {
        self.table[i * self.n + j]
    }

    /// Checks every triple whose lookups all became defined when cell
    /// `idx = (i, j)` was set. Cells are filled in row-major order, so the
    /// defined cells are exactly the prefix `0..=idx`.
    fn consistent(&self, idx: usize) -> bool {
        let n = self.n;
        let i = idx / n;
        let j = idx % n;
        let v = self.table[idx];

        // New cell is (a, b) of the triple (i, j, c).
        for c in 0..n {
            let q = self.get(j, c);
            if q == UNSET {
                continue;
            }
            let left = self.get(v, c);
            let right = self.get(i, q);
            if left != UNSET && right != UNSET && left != right {
                return false;
            }
        }
        // New cell is (b, c) of the triple (a, i, j).
        for a in 0..n {
            let p = self.get(a, i);
            if p == UNSET {
                continue;
            }
            let left = self.get(p, j);
            let right = self.get(a, v);
            if left != UNSET && right != UNSET && left != right {
                return false;
            }
        }
        // New cell is (a·b, c): triples (a, b, j) with a·b = i.
        for (cell, &value) in self.table[..=idx].iter().enumerate() {
            if value == i {
                let (a, b) = (cell / n, cell % n);
                let q = self.get(b, j);
                if q == UNSET {
                    continue;
                }
                let right = self.get(a, q);
                if right != UNSET && right != v {
                    return false;
                }
            }
        }
        // New cell is (a, b·c): triples (i, b, c) with b·c = j.
        for (cell, &value) in self.table[..=idx].iter().enumerate() {
            if value == j {
                let (b, c) = (cell / n, cell % n);
                let p = self.get(i, b);
                if p == UNSET {
                    continue;
                }
                let left = self.get(p, c);
                if left != UNSET && left != v {
                    return false;
                }
            }
        }
        true
    }

    fn run(&mut self, idx: usize, end: usize) {
        if idx == end {
            (self.emit)(&self.table);
            return;
        }
        for v in 0..self.n {
            self.table[idx] = v;
            self.attempts += 1;
            if self.consistent(idx) {
                self.run(idx + 1, end);
            }
        }
        self.table[idx] = UNSET;
    }
}

/// Visits every associative `n × n` table exactly once, in lexicographic
/// entry order.
pub fn enumerate_semigroups<F: FnMut(&CayleyTable)>(
    n: usize,
    mut visitor: F,
) -> Result<EnumerationReport, Error> {
    require_order(n)?;
    let started = Instant::now();
    let mut report = EnumerationReport::new(n);
    let mut emit = |entries: &[usize]| {
        report.labeled_count += 1;
        visitor(&CayleyTable::from_entries_trusted(n, entries));
    };
    let mut search = Search {
        n,
        table: vec![UNSET; n * n],
        attempts: 0,
        emit: &mut emit,
    };
    search.run(0, n * n);
    let attempts = search.attempts;
    report.tables_visited = attempts;
    report.elapsed = started.elapsed();
    Ok(report)
}

/// Number of labeled semigroups of order `n`.
pub fn count_semigroups(n: usize) -> Result<u64, Error> {
    Ok(enumerate_semigroups(n, |_| {})?.labeled_count)
}

/// All first rows extending to at least one partial placement that survives
/// the incremental checks; the branches of the search tree, in lexicographic
/// order. Useful for splitting a run across workers.
pub fn first_rows(n: usize) -> Result<Vec<Vec<usize>>, Error> {
    require_order(n)?;
    let mut rows = Vec::new();
    let mut emit = |entries: &[usize]| {
        rows.push(entries[..n].to_vec());
    };
    let mut search = Search {
        n,
        table: vec![UNSET; n * n],
        attempts: 0,
        emit: &mut emit,
    };
    search.run(0, n);
    Ok(rows)
}

/// Enumerates only the tables whose first row is exactly `first_row`.
pub fn enumerate_with_first_row<F: FnMut(&CayleyTable)>(
    n: usize,
    first_row: &[usize],
    mut visitor: F,
) -> Result<EnumerationReport, Error> {
    require_order(n)?;
    if first_row.len() != n {
        return Err(Error::EntryCount {
            expected: n,
            got: first_row.len(),
        });
    }
    let started = Instant::now();
    let mut report = EnumerationReport::new(n);

    let mut emit = |entries: &[usize]| {
        report.labeled_count += 1;
        visitor(&CayleyTable::from_entries_trusted(n, entries));
    };
    let mut search = Search {
        n,
        table: vec![UNSET; n * n],
        attempts: 0,
        emit: &mut emit,
    };
    let mut viable = true;
    for (idx, &value) in first_row.iter().enumerate() {
        if value >= n {
            return Err(Error::EntryRange {
                row: 0,
                col: idx,
                value,
                order: n,
            });
        }
        search.table[idx] = value;
        search.attempts += 1;
        if !search.consistent(idx) {
            viable = false;
            break;
        }
    }
    if viable {
        search.run(n, n * n);
    }
    let attempts = search.attempts;
    report.tables_visited = attempts;
    report.elapsed = started.elapsed();
    Ok(report)
}

/// Runs the full claim suite over every semigroup of order `n`, splitting the
/// branches across `jobs` worker threads. Violations are merged and sorted
/// by table entries.
pub fn enumerate_and_check(n: usize, jobs: usize) -> Result<EnumerationReport, Error> {
    require_order(n)?;
    let started = Instant::now();
    let branches = first_rows(n)?;
    let jobs = jobs.max(1).min(branches.len().max(1));

    let check_branch = |row: &[usize]| -> Result<EnumerationReport, Error> {
        let mut violations = Vec::new();
        let mut report = enumerate_with_first_row(n, row, |table| {
            violations.extend(
                check_all_theorems(table)
                    .expect("enumerated table must be associative"),
            );
        })?;
        report.violations = violations;
        Ok(report)
    };

    let mut merged = EnumerationReport::new(n);
    if jobs == 1 {
        for row in &branches {
            merged.absorb(check_branch(row)?);
        }
    } else {
        let results: Vec<Result<EnumerationReport, Error>> = std::thread::scope(|scope| {
            let check_branch = &check_branch;
            let mut handles = Vec::new();
            for worker in 0..jobs {
                let branches = &branches;
                handles.push(scope.spawn(move || {
                    let mut local = EnumerationReport::new(n);
                    for row in branches.iter().skip(worker).step_by(jobs) {
                        local.absorb(check_branch(row)?);
                    }
                    Ok(local)
                }));
            }
            handles
                .into_iter()
                .map(|h| h.join().expect("enumeration worker panicked"))
                .collect()
        });
        for result in results {
            merged.absorb(result?);
        }
    }
    merged
        .violations
        .sort_by_key(|v| (v.table.entries().collect::<Vec<_>>(), v.theorem));
    merged.elapsed = started.elapsed();
    Ok(merged)
}
