//! Finite magmas and semigroups as Cayley tables.
//!
//! A table of order `n` stores the product `i·j` for all `i, j` in `[0, n)`.
//! Associativity is tracked as a tri-state: freshly built tables are
//! unchecked, [`CayleyTable::into_validated`] runs the full cubic scan and
//! records either validity or the lexicographically first violating triple.

use std::fmt;

use crate::error::Error;
use crate::set::ElementSet;

/// Hard cap on table order; guards the cubic scans against accidental blowups.
pub const MAX_ORDER: usize = 4096;

/// A triple `(i, j, k)` with `(i·j)·k ≠ i·(j·k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AssocWitness {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

impl fmt::Display for AssocWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({i}·{j})·{k} ≠ {i}·({j}·{k})",
            i = self.i,
            j = self.j,
            k = self.k
        )
    }
}

/// Associativity as recorded on a table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AssocStatus {
    Unchecked,
    Valid,
    Invalid(AssocWitness),
}

/// An order-`n` multiplication table over the elements `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CayleyTable {
    order: usize,
    entries: Vec<u16>,
    status: AssocStatusInner,
}

// AssocStatus minus the witness payload is what Hash/Eq should ignore: two
// tables with identical entries are the same table regardless of whether one
// has been validated yet.
#[derive(Clone, Copy)]
struct AssocStatusInner(AssocStatus);

impl PartialEq for AssocStatusInner {
    fn eq(&self, _: &Self) -> bool {
        true
    }
}
impl Eq for AssocStatusInner {}
impl std::hash::Hash for AssocStatusInner {
    fn hash<H: std::hash::Hasher>(&self, _: &mut H) {}
}

impl CayleyTable {
    /// Builds a table from row-major entries. Entries are range-checked;
    /// associativity is left unchecked.
    pub fn from_entries(order: usize, entries: &[usize]) -> Result<Self, Error> {
        if order == 0 || order > MAX_ORDER {
            return Err(Error::Order {
                order,
                max: MAX_ORDER,
            });
        }
        if entries.len() != order * order {
            return Err(Error::EntryCount {
                expected: order * order,
                got: entries.len(),
            });
        }
        let mut packed = Vec::with_capacity(entries.len());
        for (pos, &value) in entries.iter().enumerate() {
            if value >= order {
                return Err(Error::EntryRange {
                    row: pos / order,
                    col: pos % order,
                    value,
                    order,
                });
            }
            packed.push(value as u16);
        }
        Ok(CayleyTable {
            order,
            entries: packed,
            status: AssocStatusInner(AssocStatus::Unchecked),
        })
    }

    /// Convenience constructor from rows.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self, Error> {
        let flat: Vec<usize> = rows.iter().flatten().copied().collect();
        CayleyTable::from_entries(rows.len(), &flat)
    }

    /// Used by the enumerator, whose incremental pruning already certifies
    /// associativity.
    pub(crate) fn from_entries_trusted(order: usize, entries: &[usize]) -> Self {
        let table = CayleyTable {
            order,
            entries: entries.iter().map(|&v| v as u16).collect(),
            status: AssocStatusInner(AssocStatus::Valid),
        };
        debug_assert!(table.check_associativity().is_ok());
        table
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The product `i·j`.
    #[inline]
    pub fn product(&self, i: usize, j: usize) -> usize {
        self.entries[i * self.order + j] as usize
    }

    /// Row-major entries.
    pub fn entries(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.iter().map(|&v| v as usize)
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.product(i, j)).collect())
            .collect()
    }

    /// The full element set `[0, n)`.
    pub fn universe(&self) -> ElementSet {
        ElementSet::full(self.order)
    }

    pub fn status(&self) -> AssocStatus {
        self.status.0
    }

    /// Full cubic scan. Returns the lexicographically first violating triple.
    pub fn check_associativity(&self) -> Result<(), AssocWitness> {
        let n = self.order;
        for i in 0..n {
            for j in 0..n {
                let ij = self.product(i, j);
                for k in 0..n {
                    if self.product(ij, k) != self.product(i, self.product(j, k)) {
                        return Err(AssocWitness { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    /// Runs the associativity scan and records the outcome on the table.
    pub fn into_validated(mut self) -> Self {
        self.status = AssocStatusInner(match self.check_associativity() {
            Ok(()) => AssocStatus::Valid,
            Err(w) => AssocStatus::Invalid(w),
        });
        self
    }

    /// Errors unless the table is associative. Unchecked tables are scanned
    /// on the fly (the result is not cached; use [`into_validated`] to pay
    /// the cost once).
    ///
    /// [`into_validated`]: CayleyTable::into_validated
    pub fn require_associative(&self) -> Result<(), Error> {
        match self.status.0 {
            AssocStatus::Valid => Ok(()),
            AssocStatus::Invalid(witness) => Err(Error::NotAssociative { witness }),
            AssocStatus::Unchecked => self
                .check_associativity()
                .map_err(|witness| Error::NotAssociative { witness }),
        }
    }

    pub fn require_element(&self, element: usize) -> Result<(), Error> {
        if element < self.order {
            Ok(())
        } else {
            Err(Error::ElementRange {
                element,
                order: self.order,
            })
        }
    }

    fn require_universe(&self, set: &ElementSet) -> Result<(), Error> {
        if set.universe() == self.order {
            Ok(())
        } else {
            Err(Error::UniverseMismatch {
                expected: self.order,
                got: set.universe(),
            })
        }
    }

    /// `{ x·y : x ∈ a, y ∈ b }`. Empty if either factor is empty.
    pub fn product_sets(&self, a: &ElementSet, b: &ElementSet) -> Result<ElementSet, Error> {
        self.require_universe(a)?;
        self.require_universe(b)?;
        let mut out = ElementSet::empty(self.order);
        for x in a.iter() {
            for y in b.iter() {
                out.insert(self.product(x, y));
            }
        }
        Ok(out)
    }

    /// Smallest product-closed superset of `a`: the subsemigroup generated
    /// by `a` when the table is associative, the generated submagma
    /// otherwise.
    pub fn closure(&self, a: &ElementSet) -> Result<ElementSet, Error> {
        self.require_universe(a)?;
        if a.is_empty() {
            return Err(Error::EmptySet);
        }
        let mut closed = a.clone();
        let mut frontier = a.clone();
        while !frontier.is_empty() {
            let mut fresh = ElementSet::empty(self.order);
            for x in frontier.iter() {
                for y in closed.iter() {
                    fresh.insert(self.product(x, y));
                    fresh.insert(self.product(y, x));
                }
            }
            frontier = fresh.difference(&closed);
            closed = closed.union(&frontier);
        }
        Ok(closed)
    }

    /// Whether `a` is closed under the product. The empty set is vacuously
    /// closed.
    pub fn is_subsemigroup(&self, a: &ElementSet) -> bool {
        a.iter()
            .all(|x| a.iter().all(|y| a.contains(self.product(x, y))))
    }

    /// The table restricted to `set`, relabeled to `0..set.len()` in
    /// ascending member order. Errors if `set` is empty or not closed.
    pub fn induced(&self, set: &ElementSet) -> Result<CayleyTable, Error> {
        self.require_universe(set)?;
        if set.is_empty() {
            return Err(Error::EmptySet);
        }
        let members = set.to_vec();
        let mut relabel = vec![usize::MAX; self.order];
        for (new, &old) in members.iter().enumerate() {
            relabel[old] = new;
        }
        let mut entries = Vec::with_capacity(members.len() * members.len());
        for &x in &members {
            for &y in &members {
                let p = self.product(x, y);
                if !set.contains(p) {
                    return Err(Error::NotClosed);
                }
                entries.push(relabel[p]);
            }
        }
        CayleyTable::from_entries(members.len(), &entries)
    }

    pub fn is_idempotent(&self, e: usize) -> bool {
        e < self.order && self.product(e, e) == e
    }

    /// `e·e = e` for every element.
    pub fn is_band(&self) -> bool {
        (0..self.order).all(|e| self.is_idempotent(e))
    }

    /// `a·b = a` for all `a, b`.
    pub fn is_left_zero(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.product(a, b) == a))
    }

    /// `a·b = b` for all `a, b`.
    pub fn is_right_zero(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.product(a, b) == b))
    }

    /// `a·x = a·y ⇒ x = y`: every row is injective.
    pub fn is_left_cancellative(&self) -> bool {
        (0..self.order).all(|a| {
            let mut seen = ElementSet::empty(self.order);
            for x in 0..self.order {
                let p = self.product(a, x);
                if seen.contains(p) {
                    return false;
                }
                seen.insert(p);
            }
            true
        })
    }

    /// `x·a = y·a ⇒ x = y`: every column is injective.
    pub fn is_right_cancellative(&self) -> bool {
        (0..self.order).all(|a| {
            let mut seen = ElementSet::empty(self.order);
            for x in 0..self.order {
                let p = self.product(x, a);
                if seen.contains(p) {
                    return false;
                }
                seen.insert(p);
            }
            true
        })
    }

    /// `a·S = S` for every `a`.
    pub fn is_right_simple(&self) -> bool {
        (0..self.order).all(|a| {
            let mut row = ElementSet::empty(self.order);
            for x in 0..self.order {
                row.insert(self.product(a, x));
            }
            row.len() == self.order
        })
    }

    /// `S·a = S` for every `a`.
    pub fn is_left_simple(&self) -> bool {
        (0..self.order).all(|a| {
            let mut col = ElementSet::empty(self.order);
            for x in 0..self.order {
                col.insert(self.product(x, a));
            }
            col.len() == self.order
        })
    }

    /// Left cancellative and right simple.
    pub fn is_right_group(&self) -> bool {
        self.is_left_cancellative() && self.is_right_simple()
    }

    /// Right cancellative and left simple.
    pub fn is_left_group(&self) -> bool {
        self.is_right_cancellative() && self.is_left_simple()
    }

    /// `a·b·a = a` for all `a, b`. Requires an associative table and
    /// cross-checks the three equivalent characterizations: the defining
    /// equation, the band condition with `ab=b ⇔ ba=a`, and
    /// `lidentity(a) = rzero(a) ≠ ∅` per element. Disagreement between them
    /// on a semigroup is an implementation bug and is reported as
    /// [`Error::Inconsistency`].
    pub fn is_rectangular_band(&self) -> Result<bool, Error> {
        self.require_associative()?;
        let n = self.order;

        let by_equation = (0..n)
            .all(|a| (0..n).all(|b| self.product(self.product(a, b), a) == a));

        let by_band_swap = self.is_band()
            && (0..n).all(|a| {
                (0..n).all(|b| (self.product(a, b) == b) == (self.product(b, a) == a))
            });

        let by_sets = (0..n).all(|a| {
            let lid: Vec<bool> = (0..n).map(|b| self.product(b, a) == a).collect();
            let rz: Vec<bool> = (0..n).map(|b| self.product(a, b) == b).collect();
            lid == rz && lid.iter().any(|&m| m)
        });

        if by_equation != by_band_swap || by_equation != by_sets {
            return Err(Error::Inconsistency(format!(
                "rectangular band characterizations disagree: equation={by_equation}, \
                 band+swap={by_band_swap}, sets={by_sets}"
            )));
        }
        Ok(by_equation)
    }
}

impl fmt::Display for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.order {
            for j in 0..self.order {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.product(i, j))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl fmt::Debug for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CayleyTable(order {}) [", self.order)?;
        for i in 0..self.order {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.order {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.product(i, j))?;
            }
        }
        write!(f, "]")
    }
}
