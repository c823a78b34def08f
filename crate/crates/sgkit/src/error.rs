use thiserror::Error;

use crate::table::AssocWitness;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order {order} is out of range (must be in 1..={max})")]
    Order { order: usize, max: usize },

    #[error("expected {expected} table entries, got {got}")]
    EntryCount { expected: usize, got: usize },

    #[error("entry {value} at row {row}, column {col} is out of range for order {order}")]
    EntryRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },

    #[error("element {element} is out of range for order {order}")]
    ElementRange { element: usize, order: usize },

    #[error("set universe {got} does not match expected universe {expected}")]
    UniverseMismatch { expected: usize, got: usize },

    #[error("operation rejects the empty set")]
    EmptySet,

    #[error("table is not associative: {witness}")]
    NotAssociative { witness: AssocWitness },

    #[error("element {element} is not an idempotent")]
    NotIdempotent { element: usize },

    #[error("table has no idempotent")]
    NoIdempotent,

    #[error("element {element} is not a member of the given set")]
    NotInSet { element: usize },

    #[error("the given subset is not closed under the table product")]
    NotClosed,

    #[error("the given subset is not a rectangular band subsemigroup")]
    NotRectangularBand,

    #[error("enumeration would visit {required} candidate pairs, above the budget of {budget}")]
    PairBudget { required: u128, budget: u128 },

    #[error("subgroup enumeration refused: |H(e)| = {size} exceeds the bound {bound}")]
    SubgroupBound { size: usize, bound: usize },

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}
