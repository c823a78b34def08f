//! Analysis of finite semigroups presented as Cayley tables.
//!
//! The toolkit is organized around one-sided identity and zero sets: for a
//! subset `A`, `lidentity(A)` collects the elements acting as a left identity
//! on every member of `A`, and `lzero(A)` the elements absorbed on the left
//! by every member, with right-handed duals. Around each idempotent these
//! sets cut out canonical maximal subsemigroups — the maximum left/right zero
//! subsemigroups `LZ(e)` and `RZ(e)`, the local monoid `eSe` with its group
//! of units `H(e)`, and the maximum right/left subgroups `RG(e) = H(e)·RZ(e)`
//! and `LG(e) = LZ(e)·H(e)` — and parametrize every rectangular band or
//! right/left group subsemigroup through that idempotent.
//!
//! - [`table`]: Cayley tables, associativity checking, global predicates;
//! - [`setops`]: the four one-sided identity/zero sets;
//! - [`structure`]: idempotent-centered subsemigroups and partitions;
//! - [`factor`]: factorizations and their exhaustive enumeration;
//! - [`theorems`]: the claim suite run against concrete tables;
//! - [`enumerate`]: exhaustive generation of all small semigroups.

pub mod error;
pub mod set;
pub mod table;

pub mod setops;

pub mod factor;
pub mod structure;

pub mod enumerate;
pub mod theorems;

#[cfg(test)]
mod testutil;

pub use error::Error;
pub use set::ElementSet;
pub use table::{AssocStatus, AssocWitness, CayleyTable, MAX_ORDER};

pub use structure::{IdempotentProfile, Partition, PartitionKind};

pub use factor::{FactorKind, Factorization};

pub use enumerate::EnumerationReport;
pub use theorems::{TheoremId, Violation};
