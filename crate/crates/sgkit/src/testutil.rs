//! Fixture tables shared by the unit tests.

use crate::table::CayleyTable;

/// Left zero semigroup on two elements: `a·b = a`.
pub fn l2() -> CayleyTable {
    CayleyTable::from_entries(2, &[0, 0, 1, 1]).unwrap().into_validated()
}

/// Right zero semigroup on two elements: `a·b = b`.
pub fn r2() -> CayleyTable {
    CayleyTable::from_entries(2, &[0, 1, 0, 1]).unwrap().into_validated()
}

/// The two-element group.
pub fn c2() -> CayleyTable {
    CayleyTable::from_entries(2, &[0, 1, 1, 0]).unwrap().into_validated()
}

/// The 2×2 rectangular band: rows {0,2} by columns {0,1}.
pub fn rb4() -> CayleyTable {
    CayleyTable::from_rows(&[
        vec![0, 1, 0, 1],
        vec![0, 1, 0, 1],
        vec![2, 3, 2, 3],
        vec![2, 3, 2, 3],
    ])
    .unwrap()
    .into_validated()
}

/// The right group C2 × R2; element `2g + r` is the pair `(g, r)`.
pub fn rg4() -> CayleyTable {
    let entries: Vec<usize> = (0..4)
        .flat_map(|i| (0..4).map(move |j| 2 * ((i / 2) ^ (j / 2)) + j % 2))
        .collect();
    CayleyTable::from_entries(4, &entries).unwrap().into_validated()
}

/// Meet semilattice on {0, 1} with bottom 0.
pub fn semilattice2() -> CayleyTable {
    CayleyTable::from_entries(2, &[0, 0, 0, 1]).unwrap().into_validated()
}
