//! One-sided identity and zero sets of a nonempty subset.
//!
//! For a subset `A` of the table's elements:
//!
//! - `left_identity_set(A)  = { b : b·a = a  for all a ∈ A }`
//! - `right_identity_set(A) = { b : a·b = a  for all a ∈ A }`
//! - `left_zero_set(A)      = { b : b·a = b  for all a ∈ A }`
//! - `right_zero_set(A)     = { b : a·b = b  for all a ∈ A }`
//!
//! All four reject empty input: the vacuous answer would be all of `S`, which
//! silently poisons downstream intersections.

use crate::error::Error;
use crate::set::ElementSet;
use crate::table::CayleyTable;

fn collect<F: Fn(usize, usize) -> bool>(
    table: &CayleyTable,
    a: &ElementSet,
    holds: F,
) -> Result<ElementSet, Error> {
    if a.universe() != table.order() {
        return Err(Error::UniverseMismatch {
            expected: table.order(),
            got: a.universe(),
        });
    }
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut out = ElementSet::empty(table.order());
    for b in 0..table.order() {
        if a.iter().all(|x| holds(b, x)) {
            out.insert(b);
        }
    }
    Ok(out)
}

/// `{ b : b·a = a for all a ∈ A }`. May be empty.
pub fn left_identity_set(table: &CayleyTable, a: &ElementSet) -> Result<ElementSet, Error> {
    collect(table, a, |b, x| table.product(b, x) == x)
}

/// `{ b : a·b = a for all a ∈ A }`. May be empty.
pub fn right_identity_set(table: &CayleyTable, a: &ElementSet) -> Result<ElementSet, Error> {
    collect(table, a, |b, x| table.product(x, b) == x)
}

/// `{ b : b·a = b for all a ∈ A }`. May be empty.
pub fn left_zero_set(table: &CayleyTable, a: &ElementSet) -> Result<ElementSet, Error> {
    collect(table, a, |b, x| table.product(b, x) == b)
}

/// `{ b : a·b = b for all a ∈ A }`. May be empty.
pub fn right_zero_set(table: &CayleyTable, a: &ElementSet) -> Result<ElementSet, Error> {
    collect(table, a, |b, x| table.product(x, b) == b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{c2, l2, r2, rb4};

    fn set(universe: usize, members: &[usize]) -> ElementSet {
        ElementSet::from_members(universe, members.iter().copied())
    }

    #[test]
    fn left_identity_examples() {
        // L2: b·0 = b, so only 0 fixes 0.
        assert_eq!(
            left_identity_set(&l2(), &set(2, &[0])).unwrap(),
            set(2, &[0])
        );
        // R2: b·a = a always, so every element is a left identity of S.
        assert_eq!(
            left_identity_set(&r2(), &set(2, &[0, 1])).unwrap(),
            set(2, &[0, 1])
        );
        // RB4: rows whose column-0 entry is 0.
        assert_eq!(
            left_identity_set(&rb4(), &set(4, &[0])).unwrap(),
            set(4, &[0, 1])
        );
    }

    #[test]
    fn zero_set_examples() {
        let l2 = l2();
        let s = set(2, &[0, 1]);
        // b·a = b is the left-zero law itself; a·b = b forces a = b.
        assert_eq!(left_zero_set(&l2, &s).unwrap(), s);
        assert!(right_zero_set(&l2, &s).unwrap().is_empty());

        // C2: 0 is the identity, so 0·b = b for every b.
        assert_eq!(
            right_zero_set(&c2(), &set(2, &[0])).unwrap(),
            set(2, &[0, 1])
        );

        // RB4: row 0 reads 0 1 0 1.
        assert_eq!(
            right_zero_set(&rb4(), &set(4, &[0])).unwrap(),
            set(4, &[0, 1])
        );
    }

    #[test]
    fn empty_input_is_rejected() {
        let t = l2();
        let empty = ElementSet::empty(2);
        assert_eq!(left_identity_set(&t, &empty), Err(Error::EmptySet));
        assert_eq!(right_zero_set(&t, &empty), Err(Error::EmptySet));
    }

    #[test]
    fn universe_mismatch_is_rejected() {
        let t = l2();
        let bad = ElementSet::singleton(3, 0);
        assert!(matches!(
            left_zero_set(&t, &bad),
            Err(Error::UniverseMismatch { .. })
        ));
    }

    #[test]
    fn antitone_in_the_argument() {
        let t = rb4();
        let small = set(4, &[0]);
        let large = set(4, &[0, 2]);
        let lid_small = left_identity_set(&t, &small).unwrap();
        let lid_large = left_identity_set(&t, &large).unwrap();
        assert!(lid_large.is_subset(&lid_small));
    }
}
