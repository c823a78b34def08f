//! Idempotent-centered structure: the maximum subsemigroups having a given
//! idempotent as a one- or two-sided identity or zero, the maximum left/right
//! zero subsemigroups LZ(e) and RZ(e), the induced partitions of the element
//! set, and the maximal subgroup H(e).
//!
//! Everything here is a theorem about semigroups, so every operation requires
//! an associative table and an idempotent anchor.

use std::fmt;

use crate::error::Error;
use crate::factor;
use crate::set::ElementSet;
use crate::setops;
use crate::table::CayleyTable;

/// `{ e : e·e = e }`.
pub fn idempotents(table: &CayleyTable) -> ElementSet {
    ElementSet::from_members(
        table.order(),
        (0..table.order()).filter(|&e| table.is_idempotent(e)),
    )
}

pub(crate) fn require_idempotent(table: &CayleyTable, e: usize) -> Result<(), Error> {
    table.require_element(e)?;
    if table.is_idempotent(e) {
        Ok(())
    } else {
        Err(Error::NotIdempotent { element: e })
    }
}

fn anchor(table: &CayleyTable, e: usize) -> Result<ElementSet, Error> {
    table.require_associative()?;
    require_idempotent(table, e)?;
    Ok(ElementSet::singleton(table.order(), e))
}

/// `lzero(e) = Se`: the maximum subsemigroup containing `e` as a right
/// identity.
pub fn max_right_identity_subsemigroup(
    table: &CayleyTable,
    e: usize,
) -> Result<ElementSet, Error> {
    let single = anchor(table, e)?;
    let lzero = setops::left_zero_set(table, &single)?;
    let se = table.product_sets(&table.universe(), &single)?;
    if lzero != se {
        return Err(Error::Inconsistency(format!(
            "lzero({e}) = {lzero} but Se = {se}"
        )));
    }
    Ok(lzero)
}

/// `rzero(e) = eS`: the maximum subsemigroup containing `e` as a left
/// identity.
pub fn max_left_identity_subsemigroup(
    table: &CayleyTable,
    e: usize,
) -> Result<ElementSet, Error> {
    let single = anchor(table, e)?;
    let rzero = setops::right_zero_set(table, &single)?;
    let es = table.product_sets(&single, &table.universe())?;
    if rzero != es {
        return Err(Error::Inconsistency(format!(
            "rzero({e}) = {rzero} but eS = {es}"
        )));
    }
    Ok(rzero)
}

/// `lzero(e) ∩ rzero(e) = eSe`: the maximum subsemigroup containing `e` as
/// its identity.
pub fn local_monoid(table: &CayleyTable, e: usize) -> Result<ElementSet, Error> {
    let single = anchor(table, e)?;
    let both = setops::left_zero_set(table, &single)?
        .intersection(&setops::right_zero_set(table, &single)?);
    let ese = ElementSet::from_members(
        table.order(),
        (0..table.order()).map(|x| table.product(table.product(e, x), e)),
    );
    if both != ese {
        return Err(Error::Inconsistency(format!(
            "lzero({e}) ∩ rzero({e}) = {both} but eSe = {ese}"
        )));
    }
    Ok(both)
}

/// `lidentity(e) ∩ ridentity(e)`: the maximum subsemigroup containing `e` as
/// its zero.
pub fn zero_maximal_subsemigroup(table: &CayleyTable, e: usize) -> Result<ElementSet, Error> {
    let single = anchor(table, e)?;
    Ok(setops::left_identity_set(table, &single)?
        .intersection(&setops::right_identity_set(table, &single)?))
}

/// `LZ(e) = ridentity(e) ∩ lzero(e)`: the maximum left zero subsemigroup
/// containing `e`.
pub fn max_left_zero(table: &CayleyTable, e: usize) -> Result<ElementSet, Error> {
    let single = anchor(table, e)?;
    Ok(setops::right_identity_set(table, &single)?
        .intersection(&setops::left_zero_set(table, &single)?))
}

/// `RZ(e) = lidentity(e) ∩ rzero(e)`: the maximum right zero subsemigroup
/// containing `e`.
pub fn max_right_zero(table: &CayleyTable, e: usize) -> Result<ElementSet, Error> {
    let single = anchor(table, e)?;
    Ok(setops::left_identity_set(table, &single)?
        .intersection(&setops::right_zero_set(table, &single)?))
}

/// `H(e)`: the units of the local monoid `eSe`, i.e. the maximal subgroup of
/// the table whose identity is `e`.
pub fn max_subgroup(table: &CayleyTable, e: usize) -> Result<ElementSet, Error> {
    let ese = local_monoid(table, e)?;
    let mut units = ElementSet::empty(table.order());
    for x in ese.iter() {
        let invertible = ese
            .iter()
            .any(|y| table.product(x, y) == e && table.product(y, x) == e);
        if invertible {
            units.insert(x);
        }
    }
    Ok(units)
}

/// Which family of maximal one-sided zero subsemigroups a partition is
/// built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionKind {
    LeftZero,
    RightZero,
}

impl fmt::Display for PartitionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionKind::LeftZero => write!(f, "LZ"),
            PartitionKind::RightZero => write!(f, "RZ"),
        }
    }
}

/// A partition of the element set into the maximal left (or right) zero
/// subsemigroups plus one class collecting all non-idempotents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    kind: PartitionKind,
    classes: Vec<ElementSet>,
    non_idempotents: ElementSet,
}

impl Partition {
    pub fn kind(&self) -> PartitionKind {
        self.kind
    }

    /// The maximal one-sided zero classes, ordered by least member.
    pub fn classes(&self) -> &[ElementSet] {
        &self.classes
    }

    /// The class of non-idempotents; empty when the table is a band.
    pub fn non_idempotents(&self) -> &ElementSet {
        &self.non_idempotents
    }

    /// All classes including the non-idempotent one (listed last, omitted
    /// when empty).
    pub fn all_classes(&self) -> Vec<&ElementSet> {
        let mut all: Vec<&ElementSet> = self.classes.iter().collect();
        if !self.non_idempotents.is_empty() {
            all.push(&self.non_idempotents);
        }
        all
    }

    /// Disjointness and coverage of `[0, n)`.
    pub fn is_partition_of(&self, n: usize) -> bool {
        let classes = self.all_classes();
        let mut seen = ElementSet::empty(n);
        for class in &classes {
            if class.universe() != n || !seen.is_disjoint(class) {
                return false;
            }
            seen = seen.union(class);
        }
        seen == ElementSet::full(n)
    }
}

fn zero_partition(
    table: &CayleyTable,
    kind: PartitionKind,
    class_of: impl Fn(&CayleyTable, usize) -> Result<ElementSet, Error>,
) -> Result<Partition, Error> {
    table.require_associative()?;
    let idem = idempotents(table);
    let mut classes: Vec<ElementSet> = Vec::new();
    for e in idem.iter() {
        let class = class_of(table, e)?;
        if !classes.contains(&class) {
            classes.push(class);
        }
    }
    classes.sort_by_key(|c| c.min());

    // The overlap theorem: classes of two idempotents either coincide or are
    // disjoint, depending on the pairwise products.
    for e in idem.iter() {
        for f in idem.iter() {
            let ce = class_of(table, e)?;
            let cf = class_of(table, f)?;
            let products = match kind {
                PartitionKind::LeftZero => {
                    table.product(e, f) == e && table.product(f, e) == f
                }
                PartitionKind::RightZero => {
                    table.product(e, f) == f && table.product(f, e) == e
                }
            };
            let consistent = if products {
                ce == cf
            } else {
                ce.is_disjoint(&cf)
            };
            if !consistent {
                return Err(Error::Inconsistency(format!(
                    "{kind} overlap criterion fails at idempotents {e}, {f}"
                )));
            }
        }
    }

    let partition = Partition {
        kind,
        classes,
        non_idempotents: idem.complement(),
    };
    if !partition.is_partition_of(table.order()) {
        return Err(Error::Inconsistency(format!(
            "{kind} classes do not partition the element set"
        )));
    }
    Ok(partition)
}

/// The partition of the element set into maximal left zero subsemigroups
/// plus the non-idempotents.
pub fn lz_partition(table: &CayleyTable) -> Result<Partition, Error> {
    zero_partition(table, PartitionKind::LeftZero, max_left_zero)
}

/// The partition into maximal right zero subsemigroups plus the
/// non-idempotents.
pub fn rz_partition(table: &CayleyTable) -> Result<Partition, Error> {
    zero_partition(table, PartitionKind::RightZero, max_right_zero)
}

/// Everything this module and [`crate::factor`] compute for one idempotent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdempotentProfile {
    pub e: usize,
    /// Maximum left zero subsemigroup containing `e`.
    pub lz: ElementSet,
    /// Maximum right zero subsemigroup containing `e`.
    pub rz: ElementSet,
    /// `eSe`, the maximum subsemigroup with `e` as identity.
    pub local_monoid: ElementSet,
    /// `Se`, the maximum subsemigroup with `e` as right identity.
    pub left_monoid: ElementSet,
    /// `eS`, the maximum subsemigroup with `e` as left identity.
    pub right_monoid: ElementSet,
    /// Maximum subsemigroup with `e` as zero.
    pub zero_maximal: ElementSet,
    /// `H(e)`, the maximal subgroup with identity `e`.
    pub h: ElementSet,
    /// `RG(e) = H(e)·RZ(e)`, the maximum right subgroup containing `e`.
    pub rg: ElementSet,
    /// `LG(e) = LZ(e)·H(e)`, the maximum left subgroup containing `e`.
    pub lg: ElementSet,
}

impl IdempotentProfile {
    pub fn compute(table: &CayleyTable, e: usize) -> Result<Self, Error> {
        Ok(IdempotentProfile {
            e,
            lz: max_left_zero(table, e)?,
            rz: max_right_zero(table, e)?,
            local_monoid: local_monoid(table, e)?,
            left_monoid: max_right_identity_subsemigroup(table, e)?,
            right_monoid: max_left_identity_subsemigroup(table, e)?,
            zero_maximal: zero_maximal_subsemigroup(table, e)?,
            h: max_subgroup(table, e)?,
            rg: factor::max_right_subgroup(table, e)?,
            lg: factor::max_left_subgroup(table, e)?,
        })
    }
}

/// Profiles for every idempotent, in ascending index order.
pub fn idempotent_profiles(table: &CayleyTable) -> Result<Vec<IdempotentProfile>, Error> {
    table.require_associative()?;
    idempotents(table)
        .iter()
        .map(|e| IdempotentProfile::compute(table, e))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{c2, l2, rb4, rg4, semilattice2};

    fn set(universe: usize, members: &[usize]) -> ElementSet {
        ElementSet::from_members(universe, members.iter().copied())
    }

    #[test]
    fn idempotent_examples() {
        assert_eq!(idempotents(&l2()), set(2, &[0, 1]));
        assert_eq!(idempotents(&c2()), set(2, &[0]));
        // C2 × R2: exactly the pairs with group coordinate 0.
        assert_eq!(idempotents(&rg4()), set(4, &[0, 1]));
    }

    #[test]
    fn right_identity_maximal_subsemigroup() {
        assert_eq!(
            max_right_identity_subsemigroup(&c2(), 0).unwrap(),
            set(2, &[0, 1])
        );
        assert_eq!(
            max_right_identity_subsemigroup(&rb4(), 0).unwrap(),
            set(4, &[0, 2])
        );
        assert_eq!(
            max_right_identity_subsemigroup(&l2(), 0).unwrap(),
            set(2, &[0, 1])
        );
    }

    #[test]
    fn local_monoid_examples() {
        assert_eq!(local_monoid(&c2(), 0).unwrap(), set(2, &[0, 1]));
        assert_eq!(local_monoid(&rb4(), 0).unwrap(), set(4, &[0]));
        assert_eq!(local_monoid(&rg4(), 0).unwrap(), set(4, &[0, 2]));
    }

    #[test]
    fn zero_maximal_examples() {
        assert_eq!(zero_maximal_subsemigroup(&c2(), 0).unwrap(), set(2, &[0]));
        assert_eq!(zero_maximal_subsemigroup(&l2(), 0).unwrap(), set(2, &[0]));
        assert_eq!(
            zero_maximal_subsemigroup(&semilattice2(), 0).unwrap(),
            set(2, &[0, 1])
        );
    }

    #[test]
    fn lz_rz_examples() {
        assert_eq!(max_left_zero(&l2(), 0).unwrap(), set(2, &[0, 1]));
        assert_eq!(max_right_zero(&l2(), 0).unwrap(), set(2, &[0]));

        assert_eq!(max_left_zero(&rb4(), 0).unwrap(), set(4, &[0, 2]));
        assert_eq!(max_right_zero(&rb4(), 0).unwrap(), set(4, &[0, 1]));

        assert_eq!(max_left_zero(&c2(), 0).unwrap(), set(2, &[0]));
        assert_eq!(max_right_zero(&c2(), 0).unwrap(), set(2, &[0]));
    }

    #[test]
    fn lz_rz_induce_one_sided_zero_subtables() {
        let t = rb4();
        let lz = max_left_zero(&t, 0).unwrap();
        let rz = max_right_zero(&t, 0).unwrap();
        assert!(t.induced(&lz).unwrap().is_left_zero());
        assert!(t.induced(&rz).unwrap().is_right_zero());
    }

    #[test]
    fn partition_examples() {
        let p = lz_partition(&l2()).unwrap();
        assert_eq!(p.classes(), &[set(2, &[0, 1])]);
        assert!(p.non_idempotents().is_empty());
        let p = rz_partition(&l2()).unwrap();
        assert_eq!(p.classes(), &[set(2, &[0]), set(2, &[1])]);

        let p = lz_partition(&c2()).unwrap();
        assert_eq!(p.classes(), &[set(2, &[0])]);
        assert_eq!(p.non_idempotents(), &set(2, &[1]));
        assert_eq!(p.all_classes().len(), 2);

        let p = lz_partition(&rb4()).unwrap();
        assert_eq!(p.classes(), &[set(4, &[0, 2]), set(4, &[1, 3])]);
        let p = rz_partition(&rb4()).unwrap();
        assert_eq!(p.classes(), &[set(4, &[0, 1]), set(4, &[2, 3])]);
        assert!(p.is_partition_of(4));
    }

    #[test]
    fn max_subgroup_examples() {
        assert_eq!(max_subgroup(&c2(), 0).unwrap(), set(2, &[0, 1]));
        assert_eq!(max_subgroup(&rb4(), 0).unwrap(), set(4, &[0]));
        assert_eq!(max_subgroup(&rg4(), 0).unwrap(), set(4, &[0, 2]));
    }

    #[test]
    fn non_idempotent_anchor_is_rejected() {
        let t = c2();
        assert_eq!(
            max_left_zero(&t, 1),
            Err(Error::NotIdempotent { element: 1 })
        );
        assert!(matches!(
            local_monoid(&t, 7),
            Err(Error::ElementRange { .. })
        ));
    }

    #[test]
    fn profile_collects_all_fields() {
        let t = rg4();
        let profiles = idempotent_profiles(&t).unwrap();
        assert_eq!(profiles.len(), 2);
        let p = &profiles[0];
        assert_eq!(p.e, 0);
        assert_eq!(p.h, set(4, &[0, 2]));
        assert_eq!(p.rz, set(4, &[0, 1]));
        assert_eq!(p.rg, set(4, &[0, 1, 2, 3]));
        for field in [
            &p.lz,
            &p.rz,
            &p.local_monoid,
            &p.left_monoid,
            &p.right_monoid,
            &p.zero_maximal,
            &p.h,
            &p.rg,
            &p.lg,
        ] {
            assert!(field.contains(p.e), "e must belong to every field");
        }
    }
}
