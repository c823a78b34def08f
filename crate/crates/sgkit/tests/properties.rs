//! Property tests for the set algebra and the subsemigroup operations,
//! sampling random semigroups from the exhaustive order ≤ 3 enumeration.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use proptest::prelude::*;

use sgkit::enumerate::enumerate_semigroups;
use sgkit::set::ElementSet;
use sgkit::setops;
use sgkit::table::CayleyTable;

fn semigroups() -> &'static Vec<CayleyTable> {
    static CACHE: OnceLock<Vec<CayleyTable>> = OnceLock::new();
    CACHE.get_or_init(|| {
        let mut tables = Vec::new();
        for n in 1..=3 {
            enumerate_semigroups(n, |t| tables.push(t.clone())).unwrap();
        }
        tables
    })
}

fn table_strategy() -> impl Strategy<Value = &'static CayleyTable> {
    (0..semigroups().len()).prop_map(|i| &semigroups()[i])
}

fn subset_of(table: &CayleyTable, mask: u16) -> ElementSet {
    let n = table.order();
    ElementSet::from_members(n, (0..n).filter(|&i| mask >> i & 1 == 1))
}

/// A left zero table of the given order: `i·j = i`.
fn left_zero_table(n: usize) -> CayleyTable {
    let entries: Vec<usize> = (0..n).flat_map(|i| std::iter::repeat_n(i, n)).collect();
    CayleyTable::from_entries(n, &entries).unwrap().into_validated()
}

/// A right zero table of the given order: `i·j = j`.
fn right_zero_table(n: usize) -> CayleyTable {
    let entries: Vec<usize> = (0..n).flat_map(|_| 0..n).collect();
    CayleyTable::from_entries(n, &entries).unwrap().into_validated()
}

proptest! {
    #[test]
    fn product_sets_is_monotone(table in table_strategy(), a in any::<u16>(), a2 in any::<u16>(), b in any::<u16>()) {
        let small = subset_of(table, a & a2);
        let large = subset_of(table, a);
        let other = subset_of(table, b);
        let p_small = table.product_sets(&small, &other).unwrap();
        let p_large = table.product_sets(&large, &other).unwrap();
        prop_assert!(p_small.is_subset(&p_large));
        let q_small = table.product_sets(&other, &small).unwrap();
        let q_large = table.product_sets(&other, &large).unwrap();
        prop_assert!(q_small.is_subset(&q_large));
    }

    #[test]
    fn product_sets_is_associative_on_semigroups(table in table_strategy(), a in any::<u16>(), b in any::<u16>(), c in any::<u16>()) {
        let a = subset_of(table, a);
        let b = subset_of(table, b);
        let c = subset_of(table, c);
        let bc = table.product_sets(&b, &c).unwrap();
        let ab = table.product_sets(&a, &b).unwrap();
        prop_assert_eq!(
            table.product_sets(&a, &bc).unwrap(),
            table.product_sets(&ab, &c).unwrap()
        );
    }

    #[test]
    fn closure_is_idempotent_and_closed(table in table_strategy(), mask in 1u16..) {
        let a = subset_of(table, mask);
        prop_assume!(!a.is_empty());
        let closed = table.closure(&a).unwrap();
        prop_assert!(a.is_subset(&closed));
        prop_assert!(table.is_subsemigroup(&closed));
        prop_assert_eq!(table.closure(&closed).unwrap(), closed);
    }

    #[test]
    fn one_sided_zero_product_laws(n in 1usize..8, a in any::<u16>(), b in any::<u16>()) {
        let lz = left_zero_table(n);
        let a_set = subset_of(&lz, a);
        let b_set = subset_of(&lz, b);
        prop_assume!(!a_set.is_empty() && !b_set.is_empty());
        // In a left zero semigroup AB = A; dually AB = B in a right zero one.
        prop_assert_eq!(lz.product_sets(&a_set, &b_set).unwrap(), a_set.clone());
        let rz = right_zero_table(n);
        prop_assert_eq!(rz.product_sets(&a_set, &b_set).unwrap(), b_set);
    }

    #[test]
    fn identity_sets_are_antitone(table in table_strategy(), a in 1u16.., extra in any::<u16>()) {
        let small = subset_of(table, a);
        let large = subset_of(table, a | extra);
        prop_assume!(!small.is_empty());
        let lid_small = setops::left_identity_set(table, &small).unwrap();
        let lid_large = setops::left_identity_set(table, &large).unwrap();
        prop_assert!(lid_large.is_subset(&lid_small));
        let rz_small = setops::right_zero_set(table, &small).unwrap();
        let rz_large = setops::right_zero_set(table, &large).unwrap();
        prop_assert!(rz_large.is_subset(&rz_small));
    }

    #[test]
    fn duality_on_random_pairs(table in table_strategy(), a in 1u16.., b in 1u16..) {
        let a = subset_of(table, a);
        let b = subset_of(table, b);
        prop_assume!(!a.is_empty() && !b.is_empty());
        let lid_a = setops::left_identity_set(table, &a).unwrap();
        let rz_b = setops::right_zero_set(table, &b).unwrap();
        prop_assert_eq!(b.is_subset(&lid_a), a.is_subset(&rz_b));
        let rid_a = setops::right_identity_set(table, &a).unwrap();
        let lz_b = setops::left_zero_set(table, &b).unwrap();
        prop_assert_eq!(b.is_subset(&rid_a), a.is_subset(&lz_b));
    }

    #[test]
    fn element_set_algebra_matches_btreeset(
        xs in proptest::collection::vec(0usize..24, 0..16),
        ys in proptest::collection::vec(0usize..24, 0..16),
    ) {
        let a = ElementSet::from_members(24, xs.iter().copied());
        let b = ElementSet::from_members(24, ys.iter().copied());
        let xs: BTreeSet<usize> = xs.into_iter().collect();
        let ys: BTreeSet<usize> = ys.into_iter().collect();

        prop_assert_eq!(a.to_vec(), xs.iter().copied().collect::<Vec<_>>());
        prop_assert_eq!(
            a.union(&b).to_vec(),
            xs.union(&ys).copied().collect::<Vec<_>>()
        );
        prop_assert_eq!(
            a.intersection(&b).to_vec(),
            xs.intersection(&ys).copied().collect::<Vec<_>>()
        );
        prop_assert_eq!(
            a.difference(&b).to_vec(),
            xs.difference(&ys).copied().collect::<Vec<_>>()
        );
        prop_assert_eq!(a.is_subset(&b), xs.is_subset(&ys));
        prop_assert_eq!(a.is_disjoint(&b), xs.is_disjoint(&ys));
        prop_assert_eq!(a.len(), xs.len());
    }
}
