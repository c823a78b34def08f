//! The claim suite: every structural statement the library is built on,
//! checked directly against a concrete semigroup.
//!
//! [`check_all_theorems`] evaluates each registered claim on one associative
//! table and returns structured witnesses for any failure. On a correct
//! implementation the result is always empty; a violation means either a bug
//! here or a genuinely non-associative input sneaking past validation.
//!
//! Claims quantified over all subsets or subset pairs are checked
//! exhaustively for small orders (all pairs up to order 10, all anchored
//! subsets up to order 12) and over a restricted deterministic family above
//! that.

use std::fmt;

use crate::error::Error;
use crate::factor;
use crate::set::ElementSet;
use crate::setops;
use crate::structure;
use crate::table::CayleyTable;

/// Orders up to which subset-pair quantifications run over all pairs.
const EXHAUSTIVE_PAIR_ORDER: usize = 10;

/// Orders up to which anchored subset scans run over all subsets.
const EXHAUSTIVE_SUBSET_ORDER: usize = 12;

/// Identifies one registered claim family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum TheoremId {
    Duality,
    IdentitySetsAreSubsemigroups,
    ZeroSetsAreIdeals,
    GlobalCharacterizations,
    FirstIdempotentTheorem,
    SecondIdempotentTheorem,
    OneSidedZeroMaximality,
    LzRzOverlap,
    ZeroPartitions,
    RectBandEquivalence,
    RectBandFactorization,
    RectBandCorollary,
    RightSubgroupLemma,
    SubgroupMaximality,
    RightLeftGroupMaximality,
    RgLgOverlap,
    GroupCorollaries,
    AbsorptionIdentities,
}

impl TheoremId {
    pub fn slug(self) -> &'static str {
        match self {
            TheoremId::Duality => "duality",
            TheoremId::IdentitySetsAreSubsemigroups => "identity-sets-are-subsemigroups",
            TheoremId::ZeroSetsAreIdeals => "zero-sets-are-ideals",
            TheoremId::GlobalCharacterizations => "global-characterizations",
            TheoremId::FirstIdempotentTheorem => "first-idempotent-theorem",
            TheoremId::SecondIdempotentTheorem => "second-idempotent-theorem",
            TheoremId::OneSidedZeroMaximality => "one-sided-zero-maximality",
            TheoremId::LzRzOverlap => "lz-rz-overlap",
            TheoremId::ZeroPartitions => "zero-partitions",
            TheoremId::RectBandEquivalence => "rect-band-equivalence",
            TheoremId::RectBandFactorization => "rect-band-factorization",
            TheoremId::RectBandCorollary => "rect-band-corollary",
            TheoremId::RightSubgroupLemma => "right-subgroup-lemma",
            TheoremId::SubgroupMaximality => "subgroup-maximality",
            TheoremId::RightLeftGroupMaximality => "right-left-group-maximality",
            TheoremId::RgLgOverlap => "rg-lg-overlap",
            TheoremId::GroupCorollaries => "group-corollaries",
            TheoremId::AbsorptionIdentities => "absorption-identities",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.slug())
    }
}

/// A failed claim on a concrete table.
#[derive(Debug, Clone)]
pub struct Violation {
    pub table: CayleyTable,
    pub theorem: TheoremId,
    pub witness: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} violated on {:?}: {}",
            self.theorem, self.table, self.witness
        )
    }
}

struct Reporter<'a> {
    table: &'a CayleyTable,
    violations: Vec<Violation>,
}

impl Reporter<'_> {
    fn fail(&mut self, theorem: TheoremId, witness: String) {
        self.violations.push(Violation {
            table: self.table.clone(),
            theorem,
            witness,
        });
    }

    fn check(&mut self, theorem: TheoremId, holds: bool, witness: impl Fn() -> String) {
        if !holds {
            self.fail(theorem, witness());
        }
    }

    /// Internal errors (inconsistencies, refused enumerations) become
    /// violations rather than aborting the suite.
    fn expect<T>(&mut self, theorem: TheoremId, result: Result<T, Error>) -> Option<T> {
        match result {
            Ok(value) => Some(value),
            Err(err) => {
                self.fail(theorem, format!("operation failed: {err}"));
                None
            }
        }
    }
}

type Check = fn(&CayleyTable, &mut Reporter);

const CHECKS: &[(TheoremId, Check)] = &[
    (TheoremId::Duality, check_duality),
    (
        TheoremId::IdentitySetsAreSubsemigroups,
        check_identity_sets_are_subsemigroups,
    ),
    (TheoremId::ZeroSetsAreIdeals, check_zero_sets_are_ideals),
    (
        TheoremId::GlobalCharacterizations,
        check_global_characterizations,
    ),
    (TheoremId::FirstIdempotentTheorem, check_first_idempotent),
    (TheoremId::SecondIdempotentTheorem, check_second_idempotent),
    (
        TheoremId::OneSidedZeroMaximality,
        check_one_sided_zero_maximality,
    ),
    (TheoremId::LzRzOverlap, check_lz_rz_overlap),
    (TheoremId::ZeroPartitions, check_zero_partitions),
    (TheoremId::RectBandEquivalence, check_rect_band_equivalence),
    (
        TheoremId::RectBandFactorization,
        check_rect_band_factorization,
    ),
    (TheoremId::RectBandCorollary, check_rect_band_corollary),
    (TheoremId::RightSubgroupLemma, check_right_subgroup_lemma),
    (TheoremId::SubgroupMaximality, check_subgroup_maximality),
    (
        TheoremId::RightLeftGroupMaximality,
        check_right_left_group_maximality,
    ),
    (TheoremId::RgLgOverlap, check_rg_lg_overlap),
    (TheoremId::GroupCorollaries, check_group_corollaries),
    (TheoremId::AbsorptionIdentities, check_absorption_identities),
];

/// The claims [`check_all_theorems`] runs, in execution order.
pub fn registered_theorems() -> impl Iterator<Item = TheoremId> {
    CHECKS.iter().map(|(id, _)| *id)
}

/// Runs every registered claim against an associative table.
pub fn check_all_theorems(table: &CayleyTable) -> Result<Vec<Violation>, Error> {
    table.require_associative()?;
    let mut reporter = Reporter {
        table,
        violations: Vec::new(),
    };
    for (_, check) in CHECKS {
        check(table, &mut reporter);
    }
    Ok(reporter.violations)
}

/// The subset family used for subset-quantified claims: all nonempty subsets
/// for small orders, a deterministic restricted family otherwise.
fn quantifier_subsets(table: &CayleyTable) -> Vec<ElementSet> {
    let n = table.order();
    if n <= EXHAUSTIVE_PAIR_ORDER {
        (1u32..1 << n)
            .map(|mask| {
                ElementSet::from_members(n, (0..n).filter(|&i| mask >> i & 1 == 1))
            })
            .collect()
    } else {
        let mut subsets: Vec<ElementSet> =
            (0..n).map(|i| ElementSet::singleton(n, i)).collect();
        subsets.push(ElementSet::full(n));
        for e in structure::idempotents(table).iter() {
            for set in [
                structure::max_left_zero(table, e),
                structure::max_right_zero(table, e),
                structure::local_monoid(table, e),
            ]
            .into_iter()
            .flatten()
            {
                if !subsets.contains(&set) && !set.is_empty() {
                    subsets.push(set);
                }
            }
        }
        subsets
    }
}

/// All subsets containing `e`, or `None` above the exhaustive-scan bound.
fn anchored_subsets(table: &CayleyTable, e: usize) -> Option<Vec<ElementSet>> {
    if table.order() > EXHAUSTIVE_SUBSET_ORDER {
        return None;
    }
    Some(table.universe().subsets_containing(e).collect())
}

fn check_duality(table: &CayleyTable, r: &mut Reporter) {
    let subsets = quantifier_subsets(table);
    let lid: Vec<ElementSet> = subsets
        .iter()
        .map(|a| setops::left_identity_set(table, a).unwrap())
        .collect();
    let rid: Vec<ElementSet> = subsets
        .iter()
        .map(|a| setops::right_identity_set(table, a).unwrap())
        .collect();
    let lzero: Vec<ElementSet> = subsets
        .iter()
        .map(|a| setops::left_zero_set(table, a).unwrap())
        .collect();
    let rzero: Vec<ElementSet> = subsets
        .iter()
        .map(|a| setops::right_zero_set(table, a).unwrap())
        .collect();

    for (ia, a) in subsets.iter().enumerate() {
        for (ib, b) in subsets.iter().enumerate() {
            r.check(
                TheoremId::Duality,
                b.is_subset(&lid[ia]) == a.is_subset(&rzero[ib]),
                || format!("B ⊆ lidentity(A) ⇎ A ⊆ rzero(B) for A = {a}, B = {b}"),
            );
            r.check(
                TheoremId::Duality,
                b.is_subset(&rid[ia]) == a.is_subset(&lzero[ib]),
                || format!("B ⊆ ridentity(A) ⇎ A ⊆ lzero(B) for A = {a}, B = {b}"),
            );
        }
    }
}

fn check_identity_sets_are_subsemigroups(table: &CayleyTable, r: &mut Reporter) {
    for a in quantifier_subsets(table) {
        let lid = setops::left_identity_set(table, &a).unwrap();
        if !lid.is_empty() {
            r.check(
                TheoremId::IdentitySetsAreSubsemigroups,
                table.is_subsemigroup(&lid),
                || format!("lidentity({a}) = {lid} is not a subsemigroup"),
            );
        }
        let rid = setops::right_identity_set(table, &a).unwrap();
        if !rid.is_empty() {
            r.check(
                TheoremId::IdentitySetsAreSubsemigroups,
                table.is_subsemigroup(&rid),
                || format!("ridentity({a}) = {rid} is not a subsemigroup"),
            );
        }
    }
}

fn check_zero_sets_are_ideals(table: &CayleyTable, r: &mut Reporter) {
    let s = table.universe();
    for a in quantifier_subsets(table) {
        let lzero = setops::left_zero_set(table, &a).unwrap();
        if !lzero.is_empty() {
            let absorbed = table.product_sets(&s, &lzero).unwrap();
            r.check(
                TheoremId::ZeroSetsAreIdeals,
                absorbed.is_subset(&lzero),
                || format!("S·lzero({a}) = {absorbed} escapes lzero({a}) = {lzero}"),
            );
        }
        let rzero = setops::right_zero_set(table, &a).unwrap();
        if !rzero.is_empty() {
            let absorbed = table.product_sets(&rzero, &s).unwrap();
            r.check(
                TheoremId::ZeroSetsAreIdeals,
                absorbed.is_subset(&rzero),
                || format!("rzero({a})·S = {absorbed} escapes rzero({a}) = {rzero}"),
            );
        }
    }
}

fn check_global_characterizations(table: &CayleyTable, r: &mut Reporter) {
    let n = table.order();
    let id = TheoremId::GlobalCharacterizations;
    let s = table.universe();
    let lid_s = setops::left_identity_set(table, &s).unwrap();
    let rid_s = setops::right_identity_set(table, &s).unwrap();
    let lzero_s = setops::left_zero_set(table, &s).unwrap();
    let rzero_s = setops::right_zero_set(table, &s).unwrap();

    for e in 0..n {
        let single = ElementSet::singleton(n, e);
        let idem = table.is_idempotent(e);
        let lid_e = setops::left_identity_set(table, &single).unwrap();
        let rid_e = setops::right_identity_set(table, &single).unwrap();
        let lzero_e = setops::left_zero_set(table, &single).unwrap();
        let rzero_e = setops::right_zero_set(table, &single).unwrap();

        for (name, set) in [
            ("lidentity", &lid_e),
            ("ridentity", &rid_e),
            ("lzero", &lzero_e),
            ("rzero", &rzero_e),
        ] {
            r.check(id, set.contains(e) == idem, || {
                format!("{e} ∈ {name}({e}) disagrees with idempotency")
            });
        }

        let left_identity = (0..n).all(|x| table.product(e, x) == x);
        r.check(id, left_identity == lid_s.contains(e), || {
            format!("left identity {e} vs membership in lidentity(S)")
        });
        r.check(id, left_identity == (rzero_e == s), || {
            format!("left identity {e} vs rzero({e}) = S")
        });

        let right_identity = (0..n).all(|x| table.product(x, e) == x);
        r.check(id, right_identity == rid_s.contains(e), || {
            format!("right identity {e} vs membership in ridentity(S)")
        });
        r.check(id, right_identity == (lzero_e == s), || {
            format!("right identity {e} vs lzero({e}) = S")
        });

        let left_zero = (0..n).all(|x| table.product(e, x) == e);
        r.check(id, left_zero == (rid_e == s), || {
            format!("left zero {e} vs ridentity({e}) = S")
        });
        r.check(id, left_zero == lzero_s.contains(e), || {
            format!("left zero {e} vs membership in lzero(S)")
        });

        let right_zero = (0..n).all(|x| table.product(x, e) == e);
        r.check(id, right_zero == (lid_e == s), || {
            format!("right zero {e} vs lidentity({e}) = S")
        });
        r.check(id, right_zero == rzero_s.contains(e), || {
            format!("right zero {e} vs membership in rzero(S)")
        });
    }

    r.check(id, (lid_s == s) == table.is_right_zero(), || {
        "lidentity(S) = S vs right zero semigroup".to_string()
    });
    r.check(id, (rzero_s == s) == table.is_right_zero(), || {
        "rzero(S) = S vs right zero semigroup".to_string()
    });
    r.check(id, (rid_s == s) == table.is_left_zero(), || {
        "ridentity(S) = S vs left zero semigroup".to_string()
    });
    r.check(id, (lzero_s == s) == table.is_left_zero(), || {
        "lzero(S) = S vs left zero semigroup".to_string()
    });

    // Two-sided identities and zeros.
    let identities = lid_s.intersection(&rid_s);
    let has_identity =
        (0..n).any(|e| (0..n).all(|x| table.product(e, x) == x && table.product(x, e) == x));
    r.check(id, !identities.is_empty() == has_identity, || {
        "lidentity(S) ∩ ridentity(S) vs existence of an identity".to_string()
    });
    if has_identity {
        r.check(id, identities.len() == 1, || {
            format!("identity is not unique: {identities}")
        });
        let e = identities.min().unwrap();
        let single = ElementSet::singleton(n, e);
        let lzero_e = setops::left_zero_set(table, &single).unwrap();
        let rzero_e = setops::right_zero_set(table, &single).unwrap();
        r.check(id, lzero_e == s && rzero_e == s, || {
            format!("identity {e}: lzero and rzero should be all of S")
        });
    }

    let zeros = lzero_s.intersection(&rzero_s);
    let has_zero =
        (0..n).any(|z| (0..n).all(|x| table.product(z, x) == z && table.product(x, z) == z));
    r.check(id, !zeros.is_empty() == has_zero, || {
        "lzero(S) ∩ rzero(S) vs existence of a zero".to_string()
    });
    if has_zero {
        r.check(id, zeros.len() == 1, || format!("zero is not unique: {zeros}"));
        let z = zeros.min().unwrap();
        let single = ElementSet::singleton(n, z);
        let lid_z = setops::left_identity_set(table, &single).unwrap();
        let rid_z = setops::right_identity_set(table, &single).unwrap();
        r.check(id, lid_z == s && rid_z == s, || {
            format!("zero {z}: lidentity and ridentity should be all of S")
        });
    }

    r.check(id, !lid_s.intersection(&lzero_s).is_empty() == (n == 1), || {
        "lidentity(S) ∩ lzero(S) nonempty iff trivial".to_string()
    });
    r.check(id, !rid_s.intersection(&rzero_s).is_empty() == (n == 1), || {
        "ridentity(S) ∩ rzero(S) nonempty iff trivial".to_string()
    });
    r.check(
        id,
        !lid_s.intersection(&rzero_s).is_empty() == table.is_right_zero(),
        || "lidentity(S) ∩ rzero(S) nonempty iff right zero semigroup".to_string(),
    );
    r.check(
        id,
        !rid_s.intersection(&lzero_s).is_empty() == table.is_left_zero(),
        || "ridentity(S) ∩ lzero(S) nonempty iff left zero semigroup".to_string(),
    );
}

fn check_first_idempotent(table: &CayleyTable, r: &mut Reporter) {
    let n = table.order();
    let id = TheoremId::FirstIdempotentTheorem;
    for e in 0..n {
        if !table.is_idempotent(e) {
            continue;
        }
        let single = ElementSet::singleton(n, e);
        let lid = setops::left_identity_set(table, &single).unwrap();
        r.check(id, table.is_subsemigroup(&lid), || {
            format!("lidentity({e}) = {lid} is not a subsemigroup")
        });
        r.check(
            id,
            lid.iter().all(|a| table.product(a, e) == e),
            || format!("e = {e} is not a right zero of lidentity({e})"),
        );

        let rid = setops::right_identity_set(table, &single).unwrap();
        r.check(id, table.is_subsemigroup(&rid), || {
            format!("ridentity({e}) = {rid} is not a subsemigroup")
        });
        r.check(
            id,
            rid.iter().all(|a| table.product(e, a) == e),
            || format!("e = {e} is not a left zero of ridentity({e})"),
        );

        let lzero = setops::left_zero_set(table, &single).unwrap();
        let se = table.product_sets(&table.universe(), &single).unwrap();
        r.check(id, lzero == se, || {
            format!("lzero({e}) = {lzero} differs from Se = {se}")
        });
        r.check(id, table.is_subsemigroup(&lzero), || {
            format!("lzero({e}) is not a subsemigroup")
        });
        r.check(
            id,
            lzero.iter().all(|a| table.product(a, e) == a),
            || format!("e = {e} is not a right identity of lzero({e})"),
        );

        let rzero = setops::right_zero_set(table, &single).unwrap();
        let es = table.product_sets(&single, &table.universe()).unwrap();
        r.check(id, rzero == es, || {
            format!("rzero({e}) = {rzero} differs from eS = {es}")
        });
        r.check(id, table.is_subsemigroup(&rzero), || {
            format!("rzero({e}) is not a subsemigroup")
        });
        r.check(
            id,
            rzero.iter().all(|a| table.product(e, a) == a),
            || format!("e = {e} is not a left identity of rzero({e})"),
        );
    }
}

fn check_second_idempotent(table: &CayleyTable, r: &mut Reporter) {
    let n = table.order();
    let id = TheoremId::SecondIdempotentTheorem;
    for e in 0..n {
        let single = ElementSet::singleton(n, e);
        let idem = table.is_idempotent(e);
        let lid = setops::left_identity_set(table, &single).unwrap();
        let rid = setops::right_identity_set(table, &single).unwrap();
        let lzero = setops::left_zero_set(table, &single).unwrap();
        let rzero = setops::right_zero_set(table, &single).unwrap();

        r.check(
            id,
            lid.intersection(&rid).contains(e) == idem,
            || format!("{e} ∈ lidentity ∩ ridentity disagrees with idempotency"),
        );
        r.check(
            id,
            lzero.intersection(&rzero).contains(e) == idem,
            || format!("{e} ∈ lzero ∩ rzero disagrees with idempotency"),
        );
        let expected_singleton = if idem {
            ElementSet::singleton(n, e)
        } else {
            ElementSet::empty(n)
        };
        r.check(
            id,
            lid.intersection(&lzero) == expected_singleton,
            || format!("lidentity({e}) ∩ lzero({e}) should be {expected_singleton}"),
        );
        r.check(
            id,
            rid.intersection(&rzero) == expected_singleton,
            || format!("ridentity({e}) ∩ rzero({e}) should be {expected_singleton}"),
        );
        r.check(
            id,
            !lid.intersection(&rzero).is_empty() == idem,
            || format!("lidentity({e}) ∩ rzero({e}) nonempty iff {e} idempotent"),
        );
        r.check(
            id,
            !rid.intersection(&lzero).is_empty() == idem,
            || format!("ridentity({e}) ∩ lzero({e}) nonempty iff {e} idempotent"),
        );

        if !idem {
            continue;
        }

        let zero_max = lid.intersection(&rid);
        r.check(id, table.is_subsemigroup(&zero_max), || {
            format!("lidentity({e}) ∩ ridentity({e}) is not a subsemigroup")
        });
        r.check(
            id,
            zero_max
                .iter()
                .all(|a| table.product(a, e) == e && table.product(e, a) == e),
            || format!("e = {e} is not the zero of its zero-maximal subsemigroup"),
        );

        let monoid = lzero.intersection(&rzero);
        let ese = ElementSet::from_members(
            n,
            (0..n).map(|x| table.product(table.product(e, x), e)),
        );
        r.check(id, monoid == ese, || {
            format!("lzero({e}) ∩ rzero({e}) = {monoid} differs from eSe = {ese}")
        });
        r.check(id, table.is_subsemigroup(&monoid), || {
            format!("eSe at {e} is not a subsemigroup")
        });
        r.check(
            id,
            monoid
                .iter()
                .all(|a| table.product(a, e) == a && table.product(e, a) == a),
            || format!("e = {e} is not the identity of eSe"),
        );

        let rz = lid.intersection(&rzero);
        r.check(
            id,
            rz.iter()
                .all(|a| rz.iter().all(|b| table.product(a, b) == b)),
            || format!("lidentity({e}) ∩ rzero({e}) is not a right zero semigroup"),
        );
        let lz = rid.intersection(&lzero);
        r.check(
            id,
            lz.iter()
                .all(|a| lz.iter().all(|b| table.product(a, b) == a)),
            || format!("ridentity({e}) ∩ lzero({e}) is not a left zero semigroup"),
        );
    }
}

fn check_one_sided_zero_maximality(table: &CayleyTable, r: &mut Reporter) {
    let id = TheoremId::OneSidedZeroMaximality;
    for e in structure::idempotents(table).iter() {
        let Some(lz) = r.expect(id, structure::max_left_zero(table, e)) else {
            continue;
        };
        let Some(rz) = r.expect(id, structure::max_right_zero(table, e)) else {
            continue;
        };
        r.check(id, lz.contains(e) && rz.contains(e), || {
            format!("LZ({e}) or RZ({e}) does not contain {e}")
        });
        r.check(
            id,
            lz.iter()
                .all(|a| lz.iter().all(|b| table.product(a, b) == a)),
            || format!("LZ({e}) = {lz} is not left zero"),
        );
        r.check(
            id,
            rz.iter()
                .all(|a| rz.iter().all(|b| table.product(a, b) == b)),
            || format!("RZ({e}) = {rz} is not right zero"),
        );

        if let Some(subsets) = anchored_subsets(table, e) {
            for t in &subsets {
                let left_zero = t
                    .iter()
                    .all(|a| t.iter().all(|b| table.product(a, b) == a));
                if t.is_subset(&lz) {
                    // Corollary: e ∈ T ⊆ LZ(e) makes T a left zero subsemigroup.
                    r.check(id, left_zero, || {
                        format!("subset {t} of LZ({e}) is not left zero")
                    });
                }
                if left_zero {
                    // Maximality: every left zero subsemigroup through e is inside LZ(e).
                    r.check(id, t.is_subset(&lz), || {
                        format!("left zero subsemigroup {t} escapes LZ({e}) = {lz}")
                    });
                }
                let right_zero = t
                    .iter()
                    .all(|a| t.iter().all(|b| table.product(a, b) == b));
                if t.is_subset(&rz) {
                    r.check(id, right_zero, || {
                        format!("subset {t} of RZ({e}) is not right zero")
                    });
                }
                if right_zero {
                    r.check(id, t.is_subset(&rz), || {
                        format!("right zero subsemigroup {t} escapes RZ({e}) = {rz}")
                    });
                }
            }
        }
    }
}

fn check_lz_rz_overlap(table: &CayleyTable, r: &mut Reporter) {
    let id = TheoremId::LzRzOverlap;
    let idem = structure::idempotents(table);
    for e in idem.iter() {
        for f in idem.iter() {
            let lz_e = structure::max_left_zero(table, e).unwrap();
            let lz_f = structure::max_left_zero(table, f).unwrap();
            let nonmpty = !lz_e.is_disjoint(&lz_f);
            let products = table.product(e, f) == e && table.product(f, e) == f;
            let equal = lz_e == lz_f;
            r.check(id, nonmpty == products && products == equal, || {
                format!(
                    "LZ chain breaks at ({e}, {f}): overlap={nonmpty}, products={products}, \
                     equal={equal}"
                )
            });

            let rz_e = structure::max_right_zero(table, e).unwrap();
            let rz_f = structure::max_right_zero(table, f).unwrap();
            let nonmpty = !rz_e.is_disjoint(&rz_f);
            let products = table.product(e, f) == f && table.product(f, e) == e;
            let equal = rz_e == rz_f;
            r.check(id, nonmpty == products && products == equal, || {
                format!(
                    "RZ chain breaks at ({e}, {f}): overlap={nonmpty}, products={products}, \
                     equal={equal}"
                )
            });
        }
    }
}

// x 𝓛𝓩 y iff ridentity(x) ∩ lzero(x) = ridentity(y) ∩ lzero(y), and dually.
fn lz_relation_class(table: &CayleyTable, x: usize) -> ElementSet {
    let single = ElementSet::singleton(table.order(), x);
    setops::right_identity_set(table, &single)
        .unwrap()
        .intersection(&setops::left_zero_set(table, &single).unwrap())
}

fn rz_relation_class(table: &CayleyTable, x: usize) -> ElementSet {
    let single = ElementSet::singleton(table.order(), x);
    setops::left_identity_set(table, &single)
        .unwrap()
        .intersection(&setops::right_zero_set(table, &single).unwrap())
}

fn check_zero_partitions(table: &CayleyTable, r: &mut Reporter) {
    let id = TheoremId::ZeroPartitions;
    let n = table.order();
    let cases: [(Result<structure::Partition, Error>, fn(&CayleyTable, usize) -> ElementSet);
        2] = [
        (structure::lz_partition(table), lz_relation_class),
        (structure::rz_partition(table), rz_relation_class),
    ];
    for (partition, relation_class) in cases {
        let Some(partition) = r.expect(id, partition) else {
            continue;
        };
        r.check(id, partition.is_partition_of(n), || {
            format!("{} classes do not partition the element set", partition.kind())
        });

        // Group elements by their defining relation class and compare with
        // the partition computed from the maximal subsemigroups.
        let mut grouped: Vec<(Vec<usize>, ElementSet)> = Vec::new();
        for x in 0..n {
            let key = relation_class(table, x).to_vec();
            match grouped.iter_mut().find(|(k, _)| *k == key) {
                Some((_, members)) => members.insert(x),
                None => grouped.push((key, ElementSet::singleton(n, x))),
            }
        }
        let mut expected: Vec<Vec<usize>> =
            grouped.into_iter().map(|(_, m)| m.to_vec()).collect();
        expected.sort();
        let mut actual: Vec<Vec<usize>> = partition
            .all_classes()
            .iter()
            .map(|c| c.to_vec())
            .collect();
        actual.sort();
        r.check(id, expected == actual, || {
            format!(
                "{} partition {actual:?} differs from relation classes {expected:?}",
                partition.kind()
            )
        });
    }
}

fn check_rect_band_equivalence(table: &CayleyTable, r: &mut Reporter) {
    let id = TheoremId::RectBandEquivalence;
    let n = table.order();
    let by_equation =
        (0..n).all(|a| (0..n).all(|b| table.product(table.product(a, b), a) == a));
    let by_band_swap = table.is_band()
        && (0..n).all(|a| {
            (0..n).all(|b| (table.product(a, b) == b) == (table.product(b, a) == a))
        });
    let by_sets = (0..n).all(|a| {
        let single = ElementSet::singleton(n, a);
        let lid = setops::left_identity_set(table, &single).unwrap();
        let rzero = setops::right_zero_set(table, &single).unwrap();
        lid == rzero && !lid.is_empty()
    });
    let by_sets_dual = (0..n).all(|a| {
        let single = ElementSet::singleton(n, a);
        let rid = setops::right_identity_set(table, &single).unwrap();
        let lzero = setops::left_zero_set(table, &single).unwrap();
        rid == lzero && !rid.is_empty()
    });
    let reported = r.expect(id, table.is_rectangular_band());
    r.check(
        id,
        by_equation == by_band_swap
            && by_equation == by_sets
            && by_equation == by_sets_dual
            && reported == Some(by_equation),
        || {
            format!(
                "characterizations disagree: equation={by_equation}, band+swap={by_band_swap}, \
                 sets={by_sets}, dual sets={by_sets_dual}, reported={reported:?}"
            )
        },
    );
}

/// Rect band subsemigroups containing `e`, found by definitional subset scan.
fn rect_band_subsets_through(table: &CayleyTable, e: usize) -> Option<Vec<ElementSet>> {
    let subsets = anchored_subsets(table, e)?;
    Some(
        subsets
            .into_iter()
            .filter(|t| {
                table.is_subsemigroup(t)
                    && t.iter().all(|a| {
                        t.iter()
                            .all(|b| table.product(table.product(a, b), a) == a)
                    })
            })
            .collect(),
    )
}

fn check_rect_band_factorization(table: &CayleyTable, r: &mut Reporter) {
    let id = TheoremId::RectBandFactorization;
    let n = table.order();
    for e in structure::idempotents(table).iter() {
        let Some(found) = rect_band_subsets_through(table, e) else {
            continue;
        };
        let Some(enumerated) = r.expect(id, factor::enumerate_rect_bands(table, e)) else {
            continue;
        };

        let mut enumerated_products: Vec<Vec<usize>> =
            enumerated.iter().map(|f| f.product.to_vec()).collect();
        let before = enumerated_products.len();
        enumerated_products.sort();
        enumerated_products.dedup();
        r.check(id, enumerated_products.len() == before, || {
            "distinct admissible pairs produced the same product".to_string()
        });

        let mut scanned: Vec<Vec<usize>> = found.iter().map(|t| t.to_vec()).collect();
        scanned.sort();
        r.check(id, enumerated_products == scanned, || {
            format!(
                "rect band subsemigroups through {e} differ: enumerated \
                 {enumerated_products:?}, scanned {scanned:?}"
            )
        });

        let single = ElementSet::singleton(n, e);
        for t in &found {
            match factor::rect_band_factorize(table, t, e) {
                Ok(f) => {
                    let te = table.product_sets(t, &single).unwrap();
                    let et = table.product_sets(&single, t).unwrap();
                    r.check(id, f.left == te && f.right == et, || {
                        format!("factorization of {t} at {e} is not (T·e, e·T)")
                    });
                    let matches = enumerated
                        .iter()
                        .filter(|g| g.product == *t)
                        .count();
                    r.check(id, matches == 1, || {
                        format!("{matches} admissible pairs produce {t} (expected exactly 1)")
                    });
                }
                Err(err) => r.fail(id, format!("factorizing {t} at {e} failed: {err}")),
            }
        }
    }
}

fn check_rect_band_corollary(table: &CayleyTable, r: &mut Reporter) {
    let id = TheoremId::RectBandCorollary;
    if table.is_rectangular_band() != Ok(true) {
        return;
    }
    let s = table.universe();
    for e in 0..table.order() {
        let single = ElementSet::singleton(table.order(), e);
        let se = table.product_sets(&s, &single).unwrap();
        let es = table.product_sets(&single, &s).unwrap();
        let lz = structure::max_left_zero(table, e).unwrap();
        let rz = structure::max_right_zero(table, e).unwrap();
        r.check(id, se == lz, || format!("Se = {se} differs from LZ({e}) = {lz}"));
        r.check(id, es == rz, || format!("eS = {es} differs from RZ({e}) = {rz}"));
        let recomposed = table.product_sets(&se, &es).unwrap();
        r.check(id, recomposed == s, || {
            format!("(Se)(eS) = {recomposed} is not all of S at e = {e}")
        });
        let collapsed = table.product_sets(&es, &se).unwrap();
        r.check(id, collapsed == single, || {
            format!("(eS)(Se) = {collapsed} is not {{{e}}}")
        });
    }
}

fn check_right_subgroup_lemma(table: &CayleyTable, r: &mut Reporter) {
    let id = TheoremId::RightSubgroupLemma;
    for e in structure::idempotents(table).iter() {
        let Some(right) = r.expect(id, factor::enumerate_right_subgroups(table, e)) else {
            continue;
        };
        for f in &right {
            let group = table
                .induced(&f.product)
                .map(|sub| sub.is_right_group())
                .unwrap_or(false);
            r.check(id, group, || {
                format!(
                    "H′·RZ′ = {}·{} = {} is not a right subgroup",
                    f.left, f.right, f.product
                )
            });
        }
        let Some(left) = r.expect(id, factor::enumerate_left_subgroups(table, e)) else {
            continue;
        };
        for f in &left {
            let group = table
                .induced(&f.product)
                .map(|sub| sub.is_left_group())
                .unwrap_or(false);
            r.check(id, group, || {
                format!(
                    "LZ′·H′ = {}·{} = {} is not a left subgroup",
                    f.left, f.right, f.product
                )
            });
        }
    }
}

fn is_subgroup_with_identity(table: &CayleyTable, t: &ElementSet, e: usize) -> bool {
    table.is_subsemigroup(t)
        && t.iter()
            .all(|a| table.product(a, e) == a && table.product(e, a) == a)
        && t.iter().all(|a| {
            t.iter()
                .any(|b| table.product(a, b) == e && table.product(b, a) == e)
        })
}

fn check_subgroup_maximality(table: &CayleyTable, r: &mut Reporter) {
    let id = TheoremId::SubgroupMaximality;
    let idem = structure::idempotents(table);
    for e in idem.iter() {
        let Some(h) = r.expect(id, structure::max_subgroup(table, e)) else {
            continue;
        };
        r.check(id, is_subgroup_with_identity(table, &h, e), || {
            format!("H({e}) = {h} fails the group axioms")
        });
        if let Some(subsets) = anchored_subsets(table, e) {
            for t in subsets {
                if is_subgroup_with_identity(table, &t, e) {
                    r.check(id, t.is_subset(&h), || {
                        format!("subgroup {t} with identity {e} escapes H({e}) = {h}")
                    });
                }
            }
        }
        for f in idem.iter() {
            if f == e {
                continue;
            }
            let hf = structure::max_subgroup(table, f).unwrap();
            r.check(id, h.is_disjoint(&hf), || {
                format!("H({e}) ∩ H({f}) ≠ ∅")
            });
        }
    }
}

fn is_right_group_subset(table: &CayleyTable, t: &ElementSet) -> bool {
    if t.is_empty() || !table.is_subsemigroup(t) {
        return false;
    }
    // Left cancellative and right simple, evaluated inside the subset.
    t.iter().all(|a| {
        let mut seen = ElementSet::empty(table.order());
        for x in t.iter() {
            let p = table.product(a, x);
            if seen.contains(p) {
                return false;
            }
            seen.insert(p);
        }
        seen == *t
    })
}

fn is_left_group_subset(table: &CayleyTable, t: &ElementSet) -> bool {
    if t.is_empty() || !table.is_subsemigroup(t) {
        return false;
    }
    t.iter().all(|a| {
        let mut seen = ElementSet::empty(table.order());
        for x in t.iter() {
            let p = table.product(x, a);
            if seen.contains(p) {
                return false;
            }
            seen.insert(p);
        }
        seen == *t
    })
}

fn check_right_left_group_maximality(table: &CayleyTable, r: &mut Reporter) {
    let id = TheoremId::RightLeftGroupMaximality;
    for e in structure::idempotents(table).iter() {
        let Some(rg) = r.expect(id, factor::max_right_subgroup(table, e)) else {
            continue;
        };
        r.check(id, is_right_group_subset(table, &rg), || {
            format!("RG({e}) = {rg} is not a right group")
        });
        let Some(lg) = r.expect(id, factor::max_left_subgroup(table, e)) else {
            continue;
        };
        r.check(id, is_left_group_subset(table, &lg), || {
            format!("LG({e}) = {lg} is not a left group")
        });
        if let Some(subsets) = anchored_subsets(table, e) {
            for t in subsets {
                if is_right_group_subset(table, &t) {
                    r.check(id, t.is_subset(&rg), || {
                        format!("right subgroup {t} escapes RG({e}) = {rg}")
                    });
                }
                if is_left_group_subset(table, &t) {
                    r.check(id, t.is_subset(&lg), || {
                        format!("left subgroup {t} escapes LG({e}) = {lg}")
                    });
                }
            }
        }
    }
}

fn check_rg_lg_overlap(table: &CayleyTable, r: &mut Reporter) {
    let id = TheoremId::RgLgOverlap;
    let idem = structure::idempotents(table);
    for e in idem.iter() {
        for f in idem.iter() {
            let rg_e = factor::max_right_subgroup(table, e).unwrap();
            let rg_f = factor::max_right_subgroup(table, f).unwrap();
            let rz_e = structure::max_right_zero(table, e).unwrap();
            let rz_f = structure::max_right_zero(table, f).unwrap();
            let overlap = !rg_e.is_disjoint(&rg_f);
            let criterion = factor::overlap_criterion_rg(table, e, f).unwrap();
            let rz_eq = rz_e == rz_f;
            let rg_eq = rg_e == rg_f;
            r.check(
                id,
                overlap == criterion && criterion == rz_eq && rz_eq == rg_eq,
                || {
                    format!(
                        "RG chain breaks at ({e}, {f}): overlap={overlap}, \
                         criterion={criterion}, RZ equal={rz_eq}, RG equal={rg_eq}"
                    )
                },
            );

            let lg_e = factor::max_left_subgroup(table, e).unwrap();
            let lg_f = factor::max_left_subgroup(table, f).unwrap();
            let lz_e = structure::max_left_zero(table, e).unwrap();
            let lz_f = structure::max_left_zero(table, f).unwrap();
            let overlap = !lg_e.is_disjoint(&lg_f);
            let criterion = factor::overlap_criterion_lz(table, e, f).unwrap();
            let lz_eq = lz_e == lz_f;
            let lg_eq = lg_e == lg_f;
            r.check(
                id,
                overlap == criterion && criterion == lz_eq && lz_eq == lg_eq,
                || {
                    format!(
                        "LG chain breaks at ({e}, {f}): overlap={overlap}, \
                         criterion={criterion}, LZ equal={lz_eq}, LG equal={lg_eq}"
                    )
                },
            );
        }
    }
}

fn check_group_corollaries(table: &CayleyTable, r: &mut Reporter) {
    let id = TheoremId::GroupCorollaries;
    let s = table.universe();
    if table.is_right_group() {
        for e in structure::idempotents(table).iter() {
            let rg = factor::max_right_subgroup(table, e).unwrap();
            r.check(id, rg == s, || {
                format!("right group but H({e})·RZ({e}) = {rg} ≠ S")
            });
        }
    }
    if table.is_left_group() {
        for e in structure::idempotents(table).iter() {
            let lg = factor::max_left_subgroup(table, e).unwrap();
            r.check(id, lg == s, || {
                format!("left group but LZ({e})·H({e}) = {lg} ≠ S")
            });
        }
    }
}

fn check_absorption_identities(table: &CayleyTable, r: &mut Reporter) {
    let id = TheoremId::AbsorptionIdentities;
    for e in structure::idempotents(table).iter() {
        let h = structure::max_subgroup(table, e).unwrap();
        let rz = structure::max_right_zero(table, e).unwrap();
        let lz = structure::max_left_zero(table, e).unwrap();
        let rz_h = table.product_sets(&rz, &h).unwrap();
        r.check(id, rz_h == h, || {
            format!("RZ({e})·H({e}) = {rz_h} differs from H({e}) = {h}")
        });
        let h_lz = table.product_sets(&h, &lz).unwrap();
        r.check(id, h_lz == h, || {
            format!("H({e})·LZ({e}) = {h_lz} differs from H({e}) = {h}")
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{c2, l2, r2, rb4, rg4, semilattice2};

    #[test]
    fn fixtures_have_no_violations() {
        for table in [l2(), r2(), c2(), rb4(), rg4(), semilattice2()] {
            let violations = check_all_theorems(&table).unwrap();
            assert!(
                violations.is_empty(),
                "unexpected violations on {table:?}: {violations:?}"
            );
        }
    }

    #[test]
    fn non_associative_input_is_rejected() {
        let t = CayleyTable::from_entries(2, &[1, 1, 0, 0]).unwrap();
        assert!(matches!(
            check_all_theorems(&t),
            Err(Error::NotAssociative { .. })
        ));
    }

    #[test]
    fn check_count_is_stable() {
        assert_eq!(registered_theorems().count(), 18);
    }
}
