//! Product decompositions anchored at an idempotent: rectangular bands as
//! `T_L·T_R` with `T_L ⊆ LZ(e)`, `T_R ⊆ RZ(e)`, and right/left groups as
//! `H′·RZ′` / `LZ′·H′` with `H′` a subgroup of `H(e)`.

use std::fmt;

use crate::error::Error;
use crate::set::ElementSet;
use crate::structure::{self, require_idempotent};
use crate::table::CayleyTable;

/// Cap on `2^(|T_L|-1) · 2^(|T_R|-1)` candidate pairs per enumeration.
pub const DEFAULT_PAIR_BUDGET: u128 = 1 << 20;

/// Cap on `|H(e)|` for exhaustive subgroup enumeration.
pub const DEFAULT_SUBGROUP_BOUND: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorKind {
    RectBand,
    RightGroup,
    LeftGroup,
}

impl fmt::Display for FactorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorKind::RectBand => write!(f, "rect-band"),
            FactorKind::RightGroup => write!(f, "right-group"),
            FactorKind::LeftGroup => write!(f, "left-group"),
        }
    }
}

/// An ordered pair of factors with their verified product.
///
/// Depending on `kind`, the invariants are:
/// - rect-band: `e ∈ left ⊆ LZ(e)`, `e ∈ right ⊆ RZ(e)`, `right·left = {e}`;
/// - right-group: `left` is a subgroup of `H(e)`, `e ∈ right ⊆ RZ(e)`;
/// - left-group: `e ∈ left ⊆ LZ(e)`, `right` is a subgroup of `H(e)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub kind: FactorKind,
    pub left: ElementSet,
    pub right: ElementSet,
    pub product: ElementSet,
    pub anchor: usize,
}

fn prepare(table: &CayleyTable, e: usize) -> Result<(), Error> {
    table.require_associative()?;
    require_idempotent(table, e)
}

/// Decomposes a rectangular band subsemigroup `T ∋ e` as `(T·e)·(e·T)`.
///
/// The factor pair is the unique one with `e ∈ T_L ⊆ LZ(e)`,
/// `e ∈ T_R ⊆ RZ(e)` and `T_R·T_L = {e}` whose product is `T`.
pub fn rect_band_factorize(
    table: &CayleyTable,
    subset: &ElementSet,
    e: usize,
) -> Result<Factorization, Error> {
    prepare(table, e)?;
    if !subset.contains(e) {
        return Err(Error::NotInSet { element: e });
    }
    let induced = match table.induced(subset) {
        Ok(t) => t,
        Err(Error::NotClosed) => return Err(Error::NotRectangularBand),
        Err(other) => return Err(other),
    };
    if !induced.is_rectangular_band()? {
        return Err(Error::NotRectangularBand);
    }

    let single = ElementSet::singleton(table.order(), e);
    let left = table.product_sets(subset, &single)?;
    let right = table.product_sets(&single, subset)?;
    let product = table.product_sets(&left, &right)?;

    let lz = structure::max_left_zero(table, e)?;
    let rz = structure::max_right_zero(table, e)?;
    let reversed = table.product_sets(&right, &left)?;
    if product != *subset || reversed != single || !left.is_subset(&lz) || !right.is_subset(&rz)
    {
        return Err(Error::Inconsistency(format!(
            "rect band factorization invariants fail for T = {subset}, e = {e}"
        )));
    }

    Ok(Factorization {
        kind: FactorKind::RectBand,
        left,
        right,
        product,
        anchor: e,
    })
}

fn admissible_pair_count(left_size: usize, right_size: usize) -> u128 {
    let exp = (left_size.saturating_sub(1) + right_size.saturating_sub(1)) as u32;
    if exp >= 127 {
        u128::MAX
    } else {
        1u128 << exp
    }
}

fn sort_factorizations(factorizations: &mut [Factorization]) {
    factorizations.sort_by_cached_key(|f| {
        (
            f.product.len(),
            f.product.to_vec(),
            f.left.to_vec(),
            f.right.to_vec(),
        )
    });
}

/// All rectangular band subsemigroups containing `e`, produced as the
/// products of all admissible pairs `(T_L, T_R)`.
pub fn enumerate_rect_bands(table: &CayleyTable, e: usize) -> Result<Vec<Factorization>, Error> {
    enumerate_rect_bands_with_budget(table, e, DEFAULT_PAIR_BUDGET)
}

/// [`enumerate_rect_bands`] with an explicit pair budget.
pub fn enumerate_rect_bands_with_budget(
    table: &CayleyTable,
    e: usize,
    budget: u128,
) -> Result<Vec<Factorization>, Error> {
    prepare(table, e)?;
    let lz = structure::max_left_zero(table, e)?;
    let rz = structure::max_right_zero(table, e)?;
    let required = admissible_pair_count(lz.len(), rz.len());
    if required > budget {
        return Err(Error::PairBudget { required, budget });
    }

    let single = ElementSet::singleton(table.order(), e);
    let mut out = Vec::new();
    for t_l in lz.subsets_containing(e) {
        for t_r in rz.subsets_containing(e) {
            if table.product_sets(&t_r, &t_l)? != single {
                continue;
            }
            let product = table.product_sets(&t_l, &t_r)?;
            out.push(Factorization {
                kind: FactorKind::RectBand,
                left: t_l.clone(),
                right: t_r,
                product,
                anchor: e,
            });
        }
    }
    sort_factorizations(&mut out);
    Ok(out)
}

/// `RG(e) = H(e)·RZ(e)`: the maximum right subgroup containing `e`.
pub fn max_right_subgroup(table: &CayleyTable, e: usize) -> Result<ElementSet, Error> {
    prepare(table, e)?;
    let h = structure::max_subgroup(table, e)?;
    let rz = structure::max_right_zero(table, e)?;
    let rg = table.product_sets(&h, &rz)?;
    if !table.induced(&rg)?.is_right_group() {
        return Err(Error::Inconsistency(format!(
            "H({e})·RZ({e}) = {rg} is not a right group"
        )));
    }
    Ok(rg)
}

/// `LG(e) = LZ(e)·H(e)`: the maximum left subgroup containing `e`.
pub fn max_left_subgroup(table: &CayleyTable, e: usize) -> Result<ElementSet, Error> {
    prepare(table, e)?;
    let h = structure::max_subgroup(table, e)?;
    let lz = structure::max_left_zero(table, e)?;
    let lg = table.product_sets(&lz, &h)?;
    if !table.induced(&lg)?.is_left_group() {
        return Err(Error::Inconsistency(format!(
            "LZ({e})·H({e}) = {lg} is not a left group"
        )));
    }
    Ok(lg)
}

/// All subgroups of `H(e)` containing `e`, by exhaustive subset scan.
/// Refuses `|H(e)|` above `bound`.
pub fn subgroups_of_max(
    table: &CayleyTable,
    e: usize,
    bound: usize,
) -> Result<Vec<ElementSet>, Error> {
    prepare(table, e)?;
    let h = structure::max_subgroup(table, e)?;
    if h.len() > bound {
        return Err(Error::SubgroupBound {
            size: h.len(),
            bound,
        });
    }
    let mut subgroups = Vec::new();
    for candidate in h.subsets_containing(e) {
        let closed = table.is_subsemigroup(&candidate);
        let inverses = candidate.iter().all(|x| {
            candidate
                .iter()
                .any(|y| table.product(x, y) == e && table.product(y, x) == e)
        });
        if closed && inverses {
            subgroups.push(candidate);
        }
    }
    Ok(subgroups)
}

/// All right subgroups of the table containing `e`, as products `H′·RZ′`
/// over subgroups `H′ ⊆ H(e)` and subsets `e ∈ RZ′ ⊆ RZ(e)`. Each emitted
/// product corresponds to exactly one such pair.
pub fn enumerate_right_subgroups(
    table: &CayleyTable,
    e: usize,
) -> Result<Vec<Factorization>, Error> {
    enumerate_right_subgroups_with_bounds(table, e, DEFAULT_SUBGROUP_BOUND, DEFAULT_PAIR_BUDGET)
}

/// [`enumerate_right_subgroups`] with explicit bounds.
pub fn enumerate_right_subgroups_with_bounds(
    table: &CayleyTable,
    e: usize,
    subgroup_bound: usize,
    budget: u128,
) -> Result<Vec<Factorization>, Error> {
    let subgroups = subgroups_of_max(table, e, subgroup_bound)?;
    let rz = structure::max_right_zero(table, e)?;
    let required =
        (subgroups.len() as u128).saturating_mul(admissible_pair_count(1, rz.len()));
    if required > budget {
        return Err(Error::PairBudget { required, budget });
    }

    let mut out = Vec::new();
    for h_sub in &subgroups {
        for rz_sub in rz.subsets_containing(e) {
            let product = table.product_sets(h_sub, &rz_sub)?;
            out.push(Factorization {
                kind: FactorKind::RightGroup,
                left: h_sub.clone(),
                right: rz_sub,
                product,
                anchor: e,
            });
        }
    }
    sort_factorizations(&mut out);
    Ok(out)
}

/// All left subgroups containing `e`, as products `LZ′·H′`.
pub fn enumerate_left_subgroups(
    table: &CayleyTable,
    e: usize,
) -> Result<Vec<Factorization>, Error> {
    enumerate_left_subgroups_with_bounds(table, e, DEFAULT_SUBGROUP_BOUND, DEFAULT_PAIR_BUDGET)
}

/// [`enumerate_left_subgroups`] with explicit bounds.
pub fn enumerate_left_subgroups_with_bounds(
    table: &CayleyTable,
    e: usize,
    subgroup_bound: usize,
    budget: u128,
) -> Result<Vec<Factorization>, Error> {
    let subgroups = subgroups_of_max(table, e, subgroup_bound)?;
    let lz = structure::max_left_zero(table, e)?;
    let required =
        (subgroups.len() as u128).saturating_mul(admissible_pair_count(lz.len(), 1));
    if required > budget {
        return Err(Error::PairBudget { required, budget });
    }

    let mut out = Vec::new();
    for h_sub in &subgroups {
        for lz_sub in lz.subsets_containing(e) {
            let product = table.product_sets(&lz_sub, h_sub)?;
            out.push(Factorization {
                kind: FactorKind::LeftGroup,
                left: lz_sub,
                right: h_sub.clone(),
                product,
                anchor: e,
            });
        }
    }
    sort_factorizations(&mut out);
    Ok(out)
}

/// The product test `ef = f` and `fe = e` deciding whether `RZ(e) = RZ(f)`,
/// equivalently `RG(e) = RG(f)`, equivalently `RG(e) ∩ RG(f) ≠ ∅`.
pub fn overlap_criterion_rg(table: &CayleyTable, e: usize, f: usize) -> Result<bool, Error> {
    require_idempotent(table, e)?;
    require_idempotent(table, f)?;
    Ok(table.product(e, f) == f && table.product(f, e) == e)
}

/// The product test `ef = e` and `fe = f` deciding whether `LZ(e) = LZ(f)`,
/// equivalently `LG(e) = LG(f)`, equivalently `LG(e) ∩ LG(f) ≠ ∅`.
pub fn overlap_criterion_lz(table: &CayleyTable, e: usize, f: usize) -> Result<bool, Error> {
    require_idempotent(table, e)?;
    require_idempotent(table, f)?;
    Ok(table.product(e, f) == e && table.product(f, e) == f)
}
