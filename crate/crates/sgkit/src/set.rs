//! Subsets of the element indices `[0, n)` of a fixed universe size.
//!
//! Sets are bit-vectors; equality is extensional and iteration is always in
//! ascending index order, so serialized output is deterministic.

use std::fmt;

const BITS: usize = 64;

/// A subset of `[0, universe)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    universe: usize,
    blocks: Vec<u64>,
}

impl ElementSet {
    /// The empty subset of `[0, universe)`.
    pub fn empty(universe: usize) -> Self {
        ElementSet {
            universe,
            blocks: vec![0; universe.div_ceil(BITS)],
        }
    }

    /// The full set `[0, universe)`.
    pub fn full(universe: usize) -> Self {
        let mut set = Self::empty(universe);
        for block in 0..set.blocks.len() {
            set.blocks[block] = !0;
        }
        set.clear_tail();
        set
    }

    /// The singleton `{element}`.
    pub fn singleton(universe: usize, element: usize) -> Self {
        let mut set = Self::empty(universe);
        set.insert(element);
        set
    }

    /// Builds a set from arbitrary (possibly repeated, unordered) members.
    pub fn from_members<I: IntoIterator<Item = usize>>(universe: usize, members: I) -> Self {
        let mut set = Self::empty(universe);
        for m in members {
            set.insert(m);
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, element: usize) {
        assert!(element < self.universe, "element out of universe");
        self.blocks[element / BITS] |= 1 << (element % BITS);
    }

    pub fn remove(&mut self, element: usize) {
        assert!(element < self.universe, "element out of universe");
        self.blocks[element / BITS] &= !(1 << (element % BITS));
    }

    pub fn contains(&self, element: usize) -> bool {
        element < self.universe && self.blocks[element / BITS] >> (element % BITS) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &ElementSet) -> ElementSet {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> ElementSet {
        let mut out = ElementSet {
            universe: self.universe,
            blocks: self.blocks.iter().map(|&b| !b).collect(),
        };
        out.clear_tail();
        out
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        assert_eq!(self.universe, other.universe, "universe mismatch");
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(&a, &b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &ElementSet) -> bool {
        assert_eq!(self.universe, other.universe, "universe mismatch");
        self.blocks.iter().zip(&other.blocks).all(|(&a, &b)| a & b == 0)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(i, &block)| {
            let mut bits = block;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let tz = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(i * BITS + tz)
                }
            })
        })
    }

    /// The smallest member, if any.
    pub fn min(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self` that contain `pinned`, in an order determined by
    /// the bitmask over the remaining members. Panics if `pinned` is not a
    /// member or if there are more than 63 other members.
    pub fn subsets_containing(&self, pinned: usize) -> impl Iterator<Item = ElementSet> + '_ {
        assert!(self.contains(pinned), "pinned element not in set");
        let rest: Vec<usize> = self.iter().filter(|&x| x != pinned).collect();
        assert!(rest.len() < BITS, "too many members to enumerate subsets");
        let universe = self.universe;
        (0u64..1 << rest.len()).map(move |mask| {
            let mut subset = ElementSet::singleton(universe, pinned);
            for (bit, &member) in rest.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    subset.insert(member);
                }
            }
            subset
        })
    }

    fn zip_with(&self, other: &ElementSet, f: impl Fn(u64, u64) -> u64) -> ElementSet {
        assert_eq!(self.universe, other.universe, "universe mismatch");
        ElementSet {
            universe: self.universe,
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    fn clear_tail(&mut self) {
        let tail = self.universe % BITS;
        if tail != 0 {
            if let Some(last) = self.blocks.last_mut() {
                *last &= (1 << tail) - 1;
            }
        }
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, m) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_membership() {
        let mut s = ElementSet::empty(70);
        assert!(s.is_empty());
        s.insert(0);
        s.insert(69);
        assert!(s.contains(0));
        assert!(s.contains(69));
        assert!(!s.contains(68));
        assert_eq!(s.len(), 2);
        s.remove(0);
        assert_eq!(s.to_vec(), vec![69]);
    }

    #[test]
    fn full_and_complement() {
        let full = ElementSet::full(70);
        assert_eq!(full.len(), 70);
        assert!(full.complement().is_empty());
        let s = ElementSet::from_members(5, [1, 3]);
        assert_eq!(s.complement().to_vec(), vec![0, 2, 4]);
    }

    #[test]
    fn iteration_is_ascending() {
        let s = ElementSet::from_members(10, [7, 2, 2, 5]);
        assert_eq!(s.to_vec(), vec![2, 5, 7]);
        assert_eq!(s.min(), Some(2));
    }

    #[test]
    fn subsets_containing_pinned() {
        let s = ElementSet::from_members(4, [0, 1, 3]);
        let subsets: Vec<_> = s.subsets_containing(1).map(|t| t.to_vec()).collect();
        assert_eq!(subsets.len(), 4);
        assert!(subsets.contains(&vec![1]));
        assert!(subsets.contains(&vec![0, 1]));
        assert!(subsets.contains(&vec![1, 3]));
        assert!(subsets.contains(&vec![0, 1, 3]));
    }

    #[test]
    fn display_matches_set_notation() {
        let s = ElementSet::from_members(4, [0, 2]);
        assert_eq!(s.to_string(), "{0, 2}");
        assert_eq!(ElementSet::empty(4).to_string(), "{}");
    }
}
