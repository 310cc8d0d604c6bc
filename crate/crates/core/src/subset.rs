//! Dense element subsets and the ideal newtypes built on them.

use std::fmt;
use std::ops::Deref;

use fixedbitset::FixedBitSet;

use crate::element::Elem;

/// A subset of a ring's elements, stored as a bit-vector of length `order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSubset {
    bits: FixedBitSet,
}

impl ElementSubset {
    pub fn empty(order: usize) -> Self {
        ElementSubset { bits: FixedBitSet::with_capacity(order) }
    }

    pub fn full(order: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(order);
        bits.insert_range(..);
        ElementSubset { bits }
    }

    pub fn from_elems(order: usize, elems: impl IntoIterator<Item = Elem>) -> Self {
        let mut s = Self::empty(order);
        for e in elems {
            s.insert(e);
        }
        s
    }

    pub fn from_predicate(order: usize, mut pred: impl FnMut(Elem) -> bool) -> Self {
        let mut s = Self::empty(order);
        for i in 0..order {
            if pred(Elem::from_idx(i)) {
                s.bits.insert(i);
            }
        }
        s
    }

    /// Length of the underlying bit-vector, i.e. the order of the owning ring.
    pub fn order(&self) -> usize {
        self.bits.len()
    }

    #[inline]
    pub fn contains(&self, e: Elem) -> bool {
        self.bits.contains(e.idx())
    }

    #[inline]
    pub fn insert(&mut self, e: Elem) -> bool {
        !self.bits.put(e.idx())
    }

    pub fn remove(&mut self, e: Elem) {
        self.bits.set(e.idx(), false);
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn is_full(&self) -> bool {
        self.bits.is_full()
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.bits.ones().map(Elem::from_idx)
    }

    pub fn to_vec(&self) -> Vec<Elem> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &ElementSubset) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &ElementSubset) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn intersect(&self, other: &ElementSubset) -> ElementSubset {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        ElementSubset { bits }
    }

    pub fn union(&self, other: &ElementSubset) -> ElementSubset {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        ElementSubset { bits }
    }

    pub fn difference(&self, other: &ElementSubset) -> ElementSubset {
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        ElementSubset { bits }
    }

    pub fn intersect_with(&mut self, other: &ElementSubset) {
        self.bits.intersect_with(&other.bits);
    }

    pub fn union_with(&mut self, other: &ElementSubset) {
        self.bits.union_with(&other.bits);
    }

    /// Number of elements in the intersection, without materializing it.
    pub fn intersection_count(&self, other: &ElementSubset) -> usize {
        self.bits.intersection_count(&other.bits)
    }

    pub fn first(&self) -> Option<Elem> {
        self.bits.minimum().map(Elem::from_idx)
    }
}

impl fmt::Debug for ElementSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.bits.ones()).finish()
    }
}

macro_rules! ideal_newtype {
    ($(#[$m:meta])* $name:ident) => {
        $(#[$m])*
        #[derive(Clone, PartialEq, Eq, Hash, Debug)]
        pub struct $name(ElementSubset);

        impl $name {
            /// Wraps a subset the caller has already checked to be closed.
            pub(crate) fn new_unchecked(set: ElementSubset) -> Self {
                $name(set)
            }

            pub fn as_subset(&self) -> &ElementSubset {
                &self.0
            }

            pub fn into_subset(self) -> ElementSubset {
                self.0
            }
        }

        impl Deref for $name {
            type Target = ElementSubset;
            fn deref(&self) -> &ElementSubset {
                &self.0
            }
        }

        impl From<$name> for ElementSubset {
            fn from(i: $name) -> ElementSubset {
                i.0
            }
        }
    };
}

ideal_newtype!(
    /// Additive subgroup closed under right multiplication by ring elements.
    RightIdeal
);
ideal_newtype!(
    /// Additive subgroup closed under left multiplication by ring elements.
    LeftIdeal
);
ideal_newtype!(
    /// Additive subgroup closed under multiplication on both sides.
    TwoSidedIdeal
);

impl TwoSidedIdeal {
    pub fn as_right(&self) -> RightIdeal {
        RightIdeal(self.0.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_set_algebra() {
        let a = ElementSubset::from_elems(8, [0, 2, 4].map(Elem));
        let b = ElementSubset::from_elems(8, [0, 4, 6].map(Elem));
        assert_eq!(a.intersect(&b).to_vec(), vec![Elem(0), Elem(4)]);
        assert_eq!(a.union(&b).len(), 4);
        assert!(a.intersect(&b).is_subset(&a));
        assert!(ElementSubset::full(8).is_full());
        assert_eq!(a.intersection_count(&b), 2);
    }
}
