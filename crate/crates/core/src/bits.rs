//! Fixed-width bit sets over element indices and point indices.

use std::fmt;

use fixedbitset::FixedBitSet;

macro_rules! bit_set_type {
    ($(#[$doc:meta])* $name:ident) => {
        $(#[$doc])*
        #[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
        pub struct $name(FixedBitSet);

        impl $name {
            pub fn empty(width: usize) -> Self {
                Self(FixedBitSet::with_capacity(width))
            }

            pub fn full(width: usize) -> Self {
                let mut bits = FixedBitSet::with_capacity(width);
                bits.insert_range(..);
                Self(bits)
            }

            pub fn singleton(width: usize, i: usize) -> Self {
                let mut s = Self::empty(width);
                s.insert(i);
                s
            }

            pub fn from_indices<I: IntoIterator<Item = usize>>(width: usize, iter: I) -> Self {
                let mut s = Self::empty(width);
                for i in iter {
                    s.insert(i);
                }
                s
            }

            /// Builds a set from the low `width` bits of `mask`.
            pub fn from_mask(width: usize, mask: u64) -> Self {
                Self::from_indices(width, (0..width.min(64)).filter(|i| mask >> i & 1 == 1))
            }

            /// Number of indices the set ranges over (not the cardinality).
            pub fn width(&self) -> usize {
                self.0.len()
            }

            pub fn len(&self) -> usize {
                self.0.count_ones(..)
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_clear()
            }

            pub fn contains(&self, i: usize) -> bool {
                self.0.contains(i)
            }

            pub fn insert(&mut self, i: usize) {
                self.0.insert(i);
            }

            pub fn remove(&mut self, i: usize) {
                self.0.set(i, false);
            }

            pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
                self.0.ones()
            }

            pub fn to_vec(&self) -> Vec<usize> {
                self.iter().collect()
            }

            pub fn first(&self) -> Option<usize> {
                self.0.minimum()
            }

            pub fn is_subset(&self, other: &Self) -> bool {
                self.0.is_subset(&other.0)
            }

            pub fn is_disjoint(&self, other: &Self) -> bool {
                self.0.is_disjoint(&other.0)
            }

            pub fn union(&self, other: &Self) -> Self {
                let mut out = self.clone();
                out.0.union_with(&other.0);
                out
            }

            pub fn intersection(&self, other: &Self) -> Self {
                let mut out = self.clone();
                out.0.intersect_with(&other.0);
                out
            }

            pub fn difference(&self, other: &Self) -> Self {
                let mut out = self.clone();
                out.0.difference_with(&other.0);
                out
            }

            pub fn complement(&self) -> Self {
                let mut out = Self::full(self.width());
                out.0.difference_with(&self.0);
                out
            }

            pub fn union_with(&mut self, other: &Self) {
                self.0.union_with(&other.0);
            }

            pub fn intersect_with(&mut self, other: &Self) {
                self.0.intersect_with(&other.0);
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.debug_set().entries(self.iter()).finish()
            }
        }
    };
}

bit_set_type!(
    /// A subset of the elements of a finite lattice.
    ElemSet
);

bit_set_type!(
    /// A subset of the designated point set of a spectrum context, indexed by
    /// point position (not by lattice element).
    PointSet
);
