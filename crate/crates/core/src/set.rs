use std::fmt;

/// Maximum number of ground-set elements supported anywhere in the crate.
pub const CAPACITY: usize = 16;

/// A subset of a ground set of at most [`CAPACITY`] elements, stored as a
/// bitmask with bit `i` set iff element `i` is a member.
///
/// This is the universal currency for all set arguments and return values.
/// An `ElementSet` does not know the size of its owning ground set; operations
/// that need it take the matroid as context.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ElementSet(pub u32);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    /// Full ground set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= CAPACITY);
        ElementSet(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(e: usize) -> Self {
        debug_assert!(e < CAPACITY);
        ElementSet(1 << e)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut bits = 0u32;
        for e in iter {
            debug_assert!(e < CAPACITY);
            bits |= 1 << e;
        }
        ElementSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: usize) -> bool {
        e < 32 && self.0 & (1 << e) != 0
    }

    pub fn with(self, e: usize) -> Self {
        ElementSet(self.0 | (1 << e))
    }

    pub fn without(self, e: usize) -> Self {
        ElementSet(self.0 & !(1 << e))
    }

    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    pub fn complement(self, n: usize) -> Self {
        ElementSet(!self.0 & Self::full(n).0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint_from(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member, if any.
    pub fn min_element(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Iterates members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let e = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(e)
            }
        })
    }

    /// Iterates all subsets of `self`, in increasing mask order.
    pub fn subsets(self) -> impl Iterator<Item = ElementSet> {
        let full = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            // Standard subset-stepping trick: (cur - full) & full walks the
            // submasks of `full` in increasing order.
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(ElementSet(cur))
        })
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for e in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        write!(f, "}}")
    }
}
