//! Small sets of element indices, stored as bitmasks.

use std::fmt;

/// Largest carrier size any structure in this crate supports.
pub const MAX_ORDER: usize = 8;

/// A subset of `[0, n)` for `n <= MAX_ORDER`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ElemSet(u16);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ORDER);
        ElemSet(((1u32 << n) - 1) as u16)
    }

    pub fn singleton(x: usize) -> Self {
        ElemSet(1 << x)
    }

    pub fn from_bits(bits: u16) -> Self {
        ElemSet(bits)
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    pub fn contains(self, x: usize) -> bool {
        x < 16 && self.0 & (1 << x) != 0
    }

    pub fn insert(&mut self, x: usize) {
        self.0 |= 1 << x;
    }

    pub fn remove(&mut self, x: usize) {
        self.0 &= !(1 << x);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        ElemSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ElemSet(self.0 & other.0)
    }

    /// Complement relative to `[0, n)`.
    pub fn complement(self, n: usize) -> Self {
        ElemSet(!self.0 & Self::full(n).0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest element, if any.
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let x = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(x)
        })
    }

    /// All subsets of `[0, n)` in increasing bitmask order, starting with the empty set.
    pub fn all_subsets(n: usize) -> impl Iterator<Item = ElemSet> {
        (0u32..(1u32 << n)).map(|b| ElemSet(b as u16))
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElemSet::EMPTY;
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Prints as `{a,b,c}`.
impl fmt::Display for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, x) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", crate::format::letter(x))?;
        }
        f.write_str("}")
    }
}
