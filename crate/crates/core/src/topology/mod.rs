//! Finite topologies, represented by their specialization preorders.
//!
//! On a finite set, topologies and preorders determine each other: `x ≤ y`
//! iff every open set containing `x` contains `y`, and the open sets of a
//! preorder are its up-closed subsets. [`Preorder`] is the working form;
//! [`OpenSetFamily`] exists for interchange and for cross-checking.

mod enumerate;
mod hasse;

use std::fmt;

use thiserror::Error;

use crate::perm::Permutation;
use crate::set::{ElemSet, MAX_ORDER};

pub use enumerate::{
    enumerate_open_set_families, enumerate_preorders, labeled_preorders_by_extension,
    labeled_preorders_by_mask, MAX_PREORDER_ENUMERATION_ORDER,
};
pub use hasse::{DiagramRecord, QuotientDiagram};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("order {0} is outside the supported range 1..={max}", max = MAX_ORDER)]
    UnsupportedOrder(usize),
    #[error("row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("not reflexive at {}", letter(*.0))]
    NotReflexive(usize),
    #[error("not transitive: {} ≤ {} ≤ {} but not {} ≤ {}", letter(*.0), letter(*.1), letter(*.2), letter(*.0), letter(*.2))]
    NotTransitive(usize, usize, usize),
    #[error("open set {0} is not inside the carrier")]
    OpenOutOfRange(ElemSet),
    #[error("the empty set is missing from the open sets")]
    MissingEmpty,
    #[error("the whole space is missing from the open sets")]
    MissingFull,
    #[error("union of {0} and {1} is not open")]
    NotClosedUnderUnion(ElemSet, ElemSet),
    #[error("intersection of {0} and {1} is not open")]
    NotClosedUnderIntersection(ElemSet, ElemSet),
    #[error("cannot restrict to the empty set")]
    EmptySet,
    #[error("{0} is not inside the carrier")]
    SetOutOfRange(ElemSet),
    #[error("blocks do not partition the carrier")]
    NotAPartition,
    #[error("relation between blocks has order {found}, expected {expected}")]
    BetweenSize { expected: usize, found: usize },
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("enumeration order {n} is outside 1..={max}")]
    EnumerationOrder { n: usize, max: usize },
}

fn letter(x: usize) -> char {
    crate::format::letter(x)
}

/// A reflexive, transitive relation on `[0, n)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Preorder {
    n: usize,
    // bit y of up[x] is set iff x ≤ y
    up: Vec<u16>,
}

impl Preorder {
    /// Validates a boolean matrix, reporting a missing reflexive pair before a broken transitive triple.
    pub fn new(rel: &[Vec<bool>]) -> Result<Self, TopologyError> {
        let n = rel.len();
        if n == 0 || n > MAX_ORDER {
            return Err(TopologyError::UnsupportedOrder(n));
        }
        let mut up = Vec::with_capacity(n);
        for (row, r) in rel.iter().enumerate() {
            if r.len() != n {
                return Err(TopologyError::NotSquare {
                    row,
                    len: r.len(),
                    n,
                });
            }
            up.push(
                r.iter()
                    .enumerate()
                    .filter(|(_, &b)| b)
                    .map(|(y, _)| y)
                    .collect::<ElemSet>()
                    .bits(),
            );
        }
        Self::from_up_sets(n, up)
    }

    fn from_up_sets(n: usize, up: Vec<u16>) -> Result<Self, TopologyError> {
        let p = Preorder { n, up };
        for x in 0..n {
            if !p.leq(x, x) {
                return Err(TopologyError::NotReflexive(x));
            }
        }
        for x in 0..n {
            for y in 0..n {
                if !p.leq(x, y) {
                    continue;
                }
                for z in 0..n {
                    if p.leq(y, z) && !p.leq(x, z) {
                        return Err(TopologyError::NotTransitive(x, y, z));
                    }
                }
            }
        }
        Ok(p)
    }

    pub(crate) fn from_up_sets_unchecked(n: usize, up: Vec<u16>) -> Self {
        Preorder { n, up }
    }

    /// Equality: every subset is open.
    pub fn discrete(n: usize) -> Self {
        assert!((1..=MAX_ORDER).contains(&n));
        Preorder {
            n,
            up: (0..n).map(|x| ElemSet::singleton(x).bits()).collect(),
        }
    }

    /// All points related: only the empty set and the whole space are open.
    pub fn coarse(n: usize) -> Self {
        assert!((1..=MAX_ORDER).contains(&n));
        Preorder {
            n,
            up: vec![ElemSet::full(n).bits(); n],
        }
    }

    /// Reflexive-transitive closure of the given pairs `(x, y)` meaning `x ≤ y`.
    pub fn generated_by(n: usize, pairs: &[(usize, usize)]) -> Self {
        assert!((1..=MAX_ORDER).contains(&n));
        let mut up: Vec<u16> = (0..n).map(|x| ElemSet::singleton(x).bits()).collect();
        for &(x, y) in pairs {
            up[x] |= 1 << y;
        }
        // Warshall
        for k in 0..n {
            for x in 0..n {
                if up[x] & (1 << k) != 0 {
                    up[x] |= up[k];
                }
            }
        }
        Preorder { n, up }
    }

    /// The specialization preorder of an open-set family.
    pub fn from_topology(t: &OpenSetFamily) -> Self {
        let n = t.order();
        let up = (0..n)
            .map(|x| {
                t.opens()
                    .iter()
                    .filter(|o| o.contains(x))
                    .fold(ElemSet::full(n), |acc, &o| acc.intersection(o))
                    .bits()
            })
            .collect();
        Preorder { n, up }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// `x ≤ y`.
    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x] & (1 << y) != 0
    }

    /// Everything above `x`, including `x`.
    pub fn up_set(&self, x: usize) -> ElemSet {
        ElemSet::from_bits(self.up[x])
    }

    /// Everything below `x`, including `x`.
    pub fn down_set(&self, x: usize) -> ElemSet {
        (0..self.n).filter(|&y| self.leq(y, x)).collect()
    }

    pub fn matrix(&self) -> Vec<Vec<bool>> {
        (0..self.n)
            .map(|x| (0..self.n).map(|y| self.leq(x, y)).collect())
            .collect()
    }

    /// Rows as strings of `0`/`1`.
    pub fn matrix_strings(&self) -> Vec<String> {
        (0..self.n)
            .map(|x| {
                (0..self.n)
                    .map(|y| if self.leq(x, y) { '1' } else { '0' })
                    .collect()
            })
            .collect()
    }

    /// Row-major bits with entry `(0, 0)` most significant, so that numeric
    /// order on keys is lexicographic order on matrices.
    pub fn key(&self) -> u64 {
        let nn = self.n * self.n;
        let mut key = 0u64;
        for x in 0..self.n {
            for y in 0..self.n {
                if self.leq(x, y) {
                    key |= 1 << (nn - 1 - (x * self.n + y));
                }
            }
        }
        key
    }

    pub fn is_discrete(&self) -> bool {
        (0..self.n).all(|x| self.up[x] == ElemSet::singleton(x).bits())
    }

    pub fn is_coarse(&self) -> bool {
        let full = ElemSet::full(self.n).bits();
        self.up.iter().all(|&u| u == full)
    }

    /// Classes of mutual comparability, ordered by smallest member.
    pub fn equivalence_classes(&self) -> Vec<ElemSet> {
        let mut classes: Vec<ElemSet> = Vec::new();
        let mut placed = ElemSet::EMPTY;
        for x in 0..self.n {
            if placed.contains(x) {
                continue;
            }
            let class = self.up_set(x).intersection(self.down_set(x));
            placed = placed.union(class);
            classes.push(class);
        }
        classes
    }

    /// The subspace preorder on `s`, with points renumbered in increasing order.
    pub fn restrict(&self, s: ElemSet) -> Result<Preorder, TopologyError> {
        if s.is_empty() {
            return Err(TopologyError::EmptySet);
        }
        if !s.is_subset(ElemSet::full(self.n)) {
            return Err(TopologyError::SetOutOfRange(s));
        }
        let points: Vec<usize> = s.iter().collect();
        let up = points
            .iter()
            .map(|&x| {
                points
                    .iter()
                    .enumerate()
                    .filter(|(_, &y)| self.leq(x, y))
                    .map(|(i, _)| i)
                    .collect::<ElemSet>()
                    .bits()
            })
            .collect();
        Ok(Preorder {
            n: points.len(),
            up,
        })
    }

    /// Coarse inside each block, with `x ≤ y` across blocks iff the blocks are
    /// related by `between` (equality when `None`).
    pub fn coarse_on_blocks(
        blocks: &[ElemSet],
        between: Option<&Preorder>,
    ) -> Result<Preorder, TopologyError> {
        let union = blocks.iter().fold(ElemSet::EMPTY, |a, &b| a.union(b));
        let total: usize = blocks.iter().map(|b| b.len()).sum();
        let n = union.len();
        if n == 0 || n > MAX_ORDER || total != n || union != ElemSet::full(n) {
            return Err(TopologyError::NotAPartition);
        }
        if blocks.iter().any(|b| b.is_empty()) {
            return Err(TopologyError::NotAPartition);
        }
        if let Some(b) = between {
            if b.order() != blocks.len() {
                return Err(TopologyError::BetweenSize {
                    expected: blocks.len(),
                    found: b.order(),
                });
            }
        }
        let mut block_of = vec![0; n];
        for (id, b) in blocks.iter().enumerate() {
            for x in b.iter() {
                block_of[x] = id;
            }
        }
        let related = |i: usize, j: usize| match between {
            Some(b) => b.leq(i, j),
            None => i == j,
        };
        let up = (0..n)
            .map(|x| {
                (0..n)
                    .filter(|&y| related(block_of[x], block_of[y]))
                    .collect::<ElemSet>()
                    .bits()
            })
            .collect();
        Ok(Preorder { n, up })
    }

    /// The preorder with each point `x` renamed to `sigma(x)`.
    pub fn relabel(&self, sigma: &Permutation) -> Preorder {
        assert_eq!(sigma.len(), self.n);
        let mut up = vec![0u16; self.n];
        for x in 0..self.n {
            up[sigma.apply(x)] = self
                .up_set(x)
                .iter()
                .map(|y| sigma.apply(y))
                .collect::<ElemSet>()
                .bits();
        }
        Preorder { n: self.n, up }
    }

    /// Lexicographically smallest relation matrix among all relabelings.
    pub fn canonical_form(&self) -> Preorder {
        Permutation::all(self.n)
            .map(|s| self.relabel(&s))
            .min_by_key(Preorder::key)
            .expect("at least one permutation")
    }

    /// First order isomorphism `sigma` (lexicographic by image) with `x ≤ y ⇔ sigma(x) ≤' sigma(y)`.
    pub fn find_homeomorphism(&self, other: &Preorder) -> Result<Option<Permutation>, TopologyError> {
        if self.n != other.n {
            return Err(TopologyError::SizeMismatch(self.n, other.n));
        }
        if self.degree_profile() != other.degree_profile() {
            return Ok(None);
        }
        let mut map = Vec::with_capacity(self.n);
        Ok(self.extend_homeomorphism(other, &mut map, ElemSet::EMPTY))
    }

    fn extend_homeomorphism(
        &self,
        other: &Preorder,
        map: &mut Vec<usize>,
        used: ElemSet,
    ) -> Option<Permutation> {
        let k = map.len();
        if k == self.n {
            return Some(Permutation::new(map.clone()).expect("bijection"));
        }
        for t in 0..self.n {
            if used.contains(t) {
                continue;
            }
            let ok = (0..k).all(|x| {
                self.leq(x, k) == other.leq(map[x], t) && self.leq(k, x) == other.leq(t, map[x])
            }) && self.leq(k, k) == other.leq(t, t);
            if ok {
                map.push(t);
                let mut next = used;
                next.insert(t);
                if let Some(p) = self.extend_homeomorphism(other, map, next) {
                    return Some(p);
                }
                map.pop();
            }
        }
        None
    }

    fn degree_profile(&self) -> Vec<(usize, usize)> {
        let mut d: Vec<(usize, usize)> = (0..self.n)
            .map(|x| (self.up_set(x).len(), self.down_set(x).len()))
            .collect();
        d.sort_unstable();
        d
    }

    pub fn quotient_hasse(&self) -> QuotientDiagram {
        QuotientDiagram::new(self)
    }
}

impl PartialOrd for Preorder {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by size, then lexicographically by relation matrix.
impl Ord for Preorder {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.n, self.key()).cmp(&(other.n, other.key()))
    }
}

impl fmt::Debug for Preorder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Preorder[{}]", self.matrix_strings().join("/"))
    }
}

/// A family of open sets on `[0, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpenSetFamily {
    n: usize,
    // sorted by (size, bits)
    opens: Vec<ElemSet>,
}

impl OpenSetFamily {
    /// Validates the topology axioms; duplicates are dropped.
    pub fn new(n: usize, opens: Vec<ElemSet>) -> Result<Self, TopologyError> {
        if n == 0 || n > MAX_ORDER {
            return Err(TopologyError::UnsupportedOrder(n));
        }
        let full = ElemSet::full(n);
        if let Some(&bad) = opens.iter().find(|o| !o.is_subset(full)) {
            return Err(TopologyError::OpenOutOfRange(bad));
        }
        let mut opens = opens;
        opens.sort_by_key(|o| (o.len(), o.bits()));
        opens.dedup();
        if !opens.contains(&ElemSet::EMPTY) {
            return Err(TopologyError::MissingEmpty);
        }
        if !opens.contains(&full) {
            return Err(TopologyError::MissingFull);
        }
        for (i, &a) in opens.iter().enumerate() {
            for &b in &opens[i + 1..] {
                if !opens.contains(&a.union(b)) {
                    return Err(TopologyError::NotClosedUnderUnion(a, b));
                }
                if !opens.contains(&a.intersection(b)) {
                    return Err(TopologyError::NotClosedUnderIntersection(a, b));
                }
            }
        }
        Ok(OpenSetFamily { n, opens })
    }

    /// The up-closed subsets of `p`.
    pub fn from_preorder(p: &Preorder) -> Self {
        let n = p.order();
        let mut opens: Vec<ElemSet> = ElemSet::all_subsets(n)
            .filter(|s| s.iter().all(|x| p.up_set(x).is_subset(*s)))
            .collect();
        opens.sort_by_key(|o| (o.len(), o.bits()));
        OpenSetFamily { n, opens }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn opens(&self) -> &[ElemSet] {
        &self.opens
    }

    /// Traces `{U ∩ s}` of the open sets, renumbered like [`Preorder::restrict`].
    pub fn subspace(&self, s: ElemSet) -> Result<OpenSetFamily, TopologyError> {
        if s.is_empty() {
            return Err(TopologyError::EmptySet);
        }
        let points: Vec<usize> = s.iter().collect();
        let traces = self
            .opens
            .iter()
            .map(|o| {
                points
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| o.contains(x))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        OpenSetFamily::new(points.len(), traces)
    }
}
