//! Finite quandles given by their operation tables.
//!
//! Elements are the indices `0..n`; entry `(i, j)` of a table is `i ⊲ j`.
//! A table is a quandle when it is idempotent (`i ⊲ i = i`), every column
//! is a permutation (right translations are bijective), and the operation
//! is right self-distributive.

mod enumerate;
mod union_find;

use std::fmt;

use thiserror::Error;

use crate::perm::Permutation;
use crate::set::{ElemSet, MAX_ORDER};

pub use enumerate::{enumerate_quandles, MAX_ENUMERATION_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuandleError {
    #[error("order {0} is outside the supported range 1..={max}", max = MAX_ORDER)]
    UnsupportedOrder(usize),
    #[error("row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("entry ({row}, {col}) = {value} is outside [0, {n})")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        n: usize,
    },
    #[error("not idempotent: {} ⊲ {} != {}", letter(*.0), letter(*.0), letter(*.0))]
    NotIdempotent(usize),
    #[error("column {} is not a bijection", letter(*.0))]
    ColumnNotBijective(usize),
    #[error(
        "not right self-distributive at ({}, {}, {})",
        letter(*.0),
        letter(*.1),
        letter(*.2)
    )]
    NotSelfDistributive(usize, usize, usize),
    #[error("index {index} is outside [0, {n})")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("the empty set is not a subquandle")]
    EmptySet,
    #[error("{0} is not a complemented subquandle")]
    NotComplemented(ElemSet),
    #[error("intersection of {0} and {1} is empty")]
    EmptyIntersection(ElemSet, ElemSet),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("enumeration order {n} is outside 1..={max}")]
    EnumerationOrder { n: usize, max: usize },
}

fn letter(x: usize) -> char {
    crate::format::letter(x)
}

/// A validated quandle operation table.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuandleTable {
    n: usize,
    // row-major, cells[i * n + j] = i ⊲ j
    cells: Vec<u8>,
}

impl QuandleTable {
    /// Validates a raw table, reporting the first violated axiom.
    ///
    /// Checks run in axiom order: entry ranges, idempotence, column
    /// bijectivity, then self-distributivity over `(i, j, k)` in row-major order.
    pub fn new(rows: &[Vec<usize>]) -> Result<Self, QuandleError> {
        let n = rows.len();
        if n == 0 || n > MAX_ORDER {
            return Err(QuandleError::UnsupportedOrder(n));
        }
        let mut cells = Vec::with_capacity(n * n);
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(QuandleError::NotSquare {
                    row,
                    len: r.len(),
                    n,
                });
            }
            for (col, &value) in r.iter().enumerate() {
                if value >= n {
                    return Err(QuandleError::EntryOutOfRange {
                        row,
                        col,
                        value,
                        n,
                    });
                }
                cells.push(value as u8);
            }
        }
        let table = QuandleTable { n, cells };
        table.check_axioms()?;
        Ok(table)
    }

    /// Builds a table from row-major cells that are already known to satisfy the axioms.
    pub(crate) fn from_cells_unchecked(n: usize, cells: Vec<u8>) -> Self {
        debug_assert_eq!(cells.len(), n * n);
        QuandleTable { n, cells }
    }

    fn check_axioms(&self) -> Result<(), QuandleError> {
        let n = self.n;
        for i in 0..n {
            if self.op(i, i) != i {
                return Err(QuandleError::NotIdempotent(i));
            }
        }
        for j in 0..n {
            let column: ElemSet = (0..n).map(|i| self.op(i, j)).collect();
            if column.len() != n {
                return Err(QuandleError::ColumnNotBijective(j));
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if self.op(self.op(i, j), k) != self.op(self.op(i, k), self.op(j, k)) {
                        return Err(QuandleError::NotSelfDistributive(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    /// The trivial quandle `x ⊲ y = x`.
    pub fn trivial(n: usize) -> Self {
        assert!((1..=MAX_ORDER).contains(&n));
        let cells = (0..n).flat_map(|i| std::iter::repeat_n(i as u8, n)).collect();
        QuandleTable { n, cells }
    }

    /// The dihedral quandle `x ⊲ y = 2y - x mod n`.
    pub fn dihedral(n: usize) -> Self {
        assert!((1..=MAX_ORDER).contains(&n));
        let cells = (0..n)
            .flat_map(|i| (0..n).map(move |j| ((2 * j + n - i) % n) as u8))
            .collect();
        QuandleTable { n, cells }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// `x ⊲ y`.
    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.n + y] as usize
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.cells
            .chunks(self.n)
            .map(|r| r.iter().map(|&v| v as usize).collect())
            .collect()
    }

    fn check_index(&self, x: usize) -> Result<(), QuandleError> {
        if x < self.n {
            Ok(())
        } else {
            Err(QuandleError::IndexOutOfRange {
                index: x,
                n: self.n,
            })
        }
    }

    fn check_set(&self, s: ElemSet) -> Result<(), QuandleError> {
        if s.is_empty() {
            return Err(QuandleError::EmptySet);
        }
        if !s.is_subset(ElemSet::full(self.n)) {
            let index = s.iter().find(|&x| x >= self.n).unwrap_or(self.n);
            return Err(QuandleError::IndexOutOfRange { index, n: self.n });
        }
        Ok(())
    }

    /// `R_x : y ↦ y ⊲ x`.
    pub fn right_translation(&self, x: usize) -> Result<Permutation, QuandleError> {
        self.check_index(x)?;
        let image = (0..self.n).map(|y| self.op(y, x)).collect();
        Ok(Permutation::new(image).expect("columns of a quandle are bijective"))
    }

    /// `L_x : y ↦ x ⊲ y`, which need not be a bijection.
    pub fn left_translation_map(&self, x: usize) -> Result<Vec<usize>, QuandleError> {
        self.check_index(x)?;
        Ok((0..self.n).map(|y| self.op(x, y)).collect())
    }

    /// Whether `s` is closed under `⊲` and each right translation by a member of `s` permutes `s`.
    pub fn is_subquandle(&self, s: ElemSet) -> Result<bool, QuandleError> {
        self.check_set(s)?;
        Ok(self.is_subquandle_unchecked(s))
    }

    fn is_subquandle_unchecked(&self, s: ElemSet) -> bool {
        s.iter().all(|y| {
            let image: ElemSet = s.iter().map(|x| self.op(x, y)).collect();
            image == s
        })
    }

    /// Whether both `s` and its complement are subquandles. The full carrier counts as complemented.
    pub fn is_complemented(&self, s: ElemSet) -> Result<bool, QuandleError> {
        self.check_set(s)?;
        Ok(self.is_complemented_unchecked(s))
    }

    fn is_complemented_unchecked(&self, s: ElemSet) -> bool {
        let rest = s.complement(self.n);
        self.is_subquandle_unchecked(s) && (rest.is_empty() || self.is_subquandle_unchecked(rest))
    }

    /// Connected components of the graph joining `y` and `y ⊲ z`.
    pub fn orbit_decomposition(&self) -> OrbitDecomposition {
        let mut uf = union_find::UnionFind::new(self.n);
        for y in 0..self.n {
            for z in 0..self.n {
                uf.union(y, self.op(y, z));
            }
        }
        OrbitDecomposition::from_labels(&(0..self.n).map(|x| uf.find(x)).collect::<Vec<_>>())
    }

    /// Intersection of every complemented subquandle that contains `a`,
    /// found by scanning all subsets of the carrier.
    pub fn minimal_complemented_containing(&self, a: usize) -> Result<ElemSet, QuandleError> {
        self.check_index(a)?;
        Ok(ElemSet::all_subsets(self.n)
            .filter(|s| s.contains(a) && self.is_complemented_unchecked(*s))
            .fold(ElemSet::full(self.n), ElemSet::intersection))
    }

    /// Intersects two complemented subquandles; the result is checked to be complemented again.
    pub fn intersect_complemented(&self, s1: ElemSet, s2: ElemSet) -> Result<ElemSet, QuandleError> {
        for s in [s1, s2] {
            if !self.is_complemented(s)? {
                return Err(QuandleError::NotComplemented(s));
            }
        }
        let meet = s1.intersection(s2);
        if meet.is_empty() {
            return Err(QuandleError::EmptyIntersection(s1, s2));
        }
        if !self.is_complemented_unchecked(meet) {
            return Err(QuandleError::NotComplemented(meet));
        }
        Ok(meet)
    }

    /// The table obtained by renaming each element `x` to `sigma(x)`.
    pub fn relabel(&self, sigma: &Permutation) -> QuandleTable {
        assert_eq!(sigma.len(), self.n);
        let n = self.n;
        let mut cells = vec![0u8; n * n];
        for i in 0..n {
            for j in 0..n {
                cells[sigma.apply(i) * n + sigma.apply(j)] = sigma.apply(self.op(i, j)) as u8;
            }
        }
        QuandleTable { n, cells }
    }

    /// Sorted multiset of orbit sizes, an isomorphism invariant.
    pub fn orbit_profile(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self
            .orbit_decomposition()
            .blocks()
            .iter()
            .map(|b| b.len())
            .collect();
        sizes.sort_unstable();
        sizes
    }

    /// The lexicographically first isomorphism `sigma` with `sigma(x ⊲ y) = sigma(x) ⊲' sigma(y)`.
    pub fn find_isomorphism(&self, other: &QuandleTable) -> Result<Option<Permutation>, QuandleError> {
        if self.n != other.n {
            return Err(QuandleError::SizeMismatch(self.n, other.n));
        }
        if self.orbit_profile() != other.orbit_profile() {
            return Ok(None);
        }
        let mut found = None;
        isomorphism_search(self, other, &mut |p| {
            found = Some(p);
            false
        });
        Ok(found)
    }

    /// Every isomorphism onto `other`, in lexicographic order.
    pub fn isomorphisms(&self, other: &QuandleTable) -> Result<Vec<Permutation>, QuandleError> {
        if self.n != other.n {
            return Err(QuandleError::SizeMismatch(self.n, other.n));
        }
        let mut all = Vec::new();
        isomorphism_search(self, other, &mut |p| {
            all.push(p);
            true
        });
        Ok(all)
    }

    pub fn automorphisms(&self) -> Vec<Permutation> {
        self.isomorphisms(self).expect("same order")
    }

    /// The lexicographically smallest row-major table among all relabelings.
    pub fn canonical_form(&self) -> QuandleTable {
        let n = self.n;
        let mut best = self.cells.clone();
        let mut candidate = vec![0u8; n * n];
        // `tau` lists the old element placed at each new position.
        for tau in Permutation::all(n) {
            let sigma = tau.inverse();
            let mut decided = false;
            let mut smaller = false;
            for r in 0..n {
                for c in 0..n {
                    let v = sigma.apply(self.op(tau.apply(r), tau.apply(c))) as u8;
                    candidate[r * n + c] = v;
                    if !decided {
                        let b = best[r * n + c];
                        if v < b {
                            decided = true;
                            smaller = true;
                        } else if v > b {
                            decided = true;
                        }
                    }
                }
                if decided && !smaller {
                    break;
                }
            }
            if smaller {
                best.copy_from_slice(&candidate);
            }
        }
        QuandleTable { n, cells: best }
    }
}

/// Backtracking over partial bijections; `visit` returns whether to keep searching.
fn isomorphism_search(
    a: &QuandleTable,
    b: &QuandleTable,
    visit: &mut dyn FnMut(Permutation) -> bool,
) {
    fn extend(
        a: &QuandleTable,
        b: &QuandleTable,
        map: &mut Vec<usize>,
        used: &mut ElemSet,
        visit: &mut dyn FnMut(Permutation) -> bool,
    ) -> bool {
        let k = map.len();
        let n = a.order();
        if k == n {
            return visit(Permutation::new(map.clone()).expect("bijection"));
        }
        for target in 0..n {
            if used.contains(target) {
                continue;
            }
            map.push(target);
            let consistent = (0..=k).all(|x| {
                [(x, k), (k, x)].into_iter().all(|(u, v)| {
                    let w = a.op(u, v);
                    w > k || map[w] == b.op(map[u], map[v])
                })
            });
            if consistent {
                used.insert(target);
                let go_on = extend(a, b, map, used, visit);
                used.remove(target);
                if !go_on {
                    map.pop();
                    return false;
                }
            }
            map.pop();
        }
        true
    }
    let mut map = Vec::with_capacity(a.order());
    let mut used = ElemSet::EMPTY;
    extend(a, b, &mut map, &mut used, visit);
}

impl fmt::Debug for QuandleTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuandleTable[{}]", crate::format::compact_rows(&self.rows()))
    }
}

impl fmt::Display for QuandleTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::format::write_quandle(self))
    }
}

/// Partition of a quandle into its orbits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitDecomposition {
    blocks: Vec<ElemSet>,
    block_of: Vec<usize>,
}

impl OrbitDecomposition {
    /// Builds the partition from arbitrary per-element labels; blocks are ordered by smallest member.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut blocks: Vec<ElemSet> = Vec::new();
        let mut block_of = vec![0; labels.len()];
        let mut seen: Vec<(usize, usize)> = Vec::new();
        for (x, &label) in labels.iter().enumerate() {
            let id = match seen.iter().find(|(l, _)| *l == label) {
                Some(&(_, id)) => id,
                None => {
                    seen.push((label, blocks.len()));
                    blocks.push(ElemSet::EMPTY);
                    blocks.len() - 1
                }
            };
            blocks[id].insert(x);
            block_of[x] = id;
        }
        OrbitDecomposition { blocks, block_of }
    }

    pub fn blocks(&self) -> &[ElemSet] {
        &self.blocks
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    pub fn block_containing(&self, x: usize) -> ElemSet {
        self.blocks[self.block_of[x]]
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

impl fmt::Display for OrbitDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.blocks.iter().map(|b| b.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}
