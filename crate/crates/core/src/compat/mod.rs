//! Compatibility of finite topologies with quandle structures.
//!
//! A topology on a finite quandle makes it a topological quandle exactly when
//! `⊲` is monotone in both arguments for the specialization preorder:
//! `x ≤ x'` and `y ≤ y'` imply `x ⊲ y ≤ x' ⊲ y'`. Equivalently, every right
//! translation is an order automorphism and every left translation is
//! monotone. Both formulations are implemented separately so that each can
//! check the other.

mod classify;
mod counterexample;

use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::perm::Permutation;
use crate::quandle::{QuandleError, QuandleTable};
use crate::topology::{enumerate_preorders, Preorder, TopologyError};

pub use classify::{
    classify, classify_entry, compatible_classes, ClassEntry, ClassificationReport,
    CompatibleClass, CountKind, EnumerationBounds, Expectation, ExpectationOutcome,
    ExpectationStatus, QuandleEntry, MAX_CLASSIFY_ORDER,
};
pub use counterexample::{
    verify_counterexample, verify_counterexample_with, CheckResult, CounterexampleReport,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompatError {
    #[error("quandle has order {0} but topology has order {1}")]
    SizeMismatch(usize, usize),
    #[error("order {n} is outside 1..={max}")]
    OrderOutOfRange { n: usize, max: usize },
    #[error("topology is not compatible: {0}")]
    Incompatible(Witness),
    #[error(transparent)]
    Quandle(#[from] QuandleError),
    #[error(transparent)]
    Topology(#[from] TopologyError),
}

/// Points with `x ≤ x'` and `y ≤ y'` but `x ⊲ y ≰ x' ⊲ y'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Witness {
    pub x: usize,
    pub x2: usize,
    pub y: usize,
    pub y2: usize,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = crate::format::letter;
        write!(
            f,
            "{x} ≤ {x2} and {y} ≤ {y2} but {x}⊲{y} ≰ {x2}⊲{y2}",
            x = l(self.x),
            x2 = l(self.x2),
            y = l(self.y),
            y2 = l(self.y2)
        )
    }
}

fn check_sizes(q: &QuandleTable, p: &Preorder) -> Result<(), CompatError> {
    if q.order() != p.order() {
        return Err(CompatError::SizeMismatch(q.order(), p.order()));
    }
    Ok(())
}

/// The lexicographically smallest `(x, x', y, y')` violating monotonicity, if any.
pub fn compatibility_witness(q: &QuandleTable, p: &Preorder) -> Result<Option<Witness>, CompatError> {
    check_sizes(q, p)?;
    Ok(witness_unchecked(q, p))
}

fn witness_unchecked(q: &QuandleTable, p: &Preorder) -> Option<Witness> {
    let n = q.order();
    for x in 0..n {
        for x2 in p.up_set(x).iter() {
            for y in 0..n {
                for y2 in p.up_set(y).iter() {
                    if !p.leq(q.op(x, y), q.op(x2, y2)) {
                        return Some(Witness { x, x2, y, y2 });
                    }
                }
            }
        }
    }
    None
}

/// Whether `⊲` is monotone in both arguments for `p`.
pub fn is_compatible(q: &QuandleTable, p: &Preorder) -> Result<bool, CompatError> {
    Ok(compatibility_witness(q, p)?.is_none())
}

/// The first translation that fails, scanning right translations before left ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TranslationFailure {
    /// `R_x` is not an order automorphism.
    RightNotHomeomorphism(usize),
    /// `L_x` is not monotone.
    LeftNotContinuous(usize),
}

impl fmt::Display for TranslationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = crate::format::letter;
        match *self {
            TranslationFailure::RightNotHomeomorphism(x) => {
                write!(f, "R_{} is not a homeomorphism", l(x))
            }
            TranslationFailure::LeftNotContinuous(x) => write!(f, "L_{} is not continuous", l(x)),
        }
    }
}

fn is_monotone(p: &Preorder, map: &[usize]) -> bool {
    let n = p.order();
    (0..n).all(|y| p.up_set(y).iter().all(|y2| p.leq(map[y], map[y2])))
}

pub fn translation_failure(
    q: &QuandleTable,
    p: &Preorder,
) -> Result<Option<TranslationFailure>, CompatError> {
    check_sizes(q, p)?;
    for x in 0..q.order() {
        let right = q.right_translation(x)?;
        let inverse = right.inverse();
        if !is_monotone(p, right.image()) || !is_monotone(p, inverse.image()) {
            return Ok(Some(TranslationFailure::RightNotHomeomorphism(x)));
        }
    }
    for x in 0..q.order() {
        if !is_monotone(p, &q.left_translation_map(x)?) {
            return Ok(Some(TranslationFailure::LeftNotContinuous(x)));
        }
    }
    Ok(None)
}

/// Whether every `R_x` is a homeomorphism and every `L_x` is continuous.
pub fn is_compatible_via_translations(q: &QuandleTable, p: &Preorder) -> Result<bool, CompatError> {
    Ok(translation_failure(q, p)?.is_none())
}

/// Whether `p` restricted to every orbit of `q` is coarse.
pub fn check_coarse_on_orbits(q: &QuandleTable, p: &Preorder) -> Result<bool, CompatError> {
    check_sizes(q, p)?;
    for &block in q.orbit_decomposition().blocks() {
        if !p.restrict(block)?.is_coarse() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All compatible preorders, sorted by relation matrix.
///
/// With `up_to_iso`, one representative per orbit of the quandle's
/// automorphism group acting on topologies (see [`compatible_classes`]).
pub fn compatible_topologies(q: &QuandleTable, up_to_iso: bool) -> Result<Vec<Preorder>, CompatError> {
    if up_to_iso {
        return Ok(compatible_classes(q)?
            .into_iter()
            .map(|c| c.representative)
            .collect());
    }
    let all = enumerate_preorders(q.order(), false).map_err(|_| CompatError::OrderOutOfRange {
        n: q.order(),
        max: crate::topology::MAX_PREORDER_ENUMERATION_ORDER,
    })?;
    Ok(all
        .into_par_iter()
        .filter(|p| witness_unchecked(q, p).is_none())
        .collect())
}

/// A quandle together with a compatible topology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopQuandle {
    quandle: QuandleTable,
    topology: Preorder,
}

impl TopQuandle {
    pub fn new(quandle: QuandleTable, topology: Preorder) -> Result<Self, CompatError> {
        if let Some(w) = compatibility_witness(&quandle, &topology)? {
            return Err(CompatError::Incompatible(w));
        }
        Ok(TopQuandle { quandle, topology })
    }

    pub fn quandle(&self) -> &QuandleTable {
        &self.quandle
    }

    pub fn topology(&self) -> &Preorder {
        &self.topology
    }

    /// A bijection that is both a quandle isomorphism and a homeomorphism onto `other`.
    pub fn find_isomorphism(&self, other: &TopQuandle) -> Result<Option<Permutation>, CompatError> {
        let (n1, n2) = (self.quandle.order(), other.quandle.order());
        if n1 != n2 {
            return Err(CompatError::SizeMismatch(n1, n2));
        }
        Ok(self
            .quandle
            .isomorphisms(&other.quandle)?
            .into_iter()
            .find(|s| self.topology.relabel(s) == other.topology))
    }
}

/// Free-function form of [`TopQuandle::find_isomorphism`].
pub fn find_tq_isomorphism(t1: &TopQuandle, t2: &TopQuandle) -> Result<Option<Permutation>, CompatError> {
    t1.find_isomorphism(t2)
}
