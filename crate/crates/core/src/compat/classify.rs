//! Classification of topological quandles of a given order.
//!
//! For each quandle class (canonical representative), the compatible
//! topologies are found by exhaustive filtering and then grouped into orbits
//! under the quandle's automorphism group acting by relabeling. Two
//! topologies on the same quandle give isomorphic topological quandles
//! exactly when such an automorphism carries one onto the other.

use std::collections::BTreeMap;
use std::fmt::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{compatible_topologies, check_coarse_on_orbits, CompatError};
use crate::format::{compact_rows, letter, parse_quandle};
use crate::quandle::{enumerate_quandles, QuandleTable, MAX_ENUMERATION_ORDER};
use crate::topology::DiagramRecord;
use crate::topology::{Preorder, MAX_PREORDER_ENUMERATION_ORDER};

/// Orders up to 4 are the design target; 5 runs but takes longer.
pub const MAX_CLASSIFY_ORDER: usize = 5;

const EXPECTATIONS: &str = include_str!("../../data/expectations.json");

/// One orbit of compatible topologies under the automorphism group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatibleClass {
    /// Lexicographically smallest member.
    pub representative: Preorder,
    /// Number of labeled topologies in the orbit.
    pub labeled_size: usize,
}

/// Compatible topologies of `q` up to topological-quandle isomorphism, sorted by representative.
pub fn compatible_classes(q: &QuandleTable) -> Result<Vec<CompatibleClass>, CompatError> {
    let labeled = compatible_topologies(q, false)?;
    let automorphisms = q.automorphisms();
    let mut orbits: BTreeMap<u64, CompatibleClass> = BTreeMap::new();
    for p in labeled {
        let rep = automorphisms
            .iter()
            .map(|s| p.relabel(s))
            .min_by_key(Preorder::key)
            .expect("identity is an automorphism");
        orbits
            .entry(rep.key())
            .or_insert(CompatibleClass {
                representative: rep,
                labeled_size: 0,
            })
            .labeled_size += 1;
    }
    Ok(orbits.into_values().collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CountKind {
    /// Count of labeled topologies on the fixed carrier.
    Labeled,
    /// Count of classes up to topological-quandle isomorphism.
    Classes,
}

/// A published count for one quandle, as recorded in the expectations file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expectation {
    pub order: usize,
    pub matrix: Vec<String>,
    pub kind: CountKind,
    pub count: usize,
    /// Advisory entries are reported but never fail a run.
    #[serde(default)]
    pub advisory: bool,
    pub citation: String,
    /// Prose description of the family when the source states it as a predicate.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
}

impl Expectation {
    pub fn quandle(&self) -> QuandleTable {
        let text = format!("{}\n{}\n", self.order, self.matrix.join("\n"));
        parse_quandle(&text).expect("expectation matrices are valid quandles")
    }

    /// All entries of the checked-in expectations file.
    pub fn all() -> Vec<Expectation> {
        serde_json::from_str(EXPECTATIONS).expect("expectations file is valid JSON")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExpectationStatus {
    Match,
    Mismatch,
    AdvisoryMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectationOutcome {
    pub kind: CountKind,
    pub expected: usize,
    pub computed: usize,
    pub status: ExpectationStatus,
    pub citation: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassEntry {
    pub preorder: Vec<String>,
    pub labeled_size: usize,
    pub coarse_on_orbits: bool,
    pub quotient_hasse: DiagramRecord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuandleEntry {
    pub index: usize,
    pub matrix: Vec<String>,
    pub orbits: Vec<String>,
    pub automorphism_count: usize,
    pub labeled_compatible_count: usize,
    pub class_count: usize,
    pub classes: Vec<ClassEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub paper_expected_count: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expectation: Option<ExpectationOutcome>,
}

impl QuandleEntry {
    pub fn quandle(&self) -> QuandleTable {
        let text = format!("{}\n{}\n", self.matrix.len(), self.matrix.join("\n"));
        parse_quandle(&text).expect("report matrices are valid quandles")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationBounds {
    pub max_quandle_order: usize,
    pub max_preorder_order: usize,
    pub max_classify_order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub n: usize,
    pub tool_version: String,
    pub bounds: EnumerationBounds,
    pub quandles: Vec<QuandleEntry>,
}

fn check_order(n: usize) -> Result<(), CompatError> {
    if (1..=MAX_CLASSIFY_ORDER).contains(&n) {
        Ok(())
    } else {
        Err(CompatError::OrderOutOfRange {
            n,
            max: MAX_CLASSIFY_ORDER,
        })
    }
}

fn matrix_lines(q: &QuandleTable) -> Vec<String> {
    q.rows()
        .iter()
        .map(|r| r.iter().map(|&x| letter(x).to_string()).collect::<Vec<_>>().join(" "))
        .collect()
}

fn entry_for(
    index: usize,
    q: &QuandleTable,
    expectations: &[(QuandleTable, Expectation)],
) -> Result<QuandleEntry, CompatError> {
    let labeled_count = compatible_topologies(q, false)?.len();
    let classes = compatible_classes(q)?;
    let class_entries = classes
        .iter()
        .map(|c| {
            Ok(ClassEntry {
                preorder: c.representative.matrix_strings(),
                labeled_size: c.labeled_size,
                coarse_on_orbits: check_coarse_on_orbits(q, &c.representative)?,
                quotient_hasse: c.representative.quotient_hasse().to_record(),
            })
        })
        .collect::<Result<Vec<_>, CompatError>>()?;
    let canonical = q.canonical_form();
    let expectation = expectations
        .iter()
        .find(|(eq, e)| e.order == q.order() && *eq == canonical)
        .map(|(_, e)| {
            let computed = match e.kind {
                CountKind::Labeled => labeled_count,
                CountKind::Classes => classes.len(),
            };
            let status = if computed == e.count {
                ExpectationStatus::Match
            } else if e.advisory {
                ExpectationStatus::AdvisoryMismatch
            } else {
                ExpectationStatus::Mismatch
            };
            ExpectationOutcome {
                kind: e.kind,
                expected: e.count,
                computed,
                status,
                citation: e.citation.clone(),
                family: e.family.clone(),
            }
        });
    Ok(QuandleEntry {
        index,
        matrix: matrix_lines(q),
        orbits: q
            .orbit_decomposition()
            .blocks()
            .iter()
            .map(|b| b.to_string())
            .collect(),
        automorphism_count: q.automorphisms().len(),
        labeled_compatible_count: labeled_count,
        class_count: classes.len(),
        classes: class_entries,
        paper_expected_count: expectation.as_ref().map(|e| e.expected),
        expectation,
    })
}

fn canonical_expectations(n: usize) -> Vec<(QuandleTable, Expectation)> {
    Expectation::all()
        .into_iter()
        .filter(|e| e.order == n)
        .map(|e| (e.quandle().canonical_form(), e))
        .collect()
}

/// Classifies the quandle at position `index` of `enumerate_quandles(n, true)`.
pub fn classify_entry(n: usize, index: usize) -> Result<QuandleEntry, CompatError> {
    check_order(n)?;
    let quandles = enumerate_quandles(n, true)?;
    let q = quandles.get(index).ok_or(CompatError::OrderOutOfRange {
        n: index,
        max: quandles.len().saturating_sub(1),
    })?;
    entry_for(index, q, &canonical_expectations(n))
}

/// Classifies every topological quandle of order `n`, one entry per quandle class.
pub fn classify(n: usize) -> Result<ClassificationReport, CompatError> {
    check_order(n)?;
    let quandles = enumerate_quandles(n, true)?;
    let expectations = canonical_expectations(n);
    let entries = quandles
        .par_iter()
        .enumerate()
        .map(|(i, q)| entry_for(i, q, &expectations))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ClassificationReport {
        n,
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        bounds: EnumerationBounds {
            max_quandle_order: MAX_ENUMERATION_ORDER,
            max_preorder_order: MAX_PREORDER_ENUMERATION_ORDER,
            max_classify_order: MAX_CLASSIFY_ORDER,
        },
        quandles: entries,
    })
}

impl ClassificationReport {
    /// Entries whose non-advisory expectation disagrees with the computed count.
    pub fn mismatches(&self) -> Vec<&QuandleEntry> {
        self.quandles
            .iter()
            .filter(|e| {
                matches!(
                    e.expectation.as_ref().map(|x| x.status),
                    Some(ExpectationStatus::Mismatch)
                )
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// One line per quandle class, aligned.
    pub fn summary_table(&self) -> String {
        let rows: Vec<[String; 7]> = self
            .quandles
            .iter()
            .map(|e| {
                let expected = match &e.expectation {
                    None => "-".to_string(),
                    Some(x) => {
                        let kind = match x.kind {
                            CountKind::Labeled => "labeled",
                            CountKind::Classes => "classes",
                        };
                        let status = match x.status {
                            ExpectationStatus::Match => "ok",
                            ExpectationStatus::Mismatch => "MISMATCH",
                            ExpectationStatus::AdvisoryMismatch => "differs (advisory)",
                        };
                        format!("{} {kind} {status}", x.expected)
                    }
                };
                [
                    e.index.to_string(),
                    compact_rows(&e.quandle().rows()),
                    e.orbits.join(" "),
                    e.automorphism_count.to_string(),
                    e.labeled_compatible_count.to_string(),
                    e.class_count.to_string(),
                    expected,
                ]
            })
            .collect();
        let header = ["#", "matrix", "orbits", "aut", "labeled", "classes", "expected"];
        let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
        for r in &rows {
            for (w, cell) in widths.iter_mut().zip(r.iter()) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let mut out = String::new();
        let mut line = |cells: Vec<&str>| {
            let mut l = String::new();
            for (i, (c, w)) in cells.iter().zip(&widths).enumerate() {
                if i + 1 == cells.len() {
                    l.push_str(c);
                } else {
                    write!(l, "{c:<w$}  ", w = *w).unwrap();
                }
            }
            out.push_str(l.trim_end());
            out.push('\n');
        };
        line(header.to_vec());
        for r in &rows {
            line(r.iter().map(String::as_str).collect());
        }
        out
    }
}
