//! Exhaustive generation of quandle tables.
//!
//! A table is determined by its right translations `R_j` (its columns). Each
//! `R_j` is a permutation fixing `j`, and self-distributivity is equivalent to
//! `R_k ∘ R_j ∘ R_k⁻¹ = R_{R_k(j)}` for all `j, k`. The search assigns the
//! lowest unassigned column from the candidate permutations and then
//! propagates that identity, which either forces further columns or
//! exposes a contradiction.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::{QuandleError, QuandleTable};
use crate::perm::Permutation;

/// Largest order accepted by [`enumerate_quandles`].
pub const MAX_ENUMERATION_ORDER: usize = 6;

type Column = Vec<u8>;

#[derive(Clone)]
struct Partial {
    cols: Vec<Option<Column>>,
}

impl Partial {
    fn new(n: usize) -> Self {
        Partial {
            cols: vec![None; n],
        }
    }

    /// Assigns `col` to `j` and closes under the conjugation identity.
    fn assign(&mut self, j: usize, col: Column) -> bool {
        let n = self.cols.len();
        let mut pending = vec![(j, col)];
        while let Some((t, col)) = pending.pop() {
            match &self.cols[t] {
                Some(existing) => {
                    if *existing != col {
                        return false;
                    }
                    continue;
                }
                None => self.cols[t] = Some(col),
            }
            // New column t interacts with every assigned column in both roles.
            let assigned: Vec<usize> = (0..n).filter(|&x| self.cols[x].is_some()).collect();
            for &k in &assigned {
                for &(outer, inner) in &[(k, t), (t, k)] {
                    let ro = self.cols[outer].as_ref().expect("assigned");
                    let ri = self.cols[inner].as_ref().expect("assigned");
                    let target = ro[inner] as usize;
                    let mut conj = vec![0u8; n];
                    // conj = ro ∘ ri ∘ ro⁻¹, i.e. conj[ro[x]] = ro[ri[x]]
                    for x in 0..n {
                        conj[ro[x] as usize] = ro[ri[x] as usize];
                    }
                    match &self.cols[target] {
                        Some(existing) if *existing != conj => return false,
                        Some(_) => {}
                        None => pending.push((target, conj)),
                    }
                }
            }
        }
        true
    }

    fn next_free(&self) -> Option<usize> {
        self.cols.iter().position(Option::is_none)
    }

    fn into_table(self) -> QuandleTable {
        let n = self.cols.len();
        let cols: Vec<Column> = self.cols.into_iter().map(|c| c.expect("complete")).collect();
        let mut cells = vec![0u8; n * n];
        for (j, col) in cols.iter().enumerate() {
            for (i, &v) in col.iter().enumerate() {
                cells[i * n + j] = v;
            }
        }
        QuandleTable::from_cells_unchecked(n, cells)
    }
}

fn candidates(n: usize) -> Vec<Vec<Column>> {
    let all: Vec<Column> = Permutation::all(n)
        .map(|p| p.image().iter().map(|&v| v as u8).collect())
        .collect();
    (0..n)
        .map(|j| all.iter().filter(|c| c[j] as usize == j).cloned().collect())
        .collect()
}

fn search(state: Partial, cands: &[Vec<Column>], out: &mut Vec<QuandleTable>) {
    let Some(j) = state.next_free() else {
        out.push(state.into_table());
        return;
    };
    for col in &cands[j] {
        let mut next = state.clone();
        if next.assign(j, col.clone()) {
            search(next, cands, out);
        }
    }
}

/// All labeled quandle tables of order `n`, sorted row-major.
fn labeled(n: usize) -> Vec<QuandleTable> {
    let cands = candidates(n);
    let mut all: Vec<QuandleTable> = cands[0]
        .par_iter()
        .flat_map_iter(|col| {
            let mut state = Partial::new(n);
            let mut out = Vec::new();
            if state.assign(0, col.clone()) {
                search(state, &cands, &mut out);
            }
            out
        })
        .collect();
    all.sort();
    all
}

/// Enumerates quandles of order `n`.
///
/// With `up_to_iso`, returns one canonical representative per isomorphism
/// class (see [`QuandleTable::canonical_form`]) in sorted order; otherwise
/// every labeled table, sorted.
pub fn enumerate_quandles(n: usize, up_to_iso: bool) -> Result<Vec<QuandleTable>, QuandleError> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&n) {
        return Err(QuandleError::EnumerationOrder {
            n,
            max: MAX_ENUMERATION_ORDER,
        });
    }
    let all = labeled(n);
    if !up_to_iso {
        return Ok(all);
    }
    let forms: BTreeSet<QuandleTable> = all.par_iter().map(QuandleTable::canonical_form).collect();
    Ok(forms.into_iter().collect())
}
