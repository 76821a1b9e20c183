use std::collections::BTreeSet;

use super::{OpenSetFamily, Preorder, TopologyError};
use crate::set::ElemSet;

/// Largest order accepted by [`enumerate_preorders`].
pub const MAX_PREORDER_ENUMERATION_ORDER: usize = 5;

/// Labeled preorders by scanning every off-diagonal bit pattern and keeping the transitive ones.
pub fn labeled_preorders_by_mask(n: usize) -> Vec<Preorder> {
    let off: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << off.len()) {
        let mut up: Vec<u16> = (0..n).map(|x| 1 << x).collect();
        for (bit, &(x, y)) in off.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                up[x] |= 1 << y;
            }
        }
        // transitive iff every up-set contains the up-sets of its members
        let transitive = (0..n).all(|x| {
            ElemSet::from_bits(up[x])
                .iter()
                .all(|y| up[y] & !up[x] == 0)
        });
        if transitive {
            out.push(Preorder::from_up_sets_unchecked(n, up));
        }
    }
    out.sort();
    out
}

/// Labeled preorders built one point at a time.
///
/// A preorder on `k + 1` points restricts to one on the first `k`. The new
/// point is added by choosing a down-closed set `D` below it and an up-closed
/// set `U` above it with every member of `D` below every member of `U`.
pub fn labeled_preorders_by_extension(n: usize) -> Vec<Preorder> {
    let mut level = vec![Preorder::from_up_sets_unchecked(1, vec![1])];
    for k in 1..n {
        let mut next = Vec::new();
        for p in &level {
            let ups: Vec<ElemSet> = ElemSet::all_subsets(k)
                .filter(|s| s.iter().all(|x| p.up_set(x).is_subset(*s)))
                .collect();
            let downs: Vec<ElemSet> = ElemSet::all_subsets(k)
                .filter(|s| s.iter().all(|x| p.down_set(x).is_subset(*s)))
                .collect();
            for &d in &downs {
                for &u in &ups {
                    if !d.iter().all(|x| u.is_subset(p.up_set(x))) {
                        continue;
                    }
                    let mut up: Vec<u16> = (0..k).map(|x| p.up_set(x).bits()).collect();
                    for x in d.iter() {
                        up[x] |= 1 << k;
                    }
                    up.push(u.bits() | (1 << k));
                    next.push(Preorder::from_up_sets_unchecked(k + 1, up));
                }
            }
        }
        level = next;
    }
    level.sort();
    level
}

/// Enumerates preorders on `n` points, sorted by relation matrix.
///
/// With `up_to_homeo`, one canonical (lexicographically smallest) representative per class.
pub fn enumerate_preorders(n: usize, up_to_homeo: bool) -> Result<Vec<Preorder>, TopologyError> {
    if !(1..=MAX_PREORDER_ENUMERATION_ORDER).contains(&n) {
        return Err(TopologyError::EnumerationOrder {
            n,
            max: MAX_PREORDER_ENUMERATION_ORDER,
        });
    }
    let labeled = if n <= 4 {
        labeled_preorders_by_mask(n)
    } else {
        labeled_preorders_by_extension(n)
    };
    if !up_to_homeo {
        return Ok(labeled);
    }
    let reps: BTreeSet<Preorder> = labeled.iter().map(Preorder::canonical_form).collect();
    Ok(reps.into_iter().collect())
}

/// Every family of subsets of `[0, n)` satisfying the topology axioms, found
/// by brute force over families of proper nonempty subsets. Only practical for `n <= 4`.
pub fn enumerate_open_set_families(n: usize) -> Vec<OpenSetFamily> {
    assert!(n <= 4, "2^(2^n - 2) families is too many beyond n = 4");
    let full = ElemSet::full(n);
    let inner: Vec<ElemSet> = ElemSet::all_subsets(n)
        .filter(|s| !s.is_empty() && *s != full)
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << inner.len()) {
        let mut member = vec![false; 1 << n];
        member[0] = true;
        member[full.bits() as usize] = true;
        for (bit, s) in inner.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                member[s.bits() as usize] = true;
            }
        }
        let sets: Vec<ElemSet> = (0..member.len())
            .filter(|&b| member[b])
            .map(|b| ElemSet::from_bits(b as u16))
            .collect();
        let closed = sets.iter().all(|a| {
            sets.iter().all(|b| {
                member[a.union(*b).bits() as usize] && member[a.intersection(*b).bits() as usize]
            })
        });
        if closed {
            out.push(OpenSetFamily::new(n, sets).expect("checked above"));
        }
    }
    out
}
