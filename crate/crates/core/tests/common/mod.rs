//! Brute-force oracles shared by the integration tests. Nothing here calls the
//! library's search, canonical-form or compatibility code.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::{BTreeMap, BTreeSet};

pub type Table = Vec<Vec<usize>>;
pub type Rel = Vec<Vec<bool>>;

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

pub fn is_quandle(t: &Table) -> bool {
    let n = t.len();
    for x in 0..n {
        if t[x].len() != n || t[x][x] != x {
            return false;
        }
    }
    for y in 0..n {
        let mut seen = vec![false; n];
        for x in 0..n {
            if t[x][y] >= n || seen[t[x][y]] {
                return false;
            }
            seen[t[x][y]] = true;
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if t[t[x][y]][z] != t[t[x][z]][t[y][z]] {
                    return false;
                }
            }
        }
    }
    true
}

/// Every labeled quandle of order `n`, by trying every tuple of columns where
/// column `j` is a permutation fixing `j`.
pub fn brute_force_quandles(n: usize) -> Vec<Table> {
    let cols: Vec<Vec<Vec<usize>>> = (0..n)
        .map(|j| permutations(n).into_iter().filter(|p| p[j] == j).collect())
        .collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; n];
    loop {
        let mut t = vec![vec![0; n]; n];
        for (j, &c) in choice.iter().enumerate() {
            for x in 0..n {
                t[x][j] = cols[j][c][x];
            }
        }
        if self_distributive(&t) {
            out.push(t);
        }
        let mut k = 0;
        loop {
            if k == n {
                out.sort();
                return out;
            }
            choice[k] += 1;
            if choice[k] < cols[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

fn self_distributive(t: &Table) -> bool {
    let n = t.len();
    (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| t[t[x][y]][z] == t[t[x][z]][t[y][z]])))
}

pub fn relabel_table(t: &Table, s: &[usize]) -> Table {
    let n = t.len();
    let mut out = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            out[s[i]][s[j]] = s[t[i][j]];
        }
    }
    out
}

/// Lexicographically least relabeling of the table.
pub fn naive_canonical(t: &Table) -> Table {
    permutations(t.len())
        .iter()
        .map(|s| relabel_table(t, s))
        .min()
        .unwrap()
}

pub fn iso_classes(tables: &[Table]) -> BTreeSet<Table> {
    tables.iter().map(naive_canonical).collect()
}

pub fn automorphisms(t: &Table) -> Vec<Vec<usize>> {
    permutations(t.len())
        .into_iter()
        .filter(|s| relabel_table(t, s) == *t)
        .collect()
}

pub fn closure_classes(t: &Table) -> Vec<usize> {
    // Repeated relaxation: label[x] = least element reachable from x through y ~ y⊲z.
    let n = t.len();
    let mut label: Vec<usize> = (0..n).collect();
    let mut changed = true;
    while changed {
        changed = false;
        for y in 0..n {
            for z in 0..n {
                let w = t[y][z];
                let m = label[y].min(label[w]);
                if label[y] != m || label[w] != m {
                    label[y] = m;
                    label[w] = m;
                    changed = true;
                }
            }
        }
    }
    label
}

pub fn orbit_sets(t: &Table) -> Vec<BTreeSet<usize>> {
    let label = closure_classes(t);
    let mut m: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for (x, l) in label.into_iter().enumerate() {
        m.entry(l).or_default().insert(x);
    }
    m.into_values().collect()
}

pub fn mask_members(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| mask >> i & 1 == 1).collect()
}

pub fn subquandle(t: &Table, mask: u32) -> bool {
    let els = mask_members(mask, t.len());
    !els.is_empty()
        && els
            .iter()
            .all(|&x| els.iter().all(|&y| mask >> t[x][y] & 1 == 1))
}

pub fn complemented(t: &Table, mask: u32) -> bool {
    let full = (1u32 << t.len()) - 1;
    subquandle(t, mask) && (mask == full || subquandle(t, full & !mask))
}

// Preorders as boolean matrices: rel[x][y] means x ≤ y.

pub fn is_preorder(r: &Rel) -> bool {
    let n = r.len();
    (0..n).all(|x| r[x][x])
        && (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| !(r[x][y] && r[y][z]) || r[x][z])))
}

/// Every reflexive transitive relation on `n` points, from all `2^(n(n-1))` relations.
pub fn brute_force_preorders(n: usize) -> Vec<Rel> {
    let off: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << off.len()) {
        let mut r = vec![vec![false; n]; n];
        for (i, row) in r.iter_mut().enumerate() {
            row[i] = true;
        }
        for (k, &(x, y)) in off.iter().enumerate() {
            if mask >> k & 1 == 1 {
                r[x][y] = true;
            }
        }
        if is_preorder(&r) {
            out.push(r);
        }
    }
    out
}

/// Every topology on `n` points as a sorted list of open-set bitmasks.
pub fn brute_force_topologies(n: usize) -> Vec<Vec<u32>> {
    let full = (1u32 << n) - 1;
    let middle: Vec<u32> = (1..full).collect();
    let mut out = Vec::new();
    for choice in 0u64..(1u64 << middle.len()) {
        let mut opens = vec![0, full];
        for (k, &s) in middle.iter().enumerate() {
            if choice >> k & 1 == 1 {
                opens.push(s);
            }
        }
        let set: BTreeSet<u32> = opens.iter().copied().collect();
        let closed = opens
            .iter()
            .all(|&a| opens.iter().all(|&b| set.contains(&(a | b)) && set.contains(&(a & b))));
        if closed {
            out.push(set.into_iter().collect());
        }
    }
    out
}

/// `x ≤ y` iff every open set containing `x` contains `y`.
pub fn specialization(n: usize, opens: &[u32]) -> Rel {
    (0..n)
        .map(|x| {
            (0..n)
                .map(|y| opens.iter().all(|&o| o >> x & 1 == 0 || o >> y & 1 == 1))
                .collect()
        })
        .collect()
}

pub fn relabel_rel(r: &Rel, s: &[usize]) -> Rel {
    let n = r.len();
    let mut out = vec![vec![false; n]; n];
    for x in 0..n {
        for y in 0..n {
            out[s[x]][s[y]] = r[x][y];
        }
    }
    out
}

/// `x ≤ x'` and `y ≤ y'` imply `x⊲y ≤ x'⊲y'`, checked over all quadruples.
pub fn monotone(t: &Table, r: &Rel) -> bool {
    let n = t.len();
    for x in 0..n {
        for x2 in 0..n {
            if !r[x][x2] {
                continue;
            }
            for y in 0..n {
                for y2 in 0..n {
                    if r[y][y2] && !r[t[x][y]][t[x2][y2]] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Number of classes of compatible labeled preorders under the automorphisms of `t`.
pub fn tq_class_count(t: &Table, compatible: &[Rel]) -> usize {
    let autos = automorphisms(t);
    let canon: BTreeSet<Rel> = compatible
        .iter()
        .map(|r| autos.iter().map(|s| relabel_rel(r, s)).min().unwrap())
        .collect();
    canon.len()
}

pub fn homeo_class_count(rels: &[Rel]) -> usize {
    let n = rels.first().map_or(0, |r| r.len());
    let perms = permutations(n);
    let canon: BTreeSet<Rel> = rels
        .iter()
        .map(|r| perms.iter().map(|s| relabel_rel(r, s)).min().unwrap())
        .collect();
    canon.len()
}

pub fn parse_compact(rows: &str) -> Table {
    rows.split('/')
        .map(|r| r.bytes().map(|b| (b - b'a') as usize).collect())
        .collect()
}
