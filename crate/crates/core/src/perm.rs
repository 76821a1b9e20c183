//! Permutations of element indices.

use std::fmt;

use itertools::Itertools;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermutationError {
    #[error("image has an entry {value} outside [0, {n})")]
    OutOfRange { value: usize, n: usize },
    #[error("image repeats {0}")]
    Repeated(usize),
}

/// A bijection on `[0, n)`, stored by its image array.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    pub fn new(image: Vec<usize>) -> Result<Self, PermutationError> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n {
                return Err(PermutationError::OutOfRange { value: v, n });
            }
            if seen[v] {
                return Err(PermutationError::Repeated(v));
            }
            seen[v] = true;
        }
        Ok(Permutation { image })
    }

    /// Builds the transposition of `x` and `y` on `[0, n)`.
    pub fn transposition(n: usize, x: usize, y: usize) -> Self {
        let mut image: Vec<usize> = (0..n).collect();
        image.swap(x, y);
        Permutation { image }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (x, &y) in self.image.iter().enumerate() {
            inv[y] = x;
        }
        Permutation { image: inv }
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Self {
        Permutation {
            image: other.image.iter().map(|&x| self.image[x]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(x, &y)| x == y)
    }

    /// All `n!` permutations in lexicographic order of their image arrays.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (0..n)
            .permutations(n)
            .map(|image| Permutation { image })
    }

    /// Disjoint cycles of length at least two, each starting at its smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] || self.image[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.image[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.image[x];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Cycle notation with letters, e.g. `(b c)`; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            let letters: Vec<String> = cycle
                .iter()
                .map(|&x| crate::format::letter(x).to_string())
                .collect();
            write!(f, "({})", letters.join(" "))?;
        }
        Ok(())
    }
}
