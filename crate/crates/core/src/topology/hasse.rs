use std::fmt::Write;

use serde::Serialize;

use super::Preorder;
use crate::set::ElemSet;

/// Hasse diagram of the partial order induced on equivalence classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientDiagram {
    classes: Vec<ElemSet>,
    /// `(lower, upper)` class indices.
    covers: Vec<(usize, usize)>,
}

impl QuotientDiagram {
    pub fn new(p: &Preorder) -> Self {
        let classes = p.equivalence_classes();
        let m = classes.len();
        let rep = |i: usize| classes[i].min().expect("classes are nonempty");
        let below = |i: usize, j: usize| i != j && p.leq(rep(i), rep(j));
        let mut covers = Vec::new();
        for i in 0..m {
            for j in 0..m {
                if below(i, j) && !(0..m).any(|k| below(i, k) && below(k, j)) {
                    covers.push((i, j));
                }
            }
        }
        QuotientDiagram { classes, covers }
    }

    pub fn classes(&self) -> &[ElemSet] {
        &self.classes
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Graphviz rendering; edges point from lower to upper class.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph quotient {\n  rankdir=BT;\n  node [shape=ellipse];\n");
        for (i, c) in self.classes.iter().enumerate() {
            writeln!(s, "  c{i} [label=\"{c}\"];").unwrap();
        }
        for (lo, hi) in &self.covers {
            writeln!(s, "  c{lo} -> c{hi};").unwrap();
        }
        s.push_str("}\n");
        s
    }

    pub fn to_record(&self) -> DiagramRecord {
        DiagramRecord {
            classes: self.classes.iter().map(|c| c.to_string()).collect(),
            covers: self.covers.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct DiagramRecord {
    pub classes: Vec<String>,
    pub covers: Vec<[usize; 2]>,
}
