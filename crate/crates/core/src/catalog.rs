//! Reference quandle tables used as golden data.

use crate::format::parse_quandle;
use crate::quandle::QuandleTable;
use crate::topology::Preorder;

/// The three quandles of order 3, one per isomorphism class.
pub const ORDER3: [&str; 3] = [
    "3\na a a\nb b b\nc c c\n",
    "3\na c b\nc b a\nb a c\n",
    "3\na a a\nc b b\nb c c\n",
];

/// The seven quandles of order 4, one per isomorphism class.
pub const ORDER4: [&str; 7] = [
    "4\na a a a\nb b b b\nc c c c\nd d d d\n",
    "4\na a a a\nb b b c\nc c c b\nd d d d\n",
    "4\na a a b\nb b b c\nc c c a\nd d d d\n",
    "4\na a b b\nb b a a\nc c c c\nd d d d\n",
    "4\na a a a\nb b d c\nc d c b\nd c b d\n",
    "4\na a b b\nb b a a\nd d c c\nc c d d\n",
    "4\na d b c\nc b d a\nd a c b\nb c a d\n",
];

/// An order-6 quandle with orbits `{a}`, `{b}`, `{c,d,e,f}` admitting a
/// compatible topology whose restriction to the large orbit is neither
/// coarse nor discrete.
pub const COUNTEREXAMPLE6: &str = "6\n\
a a a a a a\n\
b b b b b b\n\
d e c c c c\n\
c f d d d d\n\
f c e e e e\n\
e d f f f f\n";

fn table(text: &str) -> QuandleTable {
    parse_quandle(text).expect("catalog tables are valid quandles")
}

pub fn order3() -> Vec<QuandleTable> {
    ORDER3.iter().map(|t| table(t)).collect()
}

pub fn order4() -> Vec<QuandleTable> {
    ORDER4.iter().map(|t| table(t)).collect()
}

/// `x ⊲ y = 2y - x mod 3`.
pub fn dihedral3() -> QuandleTable {
    table(ORDER3[1])
}

/// The order-4 quandle in which every right translation is a 3-cycle on the other points.
pub fn tetrahedral4() -> QuandleTable {
    table(ORDER4[6])
}

pub fn counterexample6() -> QuandleTable {
    table(COUNTEREXAMPLE6)
}

/// Classes `{a}`, `{b}`, `{c,d}`, `{e,f}` with no relations between classes.
pub fn counterexample_topology() -> Preorder {
    Preorder::generated_by(6, &[(2, 3), (3, 2), (4, 5), (5, 4)])
}
