//! Finite quandles, finite topologies, and topological quandles.
//!
//! * [`quandle`]: operation tables, validation, orbits, isomorphism and enumeration.
//! * [`topology`]: finite topologies as preorders, open-set families, quotient diagrams.
//! * [`compat`]: when a topology makes a quandle a topological quandle, and
//!   classification of the resulting structures for small orders.
//! * [`format`]: the text file formats shared with the command-line tool.
//!
//! ```
//! use topquandle::catalog;
//! use topquandle::compat::is_compatible;
//! use topquandle::topology::Preorder;
//!
//! let q = catalog::dihedral3();
//! assert!(is_compatible(&q, &Preorder::coarse(3)).unwrap());
//! assert!(!is_compatible(&q, &Preorder::generated_by(3, &[(0, 1)])).unwrap());
//! ```

pub mod catalog;
pub mod compat;
pub mod format;
pub mod perm;
pub mod quandle;
pub mod set;
pub mod topology;

pub use compat::{is_compatible, ClassificationReport, TopQuandle};
pub use perm::Permutation;
pub use quandle::{OrbitDecomposition, QuandleTable};
pub use set::ElemSet;
pub use topology::{OpenSetFamily, Preorder, QuotientDiagram};
