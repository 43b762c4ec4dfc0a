//! Alternating permutations with a given peak set, cycle up-down
//! permutations, and pairs of matchings with a given closer set.
//!
//! The crate builds the bijection chain
//!
//! ```text
//! alternating sigma of [2k]   --reverse, tau, draw-->   (above, below) matchings
//! peak set of sigma                         ==          common closer set
//! ```
//!
//! together with its odd-length variant (a trailing `0` is appended, which
//! forces the arc diagram to be a single closed circle), the closed-form
//! counts those bijections explain, and an [`oracle`] layer that checks all of
//! it by exhaustive enumeration.
//!
//! ```
//! use peakmatch::{bijections, formulas, Permutation};
//!
//! let sigma: Permutation = "5 3 8 1 4 2 7 6".parse().unwrap();
//! let pair = bijections::even_encode(&sigma).unwrap();
//! assert_eq!(pair.closer_set(), sigma.peak_values().unwrap());
//! assert_eq!(bijections::even_decode(&pair).unwrap(), sigma);
//!
//! let count = formulas::s_count(&pair.closer_set(), 4).unwrap();
//! assert_eq!(count.formula_count, 144);
//! ```
//!
//! Runnable walkthroughs live in `examples/`; `cargo run --example <name>`.

pub mod bijections;
pub mod cli;
pub mod error;
pub mod formulas;
pub mod matchings;
pub mod oracle;
pub mod perm;
pub mod render;

/// Vertex / permutation label. The odd-case embedding uses 0.
pub type Label = u32;

pub use error::{Error, Result};
pub use formulas::CountReport;
pub use matchings::{Matching, MatchingPair};
pub use oracle::Census;
pub use perm::{CyclePermutation, PeakSet, Permutation};
