//! 1-mappability of a text.
//!
//! For every length-`m` window of a text, count the windows that equal it
//! up to at most one substitution. Two algorithms are provided:
//! [`one_mappability_nlogn`] for any window length and
//! [`one_mappability_large_m`] for `m >= 8`, linear once `m` is about
//! `sqrt(n)` or more. [`oracle`] holds quadratic references.
//!
//! Library positions are 0-based. The command-line tool prints 1-based
//! positions.
//!
//! ```
//! use onemap::{one_mappability_nlogn, Text};
//!
//! let v = one_mappability_nlogn(&Text::from("banana"), 3).unwrap();
//! assert_eq!(v.totals(), vec![2, 2, 2, 2]);
//! ```

pub mod batch_sort;
pub mod cli;
pub mod error;
pub mod heavy_path;
pub mod large_m;
pub mod lce;
pub mod mappability;
pub mod nlogn;
pub mod oracle;
pub mod periodic;
pub mod stairs;
pub mod suffix_array;
pub mod suffix_tree;
pub mod text;

pub use error::{Error, Result};
pub use heavy_path::HeavyPathDecomposition;
pub use large_m::one_mappability_large_m;
pub use lce::LceIndex;
pub use mappability::{compute, Algorithm, MappabilityVector};
pub use nlogn::one_mappability_nlogn;
pub use periodic::{count_one_ham_single_word, ArithmeticProgression};
pub use stairs::StairsCounters;
pub use suffix_array::SuffixArray;
pub use suffix_tree::TrimmedSuffixTree;
pub use text::{Origin, Text};
