//! Finite simplicial sets in Eilenberg–Zilber normal form, with lifting,
//! homotopy-category, factorization and certificate machinery on top.

pub mod catalog;
pub mod certify;
pub mod complex;
pub mod constructions;
pub mod error;
pub mod factorize;
pub mod format;
pub mod function_complex;
pub mod generators;
pub mod homotopy;
pub mod levels;
pub mod lifting;
pub mod map;
pub mod mapping;
pub mod rewriting;
pub mod search;
pub mod simplex;

pub use complex::{Builder, SimplicialSet, Violation};
pub use error::CoreError;
pub use map::{MonoInclusion, SimplicialMap};
pub use simplex::{CellId, Simplex};
