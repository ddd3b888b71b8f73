//! Exact combinatorics of LS paths over posets with bonds.
//!
//! The crate covers graded posets with bonds, LS paths and their standard
//! factorizations, the reverse lexicographic orders on `ℚ^S`, the order
//! complex with its integral structure, discrete LS algebras, quasi-valuations
//! built as minima of chain valuations, Bruhat posets of finite root systems,
//! and Grassmannian coordinate rings where straightening relations and chain
//! valuations are computed with exact linear algebra.

pub mod acceptance;
pub mod complex;
pub mod discrete;
pub mod error;
pub mod fixtures;
pub mod grassmann;
mod lattice;
pub mod linalg;
pub mod orders;
pub mod paths;
pub mod poly;
pub mod poset;
pub mod rational;
pub mod valuation;
pub mod vector;
pub mod weyl;

pub use error::{Error, Result};
pub use orders::{Comparison, LinearExtension};
pub use paths::{LsPath, PathMonomial};
pub use poset::{BondedPoset, Limits};
pub use rational::Q;
pub use vector::PathVector;
