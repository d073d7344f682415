//! Binomial edge ideals of finite simple graphs: Gröbner bases, Betti
//! tables over prime fields, and recognizers for level, pseudo-Gorenstein
//! and Cohen–Macaulay graphs.

pub mod betti;
pub mod classify;
pub mod enumerate;
pub mod error;
pub mod graphs;
pub mod ideal;
pub mod linalg;
pub mod matroid;
pub mod report;

pub use error::{Error, Result};
pub use graphs::Graph;
