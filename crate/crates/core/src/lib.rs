//! Exact degenerate and probabilistic degenerate Stirling numbers over Q[λ].
//!
//! The layers build on each other: [`exactnum`] provides rationals and
//! polynomials in λ, [`egf`] truncated power series over them, [`triangles`]
//! the non-probabilistic number families, [`probrv`] the families attached to
//! a random variable, and [`identities`] a registry of checks that compare
//! independently computed sides of each identity for exact equality.

// Triangle and series code indexes several tables by the same n.
#![allow(clippy::needless_range_loop)]

pub mod egf;
pub mod error;
pub mod exactnum;
pub mod identities;
pub mod probrv;
pub mod triangles;

pub use egf::EgfSeries;
pub use error::{Error, Result};
pub use exactnum::{LambdaPoly, Rational};
pub use probrv::{Distribution, MomentProvider};
pub use triangles::{Triangle, TriangleFamily};
