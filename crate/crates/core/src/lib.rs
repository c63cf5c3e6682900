//! Zero-inclusion regions for complex-valued harmonic polynomials
//! `f = h + conj(g)` and the harmonic trinomial `z^n + c·conj(z)^k - 1`,
//! together with a numerical zero finder and winding-number counter that
//! verify them.

// `!(x > 0.0)` is used deliberately so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod error;
pub mod poly;
pub mod real_roots;
pub mod region;
pub mod report;
pub mod solver;

pub use bounds::{BoundFlag, BoundMethod, BoundReport, TrinomialCase};
pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use poly::{AnalyticPoly, HarmonicPoly, HarmonicTrinomial};
pub use real_roots::{RealPoly, RootBracket};
pub use region::Region;
pub use solver::{Orientation, RootRecord, SolverConfig, WindingResult};
