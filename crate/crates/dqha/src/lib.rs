//! Exact-arithmetic kernel for finite-dimensional dual quasi-Hopf algebras
//! given by structure constants: axiom checkers, gauge twists, canonical
//! elements, Yetter-Drinfeld modules in all four flavors, braidings with
//! explicit inverses, and rigid duals.
//!
//! Everything is computed over the rationals or a prime field with no
//! rounding anywhere; all identity checks are exhaustive over basis tuples.

// basis indices double as structure-constant labels, so indexed loops are
// clearer than iterator chains here
#![allow(clippy::needless_range_loop, clippy::type_complexity)]

pub mod algebra;
pub mod builders;
pub mod canonical;
pub mod coalgebra;
pub mod comodule;
pub mod doc;
pub mod duals;
pub mod error;
pub mod exec;
pub mod form;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod yd;

pub use algebra::{DualQuasiBialgebra, DualQuasiHopfAlgebra, TwistPair, Variant};
pub use error::{DqhaError, Result};
pub use report::CheckReport;
pub use scalar::{Scalar, ScalarField};
