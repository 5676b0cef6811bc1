//! Domain-decomposition solver for the nonlinear Poisson-Boltzmann equation
//! on a smooth solvent-excluded cavity.

// Index loops mirror the quadrature sums; `!(x > 0)` also rejects NaN.
#![allow(clippy::needless_range_loop, clippy::neg_cmp_op_on_partial_ord)]

pub mod ball;
pub mod cavity;
pub mod disc;
pub mod energy;
pub mod error;
pub mod global;
pub mod io;
pub mod linalg;
pub mod par;
pub mod quad;
pub mod specfun;

pub use error::{Error, Result};
