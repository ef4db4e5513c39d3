//! Cox-Ingersoll-Ross diffusion `dx = (alpha - beta x) dt + sigma sqrt(x) dW`.
//!
//! - [`model`]: parameters, the noncentral chi-square transition law and
//!   density, and the exact trend functions.
//! - [`simulate`]: Taylor order-1.5, exact and Euler path generation.
//! - [`inference`]: `sigma` approximators and closed-form drift estimators.
//! - [`intervals`]: normal-approximation confidence bands.
//! - [`metrics`]: MAE / RMSE / MAPE and the MAPE accuracy scale.

// `!(x > 0.0)` style guards also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod inference;
pub mod intervals;
pub mod metrics;
pub mod model;
pub mod simulate;
mod trajectory;

pub use error::{CirError, Result};
pub use model::CirParams;
pub use trajectory::Trajectory;
