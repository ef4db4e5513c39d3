//! Model parameters, exact transition law, transition density and trend functions.

pub mod bessel;
mod params;
mod transition;
mod trend;

pub use bessel::{bessel_i, log_bessel_i};
pub use params::CirParams;
pub use transition::{log_transition_pdf, transition_law, transition_pdf, TransitionLaw};
pub use trend::conditional_mean;
