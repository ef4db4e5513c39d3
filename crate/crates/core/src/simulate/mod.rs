//! Sample-path generation: the order-1.5 strong Taylor scheme, exact
//! transition sampling and an Euler-Maruyama baseline.

mod chisq;
mod noise;
mod path;
mod rng;
mod schemes;

pub use chisq::{sample_noncentral_chisq, sample_transition};
pub use noise::NoiseIncrements;
pub use path::{
    simulate_path, simulate_path_indexed, simulate_paths, BreachPolicy, Scheme, SimulatedPath,
    SimulationConfig, BREACH_FLOOR,
};
pub use rng::PathRng;
pub use schemes::{euler_step, taylor15_step};
