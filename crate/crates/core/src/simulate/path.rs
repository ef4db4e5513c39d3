use rayon::prelude::*;

use crate::error::{CirError, Result};
use crate::model::CirParams;
use crate::trajectory::Trajectory;

use super::chisq::sample_transition;
use super::noise::NoiseIncrements;
use super::rng::PathRng;
use super::schemes::{euler_step, taylor15_step};

/// States at or below this level count as a positivity breach.
pub const BREACH_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    Taylor15,
    Exact,
    Euler,
}

/// What the driver does when a discretization step leaves `(0, inf)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BreachPolicy {
    /// Replace the state by `max(|x|, BREACH_FLOOR)`, record the step and go on.
    #[default]
    Reflect,
    /// Abort with the step index.
    Strict,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimulationConfig {
    pub params: CirParams,
    pub x0: f64,
    pub h: f64,
    pub n_steps: usize,
    pub seed: u64,
    pub scheme: Scheme,
    pub breach_policy: BreachPolicy,
}

impl SimulationConfig {
    pub fn new(params: CirParams, x0: f64, h: f64, n_steps: usize, seed: u64, scheme: Scheme) -> Self {
        Self {
            params,
            x0,
            h,
            n_steps,
            seed,
            scheme,
            breach_policy: BreachPolicy::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.x0 > 0.0) || !self.x0.is_finite() {
            return Err(CirError::InvalidParameter {
                name: "x0",
                value: self.x0,
                reason: "initial state must be finite and > 0",
            });
        }
        if !(self.h > 0.0) || !self.h.is_finite() {
            return Err(CirError::InvalidParameter {
                name: "h",
                value: self.h,
                reason: "step size must be finite and > 0",
            });
        }
        if self.n_steps == 0 {
            return Err(CirError::InvalidParameter {
                name: "n_steps",
                value: 0.0,
                reason: "at least one step is required",
            });
        }
        if self.scheme == Scheme::Exact && !(self.params.beta() > 0.0) {
            return Err(CirError::UnsupportedBeta {
                beta: self.params.beta(),
            });
        }
        Ok(())
    }
}

/// A simulated trajectory plus the steps (1-based grid indices) at which the
/// breach policy had to intervene.
#[derive(Debug, Clone, PartialEq)]
pub struct SimulatedPath {
    pub trajectory: Trajectory,
    pub breaches: Vec<usize>,
}

impl SimulatedPath {
    pub fn breached(&self) -> bool {
        !self.breaches.is_empty()
    }
}

/// Simulates the path with stream index 0 on the grid `t_i = i h`.
pub fn simulate_path(cfg: &SimulationConfig) -> Result<SimulatedPath> {
    simulate_path_indexed(cfg, 0)
}

/// Simulates the path whose random stream is `(cfg.seed, path_index)`.
pub fn simulate_path_indexed(cfg: &SimulationConfig, path_index: u64) -> Result<SimulatedPath> {
    cfg.validate()?;
    let mut rng = PathRng::for_path(cfg.seed, path_index);
    let p = &cfg.params;
    let h = cfg.h;

    let mut values = Vec::with_capacity(cfg.n_steps + 1);
    let mut breaches = Vec::new();
    let mut x = cfg.x0;
    values.push(x);
    for step in 1..=cfg.n_steps {
        let next = match cfg.scheme {
            Scheme::Taylor15 => taylor15_step(p, x, h, &NoiseIncrements::draw(&mut rng, h))?,
            Scheme::Euler => euler_step(p, x, h, &NoiseIncrements::draw(&mut rng, h)),
            Scheme::Exact => sample_transition(p, x, h, &mut rng)?,
        };
        x = if cfg.scheme != Scheme::Exact && !(next > BREACH_FLOOR) {
            match cfg.breach_policy {
                BreachPolicy::Strict => {
                    return Err(CirError::PositivityBreach { step, value: next })
                }
                BreachPolicy::Reflect => {
                    if !next.is_finite() {
                        return Err(CirError::PositivityBreach { step, value: next });
                    }
                    breaches.push(step);
                    next.abs().max(BREACH_FLOOR)
                }
            }
        } else {
            next
        };
        values.push(x);
    }
    let times = (0..=cfg.n_steps).map(|i| i as f64 * h).collect();
    Ok(SimulatedPath {
        trajectory: Trajectory::new(times, values)?,
        breaches,
    })
}

/// Simulates `n_paths` independent paths in parallel; path `i` uses stream `i`.
pub fn simulate_paths(cfg: &SimulationConfig, n_paths: usize) -> Result<Vec<SimulatedPath>> {
    (0..n_paths as u64)
        .into_par_iter()
        .map(|i| simulate_path_indexed(cfg, i))
        .collect()
}
