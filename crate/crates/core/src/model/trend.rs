use crate::error::{CirError, Result};

use super::CirParams;

/// `E[x(s+dt) | x(s) = x_s] = x_s e^{-beta dt} + (alpha/beta)(1 - e^{-beta dt})`.
///
/// Takes raw coefficients so that plug-in estimates (which need not satisfy
/// the `CirParams` constraints) can be evaluated too.
pub fn conditional_mean(alpha: f64, beta: f64, x_s: f64, dt: f64) -> Result<f64> {
    if !(beta > 0.0) {
        return Err(CirError::UnsupportedBeta { beta });
    }
    if !(dt >= 0.0) {
        return Err(CirError::Domain {
            what: "dt",
            value: dt,
            reason: "elapsed time must be >= 0",
        });
    }
    let decay = (-beta * dt).exp();
    let one_minus = -(-beta * dt).exp_m1();
    Ok(x_s * decay + alpha / beta * one_minus)
}

impl CirParams {
    /// Conditional trend function: expected state `dt` after observing `x_s`.
    pub fn conditional_trend(&self, x_s: f64, dt: f64) -> Result<f64> {
        if !(x_s >= 0.0) {
            return Err(CirError::Domain {
                what: "x_s",
                value: x_s,
                reason: "state must be >= 0",
            });
        }
        self.require_positive_beta()?;
        conditional_mean(self.alpha(), self.beta(), x_s, dt)
    }

    /// Trend function: `E[x(t)]` from `x(0) = x0`.
    pub fn trend(&self, x0: f64, t: f64) -> Result<f64> {
        self.conditional_trend(x0, t)
    }

    /// Limit of the trend as `t -> inf`, i.e. `alpha / beta`.
    pub fn long_run_mean(&self) -> Result<f64> {
        self.require_positive_beta()?;
        Ok(self.alpha() / self.beta())
    }
}
