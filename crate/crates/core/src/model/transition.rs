//! The exact transition law of the CIR process.
//!
//! Given `x(s) = x_s`, the state at `t > s` is distributed as `zeta * chi2_k(lambda)`,
//! a scaled noncentral chi-square with
//!
//! ```text
//! k      = 4 alpha / sigma^2
//! zeta   = sigma^2 (1 - e^{-beta dt}) / (4 beta)
//! lambda = 4 beta e^{-beta dt} x_s / (sigma^2 (1 - e^{-beta dt}))
//! ```
//!
//! and its density involves `I_q` with `q = k/2 - 1`.

use crate::error::{CirError, Result};

use super::bessel::log_bessel_i;
use super::CirParams;

/// Scaled noncentral chi-square describing `x(t) | x(s)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransitionLaw {
    /// Degrees of freedom.
    pub k: f64,
    /// Scale (state units).
    pub zeta: f64,
    /// Noncentrality.
    pub lambda: f64,
    /// Bessel order `k/2 - 1`.
    pub q: f64,
    /// Elapsed time `t - s`.
    pub dt: f64,
}

impl TransitionLaw {
    /// Mean of the scaled law, `zeta (k + lambda)`.
    pub fn mean(&self) -> f64 {
        self.zeta * (self.k + self.lambda)
    }

    /// Variance of the scaled law, `2 zeta^2 (k + 2 lambda)`.
    pub fn variance(&self) -> f64 {
        2.0 * self.zeta * self.zeta * (self.k + 2.0 * self.lambda)
    }
}

fn require_noise(p: &CirParams) -> Result<()> {
    if p.sigma() > 0.0 {
        Ok(())
    } else {
        Err(CirError::InvalidParameter {
            name: "sigma",
            value: p.sigma(),
            reason: "transition law needs sigma > 0",
        })
    }
}

/// Transition law of `x(t)` given `x(s) = x_s`.
pub fn transition_law(p: &CirParams, s: f64, t: f64, x_s: f64) -> Result<TransitionLaw> {
    if !(t > s) {
        return Err(CirError::Ordering { s, t });
    }
    if !(x_s >= 0.0) || !x_s.is_finite() {
        return Err(CirError::Domain {
            what: "x_s",
            value: x_s,
            reason: "conditioning state must be finite and >= 0",
        });
    }
    p.require_positive_beta()?;
    require_noise(p)?;
    Ok(law(p, t - s, x_s))
}

fn law(p: &CirParams, dt: f64, x_s: f64) -> TransitionLaw {
    let (alpha, beta, s2) = (p.alpha(), p.beta(), p.sigma() * p.sigma());
    let decay = (-beta * dt).exp();
    let one_minus = -(-beta * dt).exp_m1();
    let k = 4.0 * alpha / s2;
    TransitionLaw {
        k,
        zeta: s2 * one_minus / (4.0 * beta),
        lambda: 4.0 * beta * decay * x_s / (s2 * one_minus),
        q: 0.5 * k - 1.0,
        dt,
    }
}

/// Natural log of the transition density `f(x, s + dt | y, s)`.
pub fn log_transition_pdf(p: &CirParams, x: f64, y: f64, dt: f64) -> Result<f64> {
    for (what, value) in [("x", x), ("y", y), ("dt", dt)] {
        if !(value > 0.0) || !value.is_finite() {
            return Err(CirError::Domain {
                what,
                value,
                reason: "density needs finite x > 0, y > 0 and dt > 0",
            });
        }
    }
    p.require_positive_beta()?;
    require_noise(p)?;

    let (alpha, beta, s2) = (p.alpha(), p.beta(), p.sigma() * p.sigma());
    let one_minus = -(-beta * dt).exp_m1();
    let c = 2.0 * beta / (s2 * one_minus);
    let q = 2.0 * alpha / s2 - 1.0;
    // u = c y e^{-beta dt}, v = c x; Bessel argument is 2 sqrt(u v)
    let log_u = c.ln() + y.ln() - beta * dt;
    let log_v = c.ln() + x.ln();
    let u = log_u.exp();
    let v = c * x;
    let arg = 2.0 * (0.5 * (log_u + log_v)).exp();
    Ok(c.ln() - u - v + 0.5 * q * (log_v - log_u) + log_bessel_i(q, arg)?)
}

/// Transition density `f(x, s + dt | y, s)`, evaluated in log space.
pub fn transition_pdf(p: &CirParams, x: f64, y: f64, dt: f64) -> Result<f64> {
    Ok(log_transition_pdf(p, x, y, dt)?.exp())
}
