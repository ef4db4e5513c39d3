//! Parameter inference from one observed path.
//!
//! The drift coefficients come from the continuous-observation maximum
//! likelihood estimators, with the path integrals replaced by trapezoid sums
//! and `int dx/x` rewritten through Ito's formula as
//! `ln(x_T/x_0) + (sigma^2/2) int dt/x`. Because that term needs `sigma`, the
//! diffusion scale is approximated first, by one of two increment-based
//! formulas, and then fed into the drift estimators.
//!
//! Both `sigma` approximators are applied verbatim to consecutive
//! observations. They carry no step-size normalization, so they target
//! `sigma` only on a unit-spaced grid.

use crate::error::{CirError, Result};
use crate::model::conditional_mean;
use crate::trajectory::Trajectory;

/// Relative threshold on `T int x^2 - (int x)^2` below which the path is
/// treated as constant.
pub const SINGULAR_RTOL: f64 = 1e-14;

/// Trapezoid approximations of the path integrals the estimators need.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegralSummary {
    /// `int x dt`
    pub int_x: f64,
    /// `int x^2 dt`
    pub int_x2: f64,
    /// `int dt / x`
    pub int_inv: f64,
    pub x0: f64,
    pub x_t: f64,
    /// Observation window `t_n - t_0`.
    pub horizon: f64,
}

impl IntegralSummary {
    /// `T int x^2 - (int x)^2`; nonnegative by Cauchy-Schwarz.
    pub fn denominator(&self) -> f64 {
        self.horizon * self.int_x2 - self.int_x * self.int_x
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SigmaMethod {
    /// `(2/(n-1)) sum |sqrt x_i - sqrt x_{i-1}|`
    M1,
    /// `(1/(n-1)) sum |x_i - x_{i-1}| / sqrt x_i`
    M2,
}

impl SigmaMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            SigmaMethod::M1 => "M1",
            SigmaMethod::M2 => "M2",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EstimationReport {
    pub sigma_hat: f64,
    pub sigma_method: SigmaMethod,
    pub alpha_hat: f64,
    pub beta_hat: f64,
    pub n: usize,
    pub summary: IntegralSummary,
}

impl EstimationReport {
    /// Estimated trend `E[x(t)]` from the first observation.
    pub fn etf(&self, t: f64) -> Result<f64> {
        conditional_mean(self.alpha_hat, self.beta_hat, self.summary.x0, t)
    }

    /// Estimated conditional trend `dt` after observing `x_s`.
    pub fn ectf(&self, x_s: f64, dt: f64) -> Result<f64> {
        conditional_mean(self.alpha_hat, self.beta_hat, x_s, dt)
    }
}

fn require_len(traj: &Trajectory, needed: usize) -> Result<()> {
    if traj.len() < needed {
        Err(CirError::InsufficientData {
            needed,
            got: traj.len(),
        })
    } else {
        Ok(())
    }
}

/// Composite trapezoid rule over the (possibly nonuniform) grid.
pub fn trapezoid_summary(traj: &Trajectory) -> Result<IntegralSummary> {
    require_len(traj, 2)?;
    traj.require_positive()?;
    let (t, x) = (traj.times(), traj.values());
    let (mut int_x, mut int_x2, mut int_inv) = (0.0, 0.0, 0.0);
    for i in 1..t.len() {
        let half_dt = 0.5 * (t[i] - t[i - 1]);
        let (a, b) = (x[i - 1], x[i]);
        int_x += half_dt * (a + b);
        int_x2 += half_dt * (a * a + b * b);
        int_inv += half_dt * (1.0 / a + 1.0 / b);
    }
    Ok(IntegralSummary {
        int_x,
        int_x2,
        int_inv,
        x0: x[0],
        x_t: x[x.len() - 1],
        horizon: traj.horizon(),
    })
}

/// Square-root increment approximator of `sigma`.
pub fn estimate_sigma_m1(traj: &Trajectory) -> Result<f64> {
    require_len(traj, 2)?;
    let x = traj.values();
    let total: f64 = x.windows(2).map(|w| (w[1].sqrt() - w[0].sqrt()).abs()).sum();
    Ok(2.0 * total / (x.len() - 1) as f64)
}

/// Normalized increment approximator of `sigma`; divides by the later point.
pub fn estimate_sigma_m2(traj: &Trajectory) -> Result<f64> {
    require_len(traj, 2)?;
    let x = traj.values();
    let mut total = 0.0;
    for (i, w) in x.windows(2).enumerate() {
        if !(w[1] > 0.0) {
            return Err(CirError::Positivity {
                index: i + 1,
                value: w[1],
            });
        }
        total += (w[1] - w[0]).abs() / w[1].sqrt();
    }
    Ok(total / (x.len() - 1) as f64)
}

pub fn estimate_sigma(traj: &Trajectory, method: SigmaMethod) -> Result<f64> {
    match method {
        SigmaMethod::M1 => estimate_sigma_m1(traj),
        SigmaMethod::M2 => estimate_sigma_m2(traj),
    }
}

/// Closed-form drift estimates `(alpha_hat, beta_hat)` given `sigma`.
pub fn estimate_drift(summary: &IntegralSummary, sigma: f64) -> Result<(f64, f64)> {
    let s = summary;
    if !(s.x0 > 0.0) || !(s.x_t > 0.0) {
        let (what, value) = if !(s.x0 > 0.0) { ("x0", s.x0) } else { ("x_T", s.x_t) };
        return Err(CirError::Domain {
            what,
            value,
            reason: "log(x_T / x_0) needs positive endpoints",
        });
    }
    if !(sigma >= 0.0) || !sigma.is_finite() {
        return Err(CirError::Domain {
            what: "sigma",
            value: sigma,
            reason: "diffusion scale must be finite and >= 0",
        });
    }
    let d = s.denominator();
    if !(d > SINGULAR_RTOL * s.horizon * s.int_x2) {
        return Err(CirError::SingularInformation { denominator: d });
    }
    let log_term = (s.x_t / s.x0).ln() + 0.5 * sigma * sigma * s.int_inv;
    let rise = s.x_t - s.x0;
    let alpha = (s.int_x2 * log_term - rise * s.int_x) / d;
    let beta = (s.int_x * log_term - s.horizon * rise) / d;
    Ok((alpha, beta))
}

/// `sigma` by the chosen approximator, then the drift estimators with it.
pub fn estimate_all(traj: &Trajectory, method: SigmaMethod) -> Result<EstimationReport> {
    let sigma_hat = estimate_sigma(traj, method)?;
    let summary = trapezoid_summary(traj)?;
    let (alpha_hat, beta_hat) = estimate_drift(&summary, sigma_hat)?;
    Ok(EstimationReport {
        sigma_hat,
        sigma_method: method,
        alpha_hat,
        beta_hat,
        n: traj.len(),
        summary,
    })
}
