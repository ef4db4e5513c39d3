use crate::error::{CirError, Result};

/// Parameters of the CIR diffusion `dx = (alpha - beta x) dt + sigma sqrt(x) dW`.
///
/// The mean-reversion form `dx = kappa (theta - x) dt + ...` maps onto this one
/// through `alpha = kappa * theta` and `beta = kappa`.
///
/// `sigma = 0` is admitted and denotes the noise-free ODE; the transition law
/// and density reject it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CirParams {
    alpha: f64,
    beta: f64,
    sigma: f64,
}

impl CirParams {
    pub fn new(alpha: f64, beta: f64, sigma: f64) -> Result<Self> {
        if !(alpha.is_finite() && alpha > 0.0) {
            return Err(CirError::InvalidParameter {
                name: "alpha",
                value: alpha,
                reason: "must be finite and > 0",
            });
        }
        if !beta.is_finite() {
            return Err(CirError::InvalidParameter {
                name: "beta",
                value: beta,
                reason: "must be finite",
            });
        }
        if !(sigma.is_finite() && sigma >= 0.0) {
            return Err(CirError::InvalidParameter {
                name: "sigma",
                value: sigma,
                reason: "must be finite and >= 0",
            });
        }
        Ok(Self { alpha, beta, sigma })
    }

    /// Builds parameters from mean-reversion speed `kappa` and level `theta`.
    pub fn from_mean_reversion(kappa: f64, theta: f64, sigma: f64) -> Result<Self> {
        Self::new(kappa * theta, kappa, sigma)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    /// Mean-reversion speed, identical to `beta`.
    pub fn kappa(&self) -> f64 {
        self.beta
    }

    /// Long-run level `alpha / beta`; `None` when `beta == 0`.
    pub fn theta(&self) -> Option<f64> {
        (self.beta != 0.0).then(|| self.alpha / self.beta)
    }

    /// Feller condition `sigma^2 <= 2 alpha`: the origin is unreachable.
    ///
    /// The comparison allows a few ulps so that boundary inputs such as
    /// `sigma = sqrt(2 alpha)` count as satisfied.
    pub fn feller_satisfied(&self) -> bool {
        self.sigma * self.sigma <= 2.0 * self.alpha * (1.0 + 4.0 * f64::EPSILON)
    }

    /// Infinitesimal mean `a(x) = alpha - beta x` and variance `b(x) = sigma^2 x`.
    pub fn drift_and_diffusion(&self, x: f64) -> Result<(f64, f64)> {
        if !(x >= 0.0) {
            return Err(CirError::Domain {
                what: "x",
                value: x,
                reason: "state must be >= 0",
            });
        }
        Ok((self.alpha - self.beta * x, self.sigma * self.sigma * x))
    }

    pub(crate) fn require_positive_beta(&self) -> Result<()> {
        if self.beta > 0.0 {
            Ok(())
        } else {
            Err(CirError::UnsupportedBeta { beta: self.beta })
        }
    }
}
