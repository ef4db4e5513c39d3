use rand::Rng;
use rand_distr::{Distribution, Gamma, Poisson};

use crate::error::{CirError, Result};
use crate::model::{conditional_mean, transition_law, CirParams};

/// Draw from the noncentral chi-square `chi2_k(lambda)`.
///
/// Poisson mixture: `J ~ Poisson(lambda/2)`, then `Gamma(k/2 + J, scale 2)`.
pub fn sample_noncentral_chisq<R: Rng + ?Sized>(k: f64, lambda: f64, rng: &mut R) -> Result<f64> {
    if !(k > 0.0) || !k.is_finite() {
        return Err(CirError::Domain {
            what: "k",
            value: k,
            reason: "degrees of freedom must be finite and > 0",
        });
    }
    if !(lambda >= 0.0) || !lambda.is_finite() {
        return Err(CirError::Domain {
            what: "lambda",
            value: lambda,
            reason: "noncentrality must be finite and >= 0",
        });
    }
    let j = if lambda > 0.0 {
        Poisson::new(0.5 * lambda)
            .expect("positive Poisson mean")
            .sample(rng)
    } else {
        0.0
    };
    let gamma = Gamma::new(0.5 * k + j, 2.0).expect("positive gamma shape");
    Ok(gamma.sample(rng))
}

/// Exact draw of `x(s + dt)` given `x(s) = x_s`.
///
/// With `sigma = 0` the law degenerates to the point mass at the conditional
/// trend, which is returned as is.
pub fn sample_transition<R: Rng + ?Sized>(
    p: &CirParams,
    x_s: f64,
    dt: f64,
    rng: &mut R,
) -> Result<f64> {
    if p.sigma() == 0.0 {
        p.require_positive_beta()?;
        return conditional_mean(p.alpha(), p.beta(), x_s, dt);
    }
    let law = transition_law(p, 0.0, dt, x_s)?;
    Ok(law.zeta * sample_noncentral_chisq(law.k, law.lambda, rng)?)
}
