use crate::error::{CirError, Result};
use crate::model::CirParams;

use super::noise::NoiseIncrements;

/// One step of the order-1.5 strong Taylor scheme for the CIR equation.
///
/// ```text
/// x' = sigma/(2 sqrt x) [ (2x + alpha h - beta h x - sigma^2 h/4) dW
///                        + (sigma^2/4 - beta x - alpha) dZ ]
///    + (1 - beta h + beta^2 h^2 / 2) x + (sigma^2/4) dW^2
///    + alpha h - sigma^2 h/4 - alpha beta h^2/2
/// ```
///
/// The result can be nonpositive; the path driver decides what to do with it.
pub fn taylor15_step(p: &CirParams, x: f64, h: f64, noise: &NoiseIncrements) -> Result<f64> {
    if !(x > 0.0) {
        return Err(CirError::Domain {
            what: "x",
            value: x,
            reason: "Taylor step divides by sqrt(x); state must be > 0",
        });
    }
    let (alpha, beta, sigma) = (p.alpha(), p.beta(), p.sigma());
    let s2 = sigma * sigma;
    let (dw, dz) = (noise.dw, noise.dz);
    let noise_part = sigma / (2.0 * x.sqrt())
        * ((2.0 * x + alpha * h - beta * h * x - 0.25 * s2 * h) * dw
            + (0.25 * s2 - beta * x - alpha) * dz);
    Ok(noise_part
        + (1.0 - beta * h + 0.5 * beta * beta * h * h) * x
        + 0.25 * s2 * dw * dw
        + alpha * h
        - 0.25 * s2 * h
        - 0.5 * alpha * beta * h * h)
}

/// Euler-Maruyama step, `x + (alpha - beta x) h + sigma sqrt(max(x, 0)) dW`.
pub fn euler_step(p: &CirParams, x: f64, h: f64, noise: &NoiseIncrements) -> f64 {
    x + (p.alpha() - p.beta() * x) * h + p.sigma() * x.max(0.0).sqrt() * noise.dw
}
