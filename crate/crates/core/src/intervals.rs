//! Normal-approximation confidence bands for `x(t) | x(s)` and the standard
//! normal quantile they rely on.

use libm::erfc;

use crate::error::{CirError, Result};
use crate::model::{transition_law, CirParams};

/// Below this value of `k + 2 lambda` the normal approximation is flagged.
pub const SUSPECT_THRESHOLD: f64 = 30.0;

/// Standard normal CDF via the complementary error function.
pub fn normal_cdf(x: f64) -> f64 {
    0.5 * erfc(-x / std::f64::consts::SQRT_2)
}

/// Inverse of the standard normal CDF.
///
/// Acklam's rational approximation followed by one Halley step against
/// [`normal_cdf`]; absolute error is near machine precision.
pub fn normal_quantile(p: f64) -> Result<f64> {
    if !(p > 0.0 && p < 1.0) {
        return Err(CirError::Domain {
            what: "p",
            value: p,
            reason: "probability must lie in (0, 1)",
        });
    }
    const A: [f64; 6] = [
        -3.969_683_028_665_376e1,
        2.209_460_984_245_205e2,
        -2.759_285_104_469_687e2,
        1.383_577_518_672_69e2,
        -3.066_479_806_614_716e1,
        2.506_628_277_459_239,
    ];
    const B: [f64; 5] = [
        -5.447_609_879_822_406e1,
        1.615_858_368_580_409e2,
        -1.556_989_798_598_866e2,
        6.680_131_188_771_972e1,
        -1.328_068_155_288_572e1,
    ];
    const C: [f64; 6] = [
        -7.784_894_002_430_293e-3,
        -3.223_964_580_411_365e-1,
        -2.400_758_277_161_838,
        -2.549_732_539_343_734,
        4.374_664_141_464_968,
        2.938_163_982_698_783,
    ];
    const D: [f64; 4] = [
        7.784_695_709_041_462e-3,
        3.224_671_290_700_398e-1,
        2.445_134_137_142_996,
        3.754_408_661_907_416,
    ];
    const P_LOW: f64 = 0.024_25;

    let tail = |q: f64| {
        (((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    };
    let x = if p < P_LOW {
        tail((-2.0 * p.ln()).sqrt())
    } else if p <= 1.0 - P_LOW {
        let q = p - 0.5;
        let r = q * q;
        (((((A[0] * r + A[1]) * r + A[2]) * r + A[3]) * r + A[4]) * r + A[5]) * q
            / (((((B[0] * r + B[1]) * r + B[2]) * r + B[3]) * r + B[4]) * r + 1.0)
    } else {
        -tail((-2.0 * (1.0 - p).ln()).sqrt())
    };

    // Work in the smaller tail so that the residual keeps its precision.
    let (x, sign) = if x > 0.0 { (-x, -1.0) } else { (x, 1.0) };
    let target = if sign < 0.0 { 1.0 - p } else { p };
    let e = normal_cdf(x) - target;
    let u = e * (2.0 * std::f64::consts::PI).sqrt() * (0.5 * x * x).exp();
    let refined = x - u / (1.0 + 0.5 * x * u);
    Ok(sign * refined)
}

/// Quality of the normal approximation behind a band.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BandQuality {
    Ok,
    /// `k + 2 lambda` is small; the asymptotic approximation may be poor and
    /// the lower endpoint can be negative.
    ApproximationSuspect,
}

impl BandQuality {
    pub fn as_str(&self) -> &'static str {
        match self {
            BandQuality::Ok => "ok",
            BandQuality::ApproximationSuspect => "approximation-suspect",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConfidenceBand {
    pub lower: f64,
    pub upper: f64,
    /// Coverage probability, e.g. 0.95.
    pub level: f64,
    /// Two-sided standard normal quantile for `level`.
    pub xi: f64,
    pub quality: BandQuality,
}

impl ConfidenceBand {
    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lower + self.upper)
    }

    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lower <= x && x <= self.upper
    }
}

/// Band for `x(s + dt)` given `x(s) = x_s` at coverage `level`.
///
/// Endpoints are `zeta (k + lambda -/+ xi sqrt(2 (k + 2 lambda)))` and are
/// returned unclamped.
pub fn confidence_band(p: &CirParams, x_s: f64, dt: f64, level: f64) -> Result<ConfidenceBand> {
    if !(level > 0.0 && level < 1.0) {
        return Err(CirError::Domain {
            what: "level",
            value: level,
            reason: "coverage level must lie in (0, 1)",
        });
    }
    let law = transition_law(p, 0.0, dt, x_s)?;
    let xi = normal_quantile(1.0 - 0.5 * (1.0 - level))?;
    let centre = law.k + law.lambda;
    let spread = law.k + 2.0 * law.lambda;
    let half = xi * (2.0 * spread).sqrt();
    let quality = if spread < SUSPECT_THRESHOLD {
        BandQuality::ApproximationSuspect
    } else {
        BandQuality::Ok
    };
    Ok(ConfidenceBand {
        lower: law.zeta * (centre - half),
        upper: law.zeta * (centre + half),
        level,
        xi,
        quality,
    })
}
