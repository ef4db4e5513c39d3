//! Modified Bessel function of the first kind, `I_q(z)`, for real order `q > -1`.
//!
//! Both entry points sum the ascending series
//!
//! ```text
//! I_q(z) = sum_{m >= 0} (z/2)^(2m+q) / (m! Gamma(m+q+1))
//! ```
//!
//! `bessel_i` accumulates the terms directly while they fit in a double;
//! `log_bessel_i` starts at the dominant term and sums outward relative to it,
//! so arguments in the tens of thousands (typical of the CIR density at small
//! `sigma`) stay finite.

use libm::lgamma;

use crate::error::{CirError, Result};

/// Above this argument the plain series is abandoned for the log-scaled one.
pub const PLAIN_SERIES_MAX_Z: f64 = 500.0;

const SERIES_RTOL: f64 = 1e-17;
const MAX_TERMS: usize = 10_000_000;

fn check(q: f64, z: f64) -> Result<()> {
    if !(z >= 0.0) || !z.is_finite() {
        return Err(CirError::Domain {
            what: "z",
            value: z,
            reason: "Bessel argument must be finite and >= 0",
        });
    }
    if !(q > -1.0) || !q.is_finite() {
        return Err(CirError::Domain {
            what: "q",
            value: q,
            reason: "Bessel order must be finite and > -1",
        });
    }
    Ok(())
}

/// `I_q(z)` by the ascending series.
pub fn bessel_i(q: f64, z: f64) -> Result<f64> {
    check(q, z)?;
    if z == 0.0 {
        return Ok(at_origin(q));
    }
    if z <= PLAIN_SERIES_MAX_Z {
        let half = 0.5 * z;
        let quarter_sq = half * half;
        let mut term = (q * half.ln() - lgamma(q + 1.0)).exp();
        if term > 0.0 && term.is_finite() {
            let mut sum = term;
            for m in 0..MAX_TERMS {
                let m = m as f64;
                let ratio = quarter_sq / ((m + 1.0) * (m + q + 1.0));
                term *= ratio;
                sum += term;
                if ratio < 1.0 && term * ratio / (1.0 - ratio) <= SERIES_RTOL * sum {
                    break;
                }
            }
            return Ok(sum);
        }
    }
    Ok(log_series(q, z).exp())
}

/// `ln I_q(z)`, stable for large arguments and orders.
///
/// Returns `-inf` where `I_q(z) = 0` (that is `z = 0`, `q > 0`).
pub fn log_bessel_i(q: f64, z: f64) -> Result<f64> {
    check(q, z)?;
    if z == 0.0 {
        return Ok(at_origin(q).ln());
    }
    Ok(log_series(q, z))
}

fn at_origin(q: f64) -> f64 {
    if q == 0.0 {
        1.0
    } else if q > 0.0 {
        0.0
    } else {
        f64::INFINITY
    }
}

/// Index of the largest series term: first `m` with ratio `t_{m+1}/t_m < 1`.
fn peak_index(q: f64, z: f64) -> usize {
    let half = 0.5 * z;
    // (m+1)(m+q+1) = half^2  =>  m = (-(q+2) + sqrt(q^2 + 4 half^2)) / 2
    let root = 0.5 * (-(q + 2.0) + (q * q + 4.0 * half * half).sqrt());
    if root <= 0.0 {
        0
    } else {
        root.ceil() as usize
    }
}

fn log_series(q: f64, z: f64) -> f64 {
    let half = 0.5 * z;
    let log_half = half.ln();
    let quarter_sq = half * half;
    let peak = peak_index(q, z);
    let pk = peak as f64;
    let log_peak = (2.0 * pk + q) * log_half - lgamma(pk + 1.0) - lgamma(pk + q + 1.0);

    // Terms are expressed relative to the peak term.
    let mut sum = 1.0;

    let mut term = 1.0;
    let mut m = pk;
    for _ in 0..MAX_TERMS {
        let ratio = quarter_sq / ((m + 1.0) * (m + q + 1.0));
        term *= ratio;
        sum += term;
        m += 1.0;
        if ratio < 1.0 && term * ratio / (1.0 - ratio) <= SERIES_RTOL * sum {
            break;
        }
    }

    let mut term = 1.0;
    let mut m = pk;
    while m >= 1.0 {
        // t_{m-1} = t_m * m (m+q) / half^2
        let inv_ratio = m * (m + q) / quarter_sq;
        term *= inv_ratio;
        sum += term;
        m -= 1.0;
        if term <= SERIES_RTOL * sum {
            break;
        }
    }

    log_peak + sum.ln()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn values_at_origin() {
        assert_eq!(bessel_i(0.0, 0.0).unwrap(), 1.0);
        assert_eq!(bessel_i(1.5, 0.0).unwrap(), 0.0);
        assert_eq!(log_bessel_i(2.0, 0.0).unwrap(), f64::NEG_INFINITY);
    }

    #[test]
    fn reference_values() {
        // high-precision reference values (40-digit arithmetic)
        let cases = [
            (1.0, 1.0, 0.565_159_103_992_485),
            (0.5, 2.0, 2.046_236_863_089_055),
            (2.3, 7.5, 184.074_034_545_280_93),
            (10.0, 30.0, 145_831_809_975.967_12),
        ];
        for (q, z, want) in cases {
            let got = bessel_i(q, z).unwrap();
            assert!(rel(got, want) < 1e-13, "I_{q}({z}) = {got}, want {want}");
            let lg = log_bessel_i(q, z).unwrap();
            assert!((lg - want.ln()).abs() < 1e-13 * want.ln().abs().max(1.0));
        }
    }

    #[test]
    fn half_order_closed_form() {
        // I_{1/2}(z) = sqrt(2/(pi z)) sinh z
        for z in [0.1, 1.0, 5.0, 40.0, 300.0] {
            let want = (2.0 / (std::f64::consts::PI * z)).sqrt() * z.sinh();
            assert!(rel(bessel_i(0.5, z).unwrap(), want) < 1e-13);
        }
        // log path at huge z: ln I_{1/2}(z) ~ z - 0.5 ln(2 pi z)
        let z = 2.0e4;
        let want = z - 0.5 * (2.0 * std::f64::consts::PI * z).ln() + (-(-2.0 * z).exp()).ln_1p();
        assert!((log_bessel_i(0.5, z).unwrap() - want).abs() < 1e-8);
    }

    #[test]
    fn plain_and_log_paths_agree() {
        for &(q, z) in &[(0.0, 0.3), (3.7, 12.0), (999.0, 450.0), (-0.5, 80.0), (50.0, 499.0)] {
            let plain = bessel_i(q, z).unwrap();
            let logged = log_bessel_i(q, z).unwrap();
            assert!((plain.ln() - logged).abs() < 1e-12 * logged.abs().max(1.0));
        }
    }

    #[test]
    fn overflow_handled_in_log_space() {
        let v = log_bessel_i(999.0, 20_000.0).unwrap();
        assert!(v.is_finite() && v > 10_000.0);
        assert_eq!(bessel_i(0.0, 1.0e4).unwrap(), f64::INFINITY);
    }

    #[test]
    fn domain_errors() {
        assert!(bessel_i(1.0, -1.0).is_err());
        assert!(bessel_i(-1.0, 1.0).is_err());
        assert!(log_bessel_i(1.0, f64::NAN).is_err());
    }
}
