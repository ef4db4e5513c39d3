//! One-step-ahead forecast error metrics and the qualitative MAPE scale.

use std::fmt;

use crate::error::{CirError, Result};

/// Qualitative reading of a MAPE value. Bands are closed on the left:
/// `[0,10)`, `[10,30)`, `[30,50)`, `[50,inf)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Accuracy {
    HighlyAccurate,
    Good,
    Reasonable,
    Inaccurate,
}

impl Accuracy {
    pub fn as_str(&self) -> &'static str {
        match self {
            Accuracy::HighlyAccurate => "highly-accurate",
            Accuracy::Good => "good",
            Accuracy::Reasonable => "reasonable",
            Accuracy::Inaccurate => "inaccurate",
        }
    }
}

impl fmt::Display for Accuracy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn interpret_mape(mape_percent: f64) -> Result<Accuracy> {
    if !(mape_percent >= 0.0) {
        return Err(CirError::Domain {
            what: "mape",
            value: mape_percent,
            reason: "MAPE must be >= 0",
        });
    }
    Ok(if mape_percent < 10.0 {
        Accuracy::HighlyAccurate
    } else if mape_percent < 30.0 {
        Accuracy::Good
    } else if mape_percent < 50.0 {
        Accuracy::Reasonable
    } else {
        Accuracy::Inaccurate
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitReport {
    pub mae: f64,
    pub rmse: f64,
    pub mape_percent: f64,
    pub interpretation: Accuracy,
    pub n: usize,
}

/// MAE, RMSE and MAPE (in percent) of `predicted` against `observed`.
pub fn fit_metrics(observed: &[f64], predicted: &[f64]) -> Result<FitReport> {
    if observed.len() != predicted.len() || observed.is_empty() {
        return Err(CirError::LengthMismatch {
            left: observed.len(),
            right: predicted.len(),
        });
    }
    if let Some(index) = observed.iter().position(|o| *o == 0.0) {
        return Err(CirError::MapeUndefined { index });
    }
    let n = observed.len() as f64;
    let (mut abs, mut sq, mut pct) = (0.0, 0.0, 0.0);
    for (o, p) in observed.iter().zip(predicted) {
        let e = (o - p).abs();
        abs += e;
        sq += e * e;
        pct += e / o.abs();
    }
    let mape_percent = 100.0 * pct / n;
    Ok(FitReport {
        mae: abs / n,
        rmse: (sq / n).sqrt(),
        mape_percent,
        interpretation: interpret_mape(mape_percent)?,
        n: observed.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perfect_forecast() {
        let r = fit_metrics(&[1.0, 2.0, 3.0], &[1.0, 2.0, 3.0]).unwrap();
        assert_eq!((r.mae, r.rmse, r.mape_percent), (0.0, 0.0, 0.0));
        assert_eq!(r.interpretation, Accuracy::HighlyAccurate);
    }

    #[test]
    fn two_point_example() {
        let r = fit_metrics(&[1.0, 2.0], &[1.5, 1.5]).unwrap();
        assert_eq!(r.mae, 0.5);
        assert_eq!(r.rmse, 0.5);
        assert_eq!(r.mape_percent, 37.5);
        assert_eq!(r.interpretation, Accuracy::Reasonable);
        assert_eq!(r.n, 2);
    }

    #[test]
    fn single_point_rmse_equals_mae() {
        let r = fit_metrics(&[2.0], &[2.7]).unwrap();
        assert!((r.rmse - r.mae).abs() < 1e-15);
    }

    #[test]
    fn interpretation_bands() {
        assert_eq!(interpret_mape(9.74).unwrap(), Accuracy::HighlyAccurate);
        assert_eq!(interpret_mape(11.55).unwrap(), Accuracy::Good);
        assert_eq!(interpret_mape(10.0).unwrap(), Accuracy::Good);
        assert_eq!(interpret_mape(30.0).unwrap(), Accuracy::Reasonable);
        assert_eq!(interpret_mape(50.0).unwrap(), Accuracy::Inaccurate);
        assert!(interpret_mape(-1.0).is_err());
    }

    #[test]
    fn errors() {
        assert_eq!(
            fit_metrics(&[1.0, 2.0], &[1.0]),
            Err(CirError::LengthMismatch { left: 2, right: 1 })
        );
        assert_eq!(
            fit_metrics(&[1.0, 0.0], &[1.0, 1.0]),
            Err(CirError::MapeUndefined { index: 1 })
        );
    }
}
