use thiserror::Error;

/// Errors raised by the CIR model, simulation and inference routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CirError {
    #[error("invalid parameter {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("{what} = {value} is outside the domain: {reason}")]
    Domain {
        what: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("time ordering violated: t = {t} must exceed s = {s}")]
    Ordering { s: f64, t: f64 },

    #[error("unsupported mean-reversion rate beta = {beta}: the closed forms require beta > 0")]
    UnsupportedBeta { beta: f64 },

    #[error("value at index {index} is {value}; a strictly positive state is required")]
    Positivity { index: usize, value: f64 },

    #[error("positivity breach at step {step}: scheme produced {value}")]
    PositivityBreach { step: usize, value: f64 },

    #[error("insufficient data: need at least {needed} observations, got {got}")]
    InsufficientData { needed: usize, got: usize },

    #[error("singular information matrix: T*int(x^2) - int(x)^2 = {denominator} (path is constant or nearly so)")]
    SingularInformation { denominator: f64 },

    #[error("length mismatch: {left} observed vs {right} predicted values")]
    LengthMismatch { left: usize, right: usize },

    #[error("MAPE undefined: observed value at index {index} is zero")]
    MapeUndefined { index: usize },

    #[error("invalid trajectory: {0}")]
    InvalidTrajectory(String),
}

pub type Result<T> = std::result::Result<T, CirError>;
