use crate::error::{CirError, Result};

/// Observed or simulated path: strictly increasing times with nonnegative states.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    times: Vec<f64>,
    values: Vec<f64>,
}

impl Trajectory {
    pub fn new(times: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if times.len() != values.len() {
            return Err(CirError::InvalidTrajectory(format!(
                "{} times but {} values",
                times.len(),
                values.len()
            )));
        }
        if times.is_empty() {
            return Err(CirError::InvalidTrajectory("empty trajectory".into()));
        }
        if let Some(i) = times.iter().position(|t| !t.is_finite()) {
            return Err(CirError::InvalidTrajectory(format!(
                "time at index {i} is not finite"
            )));
        }
        if let Some(i) = times.windows(2).position(|w| !(w[1] > w[0])) {
            return Err(CirError::InvalidTrajectory(format!(
                "times not strictly increasing at index {}",
                i + 1
            )));
        }
        if let Some(i) = values.iter().position(|v| !(*v >= 0.0) || !v.is_finite()) {
            return Err(CirError::InvalidTrajectory(format!(
                "value {} at index {i} is negative or not finite",
                values[i]
            )));
        }
        Ok(Self { times, values })
    }

    /// Observations at unit spacing `t_i = i`.
    pub fn unit_spaced(values: Vec<f64>) -> Result<Self> {
        let times = (0..values.len()).map(|i| i as f64).collect();
        Self::new(times, values)
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// Observation window `t_n - t_0`.
    pub fn horizon(&self) -> f64 {
        self.times[self.times.len() - 1] - self.times[0]
    }

    /// Same grid with every state multiplied by `c`.
    pub fn scaled(&self, c: f64) -> Result<Self> {
        Self::new(
            self.times.clone(),
            self.values.iter().map(|v| v * c).collect(),
        )
    }

    /// Every `stride`-th observation, starting with the first.
    pub fn thinned(&self, stride: usize) -> Result<Self> {
        let stride = stride.max(1);
        Self::new(
            self.times.iter().step_by(stride).copied().collect(),
            self.values.iter().step_by(stride).copied().collect(),
        )
    }

    pub(crate) fn require_positive(&self) -> Result<()> {
        match self.values.iter().position(|v| *v <= 0.0) {
            Some(index) => Err(CirError::Positivity {
                index,
                value: self.values[index],
            }),
            None => Ok(()),
        }
    }
}
