use std::path::Path;

use anyhow::{bail, Context, Result};
use cir_core::CirParams;
use serde::Deserialize;

use crate::args::{MethodArg, ParamArgs, SchemeArg};

/// Defaults read from `--config`. Every key is optional.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
    pub kappa: Option<f64>,
    pub theta: Option<f64>,
    pub sigma: Option<f64>,
    pub x0: Option<f64>,
    pub h: Option<f64>,
    pub steps: Option<usize>,
    pub paths: Option<usize>,
    pub seed: Option<u64>,
    pub scheme: Option<SchemeArg>,
    pub method: Option<MethodArg>,
    pub level: Option<f64>,
}

impl FileConfig {
    pub fn load(path: Option<&Path>) -> Result<Self> {
        let Some(path) = path else {
            return Ok(Self::default());
        };
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading config {}", path.display()))?;
        toml::from_str(&text).with_context(|| format!("parsing config {}", path.display()))
    }

    /// Resolves model parameters. A form given on the command line replaces
    /// the file's form entirely; `sigma` falls back to the file.
    pub fn params(&self, flags: &ParamArgs) -> Result<CirParams> {
        let sigma = flags.sigma.or(self.sigma).context("missing --sigma")?;
        let flag_form = form(flags.alpha, flags.beta, flags.kappa, flags.theta, "command line")?;
        let form = match flag_form {
            Some(f) => f,
            None => form(self.alpha, self.beta, self.kappa, self.theta, "config file")?
                .context("missing parameters: give --alpha/--beta or --kappa/--theta")?,
        };
        Ok(match form {
            Form::Drift(alpha, beta) => CirParams::new(alpha, beta, sigma)?,
            Form::MeanReversion(kappa, theta) => CirParams::from_mean_reversion(kappa, theta, sigma)?,
        })
    }
}

enum Form {
    Drift(f64, f64),
    MeanReversion(f64, f64),
}

fn form(
    alpha: Option<f64>,
    beta: Option<f64>,
    kappa: Option<f64>,
    theta: Option<f64>,
    source: &str,
) -> Result<Option<Form>> {
    let drift = alpha.is_some() || beta.is_some();
    let reversion = kappa.is_some() || theta.is_some();
    match (drift, reversion) {
        (false, false) => Ok(None),
        (true, true) => bail!("{source}: alpha/beta and kappa/theta are mutually exclusive"),
        (true, false) => match (alpha, beta) {
            (Some(a), Some(b)) => Ok(Some(Form::Drift(a, b))),
            _ => bail!("{source}: alpha and beta must be given together"),
        },
        (false, true) => match (kappa, theta) {
            (Some(k), Some(t)) => Ok(Some(Form::MeanReversion(k, t))),
            _ => bail!("{source}: kappa and theta must be given together"),
        },
    }
}
