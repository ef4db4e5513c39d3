use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use cir_core::inference::{EstimationReport, SigmaMethod};
use cir_core::Trajectory;

/// Destination chosen by `--output`, defaulting to stdout.
pub fn sink(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

/// Shortest decimal that parses back to the same double.
pub fn num(x: f64) -> String {
    format!("{x}")
}

pub fn csv_writer(out: Box<dyn Write>) -> csv::Writer<Box<dyn Write>> {
    csv::WriterBuilder::new().from_writer(out)
}

/// Named columns of a headed CSV file, parsed as numbers.
pub struct Table {
    headers: Vec<String>,
    rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn read(path: &Path) -> Result<Self> {
        let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
        let mut reader = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(file);
        let headers: Vec<String> = reader
            .headers()
            .with_context(|| format!("{}: reading header", path.display()))?
            .iter()
            .map(str::to_owned)
            .collect();
        let mut rows = Vec::new();
        for record in reader.records() {
            let record = record.map_err(|e| {
                let line = e.position().map_or(0, |p| p.line());
                anyhow!("{}: line {line}: {e}", path.display())
            })?;
            let line = record.position().map_or(0, |p| p.line());
            let row = record
                .iter()
                .enumerate()
                .map(|(i, field)| {
                    field.parse::<f64>().map_err(|_| {
                        anyhow!(
                            "{}: line {line}: column '{}' is not a number: '{field}'",
                            path.display(),
                            headers.get(i).map_or("?", String::as_str)
                        )
                    })
                })
                .collect::<Result<Vec<f64>>>()?;
            rows.push(row);
        }
        Ok(Self { headers, rows })
    }

    pub fn column(&self, name: &str) -> Result<Vec<f64>> {
        let idx = self
            .headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| anyhow!("no column named '{name}' (have: {})", self.headers.join(",")))?;
        Ok(self.rows.iter().map(|r| r[idx]).collect())
    }

    /// The `t,x` trajectory; unit spacing from 0 when there is no `t` column.
    pub fn trajectory(&self) -> Result<Trajectory> {
        let values = self.column("x")?;
        let traj = if self.headers.iter().any(|h| h == "t") {
            Trajectory::new(self.column("t")?, values)?
        } else {
            Trajectory::unit_spaced(values)?
        };
        Ok(traj)
    }
}

pub fn write_report(out: &mut dyn Write, r: &EstimationReport) -> io::Result<()> {
    writeln!(out, "sigma_method={}", r.sigma_method.as_str())?;
    writeln!(out, "sigma_hat={}", num(r.sigma_hat))?;
    writeln!(out, "alpha_hat={}", num(r.alpha_hat))?;
    writeln!(out, "beta_hat={}", num(r.beta_hat))?;
    writeln!(out, "n={}", r.n)?;
    writeln!(out, "T={}", num(r.summary.horizon))
}

/// One record of an estimates file.
#[derive(Debug, Clone, PartialEq)]
pub struct EstimateRecord {
    pub sigma_method: SigmaMethod,
    pub sigma_hat: f64,
    pub alpha_hat: f64,
    pub beta_hat: f64,
}

/// Parses blank-line separated `key=value` records.
pub fn read_estimates(path: &Path) -> Result<Vec<EstimateRecord>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut records = Vec::new();
    let mut fields: Vec<(usize, String, String)> = Vec::new();
    let lines = text.lines().map(Some).chain(std::iter::once(None));
    for (i, line) in lines.enumerate() {
        let line = line.map(str::trim);
        if matches!(line, Some(l) if !l.is_empty() && !l.starts_with('#')) {
            let l = line.unwrap();
            let (k, v) = l
                .split_once('=')
                .ok_or_else(|| anyhow!("{}: line {}: expected key=value", path.display(), i + 1))?;
            fields.push((i + 1, k.trim().to_owned(), v.trim().to_owned()));
            continue;
        }
        if matches!(line, Some(l) if l.starts_with('#')) || fields.is_empty() {
            continue;
        }
        records.push(record(path, &fields)?);
        fields.clear();
    }
    if records.is_empty() {
        bail!("{}: no estimation records", path.display());
    }
    Ok(records)
}

fn record(path: &Path, fields: &[(usize, String, String)]) -> Result<EstimateRecord> {
    let get = |key: &str| {
        fields
            .iter()
            .find(|(_, k, _)| k == key)
            .ok_or_else(|| anyhow!("{}: record at line {} lacks '{key}'", path.display(), fields[0].0))
    };
    let number = |key: &str| -> Result<f64> {
        let (line, _, v) = get(key)?;
        v.parse()
            .map_err(|_| anyhow!("{}: line {line}: '{key}' is not a number: '{v}'", path.display()))
    };
    let (line, _, method) = get("sigma_method")?;
    let sigma_method = match method.as_str() {
        "M1" | "m1" => SigmaMethod::M1,
        "M2" | "m2" => SigmaMethod::M2,
        other => bail!("{}: line {line}: unknown sigma_method '{other}'", path.display()),
    };
    Ok(EstimateRecord {
        sigma_method,
        sigma_hat: number("sigma_hat")?,
        alpha_hat: number("alpha_hat")?,
        beta_hat: number("beta_hat")?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers_round_trip() {
        for x in [0.1, 1.0 / 3.0, 2.0, 1e-300, 123456.789e10, 0.17750727700000001] {
            assert_eq!(num(x).parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn estimates_records_parse() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("est.txt");
        std::fs::write(
            &path,
            "sigma_method=M1\nsigma_hat=0.1\nalpha_hat=0.2\nbeta_hat=0.5\nn=3\nT=2\n\n\
             sigma_method=M2\nsigma_hat=0.3\nalpha_hat=0.4\nbeta_hat=0.6\nn=3\nT=2\n",
        )
        .unwrap();
        let recs = read_estimates(&path).unwrap();
        assert_eq!(recs.len(), 2);
        assert_eq!(recs[1].sigma_method, SigmaMethod::M2);
        assert_eq!(recs[1].beta_hat, 0.6);

        std::fs::write(&path, "sigma_method=M1\nsigma_hat=abc\nalpha_hat=1\nbeta_hat=1\n").unwrap();
        let err = read_estimates(&path).unwrap_err().to_string();
        assert!(err.contains("line 2"), "{err}");
    }
}
