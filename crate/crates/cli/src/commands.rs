use std::io::Write;

use anyhow::{bail, Context, Result};
use cir_core::inference::{estimate_all, SigmaMethod};
use cir_core::intervals::confidence_band;
use cir_core::metrics::fit_metrics;
use cir_core::simulate::{simulate_paths, BreachPolicy, Scheme, SimulationConfig};
use cir_core::CirParams;

use crate::args::{
    BandArgs, Cli, Command, EstimateArgs, EvaluateArgs, ForecastArgs, MethodArg, SchemeArg,
    SimulateArgs,
};
use crate::config::FileConfig;
use crate::io::{csv_writer, num, read_estimates, sink, write_report, Table};

const DEFAULT_LEVEL: f64 = 0.95;

pub fn run(cli: &Cli) -> Result<()> {
    let file = FileConfig::load(cli.config.as_deref())?;
    let ctx = RunContext { cli, file: &file };
    match &cli.command {
        Command::Simulate(a) => simulate(&ctx, a),
        Command::Estimate(a) => estimate(&ctx, a),
        Command::Forecast(a) => forecast(&ctx, a),
        Command::Band(a) => band(&ctx, a),
        Command::Evaluate(a) => evaluate(&ctx, a),
    }
}

struct RunContext<'a> {
    cli: &'a Cli,
    file: &'a FileConfig,
}

impl RunContext<'_> {
    fn out(&self) -> Result<Box<dyn Write>> {
        sink(self.cli.output.as_deref())
    }

    fn warn(&self, msg: &str) {
        if !self.cli.quiet {
            eprintln!("warning: {msg}");
        }
    }
}

fn simulate(ctx: &RunContext, a: &SimulateArgs) -> Result<()> {
    let f = ctx.file;
    let params = f.params(&a.params)?;
    let x0 = a.x0.or(f.x0).context("missing --x0")?;
    let h = a.h.or(f.h).context("missing --h")?;
    let steps = a.steps.or(f.steps).context("missing --steps")?;
    let paths = a.paths.or(f.paths).unwrap_or(1);
    if paths == 0 {
        bail!("--paths must be at least 1");
    }
    let scheme = match a.scheme.or(f.scheme).unwrap_or(SchemeArg::Taylor15) {
        SchemeArg::Taylor15 => Scheme::Taylor15,
        SchemeArg::Exact => Scheme::Exact,
        SchemeArg::Euler => Scheme::Euler,
    };
    let seed = ctx.cli.seed.or(f.seed).unwrap_or(0);
    let mut cfg = SimulationConfig::new(params, x0, h, steps, seed, scheme);
    if a.strict {
        cfg.breach_policy = BreachPolicy::Strict;
    }
    let runs = simulate_paths(&cfg, paths)?;
    for (i, run) in runs.iter().enumerate() {
        if run.breached() {
            ctx.warn(&format!(
                "path {}: {} positivity breach(es) reflected, first at step {}",
                i + 1,
                run.breaches.len(),
                run.breaches[0]
            ));
        }
    }

    let mut w = csv_writer(ctx.out()?);
    let mut header = vec!["t".to_owned()];
    if paths == 1 {
        header.push("x".to_owned());
    } else {
        header.extend((1..=paths).map(|i| format!("x_{i}")));
    }
    w.write_record(&header)?;
    let times = runs[0].trajectory.times();
    for (row, t) in times.iter().enumerate() {
        let mut rec = vec![num(*t)];
        rec.extend(runs.iter().map(|r| num(r.trajectory.values()[row])));
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

fn methods(choice: MethodArg) -> Vec<SigmaMethod> {
    match choice {
        MethodArg::M1 => vec![SigmaMethod::M1],
        MethodArg::M2 => vec![SigmaMethod::M2],
        MethodArg::Both => vec![SigmaMethod::M1, SigmaMethod::M2],
    }
}

fn estimate(ctx: &RunContext, a: &EstimateArgs) -> Result<()> {
    let traj = Table::read(&a.input)?.trajectory()?;
    let choice = a.method.or(ctx.file.method).unwrap_or(MethodArg::Both);
    let reports = methods(choice)
        .into_iter()
        .map(|m| estimate_all(&traj, m).with_context(|| format!("estimating with {}", m.as_str())))
        .collect::<Result<Vec<_>>>()?;
    let mut out = ctx.out()?;
    for (i, r) in reports.iter().enumerate() {
        if i > 0 {
            writeln!(out)?;
        }
        write_report(&mut out, r)?;
    }
    out.flush()?;
    Ok(())
}

fn forecast_params(ctx: &RunContext, a: &ForecastArgs) -> Result<CirParams> {
    let Some(path) = &a.estimates else {
        return ctx.file.params(&a.params);
    };
    let records = read_estimates(path)?;
    let rec = match a.method {
        None => &records[0],
        Some(MethodArg::Both) => bail!("--method for forecast must be m1 or m2"),
        Some(m) => {
            let want = methods(m)[0];
            records
                .iter()
                .find(|r| r.sigma_method == want)
                .with_context(|| format!("{}: no {} record", path.display(), want.as_str()))?
        }
    };
    Ok(CirParams::new(rec.alpha_hat, rec.beta_hat, rec.sigma_hat)?)
}

fn forecast(ctx: &RunContext, a: &ForecastArgs) -> Result<()> {
    let params = forecast_params(ctx, a)?;
    let traj = Table::read(&a.input)?.trajectory()?;
    let level = a.level.or(ctx.file.level);
    let (t, x) = (traj.times(), traj.values());

    let mut w = csv_writer(ctx.out()?);
    let mut header = vec!["t", "x", "etf", "ectf"];
    if level.is_some() {
        header.extend(["lower", "upper"]);
    }
    w.write_record(&header)?;
    for i in 0..traj.len() {
        let etf = params.trend(x[0], t[i] - t[0])?;
        let mut rec = vec![num(t[i]), num(x[i]), num(etf)];
        if i == 0 {
            rec.push(num(x[0]));
            if level.is_some() {
                rec.extend([num(x[0]), num(x[0])]);
            }
        } else {
            let dt = t[i] - t[i - 1];
            rec.push(num(params.conditional_trend(x[i - 1], dt)?));
            if let Some(level) = level {
                let b = confidence_band(&params, x[i - 1], dt, level)
                    .with_context(|| format!("band for row {}", i + 1))?;
                rec.extend([num(b.lower), num(b.upper)]);
            }
        }
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

fn band(ctx: &RunContext, a: &BandArgs) -> Result<()> {
    let params = ctx.file.params(&a.params)?;
    let level = a.level.or(ctx.file.level).unwrap_or(DEFAULT_LEVEL);
    let mut w = csv_writer(ctx.out()?);
    w.write_record(["dt", "lower", "mid", "upper", "quality_flag"])?;
    for &dt in &a.dt {
        let b = confidence_band(&params, a.xs, dt, level)?;
        w.write_record([num(dt), num(b.lower), num(b.midpoint()), num(b.upper), b.quality.as_str().to_owned()])?;
    }
    w.flush()?;
    Ok(())
}

fn evaluate(ctx: &RunContext, a: &EvaluateArgs) -> Result<()> {
    let table = Table::read(&a.input)?;
    let report = fit_metrics(&table.column(&a.observed)?, &table.column(&a.predicted)?)?;
    let mut out = ctx.out()?;
    writeln!(out, "mae={}", num(report.mae))?;
    writeln!(out, "rmse={}", num(report.rmse))?;
    writeln!(out, "mape_percent={}", num(report.mape_percent))?;
    writeln!(out, "interpretation={}", report.interpretation)?;
    writeln!(out, "n={}", report.n)?;
    out.flush()?;
    Ok(())
}
