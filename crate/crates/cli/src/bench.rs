use std::io::Write;
use std::time::Instant;

use serde::Serialize;
use spantruss::miner::{mine, MineOptions, MiningOutcome};
use spantruss::{Algorithm, MinerError, TemporalGraph};

use crate::args::ReportFormat;
use crate::CliError;

/// Anything that can mine a graph; lets tests swap in a broken strategy.
pub trait Strategy {
    fn name(&self) -> &str;
    fn run(&self, g: &TemporalGraph) -> Result<MiningOutcome, MinerError>;
    fn reports_skips(&self) -> bool {
        false
    }
}

impl Strategy for Algorithm {
    fn name(&self) -> &str {
        Algorithm::name(*self)
    }

    fn run(&self, g: &TemporalGraph) -> Result<MiningOutcome, MinerError> {
        mine(g, *self, MineOptions::default())
    }

    fn reports_skips(&self) -> bool {
        *self == Algorithm::Heuristic
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub dataset: String,
    pub algorithm: String,
    /// Mining only; ingest is excluded.
    pub wall_time_seconds: f64,
    pub result_count: usize,
    pub skip_count: Option<u64>,
}

/// Runs each strategy in order on `g` and fails with
/// [`CliError::Mismatch`] unless all of them return the same set.
pub fn run_bench(
    dataset: &str,
    g: &TemporalGraph,
    strategies: &[&dyn Strategy],
) -> Result<Vec<RunReport>, CliError> {
    if strategies.is_empty() {
        return Err(CliError::Usage("no algorithms selected".into()));
    }
    let mut reports = Vec::with_capacity(strategies.len());
    let mut reference: Option<(String, MiningOutcome)> = None;
    for s in strategies {
        let started = Instant::now();
        let outcome = s.run(g)?;
        let elapsed = started.elapsed().as_secs_f64();
        log::info!("{}: {} results in {:.3}s", s.name(), outcome.set.len(), elapsed);
        reports.push(RunReport {
            dataset: dataset.to_string(),
            algorithm: s.name().to_string(),
            wall_time_seconds: elapsed,
            result_count: outcome.set.len(),
            skip_count: s.reports_skips().then_some(outcome.stats.skips),
        });
        match &reference {
            None => reference = Some((s.name().to_string(), outcome)),
            Some((name, first)) if first.set != outcome.set => {
                return Err(CliError::Mismatch(format!(
                    "{} returned {} results, {} returned {}",
                    name,
                    first.set.len(),
                    s.name(),
                    outcome.set.len()
                )));
            }
            Some(_) => {}
        }
    }
    Ok(reports)
}

pub fn write_reports<W: Write>(
    out: W,
    reports: &[RunReport],
    format: ReportFormat,
) -> Result<(), CliError> {
    match format {
        ReportFormat::Json => {
            let mut out = out;
            for r in reports {
                serde_json::to_writer(&mut out, r)?;
                writeln!(out)?;
            }
        }
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in reports {
                w.serialize(r)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}
