//! Executes compiled scenarios into reports.
//!
//! Entries run concurrently; the report keeps them in file order. A runtime
//! failure inside one entry marks that entry as errored and leaves the rest
//! of the scenario untouched.

use std::time::Instant;

use rayon::prelude::*;

use rsp_core::ensembles::Params;
use rsp_core::protocols::{run, run_sampled, ProtocolConfig, ProtocolError, Transcript};

use crate::report::{CheckOutcome, DrawReport, EntryReport, EntryStatus, Report};
use crate::scenario::{CompiledEntry, CompiledScenario};

/// Runs every entry of a validated scenario and assembles the report.
pub fn run_scenario(scenario: &CompiledScenario) -> Report {
    let start = Instant::now();
    let entries: Vec<EntryReport> = scenario.entries.par_iter().map(run_entry).collect();
    let passed = entries.iter().all(|e| e.status == EntryStatus::Pass);
    Report {
        scenario: scenario.name.clone(),
        passed,
        entries,
        duration_seconds: start.elapsed().as_secs_f64(),
    }
}

fn run_entry(entry: &CompiledEntry) -> EntryReport {
    let start = Instant::now();
    let mut draws = Vec::new();
    let mut status = EntryStatus::Pass;
    let mut error = None;
    for (index, params) in entry.draws.iter().enumerate() {
        match run_draw(entry, index, params) {
            Ok(draw) => {
                if draw.checks.iter().any(|c| !c.passed) {
                    status = EntryStatus::Fail;
                }
                draws.push(draw);
            }
            Err(e) => {
                status = EntryStatus::Error;
                error = Some(format!("draw {index}: {e}"));
                break;
            }
        }
    }
    EntryReport {
        index: entry.index,
        label: entry.label.clone(),
        protocol: entry.kind,
        resource: entry.resource.describe(),
        ensemble: entry.ensemble.family_name().to_string(),
        status,
        error,
        draws,
        duration_seconds: start.elapsed().as_secs_f64(),
    }
}

fn run_draw(
    entry: &CompiledEntry,
    index: usize,
    params: &Params,
) -> Result<DrawReport, ProtocolError> {
    let config = ProtocolConfig {
        kind: entry.kind,
        resource: entry.resource.clone(),
        ensemble: entry.ensemble.clone(),
        params: params.clone(),
        classifier: entry.classifier,
        accounting: entry.accounting,
    };
    let transcript = match entry.sampling {
        // Each draw replays with its own stream, offset from the entry seed.
        Some(s) => run_sampled(&config, s.trials, s.seed.wrapping_add(index as u64))?,
        None => run(&config)?,
    };
    let checks = run_checks(entry, &transcript);
    Ok(DrawReport {
        draw: index,
        params: params.clone(),
        success_probability: transcript.success_probability,
        ledger: transcript.ledger.clone(),
        records: transcript.records,
        sampling: transcript.sampling,
        checks,
    })
}

fn run_checks(entry: &CompiledEntry, transcript: &Transcript) -> Vec<CheckOutcome> {
    let mut checks = Vec::new();
    if let Some(expect) = entry.expect {
        let delta = (transcript.success_probability - expect.success_probability).abs();
        checks.push(CheckOutcome {
            name: "success-probability".into(),
            passed: delta <= expect.tol,
            detail: format!(
                "|{} - {}| = {delta}, tol {}",
                transcript.success_probability, expect.success_probability, expect.tol
            ),
        });
    }
    if let Some(sampling) = &transcript.sampling {
        // Agreement between the enumerated probability and the empirical
        // rate, at three binomial standard deviations. A degenerate rate
        // (0 or 1) admits no spread, so it must match exactly.
        let p = transcript.success_probability.clamp(0.0, 1.0);
        let sigma = (p * (1.0 - p) / sampling.trials as f64).sqrt();
        let delta = (sampling.empirical_success_rate - p).abs();
        checks.push(CheckOutcome {
            name: "sampling-3-sigma".into(),
            passed: delta <= 3.0 * sigma,
            detail: format!(
                "|{} - {p}| = {delta}, 3 sigma = {}",
                sampling.empirical_success_rate,
                3.0 * sigma
            ),
        });
    }
    checks
}
