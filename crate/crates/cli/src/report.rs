//! Report model and the JSON, CSV, and text renderers.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use rsp_core::ensembles::Params;
use rsp_core::protocols::{OutcomeRecord, ProtocolKind, ResourceLedger, SamplingSummary};

use crate::scenario::CliError;

/// Output encodings the CLI can emit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum ReportFormat {
    Json,
    Csv,
    Text,
}

/// Outcome of one declared check (an expectation or a sampling
/// consistency test).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Results for one parameter draw of an entry.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DrawReport {
    pub draw: usize,
    pub params: Params,
    pub success_probability: f64,
    pub ledger: ResourceLedger,
    pub records: Vec<OutcomeRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sampling: Option<SamplingSummary>,
    pub checks: Vec<CheckOutcome>,
}

/// Terminal status of one entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EntryStatus {
    Pass,
    Fail,
    Error,
}

impl EntryStatus {
    fn label(self) -> &'static str {
        match self {
            EntryStatus::Pass => "pass",
            EntryStatus::Fail => "FAIL",
            EntryStatus::Error => "ERROR",
        }
    }
}

/// Results for one scenario entry across all of its draws.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntryReport {
    pub index: usize,
    pub label: String,
    pub protocol: ProtocolKind,
    pub resource: String,
    pub ensemble: String,
    pub status: EntryStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub draws: Vec<DrawReport>,
    pub duration_seconds: f64,
}

/// A whole scenario run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub scenario: String,
    pub passed: bool,
    pub entries: Vec<EntryReport>,
    pub duration_seconds: f64,
}

/// Renders a report in the requested encoding.
pub fn render(report: &Report, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => render_json(report),
        ReportFormat::Csv => render_csv(report),
        ReportFormat::Text => render_text(report),
    }
}

/// Renders `report` and either writes it to `out` or prints it.
pub fn emit_report(
    report: &Report,
    format: ReportFormat,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let rendered = render(report, format);
    match out {
        Some(path) => {
            fs::write(path, rendered).map_err(|source| CliError::Write {
                path: path.display().to_string(),
                source,
            })?;
            eprintln!("wrote {}", path.display());
        }
        None => print!("{rendered}"),
    }
    Ok(())
}

fn render_json(report: &Report) -> String {
    let mut text = serde_json::to_string_pretty(report)
        .expect("report serialization cannot fail");
    text.push('\n');
    text
}

fn outcome_digits(outcome: &[usize]) -> String {
    outcome.iter().map(ToString::to_string).collect()
}

fn min_fidelity(record: &OutcomeRecord) -> Option<f64> {
    record
        .fidelities
        .iter()
        .copied()
        .fold(None, |acc: Option<f64>, f| Some(acc.map_or(f, |a| a.min(f))))
}

fn render_csv(report: &Report) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(["scenario", "entry", "outcome", "probability", "success", "fidelity_min"])
        .expect("in-memory csv writes cannot fail");
    for entry in &report.entries {
        for draw in &entry.draws {
            for record in &draw.records {
                let fidelity = min_fidelity(record).map_or(String::new(), |f| f.to_string());
                writer
                    .write_record([
                        report.scenario.clone(),
                        entry.index.to_string(),
                        outcome_digits(&record.outcome),
                        record.probability.to_string(),
                        record.success.to_string(),
                        fidelity,
                    ])
                    .expect("in-memory csv writes cannot fail");
            }
        }
    }
    String::from_utf8(writer.into_inner().expect("in-memory csv flush cannot fail"))
        .expect("csv output is utf-8")
}

fn render_text(report: &Report) -> String {
    let mut out = String::new();
    let verdict = if report.passed { "PASS" } else { "FAIL" };
    let _ = writeln!(out, "scenario {}: {verdict}", report.scenario);
    for entry in &report.entries {
        let _ = writeln!(
            out,
            "\nentry {} [{}]  {}  ({} over {}, ensemble {})",
            entry.index,
            entry.status.label(),
            entry.label,
            entry.protocol,
            entry.resource,
            entry.ensemble,
        );
        if let Some(error) = &entry.error {
            let _ = writeln!(out, "  error: {error}");
        }
        for draw in &entry.draws {
            let _ = writeln!(
                out,
                "  draw {}: success_probability={}",
                draw.draw, draw.success_probability
            );
            let _ = writeln!(
                out,
                "    ledger: ebits={} cbits_per_message={} cbits_total={} parties={} messages={}",
                draw.ledger.ebits,
                draw.ledger.cbits_per_message,
                draw.ledger.cbits_total,
                draw.ledger.parties,
                draw.ledger.messages,
            );
            if let Some(sampling) = &draw.sampling {
                let _ = writeln!(
                    out,
                    "    sampling: trials={} seed={} empirical_success_rate={}",
                    sampling.trials, sampling.seed, sampling.empirical_success_rate
                );
            }
            for check in &draw.checks {
                let verdict = if check.passed { "pass" } else { "FAIL" };
                let _ = writeln!(out, "    check {}: {verdict} ({})", check.name, check.detail);
            }
            let live: Vec<&OutcomeRecord> =
                draw.records.iter().filter(|r| r.probability > 0.0).collect();
            let omitted = draw.records.len() - live.len();
            let _ = writeln!(
                out,
                "    {:<10} {:<22} {:<8} {:<22}",
                "outcome", "probability", "success", "fidelity_min"
            );
            for record in live {
                let fidelity =
                    min_fidelity(record).map_or(String::new(), |f| f.to_string());
                let _ = writeln!(
                    out,
                    "    {:<10} {:<22} {:<8} {:<22}",
                    outcome_digits(&record.outcome),
                    record.probability,
                    record.success,
                    fidelity,
                );
            }
            if omitted > 0 {
                let _ = writeln!(out, "    ({omitted} zero-probability outcomes omitted)");
            }
        }
    }
    out
}
