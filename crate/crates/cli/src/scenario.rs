//! Scenario files: grammar, parsing, and validation.
//!
//! A scenario is a TOML document carrying a version tag and a list of
//! protocol entries:
//!
//! ```toml
//! format = "rsp-scenario/1"
//! name = "demo"
//!
//! [output]                   # optional defaults, overridden by CLI flags
//! format = "text"            # json | csv | text
//! # path = "report.json"     # omit to print to stdout
//!
//! [[entry]]
//! label = "singlet, real polar family"
//! protocol = "exact"         # exact | probabilistic | joint
//! resource = { kind = "singlet" }
//! ensemble = { family = "qubit-polar-real" }
//! params = "random:3:11"     # or an explicit table of angles
//! # parties = 1              # optional cross-check against the resource
//! # mode = "sample"          # optional; "sample" requires trials
//! # classifier = "strict"    # strict | separability-aware
//! # accounting = "success-fail"  # success-only | success-fail | full-outcome
//! # trials = 100000          # adds a seeded empirical replay
//! # seed = 7                 # replay seed, default 0; draw i uses seed + i
//! [entry.expect]             # optional pass/fail target
//! success_probability = 1.0
//! tol = 1e-9
//! ```
//!
//! `params = "random:<count>:<seed>"` draws `count` parameter sets from the
//! family's valid range with the given seed. An explicit table lists the
//! family's free parameters; pinned ones may be omitted and are filled in
//! (`phi` for the polar and fixed-phase families, `theta` for the
//! equatorial one, the leading polar angle for the restricted families).
//! Resource tables take `kind` plus fields (`a`/`b` for the superposed
//! four-qubit resource, `m`/`matching` for matched singlet products, `d`
//! and optionally `m` for antisymmetric resources); ensembles take `family`
//! plus fields (`phi0`, `d`).
//!
//! Every entry is validated, and all problems are reported together with
//! their entry indices, before anything runs.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};
use std::fs;
use std::path::Path;

use serde::Deserialize;
use thiserror::Error;

use rsp_core::dark::DarkStateSpec;
use rsp_core::ensembles::{
    sample_params, EnsembleSpec, Params, PhaseParams, QubitParams, QuditParams, QutritParams,
};
use rsp_core::protocols::{check_combination, CbitAccounting, Classifier, ProtocolKind};
use rsp_core::random::seeded_rng;

use crate::report::ReportFormat;

/// Version tag every scenario file must carry.
pub const FORMAT_TAG: &str = "rsp-scenario/1";

/// Replay seed for entries that sample without naming one.
pub const DEFAULT_SAMPLING_SEED: u64 = 0;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: String, source: std::io::Error },
    #[error("scenario syntax: {0}")]
    Syntax(String),
    #[error("unsupported scenario format tag {found:?}; this build reads {FORMAT_TAG:?}")]
    FormatTag { found: String },
    #[error("scenario has no entries")]
    NoEntries,
    #[error("{}", render_issues(issues))]
    Invalid { issues: Vec<EntryIssue> },
    #[error("no scenario file or bundled fixture named {name:?}; `rsp list-fixtures` shows the bundled names")]
    UnknownScenario { name: String },
}

/// One validation problem, tied to the entry it came from.
#[derive(Debug, Clone, PartialEq)]
pub struct EntryIssue {
    pub index: usize,
    pub message: String,
}

fn render_issues(issues: &[EntryIssue]) -> String {
    let mut out = format!("invalid scenario ({} problem(s)):", issues.len());
    for issue in issues {
        out.push_str(&format!("\n  entry {}: {}", issue.index, issue.message));
    }
    out
}

/// Pass/fail target declared by an entry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Expectation {
    pub success_probability: f64,
    pub tol: f64,
}

/// Seeded empirical replay request.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sampling {
    pub trials: u64,
    pub seed: u64,
}

/// One validated entry with its parameter draws materialized.
#[derive(Debug, Clone, PartialEq)]
pub struct CompiledEntry {
    pub index: usize,
    pub label: String,
    pub kind: ProtocolKind,
    pub resource: DarkStateSpec,
    pub ensemble: EnsembleSpec,
    pub draws: Vec<Params>,
    pub classifier: Classifier,
    pub accounting: CbitAccounting,
    pub sampling: Option<Sampling>,
    pub expect: Option<Expectation>,
}

/// A fully validated scenario, ready to run.
#[derive(Debug, Clone, PartialEq)]
pub struct CompiledScenario {
    pub name: String,
    pub format: ReportFormat,
    pub output_path: Option<String>,
    pub entries: Vec<CompiledEntry>,
}

impl CompiledScenario {
    /// Forces every entry to replay with this many trials, keeping each
    /// entry's own seed (or the default for entries that had none).
    pub fn override_trials(&mut self, trials: u64) {
        for entry in &mut self.entries {
            let seed = entry.sampling.map_or(DEFAULT_SAMPLING_SEED, |s| s.seed);
            entry.sampling = Some(Sampling { trials, seed });
        }
    }

    /// Replaces the replay seed of every sampling entry.
    pub fn override_seed(&mut self, seed: u64) {
        for entry in &mut self.entries {
            if let Some(sampling) = &mut entry.sampling {
                sampling.seed = seed;
            }
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScenarioFile {
    format: String,
    name: Option<String>,
    output: Option<OutputFile>,
    #[serde(default, rename = "entry")]
    entries: Vec<EntryFile>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct OutputFile {
    format: Option<ReportFormat>,
    path: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct EntryFile {
    label: Option<String>,
    protocol: String,
    resource: toml::Value,
    ensemble: toml::Value,
    params: toml::Value,
    parties: Option<usize>,
    mode: Option<String>,
    classifier: Option<String>,
    accounting: Option<String>,
    trials: Option<u64>,
    seed: Option<u64>,
    expect: Option<ExpectFile>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ExpectFile {
    success_probability: f64,
    tol: f64,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ParamsTable {
    theta: Option<f64>,
    phi: Option<f64>,
    gamma1: Option<f64>,
    gamma2: Option<f64>,
    delta: Option<f64>,
    gammas: Option<Vec<f64>>,
    alphas: Option<Vec<f64>>,
}

/// Reads and validates a scenario file.
pub fn parse_scenario(path: &Path) -> Result<CompiledScenario, CliError> {
    let contents = fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.display().to_string(),
        source,
    })?;
    let hint = path.file_stem().map_or_else(|| "scenario".to_string(), |s| {
        s.to_string_lossy().into_owned()
    });
    parse_scenario_source(&hint, &contents)
}

/// Validates scenario text; `name_hint` names the scenario when the file
/// does not.
pub fn parse_scenario_source(
    name_hint: &str,
    contents: &str,
) -> Result<CompiledScenario, CliError> {
    let file: ScenarioFile =
        toml::from_str(contents).map_err(|e| CliError::Syntax(e.to_string()))?;
    if file.format != FORMAT_TAG {
        return Err(CliError::FormatTag { found: file.format });
    }
    if file.entries.is_empty() {
        return Err(CliError::NoEntries);
    }

    let mut issues = Vec::new();
    let mut entries = Vec::new();
    for (index, raw) in file.entries.iter().enumerate() {
        match compile_entry(index, raw) {
            Ok(entry) => entries.push(entry),
            Err(messages) => {
                issues.extend(messages.into_iter().map(|message| EntryIssue { index, message }));
            }
        }
    }
    if !issues.is_empty() {
        return Err(CliError::Invalid { issues });
    }

    let (format, output_path) = match file.output {
        Some(output) => (output.format.unwrap_or(ReportFormat::Text), output.path),
        None => (ReportFormat::Text, None),
    };
    Ok(CompiledScenario {
        name: file.name.unwrap_or_else(|| name_hint.to_string()),
        format,
        output_path,
        entries,
    })
}

fn compile_entry(index: usize, raw: &EntryFile) -> Result<CompiledEntry, Vec<String>> {
    let mut issues: Vec<String> = Vec::new();

    let kind = match raw.protocol.as_str() {
        "exact" => Some(ProtocolKind::Exact),
        "probabilistic" => Some(ProtocolKind::Probabilistic),
        "joint" => Some(ProtocolKind::Joint),
        other => {
            issues.push(format!(
                "unknown protocol {other:?}; use exact, probabilistic, or joint"
            ));
            None
        }
    };

    let mut resource_ok = true;
    let resource: Option<DarkStateSpec> = match raw.resource.clone().try_into() {
        Ok(spec) => Some(spec),
        Err(e) => {
            issues.push(format!("resource: {e}"));
            resource_ok = false;
            None
        }
    };
    if let Some(spec) = &resource {
        if let Err(e) = spec.validate() {
            issues.push(format!("resource: {e}"));
            resource_ok = false;
        }
    }

    let mut ensemble_ok = true;
    let ensemble: Option<EnsembleSpec> = match raw.ensemble.clone().try_into() {
        Ok(spec) => Some(spec),
        Err(e) => {
            issues.push(format!("ensemble: {e}"));
            ensemble_ok = false;
            None
        }
    };
    if let Some(spec) = &ensemble {
        if let Err(e) = spec.validate() {
            issues.push(format!("ensemble: {e}"));
            ensemble_ok = false;
        }
    }

    if let (Some(kind), Some(resource), Some(ensemble)) = (kind, &resource, &ensemble) {
        // The structural dimension check does not depend on weight or
        // matching validity, so report it even when those already failed.
        if resource.subsystem_dim() != ensemble.dimension() {
            issues.push(format!(
                "resource subsystems have dimension {} but the {} family prepares dimension {}",
                resource.subsystem_dim(),
                ensemble.family_name(),
                ensemble.dimension()
            ));
        } else if resource_ok && ensemble_ok {
            if let Err(e) = check_combination(kind, resource, ensemble) {
                issues.push(e.to_string());
            }
        }
    }
    if let (Some(parties), Some(kind), Some(resource)) = (raw.parties, kind, &resource) {
        // A joint run promotes one of the lead sender's slots to a second
        // participant.
        let expected = match kind {
            ProtocolKind::Joint => resource.remote_parties() + 1,
            _ => resource.remote_parties(),
        };
        if parties != expected {
            issues.push(format!(
                "parties = {parties}, but this run involves {expected} parties besides the lead sender"
            ));
        }
    }

    let draws = match &ensemble {
        Some(spec) => match parse_params(spec, &raw.params) {
            Ok(draws) => Some(draws),
            Err(e) => {
                issues.push(e);
                None
            }
        },
        None => None,
    };

    match raw.mode.as_deref() {
        None => {}
        Some("enumerate") => {
            if raw.trials.is_some() {
                issues.push("mode = \"enumerate\" conflicts with trials".into());
            }
        }
        Some("sample") => {
            if raw.trials.is_none() {
                issues.push("mode = \"sample\" needs a trials count".into());
            }
        }
        Some(other) => {
            issues.push(format!("unknown mode {other:?}; use enumerate or sample"));
        }
    }
    if raw.trials == Some(0) {
        issues.push("trials must be at least 1".into());
    }
    if raw.seed.is_some() && raw.trials.is_none() {
        issues.push("seed is only meaningful together with trials".into());
    }

    let classifier = match raw.classifier.as_deref() {
        None => Some(Classifier::Strict),
        Some("strict") => Some(Classifier::Strict),
        Some("separability-aware") => Some(Classifier::SeparabilityAware),
        Some(other) => {
            issues.push(format!(
                "unknown classifier {other:?}; use strict or separability-aware"
            ));
            None
        }
    };
    let accounting = match raw.accounting.as_deref() {
        None => Some(CbitAccounting::SuccessFail),
        Some("success-only") => Some(CbitAccounting::SuccessOnly),
        Some("success-fail") => Some(CbitAccounting::SuccessFail),
        Some("full-outcome") => Some(CbitAccounting::FullOutcome),
        Some(other) => {
            issues.push(format!(
                "unknown accounting {other:?}; use success-only, success-fail, or full-outcome"
            ));
            None
        }
    };

    let expect = match &raw.expect {
        None => None,
        Some(e) => {
            if e.tol.is_nan() || e.tol < 0.0 {
                issues.push(format!("expect.tol = {} must be nonnegative", e.tol));
            }
            if !(0.0..=1.0).contains(&e.success_probability) {
                issues.push(format!(
                    "expect.success_probability = {} must lie in [0, 1]",
                    e.success_probability
                ));
            }
            Some(Expectation { success_probability: e.success_probability, tol: e.tol })
        }
    };

    if !issues.is_empty() {
        return Err(issues);
    }
    let resource = resource.unwrap();
    Ok(CompiledEntry {
        index,
        label: raw.label.clone().unwrap_or_else(|| format!("entry {index}")),
        kind: kind.unwrap(),
        resource,
        ensemble: ensemble.unwrap(),
        draws: draws.unwrap(),
        classifier: classifier.unwrap(),
        accounting: accounting.unwrap(),
        sampling: raw.trials.map(|trials| Sampling {
            trials,
            seed: raw.seed.unwrap_or(DEFAULT_SAMPLING_SEED),
        }),
        expect,
    })
}

fn parse_params(ensemble: &EnsembleSpec, value: &toml::Value) -> Result<Vec<Params>, String> {
    match value {
        toml::Value::String(s) => {
            let (count, seed) = parse_random_spec(s)?;
            let mut rng = seeded_rng(seed);
            Ok((0..count).map(|_| sample_params(ensemble, &mut rng)).collect())
        }
        toml::Value::Table(_) => {
            let table: ParamsTable =
                value.clone().try_into().map_err(|e| format!("params: {e}"))?;
            reject_stray_fields(ensemble, &table)?;
            let params = complete_params(ensemble, &table)?;
            ensemble.validate_params(&params).map_err(|e| format!("params: {e}"))?;
            Ok(vec![params])
        }
        _ => Err("params must be an angle table or a \"random:<count>:<seed>\" string".into()),
    }
}

fn parse_random_spec(s: &str) -> Result<(usize, u64), String> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 || parts[0] != "random" {
        return Err(format!(
            "params string {s:?} must look like \"random:<count>:<seed>\""
        ));
    }
    let count: usize = parts[1]
        .parse()
        .map_err(|_| format!("draw count {:?} is not a positive integer", parts[1]))?;
    if count == 0 {
        return Err("draw count must be at least 1".into());
    }
    let seed: u64 =
        parts[2].parse().map_err(|_| format!("seed {:?} is not a u64", parts[2]))?;
    Ok((count, seed))
}

/// Field names each family reads from an explicit params table.
fn allowed_fields(spec: &EnsembleSpec) -> &'static [&'static str] {
    match spec {
        EnsembleSpec::QubitPolarReal
        | EnsembleSpec::QubitEquatorial
        | EnsembleSpec::QubitPolarImag
        | EnsembleSpec::QubitFixedPhase { .. } => &["theta", "phi"],
        EnsembleSpec::QutritGeneral | EnsembleSpec::QutritRestricted => {
            &["gamma1", "gamma2", "delta", "phi"]
        }
        EnsembleSpec::QutritEquatorial | EnsembleSpec::QuditFourier { .. } => &["alphas"],
        EnsembleSpec::QuditGeneral { .. } | EnsembleSpec::QuditRestricted4 => {
            &["gammas", "alphas"]
        }
    }
}

fn reject_stray_fields(spec: &EnsembleSpec, table: &ParamsTable) -> Result<(), String> {
    let allowed = allowed_fields(spec);
    let present: [(&str, bool); 7] = [
        ("theta", table.theta.is_some()),
        ("phi", table.phi.is_some()),
        ("gamma1", table.gamma1.is_some()),
        ("gamma2", table.gamma2.is_some()),
        ("delta", table.delta.is_some()),
        ("gammas", table.gammas.is_some()),
        ("alphas", table.alphas.is_some()),
    ];
    for (name, given) in present {
        if given && !allowed.contains(&name) {
            return Err(format!(
                "params: {} does not take {name}; it reads {}",
                spec.family_name(),
                allowed.join(", ")
            ));
        }
    }
    Ok(())
}

fn complete_params(spec: &EnsembleSpec, t: &ParamsTable) -> Result<Params, String> {
    let need = |value: Option<f64>, name: &str| {
        value.ok_or_else(|| format!("params: {} requires {name}", spec.family_name()))
    };
    let need_list = |value: &Option<Vec<f64>>, name: &str| {
        value
            .clone()
            .ok_or_else(|| format!("params: {} requires {name}", spec.family_name()))
    };
    Ok(match spec {
        EnsembleSpec::QubitPolarReal => Params::Qubit(QubitParams {
            theta: need(t.theta, "theta")?,
            phi: t.phi.unwrap_or(0.0),
        }),
        EnsembleSpec::QubitEquatorial => Params::Qubit(QubitParams {
            theta: t.theta.unwrap_or(FRAC_PI_2),
            phi: need(t.phi, "phi")?,
        }),
        EnsembleSpec::QubitPolarImag => Params::Qubit(QubitParams {
            theta: need(t.theta, "theta")?,
            phi: t.phi.unwrap_or(FRAC_PI_2),
        }),
        EnsembleSpec::QubitFixedPhase { phi0 } => Params::Qubit(QubitParams {
            theta: need(t.theta, "theta")?,
            phi: t.phi.unwrap_or(*phi0),
        }),
        EnsembleSpec::QutritGeneral => Params::Qutrit(QutritParams {
            gamma1: need(t.gamma1, "gamma1")?,
            gamma2: need(t.gamma2, "gamma2")?,
            delta: need(t.delta, "delta")?,
            phi: need(t.phi, "phi")?,
        }),
        EnsembleSpec::QutritRestricted => Params::Qutrit(QutritParams {
            gamma1: t.gamma1.unwrap_or(FRAC_PI_4),
            gamma2: need(t.gamma2, "gamma2")?,
            delta: need(t.delta, "delta")?,
            phi: need(t.phi, "phi")?,
        }),
        EnsembleSpec::QutritEquatorial | EnsembleSpec::QuditFourier { .. } => {
            Params::Phases(PhaseParams { alphas: need_list(&t.alphas, "alphas")? })
        }
        EnsembleSpec::QuditGeneral { d } => Params::Qudit(QuditParams {
            d: *d,
            gammas: need_list(&t.gammas, "gammas")?,
            alphas: need_list(&t.alphas, "alphas")?,
        }),
        EnsembleSpec::QuditRestricted4 => {
            let mut gammas = need_list(&t.gammas, "gammas")?;
            // Two entries mean the free part; the pinned leading angle is
            // filled in.
            if gammas.len() == 2 {
                gammas.insert(0, FRAC_PI_4);
            }
            Params::Qudit(QuditParams {
                d: 4,
                gammas,
                alphas: need_list(&t.alphas, "alphas")?,
            })
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn minimal(entry_body: &str) -> String {
        format!(
            "format = \"rsp-scenario/1\"\nname = \"t\"\n\n[[entry]]\n{entry_body}\n"
        )
    }

    #[test]
    fn parses_a_random_draw_entry() {
        let text = minimal(
            r#"protocol = "exact"
resource = { kind = "singlet" }
ensemble = { family = "qubit-polar-real" }
params = "random:4:9""#,
        );
        let scenario = parse_scenario_source("t", &text).unwrap();
        assert_eq!(scenario.entries.len(), 1);
        assert_eq!(scenario.entries[0].draws.len(), 4);
        assert_eq!(scenario.entries[0].classifier, Classifier::Strict);
        assert!(scenario.entries[0].sampling.is_none());
    }

    #[test]
    fn random_draws_are_seeded() {
        let body = r#"protocol = "exact"
resource = { kind = "singlet" }
ensemble = { family = "qubit-polar-real" }
params = "random:4:9""#;
        let a = parse_scenario_source("t", &minimal(body)).unwrap();
        let b = parse_scenario_source("t", &minimal(body)).unwrap();
        assert_eq!(a.entries[0].draws, b.entries[0].draws);
    }

    #[test]
    fn explicit_tables_fill_pinned_values() {
        let text = minimal(
            r#"protocol = "exact"
resource = { kind = "singlet" }
ensemble = { family = "qubit-polar-real" }
params = { theta = 0.5 }"#,
        );
        let scenario = parse_scenario_source("t", &text).unwrap();
        assert_eq!(
            scenario.entries[0].draws,
            vec![Params::Qubit(QubitParams { theta: 0.5, phi: 0.0 })]
        );

        let text = minimal(
            r#"protocol = "probabilistic"
resource = { kind = "antisymmetric", d = 4 }
ensemble = { family = "qudit-restricted4" }
params = { gammas = [0.3, 0.4], alphas = [0.1, 0.2, 0.3] }"#,
        );
        let scenario = parse_scenario_source("t", &text).unwrap();
        match &scenario.entries[0].draws[0] {
            Params::Qudit(p) => {
                assert_eq!(p.gammas.len(), 3);
                assert!((p.gammas[0] - FRAC_PI_4).abs() < 1e-15);
            }
            other => panic!("unexpected params {other:?}"),
        }
    }

    #[test]
    fn all_entry_problems_are_reported_with_indices() {
        let text = format!(
            "{}\n[[entry]]\n{}\n\n[[entry]]\n{}\n",
            "format = \"rsp-scenario/1\"",
            // Valid.
            "protocol = \"exact\"\nresource = { kind = \"singlet\" }\nensemble = { family = \"qubit-polar-real\" }\nparams = \"random:1:1\"",
            // Invalid twice over: degenerate resource and a dimension clash.
            "protocol = \"probabilistic\"\nresource = { kind = \"superposed-four-qubit\", a = 0.0, b = 0.0 }\nensemble = { family = \"qutrit-general\" }\nparams = \"random:1:1\"",
        );
        let err = parse_scenario_source("t", &text).unwrap_err();
        match err {
            CliError::Invalid { issues } => {
                assert!(issues.len() >= 2);
                assert!(issues.iter().all(|i| i.index == 1));
                assert!(issues.iter().any(|i| i.message.contains("degenerate normalization")));
                assert!(issues.iter().any(|i| i.message.contains("dimension")));
            }
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn incompatible_combination_is_a_validation_error() {
        let text = minimal(
            r#"protocol = "exact"
resource = { kind = "antisymmetric", d = 3 }
ensemble = { family = "qubit-equatorial" }
params = "random:1:1""#,
        );
        let err = parse_scenario_source("t", &text).unwrap_err();
        assert!(matches!(err, CliError::Invalid { .. }));
        assert!(err.to_string().contains("dimension"));
    }

    #[test]
    fn wrong_format_tag_and_missing_entries_are_rejected() {
        let err = parse_scenario_source("t", "format = \"other/9\"\n").unwrap_err();
        assert!(matches!(err, CliError::FormatTag { .. }));
        let err = parse_scenario_source("t", "format = \"rsp-scenario/1\"\n").unwrap_err();
        assert!(matches!(err, CliError::NoEntries));
        let err = parse_scenario_source("t", "not toml at all [").unwrap_err();
        assert!(matches!(err, CliError::Syntax(_)));
    }

    #[test]
    fn stray_param_fields_and_bad_random_specs_are_rejected() {
        let text = minimal(
            r#"protocol = "exact"
resource = { kind = "antisymmetric", d = 3 }
ensemble = { family = "qutrit-equatorial" }
params = { theta = 0.5 }"#,
        );
        let err = parse_scenario_source("t", &text).unwrap_err();
        assert!(err.to_string().contains("does not take theta"));

        for bad in ["random:0:5", "random:5", "draws:3:1", "random:x:1"] {
            let text = minimal(&format!(
                "protocol = \"exact\"\nresource = {{ kind = \"singlet\" }}\nensemble = {{ family = \"qubit-polar-real\" }}\nparams = \"{bad}\""
            ));
            assert!(parse_scenario_source("t", &text).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn sampling_fields_are_validated_and_compiled() {
        let text = minimal(
            r#"protocol = "exact"
resource = { kind = "singlet" }
ensemble = { family = "qubit-polar-real" }
params = "random:1:1"
mode = "sample"
trials = 100
seed = 5"#,
        );
        let scenario = parse_scenario_source("t", &text).unwrap();
        assert_eq!(scenario.entries[0].sampling, Some(Sampling { trials: 100, seed: 5 }));

        let text = minimal(
            r#"protocol = "exact"
resource = { kind = "singlet" }
ensemble = { family = "qubit-polar-real" }
params = "random:1:1"
mode = "sample""#,
        );
        assert!(parse_scenario_source("t", &text).is_err());

        let text = minimal(
            r#"protocol = "exact"
resource = { kind = "singlet" }
ensemble = { family = "qubit-polar-real" }
params = "random:1:1"
seed = 5"#,
        );
        assert!(parse_scenario_source("t", &text).is_err());
    }

    #[test]
    fn overrides_rewrite_sampling() {
        let text = minimal(
            r#"protocol = "exact"
resource = { kind = "singlet" }
ensemble = { family = "qubit-polar-real" }
params = "random:1:1"
trials = 100
seed = 5"#,
        );
        let mut scenario = parse_scenario_source("t", &text).unwrap();
        scenario.override_trials(999);
        assert_eq!(scenario.entries[0].sampling, Some(Sampling { trials: 999, seed: 5 }));
        scenario.override_seed(11);
        assert_eq!(scenario.entries[0].sampling, Some(Sampling { trials: 999, seed: 11 }));
    }

    #[test]
    fn parties_cross_check_must_match_the_resource() {
        let text = minimal(
            r#"protocol = "exact"
resource = { kind = "four-qubit-a" }
ensemble = { family = "qubit-polar-real" }
params = "random:1:1"
parties = 3"#,
        );
        let err = parse_scenario_source("t", &text).unwrap_err();
        assert!(err.to_string().contains("parties"));
    }
}
