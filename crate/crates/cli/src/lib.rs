//! Scenario-driven command-line front end for the preparation-protocol
//! simulator.
//!
//! A scenario file (see [`scenario`] for the grammar) lists protocol
//! entries; [`runner::run_scenario`] executes them concurrently and
//! [`report::emit_report`] renders the result as JSON, CSV, or aligned
//! text. Reruns with the same scenario and seeds reproduce the same
//! report byte for byte, apart from wall-clock duration fields.

pub mod fixtures;
pub mod report;
pub mod runner;
pub mod scenario;

pub use report::{emit_report, render, Report, ReportFormat};
pub use runner::run_scenario;
pub use scenario::{parse_scenario, parse_scenario_source, CliError, CompiledScenario};
