//! Scenario runner for the measurement/judgement pipeline: parses the
//! line-oriented scenario format, executes it with a seeded random source and
//! emits deterministic text or JSON reports.

pub mod axioms;
pub mod report;
pub mod runner;
pub mod scenario;

pub use axioms::{check_axioms, render_axioms_check, AxiomsCheck};
pub use report::{emit_report, Report, ReportFormat};
pub use runner::{run_scenario, RunError};
pub use scenario::{parse_scenario, render_scenario, Scenario, ScenarioError, StepSpec};
