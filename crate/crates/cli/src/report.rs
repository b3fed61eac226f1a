//! Deterministic report structures with text and JSON renderings. Both
//! formats carry the same fields; JSON is the stable machine-readable form.

use std::collections::BTreeMap;

use serde::Serialize;

use qjudge_core::logic::Derivation;
use qjudge_core::quantum::Amplitude;

/// Output format for [`emit_report`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

/// Full record of one scenario run: a deterministic function of the scenario
/// and the seed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub seed: u64,
    pub trials: u32,
    pub steps: Vec<StepRecord>,
    /// Per-step judgement frequencies, present when `trials > 1`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub frequencies: Option<Vec<FrequencyRecord>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StepRecord {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<BasisRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub outcome: Option<OutcomeRecord>,
    /// Resulting superposed state after a reversible step, as coordinates in
    /// the measurement basis.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub state: Option<StateRecord>,
    pub judgement: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub derivation: Option<DerivationRecord>,
    #[serde(rename = "classicalStatus", skip_serializing_if = "Option::is_none")]
    pub classical_status: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BasisRecord {
    pub atom: String,
    pub gamma: f64,
    pub phi: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutcomeRecord {
    /// Label of the observed basis state (`A` or `A^`).
    pub label: String,
    pub index: String,
    pub probability: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComplexRecord {
    pub re: f64,
    pub im: f64,
}

impl From<Amplitude> for ComplexRecord {
    fn from(a: Amplitude) -> ComplexRecord {
        ComplexRecord { re: a.re, im: a.im }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StateRecord {
    pub first: ComplexRecord,
    pub second: ComplexRecord,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DerivationRecord {
    pub derivable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tree: Option<DerivationNode>,
}

impl DerivationRecord {
    pub fn from_result(derivation: Option<&Derivation>) -> DerivationRecord {
        DerivationRecord {
            derivable: derivation.is_some(),
            tree: derivation.map(DerivationNode::from_derivation),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DerivationNode {
    pub judgement: String,
    pub rule: String,
    pub premises: Vec<DerivationNode>,
}

impl DerivationNode {
    fn from_derivation(derivation: &Derivation) -> DerivationNode {
        DerivationNode {
            judgement: derivation.conclusion().to_ascii(),
            rule: derivation.rule().to_string(),
            premises: derivation
                .premises()
                .iter()
                .map(DerivationNode::from_derivation)
                .collect(),
        }
    }

    fn write_text(&self, out: &mut String, depth: usize) {
        out.push_str(&"  ".repeat(depth + 2));
        out.push_str(&format!("{}  [{}]\n", self.judgement, self.rule));
        for premise in &self.premises {
            premise.write_text(out, depth + 1);
        }
    }
}

/// Judgement tallies for one step over all trials.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FrequencyRecord {
    /// 1-based step number.
    pub step: usize,
    pub total: u64,
    pub judgements: BTreeMap<String, FrequencyEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FrequencyEntry {
    pub count: u64,
    pub frequency: f64,
}

/// Renders a report in the requested format. Output is byte-identical across
/// runs with the same scenario and seed.
pub fn emit_report(report: &Report, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut out =
                serde_json::to_string_pretty(report).expect("report serialization cannot fail");
            out.push('\n');
            out
        }
        ReportFormat::Text => render_text(report),
    }
}

fn render_text(report: &Report) -> String {
    let mut out = String::from("qjudge report\n");
    out.push_str(&format!("seed: {}\n", report.seed));
    out.push_str(&format!("trials: {}\n", report.trials));
    for (number, step) in report.steps.iter().enumerate() {
        out.push_str(&format!("step {}: {}\n", number + 1, step.kind));
        if let Some(basis) = &step.basis {
            out.push_str(&format!(
                "  basis: {} (gamma={}, phi={})\n",
                basis.atom, basis.gamma, basis.phi
            ));
        }
        if let Some(outcome) = &step.outcome {
            out.push_str(&format!(
                "  outcome: {} (probability {})\n",
                outcome.label, outcome.probability
            ));
        }
        if let Some(state) = &step.state {
            out.push_str(&format!(
                "  state: ({}, {}) in the measurement basis\n",
                format_complex(&state.first),
                format_complex(&state.second)
            ));
        }
        let label = match step.kind.as_str() {
            "insider-basic" | "insider-liar" => "axiom",
            _ => "judgement",
        };
        out.push_str(&format!("  {label}: {}\n", step.judgement));
        if let Some(derivation) = &step.derivation {
            match &derivation.tree {
                Some(tree) => {
                    out.push_str("  derivation:\n");
                    tree.write_text(&mut out, 0);
                }
                None => out.push_str("  derivation: not derivable\n"),
            }
        }
        if let Some(status) = &step.classical_status {
            out.push_str(&format!("  classical status: {status}\n"));
        }
    }
    if let Some(frequencies) = &report.frequencies {
        out.push_str(&format!("frequencies over {} trials:\n", report.trials));
        for record in frequencies {
            out.push_str(&format!("  step {}:\n", record.step));
            for (judgement, entry) in &record.judgements {
                out.push_str(&format!(
                    "    {}: {} ({})\n",
                    judgement, entry.count, entry.frequency
                ));
            }
        }
    }
    out
}

fn format_complex(c: &ComplexRecord) -> String {
    if c.im >= 0.0 {
        format!("{}+{}i", c.re, c.im)
    } else {
        format!("{}-{}i", c.re, -c.im)
    }
}
