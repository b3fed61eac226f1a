//! Executes a scenario against the quantum, bridge and logic layers and
//! assembles the report.
//!
//! Each trial realizes a fresh qubit from its spec (descriptions are
//! clonable, states are not) and replays the steps in order. Judgements
//! produced by measurement steps accumulate as axioms of one running context:
//! insider events contribute their unfolded premise pair, so the reflected
//! axiom stays derivable rather than being assumed. The context belongs to
//! the inside observer exactly when the scenario contains an insider step.

use std::collections::BTreeMap;

use qjudge_core::bridge::{
    insider_basic_measure, insider_liar_measure, outsider_measure, outsider_not_measure,
    ObservationEvent, Phases,
};
use qjudge_core::logic::{
    check_classical_status, derive, unfold_reflection, Context, Judgement, Observer,
};
use qjudge_core::quantum::{Basis, BasisIndex, MeasurementRng, QuantumError, Qubit};

use crate::report::{
    BasisRecord, DerivationRecord, FrequencyEntry, FrequencyRecord, OutcomeRecord, Report,
    StateRecord, StepRecord,
};
use crate::scenario::{Scenario, ScenarioError, StepSpec};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RunError {
    #[error(transparent)]
    Scenario(#[from] ScenarioError),
    #[error("step {step}: {source}")]
    Numeric {
        step: usize,
        source: QuantumError,
    },
    #[error("step {step}: {message}")]
    Step { step: usize, message: String },
}

impl RunError {
    /// Process exit code: 1 for scenario/step errors, 2 for internal numeric
    /// errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Numeric { .. } => 2,
            _ => 1,
        }
    }
}

/// Runs the scenario. The report is a pure function of `(scenario, seed)`.
pub fn run_scenario(scenario: &Scenario) -> Result<Report, RunError> {
    let mut rng = MeasurementRng::new(scenario.seed);
    let observer = if scenario.steps.iter().any(|step| {
        matches!(
            step,
            StepSpec::InsiderBasic { .. } | StepSpec::InsiderLiar { .. }
        )
    }) {
        Observer::Inside
    } else {
        Observer::Outside
    };

    let mut steps = Vec::new();
    let mut tallies: Vec<BTreeMap<String, u64>> =
        vec![BTreeMap::new(); scenario.steps.len()];
    for trial in 0..scenario.trials.max(1) {
        let records = run_once(scenario, observer, &mut rng, &mut tallies)?;
        if trial == 0 {
            steps = records;
        }
    }

    let frequencies = (scenario.trials > 1).then(|| {
        let total = u64::from(scenario.trials);
        scenario
            .steps
            .iter()
            .enumerate()
            .filter(|(_, step)| is_measurement(step))
            .map(|(index, _)| FrequencyRecord {
                step: index + 1,
                total,
                judgements: tallies[index]
                    .iter()
                    .map(|(judgement, &count)| {
                        (
                            judgement.clone(),
                            FrequencyEntry {
                                count,
                                frequency: count as f64 / total as f64,
                            },
                        )
                    })
                    .collect(),
            })
            .collect()
    });

    Ok(Report {
        seed: scenario.seed,
        trials: scenario.trials,
        steps,
        frequencies,
    })
}

fn is_measurement(step: &StepSpec) -> bool {
    !matches!(step, StepSpec::Derive(_) | StepSpec::ClassicalStatus(_))
}

fn run_once(
    scenario: &Scenario,
    observer: Observer,
    rng: &mut MeasurementRng,
    tallies: &mut [BTreeMap<String, u64>],
) -> Result<Vec<StepRecord>, RunError> {
    let mut context = Context::new(observer);
    let mut qubit: Option<Qubit> = match &scenario.qubit {
        Some(spec) => Some(spec.realize().map_err(|source| RunError::Numeric {
            step: 0,
            source,
        })?),
        None => None,
    };
    let basis = match &scenario.basis {
        Some(spec) => Some(spec.realize().map_err(|source| RunError::Numeric {
            step: 0,
            source,
        })?),
        None => None,
    };

    let mut records = Vec::with_capacity(scenario.steps.len());
    for (index, step) in scenario.steps.iter().enumerate() {
        let number = index + 1;
        let record = match step {
            StepSpec::OutsiderMeasure | StepSpec::OutsiderNotMeasure => {
                let (q, b) = take_state(number, &mut qubit, &basis)?;
                let (event, judgement) = match step {
                    StepSpec::OutsiderMeasure => outsider_measure(q, &b, rng),
                    _ => outsider_not_measure(q, &b, rng),
                };
                absorb(&mut context, &judgement, number)?;
                tallies[index]
                    .entry(judgement.to_ascii())
                    .and_modify(|c| *c += 1)
                    .or_insert(1);
                measurement_record(step, &event, &judgement)
            }
            StepSpec::InsiderBasic { phases } | StepSpec::InsiderLiar { phases } => {
                let (q, b) = take_state(number, &mut qubit, &basis)?;
                let phases = phases
                    .map(|(theta0, theta1)| Phases { theta0, theta1 })
                    .unwrap_or_default();
                let (event, after, judgement) = match step {
                    StepSpec::InsiderBasic { .. } => insider_basic_measure(q, &b, phases),
                    _ => insider_liar_measure(q, &b, phases),
                }
                .map_err(|source| RunError::Numeric { step: number, source })?;
                qubit = Some(after);
                let (first, second) =
                    unfold_reflection(&judgement).expect("insider judgements are reflections");
                absorb(&mut context, &first, number)?;
                absorb(&mut context, &second, number)?;
                tallies[index]
                    .entry(judgement.to_ascii())
                    .and_modify(|c| *c += 1)
                    .or_insert(1);
                measurement_record(step, &event, &judgement)
            }
            StepSpec::Derive(goal) => {
                let derivation = derive(&context, goal);
                StepRecord {
                    kind: step.name().to_string(),
                    basis: None,
                    outcome: None,
                    state: None,
                    judgement: goal.to_ascii(),
                    derivation: Some(DerivationRecord::from_result(derivation.as_ref())),
                    classical_status: None,
                }
            }
            StepSpec::ClassicalStatus(judgement) => StepRecord {
                kind: step.name().to_string(),
                basis: None,
                outcome: None,
                state: None,
                judgement: judgement.to_ascii(),
                derivation: None,
                classical_status: Some(check_classical_status(judgement).to_string()),
            },
        };
        records.push(record);
    }
    Ok(records)
}

/// Hands the live qubit and basis to a measurement step. Static validation
/// already rules out use-after-consumption; this is the runtime guard.
fn take_state(
    step: usize,
    qubit: &mut Option<Qubit>,
    basis: &Option<Basis>,
) -> Result<(Qubit, Basis), RunError> {
    let q = qubit.take().ok_or_else(|| RunError::Step {
        step,
        message: "no live qubit (consumed or never declared)".to_string(),
    })?;
    let b = basis.clone().ok_or_else(|| RunError::Step {
        step,
        message: "no basis declared".to_string(),
    })?;
    Ok((q, b))
}

fn absorb(context: &mut Context, judgement: &Judgement, step: usize) -> Result<(), RunError> {
    context
        .add_axiom(judgement.clone())
        .map_err(|e| RunError::Step {
            step,
            message: e.to_string(),
        })
}

fn measurement_record(
    step: &StepSpec,
    event: &ObservationEvent,
    judgement: &Judgement,
) -> StepRecord {
    StepRecord {
        kind: step.name().to_string(),
        basis: Some(BasisRecord {
            atom: event.basis.atom().to_string(),
            gamma: event.basis.gamma(),
            phi: event.basis.phi(),
        }),
        outcome: event.outcome.as_ref().map(|outcome| OutcomeRecord {
            label: event.basis.label(outcome.index),
            index: match outcome.index {
                BasisIndex::First => "first".to_string(),
                BasisIndex::Second => "second".to_string(),
            },
            probability: outcome.probability,
        }),
        state: event.resulting_state.map(|(first, second)| StateRecord {
            first: first.into(),
            second: second.into(),
        }),
        judgement: judgement.to_ascii(),
        derivation: None,
        classical_status: None,
    }
}
