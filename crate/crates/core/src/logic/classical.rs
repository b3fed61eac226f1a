use std::collections::BTreeMap;
use std::fmt;

use super::formula::Formula;
use super::judgement::{Judgement, Polarity};
use super::LogicError;

/// Total assignment of truth values to atom names.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Valuation {
    assignment: BTreeMap<String, bool>,
}

impl Valuation {
    pub fn new() -> Valuation {
        Valuation::default()
    }

    pub fn set(mut self, atom: impl Into<String>, value: bool) -> Valuation {
        self.assignment.insert(atom.into(), value);
        self
    }

    pub fn get(&self, atom: &str) -> Option<bool> {
        self.assignment.get(atom).copied()
    }
}

/// Classical two-valued evaluation: `&` as conjunction, `⊕` as disjunction,
/// the dual as negation. This oracle is separate from the judgement engine,
/// which gives the connectives no truth-table meaning.
pub fn classical_eval(formula: &Formula, valuation: &Valuation) -> Result<bool, LogicError> {
    match formula {
        Formula::Atom(name) => valuation
            .get(name)
            .ok_or_else(|| LogicError::UnboundAtom(name.clone())),
        Formula::DualAtom(name) => valuation
            .get(name)
            .map(|v| !v)
            .ok_or_else(|| LogicError::UnboundAtom(name.clone())),
        Formula::Conj(l, r) => Ok(classical_eval(l, valuation)? && classical_eval(r, valuation)?),
        Formula::Disj(l, r) => Ok(classical_eval(l, valuation)? || classical_eval(r, valuation)?),
    }
}

/// Verdict of the exhaustive classical check of a judgement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassicalStatus {
    /// The judgement holds under every valuation.
    ClassicallyValid,
    /// No valuation satisfies the judgement: an assertion of a formula that
    /// is always false, or a refutation of a formula that is always true.
    ClassicallyUnsatisfiable,
    /// The judgement holds under some valuations and fails under others.
    Contingent,
}

impl fmt::Display for ClassicalStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassicalStatus::ClassicallyValid => "classically-valid",
            ClassicalStatus::ClassicallyUnsatisfiable => "classically-unsatisfiable",
            ClassicalStatus::Contingent => "contingent",
        })
    }
}

/// Exhaustive valuation search over the judgement's atoms. An assertion is
/// unsatisfiable when its formula evaluates to false everywhere; a falsity
/// judgement is unsatisfiable (as a refutation) when its formula evaluates to
/// true everywhere.
pub fn check_classical_status(judgement: &Judgement) -> ClassicalStatus {
    let atoms: Vec<String> = judgement.formula().atoms().into_iter().collect();
    let mut always_true = true;
    let mut always_false = true;
    for mask in 0u64..(1u64 << atoms.len()) {
        let mut valuation = Valuation::new();
        for (bit, atom) in atoms.iter().enumerate() {
            valuation = valuation.set(atom.clone(), mask >> bit & 1 == 1);
        }
        let value = classical_eval(judgement.formula(), &valuation)
            .expect("valuation is total over the formula's atoms");
        always_true &= value;
        always_false &= !value;
    }
    match judgement.polarity() {
        Polarity::Assertion if always_false => ClassicalStatus::ClassicallyUnsatisfiable,
        Polarity::Assertion if always_true => ClassicalStatus::ClassicallyValid,
        Polarity::Falsity if always_true => ClassicalStatus::ClassicallyUnsatisfiable,
        Polarity::Falsity if always_false => ClassicalStatus::ClassicallyValid,
        _ => ClassicalStatus::Contingent,
    }
}
