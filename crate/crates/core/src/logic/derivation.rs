use std::fmt;

use super::formula::Formula;
use super::judgement::{Judgement, Polarity};
use super::LogicError;

/// Where a context's axioms come from: an external observer performing
/// destructive measurements, or the internal observer whose reversible
/// measurements can make both dual judgements hold at once.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Observer {
    Outside,
    Inside,
}

/// A set of axiom judgements tied to an observer.
///
/// Outside contexts keep the exclusivity of destructive measurement: for each
/// atom, only one of the two dual verdicts may enter (asserting `A` and
/// asserting `A⊥` are mutually exclusive, as are the equivalent falsity
/// forms). Inside contexts accept both.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Context {
    observer: Observer,
    axioms: Vec<Judgement>,
}

impl Context {
    pub fn new(observer: Observer) -> Context {
        Context {
            observer,
            axioms: Vec::new(),
        }
    }

    pub fn outside() -> Context {
        Context::new(Observer::Outside)
    }

    pub fn inside() -> Context {
        Context::new(Observer::Inside)
    }

    pub fn observer(&self) -> Observer {
        self.observer
    }

    pub fn axioms(&self) -> &[Judgement] {
        &self.axioms
    }

    pub fn contains(&self, judgement: &Judgement) -> bool {
        self.axioms.iter().any(|axiom| axiom == judgement)
    }

    /// Adds an axiom, preserving insertion order and ignoring duplicates.
    /// In an outside context, a judgement that contradicts the recorded
    /// verdict for the same atom is rejected.
    pub fn add_axiom(&mut self, judgement: Judgement) -> Result<(), LogicError> {
        if self.contains(&judgement) {
            return Ok(());
        }
        if self.observer == Observer::Outside {
            if let Some((atom, verdict)) = atomic_verdict(&judgement) {
                let clash = self.axioms.iter().any(|existing| {
                    matches!(atomic_verdict(existing),
                        Some((a, v)) if a == atom && v != verdict)
                });
                if clash {
                    return Err(LogicError::OutsideConflict(atom.to_string()));
                }
            }
        }
        self.axioms.push(judgement);
        Ok(())
    }
}

/// Collapses the four atomic judgement shapes to a verdict about the atom:
/// `⊢A` and `A⊥⊢` say "A holds", `⊢A⊥` and `A⊢` say "A fails". Compound
/// judgements have no atomic verdict.
fn atomic_verdict(judgement: &Judgement) -> Option<(&str, bool)> {
    match (judgement.polarity(), judgement.formula()) {
        (Polarity::Assertion, Formula::Atom(name)) => Some((name, true)),
        (Polarity::Falsity, Formula::DualAtom(name)) => Some((name, true)),
        (Polarity::Assertion, Formula::DualAtom(name)) => Some((name, false)),
        (Polarity::Falsity, Formula::Atom(name)) => Some((name, false)),
        _ => None,
    }
}

/// Inference step used at a derivation node.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    /// The conclusion is an axiom of the context.
    AxiomUse,
    /// `⊢ F & G` from `⊢ F` and `⊢ G`.
    ReflectConj,
    /// `F ⊕ G ⊢` from `F ⊢` and `G ⊢`.
    ReflectDisj,
    /// The conclusion is the dual of an axiom.
    Dualize,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::AxiomUse => "axiom",
            Rule::ReflectConj => "reflect-conj",
            Rule::ReflectDisj => "reflect-disj",
            Rule::Dualize => "dualize",
        })
    }
}

/// Tree recording which axioms and reflection/duality steps justify a
/// judgement. Every leaf is an axiom of the context it was derived in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    conclusion: Judgement,
    rule: Rule,
    premises: Vec<Derivation>,
}

impl Derivation {
    pub fn conclusion(&self) -> &Judgement {
        &self.conclusion
    }

    pub fn rule(&self) -> Rule {
        self.rule
    }

    pub fn premises(&self) -> &[Derivation] {
        &self.premises
    }

    /// Indented one-line-per-node rendering, e.g.
    /// `|- A & A^  [reflect-conj]`.
    pub fn to_tree_string(&self) -> String {
        let mut out = String::new();
        self.write_tree(&mut out, 0);
        out
    }

    fn write_tree(&self, out: &mut String, depth: usize) {
        if depth > 0 {
            out.push('\n');
        }
        for _ in 0..depth {
            out.push_str("  ");
        }
        out.push_str(&self.conclusion.to_ascii());
        out.push_str("  [");
        out.push_str(&self.rule.to_string());
        out.push(']');
        for premise in &self.premises {
            premise.write_tree(out, depth + 1);
        }
    }
}

/// Searches for a derivation of `goal` from the context's axioms using
/// exactly four rules: axiom use, the two reflections (premises strictly
/// smaller), and dualization of an axiom. There is no weakening and no
/// ex-falso rule, so a contradictory context does not explode.
pub fn derive(context: &Context, goal: &Judgement) -> Option<Derivation> {
    if context.contains(goal) {
        return Some(Derivation {
            conclusion: goal.clone(),
            rule: Rule::AxiomUse,
            premises: Vec::new(),
        });
    }
    let reflected = match (goal.polarity(), goal.formula()) {
        (Polarity::Assertion, Formula::Conj(l, r)) => Some((
            Rule::ReflectConj,
            Judgement::assertion((**l).clone()),
            Judgement::assertion((**r).clone()),
        )),
        (Polarity::Falsity, Formula::Disj(l, r)) => Some((
            Rule::ReflectDisj,
            Judgement::falsity((**l).clone()),
            Judgement::falsity((**r).clone()),
        )),
        _ => None,
    };
    if let Some((rule, first, second)) = reflected {
        if let (Some(left), Some(right)) = (derive(context, &first), derive(context, &second)) {
            return Some(Derivation {
                conclusion: goal.clone(),
                rule,
                premises: vec![left, right],
            });
        }
    }
    let dual = goal.dual();
    if context.contains(&dual) {
        return Some(Derivation {
            conclusion: goal.clone(),
            rule: Rule::Dualize,
            premises: vec![Derivation {
                conclusion: dual,
                rule: Rule::AxiomUse,
                premises: Vec::new(),
            }],
        });
    }
    None
}
