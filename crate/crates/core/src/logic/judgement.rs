use std::fmt;

use super::formula::Formula;
use super::LogicError;

/// Whether a judgement asserts truth (`⊢ F`) or states falsity (`F ⊢`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Polarity {
    Assertion,
    Falsity,
}

/// A judgement about a formula: `⊢ F` or `F ⊢`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Judgement {
    polarity: Polarity,
    formula: Formula,
}

impl Judgement {
    pub fn assertion(formula: Formula) -> Judgement {
        Judgement {
            polarity: Polarity::Assertion,
            formula,
        }
    }

    pub fn falsity(formula: Formula) -> Judgement {
        Judgement {
            polarity: Polarity::Falsity,
            formula,
        }
    }

    pub fn polarity(&self) -> Polarity {
        self.polarity
    }

    pub fn formula(&self) -> &Formula {
        &self.formula
    }

    /// The dual judgement: polarity flips and the formula dualizes, so
    /// `(⊢ A)⊥ = A⊥ ⊢` and `(⊢ A & A⊥)⊥ = A⊥ ⊕ A ⊢`. An involution.
    pub fn dual(&self) -> Judgement {
        Judgement {
            polarity: match self.polarity {
                Polarity::Assertion => Polarity::Falsity,
                Polarity::Falsity => Polarity::Assertion,
            },
            formula: self.formula.dual(),
        }
    }

    /// Canonical ASCII rendering: `|- F` for assertions, `F |-` for falsity
    /// judgements.
    pub fn to_ascii(&self) -> String {
        match self.polarity {
            Polarity::Assertion => format!("|- {}", self.formula.to_ascii()),
            Polarity::Falsity => format!("{} |-", self.formula.to_ascii()),
        }
    }

    /// Rendering with `⊢`, `⊥` and `⊕`.
    pub fn to_unicode(&self) -> String {
        match self.polarity {
            Polarity::Assertion => format!("\u{22a2} {}", self.formula.to_unicode()),
            Polarity::Falsity => format!("{} \u{22a2}", self.formula.to_unicode()),
        }
    }
}

impl fmt::Display for Judgement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_ascii())
    }
}

/// Reflects a juxtaposed pair of assertions into one: `⊢A, ⊢B` becomes
/// `⊢ A & B`, premise order preserved. Errors unless both inputs are
/// assertions.
pub fn reflect_conjunction(first: Judgement, second: Judgement) -> Result<Judgement, LogicError> {
    if first.polarity != Polarity::Assertion || second.polarity != Polarity::Assertion {
        return Err(LogicError::Polarity(
            "reflection into & takes two assertions".to_string(),
        ));
    }
    Ok(Judgement::assertion(Formula::conj(
        first.formula,
        second.formula,
    )))
}

/// Reflects a juxtaposed pair of falsity judgements into one: `A⊢, B⊢`
/// becomes `A ⊕ B ⊢`, premise order preserved. Errors unless both inputs are
/// falsity judgements.
pub fn reflect_disjunction(first: Judgement, second: Judgement) -> Result<Judgement, LogicError> {
    if first.polarity != Polarity::Falsity || second.polarity != Polarity::Falsity {
        return Err(LogicError::Polarity(
            "reflection into (+) takes two falsity judgements".to_string(),
        ));
    }
    Ok(Judgement::falsity(Formula::disj(
        first.formula,
        second.formula,
    )))
}

/// Unfolds a reflected judgement back into its premise pair, in order:
/// `⊢ A & B` gives `(⊢A, ⊢B)` and `A ⊕ B ⊢` gives `(A⊢, B⊢)`. Returns `None`
/// for judgements that are not reflections.
pub fn unfold_reflection(judgement: &Judgement) -> Option<(Judgement, Judgement)> {
    match (judgement.polarity, &judgement.formula) {
        (Polarity::Assertion, Formula::Conj(l, r)) => Some((
            Judgement::assertion((**l).clone()),
            Judgement::assertion((**r).clone()),
        )),
        (Polarity::Falsity, Formula::Disj(l, r)) => Some((
            Judgement::falsity((**l).clone()),
            Judgement::falsity((**r).clone()),
        )),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_a() -> Judgement {
        Judgement::assertion(Formula::atom("A"))
    }

    fn assert_dual_a() -> Judgement {
        Judgement::assertion(Formula::dual_atom("A"))
    }

    #[test]
    fn dual_of_assertion_is_falsity_of_dual_formula() {
        assert_eq!(assert_a().dual().to_ascii(), "A^ |-");
        assert_eq!(assert_dual_a().dual().to_ascii(), "A |-");
    }

    #[test]
    fn dual_judgement_is_an_involution() {
        let axiom1 = reflect_conjunction(assert_a(), assert_dual_a()).unwrap();
        assert_eq!(axiom1.dual().dual(), axiom1);
    }

    #[test]
    fn dualizing_the_first_axiom_yields_the_second() {
        let axiom1 = reflect_conjunction(assert_a(), assert_dual_a()).unwrap();
        assert_eq!(axiom1.to_unicode(), "\u{22a2} A & A\u{22a5}");
        let axiom2 = axiom1.dual();
        assert_eq!(axiom2.to_unicode(), "A\u{22a5} \u{2295} A \u{22a2}");
        assert_eq!(axiom2.to_ascii(), "A^ (+) A |-");
    }

    #[test]
    fn reflection_builds_the_conjunction_in_order() {
        let j = reflect_conjunction(assert_a(), Judgement::assertion(Formula::atom("B"))).unwrap();
        assert_eq!(j.to_ascii(), "|- A & B");
    }

    #[test]
    fn reflection_rejects_wrong_polarity() {
        let falsity = Judgement::falsity(Formula::atom("A"));
        assert!(matches!(
            reflect_conjunction(falsity.clone(), assert_a()),
            Err(LogicError::Polarity(_))
        ));
        assert!(matches!(
            reflect_disjunction(assert_a(), falsity),
            Err(LogicError::Polarity(_))
        ));
    }

    #[test]
    fn disjunction_reflection_over_fresh_atoms() {
        let j = reflect_disjunction(
            Judgement::falsity(Formula::atom("B")),
            Judgement::falsity(Formula::atom("C")),
        )
        .unwrap();
        assert_eq!(j.to_ascii(), "B (+) C |-");
    }

    #[test]
    fn unfolding_returns_the_premise_pair_in_order() {
        let pair = (assert_a(), assert_dual_a());
        let reflected = reflect_conjunction(pair.0.clone(), pair.1.clone()).unwrap();
        assert_eq!(unfold_reflection(&reflected), Some(pair));
        assert_eq!(unfold_reflection(&assert_a()), None);
    }
}
