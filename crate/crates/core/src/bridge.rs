//! Maps physical measurement events to logical judgements.
//!
//! An outside observer performs standard (destructive) measurements and may
//! assert only one of the two dual judgements per qubit; applying a classical
//! NOT to her result turns the assertion into a falsity judgement. The inside
//! observer instead applies reversible gates: the basic measurement yields
//! both assertions at once, reflected into `⊢ A & A⊥`, and the liar
//! measurement (NOT after basic) yields both falsity judgements, reflected
//! into `A⊥ ⊕ A ⊢`, while interchanging the superposition's amplitudes.

use crate::logic::{
    reflect_conjunction, reflect_disjunction, Formula, Judgement,
};
use crate::quantum::{
    basic_measurement_gate, measure_standard, not_gate, Amplitude, Basis, BasisIndex,
    MeasurementRng, Outcome, QuantumError, Qubit,
};

/// Phase pair for the reversible-measurement gate. The defaults `(0, 0)`
/// leave the state unchanged under a basic measurement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Phases {
    pub theta0: f64,
    pub theta1: f64,
}

impl Default for Phases {
    fn default() -> Phases {
        Phases {
            theta0: 0.0,
            theta1: 0.0,
        }
    }
}

/// The four observation kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EventKind {
    StandardMeasurement,
    NotAfterStandard,
    BasicMeasurement,
    LiarMeasurement,
}

impl EventKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            EventKind::StandardMeasurement => "standard-measurement",
            EventKind::NotAfterStandard => "not-after-standard",
            EventKind::BasicMeasurement => "basic-measurement",
            EventKind::LiarMeasurement => "liar-measurement",
        }
    }
}

/// Record of one observation. Standard kinds carry an outcome and the seed of
/// the random source; reversible kinds carry the resulting (still superposed)
/// state as coordinates in the measurement basis.
#[derive(Debug, Clone, PartialEq)]
pub struct ObservationEvent {
    pub kind: EventKind,
    pub basis: Basis,
    pub outcome: Option<Outcome>,
    pub resulting_state: Option<(Amplitude, Amplitude)>,
    pub seed: Option<u64>,
}

fn formula_for(basis: &Basis, index: BasisIndex) -> Formula {
    match index {
        BasisIndex::First => Formula::atom(basis.atom()),
        BasisIndex::Second => Formula::dual_atom(basis.atom()),
    }
}

/// Standard measurement by the external observer: the qubit is consumed and
/// the observer asserts the observed state, `⊢A` or `⊢A⊥`.
pub fn outsider_measure(
    qubit: Qubit,
    basis: &Basis,
    rng: &mut MeasurementRng,
) -> (ObservationEvent, Judgement) {
    let seed = rng.seed();
    let (outcome, _collapsed) = measure_standard(qubit, basis, rng);
    let judgement = Judgement::assertion(formula_for(basis, outcome.index));
    let event = ObservationEvent {
        kind: EventKind::StandardMeasurement,
        basis: basis.clone(),
        outcome: Some(outcome),
        resulting_state: None,
        seed: Some(seed),
    };
    (event, judgement)
}

/// Standard measurement followed by a classical NOT on the result. The
/// flipped label cannot be asserted as true; the observer records the falsity
/// judgement of the post-NOT state instead: outcome `A` gives `A⊥ ⊢`, outcome
/// `A⊥` gives `A ⊢`.
pub fn outsider_not_measure(
    qubit: Qubit,
    basis: &Basis,
    rng: &mut MeasurementRng,
) -> (ObservationEvent, Judgement) {
    let seed = rng.seed();
    let (outcome, _collapsed) = measure_standard(qubit, basis, rng);
    let judgement = Judgement::falsity(formula_for(basis, outcome.index.other()));
    let event = ObservationEvent {
        kind: EventKind::NotAfterStandard,
        basis: basis.clone(),
        outcome: Some(outcome),
        resulting_state: None,
        seed: Some(seed),
    };
    (event, judgement)
}

/// Reversible (basic) measurement by the internal observer: applies the
/// projector-combination gate and obtains the two judgements together,
/// reflected into the first axiom `⊢ A & A⊥`. The transformed state is
/// returned for further use; the adjoint gate restores the input exactly.
pub fn insider_basic_measure(
    qubit: Qubit,
    basis: &Basis,
    phases: Phases,
) -> Result<(ObservationEvent, Qubit, Judgement), QuantumError> {
    let gate = basic_measurement_gate(basis, phases.theta0, phases.theta1);
    let after = gate.apply(qubit)?;
    let judgement = reflect_conjunction(
        Judgement::assertion(formula_for(basis, BasisIndex::First)),
        Judgement::assertion(formula_for(basis, BasisIndex::Second)),
    )
    .expect("both reflected judgements are assertions");
    let event = ObservationEvent {
        kind: EventKind::BasicMeasurement,
        basis: basis.clone(),
        outcome: None,
        resulting_state: Some(after.components_in(basis)),
        seed: None,
    };
    Ok((event, after, judgement))
}

/// Liar measurement: the NOT gate applied after a basic measurement. With
/// default phases the resulting state has the amplitudes `a` and `b`
/// interchanged, cheating any later standard measurement. Logically the
/// insider performs both NOT-measurements at once and obtains the falsity
/// pair, reflected into the second axiom `A⊥ ⊕ A ⊢`.
pub fn insider_liar_measure(
    qubit: Qubit,
    basis: &Basis,
    phases: Phases,
) -> Result<(ObservationEvent, Qubit, Judgement), QuantumError> {
    let gate = basic_measurement_gate(basis, phases.theta0, phases.theta1).then(&not_gate(basis));
    let after = gate.apply(qubit)?;
    let judgement = reflect_disjunction(
        Judgement::falsity(formula_for(basis, BasisIndex::Second)),
        Judgement::falsity(formula_for(basis, BasisIndex::First)),
    )
    .expect("both reflected judgements are falsity judgements");
    let event = ObservationEvent {
        kind: EventKind::LiarMeasurement,
        basis: basis.clone(),
        outcome: None,
        resulting_state: Some(after.components_in(basis)),
        seed: None,
    };
    Ok((event, after, judgement))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::{born_probabilities, make_basis, make_qubit};

    fn c(re: f64, im: f64) -> Amplitude {
        Amplitude::new(re, im)
    }

    fn in_basis(a: Amplitude, b: Amplitude, basis: &Basis) -> Qubit {
        let f = basis.first();
        let s = basis.second();
        make_qubit(a * f[0] + b * s[0], a * f[1] + b * s[1]).unwrap()
    }

    #[test]
    fn measuring_an_eigenstate_always_asserts_its_label() {
        let basis = make_basis(0.9, 0.2, "A").unwrap();
        for seed in 0..16 {
            let q = in_basis(c(1.0, 0.0), c(0.0, 0.0), &basis);
            let mut rng = MeasurementRng::new(seed);
            let (event, judgement) = outsider_measure(q, &basis, &mut rng);
            assert_eq!(judgement.to_ascii(), "|- A");
            assert_eq!(event.kind, EventKind::StandardMeasurement);
            assert_eq!(event.seed, Some(seed));
            assert!(event.outcome.is_some());
            assert!(event.resulting_state.is_none());
        }
    }

    #[test]
    fn outsider_frequencies_follow_the_born_rule() {
        let basis = make_basis(0.4, -1.1, "A").unwrap();
        let mut rng = MeasurementRng::new(5);
        let trials = 20_000;
        let mut asserted_atom = 0u32;
        for _ in 0..trials {
            let q = in_basis(c(0.3_f64.sqrt(), 0.0), c(0.7_f64.sqrt(), 0.0), &basis);
            let (_, judgement) = outsider_measure(q, &basis, &mut rng);
            if judgement.to_ascii() == "|- A" {
                asserted_atom += 1;
            }
        }
        let freq = f64::from(asserted_atom) / f64::from(trials);
        let bound = 4.0 * (0.3_f64 * 0.7 / f64::from(trials)).sqrt();
        assert!((freq - 0.3).abs() < bound, "frequency {freq}");
    }

    #[test]
    fn not_measurement_of_eigenstates_is_deterministic() {
        let basis = make_basis(0.0, 0.0, "A").unwrap();
        for seed in 0..16 {
            let mut rng = MeasurementRng::new(seed);
            let q = make_qubit(c(1.0, 0.0), c(0.0, 0.0)).unwrap();
            let (event, judgement) = outsider_not_measure(q, &basis, &mut rng);
            assert_eq!(judgement.to_ascii(), "A^ |-");
            assert_eq!(event.kind, EventKind::NotAfterStandard);

            let mut rng = MeasurementRng::new(seed);
            let q = make_qubit(c(0.0, 0.0), c(1.0, 0.0)).unwrap();
            let (_, judgement) = outsider_not_measure(q, &basis, &mut rng);
            assert_eq!(judgement.to_ascii(), "A |-");
        }
    }

    #[test]
    fn not_measurement_dualizes_the_plain_judgement() {
        // Same seed, same state: the NOT-measurement's judgement is exactly
        // the dual of what the plain measurement would have asserted.
        let basis = make_basis(0.3, 0.6, "A").unwrap();
        for seed in [1u64, 2, 3, 4, 5] {
            let make = || in_basis(c(0.6, 0.0), c(0.0, 0.8), &basis);
            let (_, plain) = outsider_measure(make(), &basis, &mut MeasurementRng::new(seed));
            let (_, notted) = outsider_not_measure(make(), &basis, &mut MeasurementRng::new(seed));
            assert_eq!(notted, plain.dual());
        }
    }

    #[test]
    fn basic_measurement_preserves_the_state_and_yields_axiom_one() {
        let basis = make_basis(1.3, -0.7, "A").unwrap();
        let q = in_basis(c(0.6, 0.0), c(0.0, 0.8), &basis);
        let (event, after, judgement) =
            insider_basic_measure(q, &basis, Phases::default()).unwrap();
        assert_eq!(judgement.to_ascii(), "|- A & A^");
        assert_eq!(judgement.to_unicode(), "\u{22a2} A & A\u{22a5}");
        assert_eq!(event.kind, EventKind::BasicMeasurement);
        assert!(event.outcome.is_none() && event.seed.is_none());
        let (a, b) = after.components_in(&basis);
        assert!((a - c(0.6, 0.0)).norm() < 1e-12);
        assert!((b - c(0.0, 0.8)).norm() < 1e-12);
        let state = event.resulting_state.unwrap();
        assert!((state.0 - a).norm() < 1e-15);
    }

    #[test]
    fn basic_measurement_is_reversible() {
        let basis = make_basis(0.5, 0.9, "A").unwrap();
        let phases = Phases {
            theta0: 1.1,
            theta1: -2.3,
        };
        let q = make_qubit(c(0.3, -0.4), c(0.5, 0.2)).unwrap();
        let reference = make_qubit(c(0.3, -0.4), c(0.5, 0.2)).unwrap();
        let (_, after, _) = insider_basic_measure(q, &basis, phases).unwrap();
        let restored = basic_measurement_gate(&basis, phases.theta0, phases.theta1)
            .adjoint()
            .apply(after)
            .unwrap();
        assert!(restored.approx_eq(&reference, 1e-12));
    }

    #[test]
    fn liar_measurement_swaps_amplitudes_and_yields_axiom_two() {
        let basis = make_basis(0.8, 0.1, "A").unwrap();
        let q = in_basis(c(0.6, 0.0), c(0.8, 0.0), &basis);
        let (event, after, judgement) =
            insider_liar_measure(q, &basis, Phases::default()).unwrap();
        assert_eq!(judgement.to_ascii(), "A^ (+) A |-");
        assert_eq!(judgement.to_unicode(), "A\u{22a5} \u{2295} A \u{22a2}");
        assert_eq!(event.kind, EventKind::LiarMeasurement);
        let (a, b) = after.components_in(&basis);
        assert!((a - c(0.8, 0.0)).norm() < 1e-12);
        assert!((b - c(0.6, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn liar_twice_with_default_phases_restores_the_state() {
        let basis = make_basis(-0.4, 2.2, "A").unwrap();
        let q = make_qubit(c(0.28, 0.4), c(-0.1, 0.86)).unwrap();
        let reference = make_qubit(c(0.28, 0.4), c(-0.1, 0.86)).unwrap();
        let (_, once, _) = insider_liar_measure(q, &basis, Phases::default()).unwrap();
        let (_, twice, _) = insider_liar_measure(once, &basis, Phases::default()).unwrap();
        assert!(twice.approx_eq(&reference, 1e-12));
    }

    #[test]
    fn outsider_after_liar_sees_swapped_probabilities() {
        // The cheat: the external observer now finds A with probability |b|².
        let basis = make_basis(0.0, 0.0, "A").unwrap();
        let q = make_qubit(c(0.3_f64.sqrt(), 0.0), c(0.7_f64.sqrt(), 0.0)).unwrap();
        let (_, after, _) = insider_liar_measure(q, &basis, Phases::default()).unwrap();
        let (p_first, p_second) = born_probabilities(&after, &basis);
        assert!((p_first - 0.7).abs() < 1e-12);
        assert!((p_second - 0.3).abs() < 1e-12);

        let mut rng = MeasurementRng::new(11);
        let trials = 20_000;
        let mut firsts = 0u32;
        for _ in 0..trials {
            let q = make_qubit(c(0.3_f64.sqrt(), 0.0), c(0.7_f64.sqrt(), 0.0)).unwrap();
            let (_, after, _) = insider_liar_measure(q, &basis, Phases::default()).unwrap();
            let (_, judgement) = outsider_measure(after, &basis, &mut rng);
            if judgement.to_ascii() == "|- A" {
                firsts += 1;
            }
        }
        let freq = f64::from(firsts) / f64::from(trials);
        let bound = 4.0 * (0.7_f64 * 0.3 / f64::from(trials)).sqrt();
        assert!((freq - 0.7).abs() < bound, "frequency {freq}");
    }

    #[test]
    fn basic_and_liar_judgements_are_dual_for_every_basis() {
        for i in 0..25 {
            let basis = make_basis(0.37 * i as f64 - 4.0, 0.59 * i as f64 - 7.0, "A").unwrap();
            let q1 = make_qubit(c(0.6, 0.0), c(0.0, 0.8)).unwrap();
            let q2 = make_qubit(c(0.6, 0.0), c(0.0, 0.8)).unwrap();
            let (_, _, axiom1) = insider_basic_measure(q1, &basis, Phases::default()).unwrap();
            let (_, _, axiom2) = insider_liar_measure(q2, &basis, Phases::default()).unwrap();
            assert_eq!(axiom1.dual(), axiom2);
        }
    }

    #[test]
    fn reversible_events_preserve_born_probabilities() {
        let basis = make_basis(0.25, 1.4, "A").unwrap();
        let q = make_qubit(c(0.48, 0.36), c(0.6, -0.52)).unwrap();
        let reference = make_qubit(c(0.48, 0.36), c(0.6, -0.52)).unwrap();
        let before = born_probabilities(&reference, &basis);
        let (_, after_basic, _) = insider_basic_measure(q, &basis, Phases::default()).unwrap();
        let mid = born_probabilities(&after_basic, &basis);
        assert!((before.0 - mid.0).abs() < 1e-12 && (before.1 - mid.1).abs() < 1e-12);
        let (_, after_liar, _) =
            insider_liar_measure(after_basic, &basis, Phases::default()).unwrap();
        let end = born_probabilities(&after_liar, &basis);
        assert!((before.0 - end.1).abs() < 1e-12 && (before.1 - end.0).abs() < 1e-12);
    }

    #[test]
    fn identical_seeds_reproduce_events_and_judgements() {
        let basis = make_basis(0.6, 0.6, "A").unwrap();
        let run = |seed: u64| {
            let mut rng = MeasurementRng::new(seed);
            let q = make_qubit(c(0.6, 0.0), c(0.8, 0.0)).unwrap();
            outsider_measure(q, &basis, &mut rng)
        };
        assert_eq!(run(99), run(99));
    }

    #[test]
    fn outsider_judgements_are_always_single_assertions() {
        // A standard measurement can assert only one of the two states; the
        // compound judgement is out of its reach.
        use crate::logic::{Formula, Polarity};
        let basis = make_basis(1.0, -0.3, "A").unwrap();
        for seed in 0..32 {
            let mut rng = MeasurementRng::new(seed);
            let q = make_qubit(c(0.48, 0.36), c(0.6, -0.52)).unwrap();
            let (_, judgement) = outsider_measure(q, &basis, &mut rng);
            assert_eq!(judgement.polarity(), Polarity::Assertion);
            assert!(matches!(
                judgement.formula(),
                Formula::Atom(_) | Formula::DualAtom(_)
            ));
        }
    }

    #[test]
    fn events_carry_exactly_the_fields_of_their_kind() {
        let basis = make_basis(0.2, 0.9, "A").unwrap();
        let mut rng = MeasurementRng::new(3);

        let q = make_qubit(c(0.6, 0.0), c(0.8, 0.0)).unwrap();
        let (event, judgement) = outsider_not_measure(q, &basis, &mut rng);
        assert_eq!(event.kind, EventKind::NotAfterStandard);
        assert!(event.outcome.is_some() && event.seed == Some(3));
        assert!(event.resulting_state.is_none());
        // The NOT-measurement judgement is the dual of the plain assertion
        // on the same outcome.
        let outcome = event.outcome.as_ref().unwrap();
        let plain = Judgement::assertion(formula_for(&basis, outcome.index));
        assert_eq!(judgement, plain.dual());

        let q = make_qubit(c(0.6, 0.0), c(0.8, 0.0)).unwrap();
        let (event, _, judgement) = insider_basic_measure(q, &basis, Phases::default()).unwrap();
        assert_eq!(event.kind, EventKind::BasicMeasurement);
        assert!(event.outcome.is_none() && event.seed.is_none());
        assert!(event.resulting_state.is_some());
        assert_eq!(judgement.to_ascii(), "|- A & A^");
    }

    #[test]
    fn eigenstates_still_yield_the_insider_axioms() {
        // The insider's judgement does not depend on the amplitudes; even a
        // basis state (b = 0) yields the full superposed judgement, with the
        // amplitudes surfaced in the event record.
        let basis = make_basis(0.7, 0.1, "A").unwrap();
        let q = in_basis(c(1.0, 0.0), c(0.0, 0.0), &basis);
        let (event, after, judgement) =
            insider_basic_measure(q, &basis, Phases::default()).unwrap();
        assert_eq!(judgement.to_ascii(), "|- A & A^");
        let (a, b) = event.resulting_state.unwrap();
        assert!((a.norm() - 1.0).abs() < 1e-12 && b.norm() < 1e-12);
        let (_, _, judgement) = insider_liar_measure(after, &basis, Phases::default()).unwrap();
        assert_eq!(judgement.to_ascii(), "A^ (+) A |-");
    }
}
