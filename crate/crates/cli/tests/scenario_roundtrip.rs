//! Round-trip property: rendering a scenario and parsing it back gives the
//! same scenario, including amplitude, angle and judgement payloads.

use proptest::prelude::*;

use qjudge_cli::scenario::{
    parse_scenario, render_scenario, BasisSpec, QubitPreset, QubitSpec, Scenario, StepSpec,
};
use qjudge_core::logic::{Formula, Judgement};
use qjudge_core::quantum::Amplitude;

fn amplitude() -> impl Strategy<Value = Amplitude> {
    (-2.0..2.0f64, -2.0..2.0f64).prop_map(|(re, im)| Amplitude::new(re, im))
}

fn qubit_spec() -> impl Strategy<Value = QubitSpec> {
    prop_oneof![
        (amplitude(), amplitude())
            .prop_filter("normalizable", |(a, b)| a.norm_sqr() + b.norm_sqr() > 1e-3)
            .prop_map(|(a, b)| QubitSpec::Amplitudes(a, b)),
        prop::sample::select(vec![
            QubitPreset::Zero,
            QubitPreset::One,
            QubitPreset::Plus,
            QubitPreset::Minus,
        ])
        .prop_map(QubitSpec::Preset),
    ]
}

fn basis_spec() -> impl Strategy<Value = BasisSpec> {
    (-7.0..7.0f64, -7.0..7.0f64, prop::sample::select(vec!["A", "B", "Spin1"])).prop_map(
        |(gamma, phi, atom)| BasisSpec {
            gamma,
            phi,
            atom: atom.to_string(),
        },
    )
}

fn formula() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        prop::sample::select(vec!["A", "B", "C"]).prop_map(Formula::atom),
        prop::sample::select(vec!["A", "B", "C"]).prop_map(Formula::dual_atom),
    ];
    leaf.prop_recursive(3, 16, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::conj(l, r)),
            (inner.clone(), inner).prop_map(|(l, r)| Formula::disj(l, r)),
        ]
    })
}

fn judgement() -> impl Strategy<Value = Judgement> {
    (formula(), any::<bool>()).prop_map(|(f, assertion)| {
        if assertion {
            Judgement::assertion(f)
        } else {
            Judgement::falsity(f)
        }
    })
}

fn phases() -> impl Strategy<Value = Option<(f64, f64)>> {
    prop::option::of((-3.0..3.0f64, -3.0..3.0f64))
}

/// Step sequences that pass static validation: insider steps first, then at
/// most one consuming step, with logic-only steps sprinkled anywhere.
fn steps() -> impl Strategy<Value = Vec<StepSpec>> {
    let logic_step = prop_oneof![
        judgement().prop_map(StepSpec::Derive),
        judgement().prop_map(StepSpec::ClassicalStatus),
    ];
    let insider = prop_oneof![
        phases().prop_map(|phases| StepSpec::InsiderBasic { phases }),
        phases().prop_map(|phases| StepSpec::InsiderLiar { phases }),
    ];
    let consuming = prop_oneof![
        Just(StepSpec::OutsiderMeasure),
        Just(StepSpec::OutsiderNotMeasure),
    ];
    (
        prop::collection::vec(prop_oneof![logic_step.clone(), insider], 0..4),
        prop::option::of(consuming),
        prop::collection::vec(logic_step, 0..2),
    )
        .prop_map(|(mut head, consumer, tail)| {
            head.extend(consumer);
            head.extend(tail);
            head
        })
}

fn scenario() -> impl Strategy<Value = Scenario> {
    (qubit_spec(), basis_spec(), steps()).prop_map(|(qubit, basis, steps)| Scenario {
        qubit: Some(qubit),
        basis: Some(basis),
        steps,
        seed: 0,
        trials: 1,
    })
}

proptest! {
    #[test]
    fn parse_inverts_render(s in scenario()) {
        let rendered = render_scenario(&s);
        let reparsed = parse_scenario(&rendered).unwrap_or_else(|e| {
            panic!("rendered scenario failed to parse: {e}\n{rendered}")
        });
        prop_assert_eq!(reparsed, s);
    }
}

#[test]
fn bundled_scenarios_parse_and_render_round_trip() {
    for name in [
        "insider_axioms.scn",
        "outsider_born.scn",
        "liar_cheat.scn",
        "outsider_not.scn",
        "rotated_basis.scn",
    ] {
        let path = format!("{}/scenarios/{name}", env!("CARGO_MANIFEST_DIR"));
        let text = std::fs::read_to_string(&path).unwrap();
        let parsed = parse_scenario(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(
            parse_scenario(&render_scenario(&parsed)).unwrap(),
            parsed,
            "{name} round trip"
        );
    }
}
