//! The `check-axioms` command: runs the insider's basic and liar
//! measurements on one qubit, derives both resulting axioms from the
//! judgement pairs they produce, checks their classical status and the
//! syntactic duality between them, and verifies reversibility numerically.

use qjudge_core::bridge::{insider_basic_measure, insider_liar_measure, Phases};
use qjudge_core::logic::{
    check_classical_status, derive, unfold_reflection, ClassicalStatus, Context, Derivation,
    Formula, Judgement,
};
use qjudge_core::quantum::{
    basic_measurement_gate, not_gate, Basis, QuantumError, Qubit,
};

/// Everything the command prints, in structured form.
#[derive(Debug, Clone)]
pub struct AxiomsCheck {
    pub basis_atom: String,
    pub gamma: f64,
    pub phi: f64,
    pub axiom1: Judgement,
    pub axiom1_derivation: Option<Derivation>,
    pub axiom1_status: ClassicalStatus,
    pub axiom2: Judgement,
    pub axiom2_derivation: Option<Derivation>,
    pub axiom2_status: ClassicalStatus,
    /// Whether `dual(axiom 1) = axiom 2` holds syntactically.
    pub duality_holds: bool,
    pub atom_status: ClassicalStatus,
    pub dual_atom_status: ClassicalStatus,
    /// Largest component deviation after undoing liar and basic measurements.
    pub reversibility_deviation: f64,
    /// Largest modulus deviation of the liar measurement's amplitude swap.
    pub liar_swap_deviation: f64,
}

/// Runs both insider measurements on the given qubit and assembles the check.
/// The judgements do not depend on the qubit; the numeric checks exercise it.
pub fn check_axioms(qubit: Qubit, basis: &Basis) -> Result<AxiomsCheck, QuantumError> {
    let original = qubit.to_computational();
    let before = qubit.components_in(basis);

    let (_, after_basic, axiom1) = insider_basic_measure(qubit, basis, Phases::default())?;
    let mid = after_basic.components_in(basis);
    let (_, after_liar, axiom2) = insider_liar_measure(after_basic, basis, Phases::default())?;
    let swapped = after_liar.components_in(basis);
    let liar_swap_deviation = (swapped.0.norm() - mid.1.norm())
        .abs()
        .max((swapped.1.norm() - mid.0.norm()).abs())
        .max((mid.0.norm() - before.0.norm()).abs());

    // Undo both reversible measurements and compare with the input.
    let liar_gate = basic_measurement_gate(basis, 0.0, 0.0).then(&not_gate(basis));
    let basic_gate = basic_measurement_gate(basis, 0.0, 0.0);
    let restored = basic_gate
        .adjoint()
        .apply(liar_gate.adjoint().apply(after_liar)?)?;
    let restored = restored.to_computational();
    let reversibility_deviation = (restored[0] - original[0])
        .norm()
        .max((restored[1] - original[1]).norm());

    // The derivation context holds the two judgement pairs the reversible
    // measurements produced; the reflected axioms are derived, not assumed.
    let mut context = Context::inside();
    for axiom in [&axiom1, &axiom2] {
        let (first, second) = unfold_reflection(axiom).expect("insider axioms are reflections");
        context.add_axiom(first).expect("inside contexts accept dual pairs");
        context.add_axiom(second).expect("inside contexts accept dual pairs");
    }

    Ok(AxiomsCheck {
        basis_atom: basis.atom().to_string(),
        gamma: basis.gamma(),
        phi: basis.phi(),
        axiom1_derivation: derive(&context, &axiom1),
        axiom1_status: check_classical_status(&axiom1),
        axiom2_derivation: derive(&context, &axiom2),
        axiom2_status: check_classical_status(&axiom2),
        duality_holds: axiom1.dual() == axiom2,
        atom_status: check_classical_status(&Judgement::assertion(Formula::atom(basis.atom()))),
        dual_atom_status: check_classical_status(&Judgement::assertion(Formula::dual_atom(
            basis.atom(),
        ))),
        axiom1,
        axiom2,
        reversibility_deviation,
        liar_swap_deviation,
    })
}

pub fn render_axioms_check(check: &AxiomsCheck) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "basis: {} (gamma={}, phi={})\n",
        check.basis_atom, check.gamma, check.phi
    ));
    render_axiom(&mut out, 1, "basic", &check.axiom1, &check.axiom1_derivation, check.axiom1_status);
    render_axiom(&mut out, 2, "liar", &check.axiom2, &check.axiom2_derivation, check.axiom2_status);
    out.push_str(&format!(
        "symmetry: dual({}) = {} ... {}\n",
        check.axiom1.to_unicode(),
        check.axiom2.to_unicode(),
        if check.duality_holds { "ok" } else { "FAILED" }
    ));
    out.push_str(&format!(
        "single assertions: \u{22a2} {} is {}, \u{22a2} {}\u{22a5} is {}\n",
        check.basis_atom, check.atom_status, check.basis_atom, check.dual_atom_status
    ));
    out.push_str(&format!(
        "reversibility: adjoint gates restore the input (max deviation {:e})\n",
        check.reversibility_deviation
    ));
    out.push_str(&format!(
        "liar swap: amplitude moduli interchanged (max deviation {:e})\n",
        check.liar_swap_deviation
    ));
    out
}

fn render_axiom(
    out: &mut String,
    number: usize,
    kind: &str,
    judgement: &Judgement,
    derivation: &Option<Derivation>,
    status: ClassicalStatus,
) {
    out.push_str(&format!(
        "axiom {number} ({kind} measurement): {}\n",
        judgement.to_unicode()
    ));
    out.push_str(&format!("  ascii: {}\n", judgement.to_ascii()));
    match derivation {
        Some(tree) => {
            out.push_str("  derivation:\n");
            for line in tree.to_tree_string().lines() {
                out.push_str(&format!("    {line}\n"));
            }
        }
        None => out.push_str("  derivation: not derivable\n"),
    }
    out.push_str(&format!("  classical status: {status}\n"));
}

#[cfg(test)]
mod tests {
    use super::*;
    use qjudge_core::logic::ClassicalStatus;
    use qjudge_core::quantum::{make_basis, make_qubit, Amplitude};

    fn default_check() -> AxiomsCheck {
        let q = make_qubit(Amplitude::new(0.6, 0.0), Amplitude::new(0.0, 0.8)).unwrap();
        let basis = make_basis(0.0, 0.0, "A").unwrap();
        check_axioms(q, &basis).unwrap()
    }

    #[test]
    fn both_axioms_come_out_derivable_and_unsatisfiable() {
        let check = default_check();
        assert_eq!(check.axiom1.to_unicode(), "\u{22a2} A & A\u{22a5}");
        assert_eq!(check.axiom2.to_unicode(), "A\u{22a5} \u{2295} A \u{22a2}");
        assert!(check.axiom1_derivation.is_some());
        assert!(check.axiom2_derivation.is_some());
        assert_eq!(check.axiom1_status, ClassicalStatus::ClassicallyUnsatisfiable);
        assert_eq!(check.axiom2_status, ClassicalStatus::ClassicallyUnsatisfiable);
        assert!(check.duality_holds);
        assert_eq!(check.atom_status, ClassicalStatus::Contingent);
        assert_eq!(check.dual_atom_status, ClassicalStatus::Contingent);
        assert!(check.reversibility_deviation < 1e-12);
        assert!(check.liar_swap_deviation < 1e-12);
    }

    #[test]
    fn rendering_contains_both_axioms_in_both_notations() {
        let rendered = render_axioms_check(&default_check());
        assert!(rendered.contains("\u{22a2} A & A\u{22a5}"));
        assert!(rendered.contains("A\u{22a5} \u{2295} A \u{22a2}"));
        assert!(rendered.contains("|- A & A^"));
        assert!(rendered.contains("A^ (+) A |-"));
        assert!(rendered.contains("symmetry"));
        assert!(rendered.contains("... ok"));
    }
}
