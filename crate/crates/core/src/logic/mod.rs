//! Formulas, judgements, duality and reflection, plus a minimal derivation
//! engine over observer contexts and a classical two-valued oracle.
//!
//! Formulas are atoms and dual atoms closed under the additive conjunction
//! `&` and the additive disjunction `⊕` (ASCII `(+)`), kept in negation
//! normal form. A judgement is either an assertion `⊢ F` ("F is true because
//! it results from a measurement") or a falsity judgement `F ⊢` (the
//! primitive way to say that F is false). Duality flips judgement polarity,
//! dualizes atoms and swaps `&` with `⊕`; it is an involution and carries the
//! insider's first axiom `⊢ A & A⊥` to the second, `A⊥ ⊕ A ⊢`.
//!
//! The classical oracle evaluates `&`/`⊕` as ordinary conjunction/disjunction
//! and duals as negation. It exists only to certify the clash with classical
//! principles: both insider axioms are classically unsatisfiable while the
//! single assertions stay contingent. Inside the judgement engine the
//! connectives carry no truth-table semantics.

mod classical;
mod derivation;
mod formula;
mod judgement;
mod parse;

pub use classical::{check_classical_status, classical_eval, ClassicalStatus, Valuation};
pub use derivation::{derive, Context, Derivation, Observer, Rule};
pub use formula::Formula;
pub use judgement::{
    reflect_conjunction, reflect_disjunction, unfold_reflection, Judgement, Polarity,
};
pub use parse::{parse_formula, parse_judgement};

/// Errors from formula parsing, reflection contracts, valuations and context
/// construction.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LogicError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("ambiguous formula at position {position}: mixing '&' and '(+)' requires parentheses")]
    AmbiguousMix { position: usize },
    #[error("polarity error: {0}")]
    Polarity(String),
    #[error("valuation does not assign atom '{0}'")]
    UnboundAtom(String),
    #[error("outside observer already holds the dual judgement for atom '{0}'")]
    OutsideConflict(String),
}
