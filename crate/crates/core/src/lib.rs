//! Single-qubit measurement simulation coupled to a judgement calculus.
//!
//! The [`quantum`] module provides normalized single-qubit states, orthonormal
//! measurement bases, unitary gates and Born-rule measurement with collapse.
//! The [`logic`] module provides formulas over atoms closed under the additive
//! connectives `&` and `⊕`, assertion/falsity judgements, duality, reflection
//! rules and a small derivation engine together with a classical two-valued
//! oracle. The [`bridge`] module connects the two: an outside observer's
//! destructive measurements yield single assertions, while an inside
//! observer's reversible (basic) and liar measurements yield the dual
//! judgement pair `⊢ A & A⊥` and `A⊥ ⊕ A ⊢`.

pub mod bridge;
pub mod logic;
pub mod quantum;
