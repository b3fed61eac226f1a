//! Pure-state single-qubit mathematics.
//!
//! States live in a 2-dimensional complex space. A [`Qubit`] is a normalized
//! amplitude pair expressed in some orthonormal [`Basis`]; it is a consumable
//! resource: destructive measurement takes it by value and no duplication
//! operation exists for unknown states. Gates are 2×2 unitaries checked at
//! construction; the basic-measurement gate is the unimodular linear
//! combination of the two basis projectors and is therefore reversible.

mod basis;
mod matrix;
mod measure;
mod qubit;

pub use basis::{make_basis, Basis, BasisIndex};
pub use matrix::{basic_measurement_gate, not_gate, projector, Gate, Matrix2};
pub use measure::{born_probabilities, measure_standard, MeasurementRng, Outcome};
pub use qubit::{make_qubit, Qubit};

/// Complex coefficient of a basis state; its squared modulus is the
/// measurement probability.
pub type Amplitude = num_complex::Complex64;

/// Tolerance for state/operator validation (normalization, unitarity,
/// orthonormality).
pub const NORM_TOLERANCE: f64 = 1e-9;

/// Tolerance for round-trip identities (reversibility, adjoint involution).
pub const IDENTITY_TOLERANCE: f64 = 1e-12;

/// Errors from state and operator construction or application.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum QuantumError {
    /// Amplitudes were non-finite or identically zero.
    #[error("invalid state: amplitudes must be finite and not both zero")]
    InvalidState,
    /// Basis angles were NaN or infinite.
    #[error("basis angles must be finite (got gamma={gamma}, phi={phi})")]
    NonFiniteAngles { gamma: f64, phi: f64 },
    /// A matrix offered as a gate failed the unitarity check.
    #[error("matrix is not unitary (deviation from identity {deviation:e})")]
    NotUnitary { deviation: f64 },
    /// A state drifted away from unit norm beyond tolerance.
    #[error("internal numeric error: state norm drifted to {norm}")]
    NormalizationDrift { norm: f64 },
}
