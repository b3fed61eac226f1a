use super::basis::{inner, Basis};
use super::matrix::Gate;
use super::{Amplitude, QuantumError, NORM_TOLERANCE};

/// A normalized single-qubit state: the amplitude pair `(a, b)` relative to
/// the coordinate frame stored with it.
///
/// A `Qubit` is a consumable resource. Destructive measurement and gate
/// application take it by value, and the type deliberately implements neither
/// `Clone` nor `Copy`: an unknown state cannot be duplicated.
///
/// ```compile_fail
/// use qjudge_core::quantum::{make_qubit, Amplitude};
///
/// let q = make_qubit(Amplitude::new(1.0, 0.0), Amplitude::new(0.0, 0.0)).unwrap();
/// let duplicate: qjudge_core::quantum::Qubit = q.clone(); // no clone for unknown states
/// ```
#[derive(Debug)]
pub struct Qubit {
    a: Amplitude,
    b: Amplitude,
    frame: Basis,
}

/// Normalizes the amplitude pair and wraps it as a fresh state in the
/// computational frame.
pub fn make_qubit(a: Amplitude, b: Amplitude) -> Result<Qubit, QuantumError> {
    if !a.is_finite() || !b.is_finite() {
        return Err(QuantumError::InvalidState);
    }
    let norm_sq = a.norm_sqr() + b.norm_sqr();
    if norm_sq <= 0.0 || !norm_sq.is_finite() {
        return Err(QuantumError::InvalidState);
    }
    let norm = norm_sq.sqrt();
    Qubit::from_components(a / norm, b / norm, Basis::computational())
}

impl Qubit {
    /// Wraps already-normalized components, rejecting norm drift beyond
    /// tolerance.
    pub(crate) fn from_components(
        a: Amplitude,
        b: Amplitude,
        frame: Basis,
    ) -> Result<Qubit, QuantumError> {
        let norm = (a.norm_sqr() + b.norm_sqr()).sqrt();
        if !norm.is_finite() || (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(QuantumError::NormalizationDrift { norm });
        }
        Ok(Qubit { a, b, frame })
    }

    /// The amplitude pair relative to this state's own frame.
    pub fn amplitudes(&self) -> (Amplitude, Amplitude) {
        (self.a, self.b)
    }

    pub fn frame(&self) -> &Basis {
        &self.frame
    }

    /// Coordinates in the computational basis.
    pub fn to_computational(&self) -> [Amplitude; 2] {
        let f = self.frame.first();
        let s = self.frame.second();
        [self.a * f[0] + self.b * s[0], self.a * f[1] + self.b * s[1]]
    }

    /// Coordinates `(⟨first|q⟩, ⟨second|q⟩)` relative to an arbitrary basis.
    /// Reads the state without consuming it.
    pub fn components_in(&self, basis: &Basis) -> (Amplitude, Amplitude) {
        let c = self.to_computational();
        (inner(&basis.first(), &c), inner(&basis.second(), &c))
    }

    pub fn norm(&self) -> f64 {
        (self.a.norm_sqr() + self.b.norm_sqr()).sqrt()
    }

    /// Entrywise comparison of computational coordinates.
    pub fn approx_eq(&self, other: &Qubit, tolerance: f64) -> bool {
        let u = self.to_computational();
        let v = other.to_computational();
        (u[0] - v[0]).norm() <= tolerance && (u[1] - v[1]).norm() <= tolerance
    }

    /// Comparison modulo a global phase. States equal up to phase share all
    /// Born probabilities.
    pub fn approx_eq_up_to_phase(&self, other: &Qubit, tolerance: f64) -> bool {
        let u = self.to_computational();
        let v = other.to_computational();
        // Align phases on the larger component of `self`.
        let pivot = if u[0].norm() >= u[1].norm() { 0 } else { 1 };
        if v[pivot].norm() == 0.0 {
            return u[pivot].norm() <= tolerance
                && (u[1 - pivot] - v[1 - pivot]).norm() <= tolerance;
        }
        let phase = u[pivot] / v[pivot];
        let phase = phase / phase.norm();
        (u[0] - v[0] * phase).norm() <= tolerance && (u[1] - v[1] * phase).norm() <= tolerance
    }
}

impl Gate {
    /// Applies the gate, consuming the input state and returning the new one
    /// (in computational coordinates). Errors if numeric drift pushes the
    /// result off the unit sphere.
    pub fn apply(&self, qubit: Qubit) -> Result<Qubit, QuantumError> {
        let out = self.matrix().mul_vec(qubit.to_computational());
        Qubit::from_components(out[0], out[1], Basis::computational())
    }
}
