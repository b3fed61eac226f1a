use super::basis::{Basis, BasisIndex};
use super::{Amplitude, QuantumError, NORM_TOLERANCE};

/// Row-major 2×2 complex matrix. No invariant; see [`Gate`] for unitaries.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix2 {
    entries: [[Amplitude; 2]; 2],
}

impl Matrix2 {
    pub fn new(entries: [[Amplitude; 2]; 2]) -> Matrix2 {
        Matrix2 { entries }
    }

    pub fn identity() -> Matrix2 {
        let one = Amplitude::new(1.0, 0.0);
        let zero = Amplitude::new(0.0, 0.0);
        Matrix2::new([[one, zero], [zero, one]])
    }

    pub fn zero() -> Matrix2 {
        Matrix2::new([[Amplitude::new(0.0, 0.0); 2]; 2])
    }

    pub fn entry(&self, row: usize, col: usize) -> Amplitude {
        self.entries[row][col]
    }

    pub fn add(&self, other: &Matrix2) -> Matrix2 {
        let mut out = Matrix2::zero();
        for r in 0..2 {
            for c in 0..2 {
                out.entries[r][c] = self.entries[r][c] + other.entries[r][c];
            }
        }
        out
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &Matrix2) -> Matrix2 {
        let mut out = Matrix2::zero();
        for r in 0..2 {
            for c in 0..2 {
                out.entries[r][c] = self.entries[r][0] * other.entries[0][c]
                    + self.entries[r][1] * other.entries[1][c];
            }
        }
        out
    }

    pub fn scale(&self, k: Amplitude) -> Matrix2 {
        let mut out = *self;
        for row in &mut out.entries {
            for e in row {
                *e *= k;
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Matrix2 {
        Matrix2::new([
            [self.entries[0][0].conj(), self.entries[1][0].conj()],
            [self.entries[0][1].conj(), self.entries[1][1].conj()],
        ])
    }

    pub fn mul_vec(&self, v: [Amplitude; 2]) -> [Amplitude; 2] {
        [
            self.entries[0][0] * v[0] + self.entries[0][1] * v[1],
            self.entries[1][0] * v[0] + self.entries[1][1] * v[1],
        ]
    }

    /// Largest entrywise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &Matrix2) -> f64 {
        let mut max = 0.0_f64;
        for r in 0..2 {
            for c in 0..2 {
                max = max.max((self.entries[r][c] - other.entries[r][c]).norm());
            }
        }
        max
    }

    pub fn approx_eq(&self, other: &Matrix2, tolerance: f64) -> bool {
        self.max_abs_diff(other) <= tolerance
    }
}

/// Projector `|v⟩⟨v|` onto the selected basis state. Idempotent and
/// Hermitian, not unitary.
pub fn projector(basis: &Basis, index: BasisIndex) -> Matrix2 {
    let v = basis.vector(index);
    Matrix2::new([
        [v[0] * v[0].conj(), v[0] * v[1].conj()],
        [v[1] * v[0].conj(), v[1] * v[1].conj()],
    ])
}

/// 2×2 unitary operator; unitarity is checked at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct Gate {
    matrix: Matrix2,
}

impl Gate {
    /// Wraps a matrix after verifying `adjoint(G)·G = I` within tolerance.
    pub fn from_matrix(matrix: Matrix2) -> Result<Gate, QuantumError> {
        let deviation = matrix.adjoint().mul(&matrix).max_abs_diff(&Matrix2::identity());
        if !deviation.is_finite() || deviation > NORM_TOLERANCE {
            return Err(QuantumError::NotUnitary { deviation });
        }
        Ok(Gate { matrix })
    }

    pub fn identity() -> Gate {
        Gate {
            matrix: Matrix2::identity(),
        }
    }

    pub fn matrix(&self) -> &Matrix2 {
        &self.matrix
    }

    /// Conjugate transpose; the inverse of a unitary.
    pub fn adjoint(&self) -> Gate {
        Gate {
            matrix: self.matrix.adjoint(),
        }
    }

    /// Sequential composition: apply `self` first, then `next`.
    pub fn then(&self, next: &Gate) -> Gate {
        // A product of unitaries stays unitary; no re-check needed.
        Gate {
            matrix: next.matrix.mul(&self.matrix),
        }
    }
}

/// The reversible-measurement gate `U = e^{iθ0}·P_first + e^{iθ1}·P_second`:
/// a unimodular linear combination of the two orthogonal projectors, diagonal
/// in the given basis and unitary for any phases.
///
/// Panics if the phases are not finite.
pub fn basic_measurement_gate(basis: &Basis, theta0: f64, theta1: f64) -> Gate {
    assert!(
        theta0.is_finite() && theta1.is_finite(),
        "measurement phases must be finite"
    );
    let p0 = projector(basis, BasisIndex::First).scale(Amplitude::cis(theta0));
    let p1 = projector(basis, BasisIndex::Second).scale(Amplitude::cis(theta1));
    Gate::from_matrix(p0.add(&p1)).expect("projector combination with unimodular phases is unitary")
}

/// The NOT gate relative to a basis: `|first⟩⟨second| + |second⟩⟨first|`,
/// swapping the basis components of any state.
pub fn not_gate(basis: &Basis) -> Gate {
    let f = basis.first();
    let s = basis.second();
    let outer = |a: [Amplitude; 2], b: [Amplitude; 2]| {
        Matrix2::new([
            [a[0] * b[0].conj(), a[0] * b[1].conj()],
            [a[1] * b[0].conj(), a[1] * b[1].conj()],
        ])
    };
    Gate::from_matrix(outer(f, s).add(&outer(s, f)))
        .expect("swap of orthonormal states is unitary")
}
