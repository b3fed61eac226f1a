use super::{Amplitude, QuantumError, NORM_TOLERANCE};

/// Which of the two basis states a measurement found.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisIndex {
    First,
    Second,
}

impl BasisIndex {
    /// The other basis state (what a classical NOT maps an outcome to).
    pub fn other(self) -> BasisIndex {
        match self {
            BasisIndex::First => BasisIndex::Second,
            BasisIndex::Second => BasisIndex::First,
        }
    }
}

/// Ordered orthonormal pair of states, labeled by an atom name and its dual.
///
/// The pair is parameterized by two angles relative to the computational
/// basis: `first = (cos γ, e^{iφ} sin γ)`, `second = (−e^{−iφ} sin γ, cos γ)`.
/// Both vectors are stored as computational-basis coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct Basis {
    atom: String,
    gamma: f64,
    phi: f64,
    first: [Amplitude; 2],
    second: [Amplitude; 2],
}

/// Builds the orthonormal basis at angles `(gamma, phi)`, labeling the first
/// state with `atom` and the second with its dual.
pub fn make_basis(gamma: f64, phi: f64, atom: &str) -> Result<Basis, QuantumError> {
    if !gamma.is_finite() || !phi.is_finite() {
        return Err(QuantumError::NonFiniteAngles { gamma, phi });
    }
    let (sin, cos) = gamma.sin_cos();
    let phase = Amplitude::cis(phi);
    let first = [Amplitude::new(cos, 0.0), phase * sin];
    let second = [-phase.conj() * sin, Amplitude::new(cos, 0.0)];
    let basis = Basis {
        atom: atom.to_string(),
        gamma,
        phi,
        first,
        second,
    };
    debug_assert!(basis.orthonormality_deviation() < NORM_TOLERANCE);
    Ok(basis)
}

impl Basis {
    /// The computational basis `(|0⟩, |1⟩)`, i.e. the Z eigenbasis. Used as
    /// the default coordinate frame for freshly prepared qubits.
    pub fn computational() -> Basis {
        make_basis(0.0, 0.0, "Z").expect("zero angles are finite")
    }

    pub fn atom(&self) -> &str {
        &self.atom
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// Computational-basis coordinates of the selected basis state.
    pub fn vector(&self, index: BasisIndex) -> [Amplitude; 2] {
        match index {
            BasisIndex::First => self.first,
            BasisIndex::Second => self.second,
        }
    }

    pub fn first(&self) -> [Amplitude; 2] {
        self.first
    }

    pub fn second(&self) -> [Amplitude; 2] {
        self.second
    }

    /// ASCII label of a basis state: the atom name, or `atom^` for the dual.
    pub fn label(&self, index: BasisIndex) -> String {
        match index {
            BasisIndex::First => self.atom.clone(),
            BasisIndex::Second => format!("{}^", self.atom),
        }
    }

    fn orthonormality_deviation(&self) -> f64 {
        let n1 = (inner(&self.first, &self.first).re - 1.0).abs();
        let n2 = (inner(&self.second, &self.second).re - 1.0).abs();
        let ortho = inner(&self.first, &self.second).norm();
        n1.max(n2).max(ortho)
    }
}

/// Hermitian inner product `⟨v|w⟩ = Σ conj(v_i)·w_i`.
pub(crate) fn inner(v: &[Amplitude; 2], w: &[Amplitude; 2]) -> Amplitude {
    v[0].conj() * w[0] + v[1].conj() * w[1]
}
