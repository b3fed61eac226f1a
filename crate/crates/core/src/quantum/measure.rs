use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::basis::{Basis, BasisIndex};
use super::qubit::Qubit;

/// Deterministic random source for standard measurements, reproducible from a
/// 64-bit seed. The seed stays attached so that every measurement event and
/// report can echo it.
#[derive(Debug, Clone)]
pub struct MeasurementRng {
    seed: u64,
    rng: ChaCha8Rng,
}

impl MeasurementRng {
    pub fn new(seed: u64) -> MeasurementRng {
        MeasurementRng {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Uniform sample from `[0, 1)`.
    pub fn sample_unit(&mut self) -> f64 {
        self.rng.random()
    }
}

/// Result of a standard (destructive) measurement.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub basis: Basis,
    /// Which basis state was observed.
    pub index: BasisIndex,
    /// Born probability of the observed state at measurement time.
    pub probability: f64,
}

/// Born probabilities `(|⟨first|q⟩|², |⟨second|q⟩|²)` of finding each basis
/// state. Reads the state without consuming it.
pub fn born_probabilities(qubit: &Qubit, basis: &Basis) -> (f64, f64) {
    let (a, b) = qubit.components_in(basis);
    (a.norm_sqr(), b.norm_sqr())
}

/// Standard quantum measurement: samples an outcome with Born probabilities
/// and collapses onto the observed basis state. The input state is consumed;
/// the returned qubit is the collapsed one, expressed in the measured basis.
///
/// Two standard measurements of the same state are rejected at compile time:
///
/// ```compile_fail
/// use qjudge_core::quantum::{make_qubit, measure_standard, Amplitude, Basis, MeasurementRng};
///
/// let q = make_qubit(Amplitude::new(0.6, 0.0), Amplitude::new(0.8, 0.0)).unwrap();
/// let mut rng = MeasurementRng::new(0);
/// let basis = Basis::computational();
/// let _ = measure_standard(q, &basis, &mut rng);
/// let _ = measure_standard(q, &basis, &mut rng); // error: use of moved value
/// ```
pub fn measure_standard(
    qubit: Qubit,
    basis: &Basis,
    rng: &mut MeasurementRng,
) -> (Outcome, Qubit) {
    let (p_first, p_second) = born_probabilities(&qubit, basis);
    let (index, probability) = if rng.sample_unit() < p_first {
        (BasisIndex::First, p_first)
    } else {
        (BasisIndex::Second, p_second)
    };
    let one = super::Amplitude::new(1.0, 0.0);
    let zero = super::Amplitude::new(0.0, 0.0);
    let collapsed = match index {
        BasisIndex::First => Qubit::from_components(one, zero, basis.clone()),
        BasisIndex::Second => Qubit::from_components(zero, one, basis.clone()),
    }
    .expect("basis states are normalized");
    (
        Outcome {
            basis: basis.clone(),
            index,
            probability,
        },
        collapsed,
    )
}
