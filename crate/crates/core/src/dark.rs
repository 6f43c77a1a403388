//! Invariant multipartite resource states.
//!
//! A state |Ψ⟩ of N qudits is *dark* when U^{⊗N}|Ψ⟩ = |Ψ⟩ for every
//! single-qudit unitary U. Such states exist exactly when N is a positive
//! multiple of the qudit dimension d, and the building blocks are the
//! two-qubit singlet, its products under a pairing of slots, and the
//! d-qudit totally antisymmetric state.
//!
//! Slot conventions are fixed here once and used by the protocol layer:
//! Alice always holds the leading slots of each factor, the remote parties
//! the trailing ones.

use itertools::Itertools;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::quantum::{tensor, Party, PureState, QuantumError, SubsystemLayout};
use crate::random::{haar_special_unitary, seeded_rng};

#[derive(Debug, Error, PartialEq)]
pub enum DarkStateError {
    #[error("superposition weights a={a}, b={b} have degenerate normalization")]
    DegenerateSuperposition { a: f64, b: f64 },
    #[error("matching must be a permutation of 0..{m}, got {got:?}")]
    InvalidMatching { m: usize, got: Vec<usize> },
    #[error("party count m must be at least 1")]
    ZeroParties,
    #[error("subsystem dimension must be at least 2, got {d}")]
    DimensionTooSmall { d: usize },
    #[error("matching enumeration supports 1 <= m <= 5, got {m}")]
    EnumerationOutOfRange { m: usize },
    #[error("invariance check needs equal subsystem dimensions, got {dims:?}")]
    MixedDimensions { dims: Vec<usize> },
    #[error(transparent)]
    Quantum(#[from] QuantumError),
}

/// Resource-state constructors.
///
/// Slot layouts (0-indexed, big-endian):
/// - `Singlet`: slot 0 Alice, slot 1 Bob.
/// - `FourQubitA` / `FourQubitB` / `SuperposedFourQubit`: slots (0, 1)
///   Alice, slot 2 Bob, slot 3 Charlie.
/// - `SingletMatchingProduct { m, matching }`: slots 0..m Alice, slot m+j
///   party j; Alice's slot i is paired with slot m + matching[i].
/// - `Antisymmetric { d }`: slots 0..d-1 Alice, slot d-1 Bob.
/// - `AntisymmetricProduct { d, m }`: factor j occupies slots j·d..(j+1)·d
///   with the last slot held by party j, the rest by Alice.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum DarkStateSpec {
    Singlet,
    FourQubitA,
    FourQubitB,
    SuperposedFourQubit { a: f64, b: f64 },
    SingletMatchingProduct { m: usize, matching: Vec<usize> },
    Antisymmetric { d: usize },
    AntisymmetricProduct { d: usize, m: usize },
}

impl DarkStateSpec {
    pub fn validate(&self) -> Result<(), DarkStateError> {
        match self {
            DarkStateSpec::Singlet | DarkStateSpec::FourQubitA | DarkStateSpec::FourQubitB => {
                Ok(())
            }
            DarkStateSpec::SuperposedFourQubit { a, b } => {
                if a * a + b * b + a * b <= 1e-12 {
                    Err(DarkStateError::DegenerateSuperposition { a: *a, b: *b })
                } else {
                    Ok(())
                }
            }
            DarkStateSpec::SingletMatchingProduct { m, matching } => {
                if *m == 0 {
                    return Err(DarkStateError::ZeroParties);
                }
                let mut seen = vec![false; *m];
                let valid = matching.len() == *m
                    && matching.iter().all(|&j| {
                        if j < *m && !seen[j] {
                            seen[j] = true;
                            true
                        } else {
                            false
                        }
                    });
                if valid {
                    Ok(())
                } else {
                    Err(DarkStateError::InvalidMatching { m: *m, got: matching.clone() })
                }
            }
            DarkStateSpec::Antisymmetric { d } => {
                if *d < 2 {
                    Err(DarkStateError::DimensionTooSmall { d: *d })
                } else {
                    Ok(())
                }
            }
            DarkStateSpec::AntisymmetricProduct { d, m } => {
                if *d < 2 {
                    Err(DarkStateError::DimensionTooSmall { d: *d })
                } else if *m == 0 {
                    Err(DarkStateError::ZeroParties)
                } else {
                    Ok(())
                }
            }
        }
    }

    /// Dimension of each subsystem.
    pub fn subsystem_dim(&self) -> usize {
        match self {
            DarkStateSpec::Singlet
            | DarkStateSpec::FourQubitA
            | DarkStateSpec::FourQubitB
            | DarkStateSpec::SuperposedFourQubit { .. }
            | DarkStateSpec::SingletMatchingProduct { .. } => 2,
            DarkStateSpec::Antisymmetric { d }
            | DarkStateSpec::AntisymmetricProduct { d, .. } => *d,
        }
    }

    /// Number of remote parties the layout addresses.
    pub fn remote_parties(&self) -> usize {
        match self {
            DarkStateSpec::Singlet | DarkStateSpec::Antisymmetric { .. } => 1,
            DarkStateSpec::FourQubitA
            | DarkStateSpec::FourQubitB
            | DarkStateSpec::SuperposedFourQubit { .. } => 2,
            DarkStateSpec::SingletMatchingProduct { m, .. } => *m,
            DarkStateSpec::AntisymmetricProduct { m, .. } => *m,
        }
    }

    pub fn subsystem_count(&self) -> usize {
        match self {
            DarkStateSpec::Singlet => 2,
            DarkStateSpec::FourQubitA
            | DarkStateSpec::FourQubitB
            | DarkStateSpec::SuperposedFourQubit { .. } => 4,
            DarkStateSpec::SingletMatchingProduct { m, .. } => 2 * m,
            DarkStateSpec::Antisymmetric { d } => *d,
            DarkStateSpec::AntisymmetricProduct { d, m } => d * m,
        }
    }

    /// Short human-readable name used in transcripts.
    pub fn describe(&self) -> String {
        match self {
            DarkStateSpec::Singlet => "singlet".to_string(),
            DarkStateSpec::FourQubitA => "four-qubit A".to_string(),
            DarkStateSpec::FourQubitB => "four-qubit B".to_string(),
            DarkStateSpec::SuperposedFourQubit { a, b } => {
                format!("superposed four-qubit (a={a}, b={b})")
            }
            DarkStateSpec::SingletMatchingProduct { m, matching } => {
                format!("product of {m} singlets, matching {matching:?}")
            }
            DarkStateSpec::Antisymmetric { d } => format!("antisymmetric d={d}"),
            DarkStateSpec::AntisymmetricProduct { d, m } => {
                format!("product of {m} antisymmetric d={d} factors")
            }
        }
    }
}

/// Dark states of N qudits of dimension d exist iff N is a positive
/// multiple of d.
pub fn existence_rule(n_particles: usize, d: usize) -> bool {
    n_particles > 0 && d >= 2 && n_particles.is_multiple_of(d)
}

/// Builds the resource state for `spec` with its fixed slot layout.
pub fn build(spec: &DarkStateSpec) -> Result<PureState, DarkStateError> {
    spec.validate()?;
    match spec {
        DarkStateSpec::Singlet => singlet_product(1, &[0]),
        DarkStateSpec::FourQubitA => singlet_product(2, &[0, 1]),
        DarkStateSpec::FourQubitB => singlet_product(2, &[1, 0]),
        DarkStateSpec::SuperposedFourQubit { a, b } => superposed_four_qubit(*a, *b),
        DarkStateSpec::SingletMatchingProduct { m, matching } => singlet_product(*m, matching),
        DarkStateSpec::Antisymmetric { d } => antisymmetric(*d),
        DarkStateSpec::AntisymmetricProduct { d, m } => {
            let factor = antisymmetric(*d)?;
            let product = tensor(&vec![factor; *m])?;
            let parties: Vec<Party> = (0..d * m)
                .map(|slot| {
                    if slot % d == d - 1 { Party::Remote(slot / d) } else { Party::Alice }
                })
                .collect();
            Ok(product.with_parties(parties)?)
        }
    }
}

/// Product of m singlets pairing Alice's slot i with slot m + matching[i].
fn singlet_product(m: usize, matching: &[usize]) -> Result<PureState, DarkStateError> {
    let parties: Vec<Party> = (0..m)
        .map(|_| Party::Alice)
        .chain((0..m).map(Party::Remote))
        .collect();
    let layout = SubsystemLayout::uniform(2, parties)?;
    let strides = layout.strides();
    let scale = 1.0 / (2.0_f64.powi(m as i32)).sqrt();
    let mut amps = vec![Complex64::new(0.0, 0.0); layout.total_dim()];
    for bits in 0..(1usize << m) {
        let mut index = 0;
        let mut sign = 1.0;
        for i in 0..m {
            let bit = (bits >> (m - 1 - i)) & 1;
            if bit == 1 {
                sign = -sign;
            }
            index += bit * strides[i];
            index += (1 - bit) * strides[m + matching[i]];
        }
        amps[index] = Complex64::new(sign * scale, 0.0);
    }
    Ok(PureState::new(layout, amps)?)
}

/// Normalized a·(pairing 0↔2, 1↔3) + b·(pairing 0↔1, 2↔3) superposition:
/// N[a|0011⟩ + a|1100⟩ − (a+b)|0110⟩ − (a+b)|1001⟩ + b|0101⟩ + b|1010⟩]
/// with N = 1/(2√(a² + b² + ab)).
fn superposed_four_qubit(a: f64, b: f64) -> Result<PureState, DarkStateError> {
    let layout = SubsystemLayout::uniform(
        2,
        vec![Party::Alice, Party::Alice, Party::Remote(0), Party::Remote(1)],
    )?;
    let n = 1.0 / (2.0 * (a * a + b * b + a * b).sqrt());
    let mut amps = vec![Complex64::new(0.0, 0.0); 16];
    amps[0b0011] = Complex64::new(a * n, 0.0);
    amps[0b1100] = Complex64::new(a * n, 0.0);
    amps[0b0110] = Complex64::new(-(a + b) * n, 0.0);
    amps[0b1001] = Complex64::new(-(a + b) * n, 0.0);
    amps[0b0101] = Complex64::new(b * n, 0.0);
    amps[0b1010] = Complex64::new(b * n, 0.0);
    Ok(PureState::new(layout, amps)?)
}

/// Totally antisymmetric state of d qudits: (1/√d!) Σ_π sgn(π)|π(0)…π(d−1)⟩.
fn antisymmetric(d: usize) -> Result<PureState, DarkStateError> {
    let parties: Vec<Party> =
        (0..d).map(|i| if i == d - 1 { Party::Remote(0) } else { Party::Alice }).collect();
    let layout = SubsystemLayout::uniform(d, parties)?;
    let strides = layout.strides();
    let mut factorial = 1.0;
    for k in 2..=d {
        factorial *= k as f64;
    }
    let scale = 1.0 / factorial.sqrt();
    let mut amps = vec![Complex64::new(0.0, 0.0); layout.total_dim()];
    for perm in (0..d).permutations(d) {
        let index: usize = perm.iter().zip(&strides).map(|(&v, &s)| v * s).sum();
        let sign = if permutation_parity(&perm) { -1.0 } else { 1.0 };
        amps[index] = Complex64::new(sign * scale, 0.0);
    }
    Ok(PureState::new(layout, amps)?)
}

/// True for odd permutations.
fn permutation_parity(perm: &[usize]) -> bool {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}

/// Checks invariance under `trials` Haar-random single-qudit unitaries
/// applied to every slot at once. The draws are rephased to determinant
/// one, where the invariance is exact; an arbitrary-phase unitary would
/// contribute its determinant as a global factor per singlet or
/// antisymmetric block. Deterministic for a given seed.
pub fn verify_dark(
    state: &PureState,
    trials: usize,
    tol: f64,
    seed: u64,
) -> Result<bool, DarkStateError> {
    let dims = state.layout().dims();
    let d = dims[0];
    if dims.iter().any(|&x| x != d) {
        return Err(DarkStateError::MixedDimensions { dims: dims.to_vec() });
    }
    let mut rng = seeded_rng(seed);
    for _ in 0..trials {
        let u = haar_special_unitary(d, &mut rng);
        let mut rotated = state.clone();
        for slot in 0..dims.len() {
            rotated = rotated.apply_unitary(&u, &[slot])?;
        }
        if rotated.distance(state)? >= tol {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All m! singlet products over the possible pairings, in lexicographic
/// matching order. Supports 1 <= m <= 5.
pub fn enumerate_singlet_matchings(m: usize) -> Result<Vec<PureState>, DarkStateError> {
    if m == 0 || m > 5 {
        return Err(DarkStateError::EnumerationOutOfRange { m });
    }
    (0..m)
        .permutations(m)
        .map(|matching| build(&DarkStateSpec::SingletMatchingProduct { m, matching }))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::EXACT_TOL;
    use approx::assert_relative_eq;

    fn amp(state: &PureState, digits: &[usize]) -> f64 {
        let a = state.amplitude(digits);
        assert_relative_eq!(a.im, 0.0, epsilon = EXACT_TOL);
        a.re
    }

    #[test]
    fn singlet_amplitudes() {
        let state = build(&DarkStateSpec::Singlet).unwrap();
        let s = 1.0 / 2.0_f64.sqrt();
        assert_relative_eq!(amp(&state, &[0, 1]), s, epsilon = EXACT_TOL);
        assert_relative_eq!(amp(&state, &[1, 0]), -s, epsilon = EXACT_TOL);
        assert_eq!(state.layout().parties(), &[Party::Alice, Party::Remote(0)]);
    }

    #[test]
    fn four_qubit_a_amplitudes() {
        let state = build(&DarkStateSpec::FourQubitA).unwrap();
        assert_relative_eq!(amp(&state, &[0, 0, 1, 1]), 0.5, epsilon = EXACT_TOL);
        assert_relative_eq!(amp(&state, &[1, 1, 0, 0]), 0.5, epsilon = EXACT_TOL);
        assert_relative_eq!(amp(&state, &[0, 1, 1, 0]), -0.5, epsilon = EXACT_TOL);
        assert_relative_eq!(amp(&state, &[1, 0, 0, 1]), -0.5, epsilon = EXACT_TOL);
        assert_relative_eq!(amp(&state, &[0, 1, 0, 1]), 0.0, epsilon = EXACT_TOL);
    }

    #[test]
    fn four_qubit_b_amplitudes() {
        let state = build(&DarkStateSpec::FourQubitB).unwrap();
        assert_relative_eq!(amp(&state, &[0, 0, 1, 1]), 0.5, epsilon = EXACT_TOL);
        assert_relative_eq!(amp(&state, &[1, 1, 0, 0]), 0.5, epsilon = EXACT_TOL);
        assert_relative_eq!(amp(&state, &[0, 1, 0, 1]), -0.5, epsilon = EXACT_TOL);
        assert_relative_eq!(amp(&state, &[1, 0, 1, 0]), -0.5, epsilon = EXACT_TOL);
        assert_relative_eq!(amp(&state, &[0, 1, 1, 0]), 0.0, epsilon = EXACT_TOL);
    }

    #[test]
    fn four_qubit_a_is_a_reordered_pair_of_singlets() {
        let single = build(&DarkStateSpec::Singlet).unwrap();
        let pair = tensor(&[single.clone(), single]).unwrap();
        // Concatenated order is (a1, b1, a2, b2); interleave to (a1, a2, b1, b2).
        let crossed = pair.reorder(&[0, 2, 1, 3]).unwrap();
        let built = build(&DarkStateSpec::FourQubitA).unwrap();
        assert!(crossed.distance(&built).unwrap() < EXACT_TOL);
        // Pairing (0,3), (1,2) instead gives the B variant.
        let pair = tensor(&[
            build(&DarkStateSpec::Singlet).unwrap(),
            build(&DarkStateSpec::Singlet).unwrap(),
        ])
        .unwrap();
        let nested = pair.reorder(&[0, 2, 3, 1]).unwrap();
        let built = build(&DarkStateSpec::FourQubitB).unwrap();
        assert!(nested.distance(&built).unwrap() < EXACT_TOL);
    }

    #[test]
    fn superposed_four_qubit_amplitudes_at_equal_weights() {
        let state = build(&DarkStateSpec::SuperposedFourQubit { a: 1.0, b: 1.0 }).unwrap();
        let n = 1.0 / (2.0 * 3.0_f64.sqrt());
        assert_relative_eq!(amp(&state, &[0, 0, 1, 1]), n, epsilon = EXACT_TOL);
        assert_relative_eq!(amp(&state, &[0, 1, 1, 0]), -2.0 * n, epsilon = EXACT_TOL);
        assert_relative_eq!(amp(&state, &[0, 1, 0, 1]), n, epsilon = EXACT_TOL);
        assert_relative_eq!(state.norm(), 1.0, epsilon = EXACT_TOL);
    }

    #[test]
    fn superposition_endpoints_reduce_to_the_pure_pairings() {
        let a_only = build(&DarkStateSpec::SuperposedFourQubit { a: 1.0, b: 0.0 }).unwrap();
        let four_a = build(&DarkStateSpec::FourQubitA).unwrap();
        assert!(a_only.distance(&four_a).unwrap() < EXACT_TOL);
        let b_only = build(&DarkStateSpec::SuperposedFourQubit { a: 0.0, b: 1.0 }).unwrap();
        assert_relative_eq!(amp(&b_only, &[0, 1, 0, 1]), 0.5, epsilon = EXACT_TOL);
        assert_relative_eq!(amp(&b_only, &[1, 0, 1, 0]), 0.5, epsilon = EXACT_TOL);
        assert_relative_eq!(amp(&b_only, &[0, 1, 1, 0]), -0.5, epsilon = EXACT_TOL);
        assert_relative_eq!(amp(&b_only, &[1, 0, 0, 1]), -0.5, epsilon = EXACT_TOL);
    }

    #[test]
    fn degenerate_superposition_is_rejected() {
        let err = build(&DarkStateSpec::SuperposedFourQubit { a: 0.0, b: 0.0 }).unwrap_err();
        assert!(matches!(err, DarkStateError::DegenerateSuperposition { .. }));
    }

    #[test]
    fn antisymmetric_qutrit_amplitudes() {
        let state = build(&DarkStateSpec::Antisymmetric { d: 3 }).unwrap();
        let s = 1.0 / 6.0_f64.sqrt();
        assert_relative_eq!(amp(&state, &[0, 1, 2]), s, epsilon = EXACT_TOL);
        assert_relative_eq!(amp(&state, &[1, 2, 0]), s, epsilon = EXACT_TOL);
        assert_relative_eq!(amp(&state, &[2, 0, 1]), s, epsilon = EXACT_TOL);
        assert_relative_eq!(amp(&state, &[0, 2, 1]), -s, epsilon = EXACT_TOL);
        assert_relative_eq!(amp(&state, &[1, 0, 2]), -s, epsilon = EXACT_TOL);
        assert_relative_eq!(amp(&state, &[2, 1, 0]), -s, epsilon = EXACT_TOL);
        assert_relative_eq!(amp(&state, &[0, 0, 1]), 0.0, epsilon = EXACT_TOL);
    }

    #[test]
    fn swapping_two_slots_negates_the_antisymmetric_state() {
        for d in 2..=4 {
            let state = build(&DarkStateSpec::Antisymmetric { d }).unwrap();
            let mut order: Vec<usize> = (0..d).collect();
            order.swap(0, 1);
            let swapped = state.reorder(&order).unwrap();
            for (x, y) in swapped.amplitudes().iter().zip(state.amplitudes().iter()) {
                assert_eq!(*x, -*y);
            }
        }
    }

    #[test]
    fn antisymmetric_product_layout() {
        let state = build(&DarkStateSpec::AntisymmetricProduct { d: 3, m: 2 }).unwrap();
        assert_eq!(state.layout().len(), 6);
        assert_eq!(
            state.layout().parties(),
            &[
                Party::Alice,
                Party::Alice,
                Party::Remote(0),
                Party::Alice,
                Party::Alice,
                Party::Remote(1),
            ]
        );
        assert_eq!(state.layout().slots_of(Party::Alice), vec![0, 1, 3, 4]);
    }

    #[test]
    fn built_states_pass_the_invariance_check() {
        let specs = [
            DarkStateSpec::Singlet,
            DarkStateSpec::FourQubitA,
            DarkStateSpec::FourQubitB,
            DarkStateSpec::SingletMatchingProduct { m: 3, matching: vec![2, 0, 1] },
            DarkStateSpec::Antisymmetric { d: 3 },
            DarkStateSpec::Antisymmetric { d: 4 },
            DarkStateSpec::AntisymmetricProduct { d: 3, m: 2 },
        ];
        for spec in &specs {
            let state = build(spec).unwrap();
            assert!(verify_dark(&state, 20, 1e-9, 41).unwrap(), "{}", spec.describe());
        }
    }

    #[test]
    fn superposition_closure_over_a_weight_grid() {
        for ia in -2..=2 {
            for ib in -2..=2 {
                if ia == 0 && ib == 0 {
                    continue;
                }
                let (a, b) = (ia as f64, ib as f64);
                let state = build(&DarkStateSpec::SuperposedFourQubit { a, b }).unwrap();
                assert!(
                    verify_dark(&state, 50, 1e-9, 17).unwrap(),
                    "superposition a={a}, b={b} is not invariant"
                );
            }
        }
    }

    #[test]
    fn product_basis_states_are_not_dark() {
        let layout = SubsystemLayout::uniform(2, vec![Party::Alice, Party::Remote(0)]).unwrap();
        let zeros = PureState::basis_state(layout, &[0, 0]).unwrap();
        assert!(!verify_dark(&zeros, 20, 1e-9, 23).unwrap());
    }

    #[test]
    fn invariance_check_rejects_mixed_dimensions() {
        let layout = SubsystemLayout::new(vec![2, 3], vec![Party::Alice, Party::Remote(0)])
            .unwrap();
        let state = PureState::basis_state(layout, &[0, 0]).unwrap();
        assert!(matches!(
            verify_dark(&state, 5, 1e-9, 1).unwrap_err(),
            DarkStateError::MixedDimensions { .. }
        ));
    }

    #[test]
    fn existence_rule_table() {
        assert!(existence_rule(2, 2));
        assert!(!existence_rule(3, 2));
        assert!(existence_rule(4, 2));
        assert!(existence_rule(3, 3));
        assert!(!existence_rule(5, 3));
        assert!(existence_rule(6, 3));
        assert!(!existence_rule(0, 2));
        assert!(!existence_rule(2, 1));
    }

    #[test]
    fn matching_enumeration_counts_and_distinctness() {
        assert_eq!(enumerate_singlet_matchings(1).unwrap().len(), 1);
        assert_eq!(enumerate_singlet_matchings(2).unwrap().len(), 2);
        let states = enumerate_singlet_matchings(3).unwrap();
        assert_eq!(states.len(), 6);
        for i in 0..states.len() {
            for j in i + 1..states.len() {
                let overlap = states[i].fidelity(&states[j]).unwrap();
                assert!(overlap < 1.0 - 1e-6, "matchings {i} and {j} coincide");
            }
        }
    }

    #[test]
    fn two_qubit_matchings_are_the_four_qubit_pair() {
        let states = enumerate_singlet_matchings(2).unwrap();
        let four_a = build(&DarkStateSpec::FourQubitA).unwrap();
        let four_b = build(&DarkStateSpec::FourQubitB).unwrap();
        assert!(states[0].distance(&four_a).unwrap() < EXACT_TOL);
        assert!(states[1].distance(&four_b).unwrap() < EXACT_TOL);
    }

    #[test]
    fn matching_enumeration_bounds() {
        assert!(matches!(
            enumerate_singlet_matchings(0).unwrap_err(),
            DarkStateError::EnumerationOutOfRange { m: 0 }
        ));
        assert!(matches!(
            enumerate_singlet_matchings(6).unwrap_err(),
            DarkStateError::EnumerationOutOfRange { m: 6 }
        ));
    }

    #[test]
    fn spec_validation_errors() {
        assert!(matches!(
            DarkStateSpec::SingletMatchingProduct { m: 2, matching: vec![0, 0] }.validate(),
            Err(DarkStateError::InvalidMatching { .. })
        ));
        assert!(matches!(
            DarkStateSpec::SingletMatchingProduct { m: 0, matching: vec![] }.validate(),
            Err(DarkStateError::ZeroParties)
        ));
        assert!(matches!(
            DarkStateSpec::Antisymmetric { d: 1 }.validate(),
            Err(DarkStateError::DimensionTooSmall { d: 1 })
        ));
        assert!(matches!(
            DarkStateSpec::AntisymmetricProduct { d: 3, m: 0 }.validate(),
            Err(DarkStateError::ZeroParties)
        ));
    }
}
