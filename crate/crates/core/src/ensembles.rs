//! Target-state families and their rotated measurement bases.
//!
//! Each family fixes some parameters of the general qudit ket
//!
//! ```text
//! |ψ₀⟩ = Σ_j β_j e^{iα_j} |j⟩,   β_j = cos γ_{j+1} · Π_{i≤j} sin γ_i
//! ```
//!
//! and leaves the rest free. The family also fixes an orthonormal *rotated
//! basis* containing |ψ₀⟩ as element 0, and for each basis index a
//! parameter-independent correction unitary mapping that element back to
//! |ψ₀⟩ (up to global phase), or declares the index uncorrectable. Fully
//! correctable families drive exact protocols; the rest are probabilistic.

use nalgebra::DVector;
use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, TAU};
use thiserror::Error;

use crate::quantum::{Party, PureState, QuantumError, SubsystemLayout, UnitaryOp};

/// Slack for pinned-parameter comparisons.
const PIN_TOL: f64 = 1e-12;

#[derive(Debug, Error, PartialEq)]
pub enum EnsembleError {
    #[error("family dimension must be at least 2, got {d}")]
    BadDimension { d: usize },
    #[error("family {family} expects {expected} parameters")]
    WrongParamsKind { family: &'static str, expected: &'static str },
    #[error("{name} must have {expected} entries, got {got}")]
    WrongParamCount { name: &'static str, expected: usize, got: usize },
    #[error("{name} = {value} lies outside {low}..{high}")]
    ParamOutOfRange { name: String, value: f64, low: f64, high: f64 },
    #[error("family {family} pins {name} = {expected}, got {got}")]
    PinnedParam { family: &'static str, name: &'static str, expected: f64, got: f64 },
    #[error("parameter record is for dimension {got}, family {family} has dimension {expected}")]
    DimensionMismatch { family: &'static str, expected: usize, got: usize },
    #[error("basis index {index} of family {family} has no parameter-independent correction")]
    Uncorrectable { family: &'static str, index: usize },
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error(transparent)]
    Quantum(#[from] QuantumError),
}

/// Qubit ket cos(θ/2)|0⟩ + sin(θ/2)e^{iφ}|1⟩.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QubitParams {
    pub theta: f64,
    pub phi: f64,
}

/// Qutrit ket cosγ₁|0⟩ + sinγ₁cosγ₂e^{iδ}|1⟩ + sinγ₁sinγ₂e^{iφ}|2⟩.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QutritParams {
    pub gamma1: f64,
    pub gamma2: f64,
    pub delta: f64,
    pub phi: f64,
}

/// General qudit ket: d−1 polar angles γ and d−1 phases α (α₀ = 0).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuditParams {
    pub d: usize,
    pub gammas: Vec<f64>,
    pub alphas: Vec<f64>,
}

/// Phases α₁..α_{d−1} of an equal-magnitude ket (1/√d)Σ_j e^{iα_j}|j⟩.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PhaseParams {
    pub alphas: Vec<f64>,
}

/// Parameter record for one ensemble draw.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Params {
    Qubit(QubitParams),
    Qutrit(QutritParams),
    Qudit(QuditParams),
    Phases(PhaseParams),
}

/// The supported target-state families.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum EnsembleSpec {
    /// Real qubit kets on the polar great circle: φ pinned to 0.
    QubitPolarReal,
    /// Equatorial qubit kets: θ pinned to π/2, φ free.
    QubitEquatorial,
    /// Qubit kets with φ pinned to π/2.
    QubitPolarImag,
    /// Qubit kets with φ pinned to an arbitrary fixed value.
    QubitFixedPhase { phi0: f64 },
    /// Fully general qutrit kets; only basis index 0 is correctable.
    QutritGeneral,
    /// Equal-magnitude qutrit kets with free phases; fully correctable.
    QutritEquatorial,
    /// Qutrit kets with γ₁ pinned to π/4; indices 0 and 1 correctable.
    QutritRestricted,
    /// Equal-magnitude qudit kets with free phases; fully correctable.
    QuditFourier { d: usize },
    /// Fully general qudit kets; only basis index 0 is correctable.
    QuditGeneral { d: usize },
    /// d = 4 kets with γ₁ pinned to π/4; indices 0 and 1 correctable.
    QuditRestricted4,
}

impl EnsembleSpec {
    pub fn validate(&self) -> Result<(), EnsembleError> {
        match self {
            EnsembleSpec::QubitFixedPhase { phi0 } => {
                check_range(self.family_name(), "phi0", *phi0, 0.0, TAU, false)
            }
            EnsembleSpec::QuditFourier { d } | EnsembleSpec::QuditGeneral { d } => {
                if *d < 2 {
                    Err(EnsembleError::BadDimension { d: *d })
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }

    /// Dimension of the prepared subsystem.
    pub fn dimension(&self) -> usize {
        match self {
            EnsembleSpec::QubitPolarReal
            | EnsembleSpec::QubitEquatorial
            | EnsembleSpec::QubitPolarImag
            | EnsembleSpec::QubitFixedPhase { .. } => 2,
            EnsembleSpec::QutritGeneral
            | EnsembleSpec::QutritEquatorial
            | EnsembleSpec::QutritRestricted => 3,
            EnsembleSpec::QuditFourier { d } | EnsembleSpec::QuditGeneral { d } => *d,
            EnsembleSpec::QuditRestricted4 => 4,
        }
    }

    pub fn family_name(&self) -> &'static str {
        match self {
            EnsembleSpec::QubitPolarReal => "qubit-polar-real",
            EnsembleSpec::QubitEquatorial => "qubit-equatorial",
            EnsembleSpec::QubitPolarImag => "qubit-polar-imag",
            EnsembleSpec::QubitFixedPhase { .. } => "qubit-fixed-phase",
            EnsembleSpec::QutritGeneral => "qutrit-general",
            EnsembleSpec::QutritEquatorial => "qutrit-equatorial",
            EnsembleSpec::QutritRestricted => "qutrit-restricted",
            EnsembleSpec::QuditFourier { .. } => "qudit-fourier",
            EnsembleSpec::QuditGeneral { .. } => "qudit-general",
            EnsembleSpec::QuditRestricted4 => "qudit-restricted4",
        }
    }

    /// Basis indices with a parameter-independent correction.
    pub fn correctable_indices(&self) -> Vec<usize> {
        match self {
            EnsembleSpec::QubitPolarReal
            | EnsembleSpec::QubitEquatorial
            | EnsembleSpec::QubitPolarImag
            | EnsembleSpec::QubitFixedPhase { .. } => vec![0, 1],
            EnsembleSpec::QutritEquatorial => vec![0, 1, 2],
            EnsembleSpec::QuditFourier { d } => (0..*d).collect(),
            EnsembleSpec::QutritRestricted | EnsembleSpec::QuditRestricted4 => vec![0, 1],
            EnsembleSpec::QutritGeneral | EnsembleSpec::QuditGeneral { .. } => vec![0],
        }
    }

    /// True when every rotated-basis index can be corrected, which is what
    /// exact protocols require.
    pub fn is_fully_correctable(&self) -> bool {
        self.correctable_indices().len() == self.dimension()
    }

    /// Validates that `params` matches this family: right record kind,
    /// in-range free parameters, pinned parameters exactly at their pins.
    pub fn validate_params(&self, params: &Params) -> Result<(), EnsembleError> {
        self.validate()?;
        let family = self.family_name();
        match (self, params) {
            (EnsembleSpec::QubitPolarReal, Params::Qubit(p)) => {
                check_range(family, "theta", p.theta, 0.0, PI, true)?;
                check_pin(family, "phi", 0.0, p.phi)
            }
            (EnsembleSpec::QubitEquatorial, Params::Qubit(p)) => {
                check_range(family, "phi", p.phi, 0.0, TAU, false)?;
                check_pin(family, "theta", FRAC_PI_2, p.theta)
            }
            (EnsembleSpec::QubitPolarImag, Params::Qubit(p)) => {
                check_range(family, "theta", p.theta, 0.0, PI, true)?;
                check_pin(family, "phi", FRAC_PI_2, p.phi)
            }
            (EnsembleSpec::QubitFixedPhase { phi0 }, Params::Qubit(p)) => {
                check_range(family, "theta", p.theta, 0.0, PI, true)?;
                check_pin(family, "phi", *phi0, p.phi)
            }
            (EnsembleSpec::QutritGeneral, Params::Qutrit(p)) => check_qutrit_ranges(family, p),
            (EnsembleSpec::QutritRestricted, Params::Qutrit(p)) => {
                check_qutrit_ranges(family, p)?;
                check_pin(family, "gamma1", FRAC_PI_4, p.gamma1)
            }
            (EnsembleSpec::QutritEquatorial, Params::Phases(p)) => {
                check_phases(family, p, 3)
            }
            (EnsembleSpec::QuditFourier { d }, Params::Phases(p)) => {
                check_phases(family, p, *d)
            }
            (EnsembleSpec::QuditGeneral { d }, Params::Qudit(p)) => {
                check_qudit_ranges(family, p, *d)
            }
            (EnsembleSpec::QuditRestricted4, Params::Qudit(p)) => {
                check_qudit_ranges(family, p, 4)?;
                check_pin(family, "gammas[0]", FRAC_PI_4, p.gammas[0])
            }
            _ => Err(EnsembleError::WrongParamsKind {
                family,
                expected: match self {
                    EnsembleSpec::QubitPolarReal
                    | EnsembleSpec::QubitEquatorial
                    | EnsembleSpec::QubitPolarImag
                    | EnsembleSpec::QubitFixedPhase { .. } => "qubit angles (theta, phi)",
                    EnsembleSpec::QutritGeneral | EnsembleSpec::QutritRestricted => {
                        "qutrit angles (gamma1, gamma2, delta, phi)"
                    }
                    EnsembleSpec::QutritEquatorial | EnsembleSpec::QuditFourier { .. } => {
                        "phases (alphas)"
                    }
                    EnsembleSpec::QuditGeneral { .. } | EnsembleSpec::QuditRestricted4 => {
                        "qudit angles (gammas, alphas)"
                    }
                },
            }),
        }
    }
}

fn check_range(
    _family: &'static str,
    name: &str,
    value: f64,
    low: f64,
    high: f64,
    inclusive: bool,
) -> Result<(), EnsembleError> {
    let ok = value >= low && if inclusive { value <= high } else { value < high };
    if ok && value.is_finite() {
        Ok(())
    } else {
        Err(EnsembleError::ParamOutOfRange { name: name.to_string(), value, low, high })
    }
}

fn check_pin(
    family: &'static str,
    name: &'static str,
    expected: f64,
    got: f64,
) -> Result<(), EnsembleError> {
    if (got - expected).abs() <= PIN_TOL {
        Ok(())
    } else {
        Err(EnsembleError::PinnedParam { family, name, expected, got })
    }
}

fn check_qutrit_ranges(family: &'static str, p: &QutritParams) -> Result<(), EnsembleError> {
    check_range(family, "gamma1", p.gamma1, 0.0, FRAC_PI_2, true)?;
    check_range(family, "gamma2", p.gamma2, 0.0, FRAC_PI_2, true)?;
    check_range(family, "delta", p.delta, 0.0, TAU, false)?;
    check_range(family, "phi", p.phi, 0.0, TAU, false)
}

fn check_phases(family: &'static str, p: &PhaseParams, d: usize) -> Result<(), EnsembleError> {
    if p.alphas.len() != d - 1 {
        return Err(EnsembleError::WrongParamCount {
            name: "alphas",
            expected: d - 1,
            got: p.alphas.len(),
        });
    }
    for (i, &a) in p.alphas.iter().enumerate() {
        check_range(family, &format!("alphas[{i}]"), a, 0.0, TAU, false)?;
    }
    Ok(())
}

fn check_qudit_ranges(family: &'static str, p: &QuditParams, d: usize) -> Result<(), EnsembleError> {
    if p.d != d {
        return Err(EnsembleError::DimensionMismatch { family, expected: d, got: p.d });
    }
    if p.gammas.len() != d - 1 {
        return Err(EnsembleError::WrongParamCount {
            name: "gammas",
            expected: d - 1,
            got: p.gammas.len(),
        });
    }
    if p.alphas.len() != d - 1 {
        return Err(EnsembleError::WrongParamCount {
            name: "alphas",
            expected: d - 1,
            got: p.alphas.len(),
        });
    }
    for (i, &g) in p.gammas.iter().enumerate() {
        check_range(family, &format!("gammas[{i}]"), g, 0.0, FRAC_PI_2, true)?;
    }
    for (i, &a) in p.alphas.iter().enumerate() {
        check_range(family, &format!("alphas[{i}]"), a, 0.0, TAU, false)?;
    }
    Ok(())
}

/// Magnitudes β_j of the hyperspherical ket for polar angles γ₁..γ_{d−1}:
/// β_j = cos γ_{j+1} Π_{i≤j} sin γ_i, with the last cosine dropped.
/// They telescope to a unit vector.
fn spherical_magnitudes(gammas: &[f64]) -> Vec<f64> {
    let d = gammas.len() + 1;
    let mut out = Vec::with_capacity(d);
    let mut sin_prod = 1.0;
    for &g in gammas {
        out.push(sin_prod * g.cos());
        sin_prod *= g.sin();
    }
    out.push(sin_prod);
    debug_assert_eq!(out.len(), d);
    out
}

/// Orthonormal basis attached to the hyperspherical parametrization.
/// Element 0 is the target ket; element k (k ≥ 1) is
/// sin γ_k e^{iα_{k−1}}|k−1⟩ − cos γ_k Σ_{j≥k} t_j e^{iα_j}|j⟩
/// where t is the hyperspherical tail over γ_{k+1}..γ_{d−1}.
fn canonical_basis(gammas: &[f64], alphas: &[f64]) -> Vec<DVector<Complex64>> {
    let d = gammas.len() + 1;
    let alpha = |j: usize| if j == 0 { 0.0 } else { alphas[j - 1] };
    let mags = spherical_magnitudes(gammas);
    let mut basis = Vec::with_capacity(d);
    basis.push(DVector::from_fn(d, |j, _| Complex64::from_polar(mags[j], alpha(j))));
    for k in 1..d {
        let tail = spherical_magnitudes(&gammas[k..]);
        let mut v = DVector::<Complex64>::zeros(d);
        v[k - 1] = Complex64::from_polar(gammas[k - 1].sin(), alpha(k - 1));
        for j in k..d {
            v[j] = -Complex64::from_polar(gammas[k - 1].cos() * tail[j - k], alpha(j));
        }
        basis.push(v);
    }
    basis
}

/// Qubit basis: |ψ⟩ = cos(θ/2)|0⟩ + sin(θ/2)e^{iφ}|1⟩ and its companion
/// |ψ̄⟩ = −sin(θ/2)|0⟩ + cos(θ/2)e^{iφ}|1⟩.
fn qubit_basis(theta: f64, phi: f64) -> Vec<DVector<Complex64>> {
    let half = theta / 2.0;
    let psi = DVector::from_vec(vec![
        Complex64::new(half.cos(), 0.0),
        Complex64::from_polar(half.sin(), phi),
    ]);
    let companion = DVector::from_vec(vec![
        Complex64::new(-half.sin(), 0.0),
        Complex64::from_polar(half.cos(), phi),
    ]);
    vec![psi, companion]
}

/// Fourier basis: |ψ_k⟩ = (1/√d) Σ_j Γ^{jk} e^{iα_j} |j⟩ with Γ = e^{2πi/d}.
fn fourier_basis(d: usize, alphas: &[f64]) -> Vec<DVector<Complex64>> {
    let scale = 1.0 / (d as f64).sqrt();
    let alpha = |j: usize| if j == 0 { 0.0 } else { alphas[j - 1] };
    (0..d)
        .map(|k| {
            DVector::from_fn(d, |j, _| {
                Complex64::from_polar(scale, TAU * (j * k) as f64 / d as f64 + alpha(j))
            })
        })
        .collect()
}

fn basis_vectors(
    spec: &EnsembleSpec,
    params: &Params,
) -> Result<Vec<DVector<Complex64>>, EnsembleError> {
    spec.validate_params(params)?;
    Ok(match (spec, params) {
        (
            EnsembleSpec::QubitPolarReal
            | EnsembleSpec::QubitEquatorial
            | EnsembleSpec::QubitPolarImag
            | EnsembleSpec::QubitFixedPhase { .. },
            Params::Qubit(p),
        ) => qubit_basis(p.theta, p.phi),
        (EnsembleSpec::QutritGeneral | EnsembleSpec::QutritRestricted, Params::Qutrit(p)) => {
            canonical_basis(&[p.gamma1, p.gamma2], &[p.delta, p.phi])
        }
        (EnsembleSpec::QutritEquatorial, Params::Phases(p)) => fourier_basis(3, &p.alphas),
        (EnsembleSpec::QuditFourier { d }, Params::Phases(p)) => fourier_basis(*d, &p.alphas),
        (
            EnsembleSpec::QuditGeneral { .. } | EnsembleSpec::QuditRestricted4,
            Params::Qudit(p),
        ) => canonical_basis(&p.gammas, &p.alphas),
        _ => unreachable!("validate_params admits only matching kinds"),
    })
}

fn single_slot_state(v: DVector<Complex64>) -> Result<PureState, EnsembleError> {
    let layout = SubsystemLayout::uniform(v.len(), vec![Party::Remote(0)])?;
    Ok(PureState::new(layout, v.iter().copied().collect())?)
}

/// The ket the protocol prepares remotely: element 0 of the rotated basis.
pub fn target_state(spec: &EnsembleSpec, params: &Params) -> Result<PureState, EnsembleError> {
    let mut vectors = basis_vectors(spec, params)?;
    single_slot_state(vectors.swap_remove(0))
}

/// The family's orthonormal rotated basis; element 0 is the target.
pub fn rotated_basis(
    spec: &EnsembleSpec,
    params: &Params,
) -> Result<Vec<PureState>, EnsembleError> {
    basis_vectors(spec, params)?.into_iter().map(single_slot_state).collect()
}

/// Unitary whose k-th column is rotated-basis element k, so U|k⟩ = |ψ_k⟩.
pub fn preparation_unitary(
    spec: &EnsembleSpec,
    params: &Params,
) -> Result<UnitaryOp, EnsembleError> {
    let vectors = basis_vectors(spec, params)?;
    Ok(UnitaryOp::from_columns(&vectors)?)
}

/// Parameter-independent unitary mapping rotated-basis element `index` to
/// the target (up to global phase). Index 0 is always the identity; indices
/// without such a unitary yield `EnsembleError::Uncorrectable`.
pub fn correction_unitary(spec: &EnsembleSpec, index: usize) -> Result<UnitaryOp, EnsembleError> {
    spec.validate()?;
    let d = spec.dimension();
    if index >= d {
        return Err(EnsembleError::IndexOutOfRange { index, dim: d });
    }
    if index == 0 {
        return Ok(UnitaryOp::identity(d));
    }
    let one = Complex64::new(1.0, 0.0);
    let minus = Complex64::new(-1.0, 0.0);
    match spec {
        // [[0, 1], [-1, 0]]: maps the companion ket to the target exactly.
        EnsembleSpec::QubitPolarReal => Ok(antidiagonal(one, minus)),
        // diag(1, -1): maps the companion ket to minus the target.
        EnsembleSpec::QubitEquatorial => Ok(UnitaryOp::diagonal(&[one, minus]).unwrap()),
        // [[0, 1], [1, 0]]: target reached up to phase i.
        EnsembleSpec::QubitPolarImag => Ok(antidiagonal(one, one)),
        // [[0, e^{-iφ₀}], [-e^{iφ₀}, 0]]: exact for the pinned phase.
        EnsembleSpec::QubitFixedPhase { phi0 } => Ok(antidiagonal(
            Complex64::from_polar(1.0, -phi0),
            -Complex64::from_polar(1.0, *phi0),
        )),
        // diag(Γ^{-index·j}): exact for every Fourier index.
        EnsembleSpec::QutritEquatorial | EnsembleSpec::QuditFourier { .. } => {
            let phases: Vec<Complex64> = (0..d)
                .map(|j| Complex64::from_polar(1.0, -TAU * (index * j) as f64 / d as f64))
                .collect();
            Ok(UnitaryOp::diagonal(&phases).unwrap())
        }
        // diag(1, -1, …, -1): exact for index 1 when γ₁ is pinned to π/4.
        EnsembleSpec::QutritRestricted | EnsembleSpec::QuditRestricted4 => {
            if index == 1 {
                let mut phases = vec![minus; d];
                phases[0] = one;
                Ok(UnitaryOp::diagonal(&phases).unwrap())
            } else {
                Err(EnsembleError::Uncorrectable { family: spec.family_name(), index })
            }
        }
        EnsembleSpec::QutritGeneral | EnsembleSpec::QuditGeneral { .. } => {
            Err(EnsembleError::Uncorrectable { family: spec.family_name(), index })
        }
    }
}

fn antidiagonal(upper: Complex64, lower: Complex64) -> UnitaryOp {
    let zero = Complex64::new(0.0, 0.0);
    UnitaryOp::new(nalgebra::DMatrix::from_row_slice(2, 2, &[zero, upper, lower, zero])).unwrap()
}

/// Draws a uniformly random parameter record valid for the family.
pub fn sample_params<R: Rng>(spec: &EnsembleSpec, rng: &mut R) -> Params {
    match spec {
        EnsembleSpec::QubitPolarReal => {
            Params::Qubit(QubitParams { theta: rng.gen_range(0.0..PI), phi: 0.0 })
        }
        EnsembleSpec::QubitEquatorial => {
            Params::Qubit(QubitParams { theta: FRAC_PI_2, phi: rng.gen_range(0.0..TAU) })
        }
        EnsembleSpec::QubitPolarImag => {
            Params::Qubit(QubitParams { theta: rng.gen_range(0.0..PI), phi: FRAC_PI_2 })
        }
        EnsembleSpec::QubitFixedPhase { phi0 } => {
            Params::Qubit(QubitParams { theta: rng.gen_range(0.0..PI), phi: *phi0 })
        }
        EnsembleSpec::QutritGeneral => Params::Qutrit(QutritParams {
            gamma1: rng.gen_range(0.0..FRAC_PI_2),
            gamma2: rng.gen_range(0.0..FRAC_PI_2),
            delta: rng.gen_range(0.0..TAU),
            phi: rng.gen_range(0.0..TAU),
        }),
        EnsembleSpec::QutritRestricted => Params::Qutrit(QutritParams {
            gamma1: FRAC_PI_4,
            gamma2: rng.gen_range(0.0..FRAC_PI_2),
            delta: rng.gen_range(0.0..TAU),
            phi: rng.gen_range(0.0..TAU),
        }),
        EnsembleSpec::QutritEquatorial => Params::Phases(PhaseParams {
            alphas: (0..2).map(|_| rng.gen_range(0.0..TAU)).collect(),
        }),
        EnsembleSpec::QuditFourier { d } => Params::Phases(PhaseParams {
            alphas: (0..d - 1).map(|_| rng.gen_range(0.0..TAU)).collect(),
        }),
        EnsembleSpec::QuditGeneral { d } => Params::Qudit(QuditParams {
            d: *d,
            gammas: (0..d - 1).map(|_| rng.gen_range(0.0..FRAC_PI_2)).collect(),
            alphas: (0..d - 1).map(|_| rng.gen_range(0.0..TAU)).collect(),
        }),
        EnsembleSpec::QuditRestricted4 => {
            let mut gammas = vec![FRAC_PI_4];
            gammas.extend((0..2).map(|_| rng.gen_range(0.0..FRAC_PI_2)));
            Params::Qudit(QuditParams {
                d: 4,
                gammas,
                alphas: (0..3).map(|_| rng.gen_range(0.0..TAU)).collect(),
            })
        }
    }
}

/// Every family, each with a representative dimension, for sweep tests.
pub fn all_families() -> Vec<EnsembleSpec> {
    vec![
        EnsembleSpec::QubitPolarReal,
        EnsembleSpec::QubitEquatorial,
        EnsembleSpec::QubitPolarImag,
        EnsembleSpec::QubitFixedPhase { phi0: 0.7 },
        EnsembleSpec::QutritGeneral,
        EnsembleSpec::QutritEquatorial,
        EnsembleSpec::QutritRestricted,
        EnsembleSpec::QuditFourier { d: 4 },
        EnsembleSpec::QuditGeneral { d: 4 },
        EnsembleSpec::QuditRestricted4,
    ]
}
