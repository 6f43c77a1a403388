//! Dense state-vector simulation of small multipartite systems.
//!
//! Subsystems are indexed big-endian: subsystem 0 is the most significant
//! digit of the computational-basis index, so for dims `[2, 2]` the basis
//! vector `|10⟩` sits at index 2. Every subsystem carries a party label,
//! which the protocol layer uses to decide who holds which slot.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// Tolerance for exact identities (norms, frozen amplitudes).
pub const EXACT_TOL: f64 = 1e-12;
/// Tolerance for invariance, unitarity and fidelity-match checks.
pub const INVARIANT_TOL: f64 = 1e-10;
/// Measurement branches below this probability carry no post-state.
pub const ZERO_PROB_TOL: f64 = 1e-14;

#[derive(Debug, Error, PartialEq)]
pub enum QuantumError {
    #[error("tensor product needs at least one factor")]
    EmptyTensorList,
    #[error("layout needs one party per subsystem: {dims} dims vs {parties} parties")]
    PartyCountMismatch { dims: usize, parties: usize },
    #[error("subsystem dimension must be at least 2, got {dim}")]
    SubsystemTooSmall { dim: usize },
    #[error("layout must contain at least one subsystem")]
    EmptyLayout,
    #[error("amplitude vector has length {got}, layout expects {expected}")]
    AmplitudeLengthMismatch { expected: usize, got: usize },
    #[error("state norm is {norm}, expected 1 within {EXACT_TOL:e}")]
    NotNormalized { norm: f64 },
    #[error("cannot normalize a vector with norm below {ZERO_PROB_TOL:e}")]
    ZeroVector,
    #[error("subsystem index {index} out of range for {count} subsystems")]
    SubsystemOutOfRange { index: usize, count: usize },
    #[error("subsystem index {index} listed twice")]
    DuplicateSubsystem { index: usize },
    #[error("selection of subsystems must not be empty")]
    EmptySelection,
    #[error("digit {digit} out of range for subsystem of dimension {dim}")]
    DigitOutOfRange { digit: usize, dim: usize },
    #[error("operator dimension {got} does not match target dimension {expected}")]
    OperatorDimensionMismatch { expected: usize, got: usize },
    #[error("measuring every subsystem leaves no post-measurement state")]
    MeasuredAllSubsystems,
    #[error("states have different total dimensions: {left} vs {right}")]
    TotalDimensionMismatch { left: usize, right: usize },
    #[error("partition sides must be disjoint and cover all subsystems")]
    InvalidPartition,
    #[error("subsystem order must be a permutation of 0..{count}")]
    InvalidOrder { count: usize },
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix deviates from unitarity by {deviation}, tolerance {INVARIANT_TOL:e}")]
    NotUnitary { deviation: f64 },
    #[error("matrix deviates from Hermiticity by {deviation}, tolerance {INVARIANT_TOL:e}")]
    NotHermitian { deviation: f64 },
    #[error("density matrix has trace {trace}, expected 1 within {INVARIANT_TOL:e}")]
    TraceNotOne { trace: f64 },
    #[error("density matrix has eigenvalue {value} below -{INVARIANT_TOL:e}")]
    NegativeEigenvalue { value: f64 },
}

/// Who holds a subsystem. `Remote(0)` is Bob, `Remote(1)` Charlie, and so on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Party {
    Alice,
    Remote(usize),
}

impl fmt::Display for Party {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Party::Alice => write!(f, "Alice"),
            Party::Remote(0) => write!(f, "Bob"),
            Party::Remote(1) => write!(f, "Charlie"),
            Party::Remote(k) => write!(f, "P{}", k + 1),
        }
    }
}

/// Dimensions and party assignment of an ordered list of subsystems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsystemLayout {
    dims: Vec<usize>,
    parties: Vec<Party>,
}

impl SubsystemLayout {
    pub fn new(dims: Vec<usize>, parties: Vec<Party>) -> Result<Self, QuantumError> {
        if dims.is_empty() {
            return Err(QuantumError::EmptyLayout);
        }
        if dims.len() != parties.len() {
            return Err(QuantumError::PartyCountMismatch {
                dims: dims.len(),
                parties: parties.len(),
            });
        }
        if let Some(&dim) = dims.iter().find(|&&d| d < 2) {
            return Err(QuantumError::SubsystemTooSmall { dim });
        }
        Ok(SubsystemLayout { dims, parties })
    }

    /// Layout with every subsystem of the same dimension.
    pub fn uniform(dim: usize, parties: Vec<Party>) -> Result<Self, QuantumError> {
        let dims = vec![dim; parties.len()];
        SubsystemLayout::new(dims, parties)
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn parties(&self) -> &[Party] {
        &self.parties
    }

    pub fn dim(&self, subsystem: usize) -> usize {
        self.dims[subsystem]
    }

    pub fn party(&self, subsystem: usize) -> Party {
        self.parties[subsystem]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().product()
    }

    /// Subsystems held by `party`, in index order.
    pub fn slots_of(&self, party: Party) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.parties[i] == party).collect()
    }

    /// Big-endian strides: `strides[i]` is the index step of subsystem `i`.
    pub fn strides(&self) -> Vec<usize> {
        let mut strides = vec![1; self.dims.len()];
        for i in (0..self.dims.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * self.dims[i + 1];
        }
        strides
    }

    /// Layout of `self` followed by `other`.
    pub fn concat(&self, other: &SubsystemLayout) -> SubsystemLayout {
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims);
        let mut parties = self.parties.clone();
        parties.extend_from_slice(&other.parties);
        SubsystemLayout { dims, parties }
    }

    fn check_selection(&self, selection: &[usize]) -> Result<(), QuantumError> {
        if selection.is_empty() {
            return Err(QuantumError::EmptySelection);
        }
        let mut seen = vec![false; self.len()];
        for &i in selection {
            if i >= self.len() {
                return Err(QuantumError::SubsystemOutOfRange { index: i, count: self.len() });
            }
            if seen[i] {
                return Err(QuantumError::DuplicateSubsystem { index: i });
            }
            seen[i] = true;
        }
        Ok(())
    }

    fn complement(&self, selection: &[usize]) -> Vec<usize> {
        (0..self.len()).filter(|i| !selection.contains(i)).collect()
    }
}

/// Index offsets of a subsystem selection, enumerated big-endian in the
/// order the selection lists them. Entry `j` is the flat-index contribution
/// of the selection holding joint value `j`.
fn selection_offsets(selection: &[usize], layout: &SubsystemLayout) -> Vec<usize> {
    let strides = layout.strides();
    let sel_dims: Vec<usize> = selection.iter().map(|&i| layout.dim(i)).collect();
    let count: usize = sel_dims.iter().product();
    let mut offsets = Vec::with_capacity(count);
    for j in 0..count {
        let mut rem = j;
        let mut offset = 0;
        for pos in (0..selection.len()).rev() {
            let digit = rem % sel_dims[pos];
            rem /= sel_dims[pos];
            offset += digit * strides[selection[pos]];
        }
        offsets.push(offset);
    }
    offsets
}

fn decode_digits(mut index: usize, dims: &[usize]) -> Vec<usize> {
    let mut digits = vec![0; dims.len()];
    for pos in (0..dims.len()).rev() {
        digits[pos] = index % dims[pos];
        index /= dims[pos];
    }
    digits
}

/// Normalized pure state over a subsystem layout.
#[derive(Debug, Clone)]
pub struct PureState {
    layout: SubsystemLayout,
    amps: DVector<Complex64>,
}

/// One branch of a projective measurement. `post_state` is `None` when the
/// branch probability falls below `ZERO_PROB_TOL`.
#[derive(Debug, Clone)]
pub struct MeasurementBranch {
    pub outcome: Vec<usize>,
    pub probability: f64,
    pub post_state: Option<PureState>,
}

impl PureState {
    /// Wraps an amplitude vector, requiring unit norm within `EXACT_TOL`.
    pub fn new(layout: SubsystemLayout, amps: Vec<Complex64>) -> Result<Self, QuantumError> {
        if amps.len() != layout.total_dim() {
            return Err(QuantumError::AmplitudeLengthMismatch {
                expected: layout.total_dim(),
                got: amps.len(),
            });
        }
        let amps = DVector::from_vec(amps);
        let norm = amps.norm();
        if (norm - 1.0).abs() > EXACT_TOL {
            return Err(QuantumError::NotNormalized { norm });
        }
        Ok(PureState { layout, amps })
    }

    /// Normalizes an arbitrary nonzero amplitude vector.
    pub fn normalized(layout: SubsystemLayout, amps: Vec<Complex64>) -> Result<Self, QuantumError> {
        if amps.len() != layout.total_dim() {
            return Err(QuantumError::AmplitudeLengthMismatch {
                expected: layout.total_dim(),
                got: amps.len(),
            });
        }
        let mut amps = DVector::from_vec(amps);
        let norm = amps.norm();
        if norm < ZERO_PROB_TOL {
            return Err(QuantumError::ZeroVector);
        }
        amps /= Complex64::new(norm, 0.0);
        Ok(PureState { layout, amps })
    }

    /// Computational-basis state `|digits⟩`.
    pub fn basis_state(layout: SubsystemLayout, digits: &[usize]) -> Result<Self, QuantumError> {
        if digits.len() != layout.len() {
            return Err(QuantumError::AmplitudeLengthMismatch {
                expected: layout.len(),
                got: digits.len(),
            });
        }
        for (pos, &g) in digits.iter().enumerate() {
            if g >= layout.dim(pos) {
                return Err(QuantumError::DigitOutOfRange { digit: g, dim: layout.dim(pos) });
            }
        }
        let strides = layout.strides();
        let index: usize = digits.iter().zip(&strides).map(|(&g, &s)| g * s).sum();
        let mut amps = vec![Complex64::new(0.0, 0.0); layout.total_dim()];
        amps[index] = Complex64::new(1.0, 0.0);
        Ok(PureState { layout, amps: DVector::from_vec(amps) })
    }

    pub fn layout(&self) -> &SubsystemLayout {
        &self.layout
    }

    pub fn amplitudes(&self) -> &DVector<Complex64> {
        &self.amps
    }

    /// Amplitude of the basis state `|digits⟩`.
    pub fn amplitude(&self, digits: &[usize]) -> Complex64 {
        let strides = self.layout.strides();
        let index: usize = digits.iter().zip(&strides).map(|(&g, &s)| g * s).sum();
        self.amps[index]
    }

    pub fn norm(&self) -> f64 {
        self.amps.norm()
    }

    /// Same amplitudes under a different party assignment.
    pub fn with_parties(&self, parties: Vec<Party>) -> Result<Self, QuantumError> {
        let layout = SubsystemLayout::new(self.layout.dims.clone(), parties)?;
        Ok(PureState { layout, amps: self.amps.clone() })
    }

    /// Permutes subsystems: output slot `j` holds input slot `order[j]`.
    pub fn reorder(&self, order: &[usize]) -> Result<Self, QuantumError> {
        let n = self.layout.len();
        if order.len() != n {
            return Err(QuantumError::InvalidOrder { count: n });
        }
        let mut seen = vec![false; n];
        for &i in order {
            if i >= n || seen[i] {
                return Err(QuantumError::InvalidOrder { count: n });
            }
            seen[i] = true;
        }
        let dims: Vec<usize> = order.iter().map(|&i| self.layout.dim(i)).collect();
        let parties: Vec<Party> = order.iter().map(|&i| self.layout.party(i)).collect();
        let layout = SubsystemLayout::new(dims, parties)?;
        let out_strides = layout.strides();
        let mut amps = vec![Complex64::new(0.0, 0.0); layout.total_dim()];
        for index in 0..self.amps.len() {
            let digits = decode_digits(index, self.layout.dims());
            let out_index: usize =
                (0..n).map(|j| digits[order[j]] * out_strides[j]).sum();
            amps[out_index] = self.amps[index];
        }
        Ok(PureState { layout, amps: DVector::from_vec(amps) })
    }

    /// Applies `u` to the listed subsystems; `targets[0]` is the most
    /// significant digit of the operator's index space.
    pub fn apply_unitary(&self, u: &UnitaryOp, targets: &[usize]) -> Result<Self, QuantumError> {
        self.layout.check_selection(targets)?;
        let target_dim: usize = targets.iter().map(|&i| self.layout.dim(i)).product();
        if u.dim() != target_dim {
            return Err(QuantumError::OperatorDimensionMismatch {
                expected: target_dim,
                got: u.dim(),
            });
        }
        let target_offsets = selection_offsets(targets, &self.layout);
        let comp = self.layout.complement(targets);
        let comp_offsets = if comp.is_empty() {
            vec![0]
        } else {
            selection_offsets(&comp, &self.layout)
        };
        let mut amps = self.amps.clone();
        let mut vin = DVector::<Complex64>::zeros(target_dim);
        for &base in &comp_offsets {
            for (j, &off) in target_offsets.iter().enumerate() {
                vin[j] = self.amps[base + off];
            }
            let vout = u.matrix() * &vin;
            for (j, &off) in target_offsets.iter().enumerate() {
                amps[base + off] = vout[j];
            }
        }
        let norm = amps.norm();
        if (norm - 1.0).abs() > EXACT_TOL {
            return Err(QuantumError::NotNormalized { norm });
        }
        Ok(PureState { layout: self.layout.clone(), amps })
    }

    /// Projective measurement of the listed subsystems in the computational
    /// basis. Outcomes enumerate lexicographically over the listed order;
    /// branch probabilities sum to 1.
    pub fn measure_projective(
        &self,
        measured: &[usize],
    ) -> Result<Vec<MeasurementBranch>, QuantumError> {
        self.layout.check_selection(measured)?;
        let rest = self.layout.complement(measured);
        if rest.is_empty() {
            return Err(QuantumError::MeasuredAllSubsystems);
        }
        let measured_offsets = selection_offsets(measured, &self.layout);
        let rest_offsets = selection_offsets(&rest, &self.layout);
        let measured_dims: Vec<usize> = measured.iter().map(|&i| self.layout.dim(i)).collect();
        let rest_dims: Vec<usize> = rest.iter().map(|&i| self.layout.dim(i)).collect();
        let rest_parties: Vec<Party> = rest.iter().map(|&i| self.layout.party(i)).collect();
        let rest_layout = SubsystemLayout::new(rest_dims, rest_parties)?;
        let mut branches = Vec::with_capacity(measured_offsets.len());
        for (joint, &base) in measured_offsets.iter().enumerate() {
            let outcome = decode_digits(joint, &measured_dims);
            let sub: Vec<Complex64> =
                rest_offsets.iter().map(|&off| self.amps[base + off]).collect();
            let probability: f64 = sub.iter().map(|c| c.norm_sqr()).sum();
            let post_state = if probability < ZERO_PROB_TOL {
                None
            } else {
                Some(PureState::normalized(rest_layout.clone(), sub)?)
            };
            branches.push(MeasurementBranch { outcome, probability, post_state });
        }
        Ok(branches)
    }

    /// Reduced density matrix of the kept subsystems, in the listed order.
    pub fn partial_trace(&self, keep: &[usize]) -> Result<DensityMatrix, QuantumError> {
        self.layout.check_selection(keep)?;
        let keep_offsets = selection_offsets(keep, &self.layout);
        let rest = self.layout.complement(keep);
        let rest_offsets = if rest.is_empty() {
            vec![0]
        } else {
            selection_offsets(&rest, &self.layout)
        };
        let mut reshaped = DMatrix::<Complex64>::zeros(keep_offsets.len(), rest_offsets.len());
        for (row, &koff) in keep_offsets.iter().enumerate() {
            for (col, &roff) in rest_offsets.iter().enumerate() {
                reshaped[(row, col)] = self.amps[koff + roff];
            }
        }
        let rho = &reshaped * reshaped.adjoint();
        DensityMatrix::new(rho)
    }

    /// Squared overlap `|⟨self|other⟩|²`; insensitive to global phase.
    pub fn fidelity(&self, other: &PureState) -> Result<f64, QuantumError> {
        if self.amps.len() != other.amps.len() {
            return Err(QuantumError::TotalDimensionMismatch {
                left: self.amps.len(),
                right: other.amps.len(),
            });
        }
        Ok(self.amps.dotc(&other.amps).norm_sqr())
    }

    /// Euclidean distance between amplitude vectors; phase sensitive.
    pub fn distance(&self, other: &PureState) -> Result<f64, QuantumError> {
        if self.amps.len() != other.amps.len() {
            return Err(QuantumError::TotalDimensionMismatch {
                left: self.amps.len(),
                right: other.amps.len(),
            });
        }
        Ok((&self.amps - &other.amps).norm())
    }

    /// Schmidt coefficients across `part_a` versus the rest, descending.
    pub fn schmidt_coefficients(&self, part_a: &[usize]) -> Result<Vec<f64>, QuantumError> {
        self.layout.check_selection(part_a)?;
        let rest = self.layout.complement(part_a);
        if rest.is_empty() {
            return Err(QuantumError::InvalidPartition);
        }
        let a_offsets = selection_offsets(part_a, &self.layout);
        let b_offsets = selection_offsets(&rest, &self.layout);
        let mut reshaped = DMatrix::<Complex64>::zeros(a_offsets.len(), b_offsets.len());
        for (row, &aoff) in a_offsets.iter().enumerate() {
            for (col, &boff) in b_offsets.iter().enumerate() {
                reshaped[(row, col)] = self.amps[aoff + boff];
            }
        }
        let mut sigma: Vec<f64> = reshaped.singular_values().iter().copied().collect();
        sigma.sort_by(|x, y| y.partial_cmp(x).unwrap());
        Ok(sigma)
    }

    /// True when the state factorizes across the bipartition, judged by the
    /// second Schmidt coefficient falling below `INVARIANT_TOL`.
    pub fn is_product_across(
        &self,
        part_a: &[usize],
        part_b: &[usize],
    ) -> Result<bool, QuantumError> {
        self.layout.check_selection(part_a)?;
        self.layout.check_selection(part_b)?;
        let mut seen = vec![false; self.layout.len()];
        for &i in part_a.iter().chain(part_b) {
            if seen[i] {
                return Err(QuantumError::InvalidPartition);
            }
            seen[i] = true;
        }
        if seen.iter().any(|&s| !s) {
            return Err(QuantumError::InvalidPartition);
        }
        let sigma = self.schmidt_coefficients(part_a)?;
        Ok(sigma.len() < 2 || sigma[1] < INVARIANT_TOL)
    }

    /// Entanglement entropy in bits across `part_a` versus the rest.
    pub fn entanglement_entropy(&self, part_a: &[usize]) -> Result<f64, QuantumError> {
        let sigma = self.schmidt_coefficients(part_a)?;
        Ok(sigma
            .iter()
            .map(|s| {
                let p = s * s;
                if p > 0.0 { -p * p.log2() } else { 0.0 }
            })
            .sum())
    }
}

/// Tensor product of the given states; layouts concatenate in order.
pub fn tensor(states: &[PureState]) -> Result<PureState, QuantumError> {
    let first = states.first().ok_or(QuantumError::EmptyTensorList)?;
    let mut layout = first.layout.clone();
    let mut amps: Vec<Complex64> = first.amps.iter().copied().collect();
    for state in &states[1..] {
        layout = layout.concat(&state.layout);
        let mut next = Vec::with_capacity(amps.len() * state.amps.len());
        for &a in &amps {
            for b in state.amps.iter() {
                next.push(a * b);
            }
        }
        amps = next;
    }
    PureState::new(layout, amps)
}

/// Square matrix validated as unitary within `INVARIANT_TOL`.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitaryOp {
    matrix: DMatrix<Complex64>,
}

impl UnitaryOp {
    pub fn new(matrix: DMatrix<Complex64>) -> Result<Self, QuantumError> {
        if matrix.nrows() != matrix.ncols() || matrix.nrows() == 0 {
            return Err(QuantumError::NotSquare { rows: matrix.nrows(), cols: matrix.ncols() });
        }
        let dim = matrix.nrows();
        let gram = matrix.adjoint() * &matrix;
        let deviation = (gram - DMatrix::<Complex64>::identity(dim, dim))
            .iter()
            .map(|c| c.norm())
            .fold(0.0_f64, f64::max);
        if deviation > INVARIANT_TOL {
            return Err(QuantumError::NotUnitary { deviation });
        }
        Ok(UnitaryOp { matrix })
    }

    pub fn identity(dim: usize) -> Self {
        UnitaryOp { matrix: DMatrix::identity(dim, dim) }
    }

    /// Unitary whose `k`-th column is the `k`-th of the given orthonormal kets.
    pub fn from_columns(columns: &[DVector<Complex64>]) -> Result<Self, QuantumError> {
        let dim = columns.len();
        let mut matrix = DMatrix::<Complex64>::zeros(dim, dim);
        for (k, col) in columns.iter().enumerate() {
            if col.len() != dim {
                return Err(QuantumError::NotSquare { rows: col.len(), cols: dim });
            }
            matrix.set_column(k, col);
        }
        UnitaryOp::new(matrix)
    }

    /// Diagonal unitary with the given unit-modulus entries.
    pub fn diagonal(phases: &[Complex64]) -> Result<Self, QuantumError> {
        let dim = phases.len();
        let mut matrix = DMatrix::<Complex64>::zeros(dim, dim);
        for (j, &p) in phases.iter().enumerate() {
            matrix[(j, j)] = p;
        }
        UnitaryOp::new(matrix)
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn dagger(&self) -> UnitaryOp {
        UnitaryOp { matrix: self.matrix.adjoint() }
    }

    /// Largest entrywise deviation from `other`.
    pub fn max_abs_diff(&self, other: &UnitaryOp) -> f64 {
        (&self.matrix - &other.matrix).iter().map(|c| c.norm()).fold(0.0_f64, f64::max)
    }
}

/// Hermitian, unit-trace, positive-semidefinite matrix (within tolerances).
/// The stored matrix is the Hermitian symmetrization of the input.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    matrix: DMatrix<Complex64>,
}

impl DensityMatrix {
    pub fn new(matrix: DMatrix<Complex64>) -> Result<Self, QuantumError> {
        if matrix.nrows() != matrix.ncols() || matrix.nrows() == 0 {
            return Err(QuantumError::NotSquare { rows: matrix.nrows(), cols: matrix.ncols() });
        }
        let deviation = (&matrix - matrix.adjoint())
            .iter()
            .map(|c| c.norm())
            .fold(0.0_f64, f64::max);
        if deviation > INVARIANT_TOL {
            return Err(QuantumError::NotHermitian { deviation });
        }
        let symmetrized = (&matrix + matrix.adjoint()).scale(0.5);
        let trace = symmetrized.trace();
        if (trace.re - 1.0).abs() > INVARIANT_TOL || trace.im.abs() > INVARIANT_TOL {
            return Err(QuantumError::TraceNotOne { trace: trace.re });
        }
        let rho = DensityMatrix { matrix: symmetrized };
        if let Some(&value) = rho
            .raw_eigenvalues()
            .iter()
            .find(|&&v| v < -INVARIANT_TOL)
        {
            return Err(QuantumError::NegativeEigenvalue { value });
        }
        Ok(rho)
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.matrix[(row, col)]
    }

    fn raw_eigenvalues(&self) -> Vec<f64> {
        self.matrix
            .clone()
            .symmetric_eigen()
            .eigenvalues
            .iter()
            .copied()
            .collect()
    }

    /// Eigenvalues with values in `[-INVARIANT_TOL, 0)` clamped to zero,
    /// sorted descending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut eigs: Vec<f64> = self
            .raw_eigenvalues()
            .into_iter()
            .map(|v| if v < 0.0 { 0.0 } else { v })
            .collect();
        eigs.sort_by(|x, y| y.partial_cmp(x).unwrap());
        eigs
    }

    /// `⟨ψ|ρ|ψ⟩`: the fidelity of `ρ` with the pure state `ψ`.
    pub fn fidelity_with_pure(&self, psi: &PureState) -> Result<f64, QuantumError> {
        if psi.amplitudes().len() != self.dim() {
            return Err(QuantumError::TotalDimensionMismatch {
                left: self.dim(),
                right: psi.amplitudes().len(),
            });
        }
        let v = psi.amplitudes();
        Ok((v.adjoint() * &self.matrix * v)[(0, 0)].re)
    }
}

/// Von Neumann entropy in bits, with `0·log 0 := 0`.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> f64 {
    rho.eigenvalues()
        .iter()
        .map(|&p| if p > 0.0 { -p * p.log2() } else { 0.0 })
        .sum()
}
