//! Seeded randomness: Haar-distributed unitaries and random kets.
//!
//! Everything here is deterministic given a seed, so invariance checks and
//! sampled runs reproduce exactly.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::quantum::{PureState, QuantumError, SubsystemLayout, UnitaryOp};

/// Deterministic generator for the given seed.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Generator for trial `index` of a run with master seed `seed`. Distinct
/// trials use distinct ChaCha streams, so they are independent and any
/// trial can be reproduced without replaying the ones before it.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn standard_complex<R: Rng>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Haar-distributed random unitary: QR of a complex Gaussian matrix with the
/// R diagonal rephased to make the distribution uniform.
pub fn haar_unitary<R: Rng>(dim: usize, rng: &mut R) -> UnitaryOp {
    let ginibre = DMatrix::<Complex64>::from_fn(dim, dim, |_, _| standard_complex(rng));
    let qr = ginibre.qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..dim {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { Complex64::new(1.0, 0.0) };
        for i in 0..dim {
            q[(i, j)] *= phase;
        }
    }
    UnitaryOp::new(q).expect("orthonormalized matrix is unitary")
}

/// Haar-distributed unitary rephased to determinant one. Collective
/// invariance of the resource states is exact only in this gauge; a stray
/// determinant phase would otherwise multiply the whole state.
pub fn haar_special_unitary<R: Rng>(dim: usize, rng: &mut R) -> UnitaryOp {
    let u = haar_unitary(dim, rng);
    let det = u.matrix().determinant();
    let scale = Complex64::from_polar(det.norm().powf(-1.0 / dim as f64), -det.arg() / dim as f64);
    UnitaryOp::new(u.matrix() * scale).expect("rephasing keeps the matrix unitary")
}

/// Random ket with amplitudes drawn from the unitarily invariant measure.
pub fn random_state<R: Rng>(
    layout: SubsystemLayout,
    rng: &mut R,
) -> Result<PureState, QuantumError> {
    let amps: Vec<Complex64> = (0..layout.total_dim()).map(|_| standard_complex(rng)).collect();
    PureState::normalized(layout, amps)
}

/// Random product ket across the layout's subsystems.
pub fn random_product_state<R: Rng>(
    layout: SubsystemLayout,
    rng: &mut R,
) -> Result<PureState, QuantumError> {
    let mut amps = vec![Complex64::new(1.0, 0.0)];
    for &dim in layout.dims() {
        let factor: Vec<Complex64> = (0..dim).map(|_| standard_complex(rng)).collect();
        let norm: f64 = factor.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        let mut next = Vec::with_capacity(amps.len() * dim);
        for &a in &amps {
            for &b in &factor {
                next.push(a * b / norm);
            }
        }
        amps = next;
    }
    PureState::new(layout, amps)
}
