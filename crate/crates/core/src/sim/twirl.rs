use alloc::vec::Vec;

use nalgebra::{DMatrix, DVector};

use super::state::root;
use crate::engine::{Basis, NoiseVector};
use crate::injection::{shift_matrix, twirl, DensityMatrix};
use crate::{Complex, Error, MagicGate, Result};

/// Largest dimension accepted by [`twirl_numeric`].
pub const MAX_TWIRL_DIM: u32 = 19;

const DIAGONAL_TOL: f64 = 1e-10;

/// `M = Σ_j e^{i2πλ_j/d^m}|j⟩⟨j|`.
pub fn gate_matrix(gate: &MagicGate) -> DMatrix<Complex> {
    let d = gate.d() as usize;
    let q = gate.denominator();
    DMatrix::from_fn(d, d, |i, j| {
        if i == j {
            root(gate.lambda_at(i as u32), q)
        } else {
            Complex::new(0.0, 0.0)
        }
    })
}

/// `C_M = M X M†`.
pub fn cm_matrix(gate: &MagicGate) -> DMatrix<Complex> {
    let m = gate_matrix(gate);
    &m * shift_matrix(gate.d() as usize) * m.adjoint()
}

/// `|M_k⟩ = M|+_k⟩` with `|+_k⟩ = d^{−1/2} Σ_t ω^{−kt}|t⟩`.
pub fn magic_state(gate: &MagicGate, k: u32) -> DVector<Complex> {
    let d = gate.d();
    let q = gate.denominator();
    let step = q / d as i64;
    let s = 1.0 / libm::sqrt(d as f64);
    DVector::from_iterator(
        d as usize,
        (0..d).map(|t| root(gate.lambda_at(t) - step * k as i64 * t as i64, q) * s),
    )
}

#[derive(Clone, Debug)]
pub struct TwirlOutcome {
    pub noise: NoiseVector,
    /// Largest `|⟨M_a|𝒯(ρ)|M_b⟩|`, `a ≠ b`.
    pub max_off_diagonal: f64,
}

/// Averages `ρ` over conjugation by powers of `C_M` and reads off the
/// weights `f_k = ⟨M_k|ρ|M_k⟩`.
pub fn twirl_numeric(rho: &DensityMatrix, gate: &MagicGate) -> Result<TwirlOutcome> {
    let d = gate.d();
    if d > MAX_TWIRL_DIM {
        return Err(Error::Domain {
            what: "d",
            value: d as f64,
            domain: "[2, 19]",
        });
    }
    if rho.dim() != d as usize {
        return Err(Error::DimensionMismatch(
            "density matrix and gate sizes differ".into(),
        ));
    }
    let t = twirl(gate, rho);
    let basis: Vec<DVector<Complex>> = (0..d).map(|k| magic_state(gate, k)).collect();
    let mut f = Vec::with_capacity(d as usize);
    let mut off: f64 = 0.0;
    for (a, ma) in basis.iter().enumerate() {
        let left = ma.adjoint() * t.matrix();
        for (b, mb) in basis.iter().enumerate() {
            let z = (&left * mb)[(0, 0)];
            if a == b {
                f.push(z.re.max(0.0));
            } else {
                off = off.max(z.norm());
            }
        }
    }
    if off > DIAGONAL_TOL {
        return Err(Error::Invalid(alloc::format!(
            "twirled state not diagonal: {off:e}"
        )));
    }
    Ok(TwirlOutcome {
        noise: NoiseVector::normalized(f, Basis::M)?,
        max_off_diagonal: off,
    })
}
