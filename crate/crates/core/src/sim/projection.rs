use alloc::vec::Vec;

use super::state::{apply_pauli, root, PauliKind, StateVector};
use crate::field::{dot_mod, GFVector};
use crate::{Complex, Error, LinearCode, QrmCode, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct ProjectionOutcome {
    pub post_state: StateVector,
    /// Probability weight `‖Π'ψ‖²`.
    pub squared_norm: f64,
}

fn half_code(code: &QrmCode, half: PauliKind) -> &LinearCode {
    match half {
        PauliKind::X => code.lx(),
        PauliKind::Z => code.lz(),
    }
}

fn check(state: &StateVector, code: &QrmCode, gens: &LinearCode, k: &GFVector) -> Result<()> {
    if state.d() != code.d() || state.n() != code.n() {
        return Err(Error::DimensionMismatch(
            "state does not match the code".into(),
        ));
    }
    if k.len() != gens.dim() || k.modulus() != code.d() {
        return Err(Error::DimensionMismatch(alloc::format!(
            "{} outcomes for {} generators",
            k.len(),
            gens.dim()
        )));
    }
    Ok(())
}

/// Applies `Π' = d^{−r} Σ_{u ∈ F_d^r} ω^{⟨k,u⟩} S[Gu]`, the projector onto
/// outcome `ω^{k_i}` of every generator `g_i` of the chosen stabilizer half
/// (`S = Z` or `X`, `r` generators), as a literal group average.
pub fn project_stabilizer(
    state: &StateVector,
    half: PauliKind,
    code: &QrmCode,
    outcomes: &GFVector,
) -> Result<ProjectionOutcome> {
    let gens = half_code(code, half);
    check(state, code, gens, outcomes)?;
    let d = code.d();
    let r = gens.dim();
    let scale = libm::pow(d as f64, -(r as f64));
    let mut acc = StateVector::zeros(d, code.n())?;
    let mut u = alloc::vec![0u32; r];
    for idx in 0..(d as usize).pow(r as u32) {
        super::state::digits_into(d, idx, &mut u);
        let element = gens.encode(&u);
        let phase = root(dot_mod(outcomes.entries(), &u, d) as i64, d as i64) * scale;
        acc = acc.add(&apply_pauli(state, half, &element)?.scale(phase));
    }
    let squared_norm = acc.norm_sqr();
    Ok(ProjectionOutcome {
        post_state: acc,
        squared_norm,
    })
}

/// Same projector as [`project_stabilizer`]. The Z half keeps the basis
/// states whose syndrome `⟨g_i, x⟩` equals `−k_i`; the X half averages over
/// the `|L_X|` shifts.
pub fn project_stabilizer_fast(
    state: &StateVector,
    half: PauliKind,
    code: &QrmCode,
    outcomes: &GFVector,
) -> Result<ProjectionOutcome> {
    let gens = half_code(code, half);
    check(state, code, gens, outcomes)?;
    let d = code.d();
    let post_state = match half {
        PauliKind::Z => {
            let target: Vec<u32> = outcomes.entries().iter().map(|&k| (d - k) % d).collect();
            state.map_digits(|x, a| {
                let hit = gens
                    .rows()
                    .iter()
                    .zip(&target)
                    .all(|(g, &t)| dot_mod(g, x, d) == t);
                if hit {
                    a
                } else {
                    Complex::new(0.0, 0.0)
                }
            })
        }
        PauliKind::X => return project_stabilizer(state, half, code, outcomes),
    };
    let squared_norm = post_state.norm_sqr();
    Ok(ProjectionOutcome {
        post_state,
        squared_norm,
    })
}

/// Correction vector `w` with `⟨w, g_i⟩ = k_i` for the generators `g_i` of
/// `L_Z`: the outcomes are placed on the identity block of the canonical
/// generator form and mapped back to the original coordinates.
pub fn clifford_correction_vector(code: &QrmCode, outcomes: &GFVector) -> Result<GFVector> {
    let (_, perm) = code.lz().canonical_generator_form();
    let r = code.lz().dim();
    if outcomes.len() != r || outcomes.modulus() != code.d() {
        return Err(Error::DimensionMismatch(alloc::format!(
            "{} outcomes for {r} generators",
            outcomes.len()
        )));
    }
    let mut w = alloc::vec![0u32; code.n()];
    for (i, &k) in outcomes.entries().iter().enumerate() {
        w[perm[i]] = k;
    }
    Ok(GFVector::new_unchecked(code.d(), w))
}

/// `c = tr(Π |+_0⟩⟨+_0|^{⊗n}) = 1/|L_Z|` from stabilizer counting.
pub fn code_constant(code: &QrmCode) -> f64 {
    libm::pow(code.d() as f64, -(code.lz().dim() as f64))
}
