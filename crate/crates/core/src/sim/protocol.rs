use alloc::vec::Vec;

use super::projection::clifford_correction_vector;
use super::state::{checked_dim, digits_into, index_of, roots};
use crate::engine::{IterationResult, NoiseVector};
use crate::field::{dot_mod, GFVector};
use crate::{Complex, Error, MagicGate, QrmCode, Result, DEFAULT_SPAN_CUTOFF};

/// Per-input-label outcome of one protocol round.
///
/// For every `v ∈ F_d^n` the oracle prepares `|M_v⟩ = M^{⊗n}|+_v⟩` densely,
/// splits it over the Z-stabilizer outcome branches, applies the Clifford
/// correction `C_M[w]` of each branch (or keeps only the trivial branch when
/// correction is off), projects onto the X stabilizer, reads off the logical
/// amplitudes and records the acceptance weight and the output weights in the
/// `M†|+_j⟩` basis. Mixtures are then weighted sums over `v`.
#[derive(Clone, Debug)]
pub struct ProtocolResponse {
    d: u32,
    n: usize,
    correction: bool,
    branches: usize,
    accept: Vec<f64>,
    output: Vec<f64>,
    max_off_diagonal: f64,
    max_branch_spread: f64,
}

struct Precomputed {
    digits: Vec<u32>,
    branch: Vec<u32>,
    zero_slot: Vec<i32>,
    base_phase: Vec<i64>,
    class_size: Vec<u64>,
    lx_size: usize,
}

fn precompute(code: &QrmCode, gate: &MagicGate, correction: bool) -> Result<Precomputed> {
    let d = code.d();
    let n = code.n();
    let dim = checked_dim(d, n)?;
    let q = gate.denominator();
    let gens = code.lz().rows();
    let r = gens.len();
    let branches = if correction {
        (d as usize).pow(r as u32)
    } else {
        1
    };

    let words: Vec<Vec<u32>> = code.lx().span_iter(DEFAULT_SPAN_CUTOFF)?.collect();
    let lx_size = words.len();
    let mut zero_index = alloc::vec![-1i32; dim];
    for j in 0..d {
        for (ui, u) in words.iter().enumerate() {
            let y: Vec<u32> = u.iter().map(|&a| (a + j) % d).collect();
            zero_index[index_of(d, &y)] = (j as usize * lx_size + ui) as i32;
        }
    }

    let corrections: Vec<Vec<u32>> = if correction {
        let mut k = alloc::vec![0u32; r];
        (0..branches)
            .map(|b| {
                digits_into(d, b, &mut k);
                clifford_correction_vector(code, &GFVector::new_unchecked(d, k.clone()))
                    .map(|w| w.into_entries())
            })
            .collect::<Result<_>>()?
    } else {
        alloc::vec![alloc::vec![0u32; n]]
    };

    let mut digits = alloc::vec![0u32; dim * n];
    let mut branch = alloc::vec![0u32; dim];
    let mut zero_slot = alloc::vec![-1i32; dim];
    let mut base_phase = alloc::vec![0i64; dim];
    let mut class_size = alloc::vec![0u64; branches];
    let mut k = alloc::vec![0u32; r];
    let mut y = alloc::vec![0u32; n];
    for x in 0..dim {
        let xd = &mut digits[x * n..(x + 1) * n];
        digits_into(d, x, xd);
        // Outcome k_i = −⟨g_i, x⟩.
        for (ki, g) in k.iter_mut().zip(gens) {
            *ki = (d - dot_mod(g, xd, d)) % d;
        }
        let b = index_of(d, &k);
        let w = if correction {
            &corrections[b]
        } else if b == 0 {
            &corrections[0]
        } else {
            continue;
        };
        let mut e = 0i64;
        for ((yi, &xi), &wi) in y.iter_mut().zip(xd.iter()).zip(w) {
            *yi = (xi + wi) % d;
            e += gate.lambda_at(*yi);
        }
        let slot = zero_index[index_of(d, &y)];
        if slot < 0 {
            return Err(Error::InvalidCode(
                "correction leaves the zero-syndrome space".into(),
            ));
        }
        branch[x] = b as u32;
        zero_slot[x] = slot;
        base_phase[x] = e.rem_euclid(q);
        class_size[b] += 1;
    }
    Ok(Precomputed {
        digits,
        branch,
        zero_slot,
        base_phase,
        class_size,
        lx_size,
    })
}

struct Response {
    accept: f64,
    output: Vec<f64>,
    off_diagonal: f64,
    spread: f64,
}

impl ProtocolResponse {
    /// Runs the protocol on every `|M_v⟩` for the given gate.
    pub fn compute(code: &QrmCode, gate: &MagicGate, correction: bool) -> Result<Self> {
        if gate.d() != code.d() {
            return Err(Error::DimensionMismatch(
                "gate and code dimensions differ".into(),
            ));
        }
        let d = code.d();
        let n = code.n();
        let dim = checked_dim(d, n)?;
        let pre = precompute(code, gate, correction)?;
        let branches = pre.class_size.len();
        let q = gate.denominator();
        let step = q / d as i64;
        let roots_q = roots(q);
        let amp_norm = libm::pow(d as f64, -(n as f64) / 2.0);
        let lx_norm = 1.0 / libm::sqrt(pre.lx_size as f64);
        let slots = d as usize * pre.lx_size;
        let dm = libm::pow(d as f64, n as f64);
        // exp(i2πλ_j/q) ω^{aj} / √d: overlap of the decoded state with M†|+_a⟩.
        let decode: Vec<Vec<Complex>> = (0..d as i64)
            .map(|a| {
                (0..d as i64)
                    .map(|j| {
                        super::state::root(gate.lambda_at(j as u32) + step * a * j, q)
                            / libm::sqrt(d as f64)
                    })
                    .collect()
            })
            .collect();

        let per_v = |vi: usize| -> Response {
            let mut v = alloc::vec![0u32; n];
            digits_into(d, vi, &mut v);
            let mut buf = alloc::vec![Complex::new(0.0, 0.0); branches * slots];
            for x in 0..dim {
                let slot = pre.zero_slot[x];
                if slot < 0 {
                    continue;
                }
                let xd = &pre.digits[x * n..(x + 1) * n];
                let vx = dot_mod(&v, xd, d) as i64;
                let e = (pre.base_phase[x] - step * vx).rem_euclid(q);
                buf[pre.branch[x] as usize * slots + slot as usize] += roots_q[e as usize];
            }
            let mut accept = 0.0;
            let mut output = alloc::vec![0.0; d as usize];
            let mut off_diagonal: f64 = 0.0;
            let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
            for b in 0..branches {
                let chunk = &buf[b * slots..(b + 1) * slots];
                let logical: Vec<Complex> = (0..d as usize)
                    .map(|j| {
                        chunk[j * pre.lx_size..(j + 1) * pre.lx_size]
                            .iter()
                            .sum::<Complex>()
                            * (amp_norm * lx_norm)
                    })
                    .collect();
                let norm: f64 = logical.iter().map(|a| a.norm_sqr()).sum();
                let amps: Vec<Complex> = decode
                    .iter()
                    .map(|row| row.iter().zip(&logical).map(|(c, l)| c * l).sum())
                    .collect();
                for (o, a) in output.iter_mut().zip(&amps) {
                    *o += a.norm_sqr();
                }
                for (i, a) in amps.iter().enumerate() {
                    for bb in amps.iter().skip(i + 1) {
                        off_diagonal = off_diagonal.max((a * bb.conj()).norm());
                    }
                }
                accept += norm;
                let p_branch = pre.class_size[b] as f64 / dm;
                if p_branch > 0.0 {
                    let cond = norm / p_branch;
                    lo = lo.min(cond);
                    hi = hi.max(cond);
                }
            }
            let spread = if correction && hi >= lo { hi - lo } else { 0.0 };
            Response {
                accept,
                output,
                off_diagonal,
                spread,
            }
        };

        let responses = crate::par::map_indexed(dim, per_v);
        let mut accept = Vec::with_capacity(dim);
        let mut output = Vec::with_capacity(dim * d as usize);
        let (mut max_off_diagonal, mut max_branch_spread) = (0.0f64, 0.0f64);
        for r in responses {
            accept.push(r.accept);
            output.extend_from_slice(&r.output);
            max_off_diagonal = max_off_diagonal.max(r.off_diagonal);
            max_branch_spread = max_branch_spread.max(r.spread);
        }
        Ok(Self {
            d,
            n,
            correction,
            branches,
            accept,
            output,
            max_off_diagonal,
            max_branch_spread,
        })
    }

    pub fn correction(&self) -> bool {
        self.correction
    }

    /// Number of Z-outcome branches followed.
    pub fn branches(&self) -> usize {
        self.branches
    }

    /// Acceptance probability of the pure input `|M_v⟩`.
    pub fn acceptance(&self, v: &[u32]) -> f64 {
        self.accept[index_of(self.d, v)]
    }

    /// Largest `|⟨M†_a|ψ⟩⟨ψ|M†_b⟩|`, `a ≠ b`, over all inputs and branches.
    pub fn max_off_diagonal(&self) -> f64 {
        self.max_off_diagonal
    }

    /// Largest spread over outcome branches of the acceptance probability
    /// conditioned on the branch.
    pub fn max_branch_spread(&self) -> f64 {
        self.max_branch_spread
    }

    /// Weighted sum over the twirled ensemble `Σ_v α_v |M_v⟩⟨M_v|`.
    pub fn evaluate(&self, noise: &NoiseVector) -> Result<IterationResult> {
        let d = self.d as usize;
        if noise.d() != d {
            return Err(Error::DimensionMismatch("noise dimension".into()));
        }
        let f = noise.f();
        let mut v = alloc::vec![0u32; self.n];
        let mut p = 0.0;
        let mut out = alloc::vec![0.0; d];
        for (vi, &acc) in self.accept.iter().enumerate() {
            digits_into(self.d, vi, &mut v);
            let alpha: f64 = v.iter().map(|&k| f[k as usize]).product();
            if alpha == 0.0 {
                continue;
            }
            p += alpha * acc;
            for (o, &w) in out.iter_mut().zip(&self.output[vi * d..(vi + 1) * d]) {
                *o += alpha * w;
            }
        }
        if !(p > 0.0) {
            return Err(Error::Invalid("zero acceptance probability".into()));
        }
        let eps: f64 = out[1..].iter().sum::<f64>() / p;
        let f_out = out.iter().map(|x| x / p).collect();
        Ok(IterationResult {
            output: NoiseVector::from_parts_unchecked(f_out, noise.basis().flip()),
            success_probability: p,
            epsilon_out: eps,
        })
    }
}

/// One round of the protocol for the twirled input `noise`, with `C_M`
/// replaced by `C_{M†}` when the input is diagonal in the `M†` basis.
pub fn simulate_round(
    code: &QrmCode,
    gate: &MagicGate,
    noise: &NoiseVector,
    correction: bool,
) -> Result<RoundOutput> {
    let g = match noise.basis() {
        crate::engine::Basis::M => gate.clone(),
        crate::engine::Basis::MDagger => gate.dagger(),
    };
    let response = ProtocolResponse::compute(code, &g, correction)?;
    Ok(RoundOutput {
        result: response.evaluate(noise)?,
        max_off_diagonal: response.max_off_diagonal,
        max_branch_spread: response.max_branch_spread,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct RoundOutput {
    pub result: IterationResult,
    pub max_off_diagonal: f64,
    pub max_branch_spread: f64,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{depolarizing_noise, GeneralMap};
    use crate::gate::canonical_gate;
    use crate::qrm::build_qrm;

    #[test]
    fn ququint_pure_and_noisy() {
        let code = build_qrm(5, 1).unwrap();
        let gate = canonical_gate(5, 1).unwrap();
        let resp = ProtocolResponse::compute(&code, &gate, true).unwrap();
        assert_eq!(resp.branches(), 25);
        let pure = resp.evaluate(&depolarizing_noise(5, 0.0).unwrap()).unwrap();
        assert!((pure.success_probability - 1.0).abs() < 1e-12);
        assert!((pure.output.f()[0] - 1.0).abs() < 1e-12);
        let map = GeneralMap::new(&code).unwrap();
        let noise = depolarizing_noise(5, 0.2).unwrap();
        let a = resp.evaluate(&noise).unwrap();
        let b = map.iterate(&noise).unwrap();
        assert!((a.success_probability - b.success_probability).abs() < 1e-12);
        for (x, y) in a.output.f().iter().zip(b.output.f()) {
            assert!((x - y).abs() < 1e-12);
        }
        assert!(resp.max_off_diagonal() < 1e-12);
        assert!(resp.max_branch_spread() < 1e-12);
    }
}
