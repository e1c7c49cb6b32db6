use alloc::vec::Vec;

use super::general::GeneralMap;
use super::noise::NoiseVector;
use crate::{Error, QrmCode, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct YieldResult {
    pub rounds: usize,
    /// Success probability of each round.
    pub probabilities: Vec<f64>,
    /// `Π_k P_k/n`.
    pub yield_value: f64,
    /// Final state; its basis records whether it targets `|M_0⟩` or `|M†_0⟩`.
    pub final_noise: NoiseVector,
    pub final_epsilon: f64,
    pub gamma_star: f64,
}

/// Iterates the full noise vector until `ε ≤ ε_target`, accumulating the
/// yield `Π_k P_k/n`.
pub fn distillation_yield(
    code: &QrmCode,
    noise: &NoiseVector,
    epsilon_target: f64,
    max_rounds: usize,
) -> Result<YieldResult> {
    let map = GeneralMap::new(code)?;
    yield_with(&map, code, noise, epsilon_target, max_rounds)
}

pub(crate) fn yield_with(
    map: &GeneralMap,
    code: &QrmCode,
    noise: &NoiseVector,
    epsilon_target: f64,
    max_rounds: usize,
) -> Result<YieldResult> {
    let n = map.n() as f64;
    let mut state = noise.clone();
    let mut eps = state.epsilon();
    let mut probabilities = Vec::new();
    let mut y = 1.0;
    while eps > epsilon_target {
        if probabilities.len() == max_rounds {
            return Err(Error::NotConverged {
                rounds: max_rounds,
                epsilon: eps,
            });
        }
        let r = map.iterate(&state)?;
        probabilities.push(r.success_probability);
        y *= r.success_probability / n;
        eps = r.epsilon_out;
        state = r.output;
    }
    Ok(YieldResult {
        rounds: probabilities.len(),
        probabilities,
        yield_value: y,
        final_noise: state,
        final_epsilon: eps,
        gamma_star: super::depolarizing::gamma_star(code.d(), code.m())?,
    })
}

impl GeneralMap {
    /// [`distillation_yield`] with a prebuilt map.
    pub fn distillation_yield(
        &self,
        code: &QrmCode,
        noise: &NoiseVector,
        epsilon_target: f64,
        max_rounds: usize,
    ) -> Result<YieldResult> {
        yield_with(self, code, noise, epsilon_target, max_rounds)
    }
}
