use alloc::vec::Vec;

use crate::{Error, Result};

/// Which magic basis a twirled state is diagonal in. One distillation round
/// maps `|M_k⟩`-diagonal states to `|M†_k⟩`-diagonal ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Basis {
    #[default]
    M,
    MDagger,
}

impl Basis {
    pub fn flip(self) -> Self {
        match self {
            Basis::M => Basis::MDagger,
            Basis::MDagger => Basis::M,
        }
    }
}

/// Diagonal weights `f_k = ⟨M_k|ρ|M_k⟩` of a twirled state.
#[derive(Clone, Debug, PartialEq)]
pub struct NoiseVector {
    f: Vec<f64>,
    basis: Basis,
}

const SUM_TOLERANCE: f64 = 1e-12;

impl NoiseVector {
    /// Validates `f ≥ 0` and `Σf = 1` to 1e−12.
    pub fn new(f: Vec<f64>, basis: Basis) -> Result<Self> {
        if f.len() < 2 {
            return Err(Error::Invalid(
                "noise vector needs at least two entries".into(),
            ));
        }
        if let Some(&bad) = f.iter().find(|x| !(**x >= 0.0 && **x <= 1.0)) {
            return Err(Error::Domain {
                what: "f_k",
                value: bad,
                domain: "[0, 1]",
            });
        }
        let s: f64 = f.iter().sum();
        if (s - 1.0).abs() > SUM_TOLERANCE {
            return Err(Error::Domain {
                what: "sum of f",
                value: s,
                domain: "{1}",
            });
        }
        Ok(Self { f, basis })
    }

    /// Scales nonnegative weights to unit sum.
    pub fn normalized(f: Vec<f64>, basis: Basis) -> Result<Self> {
        let s: f64 = f.iter().sum();
        if !(s > 0.0) || f.iter().any(|x| !(*x >= 0.0)) {
            return Err(Error::Invalid(
                "weights must be nonnegative with positive sum".into(),
            ));
        }
        Ok(Self {
            f: f.into_iter().map(|x| x / s).collect(),
            basis,
        })
    }

    pub(crate) fn from_parts_unchecked(f: Vec<f64>, basis: Basis) -> Self {
        Self { f, basis }
    }

    /// The state at `1 − ε` on `f_0` with the error weight `ε` split along
    /// `direction` (nonnegative, unit sum over `k ≠ 0`).
    pub fn along(epsilon: f64, direction: &[f64]) -> Self {
        let mut f = Vec::with_capacity(direction.len() + 1);
        f.push(1.0 - epsilon);
        f.extend(direction.iter().map(|g| epsilon * g));
        Self { f, basis: Basis::M }
    }

    pub fn d(&self) -> usize {
        self.f.len()
    }

    pub fn f(&self) -> &[f64] {
        &self.f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn with_basis(mut self, basis: Basis) -> Self {
        self.basis = basis;
        self
    }

    /// `ε = 1 − f_0`, summed from the error weights to avoid cancellation.
    pub fn epsilon(&self) -> f64 {
        self.f[1..].iter().sum()
    }

    /// Error weight on the `target` component, `1 − f_target`.
    pub fn epsilon_towards(&self, target: usize) -> f64 {
        self.f
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != target)
            .map(|(_, x)| x)
            .sum()
    }

    /// Relabels `f_k → f_{k+s}`.
    pub fn shifted(&self, s: usize) -> Self {
        let d = self.f.len();
        Self {
            f: (0..d).map(|k| self.f[(k + s) % d]).collect(),
            basis: self.basis,
        }
    }
}

/// `f_0 = 1 − ε`, `f_{k≠0} = ε/(d−1)`.
pub fn depolarizing_noise(d: u32, epsilon: f64) -> Result<NoiseVector> {
    crate::field::check_prime(d)?;
    if !(0.0..=1.0).contains(&epsilon) {
        return Err(Error::Domain {
            what: "epsilon",
            value: epsilon,
            domain: "[0, 1]",
        });
    }
    let mut f = alloc::vec![epsilon / (d - 1) as f64; d as usize];
    f[0] = 1.0 - epsilon;
    Ok(NoiseVector { f, basis: Basis::M })
}

/// Qutrit noise `(1 − ε, ε cos²θ, ε sin²θ)`.
pub fn qutrit_noise(epsilon: f64, theta: f64) -> Result<NoiseVector> {
    if !(0.0..=1.0).contains(&epsilon) {
        return Err(Error::Domain {
            what: "epsilon",
            value: epsilon,
            domain: "[0, 1]",
        });
    }
    let c = libm::cos(theta);
    let s = libm::sin(theta);
    Ok(NoiseVector {
        f: alloc::vec![1.0 - epsilon, epsilon * c * c, epsilon * s * s],
        basis: Basis::M,
    })
}

/// `ε = (d−1)δ/d`, reading `δ` as the depolarized fraction of
/// `ρ = (1−δ)|M_0⟩⟨M_0| + δ·1/d`.
pub fn epsilon_from_delta(d: u32, delta: f64) -> f64 {
    (d - 1) as f64 * delta / d as f64
}

/// `ε = (d−1)(1−δ)/d`, reading `δ` as the surviving fraction of
/// `ρ = δ|M_0⟩⟨M_0| + (1−δ)·1/d`.
pub fn epsilon_from_state_fraction(d: u32, delta: f64) -> f64 {
    (d - 1) as f64 * (1.0 - delta) / d as f64
}

/// One round of distillation.
#[derive(Clone, Debug, PartialEq)]
pub struct IterationResult {
    /// Output weights, in the opposite basis to the input.
    pub output: NoiseVector,
    pub success_probability: f64,
    pub epsilon_out: f64,
}
