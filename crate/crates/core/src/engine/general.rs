use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use twofloat::TwoFloat;

use super::noise::{IterationResult, NoiseVector};
use crate::enumerator::KWeightProfile;
use crate::{Error, QrmCode, Result, DEFAULT_SPAN_CUTOFF};

/// The exact general-noise map
/// `f'_j = Σ_{v ⊕ j·1 ∈ L_Z} Π_k f_k^{wt_k(v)} / P`,
/// with the sums grouped by k-weight profile and accumulated in double-double
/// precision.
#[derive(Clone, Debug)]
pub struct GeneralMap {
    d: usize,
    n: usize,
    /// Per coset `L_Z ⊖ j·1`: k-weight profiles and their multiplicities.
    tables: Vec<Vec<(Vec<u32>, TwoFloat)>>,
}

impl GeneralMap {
    pub fn new(code: &QrmCode) -> Result<Self> {
        let d = code.d() as usize;
        let n = code.n();
        let mut counts: BTreeMap<KWeightProfile, u64> = BTreeMap::new();
        for v in code.lz().span_iter(DEFAULT_SPAN_CUTOFF)? {
            *counts.entry(KWeightProfile::of(code.d(), &v)).or_default() += 1;
        }
        // v ⊖ j·1 holds symbol k wherever v holds k ⊕ j.
        let tables = (0..d)
            .map(|j| {
                counts
                    .iter()
                    .map(|(p, &c)| {
                        let shifted = (0..d).map(|k| p.counts()[(k + j) % d]).collect();
                        (shifted, TwoFloat::from(c as f64))
                    })
                    .collect()
            })
            .collect();
        Ok(Self { d, n, tables })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Unnormalized coset sums; their total is the success probability.
    pub fn numerators(&self, f: &[f64]) -> Vec<TwoFloat> {
        let powers: Vec<Vec<TwoFloat>> = f
            .iter()
            .map(|&x| {
                let x = TwoFloat::from(x);
                let mut p = Vec::with_capacity(self.n + 1);
                p.push(TwoFloat::from(1.0));
                for e in 1..=self.n {
                    let next = p[e - 1] * x;
                    p.push(next);
                }
                p
            })
            .collect();
        self.tables
            .iter()
            .map(|table| {
                let mut acc = TwoFloat::from(0.0);
                for (profile, mult) in table {
                    let mut term = *mult;
                    for (k, &c) in profile.iter().enumerate() {
                        if c > 0 {
                            term *= powers[k][c as usize];
                        }
                    }
                    acc += term;
                }
                acc
            })
            .collect()
    }

    pub fn iterate(&self, noise: &NoiseVector) -> Result<IterationResult> {
        if noise.d() != self.d {
            return Err(Error::DimensionMismatch(alloc::format!(
                "noise over {} symbols for a code with d = {}",
                noise.d(),
                self.d
            )));
        }
        let nums = self.numerators(noise.f());
        let p = nums.iter().fold(TwoFloat::from(0.0), |a, &b| a + b);
        if !(p.hi() > 0.0) {
            return Err(Error::Invalid("zero success probability".into()));
        }
        let err = nums[1..].iter().fold(TwoFloat::from(0.0), |a, &b| a + b);
        let f = nums.iter().map(|&x| f64::from(x / p)).collect();
        Ok(IterationResult {
            output: NoiseVector::from_parts_unchecked(f, noise.basis().flip()),
            success_probability: f64::from(p),
            epsilon_out: f64::from(err / p),
        })
    }

    /// `ε'` and `P` only.
    pub fn epsilon_and_probability(&self, f: &[f64]) -> (f64, f64) {
        let nums = self.numerators(f);
        let p = nums.iter().fold(TwoFloat::from(0.0), |a, &b| a + b);
        let err = nums[1..].iter().fold(TwoFloat::from(0.0), |a, &b| a + b);
        (f64::from(err / p), f64::from(p))
    }
}

/// One round of the general-noise map for `code`.
pub fn iterate_general(code: &QrmCode, noise: &NoiseVector) -> Result<IterationResult> {
    GeneralMap::new(code)?.iterate(noise)
}
