//! Hamming and k-weight statistics, weight enumerators and the MacWilliams
//! transform, in exact integer arithmetic.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::field::{check_prime, GFVector};
use crate::{Error, LinearCode, Result, DEFAULT_SPAN_CUTOFF};

/// Number of occurrences of each symbol `k ∈ [0, d)` in a vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KWeightProfile {
    counts: Vec<u32>,
}

impl KWeightProfile {
    pub fn of(d: u32, entries: &[u32]) -> Self {
        let mut counts = alloc::vec![0u32; d as usize];
        for &e in entries {
            counts[e as usize] += 1;
        }
        Self { counts }
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn count(&self, k: u32) -> u32 {
        self.counts[k as usize]
    }

    pub fn total(&self) -> u32 {
        self.counts.iter().sum()
    }
}

/// Hamming weight and k-weight profile of `v`.
pub fn weights(v: &GFVector) -> (usize, KWeightProfile) {
    let profile = KWeightProfile::of(v.modulus(), v.entries());
    (v.len() - profile.count(0) as usize, profile)
}

/// `W(x) = Σ_w A_w x^w` with exact counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightEnumerator {
    modulus: u32,
    length: usize,
    coefficients: BTreeMap<usize, BigUint>,
}

impl WeightEnumerator {
    /// Zero coefficients are dropped.
    pub fn new(
        d: u32,
        n: usize,
        coefficients: impl IntoIterator<Item = (usize, BigUint)>,
    ) -> Result<Self> {
        check_prime(d)?;
        let mut map = BTreeMap::new();
        for (w, a) in coefficients {
            if w > n {
                return Err(Error::Invalid(alloc::format!(
                    "weight {w} exceeds length {n}"
                )));
            }
            if !a.is_zero() {
                *map.entry(w).or_insert_with(BigUint::zero) += a;
            }
        }
        Ok(Self {
            modulus: d,
            length: n,
            coefficients: map,
        })
    }

    pub fn from_u64(d: u32, n: usize, coefficients: &[(usize, u64)]) -> Result<Self> {
        Self::new(
            d,
            n,
            coefficients.iter().map(|&(w, a)| (w, BigUint::from(a))),
        )
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn coefficients(&self) -> &BTreeMap<usize, BigUint> {
        &self.coefficients
    }

    pub fn coefficient(&self, w: usize) -> BigUint {
        self.coefficients.get(&w).cloned().unwrap_or_default()
    }

    /// Number of codewords, `Σ_w A_w`.
    pub fn total(&self) -> BigUint {
        self.coefficients.values().sum()
    }

    /// `W(x)` in floating point.
    pub fn eval(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coefficients
            .iter()
            .map(|(&w, a)| a.to_f64().unwrap_or(f64::INFINITY) * libm::pow(x, w as f64))
            .sum()
    }

    /// Coefficients as `(weight, count)` pairs in f64.
    pub fn terms_f64(&self) -> Vec<(usize, f64)> {
        use num_traits::ToPrimitive;
        self.coefficients
            .iter()
            .map(|(&w, a)| (w, a.to_f64().unwrap_or(f64::INFINITY)))
            .collect()
    }
}

/// Histogram of Hamming weights over the span of `code`.
pub fn weight_enumerator_bruteforce(code: &LinearCode) -> Result<WeightEnumerator> {
    let mut hist = alloc::vec![0u64; code.length() + 1];
    for w in code.span_iter(DEFAULT_SPAN_CUTOFF)? {
        hist[w.iter().filter(|&&x| x != 0).count()] += 1;
    }
    WeightEnumerator::new(
        code.modulus(),
        code.length(),
        hist.into_iter()
            .enumerate()
            .map(|(w, a)| (w, BigUint::from(a))),
    )
}

/// Enumerator of the dual of a `dim`-dimensional code with enumerator `w`:
/// `W⊥(μ) = d^{-dim} [1+(d−1)μ]^n W((1−μ)/(1+(d−1)μ))`.
pub fn macwilliams_transform(w: &WeightEnumerator, dim: usize) -> Result<WeightEnumerator> {
    let d = w.modulus;
    let n = w.length;
    let one_minus = [BigInt::one(), -BigInt::one()];
    let one_plus = [BigInt::one(), BigInt::from(d - 1)];
    let pow_a = powers(&one_minus, n);
    let pow_b = powers(&one_plus, n);
    let mut acc = alloc::vec![BigInt::zero(); n + 1];
    for (&wt, a) in &w.coefficients {
        let term = poly_mul(&pow_a[wt], &pow_b[n - wt]);
        let a = BigInt::from_biguint(Sign::Plus, a.clone());
        for (x, t) in acc.iter_mut().zip(term) {
            *x += &a * t;
        }
    }
    let denom = BigInt::from(d).pow(dim as u32);
    let mut out = Vec::with_capacity(n + 1);
    for (wt, x) in acc.into_iter().enumerate() {
        let (q, r) = x.div_rem(&denom);
        if !r.is_zero() || q.sign() == Sign::Minus {
            return Err(Error::NonIntegerResult { weight: wt });
        }
        out.push((wt, q.to_biguint().unwrap_or_default()));
    }
    WeightEnumerator::new(d, n, out)
}

fn powers(p: &[BigInt], n: usize) -> Vec<Vec<BigInt>> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(alloc::vec![BigInt::one()]);
    for k in 1..=n {
        let next = poly_mul(&out[k - 1], p);
        out.push(next);
    }
    out
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = alloc::vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Closed-form enumerators of `L_X = RM*_d(1,m)` and `L_X' = span(L_X, 1)`:
///
/// `W_LX = 1 + n x^{d^m − d^{m−1}}`,
/// `W_LX' = W_LX + (d−1)[x^n + n x^{n − d^{m−1}}]`, with `n = d^m − 1`.
///
/// The qubit case `(2, 1)` is degenerate (`1` already lies in `L_X`) and is
/// rejected.
pub fn closed_form_enumerators(d: u32, m: u32) -> Result<(WeightEnumerator, WeightEnumerator)> {
    check_prime(d)?;
    if m == 0 || (d, m) == (2, 1) {
        return Err(Error::Invalid(alloc::format!(
            "no closed form for d = {d}, m = {m}"
        )));
    }
    let dm = BigUint::from(d).pow(m);
    let dm1 = BigUint::from(d).pow(m - 1);
    let n_big = &dm - 1u32;
    let n: usize = usize::try_from(&n_big).map_err(|_| Error::Overflow("code length"))?;
    let step: usize = usize::try_from(&dm1).map_err(|_| Error::Overflow("code length"))?;
    let wx = WeightEnumerator::new(d, n, [(0, BigUint::one()), (n + 1 - step, n_big.clone())])?;
    let extra = [
        (n, BigUint::from(d - 1)),
        (n - step, BigUint::from(d - 1) * &n_big),
    ];
    let wxp = WeightEnumerator::new(d, n, wx.coefficients.clone().into_iter().chain(extra))?;
    Ok((wx, wxp))
}
