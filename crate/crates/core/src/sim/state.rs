use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::field::GFVector;
use crate::{Complex, Error, MagicGate, QrmCode, Result, DEFAULT_SPAN_CUTOFF};

/// Largest number of amplitudes the simulator will allocate.
pub const MAX_AMPLITUDES: u128 = 1 << 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PauliKind {
    X,
    Z,
}

/// Amplitudes of an `n`-qudit state in the computational basis.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    d: u32,
    n: usize,
    amps: Vec<Complex>,
}

pub(crate) fn root(k: i64, q: i64) -> Complex {
    let a = 2.0 * PI * k.rem_euclid(q) as f64 / q as f64;
    Complex::new(libm::cos(a), libm::sin(a))
}

pub(crate) fn roots(q: i64) -> Vec<Complex> {
    (0..q).map(|k| root(k, q)).collect()
}

pub(crate) fn checked_dim(d: u32, n: usize) -> Result<usize> {
    let size = crate::field::checked_pow(d, n as u32).unwrap_or(u128::MAX);
    if size > MAX_AMPLITUDES {
        return Err(Error::SizeExceeded {
            size,
            limit: MAX_AMPLITUDES,
        });
    }
    Ok(size as usize)
}

/// Base-d digits of `idx`, qudit 0 first.
pub(crate) fn digits_into(d: u32, idx: usize, out: &mut [u32]) {
    let mut x = idx;
    for slot in out.iter_mut().rev() {
        *slot = (x % d as usize) as u32;
        x /= d as usize;
    }
}

pub(crate) fn index_of(d: u32, digits: &[u32]) -> usize {
    digits
        .iter()
        .fold(0usize, |acc, &x| acc * d as usize + x as usize)
}

impl StateVector {
    pub fn zeros(d: u32, n: usize) -> Result<Self> {
        let dim = checked_dim(d, n)?;
        Ok(Self {
            d,
            n,
            amps: alloc::vec![Complex::new(0.0, 0.0); dim],
        })
    }

    pub fn from_amplitudes(d: u32, n: usize, amps: Vec<Complex>) -> Result<Self> {
        let dim = checked_dim(d, n)?;
        if amps.len() != dim {
            return Err(Error::DimensionMismatch(alloc::format!(
                "{} amplitudes for {n} qudits of dimension {d}",
                amps.len()
            )));
        }
        Ok(Self { d, n, amps })
    }

    /// The computational basis state `|x⟩`.
    pub fn basis(d: u32, x: &[u32]) -> Result<Self> {
        let mut s = Self::zeros(d, x.len())?;
        s.amps[index_of(d, x)] = Complex::new(1.0, 0.0);
        Ok(s)
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex] {
        &self.amps
    }

    pub fn amplitude(&self, x: &[u32]) -> Complex {
        self.amps[index_of(self.d, x)]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn normalized(&self) -> Self {
        let s = libm::sqrt(self.norm_sqr());
        let mut out = self.clone();
        if s > 0.0 {
            out.amps.iter_mut().for_each(|a| *a /= s);
        }
        out
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &Self) -> Complex {
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn scale(&self, c: Complex) -> Self {
        Self {
            d: self.d,
            n: self.n,
            amps: self.amps.iter().map(|a| a * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            d: self.d,
            n: self.n,
            amps: self
                .amps
                .iter()
                .zip(&other.amps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// `‖self − other‖`.
    pub fn distance(&self, other: &Self) -> f64 {
        libm::sqrt(
            self.amps
                .iter()
                .zip(&other.amps)
                .map(|(a, b)| (a - b).norm_sqr())
                .sum(),
        )
    }

    /// `1 − |⟨a|b⟩|/(‖a‖‖b‖)`, zero iff equal up to a global phase and scale.
    pub fn phase_insensitive_distance(&self, other: &Self) -> f64 {
        let na = libm::sqrt(self.norm_sqr());
        let nb = libm::sqrt(other.norm_sqr());
        if na == 0.0 || nb == 0.0 {
            return if na == nb { 0.0 } else { 1.0 };
        }
        1.0 - self.inner(other).norm() / (na * nb)
    }

    /// Applies `f(digits, amplitude)` to produce a new amplitude per index.
    pub(crate) fn map_digits<F>(&self, mut f: F) -> Self
    where
        F: FnMut(&[u32], Complex) -> Complex,
    {
        let mut digits = alloc::vec![0u32; self.n];
        let amps = self
            .amps
            .iter()
            .enumerate()
            .map(|(i, &a)| {
                digits_into(self.d, i, &mut digits);
                f(&digits, a)
            })
            .collect();
        Self {
            d: self.d,
            n: self.n,
            amps,
        }
    }

    /// `|x⟩ → |π(x)⟩` with the amplitude multiplied by `phase(x)`.
    pub(crate) fn permute_digits<F>(&self, mut f: F) -> Self
    where
        F: FnMut(&[u32], &mut [u32]) -> Complex,
    {
        let mut digits = alloc::vec![0u32; self.n];
        let mut target = alloc::vec![0u32; self.n];
        let mut amps = alloc::vec![Complex::new(0.0, 0.0); self.amps.len()];
        for (i, &a) in self.amps.iter().enumerate() {
            if a == Complex::new(0.0, 0.0) {
                continue;
            }
            digits_into(self.d, i, &mut digits);
            let phase = f(&digits, &mut target);
            amps[index_of(self.d, &target)] += a * phase;
        }
        Self {
            d: self.d,
            n: self.n,
            amps,
        }
    }
}

/// `|+_v⟩ = ⊗_i d^{−1/2} Σ_t ω^{−v_i t}|t⟩`.
pub fn plus_basis_state(d: u32, n: usize, v: &GFVector) -> Result<StateVector> {
    if v.modulus() != d || v.len() != n {
        return Err(Error::DimensionMismatch("plus-state label".into()));
    }
    let w = roots(d as i64);
    let norm = libm::pow(d as f64, -(n as f64) / 2.0);
    let s = StateVector::zeros(d, n)?;
    Ok(s.map_digits(|x, _| {
        let e: u64 = x
            .iter()
            .zip(v.entries())
            .map(|(&a, &b)| a as u64 * b as u64)
            .sum();
        w[((d as u64 - e % d as u64) % d as u64) as usize] * norm
    }))
}

/// `X[u]|x⟩ = |x ⊕ u⟩`, `Z[u]|x⟩ = ω^{⟨u,x⟩}|x⟩`.
pub fn apply_pauli(state: &StateVector, kind: PauliKind, u: &GFVector) -> Result<StateVector> {
    let d = state.d;
    if u.modulus() != d || u.len() != state.n {
        return Err(Error::DimensionMismatch("Pauli label".into()));
    }
    let u = u.entries();
    Ok(match kind {
        PauliKind::X => state.permute_digits(|x, t| {
            for ((ti, &xi), &ui) in t.iter_mut().zip(x).zip(u) {
                *ti = (xi + ui) % d;
            }
            Complex::new(1.0, 0.0)
        }),
        PauliKind::Z => {
            let w = roots(d as i64);
            state.map_digits(|x, a| {
                let e: u64 = x.iter().zip(u).map(|(&p, &q)| p as u64 * q as u64).sum();
                a * w[(e % d as u64) as usize]
            })
        }
    })
}

/// `⊗_i M^{p_i}`: phase `exp(i2π Σ_i p_i λ_{x_i}/d^m)` on `|x⟩`.
pub fn apply_transversal_diagonal(
    state: &StateVector,
    gate: &MagicGate,
    powers: &GFVector,
) -> Result<StateVector> {
    if gate.d() != state.d || powers.len() != state.n {
        return Err(Error::DimensionMismatch("transversal gate".into()));
    }
    let q = gate.denominator();
    let p = powers.entries();
    Ok(state.map_digits(|x, a| {
        let e: i64 = x
            .iter()
            .zip(p)
            .map(|(&xi, &pi)| pi as i64 * gate.lambda_at(xi))
            .sum();
        a * root(e, q)
    }))
}

/// `C_M[w] = ⊗_i (MXM†)^{w_i}`: `|x⟩ → exp(i2π Σ_i (λ_{x_i+w_i} − λ_{x_i})/d^m)|x ⊕ w⟩`.
pub fn apply_cm(state: &StateVector, gate: &MagicGate, w: &GFVector) -> Result<StateVector> {
    let d = state.d;
    if gate.d() != d || w.len() != state.n {
        return Err(Error::DimensionMismatch("Clifford correction".into()));
    }
    let q = gate.denominator();
    let w = w.entries();
    Ok(state.permute_digits(|x, t| {
        let mut e = 0i64;
        for ((ti, &xi), &wi) in t.iter_mut().zip(x).zip(w) {
            *ti = (xi + wi) % d;
            e += gate.lambda_at(*ti) - gate.lambda_at(xi);
        }
        root(e, q)
    }))
}

/// `|j_L⟩ = |L_X|^{−1/2} Σ_{u ∈ L_X} |u ⊕ j·1⟩`.
pub fn logical_basis_state(code: &QrmCode, j: u32) -> Result<StateVector> {
    let d = code.d();
    let mut s = StateVector::zeros(d, code.n())?;
    let words: Vec<Vec<u32>> = code.lx().span_iter(DEFAULT_SPAN_CUTOFF)?.collect();
    let amp = 1.0 / libm::sqrt(words.len() as f64);
    for u in words {
        let x: Vec<u32> = u.iter().map(|&a| (a + j) % d).collect();
        s.amps[index_of(d, &x)] += Complex::new(amp, 0.0);
    }
    Ok(s)
}

/// `|+^L_j⟩ = d^{−1/2} Σ_t ω^{−jt}|t_L⟩`.
pub fn logical_plus_state(code: &QrmCode, j: u32) -> Result<StateVector> {
    let d = code.d();
    let mut acc = StateVector::zeros(d, code.n())?;
    let inv = 1.0 / libm::sqrt(d as f64);
    for t in 0..d {
        let phase = root(-((j as i64 * t as i64) % d as i64), d as i64) * inv;
        acc = acc.add(&logical_basis_state(code, t)?.scale(phase));
    }
    Ok(acc)
}

/// `⟨j_L|ψ⟩` for `j ∈ [0, d)`.
pub fn logical_amplitudes(state: &StateVector, code: &QrmCode) -> Result<Vec<Complex>> {
    if state.d != code.d() || state.n != code.n() {
        return Err(Error::DimensionMismatch(
            "state does not match the code".into(),
        ));
    }
    let d = code.d();
    let words: Vec<Vec<u32>> = code.lx().span_iter(DEFAULT_SPAN_CUTOFF)?.collect();
    let amp = 1.0 / libm::sqrt(words.len() as f64);
    Ok((0..d)
        .map(|j| {
            words
                .iter()
                .map(|u| {
                    let x: Vec<u32> = u.iter().map(|&a| (a + j) % d).collect();
                    state.amps[index_of(d, &x)]
                })
                .sum::<Complex>()
                * amp
        })
        .collect())
}
