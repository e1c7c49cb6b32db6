//! Arithmetic over the prime field GF(d) and vectors in GF(d)^n.

use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Deterministic primality test by trial division.
pub fn is_prime(d: u64) -> bool {
    if d < 2 {
        return false;
    }
    let mut p = 2u64;
    while p * p <= d {
        if d % p == 0 {
            return false;
        }
        p += 1;
    }
    true
}

pub(crate) fn check_prime(d: u32) -> Result<()> {
    if is_prime(d as u64) {
        Ok(())
    } else {
        Err(Error::NotPrime(d as u64))
    }
}

/// Multiplicative inverse of a nonzero residue modulo the prime `d`.
pub fn inv_mod(a: u32, d: u32) -> u32 {
    debug_assert!(a % d != 0);
    pow_mod(a, d - 2, d)
}

pub fn pow_mod(mut base: u32, mut exp: u32, d: u32) -> u32 {
    let m = d as u64;
    let mut acc = 1u64 % m;
    let mut b = base as u64 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    base = acc as u32;
    base
}

/// `d^k` as u128, or `None` on overflow.
pub fn checked_pow(d: u32, k: u32) -> Option<u128> {
    (d as u128).checked_pow(k)
}

/// A vector over GF(d).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GFVector {
    modulus: u32,
    entries: Vec<u32>,
}

impl GFVector {
    /// Builds a vector, reducing every entry modulo `d`.
    pub fn new(d: u32, entries: impl IntoIterator<Item = u32>) -> Result<Self> {
        check_prime(d)?;
        Ok(Self::new_unchecked(
            d,
            entries.into_iter().map(|e| e % d).collect(),
        ))
    }

    /// Builds a vector from signed representatives.
    pub fn from_signed(d: u32, entries: impl IntoIterator<Item = i64>) -> Result<Self> {
        check_prime(d)?;
        let m = d as i64;
        Ok(Self::new_unchecked(
            d,
            entries
                .into_iter()
                .map(|e| e.rem_euclid(m) as u32)
                .collect(),
        ))
    }

    pub(crate) fn new_unchecked(modulus: u32, entries: Vec<u32>) -> Self {
        debug_assert!(entries.iter().all(|&e| e < modulus));
        Self { modulus, entries }
    }

    pub fn zeros(d: u32, n: usize) -> Self {
        Self::new_unchecked(d, alloc::vec![0; n])
    }

    /// The vector `c·1 = (c, c, ..., c)`.
    pub fn constant(d: u32, n: usize, c: u32) -> Self {
        Self::new_unchecked(d, alloc::vec![c % d; n])
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// `⟨u, v⟩ mod d`.
    pub fn dot(&self, other: &Self) -> u32 {
        debug_assert_eq!(self.len(), other.len());
        dot_mod(&self.entries, &other.entries, self.modulus)
    }

    /// `self ⊕ other`.
    pub fn add(&self, other: &Self) -> Self {
        let d = self.modulus;
        Self::new_unchecked(
            d,
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| (a + b) % d)
                .collect(),
        )
    }

    /// `self ⊕ c·1`.
    pub fn shift(&self, c: u32) -> Self {
        let d = self.modulus;
        Self::new_unchecked(d, self.entries.iter().map(|a| (a + c) % d).collect())
    }

    pub fn scale(&self, c: u32) -> Self {
        let d = self.modulus as u64;
        Self::new_unchecked(
            self.modulus,
            self.entries
                .iter()
                .map(|&a| (a as u64 * c as u64 % d) as u32)
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        self.scale(self.modulus - 1)
    }

    /// Number of nonzero entries.
    pub fn hamming_weight(&self) -> usize {
        self.entries.iter().filter(|&&e| e != 0).count()
    }

    /// Concatenation `self ∥ other`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Self::new_unchecked(self.modulus, entries)
    }
}

impl fmt::Debug for GFVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF{}{:?}", self.modulus, self.entries)
    }
}

pub(crate) fn dot_mod(a: &[u32], b: &[u32], d: u32) -> u32 {
    let s: u64 = a.iter().zip(b).map(|(&x, &y)| x as u64 * y as u64).sum();
    (s % d as u64) as u32
}
