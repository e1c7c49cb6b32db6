//! First-order Reed-Muller codes over GF(d) and their shortened versions.
//!
//! Evaluation points are ordered by the base-d digits of their index, most
//! significant digit first: `a_0 = (0,..,0), a_1 = (0,..,0,1), ...`.

use alloc::vec::Vec;

use crate::field::{check_prime, GFVector};
use crate::{Error, LinearCode, Result};

/// Base-d digits of `j`, most significant first, padded to `m` digits.
pub fn point(d: u32, m: u32, j: usize) -> Vec<u32> {
    let mut digits = alloc::vec![0u32; m as usize];
    let mut x = j;
    for slot in digits.iter_mut().rev() {
        *slot = (x % d as usize) as u32;
        x /= d as usize;
    }
    digits
}

fn num_points(d: u32, m: u32) -> Result<usize> {
    crate::field::checked_pow(d, m)
        .and_then(|x| usize::try_from(x).ok())
        .filter(|&x| x <= 1 << 28)
        .ok_or(Error::Overflow("d^m evaluation points"))
}

/// The codeword `U(u) ⊕ c·1` of RM_d(1,m), or the codeword `P(u)` of the
/// shortened code RM*_d(1,m) when `shortened` is set (`c` is then ignored).
pub fn rm_codeword(d: u32, m: u32, u: &[u32], c: u32, shortened: bool) -> Result<GFVector> {
    check_prime(d)?;
    if u.len() != m as usize {
        return Err(Error::DimensionMismatch(alloc::format!(
            "coefficient vector of length {} for m = {m}",
            u.len()
        )));
    }
    let np = num_points(d, m)?;
    let first = usize::from(shortened);
    let c = if shortened { 0 } else { c % d };
    let entries = (first..np)
        .map(|j| {
            let a = point(d, m, j);
            let s: u64 = u.iter().zip(&a).map(|(&x, &y)| x as u64 * y as u64).sum();
            ((s + c as u64) % d as u64) as u32
        })
        .collect();
    Ok(GFVector::new_unchecked(d, entries))
}

/// RM_d(1,m) (length d^m, dimension m+1) or RM*_d(1,m) (length d^m − 1,
/// dimension m).
pub fn rm_code(d: u32, m: u32, shortened: bool) -> Result<LinearCode> {
    check_prime(d)?;
    if m == 0 {
        return Err(Error::Invalid("Reed-Muller codes need m >= 1".into()));
    }
    let np = num_points(d, m)?;
    let n = np - usize::from(shortened);
    let mut gens = Vec::with_capacity(m as usize + 1);
    for i in 0..m as usize {
        let mut u = alloc::vec![0u32; m as usize];
        u[i] = 1;
        gens.push(rm_codeword(d, m, &u, 0, shortened)?);
    }
    if !shortened {
        gens.push(GFVector::constant(d, n, 1));
    }
    LinearCode::from_generators(d, n, &gens)
}
