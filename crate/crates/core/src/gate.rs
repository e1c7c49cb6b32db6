//! Diagonal gates `M = Σ_j exp(i2πλ_j/d^m)|j⟩⟨j|` and the canonical
//! non-Clifford member of the set 𝓜_d^m.

use alloc::vec::Vec;

use crate::field::{check_prime, GFVector};
use crate::{Error, LinearCode, Result, DEFAULT_SPAN_CUTOFF};

/// A diagonal gate given by integer phase exponents over the denominator
/// `d^m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MagicGate {
    d: u32,
    m: u32,
    lambda: Vec<i64>,
}

fn binom(n: i128, k: u32) -> i128 {
    if n < k as i128 {
        return 0;
    }
    let mut acc: i128 = 1;
    for i in 0..k as i128 {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub(crate) fn modulus_of(d: u32, m: u32) -> Result<i64> {
    (d as i64)
        .checked_pow(m)
        .filter(|&x| x < 1 << 40)
        .ok_or(Error::Overflow("d^m"))
}

/// Whether 𝓜_d^m contains a non-Clifford gate: `d ≥ 5` with `m ≥ 1`, or
/// `d = 3` with `m ≥ 2`.
pub fn gate_exists(d: u32, m: u32) -> bool {
    crate::field::is_prime(d as u64) && m >= 1 && (d >= 5 || (d == 3 && m >= 2))
}

impl MagicGate {
    pub fn new(d: u32, m: u32, lambda: Vec<i64>) -> Result<Self> {
        check_prime(d)?;
        if m == 0 {
            return Err(Error::Invalid(
                "phase denominator exponent m must be >= 1".into(),
            ));
        }
        modulus_of(d, m)?;
        if lambda.len() != d as usize {
            return Err(Error::DimensionMismatch(alloc::format!(
                "{} phase exponents for d = {d}",
                lambda.len()
            )));
        }
        Ok(Self { d, m, lambda })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn lambda(&self) -> &[i64] {
        &self.lambda
    }

    /// `d^m`.
    pub fn denominator(&self) -> i64 {
        (self.d as i64).pow(self.m)
    }

    /// `λ_j` for `j` taken mod d.
    pub fn lambda_at(&self, j: u32) -> i64 {
        self.lambda[(j % self.d) as usize]
    }

    /// Eigenphase `2πλ_j/d^m`.
    pub fn phase(&self, j: u32) -> f64 {
        2.0 * core::f64::consts::PI * self.lambda_at(j) as f64 / self.denominator() as f64
    }

    /// `λ_{j⊕1} − λ_j` for `j ∈ [0, d)`, including the wrap at `j = d−1`.
    pub fn differences(&self) -> Vec<i64> {
        (0..self.d)
            .map(|j| self.lambda_at(j + 1) - self.lambda_at(j))
            .collect()
    }

    /// `M†`.
    pub fn dagger(&self) -> Self {
        Self {
            d: self.d,
            m: self.m,
            lambda: self.lambda.iter().map(|&x| -x).collect(),
        }
    }

    /// The same unitary viewed as an element of 𝓜_d^{m+1}.
    pub fn lift(&self) -> Self {
        let d = self.d as i64;
        Self {
            d: self.d,
            m: self.m + 1,
            lambda: self.lambda.iter().map(|&x| x * d).collect(),
        }
    }

    /// Exponents reduced to the symmetric range `(−d^m/2, d^m/2]`.
    pub fn symmetric_residues(&self) -> Vec<i64> {
        let q = self.denominator();
        self.lambda
            .iter()
            .map(|&x| {
                let r = x.rem_euclid(q);
                if 2 * r > q {
                    r - q
                } else {
                    r
                }
            })
            .collect()
    }
}

/// The canonical gate
/// `λ_j = d^{m−2}(d·C(j,3) − j·C(d,3) + C(d+1,4))`, evaluated exactly.
///
/// The exponents are kept as the exact integers of the formula, which sum to
/// zero over the integers.
pub fn canonical_gate(d: u32, m: u32) -> Result<MagicGate> {
    check_prime(d)?;
    if !gate_exists(d, m) {
        return Err(Error::EmptySet {
            d,
            m,
            reason: "every gate in this set is Clifford",
        });
    }
    modulus_of(d, m)?;
    let dd = d as i128;
    let lambda = (0..dd)
        .map(|j| {
            let num = dd * binom(j, 3) - j * binom(dd, 3) + binom(dd + 1, 4);
            let val = if m >= 2 {
                num * dd.pow(m - 2)
            } else if num % dd == 0 {
                num / dd
            } else {
                return Err(Error::Invalid(alloc::format!(
                    "non-integral canonical exponent {num}/{d}"
                )));
            };
            i64::try_from(val).map_err(|_| Error::Overflow("canonical exponent"))
        })
        .collect::<Result<Vec<_>>>()?;
    MagicGate::new(d, m, lambda)
}

/// The same gate from the recurrence form
/// `λ_j = d^{m−1}C(j,3) + j·c + λ_0` with `c = −d^{m−2}C(d,3)` and
/// `λ_0 = d^{m−2}C(d+1,4)`, reduced mod `d^m`.
pub fn canonical_gate_recurrence_form(d: u32, m: u32) -> Result<(Vec<i64>, i64, i64)> {
    check_prime(d)?;
    if !gate_exists(d, m) {
        return Err(Error::EmptySet {
            d,
            m,
            reason: "every gate in this set is Clifford",
        });
    }
    let q = modulus_of(d, m)? as i128;
    let dd = d as i128;
    let scaled = |x: i128| -> Result<i128> {
        if m >= 2 {
            Ok(x * dd.pow(m - 2))
        } else if x % dd == 0 {
            Ok(x / dd)
        } else {
            Err(Error::Invalid(alloc::format!(
                "non-integral constant {x}/{d}"
            )))
        }
    };
    let c = scaled(-binom(dd, 3))?;
    let l0 = scaled(binom(dd + 1, 4))?;
    let lambda = (0..dd)
        .map(|j| (dd.pow(m - 1) * binom(j, 3) + j * c + l0).rem_euclid(q) as i64)
        .collect();
    Ok((lambda, c as i64, l0 as i64))
}

/// Outcome of [`verify_membership`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipReport {
    /// Diagonal with integer exponents, so `M^{d^m} = 1`.
    pub integral: bool,
    /// `Σλ ≡ 0 mod d^m`.
    pub determinant_one: bool,
    /// `Σλ = 0` over the integers.
    pub sum_exactly_zero: bool,
    /// `λ_{j⊕1} − λ_j − d^{m−1}C(j,2)` is the constant `c`, when that
    /// recurrence holds.
    pub recurrence_constant: Option<i64>,
    /// The coefficients `(a, b)` of a quadratic phase
    /// `λ_{j⊕1} − λ_j ≡ d^{m−1}(a·C(j,2) + b·j) + c` when one exists, which
    /// makes `C_M = MXM†` a Clifford gate.
    pub quadratic_form: Option<(u32, u32)>,
    pub is_second_level: bool,
    pub is_clifford: bool,
    pub is_member: bool,
}

/// Checks the defining conditions of 𝓜_d^m. Failures are reported, not
/// raised.
pub fn verify_membership(gate: &MagicGate) -> MembershipReport {
    let d = gate.d as i64;
    let q = gate.denominator();
    let g = q / d;
    let sum: i64 = gate.lambda.iter().sum();
    let determinant_one = sum.rem_euclid(q) == 0;
    let diffs = gate.differences();
    let c2 = |j: i64| j * (j - 1) / 2;

    let fits = |a: i64, b: i64, quad: bool| -> bool {
        let c = diffs[0];
        diffs.iter().enumerate().all(|(j, &delta)| {
            let j = j as i64;
            let shape = if quad { a * c2(j) + b * j } else { a * j + b };
            (delta - g * shape - if quad { c } else { 0 }).rem_euclid(q) == 0
        })
    };

    let recurrence_constant = fits(1, 0, true).then_some(diffs[0]);
    let quadratic_form = (0..d)
        .flat_map(|a| (0..d).map(move |b| (a, b)))
        .find(|&(a, b)| fits(a, b, true))
        .map(|(a, b)| (a as u32, b as u32));
    let is_clifford = (0..d).any(|a| (0..d).any(|b| fits(a, b, false)));
    let is_second_level = quadratic_form.is_some();
    MembershipReport {
        integral: true,
        determinant_one,
        sum_exactly_zero: sum == 0,
        recurrence_constant,
        quadratic_form,
        is_second_level,
        is_clifford,
        is_member: determinant_one && is_second_level && !is_clifford,
    }
}

/// Every exponent vector in `Z_{d^m}^d` with `Σλ ≡ 0` that passes
/// [`verify_membership`]. Only feasible for tiny `(d, m)`.
pub fn exhaustive_members(d: u32, m: u32) -> Result<Vec<MagicGate>> {
    check_prime(d)?;
    let q = modulus_of(d, m)?;
    let total = (q as u128)
        .checked_pow(d - 1)
        .filter(|&t| t <= DEFAULT_SPAN_CUTOFF)
        .ok_or(Error::CutoffExceeded {
            size: u128::MAX,
            cutoff: DEFAULT_SPAN_CUTOFF,
        })?;
    let mut out = Vec::new();
    for idx in 0..total {
        let mut x = idx;
        let mut lambda = Vec::with_capacity(d as usize);
        for _ in 0..d - 1 {
            lambda.push((x % q as u128) as i64);
            x /= q as u128;
        }
        let s: i64 = lambda.iter().sum();
        lambda.push((-s).rem_euclid(q));
        let gate = MagicGate::new(d, m, lambda)?;
        if verify_membership(&gate).is_member {
            out.push(gate);
        }
    }
    Ok(out)
}

/// `Λ(v) = Σ_j λ_{v_j} mod d^m`.
pub fn lambda_eval(gate: &MagicGate, v: &GFVector) -> Result<i64> {
    if v.modulus() != gate.d {
        return Err(Error::DimensionMismatch(alloc::format!(
            "vector over GF({}) for a gate with d = {}",
            v.modulus(),
            gate.d
        )));
    }
    Ok(lambda_eval_slice(gate, v.entries()))
}

pub(crate) fn lambda_eval_slice(gate: &MagicGate, v: &[u32]) -> i64 {
    let s: i64 = v.iter().map(|&x| gate.lambda[x as usize]).sum();
    s.rem_euclid(gate.denominator())
}

/// First failure found by [`lemma_check`] or a transversality check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaViolation {
    pub codeword: GFVector,
    pub shift: u32,
    pub value: i64,
    pub expected: i64,
}

/// Checks `Λ(v) ≡ 0` on RM_d(1,m), or `Λ(v ⊕ c·1) ≡ −λ_c` on RM*_d(1,m) for
/// every shift `c` when `shortened` is set.
pub fn lemma_check(gate: &MagicGate, shortened: bool) -> Result<Option<LemmaViolation>> {
    let code = crate::reed_muller::rm_code(gate.d, gate.m, shortened)?;
    if shortened {
        shifted_lambda_check(gate, &code)
    } else {
        for v in code.span_iter(DEFAULT_SPAN_CUTOFF)? {
            let value = lambda_eval_slice(gate, &v);
            if value != 0 {
                return Ok(Some(LemmaViolation {
                    codeword: GFVector::new_unchecked(gate.d, v),
                    shift: 0,
                    value,
                    expected: 0,
                }));
            }
        }
        Ok(None)
    }
}

/// `Λ(v ⊕ c·1) ≡ −λ_c mod d^m` for all `v` in `code` and all `c`.
pub(crate) fn shifted_lambda_check(
    gate: &MagicGate,
    code: &LinearCode,
) -> Result<Option<LemmaViolation>> {
    let d = gate.d;
    let q = gate.denominator();
    let mut shifted = alloc::vec![0u32; code.length()];
    for v in code.span_iter(DEFAULT_SPAN_CUTOFF)? {
        for c in 0..d {
            for (s, &x) in shifted.iter_mut().zip(&v) {
                *s = (x + c) % d;
            }
            let value = lambda_eval_slice(gate, &shifted);
            let expected = (-gate.lambda_at(c)).rem_euclid(q);
            if value != expected {
                return Ok(Some(LemmaViolation {
                    codeword: GFVector::new_unchecked(d, v),
                    shift: c,
                    value,
                    expected,
                }));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_canonical_gates() {
        assert_eq!(canonical_gate(3, 2).unwrap().lambda(), &[1, 0, -1]);
        assert_eq!(canonical_gate(5, 1).unwrap().lambda(), &[3, 1, -1, -2, -1]);
    }

    #[test]
    fn septit_gate() {
        let g = canonical_gate(7, 1).unwrap();
        assert_eq!(g.lambda().iter().sum::<i64>(), 0);
        assert!(verify_membership(&g).is_member);
        assert!(verify_membership(&g.dagger()).is_member);
    }

    #[test]
    fn empty_sets() {
        assert!(matches!(canonical_gate(3, 1), Err(Error::EmptySet { .. })));
        assert!(matches!(canonical_gate(2, 3), Err(Error::EmptySet { .. })));
        assert!(exhaustive_members(3, 1).unwrap().is_empty());
    }

    #[test]
    fn ququint_report() {
        let r = verify_membership(&canonical_gate(5, 1).unwrap());
        assert!(r.is_member && r.sum_exactly_zero);
        assert_eq!(r.recurrence_constant, Some(-2));
        let (_, c, l0) = canonical_gate_recurrence_form(5, 1).unwrap();
        assert_eq!((c, l0), (-2, 3));
    }

    #[test]
    fn identity_is_clifford() {
        let r = verify_membership(&MagicGate::new(5, 1, alloc::vec![0; 5]).unwrap());
        assert!(r.determinant_one && r.is_clifford && !r.is_member);
    }

    #[test]
    fn lambda_sums() {
        let g = canonical_gate(3, 2).unwrap();
        assert_eq!(lambda_eval(&g, &GFVector::zeros(3, 5)).unwrap(), 5);
        let v = GFVector::new(3, [1, 2, 0, 1, 2, 0, 1, 2]).unwrap();
        // Two zeros, three ones, three twos: Λ(v) = −λ_0.
        assert_eq!(lambda_eval(&g, &v).unwrap(), 8);
        let g = canonical_gate(5, 1).unwrap();
        assert_eq!(
            lambda_eval(&g, &GFVector::new(5, [1, 2, 3, 4]).unwrap()).unwrap(),
            2
        );
    }

    #[test]
    fn dagger_values() {
        assert_eq!(
            canonical_gate(5, 1).unwrap().dagger().lambda(),
            &[-3, -1, 1, 2, 1]
        );
        assert_eq!(canonical_gate(3, 2).unwrap().dagger().lambda(), &[-1, 0, 1]);
    }

    #[test]
    fn rm_phase_sums() {
        assert_eq!(
            lemma_check(&canonical_gate(3, 2).unwrap(), true).unwrap(),
            None
        );
        assert_eq!(
            lemma_check(&canonical_gate(5, 1).unwrap(), false).unwrap(),
            None
        );
        let control = MagicGate::new(5, 1, alloc::vec![1, 0, 0, 0, 0]).unwrap();
        assert!(lemma_check(&control, true).unwrap().is_some());
    }
}
