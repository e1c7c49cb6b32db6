use num_rational::Ratio;
use twofloat::TwoFloat;

use super::noise::{depolarizing_noise, Basis, IterationResult};
use crate::field::check_prime;
use crate::{Error, Result};

/// Whether the closed-form depolarizing map applies to `QRM_d(m)`.
pub fn closed_form_valid(d: u32, m: u32) -> bool {
    crate::field::is_prime(d as u64) && m >= 1 && (d, m) != (2, 1)
}

/// The depolarizing-noise map of `QRM_d(m)` from the closed-form weight
/// enumerators. With `t = 1 − dε/(d−1)` and `n = d^m − 1`:
///
/// `P = W_LX(t)/d^m`, `f'_0 = W_LX'(t)/(d·W_LX(t))`.
#[derive(Clone, Copy, Debug)]
pub struct DepolarizingMap {
    d: u32,
    n: i32,
    /// `d^m − d^{m−1}`, the weight of every nonzero codeword of `L_X`.
    a: i32,
    dm: f64,
}

impl DepolarizingMap {
    pub fn new(d: u32, m: u32) -> Result<Self> {
        check_prime(d)?;
        if !closed_form_valid(d, m) {
            return Err(Error::Invalid(alloc::format!(
                "no closed form for d = {d}, m = {m}"
            )));
        }
        let dm = (d as i64).checked_pow(m).filter(|&x| x < i32::MAX as i64);
        let dm = dm.ok_or(Error::Overflow("d^m"))?;
        Ok(Self {
            d,
            n: (dm - 1) as i32,
            a: (dm - dm / d as i64) as i32,
            dm: dm as f64,
        })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Largest admissible input error, `(d−1)/d` (exclusive).
    pub fn max_epsilon(&self) -> f64 {
        (self.d - 1) as f64 / self.d as f64
    }

    /// `(ε', P)` at input error `ε`.
    pub fn eval(&self, epsilon: f64) -> Result<(f64, f64)> {
        if !(epsilon >= 0.0 && epsilon < self.max_epsilon()) {
            return Err(Error::Domain {
                what: "epsilon",
                value: epsilon,
                domain: "[0, (d-1)/d)",
            });
        }
        let d = TwoFloat::from(self.d as f64);
        let one = TwoFloat::from(1.0);
        let t = one - d * TwoFloat::from(epsilon) / TwoFloat::from((self.d - 1) as f64);
        let n = TwoFloat::from(self.n as f64);
        let ta1 = t.powi(self.a - 1);
        let ta = ta1 * t;
        let tn = t.powi(self.n);
        let w = one + n * ta;
        // d·W_LX − W_LX' = (d−1)(1 + n t^a − t^n − n t^{a−1})
        let num = TwoFloat::from((self.d - 1) as f64) * (w - tn - n * ta1);
        let eps_out = num / (d * w);
        let p = w / TwoFloat::from(self.dm);
        Ok((f64::from(eps_out), f64::from(p)))
    }
}

/// One round on depolarizing input; the output is reported as depolarizing
/// noise at the computed `ε'`.
pub fn iterate_depolarizing(d: u32, m: u32, epsilon: f64) -> Result<IterationResult> {
    let (eps_out, p) = DepolarizingMap::new(d, m)?.eval(epsilon)?;
    Ok(IterationResult {
        output: depolarizing_noise(d, eps_out)?.with_basis(Basis::MDagger),
        success_probability: p,
        epsilon_out: eps_out,
    })
}

/// Leading coefficient of `ε' ≈ Cε²`: `(d^m−1)(d−2)/(2(d−1))`.
pub fn taylor_coefficient(d: u32, m: u32) -> Result<Ratio<i64>> {
    check_prime(d)?;
    let dm = (d as i64).checked_pow(m).ok_or(Error::Overflow("d^m"))?;
    Ok(Ratio::new((dm - 1) * (d as i64 - 2), 2 * (d as i64 - 1)))
}

/// Yield scaling exponent `γ* = log_D(d^m − 1)` with the design distance
/// `D` (3 for qubits, 2 otherwise).
pub fn gamma_star(d: u32, m: u32) -> Result<f64> {
    check_prime(d)?;
    let n = libm::pow(d as f64, m as f64) - 1.0;
    Ok(libm::log(n) / libm::log(crate::qrm::design_distance(d) as f64))
}
