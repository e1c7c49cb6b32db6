//! State injection of a diagonal gate `M` from a (noisy) `|M_0⟩` resource.
//!
//! The joint register is indexed `a·d + j` with the resource first. The
//! `Z ⊗ Z†` measurement has outcome `k = a − j`; decoding maps
//! `|a, j⟩ → |a − j, j⟩`, the resource register is traced out and the branch
//! is corrected with the Clifford `V_k = C_M^{−k} X^k`.

use alloc::vec::Vec;

use nalgebra::{DMatrix, DVector};

use crate::sim::{cm_matrix, gate_matrix, magic_state};
use crate::{Complex, Error, MagicGate, Result};

const HERMITIAN_TOL: f64 = 1e-12;
const TRACE_TOL: f64 = 1e-12;
const PSD_TOL: f64 = 1e-10;

fn c(re: f64) -> Complex {
    Complex::new(re, 0.0)
}

/// `X|j⟩ = |j + 1⟩`.
pub fn shift_matrix(d: usize) -> DMatrix<Complex> {
    DMatrix::from_fn(d, d, |i, j| if i == (j + 1) % d { c(1.0) } else { c(0.0) })
}

/// `Z|j⟩ = ω^j|j⟩`.
pub fn clock_matrix(d: usize) -> DMatrix<Complex> {
    DMatrix::from_fn(d, d, |i, j| {
        if i == j {
            let a = 2.0 * core::f64::consts::PI * i as f64 / d as f64;
            Complex::new(libm::cos(a), libm::sin(a))
        } else {
            c(0.0)
        }
    })
}

fn matrix_power(m: &DMatrix<Complex>, k: usize) -> DMatrix<Complex> {
    let mut out = DMatrix::identity(m.nrows(), m.ncols());
    for _ in 0..k {
        out = &out * m;
    }
    out
}

/// Equatorial state `d^{−1/2} Σ_j e^{iθ_j}|j⟩`.
#[derive(Clone, Debug, PartialEq)]
pub struct PhaseState {
    theta: Vec<f64>,
}

impl PhaseState {
    pub fn new(theta: Vec<f64>) -> Self {
        Self { theta }
    }

    pub fn theta(&self) -> &[f64] {
        &self.theta
    }

    pub fn d(&self) -> usize {
        self.theta.len()
    }

    pub fn state(&self) -> DVector<Complex> {
        let s = 1.0 / libm::sqrt(self.d() as f64);
        DVector::from_iterator(
            self.d(),
            self.theta
                .iter()
                .map(|&t| Complex::new(libm::cos(t), libm::sin(t)) * s),
        )
    }

    /// `U_k(Θ) = Σ_j e^{iθ_{j+k}}|j⟩⟨j|`.
    pub fn unitary(&self, k: usize) -> DMatrix<Complex> {
        let d = self.d();
        DMatrix::from_fn(d, d, |i, j| {
            if i == j {
                let t = self.theta[(j + k) % d];
                Complex::new(libm::cos(t), libm::sin(t))
            } else {
                c(0.0)
            }
        })
    }
}

/// `θ_j = 2πλ_j/d^m`.
pub fn phase_state_of(gate: &MagicGate) -> PhaseState {
    PhaseState::new((0..gate.d()).map(|j| gate.phase(j)).collect())
}

/// Hermitian, unit-trace, positive semidefinite matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    m: DMatrix<Complex>,
}

impl DensityMatrix {
    pub fn new(m: DMatrix<Complex>) -> Result<Self> {
        if !m.is_square() || m.nrows() == 0 {
            return Err(Error::DimensionMismatch(
                "density matrix must be square".into(),
            ));
        }
        let herm = (&m - m.adjoint())
            .iter()
            .fold(0.0f64, |a, z| a.max(z.norm()));
        if herm > HERMITIAN_TOL {
            return Err(Error::Invalid("density matrix is not Hermitian".into()));
        }
        let tr = m.trace();
        if (tr.re - 1.0).abs() > TRACE_TOL || tr.im.abs() > TRACE_TOL {
            return Err(Error::Domain {
                what: "trace",
                value: tr.re,
                domain: "{1}",
            });
        }
        let min = m
            .clone()
            .symmetric_eigenvalues()
            .iter()
            .fold(f64::INFINITY, |a, &x| a.min(x));
        if min < -PSD_TOL {
            return Err(Error::Domain {
                what: "eigenvalue",
                value: min,
                domain: "[0, 1]",
            });
        }
        Ok(Self { m })
    }

    pub(crate) fn from_matrix_unchecked(m: DMatrix<Complex>) -> Self {
        Self { m }
    }

    /// `|ψ⟩⟨ψ|` for `ψ` normalized here.
    pub fn pure(psi: &DVector<Complex>) -> Result<Self> {
        let n = psi.norm();
        if !(n > 0.0) {
            return Err(Error::Invalid("zero state vector".into()));
        }
        let v = psi / c(n);
        Ok(Self {
            m: &v * v.adjoint(),
        })
    }

    pub fn maximally_mixed(d: usize) -> Self {
        Self {
            m: DMatrix::identity(d, d) / c(d as f64),
        }
    }

    /// `(1 − p)ρ + pσ`.
    pub fn mix(&self, other: &Self, p: f64) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(
                "density matrix sizes differ".into(),
            ));
        }
        Ok(Self {
            m: &self.m * c(1.0 - p) + &other.m * c(p),
        })
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex> {
        &self.m
    }

    pub fn trace(&self) -> Complex {
        self.m.trace()
    }

    /// `⟨ψ|ρ|ψ⟩`.
    pub fn expectation(&self, psi: &DVector<Complex>) -> f64 {
        (psi.adjoint() * &self.m * psi)[(0, 0)].re
    }

    /// `UρU†`.
    pub fn conjugate(&self, u: &DMatrix<Complex>) -> Self {
        Self {
            m: u * &self.m * u.adjoint(),
        }
    }

    pub fn kron(&self, other: &Self) -> Self {
        Self {
            m: self.m.kronecker(&other.m),
        }
    }
}

/// `‖A‖₁`, the sum of singular values.
pub fn trace_norm(a: &DMatrix<Complex>) -> f64 {
    a.clone().singular_values().iter().sum()
}

/// `‖ρ − σ‖₁`.
pub fn trace_distance(a: &DensityMatrix, b: &DensityMatrix) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch(
            "density matrix sizes differ".into(),
        ));
    }
    Ok(trace_norm(&(&a.m - &b.m)))
}

/// `(1/d) Σ_k C_M^k σ C_M^{−k}`.
pub fn twirl(gate: &MagicGate, sigma: &DensityMatrix) -> DensityMatrix {
    let d = gate.d() as usize;
    let cm = cm_matrix(gate);
    let mut acc = DMatrix::zeros(d, d);
    let mut p = DMatrix::identity(d, d);
    for _ in 0..d {
        acc += &p * &sigma.m * p.adjoint();
        p = &cm * p;
    }
    DensityMatrix {
        m: acc / c(d as f64),
    }
}

/// `1 − ⟨M_0|σ|M_0⟩`.
pub fn resource_error(gate: &MagicGate, sigma: &DensityMatrix) -> f64 {
    1.0 - sigma.expectation(&magic_state(gate, 0))
}

/// Branch-resolved result of one injection.
#[derive(Clone, Debug)]
pub struct InjectionOutcome {
    pub output: DensityMatrix,
    /// Probability of each `Z ⊗ Z†` outcome.
    pub branch_probabilities: Vec<f64>,
}

/// Correction `V_k = C_M^{−k} X^k` applied after outcome `k`.
pub fn correction_unitary(gate: &MagicGate, k: usize) -> DMatrix<Complex> {
    let d = gate.d() as usize;
    let inv = cm_matrix(gate).adjoint();
    matrix_power(&inv, k % d) * matrix_power(&shift_matrix(d), k % d)
}

fn check_dims(gate: &MagicGate, sigma: &DensityMatrix, rho: &DensityMatrix) -> Result<usize> {
    let d = gate.d() as usize;
    if sigma.dim() != d || rho.dim() != d {
        return Err(Error::DimensionMismatch(alloc::format!(
            "expected {d}x{d} density matrices, got {} and {}",
            sigma.dim(),
            rho.dim()
        )));
    }
    Ok(d)
}

/// Runs the gadget on `σ ⊗ ρ` without twirling the resource.
pub fn inject_untwirled(
    gate: &MagicGate,
    sigma: &DensityMatrix,
    rho: &DensityMatrix,
) -> Result<InjectionOutcome> {
    let d = check_dims(gate, sigma, rho)?;
    let joint = sigma.kron(rho);
    let mut out = DMatrix::zeros(d, d);
    let mut probs = Vec::with_capacity(d);
    for k in 0..d {
        // Outcome k keeps a = j + k; the decoded resource register is |k⟩.
        let branch = DMatrix::from_fn(d, d, |j, jp| {
            joint.m[(((j + k) % d) * d + j, ((jp + k) % d) * d + jp)]
        });
        probs.push(branch.trace().re);
        let v = correction_unitary(gate, k);
        out += &v * branch * v.adjoint();
    }
    Ok(InjectionOutcome {
        output: DensityMatrix::from_matrix_unchecked(out),
        branch_probabilities: probs,
    })
}

/// Twirls `σ` by powers of `C_M`, then runs the gadget.
pub fn inject(
    gate: &MagicGate,
    sigma: &DensityMatrix,
    rho: &DensityMatrix,
) -> Result<InjectionOutcome> {
    check_dims(gate, sigma, rho)?;
    inject_untwirled(gate, &twirl(gate, sigma), rho)
}

/// `‖𝓖(σ ⊗ ρ) − MρM†‖₁` and the resource error `ε`.
pub fn injection_deviation(
    gate: &MagicGate,
    sigma: &DensityMatrix,
    rho: &DensityMatrix,
) -> Result<(f64, f64)> {
    let out = inject(gate, sigma, rho)?;
    let ideal = rho.conjugate(&gate_matrix(gate));
    Ok((
        trace_distance(&out.output, &ideal)?,
        resource_error(gate, sigma),
    ))
}

/// Outcome statistics of `Z` on `|Θ⟩` and of `Z ⊗ Z†` on `|Θ⟩|ψ⟩`.
#[derive(Clone, Debug, PartialEq)]
pub struct UnbiasednessReport {
    pub z_probabilities: Vec<f64>,
    pub joint_probabilities: Vec<f64>,
    pub max_deviation: f64,
    pub unbiased: bool,
}

/// Tolerance used to flag a distribution as uniform.
pub const UNIFORM_TOL: f64 = 1e-12;

pub fn measurement_unbiasedness_check(
    state: &DVector<Complex>,
    psi: &DVector<Complex>,
) -> Result<UnbiasednessReport> {
    let d = state.len();
    if psi.len() != d {
        return Err(Error::DimensionMismatch("state sizes differ".into()));
    }
    let s = state / c(state.norm());
    let p = psi / c(psi.norm());
    let z: Vec<f64> = s.iter().map(|a| a.norm_sqr()).collect();
    let mut joint = alloc::vec![0.0; d];
    for a in 0..d {
        for j in 0..d {
            joint[(a + d - j) % d] += s[a].norm_sqr() * p[j].norm_sqr();
        }
    }
    let u = 1.0 / d as f64;
    let max_deviation = z
        .iter()
        .chain(&joint)
        .fold(0.0f64, |m, &x| m.max((x - u).abs()));
    Ok(UnbiasednessReport {
        z_probabilities: z,
        joint_probabilities: joint,
        max_deviation,
        unbiased: max_deviation <= UNIFORM_TOL,
    })
}
