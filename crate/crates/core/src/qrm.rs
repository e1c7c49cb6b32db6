//! Quantum Reed-Muller CSS codes `QRM_d(m)` on `n = d^m − 1` qudits.

use alloc::vec::Vec;

use crate::code::coset_min_weight;
use crate::field::GFVector;
use crate::gate::{shifted_lambda_check, LemmaViolation};
use crate::reed_muller::rm_code;
use crate::{Error, LinearCode, MagicGate, Result};

/// A single-logical-qudit CSS code with `X_L = X[1]` and `Z_L = Z[(d−1)·1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QrmCode {
    d: u32,
    m: u32,
    lx: LinearCode,
    lz: LinearCode,
}

impl QrmCode {
    /// Assembles a code from its two halves without any checks.
    pub fn from_parts(d: u32, m: u32, lx: LinearCode, lz: LinearCode) -> Self {
        Self { d, m, lx, lz }
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Number of physical qudits.
    pub fn n(&self) -> usize {
        self.lx.length()
    }

    pub fn lx(&self) -> &LinearCode {
        &self.lx
    }

    pub fn lz(&self) -> &LinearCode {
        &self.lz
    }

    /// The all-ones vector.
    pub fn x_logical(&self) -> GFVector {
        GFVector::constant(self.d, self.n(), 1)
    }

    /// `(d−1)·1`.
    pub fn z_logical(&self) -> GFVector {
        GFVector::constant(self.d, self.n(), self.d - 1)
    }

    /// `span(L_X, 1)`.
    pub fn lx_extended(&self) -> LinearCode {
        self.lx
            .extended(&[self.x_logical()])
            .expect("lengths agree")
    }

    /// `L_X^⊥ = span(L_Z, (d−1)·1)`.
    pub fn lx_dual(&self) -> LinearCode {
        self.lx.dual()
    }
}

/// Builds `QRM_d(m)` with `L_X = RM*_d(1,m)` and `L_Z = span(L_X, 1)^⊥`, and
/// certifies the CSS structure.
pub fn build_qrm(d: u32, m: u32) -> Result<QrmCode> {
    let lx = rm_code(d, m, true)?;
    let n = lx.length();
    let ones = GFVector::constant(d, n, 1);
    let lz = lx.extended(&[ones])?.dual();
    let code = QrmCode { d, m, lx, lz };
    if code.lx.dim() != m as usize || code.lz.dim() + m as usize + 1 != n {
        return Err(Error::InvalidCode(alloc::format!(
            "QRM_{d}({m}) does not encode a single qudit"
        )));
    }
    let report = validate_css(&code);
    if !report.all_pass() {
        return Err(Error::InvalidCode(alloc::format!(
            "QRM_{d}({m}) fails CSS checks: {report:?}"
        )));
    }
    Ok(code)
}

/// Outcome of [`validate_css`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CssReport {
    /// `L_X ⊥ L_Z`.
    pub stabilizers_commute: bool,
    /// `⟨1, L_Z⟩ = 0`.
    pub x_logical_commutes: bool,
    /// `⟨(d−1)·1, L_X⟩ = 0`.
    pub z_logical_commutes: bool,
    /// `⟨X_L, Z_L⟩ ≡ 1`, i.e. `X_L Z_L = ω⁻¹ Z_L X_L`.
    pub logical_conjugation: bool,
    /// `L_Z = span(L_X, X_L)^⊥`.
    pub ident1: bool,
    /// `L_Z^⊥ = span(L_X, X_L)`.
    pub ident2: bool,
    /// `L_X = span(L_Z, Z_L)^⊥`.
    pub ident3: bool,
    /// `L_X^⊥ = span(L_Z, Z_L)`.
    pub ident4: bool,
}

impl CssReport {
    pub fn all_pass(&self) -> bool {
        self.stabilizers_commute
            && self.x_logical_commutes
            && self.z_logical_commutes
            && self.logical_conjugation
            && self.ident1
            && self.ident2
            && self.ident3
            && self.ident4
    }
}

fn orthogonal(a: &LinearCode, b: &LinearCode) -> bool {
    a.rows().iter().all(|x| {
        b.rows()
            .iter()
            .all(|y| crate::field::dot_mod(x, y, a.modulus()) == 0)
    })
}

pub fn validate_css(code: &QrmCode) -> CssReport {
    let (x, z) = (code.x_logical(), code.z_logical());
    let xl = LinearCode::from_generators(code.d, code.n(), core::slice::from_ref(&x))
        .expect("valid vector");
    let zl = LinearCode::from_generators(code.d, code.n(), core::slice::from_ref(&z))
        .expect("valid vector");
    let span_x = code
        .lx
        .extended(core::slice::from_ref(&x))
        .expect("lengths agree");
    let span_z = code
        .lz
        .extended(core::slice::from_ref(&z))
        .expect("lengths agree");
    CssReport {
        stabilizers_commute: orthogonal(&code.lx, &code.lz),
        x_logical_commutes: orthogonal(&xl, &code.lz),
        z_logical_commutes: orthogonal(&zl, &code.lx),
        logical_conjugation: x.dot(&z) == 1,
        ident1: code.lz == span_x.dual(),
        ident2: code.lz.dual() == span_x,
        ident3: code.lx == span_z.dual(),
        ident4: code.lx.dual() == span_z,
    }
}

/// Checks `Λ(v ⊕ j·1) ≡ −λ_j mod d^m` for all `v ∈ L_X` and all `j`, which
/// makes `M^{⊗n}` act as the logical `M†`. Returns the first violation.
pub fn verify_transversality_classical(
    code: &QrmCode,
    gate: &MagicGate,
) -> Result<Option<LemmaViolation>> {
    if gate.d() != code.d || gate.m() != code.m {
        return Err(Error::DimensionMismatch(alloc::format!(
            "gate for ({}, {}) on QRM_{}({})",
            gate.d(),
            gate.m(),
            code.d,
            code.m
        )));
    }
    shifted_lambda_check(gate, &code.lx)
}

/// X, Z and overall distances, each `None` when no logical operator of
/// weight at most the search cap exists.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Distances {
    pub dx: Option<usize>,
    pub dz: Option<usize>,
    pub d: Option<usize>,
}

/// `D_Z = min wt(L_X^⊥ \ L_Z)`, `D_X = min wt(L_Z^⊥ \ L_X)`, `D = min`.
pub fn code_distance(code: &QrmCode, max_weight: usize) -> Distances {
    let dz = coset_min_weight(&code.lx.dual(), &code.lz, max_weight);
    let dx = coset_min_weight(&code.lz.dual(), &code.lx, max_weight);
    let d = [dx, dz].into_iter().flatten().min();
    Distances { dx, dz, d }
}

/// Default weight cap for [`code_distance`].
pub const DEFAULT_DISTANCE_CAP: usize = 3;

/// Distance used by the error-suppression bounds: 3 for the qubit codes, 2
/// otherwise.
pub fn design_distance(d: u32) -> u32 {
    if d == 2 {
        3
    } else {
        2
    }
}

/// Fixed generator sets for the qutrit and ququint codes,
/// used as fixtures.
pub fn reference_generators(d: u32, m: u32) -> Option<(Vec<GFVector>, Vec<GFVector>)> {
    let v = |e: &[u32]| GFVector::new_unchecked(d, e.to_vec());
    match (d, m) {
        (3, 2) => Some((
            alloc::vec![v(&[1, 2, 0, 1, 2, 0, 1, 2]), v(&[0, 0, 1, 1, 1, 2, 2, 2])],
            alloc::vec![
                v(&[1, 2, 0, 1, 2, 0, 1, 2]),
                v(&[0, 0, 1, 1, 1, 2, 2, 2]),
                v(&[0, 0, 1, 2, 0, 2, 1, 0]),
                v(&[1, 1, 0, 1, 1, 0, 1, 1]),
                v(&[0, 0, 1, 1, 1, 1, 1, 1]),
            ],
        )),
        (5, 1) => Some((
            alloc::vec![v(&[1, 2, 3, 4])],
            alloc::vec![v(&[1, 2, 3, 4]), v(&[1, 4, 4, 1])],
        )),
        _ => None,
    }
}
