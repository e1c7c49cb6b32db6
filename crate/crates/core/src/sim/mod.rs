//! Dense state-vector oracle for the distillation protocol.
//!
//! Qudit 0 is the most significant digit of a basis index. `ω = e^{i2π/d}`,
//! `|+_k⟩ = d^{−1/2} Σ_t ω^{−kt}|t⟩` so that `X|+_k⟩ = ω^k|+_k⟩`, and
//! `|M_k⟩ = M|+_k⟩`.

mod projection;
mod protocol;
mod state;
mod twirl;

pub use projection::{
    clifford_correction_vector, code_constant, project_stabilizer, project_stabilizer_fast,
    ProjectionOutcome,
};
pub use protocol::{simulate_round, ProtocolResponse, RoundOutput};
pub use state::{
    apply_cm, apply_pauli, apply_transversal_diagonal, logical_amplitudes, logical_basis_state,
    logical_plus_state, plus_basis_state, PauliKind, StateVector, MAX_AMPLITUDES,
};
pub use twirl::{cm_matrix, gate_matrix, magic_state, twirl_numeric, TwirlOutcome};
