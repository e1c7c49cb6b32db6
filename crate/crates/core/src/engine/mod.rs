//! Iteration maps of the distillation protocol and the quantities derived
//! from them: thresholds, bound constants, yields and distillable regions.

mod bounds;
mod depolarizing;
mod general;
mod noise;
mod optimize;
mod region;
mod threshold;
mod yields;

pub use bounds::{
    coarse_bounds, quadratic_bound_constant, success_probability_floor, CoarseBounds,
    QuadraticBound, SearchOptions,
};
pub use depolarizing::{
    closed_form_valid, gamma_star, iterate_depolarizing, taylor_coefficient, DepolarizingMap,
};
pub use general::{iterate_general, GeneralMap};
pub use noise::{
    depolarizing_noise, epsilon_from_delta, epsilon_from_state_fraction, qutrit_noise, Basis,
    IterationResult, NoiseVector,
};
pub use optimize::{nelder_mead, simplex_grid};
pub use region::{
    distillable, distillable_region_qutrit, distillable_region_qutrit_with, RegionPoint,
    DISTILLED_EPSILON,
};
pub use threshold::{
    direction_threshold, threshold_depolarizing, threshold_worst_case, threshold_worst_case_with,
    ThresholdCertificate, ThresholdKind, ThresholdResult, DEFAULT_TOLERANCE, WORST_CASE_GRID,
};
pub use yields::{distillation_yield, YieldResult};
