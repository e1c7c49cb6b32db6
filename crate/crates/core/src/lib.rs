//! Exact analysis of magic state distillation over prime-dimension qudits
//! using quantum Reed-Muller codes.
//!
//! The crate is `no_std` (with `alloc`). It covers:
//!
//! * [`field`], [`code`], [`reed_muller`], [`enumerator`]: linear codes over
//!   GF(d), duals, shortening, first-order Reed-Muller codes, weight
//!   enumerators and the MacWilliams transform, all in exact arithmetic.
//! * [`gate`]: the canonical diagonal non-Clifford gate and membership checks
//!   for the second level of the Clifford hierarchy.
//! * [`qrm`]: quantum Reed-Muller CSS codes and their verification.
//! * [`engine`]: the distillation iteration maps, thresholds, bounds, yields.
//! * [`sim`]: a dense state-vector oracle that replays the protocol and is
//!   used to cross-check every analytic formula.
//! * [`injection`]: state injection of the magic gate from a noisy resource.
//!
//! Enable the `rayon` feature to evaluate grid sweeps in parallel.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;
#[cfg(any(test, feature = "std"))]
extern crate std;

pub mod code;
pub mod engine;
pub mod enumerator;
mod error;
pub mod field;
pub mod gate;
pub mod injection;
pub mod qrm;
pub mod reed_muller;
pub mod sim;

mod par;

pub use code::{LinearCode, DEFAULT_SPAN_CUTOFF};
pub use enumerator::{KWeightProfile, WeightEnumerator};
pub use error::{Error, Result};
pub use field::GFVector;
pub use gate::MagicGate;
pub use qrm::QrmCode;

/// Complex amplitude type used by the simulator and the injection module.
pub type Complex = num_complex::Complex<f64>;
