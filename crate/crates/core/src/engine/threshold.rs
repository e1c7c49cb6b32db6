use alloc::vec::Vec;

use super::depolarizing::DepolarizingMap;
use super::general::GeneralMap;
use super::noise::NoiseVector;
use super::optimize::{nelder_mead, simplex_grid, simplex_point};
use crate::{Error, QrmCode, Result};

/// Default absolute tolerance on thresholds.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Resolution of the direction grid used by [`threshold_worst_case`].
pub const WORST_CASE_GRID: usize = 40;

const SCAN_POINTS: usize = 400;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThresholdKind {
    Depolarizing,
    WorstCase,
}

/// Bracket around the crossing and the error direction it refers to.
#[derive(Clone, Debug, PartialEq)]
pub struct ThresholdCertificate {
    /// `ε' < ε` at the lower end, `ε' ≥ ε` at the upper end.
    pub bracket: (f64, f64),
    /// Weights `f_{k≠0}/ε` of the error direction.
    pub direction: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ThresholdResult {
    pub epsilon_star: f64,
    pub kind: ThresholdKind,
    pub certificate: ThresholdCertificate,
}

/// First sign change of `g` on a geometric grid over `[lo, hi]`, refined by
/// bisection to width `tol`. `None` if `g < 0` throughout.
fn first_crossing<G>(g: G, lo: f64, hi: f64, points: usize, tol: f64) -> Result<Option<(f64, f64)>>
where
    G: Fn(f64) -> Result<f64>,
{
    let ratio = libm::pow(hi / lo, 1.0 / (points - 1) as f64);
    let mut prev = lo;
    if g(lo)? >= 0.0 {
        return Ok(Some((0.0, lo)));
    }
    for i in 1..points {
        let x = if i + 1 == points {
            hi
        } else {
            lo * libm::pow(ratio, i as f64)
        };
        if g(x)? >= 0.0 {
            let (mut a, mut b) = (prev, x);
            while b - a > tol {
                let mid = 0.5 * (a + b);
                if mid <= a || mid >= b {
                    break;
                }
                if g(mid)? >= 0.0 {
                    b = mid;
                } else {
                    a = mid;
                }
            }
            return Ok(Some((a, b)));
        }
        prev = x;
    }
    Ok(None)
}

/// Smallest positive root of `ε'(ε) = ε` for depolarizing noise on
/// `QRM_d(m)`, bracketed on `(tol, (d−1)/d − tol)` and bisected to `tol`.
pub fn threshold_depolarizing(d: u32, m: u32, tol: f64) -> Result<ThresholdResult> {
    let map = DepolarizingMap::new(d, m)?;
    let lo = tol.clamp(f64::MIN_POSITIVE, 1e-12);
    let hi = map.max_epsilon() - tol.max(1e-15);
    let g = |e: f64| map.eval(e).map(|(out, _)| out - e);
    let (a, b) = first_crossing(g, lo, hi, SCAN_POINTS, tol)?.ok_or(Error::NoRoot { lo, hi })?;
    Ok(ThresholdResult {
        epsilon_star: 0.5 * (a + b),
        kind: ThresholdKind::Depolarizing,
        certificate: ThresholdCertificate {
            bracket: (a, b),
            direction: alloc::vec![1.0 / (d - 1) as f64; d as usize - 1],
        },
    })
}

/// Smallest `ε ∈ (0, 1]` with `ε'(ε·direction) ≥ ε` for one application of
/// the map, or `None` if the map contracts along the whole ray.
pub fn direction_threshold(
    map: &GeneralMap,
    direction: &[f64],
    tol: f64,
) -> Result<Option<(f64, f64)>> {
    if direction.len() + 1 != map.d() {
        return Err(Error::DimensionMismatch(alloc::format!(
            "direction of length {} for d = {}",
            direction.len(),
            map.d()
        )));
    }
    let g = |e: f64| -> Result<f64> {
        let noise = NoiseVector::along(e, direction);
        Ok(map.epsilon_and_probability(noise.f()).0 - e)
    };
    first_crossing(g, 1e-4, 1.0, 120, tol)
}

fn threshold_along(map: &GeneralMap, direction: &[f64], tol: f64) -> f64 {
    match direction_threshold(map, direction, tol) {
        Ok(Some((a, b))) => 0.5 * (a + b),
        _ => 1.0,
    }
}

/// Worst-case threshold over error directions on the `(d−1)`-simplex: the
/// minimum over directions of the single-round crossing point, found on a
/// grid of resolution [`WORST_CASE_GRID`] and refined by Nelder–Mead.
pub fn threshold_worst_case(code: &QrmCode, tol: f64) -> Result<ThresholdResult> {
    let map = GeneralMap::new(code)?;
    threshold_worst_case_with(&map, WORST_CASE_GRID, tol)
}

/// [`threshold_worst_case`] with a prebuilt map and a chosen grid
/// resolution.
pub fn threshold_worst_case_with(
    map: &GeneralMap,
    grid: usize,
    tol: f64,
) -> Result<ThresholdResult> {
    let dirs = simplex_grid(map.d() - 1, grid);
    let coarse_tol = (tol * 100.0).max(1e-7);
    let values =
        crate::par::map_indexed(dirs.len(), |i| threshold_along(map, &dirs[i], coarse_tol));
    let best = (0..dirs.len())
        .min_by(|&a, &b| {
            values[a]
                .partial_cmp(&values[b])
                .unwrap_or(core::cmp::Ordering::Equal)
        })
        .ok_or(Error::Invalid("empty direction grid".into()))?;
    let head = &dirs[best][..dirs[best].len() - 1];
    let (x, _) = nelder_mead(
        |y| threshold_along(map, &simplex_point(y), coarse_tol),
        head,
        0.5 / grid as f64,
        1e-7,
        400,
    );
    let refined = simplex_point(&x);
    let direction = if threshold_along(map, &refined, coarse_tol) <= values[best] {
        refined
    } else {
        dirs[best].clone()
    };
    let (a, b) =
        direction_threshold(map, &direction, tol)?.ok_or(Error::NoRoot { lo: 1e-4, hi: 1.0 })?;
    Ok(ThresholdResult {
        epsilon_star: 0.5 * (a + b),
        kind: ThresholdKind::WorstCase,
        certificate: ThresholdCertificate {
            bracket: (a, b),
            direction,
        },
    })
}
