use alloc::vec::Vec;

use super::general::GeneralMap;
use super::noise::NoiseVector;
use super::optimize::{nelder_mead, simplex_grid, simplex_point};
use crate::qrm::design_distance;
use crate::{QrmCode, Result};

/// Grid settings for the simplex searches.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SearchOptions {
    /// Resolution of the simplex grid over noise directions or states.
    pub grid: usize,
    /// Number of ε samples on `(0, 1)` for [`quadratic_bound_constant`].
    pub epsilon_steps: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            grid: 40,
            epsilon_steps: 200,
        }
    }
}

/// `K = sup ε'/ε²` and where it is attained.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticBound {
    pub k: f64,
    pub epsilon: f64,
    pub direction: Vec<f64>,
}

fn ratio(map: &GeneralMap, eps: f64, dir: &[f64]) -> f64 {
    let noise = NoiseVector::along(eps, dir);
    map.epsilon_and_probability(noise.f()).0 / (eps * eps)
}

/// `sup ε'/ε²` over `ε ∈ (0, 1)` and error directions, by grid search and
/// Nelder–Mead refinement.
pub fn quadratic_bound_constant(code: &QrmCode, options: SearchOptions) -> Result<QuadraticBound> {
    let map = GeneralMap::new(code)?;
    let dirs = simplex_grid(map.d() - 1, options.grid);
    let steps = options.epsilon_steps.max(2);
    let mut eps_grid: Vec<f64> = (1..steps).map(|i| i as f64 / steps as f64).collect();
    eps_grid.insert(0, 1e-6);
    let best = crate::par::map_indexed(dirs.len(), |i| {
        eps_grid
            .iter()
            .map(|&e| (ratio(&map, e, &dirs[i]), e))
            .fold(
                (f64::NEG_INFINITY, 0.0),
                |a, b| if b.0 > a.0 { b } else { a },
            )
    });
    let (idx, &(k0, e0)) = best
        .iter()
        .enumerate()
        .max_by(|a, b| {
            a.1 .0
                .partial_cmp(&b.1 .0)
                .unwrap_or(core::cmp::Ordering::Equal)
        })
        .expect("nonempty grid");
    let head = &dirs[idx][..dirs[idx].len() - 1];
    let mut x0 = alloc::vec![e0];
    x0.extend_from_slice(head);
    let objective = |x: &[f64]| {
        let e = x[0].clamp(1e-6, 1.0 - 1e-9);
        -ratio(&map, e, &simplex_point(&x[1..]))
    };
    let (x, v) = nelder_mead(objective, &x0, 0.5 / options.grid as f64, 1e-12, 2000);
    Ok(if -v > k0 {
        QuadraticBound {
            k: -v,
            epsilon: x[0].clamp(1e-6, 1.0 - 1e-9),
            direction: simplex_point(&x[1..]),
        }
    } else {
        QuadraticBound {
            k: k0,
            epsilon: e0,
            direction: dirs[idx].clone(),
        }
    })
}

/// Constants of the generic error-suppression bound `ε' ≤ Kε^D`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CoarseBounds {
    /// `|L_X^⊥| − 1`.
    pub c: f64,
    /// `d^D · C`.
    pub k: f64,
    /// `K^{−1/(D−1)}`.
    pub epsilon_star: f64,
}

/// `C = d^{n−m} − 1`, `K = d^D C`, `ε* = K^{−1/(D−1)}` with the design
/// distance `D`.
pub fn coarse_bounds(code: &QrmCode) -> CoarseBounds {
    let d = code.d() as f64;
    let dist = design_distance(code.d()) as f64;
    let c = libm::pow(d, (code.n() - code.m() as usize) as f64) - 1.0;
    let k = libm::pow(d, dist) * c;
    CoarseBounds {
        c,
        k,
        epsilon_star: libm::pow(k, -1.0 / (dist - 1.0)),
    }
}

/// Minimum success probability over all twirled input states, with the
/// minimizing weights.
pub fn success_probability_floor(
    code: &QrmCode,
    options: SearchOptions,
) -> Result<(f64, Vec<f64>)> {
    let map = GeneralMap::new(code)?;
    let pts = simplex_grid(map.d(), options.grid);
    let probs = crate::par::map_indexed(pts.len(), |i| map.epsilon_and_probability(&pts[i]).1);
    let (idx, &p0) = probs
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.partial_cmp(b.1).unwrap_or(core::cmp::Ordering::Equal))
        .expect("nonempty grid");
    let head = &pts[idx][..pts[idx].len() - 1];
    let (x, v) = nelder_mead(
        |y| map.epsilon_and_probability(&simplex_point(y)).1,
        head,
        0.5 / options.grid as f64,
        1e-14,
        2000,
    );
    Ok(if v < p0 {
        (v, simplex_point(&x))
    } else {
        (p0, pts[idx].clone())
    })
}
