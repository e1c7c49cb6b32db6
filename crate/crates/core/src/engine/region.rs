use alloc::vec::Vec;

use super::general::GeneralMap;
use super::noise::{Basis, NoiseVector};
use crate::{QrmCode, Result};

/// Error level at which a state counts as distilled.
pub const DISTILLED_EPSILON: f64 = 1e-6;

/// Whether repeated rounds drive the weight on `target` to within
/// [`DISTILLED_EPSILON`] of one. Each round maps a state concentrated on
/// `|M_t⟩` to one concentrated on `|M†_{−t}⟩`, so the tracked target
/// alternates between `t` and `−t`.
pub fn distillable(
    map: &GeneralMap,
    noise: &NoiseVector,
    target: usize,
    max_rounds: usize,
) -> bool {
    let d = map.d();
    let mut state = noise.clone();
    let mut t = target % d;
    for _ in 0..=max_rounds {
        if state.epsilon_towards(t) < DISTILLED_EPSILON {
            return true;
        }
        match map.iterate(&state) {
            Ok(r) => state = r.output,
            Err(_) => return false,
        }
        t = (d - t) % d;
    }
    false
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RegionPoint {
    pub f1: f64,
    pub f2: f64,
    pub distillable: bool,
}

/// Classifies the twirled qutrit states `(1 − f_1 − f_2, f_1, f_2)` on a
/// grid of step `1/grid_resolution` by whether `QRM_3(2)` distills them to
/// `|M_0⟩`.
pub fn distillable_region_qutrit(
    grid_resolution: usize,
    max_rounds: usize,
) -> Result<Vec<RegionPoint>> {
    let code = crate::qrm::build_qrm(3, 2)?;
    distillable_region_qutrit_with(&code, grid_resolution, max_rounds, 0)
}

/// Region for an arbitrary target component on a prebuilt qutrit code.
pub fn distillable_region_qutrit_with(
    code: &QrmCode,
    grid_resolution: usize,
    max_rounds: usize,
    target: usize,
) -> Result<Vec<RegionPoint>> {
    let map = GeneralMap::new(code)?;
    let res = grid_resolution.max(1);
    let pts: Vec<(usize, usize)> = (0..=res)
        .flat_map(|i| (0..=res - i).map(move |j| (i, j)))
        .collect();
    Ok(crate::par::map_indexed(pts.len(), |idx| {
        let (i, j) = pts[idx];
        let f1 = i as f64 / res as f64;
        let f2 = j as f64 / res as f64;
        let f0 = ((res - i - j) as f64 / res as f64).max(0.0);
        let noise = NoiseVector::from_parts_unchecked(alloc::vec![f0, f1, f2], Basis::M);
        RegionPoint {
            f1,
            f2,
            distillable: distillable(&map, &noise, target, max_rounds),
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::depolarizing_noise;
    use crate::qrm::build_qrm;

    #[test]
    fn depolarizing_points() {
        let code = build_qrm(3, 2).unwrap();
        let map = GeneralMap::new(&code).unwrap();
        assert!(distillable(
            &map,
            &depolarizing_noise(3, 0.0).unwrap(),
            0,
            1
        ));
        assert!(distillable(
            &map,
            &depolarizing_noise(3, 0.205).unwrap(),
            0,
            60
        ));
        assert!(!distillable(
            &map,
            &depolarizing_noise(3, 0.25).unwrap(),
            0,
            60
        ));
    }
}
