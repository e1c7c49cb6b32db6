//! Simplex grids and a derivative-free local minimizer.

use alloc::vec::Vec;

/// All points of the `(parts − 1)`-simplex whose coordinates are multiples of
/// `1/resolution`, in lexicographic order of the integer numerators.
pub fn simplex_grid(parts: usize, resolution: usize) -> Vec<Vec<f64>> {
    let mut out = Vec::new();
    if parts == 0 {
        return out;
    }
    let mut current = alloc::vec![0usize; parts];
    fill(&mut out, &mut current, 0, resolution, resolution);
    out
}

fn fill(out: &mut Vec<Vec<f64>>, cur: &mut [usize], i: usize, left: usize, res: usize) {
    if i + 1 == cur.len() {
        cur[i] = left;
        out.push(cur.iter().map(|&c| c as f64 / res.max(1) as f64).collect());
        return;
    }
    for c in 0..=left {
        cur[i] = c;
        fill(out, cur, i + 1, left - c, res);
    }
}

/// Euclidean projection onto the probability simplex.
pub(crate) fn project_to_simplex(y: &[f64]) -> Vec<f64> {
    let mut u: Vec<f64> = y.to_vec();
    u.sort_by(|a, b| b.partial_cmp(a).unwrap_or(core::cmp::Ordering::Equal));
    let mut css = 0.0;
    let mut theta = 0.0;
    for (i, &ui) in u.iter().enumerate() {
        css += ui;
        let t = (css - 1.0) / (i + 1) as f64;
        if ui - t > 0.0 {
            theta = t;
        }
    }
    y.iter().map(|&x| (x - theta).max(0.0)).collect()
}

/// A simplex point from its first `len − 1` coordinates.
pub(crate) fn simplex_point(head: &[f64]) -> Vec<f64> {
    let mut full = head.to_vec();
    full.push(1.0 - head.iter().sum::<f64>());
    project_to_simplex(&full)
}

/// Nelder–Mead minimization from `x0` with initial step `step`, stopping when
/// the simplex's function spread and size fall below `tol` or after
/// `max_iter` iterations. Returns the best point and value.
pub fn nelder_mead<F>(f: F, x0: &[f64], step: f64, tol: f64, max_iter: usize) -> (Vec<f64>, f64)
where
    F: Fn(&[f64]) -> f64,
{
    let dim = x0.len();
    if dim == 0 {
        return (Vec::new(), f(x0));
    }
    let mut pts: Vec<Vec<f64>> = Vec::with_capacity(dim + 1);
    pts.push(x0.to_vec());
    for i in 0..dim {
        let mut p = x0.to_vec();
        p[i] += step;
        pts.push(p);
    }
    let mut vals: Vec<f64> = pts.iter().map(|p| f(p)).collect();
    let combine = |a: &[f64], b: &[f64], t: f64| -> Vec<f64> {
        a.iter().zip(b).map(|(x, y)| x + t * (y - x)).collect()
    };
    for _ in 0..max_iter {
        let mut order: Vec<usize> = (0..=dim).collect();
        order.sort_by(|&a, &b| {
            vals[a]
                .partial_cmp(&vals[b])
                .unwrap_or(core::cmp::Ordering::Equal)
        });
        pts = order.iter().map(|&i| pts[i].clone()).collect();
        vals = order.iter().map(|&i| vals[i]).collect();
        let size = pts[1..]
            .iter()
            .map(|p| {
                p.iter()
                    .zip(&pts[0])
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0, f64::max)
            })
            .fold(0.0, f64::max);
        if (vals[dim] - vals[0]).abs() <= tol && size <= tol {
            break;
        }
        let mut centroid = alloc::vec![0.0; dim];
        for p in &pts[..dim] {
            for (c, x) in centroid.iter_mut().zip(p) {
                *c += x / dim as f64;
            }
        }
        let worst = pts[dim].clone();
        let reflected = combine(&centroid, &worst, -1.0);
        let fr = f(&reflected);
        if fr < vals[0] {
            let expanded = combine(&centroid, &worst, -2.0);
            let fe = f(&expanded);
            if fe < fr {
                pts[dim] = expanded;
                vals[dim] = fe;
            } else {
                pts[dim] = reflected;
                vals[dim] = fr;
            }
        } else if fr < vals[dim - 1] {
            pts[dim] = reflected;
            vals[dim] = fr;
        } else {
            let (target, ft) = if fr < vals[dim] {
                (reflected, fr)
            } else {
                (worst, vals[dim])
            };
            let contracted = combine(&centroid, &target, 0.5);
            let fc = f(&contracted);
            if fc < ft {
                pts[dim] = contracted;
                vals[dim] = fc;
            } else {
                let best = pts[0].clone();
                for i in 1..=dim {
                    pts[i] = combine(&best, &pts[i], 0.5);
                    vals[i] = f(&pts[i]);
                }
            }
        }
    }
    let best = (0..=dim)
        .min_by(|&a, &b| {
            vals[a]
                .partial_cmp(&vals[b])
                .unwrap_or(core::cmp::Ordering::Equal)
        })
        .unwrap_or(0);
    (pts[best].clone(), vals[best])
}
