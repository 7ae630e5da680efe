use alloc::vec;
use alloc::vec::Vec;

use super::OccupancyGrid;
use crate::math;

/// Exact Euclidean distance from every cell centre to the nearest occupied
/// cell centre (m). Infinite when the grid has no obstacles.
#[derive(Debug, Clone)]
pub struct ClearanceMap {
    width: usize,
    dist: Vec<f64>,
}

const INF: f64 = f64::INFINITY;

// One-dimensional squared distance transform of a sampled function
// (lower envelope of parabolas).
fn dt_1d(f: &[f64], out: &mut [f64], v: &mut [usize], z: &mut [f64]) {
    let n = f.len();
    let mut k = 0usize;
    // skip leading infinite samples: they never form the envelope
    let Some(first) = f.iter().position(|x| x.is_finite()) else {
        out.iter_mut().for_each(|o| *o = INF);
        return;
    };
    v[0] = first;
    z[0] = -INF;
    z[1] = INF;
    for q in first + 1..n {
        if !f[q].is_finite() {
            continue;
        }
        loop {
            let p = v[k];
            let s = ((f[q] + (q * q) as f64) - (f[p] + (p * p) as f64)) / (2.0 * (q as f64 - p as f64));
            if s <= z[k] {
                if k == 0 {
                    v[0] = q;
                    z[1] = INF;
                    break;
                }
                k -= 1;
            } else {
                k += 1;
                v[k] = q;
                z[k] = s;
                z[k + 1] = INF;
                break;
            }
        }
    }
    k = 0;
    for (q, o) in out.iter_mut().enumerate() {
        while z[k + 1] < q as f64 {
            k += 1;
        }
        let d = q as f64 - v[k] as f64;
        *o = d * d + f[v[k]];
    }
}

impl ClearanceMap {
    pub fn new(grid: &OccupancyGrid) -> Self {
        let (w, h) = (grid.width(), grid.height());
        let mut sq: Vec<f64> = grid.cells().iter().map(|&occ| if occ { 0.0 } else { INF }).collect();
        let n = w.max(h);
        let (mut f, mut out) = (vec![0.0; n], vec![0.0; n]);
        let (mut v, mut z) = (vec![0usize; n], vec![0.0; n + 1]);
        for iy in 0..h {
            let row = &mut sq[iy * w..(iy + 1) * w];
            f[..w].copy_from_slice(row);
            dt_1d(&f[..w], &mut out[..w], &mut v, &mut z);
            row.copy_from_slice(&out[..w]);
        }
        for ix in 0..w {
            for iy in 0..h {
                f[iy] = sq[iy * w + ix];
            }
            dt_1d(&f[..h], &mut out[..h], &mut v, &mut z);
            for iy in 0..h {
                sq[iy * w + ix] = out[iy];
            }
        }
        let r = grid.resolution();
        let dist = sq.into_iter().map(|d| if d.is_finite() { math::sqrt(d) * r } else { INF }).collect();
        ClearanceMap { width: w, dist }
    }

    #[inline]
    pub fn at(&self, ix: usize, iy: usize) -> f64 {
        self.dist[iy * self.width + ix]
    }
}
