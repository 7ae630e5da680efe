//! Independent Reeds-Shepp reference: every word family is solved
//! numerically by Newton iteration from a grid of starting parameters.
//! Extents are signed (negative means reverse), so one template covers all
//! gear patterns of a word.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use quadsteer_core::{RsPath, Steer};

#[derive(Clone, Copy)]
enum Part {
    /// Arc turning left (+1) or right (-1) by the free parameter `p`.
    Arc(f64, usize),
    /// Arc with a fixed signed extent.
    Fixed(f64, f64),
    /// Arc whose extent is `scale` times free parameter `p`.
    Tied(f64, usize, f64),
    Line(usize),
}

fn words() -> Vec<Vec<Part>> {
    use Part::*;
    let mut out = Vec::new();
    for a in [1.0, -1.0] {
        for b in [1.0, -1.0] {
            out.push(vec![Arc(a, 0), Line(1), Arc(b, 2)]);
            for q in [FRAC_PI_2, -FRAC_PI_2] {
                out.push(vec![Arc(a, 0), Fixed(-a, q), Line(1), Arc(b, 2)]);
                out.push(vec![Arc(b, 0), Line(1), Fixed(-a, q), Arc(a, 2)]);
            }
        }
        out.push(vec![Arc(a, 0), Arc(-a, 1), Arc(a, 2)]);
        for sign in [1.0, -1.0] {
            out.push(vec![Arc(a, 0), Arc(-a, 1), Tied(a, 1, sign), Arc(-a, 2)]);
        }
        for b in [1.0, -1.0] {
            for q1 in [FRAC_PI_2, -FRAC_PI_2] {
                for q2 in [FRAC_PI_2, -FRAC_PI_2] {
                    out.push(vec![Arc(a, 0), Fixed(-a, q1), Line(1), Fixed(b, q2), Arc(-b, 2)]);
                }
            }
        }
    }
    out
}

fn signed_extents(word: &[Part], p: &[f64; 3]) -> Vec<(f64, f64)> {
    word.iter()
        .map(|part| match *part {
            Part::Arc(dir, i) => (dir, p[i]),
            Part::Fixed(dir, e) => (dir, e),
            Part::Tied(dir, i, s) => (dir, s * p[i]),
            Part::Line(i) => (0.0, p[i]),
        })
        .collect()
}

/// Integrates `(turn direction, signed extent)` pieces at unit curvature.
pub fn integrate_unit(pieces: &[(f64, f64)]) -> (f64, f64, f64) {
    let (mut x, mut y, mut th) = (0.0f64, 0.0f64, 0.0f64);
    for &(dir, e) in pieces {
        if dir == 0.0 {
            x += e * th.cos();
            y += e * th.sin();
        } else {
            let turn = dir * e;
            x += dir * ((th + turn).sin() - th.sin());
            y -= dir * ((th + turn).cos() - th.cos());
            th += turn;
        }
    }
    (x, y, th)
}

/// End pose of a solver path from the origin, integrated from its segments.
pub fn integrate_path(path: &RsPath) -> (f64, f64, f64) {
    let r = 1.0 / path.curvature;
    let (mut x, mut y, mut th) = (0.0f64, 0.0f64, 0.0f64);
    for s in &path.segments {
        let g = s.gear.sign();
        match s.steer {
            Steer::Straight => {
                x += g * s.extent * th.cos();
                y += g * s.extent * th.sin();
            }
            Steer::Left | Steer::Right => {
                let dir = if s.steer == Steer::Left { 1.0 } else { -1.0 };
                let turn = dir * g * s.extent;
                x += dir * r * ((th + turn).sin() - th.sin());
                y -= dir * r * ((th + turn).cos() - th.cos());
                th += turn;
            }
        }
    }
    (x, y, th)
}

fn wrap(a: f64) -> f64 {
    let r = a.rem_euclid(TAU);
    if r > PI {
        r - TAU
    } else {
        r
    }
}

fn residual(word: &[Part], p: &[f64; 3], target: (f64, f64, f64)) -> [f64; 3] {
    let (x, y, th) = integrate_unit(&signed_extents(word, p));
    [x - target.0, y - target.1, wrap(th - target.2)]
}

fn solve3(j: &[[f64; 3]; 3], r: &[f64; 3]) -> Option<[f64; 3]> {
    let det = |m: &[[f64; 3]; 3]| {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    };
    let d = det(j);
    if d.abs() < 1e-12 {
        return None;
    }
    let mut out = [0.0; 3];
    for (c, o) in out.iter_mut().enumerate() {
        let mut m = *j;
        for row in 0..3 {
            m[row][c] = r[row];
        }
        *o = det(&m) / d;
    }
    Some(out)
}

fn newton(word: &[Part], mut p: [f64; 3], target: (f64, f64, f64)) -> Option<[f64; 3]> {
    for _ in 0..40 {
        let r = residual(word, &p, target);
        let norm = r.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm < 1e-12 {
            return Some(p);
        }
        let mut j = [[0.0; 3]; 3];
        for c in 0..3 {
            let h = 1e-7;
            let (mut a, mut b) = (p, p);
            a[c] += h;
            b[c] -= h;
            let (ra, rb) = (residual(word, &a, target), residual(word, &b, target));
            for row in 0..3 {
                j[row][c] = (ra[row] - rb[row]) / (2.0 * h);
            }
        }
        let mut step = solve3(&j, &r)?;
        let len = step.iter().map(|v| v * v).sum::<f64>().sqrt();
        if len > 1.0 {
            step.iter_mut().for_each(|v| *v /= len);
        }
        for c in 0..3 {
            p[c] -= step[c];
        }
    }
    let r = residual(word, &p, target);
    (r.iter().map(|v| v * v).sum::<f64>().sqrt() < 1e-9).then_some(p)
}

/// Shortest unit-curvature path length found over all word families.
pub fn oracle_length(x: f64, y: f64, theta: f64) -> f64 {
    let starts = [-2.5, -0.8, 0.8, 2.5];
    let mut best = f64::INFINITY;
    for word in words() {
        for a in starts {
            for b in starts {
                for c in starts {
                    if let Some(p) = newton(&word, [a, b, c], (x, y, theta)) {
                        let len: f64 = signed_extents(&word, &p).iter().map(|(_, e)| e.abs()).sum();
                        best = best.min(len);
                    }
                }
            }
        }
    }
    best
}
