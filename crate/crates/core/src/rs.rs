//! Reeds-Shepp shortest paths and their per-mode variants.
//!
//! The solver works on the unit-curvature problem and evaluates the closed
//! forms of every word family (CSC, CCC, CCCC, CCSC and CCSCC with their
//! time-flipped, reflected and backwards variants), keeping the shortest.
//! Equal-length words are ordered by segment count, then family index.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI, TAU};

use crate::angle;
use crate::kinematics::{curvature_steer, max_curvature, MotionMode, RobotParams};
use crate::math;
use crate::motion::{Gear, MotionPiece};
use crate::world::Pose;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Steer {
    Left,
    Straight,
    Right,
}

/// One Reeds-Shepp segment. `extent` is the turned angle (rad) for arcs and
/// the length (m) for straights.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RsSegment {
    pub steer: Steer,
    pub gear: Gear,
    pub extent: f64,
}

/// How the solved path maps back onto the robot body.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RsFrame {
    /// Solved directly in the body frame.
    Body,
    /// Solved with headings rotated by −π/2, so "forward" is the body's
    /// right-hand side.
    Lateral,
    /// A heading-preserving translation along the body-frame direction.
    Translation { direction: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct RsPath {
    pub mode: MotionMode,
    /// Turning curvature of the arcs (1/m); zero for translations.
    pub curvature: f64,
    pub segments: Vec<RsSegment>,
    pub total_length: f64,
    pub frame: RsFrame,
    /// Index of the word family in the solver's table, `None` for
    /// translations and empty paths.
    pub family: Option<usize>,
}

/// Goal pose expressed in the start pose's frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoseDelta {
    pub x: f64,
    pub y: f64,
    pub theta: f64,
}

impl PoseDelta {
    pub fn new(x: f64, y: f64, theta: f64) -> Self {
        PoseDelta { x, y, theta: angle::wrap_to_pi(theta) }
    }

    pub fn between(start: &Pose, goal: &Pose) -> Self {
        let (dx, dy) = (goal.x - start.x, goal.y - start.y);
        let (s, c) = (math::sin(start.theta), math::cos(start.theta));
        PoseDelta::new(c * dx + s * dy, -s * dx + c * dy, goal.theta - start.theta)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Seg {
    L,
    R,
    S,
}

use Seg::{L, R, S};

const FAMILIES: [&[Seg]; 18] = [
    &[L, R, L],
    &[R, L, R],
    &[L, R, L, R],
    &[R, L, R, L],
    &[L, R, S, L],
    &[R, L, S, R],
    &[L, S, R, L],
    &[R, S, L, R],
    &[L, R, S, R],
    &[R, L, S, L],
    &[R, S, R, L],
    &[L, S, L, R],
    &[L, S, R],
    &[R, S, L],
    &[L, S, L],
    &[R, S, R],
    &[L, R, S, L, R],
    &[R, L, S, R, L],
];

/// Number of word families known to the solver.
pub const FAMILY_COUNT: usize = FAMILIES.len();

const ZERO: f64 = 10.0 * f64::EPSILON;
// Segments shorter than this (unit curvature) are dropped from words.
const NEGLIGIBLE: f64 = 1e-10;
const TIE: f64 = 1e-10;

fn mod2pi(x: f64) -> f64 {
    let v = if x.abs() < TAU { x } else { math::fmod(x, TAU) };
    if v < -PI {
        v + TAU
    } else if v > PI {
        v - TAU
    } else {
        v
    }
}

fn tau_omega(u: f64, v: f64, xi: f64, eta: f64, phi: f64) -> (f64, f64) {
    let delta = mod2pi(u - v);
    let a = math::sin(u) - math::sin(delta);
    let b = math::cos(u) - math::cos(delta) - 1.0;
    let t1 = math::atan2(eta * a - xi * b, xi * a + eta * b);
    let t2 = 2.0 * (math::cos(delta) - math::cos(v) - math::cos(u)) + 3.0;
    let tau = if t2 < 0.0 { mod2pi(t1 + PI) } else { mod2pi(t1) };
    (tau, mod2pi(tau - u + v - phi))
}

fn lp_sp_lp(x: f64, y: f64, phi: f64, sp: f64, cp: f64, cap: f64) -> Option<(f64, f64, f64)> {
    let (dx, dy) = (x - sp, y - 1.0 + cp);
    let u = math::sqrt(dx * dx + dy * dy);
    if u > cap {
        return None;
    }
    let t = math::atan2(dy, dx);
    if t >= -ZERO {
        let v = mod2pi(phi - t);
        if v >= -ZERO {
            return Some((t, u, v));
        }
    }
    None
}

fn lp_sp_rp(x: f64, y: f64, phi: f64, sp: f64, cp: f64, cap: f64) -> Option<(f64, f64, f64)> {
    let (dx, dy) = (x + sp, y - 1.0 - cp);
    let u1 = dx * dx + dy * dy;
    if u1 >= 4.0 {
        let u = math::sqrt(u1 - 4.0);
        if u > cap {
            return None;
        }
        let t1 = math::atan2(dy, dx);
        let theta = math::atan2(2.0, u);
        let t = mod2pi(t1 + theta);
        let v = mod2pi(t - phi);
        if t >= -ZERO && v >= -ZERO {
            return Some((t, u, v));
        }
    }
    None
}

fn lp_rm_l(x: f64, y: f64, phi: f64, sp: f64, cp: f64, cap: f64) -> Option<(f64, f64, f64)> {
    let (dx, dy) = (x - sp, y - 1.0 + cp);
    let u1 = math::sqrt(dx * dx + dy * dy);
    // the middle arc alone is at least half the chord
    if u1 <= 4.0 && 0.5 * u1 <= cap {
        let theta = math::atan2(dy, dx);
        let u = -2.0 * math::asin(0.25 * u1);
        let t = mod2pi(theta + 0.5 * u + PI);
        let v = mod2pi(phi - t + u);
        if t >= -ZERO && u <= ZERO {
            return Some((t, u, v));
        }
    }
    None
}

fn lp_rup_lum_rm(x: f64, y: f64, phi: f64, sp: f64, cp: f64, cap: f64) -> Option<(f64, f64, f64)> {
    let xi = x + sp;
    let eta = y - 1.0 - cp;
    let rho = 0.25 * (2.0 + math::sqrt(xi * xi + eta * eta));
    if rho <= 1.0 {
        let u = math::acos(rho);
        if 2.0 * u > cap {
            return None;
        }
        let (t, v) = tau_omega(u, -u, xi, eta, phi);
        if t >= -ZERO && v <= ZERO {
            return Some((t, u, v));
        }
    }
    None
}

fn lp_rum_lum_rp(x: f64, y: f64, phi: f64, sp: f64, cp: f64, cap: f64) -> Option<(f64, f64, f64)> {
    let xi = x + sp;
    let eta = y - 1.0 - cp;
    let rho = (20.0 - xi * xi - eta * eta) / 16.0;
    if (0.0..=1.0).contains(&rho) {
        let u = -math::acos(rho);
        if u >= -FRAC_PI_2 && -2.0 * u <= cap {
            let (t, v) = tau_omega(u, u, xi, eta, phi);
            if t >= -ZERO && v >= -ZERO {
                return Some((t, u, v));
            }
        }
    }
    None
}

fn lp_rm_sm_lm(x: f64, y: f64, phi: f64, sp: f64, cp: f64, cap: f64) -> Option<(f64, f64, f64)> {
    let (dx, dy) = (x - sp, y - 1.0 + cp);
    let rho2 = dx * dx + dy * dy;
    if rho2 >= 4.0 {
        let r = math::sqrt(rho2 - 4.0);
        let u = 2.0 - r;
        if FRAC_PI_2 - u > cap {
            return None;
        }
        let theta = math::atan2(dy, dx);
        let t = mod2pi(theta + math::atan2(r, -2.0));
        let v = mod2pi(phi - FRAC_PI_2 - t);
        if t >= -ZERO && u <= ZERO && v <= ZERO {
            return Some((t, u, v));
        }
    }
    None
}

fn lp_rm_sm_rm(x: f64, y: f64, phi: f64, sp: f64, cp: f64, cap: f64) -> Option<(f64, f64, f64)> {
    let xi = x + sp;
    let eta = y - 1.0 - cp;
    let rho = math::sqrt(xi * xi + eta * eta);
    if rho >= 2.0 && FRAC_PI_2 + rho - 2.0 <= cap {
        let t = math::atan2(xi, -eta);
        let u = 2.0 - rho;
        let v = mod2pi(t + FRAC_PI_2 - phi);
        if t >= -ZERO && u <= ZERO && v <= ZERO {
            return Some((t, u, v));
        }
    }
    None
}

fn lp_rm_s_lm_rp(x: f64, y: f64, phi: f64, sp: f64, cp: f64, cap: f64) -> Option<(f64, f64, f64)> {
    let xi = x + sp;
    let eta = y - 1.0 - cp;
    let rho2 = xi * xi + eta * eta;
    if rho2 >= 4.0 {
        let u = 4.0 - math::sqrt(rho2 - 4.0);
        if u <= ZERO && PI - u <= cap {
            let t = mod2pi(math::atan2((4.0 - u) * xi - 2.0 * eta, -2.0 * xi + (u - 4.0) * eta));
            let v = mod2pi(t - phi);
            if t >= -ZERO && v >= -ZERO {
                return Some((t, u, v));
            }
        }
    }
    None
}

/// Best word found so far: family, signed parameters, length.
#[derive(Debug, Clone, Copy)]
struct Word {
    family: usize,
    params: [f64; 5],
    count: usize,
    length: f64,
}

struct Best(Option<Word>);

impl Best {
    /// Length a candidate must not exceed to be worth evaluating.
    fn cap(&self) -> f64 {
        self.0.map_or(f64::INFINITY, |w| w.length + TIE)
    }

    fn offer(&mut self, family: usize, raw: &[f64]) {
        let mut params = [0.0; 5];
        params[..raw.len()].copy_from_slice(raw);
        let length: f64 = raw.iter().map(|p| p.abs()).sum();
        let count = raw.iter().filter(|p| p.abs() > NEGLIGIBLE).count();
        let cand = Word { family, params, count, length };
        let better = match &self.0 {
            None => true,
            Some(b) => {
                if cand.length < b.length - TIE {
                    true
                } else if cand.length <= b.length + TIE {
                    (cand.count, cand.family) < (b.count, b.family)
                } else {
                    false
                }
            }
        };
        if better {
            self.0 = Some(cand);
        }
    }
}

fn csc(x: f64, y: f64, phi: f64, sp: f64, cp: f64, best: &mut Best) {
    if let Some((t, u, v)) = lp_sp_lp(x, y, phi, sp, cp, best.cap()) {
        best.offer(14, &[t, u, v]);
    }
    if let Some((t, u, v)) = lp_sp_lp(-x, y, -phi, -sp, cp, best.cap()) {
        best.offer(14, &[-t, -u, -v]);
    }
    if let Some((t, u, v)) = lp_sp_lp(x, -y, -phi, -sp, cp, best.cap()) {
        best.offer(15, &[t, u, v]);
    }
    if let Some((t, u, v)) = lp_sp_lp(-x, -y, phi, sp, cp, best.cap()) {
        best.offer(15, &[-t, -u, -v]);
    }
    if let Some((t, u, v)) = lp_sp_rp(x, y, phi, sp, cp, best.cap()) {
        best.offer(12, &[t, u, v]);
    }
    if let Some((t, u, v)) = lp_sp_rp(-x, y, -phi, -sp, cp, best.cap()) {
        best.offer(12, &[-t, -u, -v]);
    }
    if let Some((t, u, v)) = lp_sp_rp(x, -y, -phi, -sp, cp, best.cap()) {
        best.offer(13, &[t, u, v]);
    }
    if let Some((t, u, v)) = lp_sp_rp(-x, -y, phi, sp, cp, best.cap()) {
        best.offer(13, &[-t, -u, -v]);
    }
}

fn ccc(x: f64, y: f64, phi: f64, sp: f64, cp: f64, best: &mut Best) {
    if let Some((t, u, v)) = lp_rm_l(x, y, phi, sp, cp, best.cap()) {
        best.offer(0, &[t, u, v]);
    }
    if let Some((t, u, v)) = lp_rm_l(-x, y, -phi, -sp, cp, best.cap()) {
        best.offer(0, &[-t, -u, -v]);
    }
    if let Some((t, u, v)) = lp_rm_l(x, -y, -phi, -sp, cp, best.cap()) {
        best.offer(1, &[t, u, v]);
    }
    if let Some((t, u, v)) = lp_rm_l(-x, -y, phi, sp, cp, best.cap()) {
        best.offer(1, &[-t, -u, -v]);
    }
    let xb = x * cp + y * sp;
    let yb = x * sp - y * cp;
    if let Some((t, u, v)) = lp_rm_l(xb, yb, phi, sp, cp, best.cap()) {
        best.offer(0, &[v, u, t]);
    }
    if let Some((t, u, v)) = lp_rm_l(-xb, yb, -phi, -sp, cp, best.cap()) {
        best.offer(0, &[-v, -u, -t]);
    }
    if let Some((t, u, v)) = lp_rm_l(xb, -yb, -phi, -sp, cp, best.cap()) {
        best.offer(1, &[v, u, t]);
    }
    if let Some((t, u, v)) = lp_rm_l(-xb, -yb, phi, sp, cp, best.cap()) {
        best.offer(1, &[-v, -u, -t]);
    }
}

fn cccc(x: f64, y: f64, phi: f64, sp: f64, cp: f64, best: &mut Best) {
    if let Some((t, u, v)) = lp_rup_lum_rm(x, y, phi, sp, cp, best.cap()) {
        best.offer(2, &[t, u, -u, v]);
    }
    if let Some((t, u, v)) = lp_rup_lum_rm(-x, y, -phi, -sp, cp, best.cap()) {
        best.offer(2, &[-t, -u, u, -v]);
    }
    if let Some((t, u, v)) = lp_rup_lum_rm(x, -y, -phi, -sp, cp, best.cap()) {
        best.offer(3, &[t, u, -u, v]);
    }
    if let Some((t, u, v)) = lp_rup_lum_rm(-x, -y, phi, sp, cp, best.cap()) {
        best.offer(3, &[-t, -u, u, -v]);
    }
    if let Some((t, u, v)) = lp_rum_lum_rp(x, y, phi, sp, cp, best.cap()) {
        best.offer(2, &[t, u, u, v]);
    }
    if let Some((t, u, v)) = lp_rum_lum_rp(-x, y, -phi, -sp, cp, best.cap()) {
        best.offer(2, &[-t, -u, -u, -v]);
    }
    if let Some((t, u, v)) = lp_rum_lum_rp(x, -y, -phi, -sp, cp, best.cap()) {
        best.offer(3, &[t, u, u, v]);
    }
    if let Some((t, u, v)) = lp_rum_lum_rp(-x, -y, phi, sp, cp, best.cap()) {
        best.offer(3, &[-t, -u, -u, -v]);
    }
}

fn ccsc(x: f64, y: f64, phi: f64, sp: f64, cp: f64, best: &mut Best) {
    let q = FRAC_PI_2;
    if let Some((t, u, v)) = lp_rm_sm_lm(x, y, phi, sp, cp, best.cap()) {
        best.offer(4, &[t, -q, u, v]);
    }
    if let Some((t, u, v)) = lp_rm_sm_lm(-x, y, -phi, -sp, cp, best.cap()) {
        best.offer(4, &[-t, q, -u, -v]);
    }
    if let Some((t, u, v)) = lp_rm_sm_lm(x, -y, -phi, -sp, cp, best.cap()) {
        best.offer(5, &[t, -q, u, v]);
    }
    if let Some((t, u, v)) = lp_rm_sm_lm(-x, -y, phi, sp, cp, best.cap()) {
        best.offer(5, &[-t, q, -u, -v]);
    }
    if let Some((t, u, v)) = lp_rm_sm_rm(x, y, phi, sp, cp, best.cap()) {
        best.offer(8, &[t, -q, u, v]);
    }
    if let Some((t, u, v)) = lp_rm_sm_rm(-x, y, -phi, -sp, cp, best.cap()) {
        best.offer(8, &[-t, q, -u, -v]);
    }
    if let Some((t, u, v)) = lp_rm_sm_rm(x, -y, -phi, -sp, cp, best.cap()) {
        best.offer(9, &[t, -q, u, v]);
    }
    if let Some((t, u, v)) = lp_rm_sm_rm(-x, -y, phi, sp, cp, best.cap()) {
        best.offer(9, &[-t, q, -u, -v]);
    }
    let xb = x * cp + y * sp;
    let yb = x * sp - y * cp;
    if let Some((t, u, v)) = lp_rm_sm_lm(xb, yb, phi, sp, cp, best.cap()) {
        best.offer(6, &[v, u, -q, t]);
    }
    if let Some((t, u, v)) = lp_rm_sm_lm(-xb, yb, -phi, -sp, cp, best.cap()) {
        best.offer(6, &[-v, -u, q, -t]);
    }
    if let Some((t, u, v)) = lp_rm_sm_lm(xb, -yb, -phi, -sp, cp, best.cap()) {
        best.offer(7, &[v, u, -q, t]);
    }
    if let Some((t, u, v)) = lp_rm_sm_lm(-xb, -yb, phi, sp, cp, best.cap()) {
        best.offer(7, &[-v, -u, q, -t]);
    }
    if let Some((t, u, v)) = lp_rm_sm_rm(xb, yb, phi, sp, cp, best.cap()) {
        best.offer(10, &[v, u, -q, t]);
    }
    if let Some((t, u, v)) = lp_rm_sm_rm(-xb, yb, -phi, -sp, cp, best.cap()) {
        best.offer(10, &[-v, -u, q, -t]);
    }
    if let Some((t, u, v)) = lp_rm_sm_rm(xb, -yb, -phi, -sp, cp, best.cap()) {
        best.offer(11, &[v, u, -q, t]);
    }
    if let Some((t, u, v)) = lp_rm_sm_rm(-xb, -yb, phi, sp, cp, best.cap()) {
        best.offer(11, &[-v, -u, q, -t]);
    }
}

fn ccscc(x: f64, y: f64, phi: f64, sp: f64, cp: f64, best: &mut Best) {
    let q = FRAC_PI_2;
    if let Some((t, u, v)) = lp_rm_s_lm_rp(x, y, phi, sp, cp, best.cap()) {
        best.offer(16, &[t, -q, u, -q, v]);
    }
    if let Some((t, u, v)) = lp_rm_s_lm_rp(-x, y, -phi, -sp, cp, best.cap()) {
        best.offer(16, &[-t, q, -u, q, -v]);
    }
    if let Some((t, u, v)) = lp_rm_s_lm_rp(x, -y, -phi, -sp, cp, best.cap()) {
        best.offer(17, &[t, -q, u, -q, v]);
    }
    if let Some((t, u, v)) = lp_rm_s_lm_rp(-x, -y, phi, sp, cp, best.cap()) {
        best.offer(17, &[-t, q, -u, q, -v]);
    }
}

fn solve_unit(x: f64, y: f64, phi: f64) -> Word {
    let mut best = Best(None);
    let (sp, cp) = (math::sin(phi), math::cos(phi));
    csc(x, y, phi, sp, cp, &mut best);
    ccc(x, y, phi, sp, cp, &mut best);
    cccc(x, y, phi, sp, cp, &mut best);
    ccsc(x, y, phi, sp, cp, &mut best);
    ccscc(x, y, phi, sp, cp, &mut best);
    // CSC always admits a solution (LSL or its variants cover every delta)
    best.0.expect("Reeds-Shepp CSC family is complete")
}

/// Shortest Reeds-Shepp path for the given delta at turning curvature
/// `curvature` (> 0). The result is labelled as an Ackermann path in the
/// body frame.
pub fn rs_shortest(delta: PoseDelta, curvature: f64) -> RsPath {
    assert!(curvature > 0.0, "curvature must be positive");
    let empty = |family| RsPath {
        mode: MotionMode::Ackermann,
        curvature,
        segments: Vec::new(),
        total_length: 0.0,
        frame: RsFrame::Body,
        family,
    };
    let (x, y, phi) = (delta.x * curvature, delta.y * curvature, delta.theta);
    if math::hypot(x, y) < NEGLIGIBLE && phi.abs() < NEGLIGIBLE {
        return empty(None);
    }
    let word = solve_unit(x, y, phi);
    let kinds = FAMILIES[word.family];
    let mut path = empty(Some(word.family));
    for (kind, &p) in kinds.iter().zip(word.params.iter()) {
        if p.abs() <= NEGLIGIBLE {
            continue;
        }
        let gear = if p >= 0.0 { Gear::Forward } else { Gear::Reverse };
        let (steer, extent) = match kind {
            L => (Steer::Left, p.abs()),
            R => (Steer::Right, p.abs()),
            S => (Steer::Straight, p.abs() / curvature),
        };
        path.segments.push(RsSegment { steer, gear, extent });
    }
    path.total_length = path.segments.iter().map(|s| path.segment_length(s)).sum();
    path
}

impl RsPath {
    /// Metric length of one segment.
    pub fn segment_length(&self, seg: &RsSegment) -> f64 {
        match seg.steer {
            Steer::Straight => seg.extent,
            _ => seg.extent / self.curvature,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    /// The path as body-convention motion pieces. `steer` on the pieces is
    /// recovered from the arc curvature through the mode's steering model.
    pub fn pieces(&self, params: &RobotParams) -> Vec<MotionPiece> {
        self.segments
            .iter()
            .map(|seg| {
                let length = self.segment_length(seg);
                match self.frame {
                    RsFrame::Translation { direction } => MotionPiece {
                        mode: MotionMode::Parallel,
                        gear: Gear::Forward,
                        steer: direction,
                        curvature: 0.0,
                        length,
                    },
                    RsFrame::Body | RsFrame::Lateral => {
                        let mut k = match seg.steer {
                            Steer::Left => self.curvature,
                            Steer::Right => -self.curvature,
                            Steer::Straight => 0.0,
                        };
                        let mut gear = seg.gear;
                        if self.frame == RsFrame::Lateral {
                            // forward in the solved frame is the body's right side
                            k = -k;
                            gear = match gear {
                                Gear::Forward => Gear::Reverse,
                                Gear::Reverse => Gear::Forward,
                            };
                        }
                        MotionPiece {
                            mode: self.mode,
                            gear,
                            steer: curvature_steer(params, self.mode, k),
                            curvature: k,
                            length,
                        }
                    }
                }
            })
            .collect()
    }

    fn geometric_pieces(&self) -> Vec<MotionPiece> {
        // steering angles do not affect geometry; reuse the reference model
        self.pieces(&RobotParams::REFERENCE)
    }

    /// Pose reached from `start` by following the whole path.
    pub fn end_pose(&self, start: &Pose) -> Pose {
        self.geometric_pieces().iter().fold(*start, |p, piece| piece.end_pose(&p))
    }
}

/// Connection from `start` to `goal` using the kinematics of `mode`.
///
/// Parallel movement only connects when the headings agree within
/// `eps_parallel`; the connection is then a straight translation that keeps
/// the start heading.
pub fn mode_rs(start: &Pose, goal: &Pose, mode: MotionMode, params: &RobotParams, eps_parallel: f64) -> Option<RsPath> {
    match mode {
        MotionMode::Ackermann => {
            let mut p = rs_shortest(PoseDelta::between(start, goal), max_curvature(params, mode));
            p.mode = mode;
            Some(p)
        }
        MotionMode::Lateral => {
            let s = Pose::new(start.x, start.y, start.theta - FRAC_PI_2);
            let g = Pose::new(goal.x, goal.y, goal.theta - FRAC_PI_2);
            let mut p = rs_shortest(PoseDelta::between(&s, &g), max_curvature(params, mode));
            p.mode = mode;
            p.frame = RsFrame::Lateral;
            Some(p)
        }
        MotionMode::Parallel => {
            if angle::distance(start.theta, goal.theta) > eps_parallel {
                return None;
            }
            let (dx, dy) = (goal.x - start.x, goal.y - start.y);
            let len = math::hypot(dx, dy);
            let direction = if len > 0.0 { angle::wrap_to_pi(math::atan2(dy, dx) - start.theta) } else { 0.0 };
            let segments = if len > 0.0 {
                alloc::vec![RsSegment { steer: Steer::Straight, gear: Gear::Forward, extent: len }]
            } else {
                Vec::new()
            };
            Some(RsPath {
                mode,
                curvature: 0.0,
                segments,
                total_length: len,
                frame: RsFrame::Translation { direction },
                family: None,
            })
        }
    }
}

/// Poses along `path` from `start`, at most `step` apart, starting with
/// `start` and ending at the path's end pose. Headings follow the body
/// convention in every mode.
pub fn sample_path(path: &RsPath, start: &Pose, step: f64) -> Vec<Pose> {
    let mut out = alloc::vec![*start];
    let mut at = *start;
    for piece in path.geometric_pieces() {
        out.extend(piece.samples(&at, step).into_iter().map(|(p, _)| p));
        at = piece.end_pose(&at);
    }
    out
}
