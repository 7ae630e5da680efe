//! Successor generation, the step cost and the terminal connection.

use alloc::vec::Vec;
use core::f64::consts::TAU;

use super::{PlanConfig, State4D};
use crate::angle;
use crate::kinematics::{steer_curvature, MotionMode, RobotParams};
use crate::motion::{Gear, MotionPiece};
use crate::rs::{mode_rs, sample_path, RsPath};
use crate::world::{CollisionChecker, Pose};

/// Gear and steering of the most recent motion, used for the change
/// penalties. Absent at the root and directly after a mode switch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LastMotion {
    pub gear: Gear,
    pub steer: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Primitive {
    Move(MotionPiece),
    Switch(MotionMode),
}

/// Intra-modal primitives of the state's mode, each one step long.
///
/// Steering modes sample `steer_samples` angles across the steering range in
/// both gears; parallel movement samples `parallel_samples` body-frame
/// directions, forward only.
pub fn expand_intra(state: &State4D, config: &PlanConfig, params: &RobotParams) -> Vec<MotionPiece> {
    let length = params.step_length();
    let mode = state.mode;
    match mode {
        MotionMode::Ackermann | MotionMode::Lateral => {
            let n = config.steer_samples;
            let half = (n - 1) as f64;
            let mut out = Vec::with_capacity(2 * n);
            for gear in [Gear::Forward, Gear::Reverse] {
                for i in 0..n {
                    let steer = params.max_steer * (2.0 * i as f64 - half) / half;
                    let curvature = steer_curvature(params, mode, steer);
                    out.push(MotionPiece { mode, gear, steer, curvature, length });
                }
            }
            out
        }
        MotionMode::Parallel => (0..config.parallel_samples)
            .map(|k| MotionPiece {
                mode,
                gear: Gear::Forward,
                steer: angle::wrap_to_pi(TAU * k as f64 / config.parallel_samples as f64),
                curvature: 0.0,
                length,
            })
            .collect(),
    }
}

/// Modes reachable by an in-place switch. Switch nodes cannot switch again,
/// and parallel movement needs the heading to match the goal's.
pub fn expand_inter(state: &State4D, is_switch: bool, goal: &Pose, config: &PlanConfig) -> Vec<MotionMode> {
    if is_switch {
        return Vec::new();
    }
    config
        .modes
        .iter()
        .filter(|&m| m != state.mode)
        .filter(|&m| m != MotionMode::Parallel || angle::distance(state.theta, goal.theta) <= config.parallel_tolerance)
        .collect()
}

/// Length, reverse and steering cost of `length` metres of motion.
/// Reverse and steering penalties are charged per step length travelled.
pub fn motion_cost(length: f64, gear: Gear, steer: f64, config: &PlanConfig, params: &RobotParams) -> f64 {
    let reverse = if gear == Gear::Reverse { config.reverse_penalty } else { 0.0 };
    length + (length / params.step_length()) * (reverse + config.steer_penalty * steer.abs())
}

/// Steering change between consecutive motions. Parallel directions are
/// angles, so their difference wraps.
pub fn steer_delta(mode: MotionMode, from: f64, to: f64) -> f64 {
    if mode == MotionMode::Parallel {
        angle::distance(from, to)
    } else {
        (to - from).abs()
    }
}

/// Steering-change and direction-change cost of starting a motion after
/// `prev`.
pub fn event_cost(prev: Option<LastMotion>, mode: MotionMode, gear: Gear, steer: f64, config: &PlanConfig) -> f64 {
    let Some(prev) = prev else { return 0.0 };
    let dsteer = steer_delta(mode, prev.steer, steer);
    let flip = if gear != prev.gear { config.direction_change_penalty } else { 0.0 };
    config.steer_change_penalty * dsteer + flip
}

/// Cost increment of applying `primitive` after `prev`.
pub fn step_cost(prev: Option<LastMotion>, primitive: &Primitive, config: &PlanConfig, params: &RobotParams) -> f64 {
    match primitive {
        Primitive::Switch(_) => params.switch_cost(),
        Primitive::Move(p) => {
            motion_cost(p.length, p.gear, p.steer, config, params) + event_cost(prev, p.mode, p.gear, p.steer, config)
        }
    }
}

/// A terminal connection. `rank` orders candidates (path length plus the
/// switch cost); `cost` is the full cost of the tail including penalties.
#[derive(Debug, Clone, PartialEq)]
pub struct Connection {
    pub path: RsPath,
    pub switched: bool,
    pub rank: f64,
    pub cost: f64,
}

/// Candidate connections from `state`, sorted by rank then mode number.
/// Switch nodes only connect in their own mode.
pub fn connection_candidates(
    state: &State4D,
    is_switch: bool,
    goal: &Pose,
    config: &PlanConfig,
    params: &RobotParams,
) -> Vec<(f64, RsPath)> {
    let pose = state.pose();
    let mut out: Vec<(f64, RsPath)> = config
        .modes
        .iter()
        .filter(|&m| !is_switch || m == state.mode)
        .filter_map(|m| mode_rs(&pose, goal, m, params, config.parallel_tolerance))
        .map(|p| {
            let switch = if p.mode != state.mode { params.switch_cost() } else { 0.0 };
            (p.total_length + switch, p)
        })
        .collect();
    out.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.mode.cmp(&b.1.mode)));
    out
}

/// First candidate accepted by `is_free`, in the given order.
pub fn pick_first_free<T>(candidates: impl IntoIterator<Item = T>, mut is_free: impl FnMut(&T) -> bool) -> Option<T> {
    candidates.into_iter().find(|c| is_free(c))
}

/// Tries the candidate connections in order and returns the first whose
/// sampled poses are all collision-free.
pub fn try_analytic_connect(
    state: &State4D,
    last: Option<LastMotion>,
    is_switch: bool,
    goal: &Pose,
    checker: &CollisionChecker<'_>,
    config: &PlanConfig,
    params: &RobotParams,
) -> Option<Connection> {
    connect_below(state, last, is_switch, goal, checker, config, params, f64::INFINITY)
}

/// [`try_analytic_connect`] restricted to candidates ranked below `budget`.
/// A connection never costs less than its rank, so candidates at or above
/// the budget cannot produce a cheaper connection.
#[allow(clippy::too_many_arguments)]
pub fn connect_below(
    state: &State4D,
    last: Option<LastMotion>,
    is_switch: bool,
    goal: &Pose,
    checker: &CollisionChecker<'_>,
    config: &PlanConfig,
    params: &RobotParams,
    budget: f64,
) -> Option<Connection> {
    let pose = state.pose();
    let step = checker.sample_step();
    let candidates = connection_candidates(state, is_switch, goal, config, params);
    let (rank, path) = pick_first_free(candidates.into_iter().take_while(|(r, _)| *r < budget), |(_, p)| {
        checker.is_motion_free(&sample_path(p, &pose, step))
    })?;
    let switched = path.mode != state.mode;
    let mut prev = if switched { None } else { last };
    let mut cost = if switched { params.switch_cost() } else { 0.0 };
    for piece in path.pieces(params) {
        cost += step_cost(prev, &Primitive::Move(piece), config, params);
        prev = Some(LastMotion { gear: piece.gear, steer: piece.steer });
    }
    Some(Connection { path, switched, rank, cost })
}
