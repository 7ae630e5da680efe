//! Multi-modal Hybrid A* search.
//!
//! Nodes live in a continuous 4D state space `(x, y, θ, mode)` and are
//! deduplicated on a discrete key. Each expansion applies the intra-modal
//! primitives of the node's mode plus, where allowed, in-place switches to
//! the other enabled modes. Once a node is close enough to the goal the
//! search tries a Reeds-Shepp connection in every enabled mode, cheapest
//! first. A collision-free connection becomes the incumbent when it beats
//! the current one, and the search ends once no open node can improve on it.
//! Hitting the expansion cap with an incumbent returns the incumbent.
//!
//! Children are queued on the cheap obstacle-aware distance and re-queued
//! with the full heuristic when they reach the front of the queue.

mod expand;
mod path;

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::f64::consts::TAU;

pub use expand::{
    connect_below, connection_candidates, event_cost, expand_inter, expand_intra, motion_cost, pick_first_free,
    steer_delta, step_cost, try_analytic_connect, Connection, LastMotion, Primitive,
};
pub use path::{path_metrics, reconstruct_path, CostBreakdown, PathMetrics, Waypoint, WaypointKind};

use crate::angle;
use crate::error::{ParamError, PlanError, WorldError};
use crate::heuristics::HeuristicContext;
use crate::kinematics::{ModeSet, MotionMode, RobotParams};
use crate::math;
use crate::motion::MotionPiece;
use crate::world::{build_distance_field, CollisionChecker, OccupancyGrid, Pose};

/// Continuous search state. The heading is normalised to `[0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct State4D {
    pub x: f64,
    pub y: f64,
    pub theta: f64,
    pub mode: MotionMode,
}

impl State4D {
    pub fn new(x: f64, y: f64, theta: f64, mode: MotionMode) -> Self {
        State4D { x, y, theta: angle::normalize(theta), mode }
    }

    pub fn from_pose(pose: &Pose, mode: MotionMode) -> Self {
        State4D::new(pose.x, pose.y, pose.theta, mode)
    }

    pub fn pose(&self) -> Pose {
        Pose { x: self.x, y: self.y, theta: self.theta }
    }
}

/// Closed-list identity of a state. Ordered lexicographically by field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiscreteKey {
    pub ix: u32,
    pub iy: u32,
    pub itheta: u16,
    pub mode: MotionMode,
}

/// Search settings. Penalties are in cost units (metres at the reference
/// velocity).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanConfig {
    pub reverse_penalty: f64,
    pub steer_penalty: f64,
    pub steer_change_penalty: f64,
    pub direction_change_penalty: f64,
    /// Steering samples per gear for the steering modes; odd so that
    /// straight motion is included.
    pub steer_samples: usize,
    /// Travel directions sampled for parallel movement.
    pub parallel_samples: usize,
    pub heading_bins: usize,
    /// Analytic connections are attempted once the 2D heuristic drops to
    /// this distance (m).
    pub connect_radius: f64,
    /// Heading tolerance (rad) for entering parallel movement and for its
    /// goal connection.
    pub parallel_tolerance: f64,
    pub modes: ModeSet,
    pub max_expansions: usize,
}

impl Default for PlanConfig {
    fn default() -> Self {
        PlanConfig {
            reverse_penalty: 2.0,
            steer_penalty: 1.0,
            steer_change_penalty: 1.0,
            direction_change_penalty: 1.0,
            steer_samples: 5,
            parallel_samples: 8,
            heading_bins: 72,
            connect_radius: 5.0,
            parallel_tolerance: 0.1,
            modes: ModeSet::ALL,
            max_expansions: 500_000,
        }
    }
}

impl PlanConfig {
    /// The Ackermann-only configuration used for comparisons.
    pub fn baseline() -> Self {
        PlanConfig { modes: ModeSet::BASELINE, ..PlanConfig::default() }
    }

    pub fn validate(&self) -> Result<(), ParamError> {
        let bad = |name, reason| Err(ParamError::Config { name, reason });
        for (name, v) in [
            ("reverse_penalty", self.reverse_penalty),
            ("steer_penalty", self.steer_penalty),
            ("steer_change_penalty", self.steer_change_penalty),
            ("direction_change_penalty", self.direction_change_penalty),
        ] {
            if !(v.is_finite() && v >= 0.0) {
                return bad(name, "must be finite and non-negative");
            }
        }
        if self.steer_samples < 3 || self.steer_samples % 2 == 0 {
            return bad("steer_samples", "must be odd and at least 3");
        }
        if self.parallel_samples == 0 {
            return bad("parallel_samples", "must be positive");
        }
        if self.heading_bins < 8 || self.heading_bins > u16::MAX as usize {
            return bad("heading_bins", "must be at least 8");
        }
        if !(self.connect_radius.is_finite() && self.connect_radius > 0.0) {
            return bad("connect_radius", "must be positive");
        }
        if !(self.parallel_tolerance.is_finite() && self.parallel_tolerance >= 0.0) {
            return bad("parallel_tolerance", "must be non-negative");
        }
        if self.modes.is_empty() {
            return bad("modes", "at least one mode is required");
        }
        if self.max_expansions == 0 {
            return bad("max_expansions", "must be positive");
        }
        Ok(())
    }
}

/// A node of the search tree. `piece` is the motion from the parent (absent
/// for the root and for mode switches).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchNode {
    pub state: State4D,
    pub g: f64,
    pub parent: Option<usize>,
    pub last: Option<LastMotion>,
    pub is_switch: bool,
    pub piece: Option<MotionPiece>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PlanStats {
    pub expansions: usize,
    pub generated: usize,
    pub reopened: usize,
    pub open_peak: usize,
    pub analytic_attempts: usize,
    /// Expansions whose f value was lower than the previous expansion's.
    pub f_regressions: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlanResult {
    pub waypoints: Vec<Waypoint>,
    pub total_length: f64,
    pub total_cost: f64,
    pub switch_count: usize,
    /// Mode of the final analytic connection.
    pub connection_mode: MotionMode,
    pub stats: PlanStats,
}

/// Closed-list key of a state.
pub fn discretize(state: &State4D, config: &PlanConfig, grid: &OccupancyGrid) -> Result<DiscreteKey, PlanError> {
    let (ix, iy) = grid.cell_of(state.x, state.y).ok_or(PlanError::OutOfBounds { x: state.x, y: state.y })?;
    let n = config.heading_bins;
    let bin = crate::math::floor(angle::normalize(state.theta) * n as f64 / TAU) as usize;
    Ok(DiscreteKey { ix: ix as u32, iy: iy as u32, itheta: bin.min(n - 1) as u16, mode: state.mode })
}

fn key_index(key: &DiscreteKey, grid: &OccupancyGrid, config: &PlanConfig) -> usize {
    ((key.iy as usize * grid.width() + key.ix as usize) * config.heading_bins + key.itheta as usize) * 3
        + (key.mode.number() as usize - 1)
}

/// `exact` is false while `f` still uses the cheap obstacle-aware distance
/// instead of the full heuristic.
#[derive(Debug)]
struct OpenEntry {
    f: f64,
    g: f64,
    key: DiscreteKey,
    node: usize,
    exact: bool,
}

impl PartialEq for OpenEntry {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for OpenEntry {}

impl Ord for OpenEntry {
    // reversed: the max-heap pops the lowest f, then g, then key
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .f
            .total_cmp(&self.f)
            .then_with(|| other.g.total_cmp(&self.g))
            .then_with(|| other.key.cmp(&self.key))
            .then_with(|| other.node.cmp(&self.node))
    }
}

impl PartialOrd for OpenEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

const IMPROVEMENT: f64 = 1e-9;

/// Intra-modal primitives of one mode with their collision samples in the
/// frame of the start pose.
struct PrimitiveTable {
    mode: MotionMode,
    moves: Vec<(MotionPiece, Vec<Pose>)>,
}

impl PrimitiveTable {
    fn new(mode: MotionMode, config: &PlanConfig, params: &RobotParams, step: f64) -> Self {
        let origin = Pose { x: 0.0, y: 0.0, theta: 0.0 };
        let probe = State4D { x: 0.0, y: 0.0, theta: 0.0, mode };
        let moves = expand_intra(&probe, config, params)
            .into_iter()
            .map(|p| (p, p.samples(&origin, step).into_iter().map(|(q, _)| q).collect()))
            .collect();
        PrimitiveTable { mode, moves }
    }
}

fn place(from: &Pose, (s, c): (f64, f64), rel: &Pose) -> Pose {
    Pose::new(from.x + c * rel.x - s * rel.y, from.y + s * rel.x + c * rel.y, from.theta + rel.theta)
}

/// Plans from `start` to `goal`.
///
/// Uses the multi-modal heuristic, or the Ackermann-only heuristic when the
/// mode set is exactly `{Ackermann}`.
pub fn plan(
    grid: &OccupancyGrid,
    params: &RobotParams,
    config: &PlanConfig,
    start: State4D,
    goal: Pose,
) -> Result<PlanResult, PlanError> {
    params.validate()?;
    config.validate()?;
    if !config.modes.contains(start.mode) {
        return Err(PlanError::StartModeDisabled(start.mode));
    }
    let start = State4D::new(start.x, start.y, start.theta, start.mode);
    let goal = Pose::new(goal.x, goal.y, goal.theta);
    let start_key = discretize(&start, config, grid)?;
    let goal_cell = grid.cell_of(goal.x, goal.y).ok_or(PlanError::OutOfBounds { x: goal.x, y: goal.y })?;
    let checker = CollisionChecker::new(grid, params.footprint());
    if !checker.is_pose_free(&start.pose()) {
        return Err(PlanError::StartInCollision);
    }
    if !checker.is_pose_free(&goal) {
        return Err(PlanError::GoalInCollision);
    }
    let field = build_distance_field(grid, params.half_width, goal_cell).map_err(|e| match e {
        WorldError::GoalOccupied(..) => PlanError::GoalInCollision,
        _ => PlanError::OutOfBounds { x: goal.x, y: goal.y },
    })?;
    let ctx = HeuristicContext::new(grid, &field, *params, goal, config.modes, config.parallel_tolerance)?;
    let baseline = config.modes == ModeSet::BASELINE;
    let h = |s: &State4D| if baseline { ctx.h_baseline(s) } else { ctx.h_multimodal(s) };

    let h0 = h(&start);
    if !h0.is_finite() {
        return Err(PlanError::Unreachable);
    }
    let step = checker.sample_step();
    let mut stats = PlanStats::default();
    let mut nodes = vec![SearchNode { state: start, g: 0.0, parent: None, last: None, is_switch: false, piece: None }];
    let slots = grid.width() * grid.height() * config.heading_bins * 3;
    let mut best_g = vec![f64::INFINITY; slots];
    let mut best_node = vec![usize::MAX; slots];
    let si = key_index(&start_key, grid, config);
    best_g[si] = 0.0;
    best_node[si] = 0;
    let tables: Vec<PrimitiveTable> =
        config.modes.iter().map(|m| PrimitiveTable::new(m, config, params, step)).collect();
    let mut open = BinaryHeap::new();
    open.push(OpenEntry { f: h0, g: 0.0, key: start_key, node: 0, exact: true });
    let mut last_f = f64::NEG_INFINITY;
    let mut incumbent: Option<(usize, Connection, f64)> = None;
    let bound = |inc: &Option<(usize, Connection, f64)>| inc.as_ref().map_or(f64::INFINITY, |(_, _, c)| *c);

    while let Some(OpenEntry { f, g, key, node: idx, exact }) = open.pop() {
        if best_node[key_index(&key, grid, config)] != idx {
            continue;
        }
        if f >= bound(&incumbent) - IMPROVEMENT {
            break;
        }
        if !exact {
            let full = g + h(&nodes[idx].state);
            if full > f {
                open.push(OpenEntry { f: full, g, key, node: idx, exact: true });
                continue;
            }
        }
        if stats.expansions >= config.max_expansions {
            if incumbent.is_some() {
                break;
            }
            return Err(PlanError::IterationCap { expansions: stats.expansions });
        }
        stats.expansions += 1;
        if f < last_f - IMPROVEMENT {
            stats.f_regressions += 1;
        }
        last_f = f;
        let node = nodes[idx];

        if ctx.h_euc(&node.state) <= config.connect_radius {
            stats.analytic_attempts += 1;
            let budget = bound(&incumbent) - node.g - IMPROVEMENT;
            if let Some(conn) =
                connect_below(&node.state, node.last, node.is_switch, &goal, &checker, config, params, budget)
            {
                let total = node.g + conn.cost;
                if total < bound(&incumbent) - IMPROVEMENT {
                    incumbent = Some((idx, conn, total));
                }
            }
        }
        let limit = bound(&incumbent);

        let mut push = |child: SearchNode, nodes: &mut Vec<SearchNode>, stats: &mut PlanStats| {
            let Ok(ck) = discretize(&child.state, config, grid) else { return };
            let ki = key_index(&ck, grid, config);
            if child.g >= best_g[ki] - IMPROVEMENT {
                return;
            }
            let hc = ctx.h_euc(&child.state);
            if !hc.is_finite() || child.g + hc >= limit - IMPROVEMENT {
                return;
            }
            if best_node[ki] != usize::MAX {
                stats.reopened += 1;
            }
            stats.generated += 1;
            best_g[ki] = child.g;
            best_node[ki] = nodes.len();
            open.push(OpenEntry { f: child.g + hc, g: child.g, key: ck, node: nodes.len(), exact: false });
            nodes.push(child);
        };

        let pose = node.state.pose();
        let sc = (math::sin(pose.theta), math::cos(pose.theta));
        let table = tables.iter().find(|t| t.mode == node.state.mode).expect("mode is enabled");
        for (piece, rel) in &table.moves {
            let piece = *piece;
            let mut end = pose;
            if !rel.iter().all(|r| {
                end = place(&pose, sc, r);
                checker.is_pose_free(&end)
            }) {
                continue;
            }
            let g = node.g + step_cost(node.last, &Primitive::Move(piece), config, params);
            let child = SearchNode {
                state: State4D::from_pose(&end, node.state.mode),
                g,
                parent: Some(idx),
                last: Some(LastMotion { gear: piece.gear, steer: piece.steer }),
                is_switch: false,
                piece: Some(piece),
            };
            push(child, &mut nodes, &mut stats);
        }
        for mode in expand_inter(&node.state, node.is_switch, &goal, config) {
            let child = SearchNode {
                state: State4D { mode, ..node.state },
                g: node.g + step_cost(node.last, &Primitive::Switch(mode), config, params),
                parent: Some(idx),
                last: None,
                is_switch: true,
                piece: None,
            };
            push(child, &mut nodes, &mut stats);
        }
        stats.open_peak = stats.open_peak.max(open.len());
    }
    let Some((leaf, conn, total_cost)) = incumbent else {
        return Err(PlanError::Exhausted { expansions: stats.expansions });
    };
    let waypoints = reconstruct_path(&nodes, leaf, Some(&conn), params, step)?;
    let switch_count = waypoints.windows(2).filter(|w| w[0].mode != w[1].mode).count();
    let total_length = waypoints.last().map_or(0.0, |w| w.cum_length);
    Ok(PlanResult { waypoints, total_length, total_cost, switch_count, connection_mode: conn.path.mode, stats })
}
