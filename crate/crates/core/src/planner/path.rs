//! Waypoint reconstruction and cost replay.

use alloc::format;
use alloc::vec::Vec;

use super::expand::{steer_delta, Connection, LastMotion};
use super::{PlanConfig, SearchNode};
use crate::error::PlanError;
use crate::kinematics::{MotionMode, RobotParams};
use crate::motion::{Gear, MotionPiece};
use crate::world::Pose;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WaypointKind {
    Start,
    /// Sample of a search primitive.
    Motion,
    /// Zero-displacement mode change.
    Switch,
    /// Sample of the terminal connection.
    Connection,
}

/// One record of a planned path. `gear` and `steer` describe the motion that
/// arrived at this record.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Waypoint {
    pub pose: Pose,
    pub mode: MotionMode,
    pub gear: Gear,
    pub steer: f64,
    pub cum_length: f64,
    pub kind: WaypointKind,
}

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct CostBreakdown {
    pub length: f64,
    pub reverse: f64,
    pub steer: f64,
    pub steer_change: f64,
    pub direction_change: f64,
    pub switch: f64,
}

impl CostBreakdown {
    pub fn total(&self) -> f64 {
        self.length + self.reverse + self.steer + self.steer_change + self.direction_change + self.switch
    }

    /// Every component except the switch penalties.
    pub fn non_switch(&self) -> f64 {
        self.length + self.reverse + self.steer + self.steer_change + self.direction_change
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct PathMetrics {
    pub length: f64,
    pub cost: f64,
    pub switches: usize,
    pub breakdown: CostBreakdown,
}

fn push_piece(out: &mut Vec<Waypoint>, from: &Pose, piece: &MotionPiece, step: f64, kind: WaypointKind) -> Pose {
    let base = out.last().map_or(0.0, |w| w.cum_length);
    for (pose, s) in piece.samples(from, step) {
        out.push(Waypoint { pose, mode: piece.mode, gear: piece.gear, steer: piece.steer, cum_length: base + s, kind });
    }
    piece.end_pose(from)
}

fn push_switch(out: &mut Vec<Waypoint>, mode: MotionMode) {
    let prev = *out.last().expect("switch after a start record");
    out.push(Waypoint { mode, gear: Gear::Forward, steer: 0.0, kind: WaypointKind::Switch, ..prev });
}

/// Waypoints from the root of `nodes` to `leaf`, followed by the samples of
/// the terminal connection. Motion samples are at most `step` apart.
pub fn reconstruct_path(
    nodes: &[SearchNode],
    leaf: usize,
    tail: Option<&Connection>,
    params: &RobotParams,
    step: f64,
) -> Result<Vec<Waypoint>, PlanError> {
    let mut chain = Vec::new();
    let mut at = Some(leaf);
    while let Some(i) = at {
        if chain.len() > nodes.len() {
            return Err(PlanError::Internal(format!("cyclic parent chain at node {i}")));
        }
        let node = nodes.get(i).ok_or_else(|| PlanError::Internal(format!("missing node {i}")))?;
        chain.push(i);
        at = node.parent;
    }
    chain.reverse();
    let root = &nodes[chain[0]];
    let mut out = Vec::new();
    out.push(Waypoint {
        pose: root.state.pose(),
        mode: root.state.mode,
        gear: Gear::Forward,
        steer: 0.0,
        cum_length: 0.0,
        kind: WaypointKind::Start,
    });
    let mut pose = root.state.pose();
    for &i in &chain[1..] {
        let node = &nodes[i];
        match node.piece {
            Some(piece) => {
                push_piece(&mut out, &pose, &piece, step, WaypointKind::Motion);
                // continue from the node's stored pose so the tail starts exactly there
                pose = node.state.pose();
            }
            None => push_switch(&mut out, node.state.mode),
        }
    }
    if let Some(conn) = tail {
        if conn.switched {
            push_switch(&mut out, conn.path.mode);
        }
        for piece in conn.path.pieces(params) {
            pose = push_piece(&mut out, &pose, &piece, step, WaypointKind::Connection);
        }
    }
    Ok(out)
}

/// Length and cost of a waypoint stream, recomputed record by record.
///
/// A mode change between consecutive records is a switch; every other pair
/// is motion whose length is the difference of cumulative lengths, charged
/// with the arriving record's gear and steering.
pub fn path_metrics(waypoints: &[Waypoint], config: &PlanConfig, params: &RobotParams) -> PathMetrics {
    let mut b = CostBreakdown::default();
    let mut switches = 0;
    let mut prev: Option<LastMotion> = None;
    let ds = params.step_length();
    for w in waypoints.windows(2) {
        let (a, c) = (&w[0], &w[1]);
        if c.mode != a.mode {
            switches += 1;
            b.switch += params.switch_cost();
            prev = None;
            continue;
        }
        let len = c.cum_length - a.cum_length;
        let frac = len / ds;
        b.length += len;
        if c.gear == Gear::Reverse {
            b.reverse += frac * config.reverse_penalty;
        }
        b.steer += frac * config.steer_penalty * c.steer.abs();
        if let Some(p) = prev {
            b.steer_change += config.steer_change_penalty * steer_delta(c.mode, p.steer, c.steer);
            if c.gear != p.gear {
                b.direction_change += config.direction_change_penalty;
            }
        }
        prev = Some(LastMotion { gear: c.gear, steer: c.steer });
    }
    PathMetrics { length: waypoints.last().map_or(0.0, |w| w.cum_length), cost: b.total(), switches, breakdown: b }
}
