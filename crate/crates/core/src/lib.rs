//! Multi-modal Hybrid A* planning for four-wheel independent steering (4WIS)
//! robots.
//!
//! The search runs over a four dimensional state `(x, y, heading, mode)` where
//! the mode is one of Ackermann steering, lateral steering or parallel
//! (crab) translation. Every mode has its own motion primitives and its own
//! Reeds-Shepp connection, and switching between modes is charged a
//! time-derived penalty so that it is commensurable with path length.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the command
//! line and rendering live in the `quadsteer` companion crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod angle;
pub mod error;
pub mod heuristics;
pub mod kinematics;
mod math;
pub mod motion;
pub mod planner;
pub mod rs;
pub mod world;

pub use error::{ParamError, PlanError, WorldError};
pub use heuristics::HeuristicContext;
pub use kinematics::{BodyTwist, ModeSet, MotionMode, RobotParams, WheelCommand};
pub use motion::{Gear, MotionPiece};
pub use planner::{
    plan, CostBreakdown, DiscreteKey, PathMetrics, PlanConfig, PlanResult, PlanStats, State4D, Waypoint, WaypointKind,
};
pub use rs::{mode_rs, rs_shortest, sample_path, PoseDelta, RsFrame, RsPath, RsSegment, Steer};
pub use world::{build_distance_field, ClearanceMap, CollisionChecker, DistanceField, Footprint, OccupancyGrid, Pose};
