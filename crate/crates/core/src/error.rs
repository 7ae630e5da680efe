//! Error types shared across the crate.

use alloc::string::String;

use crate::kinematics::MotionMode;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ParamError {
    #[error("robot parameter `{name}` is invalid: {reason}")]
    Robot { name: &'static str, reason: &'static str },
    #[error("planner setting `{name}` is invalid: {reason}")]
    Config { name: &'static str, reason: &'static str },
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum WorldError {
    #[error("grid must have positive resolution and at least one cell")]
    EmptyGrid,
    #[error("cell data has {got} entries, expected {expected}")]
    CellCount { expected: usize, got: usize },
    #[error("goal cell ({0}, {1}) lies outside the grid")]
    GoalOutOfBounds(usize, usize),
    #[error("goal cell ({0}, {1}) is occupied or too close to an obstacle")]
    GoalOccupied(usize, usize),
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PlanError {
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error("start pose is in collision")]
    StartInCollision,
    #[error("goal pose is in collision")]
    GoalInCollision,
    #[error("goal is unreachable from the start")]
    Unreachable,
    #[error("state ({x:.3}, {y:.3}) lies outside the map")]
    OutOfBounds { x: f64, y: f64 },
    #[error("start mode {0:?} is not in the enabled mode set")]
    StartModeDisabled(MotionMode),
    #[error("open list exhausted after {expansions} expansions")]
    Exhausted { expansions: usize },
    #[error("iteration cap reached after {expansions} expansions")]
    IterationCap { expansions: usize },
    #[error("internal error: {0}")]
    Internal(String),
}
