//! Cost-to-go estimates: the obstacle-aware 2D term, per-mode Reeds-Shepp
//! terms and their baseline and multi-modal combinations.

use crate::error::ParamError;
use crate::kinematics::{ModeSet, MotionMode, RobotParams};
use crate::planner::State4D;
use crate::rs::mode_rs;
use crate::world::{DistanceField, OccupancyGrid, Pose};

/// Everything the heuristics need about one query. Read-only, so a single
/// context can be shared between threads.
#[derive(Debug, Clone)]
pub struct HeuristicContext<'a> {
    grid: &'a OccupancyGrid,
    field: &'a DistanceField,
    params: RobotParams,
    goal: Pose,
    modes: ModeSet,
    switch_cost: f64,
    parallel_tolerance: f64,
    goal_offset: f64,
}

impl<'a> HeuristicContext<'a> {
    pub fn new(
        grid: &'a OccupancyGrid,
        field: &'a DistanceField,
        params: RobotParams,
        goal: Pose,
        modes: ModeSet,
        parallel_tolerance: f64,
    ) -> Result<Self, ParamError> {
        params.validate()?;
        if modes.is_empty() {
            return Err(ParamError::Config { name: "modes", reason: "at least one mode is required" });
        }
        let (gx, gy) = field.goal_cell();
        let (cx, cy) = grid.cell_center(gx, gy);
        Ok(HeuristicContext {
            grid,
            field,
            params,
            goal,
            modes,
            switch_cost: params.switch_cost(),
            parallel_tolerance,
            goal_offset: crate::math::hypot(goal.x - cx, goal.y - cy),
        })
    }

    pub fn goal(&self) -> &Pose {
        &self.goal
    }

    pub fn modes(&self) -> ModeSet {
        self.modes
    }

    pub fn switch_cost(&self) -> f64 {
        self.switch_cost
    }

    /// Obstacle-aware distance to the goal position (m).
    ///
    /// The field stores centre-to-centre distances, so the offsets of the
    /// state and the goal from their cell centres are subtracted to keep the
    /// value a lower bound; the straight-line distance bounds it from below.
    /// Infinite outside the map or in cells cut off from the goal.
    pub fn h_euc(&self, state: &State4D) -> f64 {
        let Some((ix, iy)) = self.grid.cell_of(state.x, state.y) else {
            return f64::INFINITY;
        };
        let v = self.field.value(ix, iy);
        if !v.is_finite() {
            return f64::INFINITY;
        }
        let (cx, cy) = self.grid.cell_center(ix, iy);
        let offset = crate::math::hypot(state.x - cx, state.y - cy);
        let straight = crate::math::hypot(self.goal.x - state.x, self.goal.y - state.y);
        straight.max(v - offset - self.goal_offset).max(0.0)
    }

    /// Obstacle-free connection length in `mode`, or `None` when parallel
    /// movement is gated off by heading misalignment.
    pub fn h_rs_mode(&self, state: &State4D, mode: MotionMode) -> Option<f64> {
        mode_rs(&state.pose(), &self.goal, mode, &self.params, self.parallel_tolerance).map(|p| p.total_length)
    }

    /// Ackermann-only estimate: the larger of the 2D and Reeds-Shepp terms.
    pub fn h_baseline(&self, state: &State4D) -> f64 {
        let rs = self.h_rs_mode(state, MotionMode::Ackermann).unwrap_or(0.0);
        self.h_euc(state).max(rs)
    }

    /// Multi-modal estimate over the context's mode set.
    pub fn h_multimodal(&self, state: &State4D) -> f64 {
        let terms = self.modes.iter().filter_map(|m| self.h_rs_mode(state, m).map(|h| (m, h)));
        combine(self.h_euc(state), state.mode, terms, self.switch_cost)
    }
}

/// `max(h_euc, min over m' of h_rs(m') + C_switch·[m' ≠ current])`. Falls
/// back to `h_euc` when there are no terms.
pub fn combine(
    h_euc: f64,
    current: MotionMode,
    rs_terms: impl IntoIterator<Item = (MotionMode, f64)>,
    switch_cost: f64,
) -> f64 {
    let best =
        rs_terms.into_iter().map(|(m, h)| if m == current { h } else { h + switch_cost }).fold(f64::INFINITY, f64::min);
    if best.is_finite() {
        h_euc.max(best)
    } else {
        h_euc
    }
}
