//! Static environment: occupancy grid, robot footprint, collision checks and
//! the obstacle-aware distance field used by the unconstrained heuristic.

mod clearance;
mod collision;
mod field;
mod grid;

pub use clearance::ClearanceMap;
pub use collision::{is_motion_free, is_pose_free, CollisionChecker};
pub use field::{build_distance_field, line_of_sight, DistanceField};
pub use grid::OccupancyGrid;

use crate::angle;

/// A planar pose with heading normalised to `[0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Pose {
    pub x: f64,
    pub y: f64,
    pub theta: f64,
}

impl Pose {
    pub fn new(x: f64, y: f64, theta: f64) -> Self {
        Pose { x, y, theta: angle::normalize(theta) }
    }

    pub fn distance_to(&self, other: &Pose) -> f64 {
        crate::math::hypot(other.x - self.x, other.y - self.y)
    }
}

/// Robot rectangle centred on the body origin and aligned with the heading.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Footprint {
    pub half_length: f64,
    pub half_width: f64,
}

impl Footprint {
    pub fn new(half_length: f64, half_width: f64) -> Self {
        Footprint { half_length, half_width }
    }

    /// Corners in world coordinates, counter-clockwise from front-left.
    pub fn corners(&self, pose: &Pose) -> [(f64, f64); 4] {
        let (s, c) = (crate::math::sin(pose.theta), crate::math::cos(pose.theta));
        let (l, w) = (self.half_length, self.half_width);
        [(l, w), (-l, w), (-l, -w), (l, -w)].map(|(bx, by)| (pose.x + c * bx - s * by, pose.y + s * bx + c * by))
    }
}
