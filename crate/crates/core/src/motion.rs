//! Constant-curvature motion pieces shared by the search primitives and the
//! Reeds-Shepp connections.

use alloc::vec::Vec;
use core::f64::consts::FRAC_PI_2;

use crate::kinematics::MotionMode;
use crate::math;
use crate::world::Pose;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gear {
    Forward,
    Reverse,
}

impl Gear {
    pub fn sign(self) -> f64 {
        match self {
            Gear::Forward => 1.0,
            Gear::Reverse => -1.0,
        }
    }

    pub fn from_sign(sign: i8) -> Option<Gear> {
        match sign {
            1 => Some(Gear::Forward),
            -1 => Some(Gear::Reverse),
            _ => None,
        }
    }
}

/// One constant-curvature motion in a given mode.
///
/// * Ackermann: travels along the heading; the heading turns at `curvature`
///   per metre of forward travel.
/// * Lateral: travels along the body `+y` axis (heading + π/2); the heading
///   turns at `curvature` per metre of forward travel.
/// * Parallel: translates along `heading + steer` without rotating.
///
/// `steer` is the virtual steering angle for the steering modes and the
/// body-frame travel direction for parallel movement; it is what the cost
/// model charges.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MotionPiece {
    pub mode: MotionMode,
    pub gear: Gear,
    pub steer: f64,
    pub curvature: f64,
    pub length: f64,
}

impl MotionPiece {
    fn travel_offset(&self) -> f64 {
        match self.mode {
            MotionMode::Ackermann => 0.0,
            MotionMode::Lateral => FRAC_PI_2,
            MotionMode::Parallel => self.steer,
        }
    }

    /// Pose after travelling arc length `s` from `start`.
    pub fn pose_at(&self, start: &Pose, s: f64) -> Pose {
        let sigma = self.gear.sign() * s;
        let psi = start.theta + self.travel_offset();
        let k = if self.mode == MotionMode::Parallel { 0.0 } else { self.curvature };
        if k.abs() < 1e-12 {
            return Pose::new(start.x + sigma * math::cos(psi), start.y + sigma * math::sin(psi), start.theta);
        }
        let turn = k * sigma;
        Pose::new(
            start.x + (math::sin(psi + turn) - math::sin(psi)) / k,
            start.y - (math::cos(psi + turn) - math::cos(psi)) / k,
            start.theta + turn,
        )
    }

    pub fn end_pose(&self, start: &Pose) -> Pose {
        self.pose_at(start, self.length)
    }

    /// Poses spaced evenly and at most `step` apart, excluding `start` and
    /// ending exactly at the end pose. Each entry carries its arc length from
    /// `start`.
    pub fn samples(&self, start: &Pose, step: f64) -> Vec<(Pose, f64)> {
        if self.length <= 0.0 {
            return Vec::new();
        }
        let n = (math::ceil(self.length / step - 1e-9) as usize).max(1);
        (1..=n)
            .map(|k| {
                let s = if k == n { self.length } else { self.length * k as f64 / n as f64 };
                (self.pose_at(start, s), s)
            })
            .collect()
    }
}
