//! Geometry and wheel-level kinematics of a four-wheel independent steering
//! chassis.
//!
//! Wheels are numbered 1..4 as front-left, front-right, rear-left,
//! rear-right and stored at indices 0..3. The body frame has `x` forward and
//! `y` to the left.

use core::f64::consts::{FRAC_PI_2, FRAC_PI_6, PI};

use crate::error::ParamError;
use crate::math;
use crate::world::Footprint;

/// Geometric and kinematic constants of the robot.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RobotParams {
    /// Half of the body length (m).
    pub half_length: f64,
    /// Half of the body width (m).
    pub half_width: f64,
    /// Distance between front and rear axles (m).
    pub wheelbase: f64,
    /// Distance between left and right wheels (m).
    pub track_width: f64,
    /// Steering limit of the virtual steering angle (rad).
    pub max_steer: f64,
    /// Steering rate limit (rad/s).
    pub max_steer_rate: f64,
    pub wheel_radius: f64,
    /// Reference velocity used to size primitives and switch penalties (m/s).
    pub v_ref: f64,
    /// Sampling time of one motion primitive (s).
    pub dt: f64,
    /// Time needed to reconfigure the wheels for another mode (s).
    pub t_switch: f64,
}

impl RobotParams {
    /// The reference platform: 1.00 m x 0.62 m body, 0.68 m wheelbase,
    /// 0.52 m track, 30° steering, 180°/s steering rate, 1 m/s reference
    /// velocity, 0.4 s sampling time and a 1 s mode switch.
    pub const REFERENCE: RobotParams = RobotParams {
        half_length: 0.50,
        half_width: 0.31,
        wheelbase: 0.68,
        track_width: 0.52,
        max_steer: FRAC_PI_6,
        max_steer_rate: PI,
        wheel_radius: 0.13,
        v_ref: 1.0,
        dt: 0.4,
        t_switch: 1.0,
    };

    pub fn validate(&self) -> Result<(), ParamError> {
        let positive = [
            ("half_length", self.half_length),
            ("half_width", self.half_width),
            ("wheelbase", self.wheelbase),
            ("track_width", self.track_width),
            ("max_steer_rate", self.max_steer_rate),
            ("wheel_radius", self.wheel_radius),
            ("v_ref", self.v_ref),
            ("dt", self.dt),
        ];
        for (name, value) in positive {
            if !(value.is_finite() && value > 0.0) {
                return Err(ParamError::Robot { name, reason: "must be finite and positive" });
            }
        }
        if self.wheelbase > 2.0 * self.half_length {
            return Err(ParamError::Robot { name: "wheelbase", reason: "exceeds body length" });
        }
        if self.track_width > 2.0 * self.half_width {
            return Err(ParamError::Robot { name: "track_width", reason: "exceeds body width" });
        }
        if !(self.max_steer > 0.0 && self.max_steer < FRAC_PI_2) {
            return Err(ParamError::Robot { name: "max_steer", reason: "must lie in (0, π/2)" });
        }
        if !(self.t_switch.is_finite() && self.t_switch >= 0.0) {
            return Err(ParamError::Robot { name: "t_switch", reason: "must be finite and non-negative" });
        }
        Ok(())
    }

    /// Arc length of one motion primitive, `v_ref · Δt`.
    pub fn step_length(&self) -> f64 {
        self.v_ref * self.dt
    }

    /// Mode switch penalty in length units, `v_ref · t_switch`.
    pub fn switch_cost(&self) -> f64 {
        self.v_ref * self.t_switch
    }

    pub fn footprint(&self) -> Footprint {
        Footprint::new(self.half_length, self.half_width)
    }
}

impl Default for RobotParams {
    fn default() -> Self {
        Self::REFERENCE
    }
}

/// Kinematic mode of the chassis. The discriminant is the conventional mode
/// number and fixes the iteration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(u8)]
pub enum MotionMode {
    Ackermann = 1,
    Lateral = 2,
    Parallel = 3,
}

impl MotionMode {
    pub const ALL: [MotionMode; 3] = [MotionMode::Ackermann, MotionMode::Lateral, MotionMode::Parallel];

    pub fn number(self) -> u8 {
        self as u8
    }

    pub fn from_number(n: u8) -> Option<Self> {
        match n {
            1 => Some(MotionMode::Ackermann),
            2 => Some(MotionMode::Lateral),
            3 => Some(MotionMode::Parallel),
            _ => None,
        }
    }

    fn bit(self) -> u8 {
        1 << (self as u8 - 1)
    }
}

/// A set of enabled modes, iterated in mode-number order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModeSet(u8);

impl ModeSet {
    pub const BASELINE: ModeSet = ModeSet(0b001);
    pub const ALL: ModeSet = ModeSet(0b111);

    pub fn empty() -> Self {
        ModeSet(0)
    }

    pub fn from_modes(modes: &[MotionMode]) -> Self {
        modes.iter().fold(ModeSet(0), |s, &m| s.with(m))
    }

    pub fn with(self, mode: MotionMode) -> Self {
        ModeSet(self.0 | mode.bit())
    }

    pub fn contains(self, mode: MotionMode) -> bool {
        self.0 & mode.bit() != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_superset_of(self, other: ModeSet) -> bool {
        self.0 & other.0 == other.0
    }

    pub fn iter(self) -> impl Iterator<Item = MotionMode> {
        MotionMode::ALL.into_iter().filter(move |m| self.contains(*m))
    }
}

/// Per-wheel steering angles (rad) and rolling speeds (m/s).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WheelCommand {
    pub angles: [f64; 4],
    pub speeds: [f64; 4],
}

impl WheelCommand {
    fn uniform(angle: f64, speed: f64) -> Self {
        WheelCommand { angles: [angle; 4], speeds: [speed; 4] }
    }
}

/// World-frame velocity of the body centre.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BodyTwist {
    pub vx: f64,
    pub vy: f64,
    pub omega: f64,
}

/// Body-frame wheel contact points, front wheels at positive `x` and left
/// wheels at positive `y`.
pub fn wheel_positions(params: &RobotParams) -> [(f64, f64); 4] {
    let hx = params.wheelbase / 2.0;
    let hy = params.track_width / 2.0;
    core::array::from_fn(|i| {
        let sx = if (i / 2) % 2 == 0 { 1.0 } else { -1.0 };
        let sy = if i % 2 == 0 { 1.0 } else { -1.0 };
        (sx * hx, sy * hy)
    })
}

/// Averages the per-wheel velocity vectors into a body twist.
///
/// Each wheel contributes its own speed, so commands with unequal wheel
/// speeds (as produced by Ackermann steering) are handled.
pub fn forward_kinematics(params: &RobotParams, cmd: &WheelCommand, heading: f64) -> BodyTwist {
    let wheels = wheel_positions(params);
    let mut twist = BodyTwist { vx: 0.0, vy: 0.0, omega: 0.0 };
    for (i, &(xr, yr)) in wheels.iter().enumerate() {
        let (eta, v) = (cmd.angles[i], cmd.speeds[i]);
        twist.vx += v * math::cos(eta + heading);
        twist.vy += v * math::sin(eta + heading);
        let (s, c) = (math::sin(eta), math::cos(eta));
        twist.omega += v * (-yr * c + xr * s) / (4.0 * (xr * xr + yr * yr));
    }
    twist.vx /= 4.0;
    twist.vy /= 4.0;
    twist
}

// Counter-steered Ackermann geometry for an axle pair `base` apart and a
// wheel pair `track` apart. Returns (left-front, right-front) angle and speed;
// the rear wheels mirror them.
fn counter_steer(base: f64, track: f64, v: f64, eta: f64) -> ([f64; 2], [f64; 2]) {
    if eta == 0.0 {
        return ([0.0; 2], [v; 2]);
    }
    let t = math::tan(eta);
    let k = track / base;
    // cot(e1) = cot(eta) - k  <=>  tan(e1) = t / (1 - k t)
    let e1 = math::atan2(t, 1.0 - k * t);
    let e2 = math::atan2(t, 1.0 + k * t);
    let v1 = v * t / math::sin(e1);
    let v2 = v * t / math::sin(e2);
    ([e1, e2], [v1, v2])
}

/// Wheel command for Ackermann steering with virtual steering angle `eta`.
///
/// `eta = 0` returns the straight-line command.
pub fn ackermann_wheel_command(params: &RobotParams, v: f64, eta: f64) -> WheelCommand {
    let ([e1, e2], [v1, v2]) = counter_steer(params.wheelbase, params.track_width, v, eta);
    WheelCommand { angles: [e1, e2, -e1, -e2], speeds: [v1, v2, v1, v2] }
}

/// Wheel command for lateral steering: the Ackermann geometry with the roles
/// of wheelbase and track exchanged, driving along the body `+y` axis.
///
/// Facing `+y`, the leading axle is the left wheel pair, its left-hand wheel
/// is the rear-left wheel and its right-hand wheel the front-left one.
pub fn lateral_wheel_command(params: &RobotParams, v: f64, eta: f64) -> WheelCommand {
    let ([e1, e2], [v1, v2]) = counter_steer(params.track_width, params.wheelbase, v, eta);
    let q = FRAC_PI_2;
    WheelCommand { angles: [e2 + q, -e2 + q, e1 + q, -e1 + q], speeds: [v2, v2, v1, v1] }
}

fn sgn(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else if x < 0.0 {
        -1.0
    } else {
        0.0
    }
}

/// Parallel-movement wheel command with the right-hand wheel angles written
/// in the mirrored convention `sgn(η)(π − |η|)`.
pub fn parallel_wheel_command(v: f64, eta: f64) -> WheelCommand {
    let mirrored = sgn(eta) * (PI - eta.abs());
    WheelCommand { angles: [eta, mirrored, eta, mirrored], speeds: [v; 4] }
}

/// Parallel movement as a physical crab command: every wheel at `eta`.
pub fn crab_wheel_command(v: f64, eta: f64) -> WheelCommand {
    WheelCommand::uniform(eta, v)
}

/// Maximum path curvature reachable in `mode`.
///
/// Parallel movement never rotates the body; its centre-of-mass curvature
/// is bounded by the steering rate at the reference velocity.
pub fn max_curvature(params: &RobotParams, mode: MotionMode) -> f64 {
    match mode {
        MotionMode::Ackermann => 2.0 * math::tan(params.max_steer) / params.wheelbase,
        MotionMode::Lateral => 2.0 * math::tan(params.max_steer) / params.track_width,
        MotionMode::Parallel => params.max_steer_rate / params.v_ref,
    }
}

/// Signed curvature of the body path for virtual steering angle `steer`.
/// Zero for parallel movement.
pub fn steer_curvature(params: &RobotParams, mode: MotionMode, steer: f64) -> f64 {
    match mode {
        MotionMode::Ackermann => 2.0 * math::tan(steer) / params.wheelbase,
        MotionMode::Lateral => 2.0 * math::tan(steer) / params.track_width,
        MotionMode::Parallel => 0.0,
    }
}

/// Inverse of [`steer_curvature`] for the steering modes.
pub fn curvature_steer(params: &RobotParams, mode: MotionMode, curvature: f64) -> f64 {
    match mode {
        MotionMode::Ackermann => math::atan(curvature * params.wheelbase / 2.0),
        MotionMode::Lateral => math::atan(curvature * params.track_width / 2.0),
        MotionMode::Parallel => 0.0,
    }
}
