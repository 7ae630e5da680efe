//! Angle normalisation helpers.

use core::f64::consts::{PI, TAU};

use crate::math;

/// Maps any finite angle onto `[0, 2π)`.
pub fn normalize(theta: f64) -> f64 {
    // fmod is the identity on (-2π, 2π)
    let mut t = if theta.abs() < TAU { theta } else { math::fmod(theta, TAU) };
    if t < 0.0 {
        t += TAU;
    }
    // fmod can land exactly on TAU after the correction for tiny negatives.
    if t >= TAU {
        t -= TAU;
    }
    t
}

/// Maps any finite angle onto `(-π, π]`.
pub fn wrap_to_pi(theta: f64) -> f64 {
    let t = normalize(theta);
    if t > PI {
        t - TAU
    } else {
        t
    }
}

/// Smallest absolute rotation taking `a` onto `b`.
pub fn distance(a: f64, b: f64) -> f64 {
    wrap_to_pi(b - a).abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalize_range() {
        assert_eq!(normalize(0.0), 0.0);
        assert!((normalize(-PI / 2.0) - 1.5 * PI).abs() < 1e-15);
        assert!((normalize(5.0 * PI) - PI).abs() < 1e-12);
        assert!(normalize(-1e-18) < TAU);
        assert!(normalize(TAU) < 1e-12);
    }

    #[test]
    fn wrap_range() {
        assert_eq!(wrap_to_pi(PI), PI);
        assert!((wrap_to_pi(-PI) - PI).abs() < 1e-15);
        assert!((wrap_to_pi(1.5 * PI) + 0.5 * PI).abs() < 1e-12);
        assert!((distance(0.1, TAU - 0.1) - 0.2).abs() < 1e-12);
    }
}
