mod support;

use std::f64::consts::PI;

use proptest::prelude::*;
use quadsteer_core::{rs_shortest, PoseDelta};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use support::rs_oracle::{integrate_path, oracle_length};

fn inverse(d: PoseDelta) -> PoseDelta {
    let (s, c) = d.theta.sin_cos();
    PoseDelta::new(-c * d.x - s * d.y, s * d.x - c * d.y, -d.theta)
}

#[test]
fn matches_numerical_enumeration() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..25 {
        let d = PoseDelta::new(rng.gen_range(-4.0..4.0), rng.gen_range(-4.0..4.0), rng.gen_range(-PI..PI));
        let rs = rs_shortest(d, 1.0).total_length;
        let oracle = oracle_length(d.x, d.y, d.theta);
        assert!(rs <= oracle + 1e-3, "{d:?}: solver {rs} oracle {oracle}");
        assert!(oracle <= rs + 1e-6, "{d:?}: oracle missed the solver path, {oracle} > {rs}");
    }
}

#[test]
fn frozen_lengths() {
    // left quarter circle, and a pure sideways offset needing cusps
    let quarter = rs_shortest(PoseDelta::new(1.0, 1.0, PI / 2.0), 1.0);
    assert!((quarter.total_length - PI / 2.0).abs() < 1e-12);
    assert_eq!(quarter.segments.len(), 1);
    let side = rs_shortest(PoseDelta::new(0.0, 1.0, 0.0), 1.0);
    assert!(side.total_length > 1.0);
    assert!((side.total_length - oracle_length(0.0, 1.0, 0.0)).abs() < 1e-6);
}

proptest! {
    #[test]
    fn endpoint_symmetry_and_scaling(
        x in -6.0f64..6.0,
        y in -6.0f64..6.0,
        th in -PI..PI,
        k in 0.2f64..4.0,
    ) {
        let d = PoseDelta::new(x, y, th);
        let unit = rs_shortest(d, 1.0);
        let (ex, ey, et) = integrate_path(&unit);
        prop_assert!((ex - d.x).abs() < 1e-9 && (ey - d.y).abs() < 1e-9);
        prop_assert!(quadsteer_core::angle::distance(et, d.theta) < 1e-9);
        prop_assert!(unit.total_length + 1e-12 >= x.hypot(y));
        let back = rs_shortest(inverse(d), 1.0);
        prop_assert!((back.total_length - unit.total_length).abs() < 1e-9);
        let scaled = rs_shortest(PoseDelta::new(x / k, y / k, th), k);
        prop_assert!((scaled.total_length * k - unit.total_length).abs() < 1e-9);
    }
}
