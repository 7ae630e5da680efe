mod support;

use proptest::prelude::*;
use quadsteer_core::kinematics::max_curvature;
use quadsteer_core::planner::path_metrics;
use quadsteer_core::{
    angle, build_distance_field, plan, CollisionChecker, HeuristicContext, MotionMode, PlanConfig, PlanResult,
    RobotParams,
};
use support::instances::{random_instance, Instance};

const P: RobotParams = RobotParams::REFERENCE;

fn check_path(inst: &Instance, config: &PlanConfig, r: &PlanResult) -> Result<(), TestCaseError> {
    let checker = CollisionChecker::new(&inst.grid, P.footprint());
    let (first, last) = (r.waypoints.first().unwrap(), r.waypoints.last().unwrap());
    prop_assert!(first.pose.distance_to(&inst.start.pose()) < 1e-12);
    prop_assert!(last.pose.distance_to(&inst.goal) < 1e-9);
    prop_assert!(angle::distance(last.pose.theta, inst.goal.theta) <= config.parallel_tolerance + 1e-9);
    prop_assert!(r.waypoints.iter().all(|w| checker.is_pose_free(&w.pose)));
    for w in r.waypoints.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        let ds = b.cum_length - a.cum_length;
        prop_assert!(a.pose.distance_to(&b.pose) <= checker.sample_step() + 1e-9);
        if a.mode != b.mode {
            prop_assert!(ds == 0.0 && a.pose == b.pose);
            continue;
        }
        let turn = angle::wrap_to_pi(b.pose.theta - a.pose.theta).abs();
        match b.mode {
            MotionMode::Parallel => prop_assert!(turn < 1e-9),
            m => prop_assert!(turn <= (max_curvature(&P, m) + 1e-9) * ds + 1e-12),
        }
    }
    let m = path_metrics(&r.waypoints, config, &P);
    prop_assert!((m.cost - r.total_cost).abs() < 1e-9, "replay {} vs {}", m.cost, r.total_cost);
    prop_assert!((m.length - r.total_length).abs() < 1e-12);
    prop_assert_eq!(m.switches, r.switch_count);
    prop_assert_eq!(m.breakdown.switch, P.switch_cost() * r.switch_count as f64);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 12, ..ProptestConfig::default() })]

    #[test]
    fn planned_paths_are_feasible_and_replay(seed in any::<u64>()) {
        let inst = random_instance(seed, 40, 0.2, 3, 2.0);
        let config = PlanConfig::default();
        let Ok(r) = plan(&inst.grid, &P, &config, inst.start, inst.goal) else { return Ok(()) };
        check_path(&inst, &config, &r)?;
        let field = build_distance_field(&inst.grid, P.half_width, inst.grid.cell_of(inst.goal.x, inst.goal.y).unwrap()).unwrap();
        let ctx = HeuristicContext::new(&inst.grid, &field, P, inst.goal, config.modes, config.parallel_tolerance).unwrap();
        prop_assert!(ctx.h_multimodal(&inst.start) <= r.total_cost + 1e-6);
        prop_assert!(ctx.h_euc(&inst.start) <= r.total_length + 1e-6);
        prop_assert_eq!(plan(&inst.grid, &P, &config, inst.start, inst.goal).unwrap(), r);
    }

    #[test]
    fn baseline_never_switches(seed in any::<u64>()) {
        let inst = random_instance(seed, 40, 0.2, 3, 2.0);
        let config = PlanConfig::baseline();
        let Ok(r) = plan(&inst.grid, &P, &config, inst.start, inst.goal) else { return Ok(()) };
        check_path(&inst, &config, &r)?;
        prop_assert_eq!(r.switch_count, 0);
        prop_assert!(r.waypoints.iter().all(|w| w.mode == MotionMode::Ackermann));
        prop_assert_eq!(path_metrics(&r.waypoints, &config, &P).breakdown.switch, 0.0);
    }
}
