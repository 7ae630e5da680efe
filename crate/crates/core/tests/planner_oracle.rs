mod support;

use quadsteer_core::{plan, PlanConfig, PlanError, RobotParams};
use support::dijkstra::optimal_cost;
use support::instances::random_instance;

// Closed-list keys keep whichever continuous pose reaches them first, so the
// search order can land a little below the uniform-cost result too.
#[test]
fn coarse_instances_track_uniform_cost_search() {
    let params = RobotParams::REFERENCE;
    let config = PlanConfig { heading_bins: 8, ..PlanConfig::default() };
    let (mut solved, mut exact) = (0, 0);
    for seed in 0..10 {
        let inst = random_instance(seed, 30, 0.2, 2, 2.0);
        let oracle = optimal_cost(&inst.grid, &params, &config, inst.start, inst.goal);
        match (plan(&inst.grid, &params, &config, inst.start, inst.goal), oracle) {
            (Ok(r), Some(best)) => {
                let gap = r.total_cost - best;
                assert!(gap.abs() <= params.switch_cost() + 1e-9, "seed {seed}: {} vs {best}", r.total_cost);
                solved += 1;
                exact += usize::from(gap.abs() < 1e-9);
            }
            (Err(PlanError::Exhausted { .. } | PlanError::Unreachable), None) => {}
            (r, o) => panic!("seed {seed}: planner {r:?} oracle {o:?}"),
        }
    }
    assert!(solved >= 8 && exact >= solved - 2, "{exact} of {solved} exact");
}
