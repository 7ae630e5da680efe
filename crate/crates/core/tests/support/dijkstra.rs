//! Exhaustive uniform-cost search over the planner's own successor
//! generator: the same primitives, switches, step costs, closed-list keys
//! and terminal connections, but no heuristic ordering, no pruning and no
//! expansion cap.

use std::cmp::Ordering;
use std::collections::{BinaryHeap, HashMap};

use quadsteer_core::planner::{
    discretize, expand_inter, expand_intra, step_cost, try_analytic_connect, LastMotion, Primitive,
};
use quadsteer_core::{
    build_distance_field, CollisionChecker, HeuristicContext, OccupancyGrid, PlanConfig, Pose, RobotParams, State4D,
};

struct Entry {
    g: f64,
    node: usize,
}

impl PartialEq for Entry {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Entry {}

impl Ord for Entry {
    fn cmp(&self, other: &Self) -> Ordering {
        other.g.total_cmp(&self.g).then_with(|| other.node.cmp(&self.node))
    }
}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Copy)]
struct Node {
    state: State4D,
    g: f64,
    last: Option<LastMotion>,
    is_switch: bool,
}

/// Cheapest cost to the goal, or `None` when no connection exists.
pub fn optimal_cost(
    grid: &OccupancyGrid,
    params: &RobotParams,
    config: &PlanConfig,
    start: State4D,
    goal: Pose,
) -> Option<f64> {
    let checker = CollisionChecker::new(grid, params.footprint());
    let goal_cell = grid.cell_of(goal.x, goal.y)?;
    let field = build_distance_field(grid, params.half_width, goal_cell).ok()?;
    let ctx = HeuristicContext::new(grid, &field, *params, goal, config.modes, config.parallel_tolerance).ok()?;
    let step = checker.sample_step();
    let start = State4D::new(start.x, start.y, start.theta, start.mode);
    let mut nodes = vec![Node { state: start, g: 0.0, last: None, is_switch: false }];
    let mut best: HashMap<_, (f64, usize)> = HashMap::new();
    best.insert(discretize(&start, config, grid).ok()?, (0.0, 0));
    let mut open = BinaryHeap::from([Entry { g: 0.0, node: 0 }]);
    let mut answer = f64::INFINITY;
    while let Some(Entry { g, node: idx }) = open.pop() {
        let node = nodes[idx];
        let key = discretize(&node.state, config, grid).ok()?;
        if best[&key].1 != idx {
            continue;
        }
        if g >= answer {
            break;
        }
        if ctx.h_euc(&node.state) <= config.connect_radius {
            if let Some(c) =
                try_analytic_connect(&node.state, node.last, node.is_switch, &goal, &checker, config, params)
            {
                answer = answer.min(g + c.cost);
            }
        }
        let mut children = Vec::new();
        let pose = node.state.pose();
        for piece in expand_intra(&node.state, config, params) {
            if !piece.samples(&pose, step).iter().all(|(p, _)| checker.is_pose_free(p)) {
                continue;
            }
            let end = piece.end_pose(&pose);
            children.push(Node {
                state: State4D::from_pose(&end, node.state.mode),
                g: g + step_cost(node.last, &Primitive::Move(piece), config, params),
                last: Some(LastMotion { gear: piece.gear, steer: piece.steer }),
                is_switch: false,
            });
        }
        for mode in expand_inter(&node.state, node.is_switch, &goal, config) {
            children.push(Node {
                state: State4D { mode, ..node.state },
                g: g + step_cost(node.last, &Primitive::Switch(mode), config, params),
                last: None,
                is_switch: true,
            });
        }
        for child in children {
            let Ok(ck) = discretize(&child.state, config, grid) else { continue };
            if !ctx.h_euc(&child.state).is_finite() {
                continue;
            }
            if best.get(&ck).is_some_and(|&(bg, _)| child.g >= bg - 1e-9) {
                continue;
            }
            best.insert(ck, (child.g, nodes.len()));
            open.push(Entry { g: child.g, node: nodes.len() });
            nodes.push(child);
        }
    }
    answer.is_finite().then_some(answer)
}
