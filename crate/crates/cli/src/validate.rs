//! Post-hoc checks of a path file against its scenario.

use quadsteer_core::angle;
use quadsteer_core::kinematics::{curvature_steer, max_curvature};
use quadsteer_core::planner::{expand_intra, path_metrics};
use quadsteer_core::{CollisionChecker, MotionMode, OccupancyGrid, State4D, Waypoint, WaypointKind};

use crate::format::{PathFile, PathRecord, Scenario};

// Record fields carry six decimals.
const POS_TOL: f64 = 1e-5;
const CURVATURE_TOL: f64 = 1e-3;
const COST_TOL: f64 = 1e-3;

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    fn add(&mut self, name: &'static str, passed: bool, detail: String) {
        self.checks.push(Check { name, passed, detail });
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }
}

fn is_switch(a: &PathRecord, b: &PathRecord) -> bool {
    a.mode != b.mode
}

fn nearest(value: f64, candidates: &[f64]) -> f64 {
    candidates.iter().copied().min_by(|a, b| (a - value).abs().total_cmp(&(b - value).abs())).unwrap_or(value)
}

/// Steering of the motion arriving at `b`, recovered from the geometry and
/// snapped to the values the planner can produce.
fn infer_steer(scn: &Scenario, a: &PathRecord, b: &PathRecord, prev: f64) -> f64 {
    let ds = b.cum_length - a.cum_length;
    if ds <= 0.0 {
        return prev;
    }
    let probe = State4D::new(0.0, 0.0, 0.0, b.mode);
    let mut set: Vec<f64> = expand_intra(&probe, &scn.config, &scn.params).iter().map(|p| p.steer).collect();
    match b.mode {
        MotionMode::Parallel => {
            let dir = angle::wrap_to_pi((b.pose.y - a.pose.y).atan2(b.pose.x - a.pose.x) - a.pose.theta);
            let snapped = nearest(dir, &set);
            if angle::distance(snapped, dir) < 1e-3 {
                snapped
            } else {
                dir
            }
        }
        mode => {
            set.extend([scn.params.max_steer, -scn.params.max_steer, 0.0]);
            let k = angle::wrap_to_pi(b.pose.theta - a.pose.theta) / (b.gear.sign() * ds);
            nearest(curvature_steer(&scn.params, mode, k), &set)
        }
    }
}

/// Rebuilds in-memory waypoints from file records.
pub fn records_to_waypoints(scn: &Scenario, records: &[PathRecord]) -> Vec<Waypoint> {
    let mut out: Vec<Waypoint> = Vec::with_capacity(records.len());
    let mut steer = 0.0;
    for (i, r) in records.iter().enumerate() {
        let kind = if i == 0 {
            WaypointKind::Start
        } else if is_switch(&records[i - 1], r) {
            WaypointKind::Switch
        } else {
            WaypointKind::Motion
        };
        if kind == WaypointKind::Motion {
            steer = infer_steer(scn, &records[i - 1], r, steer);
        } else {
            steer = 0.0;
        }
        out.push(Waypoint { pose: r.pose, mode: r.mode, gear: r.gear, steer, cum_length: r.cum_length, kind });
    }
    out
}

pub fn validate_path(path: &PathFile, scn: &Scenario, grid: &OccupancyGrid) -> Report {
    let mut rep = Report::default();
    let recs = &path.records;
    let (Some(first), Some(last)) = (recs.first(), recs.last()) else {
        rep.add("records", false, "path has no records".into());
        return rep;
    };
    rep.add("records", true, format!("{} records", recs.len()));

    let start = scn.start.pose();
    let start_ok = first.pose.distance_to(&start) <= POS_TOL
        && angle::distance(first.pose.theta, start.theta) <= POS_TOL
        && first.mode == scn.start.mode;
    rep.add(
        "start",
        start_ok,
        format!("first record ({:.6}, {:.6}, {:.6})", first.pose.x, first.pose.y, first.pose.theta),
    );
    let heading_err = angle::distance(last.pose.theta, scn.goal.theta);
    let goal_ok = last.pose.distance_to(&scn.goal) <= POS_TOL
        && heading_err <= scn.config.parallel_tolerance.max(POS_TOL) + POS_TOL;
    rep.add(
        "goal",
        goal_ok,
        format!("position error {:.2e} m, heading error {:.2e} rad", last.pose.distance_to(&scn.goal), heading_err),
    );

    let checker = CollisionChecker::new(grid, scn.params.footprint());
    let hits: Vec<usize> = (0..recs.len()).filter(|&i| !checker.is_pose_free(&recs[i].pose)).collect();
    rep.add(
        "collision",
        hits.is_empty(),
        match hits.first() {
            None => "all records collision-free".into(),
            Some(i) => format!("{} record(s) in collision, first at record {}", hits.len(), i + 1),
        },
    );

    let step = checker.sample_step();
    let mut spacing_bad = 0;
    let mut order_bad = 0;
    let mut curvature_bad = Vec::new();
    let mut switch_bad = 0;
    for w in recs.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        let chord = a.pose.distance_to(&b.pose);
        let ds = b.cum_length - a.cum_length;
        if ds < -POS_TOL || chord > ds + POS_TOL {
            order_bad += 1;
        }
        if chord > step + POS_TOL {
            spacing_bad += 1;
        }
        if is_switch(a, b) {
            if chord > POS_TOL || angle::distance(a.pose.theta, b.pose.theta) > POS_TOL || ds.abs() > POS_TOL {
                switch_bad += 1;
            }
            continue;
        }
        let dtheta = angle::wrap_to_pi(b.pose.theta - a.pose.theta).abs();
        match b.mode {
            MotionMode::Parallel => {
                if dtheta > POS_TOL {
                    curvature_bad.push((dtheta, 0.0));
                }
            }
            mode => {
                let limit = max_curvature(&scn.params, mode);
                // rounded headings make very short steps meaningless
                if ds > 1e-3 && dtheta / ds > limit + CURVATURE_TOL + 2e-6 / ds {
                    curvature_bad.push((dtheta / ds, limit));
                }
            }
        }
    }
    rep.add("ordering", order_bad == 0, format!("{order_bad} pair(s) with decreasing or short cumulative length"));
    rep.add("spacing", spacing_bad == 0, format!("{spacing_bad} pair(s) farther apart than {step} m"));
    rep.add("switches", switch_bad == 0, format!("{switch_bad} mode change(s) with displacement"));
    rep.add(
        "curvature",
        curvature_bad.is_empty(),
        match curvature_bad.first() {
            None => "within mode limits".into(),
            Some((k, lim)) => format!("{} violation(s), e.g. {k:.4} > {lim:.4}", curvature_bad.len()),
        },
    );

    let waypoints = records_to_waypoints(scn, recs);
    let m = path_metrics(&waypoints, &scn.config, &scn.params);
    if let Some(len) = path.length {
        let d = (len - last.cum_length).abs();
        rep.add("length", d <= POS_TOL, format!("header {len:.6}, records {:.6}, delta {d:.2e}", last.cum_length));
    }
    if let Some(cost) = path.cost {
        let d = (cost - m.cost).abs();
        rep.add("cost", d <= COST_TOL, format!("header {cost:.6}, replay {:.6}, delta {d:.2e}", m.cost));
    }
    if let Some(n) = path.switches {
        rep.add("switch_count", n == m.switches, format!("header {n}, records {}", m.switches));
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use quadsteer_core::{plan, Gear, Pose};
    use std::path::PathBuf;

    fn scenario() -> (Scenario, OccupancyGrid) {
        let mut grid = OccupancyGrid::new(60, 40, 0.2, (0.0, 0.0)).unwrap();
        grid.fill_rect(5.0, 0.0, 5.4, 4.0);
        let scn = Scenario {
            label: "t".into(),
            map_path: PathBuf::from("t.map"),
            params: Default::default(),
            config: Default::default(),
            start: State4D::new(2.0, 2.0, 0.0, MotionMode::Ackermann),
            goal: Pose::new(9.0, 3.0, 0.5),
        };
        (scn, grid)
    }

    fn round_trip(scn: &Scenario, grid: &OccupancyGrid) -> PathFile {
        let r = plan(grid, &scn.params, &scn.config, scn.start, scn.goal).unwrap();
        crate::format::parse_path(&crate::format::write_path(&r), "p").unwrap()
    }

    #[test]
    fn planner_output_passes() {
        let (scn, grid) = scenario();
        let p = round_trip(&scn, &grid);
        let rep = validate_path(&p, &scn, &grid);
        assert!(rep.passed(), "{rep:#?}");
    }

    #[test]
    fn detects_corruption() {
        let (scn, grid) = scenario();
        let p = round_trip(&scn, &grid);
        let mut wall = p.clone();
        let mid = wall.records.len() / 2;
        wall.records[mid].pose = Pose { x: 5.2, y: 1.0, theta: 0.0 };
        let rep = validate_path(&wall, &scn, &grid);
        assert!(rep.checks.iter().any(|c| c.name == "collision" && !c.passed));
        let mut cost = p.clone();
        cost.cost = cost.cost.map(|c| c + 0.1);
        let rep = validate_path(&cost, &scn, &grid);
        let c = rep.checks.iter().find(|c| c.name == "cost").unwrap();
        assert!(!c.passed && c.detail.contains("delta"));
    }

    #[test]
    fn steer_inference_snaps_to_primitives() {
        let (scn, _) = scenario();
        let a = PathRecord {
            pose: Pose::new(0.0, 0.0, 0.0),
            mode: MotionMode::Ackermann,
            gear: Gear::Forward,
            cum_length: 0.0,
        };
        let k = 2.0 * (0.5 * scn.params.max_steer).tan() / scn.params.wheelbase;
        let b = PathRecord { pose: Pose::new(0.1, 0.0, k * 0.1 + 3e-7), cum_length: 0.1, ..a };
        assert!((infer_steer(&scn, &a, &b, 0.0) - 0.5 * scn.params.max_steer).abs() < 1e-12);
    }
}
