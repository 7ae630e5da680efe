//! Seeded random planning instances.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use quadsteer_core::{CollisionChecker, MotionMode, OccupancyGrid, Pose, RobotParams, State4D};

pub struct Instance {
    pub grid: OccupancyGrid,
    pub start: State4D,
    pub goal: Pose,
}

/// A `cells × cells` map with a border wall and `blocks` random rectangles,
/// plus collision-free start and goal poses at least `min_gap` apart.
pub fn random_instance(seed: u64, cells: usize, resolution: f64, blocks: usize, min_gap: f64) -> Instance {
    let params = RobotParams::REFERENCE;
    let mut rng = StdRng::seed_from_u64(seed);
    loop {
        let side = cells as f64 * resolution;
        let mut grid = OccupancyGrid::new(cells, cells, resolution, (0.0, 0.0)).unwrap();
        grid.fill_rect(0.0, 0.0, side, resolution);
        grid.fill_rect(0.0, side - resolution, side, side);
        grid.fill_rect(0.0, 0.0, resolution, side);
        grid.fill_rect(side - resolution, 0.0, side, side);
        for _ in 0..blocks {
            let (x, y) = (rng.gen_range(0.0..side), rng.gen_range(0.0..side));
            let (w, h) = (rng.gen_range(0.2..0.25 * side), rng.gen_range(0.2..0.25 * side));
            grid.fill_rect(x, y, x + w, y + h);
        }
        let checker = CollisionChecker::new(&grid, params.footprint());
        let pose = |rng: &mut StdRng| {
            for _ in 0..200 {
                let p = Pose::new(
                    rng.gen_range(0.0..side),
                    rng.gen_range(0.0..side),
                    rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI),
                );
                if checker.is_pose_free(&p) {
                    return Some(p);
                }
            }
            None
        };
        let (Some(s), Some(g)) = (pose(&mut rng), pose(&mut rng)) else { continue };
        if s.distance_to(&g) < min_gap {
            continue;
        }
        return Instance { grid, start: State4D::from_pose(&s, MotionMode::Ackermann), goal: g };
    }
}
