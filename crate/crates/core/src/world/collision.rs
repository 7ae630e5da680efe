use alloc::vec::Vec;
use core::f64::consts::SQRT_2;

use super::{ClearanceMap, Footprint, OccupancyGrid, Pose};
use crate::math;

/// Conservative footprint test: the pose collides when an occupied cell
/// centre lies inside the footprint inflated by half a cell diagonal, or when
/// the footprint leaves the map.
pub fn is_pose_free(grid: &OccupancyGrid, fp: &Footprint, pose: &Pose) -> bool {
    let sc = (math::sin(pose.theta), math::cos(pose.theta));
    inside_bounds(grid, fp, pose, sc) && !hits_obstacle(grid, fp, pose, sc)
}

/// [`is_pose_free`] for every pose of a sampled motion.
pub fn is_motion_free(grid: &OccupancyGrid, fp: &Footprint, poses: &[Pose]) -> bool {
    poses.iter().all(|p| is_pose_free(grid, fp, p))
}

fn inside_bounds(grid: &OccupancyGrid, fp: &Footprint, pose: &Pose, (s, c): (f64, f64)) -> bool {
    let (l, w) = (fp.half_length, fp.half_width);
    [(l, w), (-l, w), (-l, -w), (l, -w)]
        .iter()
        .all(|&(bx, by)| grid.contains_point(pose.x + c * bx - s * by, pose.y + s * bx + c * by))
}

fn hits_obstacle(grid: &OccupancyGrid, fp: &Footprint, pose: &Pose, (s, c): (f64, f64)) -> bool {
    let res = grid.resolution();
    let pad = 0.5 * res * SQRT_2;
    let (hl, hw) = (fp.half_length + pad, fp.half_width + pad);
    let ex = (c * hl).abs() + (s * hw).abs();
    let ey = (s * hl).abs() + (c * hw).abs();
    let (ox, oy) = grid.origin();
    let lo = |v: f64, o: f64| math::floor((v - o) / res - 0.5).max(0.0) as usize;
    let hi = |v: f64, o: f64, n: usize| (math::ceil((v - o) / res - 0.5).max(-1.0) as isize).min(n as isize - 1);
    let (x0, x1) = (lo(pose.x - ex, ox), hi(pose.x + ex, ox, grid.width()));
    let (y0, y1) = (lo(pose.y - ey, oy), hi(pose.y + ey, oy, grid.height()));
    if x1 < 0 || y1 < 0 {
        return false;
    }
    for iy in y0..=y1 as usize {
        for ix in x0..=x1 as usize {
            if !grid.is_occupied(ix, iy) {
                continue;
            }
            let (cx, cy) = grid.cell_center(ix, iy);
            let (dx, dy) = (cx - pose.x, cy - pose.y);
            let lx = c * dx + s * dy;
            let ly = -s * dx + c * dy;
            if lx.abs() <= hl && ly.abs() <= hw {
                return true;
            }
        }
    }
    false
}

/// Collision checker for repeated queries against one grid.
///
/// Poses are accepted from the clearance map alone when the nearest obstacle
/// is beyond the inflated footprint's circumradius, or beyond the radius of
/// each of a few disks covering the footprint; everything else falls back to
/// [`is_pose_free`]. All routes give identical answers.
#[derive(Debug, Clone)]
pub struct CollisionChecker<'a> {
    grid: &'a OccupancyGrid,
    footprint: Footprint,
    clearance: ClearanceMap,
    reach: f64,
    // disks covering the inflated footprint: body-frame offsets and the
    // clearance each needs
    disks: Vec<(f64, f64)>,
    disk_reach: f64,
    // footprint circumradius; centres this far inside the map need no
    // corner test
    body_radius: f64,
}

impl<'a> CollisionChecker<'a> {
    pub fn new(grid: &'a OccupancyGrid, footprint: Footprint) -> Self {
        let res = grid.resolution();
        let pad = 0.5 * res * SQRT_2;
        let (hl, hw) = (footprint.half_length + pad, footprint.half_width + pad);
        let circum = math::hypot(hl, hw);
        let (long, short) = (hl.max(hw), hl.min(hw));
        let n = math::ceil(2.0 * long / short).max(1.0) as usize;
        let a = long / n as f64;
        let disks = (0..n)
            .map(|i| {
                let t = -long + a * (2 * i + 1) as f64;
                if hl >= hw {
                    (t, 0.0)
                } else {
                    (0.0, t)
                }
            })
            .collect();
        CollisionChecker {
            grid,
            footprint,
            clearance: ClearanceMap::new(grid),
            // the pose may sit anywhere in its cell, half a diagonal from the centre
            reach: circum + pad + 1e-9,
            disks,
            disk_reach: math::hypot(a, short) + pad + 1e-9,
            body_radius: math::hypot(footprint.half_length, footprint.half_width) + 1e-9,
        }
    }

    pub fn grid(&self) -> &'a OccupancyGrid {
        self.grid
    }

    pub fn footprint(&self) -> &Footprint {
        &self.footprint
    }

    pub fn clearance(&self) -> &ClearanceMap {
        &self.clearance
    }

    /// Spacing between collision samples along a motion, half a cell.
    pub fn sample_step(&self) -> f64 {
        0.5 * self.grid.resolution()
    }

    pub fn is_pose_free(&self, pose: &Pose) -> bool {
        let (ox, oy) = self.grid.origin();
        let (ux, uy) = self.grid.upper_corner();
        let r = self.body_radius;
        let centred = pose.x - r >= ox && pose.x + r <= ux && pose.y - r >= oy && pose.y + r <= uy;
        let mut sc = None;
        if !centred {
            let t = (math::sin(pose.theta), math::cos(pose.theta));
            if !inside_bounds(self.grid, &self.footprint, pose, t) {
                return false;
            }
            sc = Some(t);
        }
        if let Some((ix, iy)) = self.grid.cell_of(pose.x, pose.y) {
            if self.clearance.at(ix, iy) > self.reach {
                return true;
            }
        }
        let sc = sc.unwrap_or_else(|| (math::sin(pose.theta), math::cos(pose.theta)));
        if self.disks_clear(pose, sc) {
            return true;
        }
        !hits_obstacle(self.grid, &self.footprint, pose, sc)
    }

    pub fn is_motion_free(&self, poses: &[Pose]) -> bool {
        poses.iter().all(|p| self.is_pose_free(p))
    }

    fn disks_clear(&self, pose: &Pose, (s, c): (f64, f64)) -> bool {
        self.disks.iter().all(|&(bx, by)| {
            let (x, y) = (pose.x + c * bx - s * by, pose.y + s * bx + c * by);
            self.grid.cell_of(x, y).is_some_and(|(ix, iy)| self.clearance.at(ix, iy) > self.disk_reach)
        })
    }
}
