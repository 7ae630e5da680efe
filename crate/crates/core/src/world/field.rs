use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::f64::consts::SQRT_2;

use super::{ClearanceMap, OccupancyGrid};
use crate::error::WorldError;
use crate::math;

/// Obstacle-aware shortest 2D path length from every cell centre to the goal
/// cell centre (m). Unreachable cells hold `f64::INFINITY`.
#[derive(Debug, Clone)]
pub struct DistanceField {
    width: usize,
    height: usize,
    goal: (usize, usize),
    dist: Vec<f64>,
    blocked: Vec<bool>,
}

impl DistanceField {
    pub fn goal_cell(&self) -> (usize, usize) {
        self.goal
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    #[inline]
    pub fn value(&self, ix: usize, iy: usize) -> f64 {
        self.dist[iy * self.width + ix]
    }

    /// Whether the cell was removed from the search by obstacle inflation.
    pub fn is_blocked(&self, ix: usize, iy: usize) -> bool {
        self.blocked[iy * self.width + ix]
    }
}

#[derive(PartialEq)]
struct Entry(f64, usize);

impl Eq for Entry {}

impl Ord for Entry {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.total_cmp(&self.0).then_with(|| other.1.cmp(&self.1))
    }
}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Whether the straight segment between two cell centres crosses only
/// passable cells. Passing exactly through a cell corner requires both
/// cells beside the corner to be passable.
pub fn line_of_sight(a: (usize, usize), b: (usize, usize), passable: impl Fn(usize, usize) -> bool) -> bool {
    let (mut x, mut y) = (a.0 as isize, a.1 as isize);
    let (dx, dy) = (b.0 as isize - x, b.1 as isize - y);
    let (sx, sy) = (dx.signum(), dy.signum());
    let (ax, ay) = (dx.abs(), dy.abs());
    let ok = |x: isize, y: isize| passable(x as usize, y as usize);
    if !ok(x, y) {
        return false;
    }
    // walk cell boundaries; progress along the segment measured in units of
    // 1/(2·ax·ay) so crossings compare exactly
    let (mut nx, mut ny) = (0isize, 0isize);
    while nx < ax || ny < ay {
        // parameter of next vertical crossing is (2nx+1)/(2ax), horizontal (2ny+1)/(2ay)
        let tx = (2 * nx + 1) * ay;
        let ty = (2 * ny + 1) * ax;
        if nx < ax && (ny >= ay || tx < ty) {
            x += sx;
            nx += 1;
        } else if ny < ay && (nx >= ax || ty < tx) {
            y += sy;
            ny += 1;
        } else {
            // through a corner
            if !ok(x + sx, y) || !ok(x, y + sy) {
                return false;
            }
            x += sx;
            y += sy;
            nx += 1;
            ny += 1;
        }
        if !ok(x, y) {
            return false;
        }
    }
    true
}

/// Builds the distance field to `goal_cell`.
///
/// Cells whose centre is closer than `inflation` to an occupied cell centre
/// are treated as occupied. The search is Dijkstra over the 8-connected grid
/// (no corner cutting) with any-angle relaxation: a cell inherits its
/// neighbour's parent whenever the parent is directly visible, so open-space
/// values are straight-line distances rather than octile ones.
pub fn build_distance_field(
    grid: &OccupancyGrid,
    inflation: f64,
    goal_cell: (usize, usize),
) -> Result<DistanceField, WorldError> {
    let (w, h) = (grid.width(), grid.height());
    let (gx, gy) = goal_cell;
    if gx >= w || gy >= h {
        return Err(WorldError::GoalOutOfBounds(gx, gy));
    }
    let clearance = ClearanceMap::new(grid);
    let mut blocked = vec![false; w * h];
    for iy in 0..h {
        for ix in 0..w {
            blocked[iy * w + ix] = grid.is_occupied(ix, iy) || clearance.at(ix, iy) < inflation;
        }
    }
    if blocked[gy * w + gx] {
        return Err(WorldError::GoalOccupied(gx, gy));
    }
    let res = grid.resolution();
    let passable = |x: usize, y: usize| x < w && y < h && !blocked[y * w + x];
    let mut dist = vec![f64::INFINITY; w * h];
    let mut parent = vec![usize::MAX; w * h];
    let mut done = vec![false; w * h];
    let goal = gy * w + gx;
    dist[goal] = 0.0;
    parent[goal] = goal;
    let mut heap = BinaryHeap::new();
    heap.push(Entry(0.0, goal));
    let euclid = |a: usize, b: usize| {
        let dx = (a % w) as f64 - (b % w) as f64;
        let dy = (a / w) as f64 - (b / w) as f64;
        math::sqrt(dx * dx + dy * dy) * res
    };
    while let Some(Entry(d, c)) = heap.pop() {
        if done[c] {
            continue;
        }
        done[c] = true;
        let (cx, cy) = ((c % w) as isize, (c / w) as isize);
        for (ddx, ddy) in [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (1, -1), (-1, 1), (-1, -1)] {
            let (nx, ny) = (cx + ddx, cy + ddy);
            if nx < 0 || ny < 0 || nx >= w as isize || ny >= h as isize {
                continue;
            }
            let (ux, uy) = (nx as usize, ny as usize);
            let n = uy * w + ux;
            if done[n] || blocked[n] {
                continue;
            }
            let diagonal = ddx != 0 && ddy != 0;
            if diagonal && (!passable(ux, cy as usize) || !passable(cx as usize, uy)) {
                continue;
            }
            let p = parent[c];
            let (cand, par) = if p != c && line_of_sight((p % w, p / w), (ux, uy), passable) {
                (dist[p] + euclid(p, n), p)
            } else {
                (d + if diagonal { res * SQRT_2 } else { res }, c)
            };
            if cand < dist[n] {
                dist[n] = cand;
                parent[n] = par;
                heap.push(Entry(cand, n));
            }
        }
    }
    Ok(DistanceField { width: w, height: h, goal: goal_cell, dist, blocked })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use proptest::prelude::*;

    fn open(w: usize, h: usize, res: f64) -> OccupancyGrid {
        OccupancyGrid::new(w, h, res, (0.0, 0.0)).unwrap()
    }

    // Plain 8-connected Dijkstra with octile weights, same blocking rules.
    fn octile_oracle(grid: &OccupancyGrid, inflation: f64, goal: (usize, usize)) -> Vec<f64> {
        let (w, h) = (grid.width(), grid.height());
        let cl = ClearanceMap::new(grid);
        let blocked = |x: usize, y: usize| grid.is_occupied(x, y) || cl.at(x, y) < inflation;
        let mut dist = vec![f64::INFINITY; w * h];
        dist[goal.1 * w + goal.0] = 0.0;
        // Bellman-Ford style relaxation until stable: slow and obviously correct
        loop {
            let mut changed = false;
            for y in 0..h {
                for x in 0..w {
                    if blocked(x, y) {
                        continue;
                    }
                    for (dx, dy) in [(1i32, 0i32), (-1, 0), (0, 1), (0, -1), (1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        let (nx, ny) = (x as i32 + dx, y as i32 + dy);
                        if nx < 0 || ny < 0 || nx >= w as i32 || ny >= h as i32 {
                            continue;
                        }
                        let (nx, ny) = (nx as usize, ny as usize);
                        if blocked(nx, ny) {
                            continue;
                        }
                        let diag = dx != 0 && dy != 0;
                        if diag && (blocked(nx, y) || blocked(x, ny)) {
                            continue;
                        }
                        let c = dist[ny * w + nx] + grid.resolution() * if diag { SQRT_2 } else { 1.0 };
                        if c < dist[y * w + x] - 1e-12 {
                            dist[y * w + x] = c;
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                return dist;
            }
        }
    }

    // Dense sampling of the segment between centres; cells touched by the
    // samples (including both cells at exact corner crossings).
    fn sampled_cells(a: (usize, usize), b: (usize, usize)) -> BTreeSet<(usize, usize)> {
        let mut out = BTreeSet::new();
        // a multiple of every boundary-crossing denominator, so corner
        // crossings land exactly on samples
        let (ax, ay) = (a.0.abs_diff(b.0).max(1), a.1.abs_diff(b.1).max(1));
        let n = 2 * ax * ay * 400;
        for k in 0..=n {
            let t = k as f64 / n as f64;
            let x = a.0 as f64 + 0.5 + t * (b.0 as f64 - a.0 as f64);
            let y = a.1 as f64 + 0.5 + t * (b.1 as f64 - a.1 as f64);
            let (fx, fy) = (math::floor(x), math::floor(y));
            let near = |v: f64, f: f64| (v - f).abs() < 1e-9;
            out.insert((fx as usize, fy as usize));
            if near(x, fx) && fx >= 1.0 {
                out.insert((fx as usize - 1, fy as usize));
            }
            if near(y, fy) && fy >= 1.0 {
                out.insert((fx as usize, fy as usize - 1));
            }
            if near(x, fx) && near(y, fy) && fx >= 1.0 && fy >= 1.0 {
                out.insert((fx as usize - 1, fy as usize - 1));
            }
        }
        out
    }

    #[test]
    fn open_map_axis_and_adjacent() {
        let g = open(30, 30, 0.1);
        let f = build_distance_field(&g, 0.31, (10, 10)).unwrap();
        assert_eq!(f.value(10, 10), 0.0);
        assert!((f.value(11, 10) - 0.1).abs() < 1e-12);
        assert!((f.value(10, 9) - 0.1).abs() < 1e-12);
        for k in 1..15 {
            assert!((f.value(10 + k, 10) - k as f64 * 0.1).abs() < 1e-12);
        }
        // open space is straight-line exact
        assert!((f.value(15, 12) - math::hypot(0.5, 0.2)).abs() < 1e-12);
    }

    #[test]
    fn occupied_goal_rejected() {
        let mut g = open(10, 10, 0.1);
        g.set_occupied(5, 5, true);
        assert_eq!(build_distance_field(&g, 0.0, (5, 5)).unwrap_err(), WorldError::GoalOccupied(5, 5));
        assert_eq!(build_distance_field(&g, 0.15, (5, 6)).unwrap_err(), WorldError::GoalOccupied(5, 6));
        assert!(matches!(build_distance_field(&g, 0.0, (10, 0)), Err(WorldError::GoalOutOfBounds(..))));
    }

    #[test]
    fn u_wall_detour() {
        // U opening away from the goal: the cell inside must go around
        let mut g = open(30, 30, 1.0);
        for i in 10..=20 {
            g.set_occupied(i, 20, true); // top of the U, between cell and goal
        }
        for j in 12..=20 {
            g.set_occupied(10, j, true);
            g.set_occupied(20, j, true);
        }
        let goal = (15, 27);
        let f = build_distance_field(&g, 0.0, goal).unwrap();
        let oracle = octile_oracle(&g, 0.0, goal);
        let (cx, cy) = (15usize, 16usize);
        let v = f.value(cx, cy);
        let euclid = 11.0;
        assert!(v > euclid + 1.0, "{v}");
        assert!(v <= oracle[cy * 30 + cx] + 1e-9);
        // continuous lower bound: any path leaves the U around the outer
        // corner of a side wall's lowest cell, (9.5, 11.5) or (20.5, 11.5)
        let via = |px: f64, py: f64| math::hypot(px - 15.0, py - 16.0) + math::hypot(px - 15.0, py - 27.0);
        let lower = via(9.5, 11.5).min(via(20.5, 11.5));
        assert!(v >= lower - 1e-9, "{v} < {lower}");
    }

    #[test]
    fn inflation_blocks_near_obstacles() {
        let mut g = open(20, 20, 0.1);
        g.set_occupied(10, 10, true);
        let f = build_distance_field(&g, 0.31, (2, 2)).unwrap();
        assert!(f.is_blocked(10, 12));
        assert!(f.is_blocked(12, 12));
        assert!(!f.is_blocked(10, 14));
        assert!(f.value(10, 12).is_infinite());
    }

    #[test]
    fn walled_off_region_unreachable() {
        let mut g = open(20, 20, 0.1);
        for i in 0..20 {
            g.set_occupied(i, 10, true);
        }
        let f = build_distance_field(&g, 0.0, (5, 2)).unwrap();
        assert!(f.value(5, 15).is_infinite());
        assert!(f.value(5, 5).is_finite());
    }

    fn random_grid(seed: &[u8], w: usize, h: usize) -> OccupancyGrid {
        let cells = (0..w * h).map(|i| seed[(i * 31 + i / 7) % seed.len()] < 40).collect();
        OccupancyGrid::from_cells(w, h, 0.2, (0.0, 0.0), cells).unwrap()
    }

    proptest! {
        #[test]
        fn los_matches_dense_sampling(ax in 0usize..12, ay in 0usize..12, bx in 0usize..12, by in 0usize..12,
                                      seed in proptest::collection::vec(any::<u8>(), 144)) {
            let blocked = |x: usize, y: usize| seed[y * 12 + x] < 40;
            let free = |x: usize, y: usize| x < 12 && y < 12 && !blocked(x, y);
            let expect = sampled_cells((ax, ay), (bx, by)).iter().all(|&(x, y)| free(x, y));
            prop_assert_eq!(line_of_sight((ax, ay), (bx, by), free), expect);
        }

        #[test]
        fn bounded_by_euclid_and_octile(seed in proptest::collection::vec(any::<u8>(), 50..300),
                                        gx in 0usize..16, gy in 0usize..16) {
            let mut g = random_grid(&seed, 16, 16);
            g.set_occupied(gx, gy, false);
            let f = build_distance_field(&g, 0.0, (gx, gy)).unwrap();
            let oracle = octile_oracle(&g, 0.0, (gx, gy));
            for y in 0..16 {
                for x in 0..16 {
                    let v = f.value(x, y);
                    let o = oracle[y * 16 + x];
                    prop_assert_eq!(v.is_finite(), o.is_finite());
                    if v.is_finite() {
                        let e = math::hypot(x as f64 - gx as f64, y as f64 - gy as f64) * 0.2;
                        prop_assert!(v >= e - 1e-9);
                        prop_assert!(v <= o + 1e-9);
                        // never beaten by a neighbour step
                        for (dx, dy) in [(1i32, 0i32), (-1, 0), (0, 1), (0, -1)] {
                            let (nx, ny) = (x as i32 + dx, y as i32 + dy);
                            if nx >= 0 && ny >= 0 && nx < 16 && ny < 16 {
                                let nv = f.value(nx as usize, ny as usize);
                                prop_assert!(v <= nv + 0.2 + 1e-9);
                            }
                        }
                    }
                }
            }
        }
    }
}
