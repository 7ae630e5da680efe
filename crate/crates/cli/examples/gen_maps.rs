//! Writes the maze and parking maps plus their scenarios into `maps/`.
//!
//! ```text
//! cargo run -p quadsteer --example gen_maps -- [out_dir]
//! ```

use std::path::{Path, PathBuf};

use quadsteer::format::write_map;
use quadsteer_core::OccupancyGrid;

const RES: f64 = 0.1;
const GAP: f64 = 1.8;

// 9x9 cells; even rows/columns are walls, odd ones are 2 m corridors.
const MAZE: [&str; 19] = [
    "###################",
    "#.#.#.............#",
    "#.#.#.###########.#",
    "#.#...........#...#",
    "#.###########.#.###",
    "#...#.......#.#...#",
    "###.#.#####.#####.#",
    "#.#...#.....#...#.#",
    "#.#####.#####.#.#.#",
    "#.....#.#.....#.#.#",
    "###.#.#.#.#.###.#.#",
    "#...#.#...#...#...#",
    "#.###.###.#.#####.#",
    "#.#.....#.......#.#",
    "#.#.#####.#####.#.#",
    "#.#...#...#.#...#.#",
    "#.#.#.#.###.#.###.#",
    "#...#.............#",
    "###################",
];

fn span(k: usize) -> (f64, f64) {
    let base = 1.1 * (k - k % 2) as f64;
    if k % 2 == 0 {
        (base, base + 0.2)
    } else {
        (base + 0.2, base + 2.2)
    }
}

fn maze() -> OccupancyGrid {
    let mut g = OccupancyGrid::new(200, 200, RES, (0.0, 0.0)).expect("grid");
    for (r, row) in MAZE.iter().enumerate() {
        for (c, ch) in row.chars().enumerate() {
            if ch == '#' {
                let (x0, x1) = span(c);
                let (y0, y1) = span(18 - r);
                g.fill_rect(x0, y0, x1, y1);
            }
        }
    }
    g
}

fn parked_car(g: &mut OccupancyGrid, cx: f64, cy: f64, along_x: bool) {
    let (hx, hy) = if along_x { (0.5, 0.31) } else { (0.31, 0.5) };
    g.fill_rect(cx - hx, cy - hy, cx + hx, cy + hy);
}

/// 20 x 12 m lot: a curb row of parallel spaces at the bottom, a 4 m lane
/// and a row of perpendicular slots along the top.
fn parking() -> OccupancyGrid {
    let mut g = OccupancyGrid::new(200, 120, RES, (0.0, 0.0)).expect("grid");
    g.fill_rect(0.0, 0.0, 20.0, 0.2);
    g.fill_rect(0.0, 11.8, 20.0, 12.0);
    g.fill_rect(0.0, 0.0, 0.2, 12.0);
    g.fill_rect(19.8, 0.0, 20.0, 12.0);
    // curb row, cars at y = 0.75 leaving a GAP m space from x = 10.1
    for cx in [1.2, 2.6, 4.0, 5.4, 6.8, 8.2, 9.6].into_iter().chain((0..5).map(|k| 10.6 + GAP + 1.4 * k as f64)) {
        parked_car(&mut g, cx, 0.75, true);
    }
    // island between curb lane and slot lane
    g.fill_rect(3.0, 4.8, 17.0, 5.6);
    // slot row: dividers every 1.1 m from x = 1.0, slots 7.6..11.8
    for i in 0..17 {
        let x = 1.0 + 1.1 * i as f64;
        g.fill_rect(x, 9.9, x + 0.1, 11.8);
    }
    for i in [0, 1, 3, 4, 5, 7, 8, 10, 11, 13, 15] {
        let cx = 1.0 + 1.1 * i as f64 + 0.6;
        parked_car(&mut g, cx, 10.9, false);
    }
    g
}

/// Centre of maze cell `(i, j)`, counted from the lower left.
fn cell(i: usize, j: usize) -> (f64, f64) {
    (2.2 * i as f64 + 1.2, 2.2 * j as f64 + 1.2)
}

fn slot(i: usize) -> (f64, f64) {
    (1.0 + 1.1 * i as f64 + 0.6, 10.9)
}

fn scenario(label: &str, map: &str, start: (f64, f64, f64), goal: (f64, f64, f64)) -> String {
    format!(
        "label: {label}\nmap: ../{map}\nstart: {} {} {} 1\ngoal: {} {} {}\nmodes: 1 2 3\n",
        start.0, start.1, start.2, goal.0, goal.1, goal.2
    )
}

fn write(path: &Path, text: &str) {
    std::fs::write(path, text).unwrap_or_else(|e| panic!("cannot write {}: {e}", path.display()));
}

fn main() {
    let out = std::env::args().nth(1).map_or_else(|| PathBuf::from("maps"), PathBuf::from);
    let scn_dir = out.join("scenarios");
    std::fs::create_dir_all(&scn_dir).expect("create output directory");
    write(&out.join("env1_maze.map"), &write_map(&maze()));
    write(&out.join("env2_parking.map"), &write_map(&parking()));

    let h = std::f64::consts::FRAC_PI_2;
    const PI: f64 = std::f64::consts::PI;
    let r4 = |v: f64| (v * 1e4).round() / 1e4;
    let at = |(x, y): (f64, f64), th: f64| (r4(x), r4(y), r4(th));
    let maze_cases = [
        ("Env1-S1", at(cell(0, 8), -h), at(cell(2, 5), PI)),
        ("Env1-S2", at(cell(0, 8), -h), at(cell(3, 4), 0.0)),
        ("Env1-S3", at(cell(0, 8), -h), at(cell(6, 4), PI)),
    ];
    let park_cases = [
        ("Env2-S1", at((3.0, 3.0), 0.0), at((10.1 + 0.5 * GAP, 0.75), 0.0)),
        ("Env2-S2", at((2.0, 7.7), h), at(slot(9), h)),
        ("Env2-S3", at(slot(2), h), at(slot(14), h)),
    ];
    for (label, s, g) in maze_cases {
        write(&scn_dir.join(format!("{}.scn", label.to_lowercase())), &scenario(label, "env1_maze.map", s, g));
    }
    for (label, s, g) in park_cases {
        write(&scn_dir.join(format!("{}.scn", label.to_lowercase())), &scenario(label, "env2_parking.map", s, g));
    }
    println!("wrote maps and scenarios to {}", out.display());
}
