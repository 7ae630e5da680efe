//! SVG rendering of a map and a path.

use std::fmt::Write as _;

use quadsteer_core::{MotionMode, OccupancyGrid, Pose, RobotParams};

use crate::format::{PathFile, PathRecord};

const PX_PER_M: f64 = 40.0;
const FOOTPRINT_SPACING: f64 = 0.8;

fn mode_colour(mode: MotionMode) -> &'static str {
    match mode {
        MotionMode::Ackermann => "#1f77b4",
        MotionMode::Lateral => "#d62728",
        MotionMode::Parallel => "#2ca02c",
    }
}

struct View {
    ox: f64,
    top: f64,
}

impl View {
    fn pt(&self, x: f64, y: f64) -> (f64, f64) {
        ((x - self.ox) * PX_PER_M, (self.top - y) * PX_PER_M)
    }
}

fn footprint(out: &mut String, view: &View, params: &RobotParams, pose: &Pose, class: &str) {
    let pts: Vec<String> = params
        .footprint()
        .corners(pose)
        .iter()
        .map(|&(x, y)| {
            let (u, v) = view.pt(x, y);
            format!("{u:.2},{v:.2}")
        })
        .collect();
    let _ = writeln!(out, r#"<polygon class="{class}" points="{}"/>"#, pts.join(" "));
}

fn polyline(out: &mut String, view: &View, run: &[PathRecord]) {
    let pts: Vec<String> = run
        .iter()
        .map(|r| {
            let (u, v) = view.pt(r.pose.x, r.pose.y);
            format!("{u:.2},{v:.2}")
        })
        .collect();
    let mode = run[0].mode;
    let _ = writeln!(
        out,
        r#"<polyline class="mode{}" fill="none" stroke="{}" stroke-width="2" points="{}"/>"#,
        mode.number(),
        mode_colour(mode),
        pts.join(" ")
    );
}

pub fn render_svg(grid: &OccupancyGrid, path: &PathFile, params: &RobotParams) -> String {
    let (ox, oy) = grid.origin();
    let (ux, uy) = grid.upper_corner();
    let view = View { ox, top: uy };
    let (w, h) = ((ux - ox) * PX_PER_M, (uy - oy) * PX_PER_M);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.2} {h:.2}">"#
    );
    let _ = writeln!(
        out,
        "<style>.obstacle{{fill:#444}}.footprint{{fill:none;stroke:#888;stroke-width:0.8}}\
         .reference{{fill:none;stroke:#000;stroke-width:1.2;stroke-dasharray:4 2}}\
         .switch{{fill:#ff7f0e;stroke:#000}}.start{{fill:#17becf}}.goal{{fill:#e377c2}}</style>"
    );
    let _ = writeln!(out, r##"<rect width="100%" height="100%" fill="#fff"/>"##);

    let res = grid.resolution();
    for iy in 0..grid.height() {
        let mut ix = 0;
        while ix < grid.width() {
            if !grid.is_occupied(ix, iy) {
                ix += 1;
                continue;
            }
            let first = ix;
            while ix < grid.width() && grid.is_occupied(ix, iy) {
                ix += 1;
            }
            let (u, v) = view.pt(ox + first as f64 * res, oy + (iy + 1) as f64 * res);
            let _ = writeln!(
                out,
                r#"<rect class="obstacle" x="{u:.2}" y="{v:.2}" width="{:.2}" height="{:.2}"/>"#,
                (ix - first) as f64 * res * PX_PER_M,
                res * PX_PER_M
            );
        }
    }

    let recs = &path.records;
    let mut next_fp = 0.0;
    for r in recs {
        if r.cum_length + 1e-9 >= next_fp {
            footprint(&mut out, &view, params, &r.pose, "footprint");
            next_fp = r.cum_length + FOOTPRINT_SPACING;
        }
    }
    let mut begin = 0;
    for i in 1..=recs.len() {
        if i == recs.len() || recs[i].mode != recs[i - 1].mode {
            if i - begin >= 2 {
                polyline(&mut out, &view, &recs[begin..i]);
            }
            begin = i;
        }
    }
    for w in recs.windows(2) {
        if w[0].mode != w[1].mode {
            let (u, v) = view.pt(w[1].pose.x, w[1].pose.y);
            let _ = writeln!(
                out,
                r#"<circle class="switch" data-from="{}" data-to="{}" cx="{u:.2}" cy="{v:.2}" r="5"/>"#,
                w[0].mode.number(),
                w[1].mode.number()
            );
        }
    }
    if let (Some(s), Some(g)) = (recs.first(), recs.last()) {
        footprint(&mut out, &view, params, &s.pose, "reference");
        for (r, class) in [(s, "start"), (g, "goal")] {
            let (u, v) = view.pt(r.pose.x, r.pose.y);
            let _ = writeln!(out, r#"<circle class="{class}" cx="{u:.2}" cy="{v:.2}" r="6"/>"#);
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use quadsteer_core::Gear;

    #[test]
    fn draws_switches_and_merged_obstacles() {
        let mut grid = OccupancyGrid::new(10, 5, 0.5, (0.0, 0.0)).unwrap();
        grid.fill_rect(1.0, 1.0, 3.0, 1.5);
        let rec =
            |x: f64, mode, cum| PathRecord { pose: Pose::new(x, 2.0, 0.0), mode, gear: Gear::Forward, cum_length: cum };
        let path = PathFile {
            records: vec![
                rec(0.5, MotionMode::Ackermann, 0.0),
                rec(1.5, MotionMode::Ackermann, 1.0),
                rec(1.5, MotionMode::Parallel, 1.0),
                rec(2.5, MotionMode::Parallel, 2.0),
            ],
            ..PathFile::default()
        };
        let svg = render_svg(&grid, &path, &RobotParams::REFERENCE);
        assert_eq!(svg.matches(r#"class="switch""#).count(), 1);
        assert_eq!(svg.matches(r#"class="obstacle""#).count(), 1);
        assert_eq!(svg.matches("<polyline").count(), 2);
        assert!(svg.ends_with("</svg>\n"));
    }
}
