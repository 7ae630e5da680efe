//! Path files.
//!
//! A few `#` header lines carry the planner's totals at full precision,
//! followed by one record per line:
//!
//! ```text
//! # length 5.2
//! # cost 5.2
//! # switches 0
//! 2.000000 5.000000 0.000000 1 1 0.000000
//! ```
//!
//! Record fields are `x y theta mode gear cum_length`, with `gear` either
//! `1` or `-1` and six decimals on the reals.

use std::fmt::Write as _;
use std::path::Path;

use quadsteer_core::{Gear, MotionMode, PlanResult, Pose};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathRecord {
    pub pose: Pose,
    pub mode: MotionMode,
    pub gear: Gear,
    pub cum_length: f64,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct PathFile {
    pub length: Option<f64>,
    pub cost: Option<f64>,
    pub switches: Option<usize>,
    pub records: Vec<PathRecord>,
}

pub fn write_path(result: &PlanResult) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# length {}", result.total_length);
    let _ = writeln!(out, "# cost {}", result.total_cost);
    let _ = writeln!(out, "# switches {}", result.switch_count);
    for w in &result.waypoints {
        let _ = writeln!(
            out,
            "{:.6} {:.6} {:.6} {} {} {:.6}",
            w.pose.x,
            w.pose.y,
            w.pose.theta,
            w.mode.number(),
            if w.gear == Gear::Forward { 1 } else { -1 },
            w.cum_length
        );
    }
    out
}

pub fn parse_path(text: &str, source: &str) -> Result<PathFile, CliError> {
    let mut file = PathFile::default();
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(header) = line.strip_prefix('#') {
            let mut words = header.split_whitespace();
            let (key, value) = (words.next(), words.next());
            let bad = || CliError::parse(source, ln, format!("bad header value in `{line}`"));
            match (key, value) {
                (Some("length"), Some(v)) => file.length = Some(v.parse().map_err(|_| bad())?),
                (Some("cost"), Some(v)) => file.cost = Some(v.parse().map_err(|_| bad())?),
                (Some("switches"), Some(v)) => file.switches = Some(v.parse().map_err(|_| bad())?),
                _ => {}
            }
            continue;
        }
        let f: Vec<&str> = line.split_whitespace().collect();
        if f.len() != 6 {
            return Err(CliError::parse(source, ln, format!("expected 6 fields, got {}", f.len())));
        }
        let num = |s: &str| s.parse::<f64>().map_err(|_| CliError::parse(source, ln, format!("bad number `{s}`")));
        let mode = f[3]
            .parse::<u8>()
            .ok()
            .and_then(MotionMode::from_number)
            .ok_or_else(|| CliError::parse(source, ln, format!("bad mode `{}`", f[3])))?;
        let gear = f[4]
            .parse::<i8>()
            .ok()
            .and_then(Gear::from_sign)
            .ok_or_else(|| CliError::parse(source, ln, format!("bad gear `{}`", f[4])))?;
        file.records.push(PathRecord {
            pose: Pose { x: num(f[0])?, y: num(f[1])?, theta: num(f[2])? },
            mode,
            gear,
            cum_length: num(f[5])?,
        });
    }
    Ok(file)
}

pub fn load_path(path: &Path) -> Result<PathFile, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_path_buf(), source })?;
    parse_path(&text, &path.display().to_string())
}
