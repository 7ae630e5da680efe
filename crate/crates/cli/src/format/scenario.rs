//! Scenario files: one `key: value` pair per line, `#` starts a comment.
//!
//! ```text
//! label: Env1-S1
//! map: maze.map
//! start: 1.2 1.2 0 1
//! goal: 9.0 4.5 1.5708
//! modes: 1 2 3
//! ```
//!
//! `start` is `x y theta mode`, `goal` is `x y theta`, angles in radians.
//! The map path is relative to the scenario file. Every planner setting and
//! robot parameter can be overridden by its field name.

use std::path::{Path, PathBuf};

use quadsteer_core::{ModeSet, MotionMode, OccupancyGrid, PlanConfig, Pose, RobotParams, State4D};

use crate::error::CliError;
use crate::format::map::load_map;

#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub label: String,
    pub map_path: PathBuf,
    pub params: RobotParams,
    pub config: PlanConfig,
    pub start: State4D,
    pub goal: Pose,
}

impl Scenario {
    pub fn load(path: &Path) -> Result<Scenario, CliError> {
        let text =
            std::fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_path_buf(), source })?;
        let base = path.parent().unwrap_or(Path::new("."));
        parse_scenario(&text, &path.display().to_string(), base)
    }

    pub fn load_map(&self) -> Result<OccupancyGrid, CliError> {
        load_map(&self.map_path)
    }

    /// The same scenario restricted to Ackermann steering.
    pub fn baseline(&self) -> Scenario {
        let mut s = self.clone();
        s.config.modes = ModeSet::BASELINE;
        s
    }
}

fn numbers(value: &str, n: usize, source: &str, line: usize) -> Result<Vec<f64>, CliError> {
    let v: Vec<f64> = value
        .split_whitespace()
        .map(|w| w.parse::<f64>().map_err(|_| CliError::parse(source, line, format!("bad number `{w}`"))))
        .collect::<Result<_, _>>()?;
    if v.len() != n {
        return Err(CliError::parse(source, line, format!("expected {n} numbers, got {}", v.len())));
    }
    Ok(v)
}

fn mode(n: f64, source: &str, line: usize) -> Result<MotionMode, CliError> {
    if n.fract() == 0.0 && (1.0..=3.0).contains(&n) {
        Ok(MotionMode::from_number(n as u8).expect("mode in range"))
    } else {
        Err(CliError::parse(source, line, format!("unknown mode `{n}`")))
    }
}

pub fn parse_scenario(text: &str, source: &str, base: &Path) -> Result<Scenario, CliError> {
    let mut label = None;
    let mut map = None;
    let mut start = None;
    let mut goal = None;
    let mut params = RobotParams::REFERENCE;
    let mut config = PlanConfig::default();
    let mut seen = std::collections::BTreeSet::new();
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once(':')
            .map(|(k, v)| (k.trim(), v.trim()))
            .ok_or_else(|| CliError::parse(source, ln, "expected `key: value`"))?;
        if !seen.insert(key.to_string()) {
            return Err(CliError::parse(source, ln, format!("duplicate key `{key}`")));
        }
        let one = |v: &str| numbers(v, 1, source, ln).map(|v| v[0]);
        let count = |v: &str| v.parse::<usize>().map_err(|_| CliError::parse(source, ln, format!("bad count `{v}`")));
        match key {
            "label" => label = Some(value.to_string()),
            "map" => map = Some(base.join(value)),
            "start" => {
                let v = numbers(value, 4, source, ln)?;
                start = Some(State4D::new(v[0], v[1], v[2], mode(v[3], source, ln)?));
            }
            "goal" => {
                let v = numbers(value, 3, source, ln)?;
                goal = Some(Pose::new(v[0], v[1], v[2]));
            }
            "modes" => {
                let ms = value
                    .split_whitespace()
                    .map(|w| {
                        let n = w.parse::<f64>().map_err(|_| CliError::parse(source, ln, format!("bad mode `{w}`")))?;
                        mode(n, source, ln)
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                config.modes = ModeSet::from_modes(&ms);
            }
            "reverse_penalty" => config.reverse_penalty = one(value)?,
            "steer_penalty" => config.steer_penalty = one(value)?,
            "steer_change_penalty" => config.steer_change_penalty = one(value)?,
            "direction_change_penalty" => config.direction_change_penalty = one(value)?,
            "steer_samples" => config.steer_samples = count(value)?,
            "parallel_samples" => config.parallel_samples = count(value)?,
            "heading_bins" => config.heading_bins = count(value)?,
            "connect_radius" => config.connect_radius = one(value)?,
            "parallel_tolerance" => config.parallel_tolerance = one(value)?,
            "max_expansions" => config.max_expansions = count(value)?,
            "half_length" => params.half_length = one(value)?,
            "half_width" => params.half_width = one(value)?,
            "wheelbase" => params.wheelbase = one(value)?,
            "track_width" => params.track_width = one(value)?,
            "max_steer" => params.max_steer = one(value)?,
            "max_steer_rate" => params.max_steer_rate = one(value)?,
            "wheel_radius" => params.wheel_radius = one(value)?,
            "v_ref" => params.v_ref = one(value)?,
            "dt" => params.dt = one(value)?,
            "t_switch" => params.t_switch = one(value)?,
            other => return Err(CliError::parse(source, ln, format!("unknown key `{other}`"))),
        }
    }
    let missing = |k: &str| CliError::parse(source, 0, format!("missing key `{k}`"));
    let scenario = Scenario {
        label: label.ok_or_else(|| missing("label"))?,
        map_path: map.ok_or_else(|| missing("map"))?,
        params,
        config,
        start: start.ok_or_else(|| missing("start"))?,
        goal: goal.ok_or_else(|| missing("goal"))?,
    };
    params.validate().map_err(|e| CliError::parse(source, 0, e.to_string()))?;
    config.validate().map_err(|e| CliError::parse(source, 0, e.to_string()))?;
    Ok(scenario)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TEXT: &str = "\
# a comment
label: demo
map: maps/demo.map
start: 1 2 0.5 1
goal: 4 5 0   # trailing comment
modes: 1 3
reverse_penalty: 3
heading_bins: 36
t_switch: 2
";

    #[test]
    fn parses_all_fields() {
        let s = parse_scenario(TEXT, "demo.scn", Path::new("/data")).unwrap();
        assert_eq!(s.label, "demo");
        assert_eq!(s.map_path, PathBuf::from("/data/maps/demo.map"));
        assert_eq!(s.start, State4D::new(1.0, 2.0, 0.5, MotionMode::Ackermann));
        assert_eq!(s.goal, Pose::new(4.0, 5.0, 0.0));
        assert_eq!(s.config.modes, ModeSet::from_modes(&[MotionMode::Ackermann, MotionMode::Parallel]));
        assert_eq!(s.config.reverse_penalty, 3.0);
        assert_eq!(s.config.heading_bins, 36);
        assert_eq!(s.params.switch_cost(), 2.0);
        assert_eq!(s.baseline().config.modes, ModeSet::BASELINE);
    }

    #[test]
    fn rejects_bad_input() {
        let cases = [
            ("label: a\nmap: m\nstart: 1 2 0\ngoal: 1 1 0\n", "demo.scn:3:"),
            ("label: a\nmap: m\nstart: 1 2 0 7\ngoal: 1 1 0\n", "demo.scn:3:"),
            ("label: a\nlabel: b\n", "demo.scn:2:"),
            ("label: a\ncolour: red\n", "demo.scn:2:"),
            ("label: a\nmap: m\nstart: 1 2 0 1\n", "demo.scn:0: missing key `goal`"),
            ("label: a\nmap: m\nstart: 1 2 0 1\ngoal: 1 1 0\nsteer_samples: 4\n", "demo.scn:0:"),
        ];
        for (text, prefix) in cases {
            let err = parse_scenario(text, "demo.scn", Path::new(".")).unwrap_err().to_string();
            assert!(err.starts_with(prefix), "{err}");
        }
    }
}
