//! Timed planner runs.

use std::time::{Duration, Instant};

use quadsteer_core::{plan, OccupancyGrid, PlanError, PlanResult};

use crate::format::Scenario;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Algorithm {
    Baseline,
    Multimodal,
}

impl Algorithm {
    pub const BOTH: [Algorithm; 2] = [Algorithm::Baseline, Algorithm::Multimodal];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Baseline => "baseline",
            Algorithm::Multimodal => "multimodal",
        }
    }
}

#[derive(Debug)]
pub struct Run {
    pub algorithm: Algorithm,
    pub outcome: Result<PlanResult, PlanError>,
    pub elapsed: Duration,
}

pub fn run(scn: &Scenario, grid: &OccupancyGrid, algorithm: Algorithm) -> Run {
    let scn = match algorithm {
        Algorithm::Baseline => scn.baseline(),
        Algorithm::Multimodal => scn.clone(),
    };
    let t0 = Instant::now();
    let outcome = plan(grid, &scn.params, &scn.config, scn.start, scn.goal);
    Run { algorithm, outcome, elapsed: t0.elapsed() }
}
