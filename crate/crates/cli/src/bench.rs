//! Batch comparison of the baseline and multi-modal planners.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;

use crate::error::CliError;
use crate::format::Scenario;
use crate::runner::{run, Algorithm, Run};

pub const CSV_HEADER: &str = "scenario,algorithm,path_length_m,path_cost,switches,expansions,runtime_ms,status";

#[derive(Debug)]
pub struct BenchRow {
    pub scenario: String,
    pub run: Run,
}

impl BenchRow {
    pub fn csv(&self, with_runtime: bool) -> String {
        let runtime = if with_runtime { format!("{:.6}", self.run.elapsed.as_secs_f64() * 1e3) } else { String::new() };
        let name = self.run.algorithm.name();
        match &self.run.outcome {
            Ok(r) => format!(
                "{},{name},{:.6},{:.6},{},{},{runtime},ok",
                self.scenario, r.total_length, r.total_cost, r.switch_count, r.stats.expansions
            ),
            Err(e) => {
                let expansions = match e {
                    quadsteer_core::PlanError::Exhausted { expansions }
                    | quadsteer_core::PlanError::IterationCap { expansions } => expansions.to_string(),
                    _ => String::new(),
                };
                let status = e.to_string().replace(',', ";");
                format!("{},{name},,,,{expansions},{runtime},{status}", self.scenario)
            }
        }
    }
}

/// Scenario files in `dir`, sorted by name.
pub fn scenario_files(dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let read_err = |source| CliError::Read { path: dir.to_path_buf(), source };
    let mut files = Vec::new();
    for entry in std::fs::read_dir(dir).map_err(read_err)? {
        let p = entry.map_err(read_err)?.path();
        if p.extension().is_some_and(|e| e == "scn") {
            files.push(p);
        }
    }
    files.sort();
    Ok(files)
}

pub fn run_bench(dir: &Path) -> Result<Vec<BenchRow>, CliError> {
    let mut jobs = Vec::new();
    for f in scenario_files(dir)? {
        let scn = Scenario::load(&f)?;
        let grid = scn.load_map()?;
        for alg in Algorithm::BOTH {
            jobs.push((scn.clone(), grid.clone(), alg));
        }
    }
    let slots: Vec<Mutex<Option<BenchRow>>> = jobs.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let workers = thread::available_parallelism().map_or(1, |n| n.get()).min(jobs.len().max(1));
    thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some((scn, grid, alg)) = jobs.get(i) else { break };
                let row = BenchRow { scenario: scn.label.clone(), run: run(scn, grid, *alg) };
                *slots[i].lock().expect("bench slot") = Some(row);
            });
        }
    });
    Ok(slots.into_iter().filter_map(|m| m.into_inner().expect("bench slot")).collect())
}

pub fn bench_csv(rows: &[BenchRow], with_runtime: bool) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(out, "{}", r.csv(with_runtime));
    }
    out
}
