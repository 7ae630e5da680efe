use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use quadsteer::bench::{bench_csv, run_bench};
use quadsteer::format::{describe, load_map, load_path, write_path, Scenario};
use quadsteer::render::render_svg;
use quadsteer::runner::{run, Algorithm};
use quadsteer::validate::validate_path;
use quadsteer::CliError;

/// Multi-modal Hybrid A* for four-wheel independent steering robots.
#[derive(Parser)]
#[command(version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Plan one scenario and write the path.
    Plan {
        scenario: PathBuf,
        out: PathBuf,
        /// Restrict the search to Ackermann steering.
        #[arg(long)]
        baseline: bool,
    },
    /// Run every scenario in a directory with both planners.
    Bench {
        dir: PathBuf,
        csv: PathBuf,
        /// Leave the runtime column empty, for reproducible output.
        #[arg(long)]
        no_runtime: bool,
    },
    /// Draw a path over its map as SVG.
    Render { path: PathBuf, map: PathBuf, svg: PathBuf },
    /// Check a path file against a scenario.
    Validate { path: PathBuf, scenario: PathBuf },
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Write { path: path.to_path_buf(), source })
}

fn execute(cmd: Command) -> Result<(), CliError> {
    match cmd {
        Command::Plan { scenario, out, baseline } => {
            let scn = Scenario::load(&scenario)?;
            let grid = scn.load_map()?;
            let alg = if baseline { Algorithm::Baseline } else { Algorithm::Multimodal };
            let r = run(&scn, &grid, alg);
            let res = r.outcome?;
            write(&out, &write_path(&res))?;
            println!("scenario    {} ({})", scn.label, alg.name());
            println!("map         {}", describe(&grid));
            println!("length      {:.6} m", res.total_length);
            println!("cost        {:.6}", res.total_cost);
            println!("switches    {}", res.switch_count);
            println!(
                "expansions  {} (generated {}, reopened {}, analytic attempts {})",
                res.stats.expansions, res.stats.generated, res.stats.reopened, res.stats.analytic_attempts
            );
            println!("runtime     {:.1} ms", r.elapsed.as_secs_f64() * 1e3);
            println!("waypoints   {} -> {}", res.waypoints.len(), out.display());
        }
        Command::Bench { dir, csv, no_runtime } => {
            let rows = run_bench(&dir)?;
            write(&csv, &bench_csv(&rows, !no_runtime))?;
            let failed = rows.iter().filter(|r| r.run.outcome.is_err()).count();
            println!("{} runs, {failed} failed -> {}", rows.len(), csv.display());
        }
        Command::Render { path, map, svg } => {
            let p = load_path(&path)?;
            let grid = load_map(&map)?;
            write(&svg, &render_svg(&grid, &p, &quadsteer_core::RobotParams::REFERENCE))?;
        }
        Command::Validate { path, scenario } => {
            let p = load_path(&path)?;
            let scn = Scenario::load(&scenario)?;
            let grid = scn.load_map()?;
            let report = validate_path(&p, &scn, &grid);
            for c in &report.checks {
                println!("{} {:<12} {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
            }
            if !report.passed() {
                return Err(CliError::Validation(report.failures()));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
