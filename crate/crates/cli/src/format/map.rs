//! Text occupancy maps.
//!
//! ```text
//! resolution 0.2 origin 0 0
//! ##########
//! #........#
//! ##########
//! ```
//!
//! The first line gives the cell size and the world position of the lower
//! left corner. Each following line is one row of cells, top row (highest
//! `y`) first; `#` is occupied and `.` is free. Blank lines and lines
//! starting with `;` are ignored.

use std::path::Path;

use quadsteer_core::OccupancyGrid;

use crate::error::CliError;

pub fn parse_map(text: &str, source: &str) -> Result<OccupancyGrid, CliError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end()))
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with(';'));
    let (hline, header) = lines.next().ok_or_else(|| CliError::parse(source, 1, "empty map"))?;
    let words: Vec<&str> = header.split_whitespace().collect();
    let num = |s: &str| s.parse::<f64>().map_err(|_| CliError::parse(source, hline, format!("bad number `{s}`")));
    let [kw_res, res, kw_origin, ox, oy] = words[..] else {
        return Err(CliError::parse(source, hline, "expected `resolution <r> origin <x> <y>`"));
    };
    if kw_res != "resolution" || kw_origin != "origin" {
        return Err(CliError::parse(source, hline, "expected `resolution <r> origin <x> <y>`"));
    }
    let (res, ox, oy) = (num(res)?, num(ox)?, num(oy)?);
    let mut rows: Vec<Vec<bool>> = Vec::new();
    let mut width = None;
    for (ln, line) in lines {
        let row = line
            .chars()
            .map(|c| match c {
                '#' => Ok(true),
                '.' => Ok(false),
                other => Err(CliError::parse(source, ln, format!("unexpected cell character `{other}`"))),
            })
            .collect::<Result<Vec<bool>, _>>()?;
        match width {
            None => width = Some(row.len()),
            Some(w) if w != row.len() => {
                return Err(CliError::parse(source, ln, format!("row has {} cells, expected {w}", row.len())));
            }
            _ => {}
        }
        rows.push(row);
    }
    let width = width.ok_or_else(|| CliError::parse(source, hline, "map has no rows"))?;
    let height = rows.len();
    let cells = rows.into_iter().rev().flatten().collect();
    OccupancyGrid::from_cells(width, height, res, (ox, oy), cells)
        .map_err(|e| CliError::parse(source, hline, e.to_string()))
}

pub fn write_map(grid: &OccupancyGrid) -> String {
    let (ox, oy) = grid.origin();
    let mut out = format!("resolution {} origin {} {}\n", grid.resolution(), ox, oy);
    for iy in (0..grid.height()).rev() {
        for ix in 0..grid.width() {
            out.push(if grid.is_occupied(ix, iy) { '#' } else { '.' });
        }
        out.push('\n');
    }
    out
}

pub fn load_map(path: &Path) -> Result<OccupancyGrid, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_path_buf(), source })?;
    parse_map(&text, &path.display().to_string())
}

/// Compact description used in summaries.
pub fn describe(grid: &OccupancyGrid) -> String {
    format!("{}x{} cells at {} m, {} occupied", grid.width(), grid.height(), grid.resolution(), grid.occupied_count())
}
