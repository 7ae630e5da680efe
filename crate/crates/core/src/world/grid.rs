use alloc::vec;
use alloc::vec::Vec;

use crate::error::WorldError;

/// Boolean occupancy grid. Cell `(ix, iy)` covers
/// `[ox + ix·r, ox + (ix+1)·r) × [oy + iy·r, oy + (iy+1)·r)`; row `iy = 0` is
/// the lowest row in `y`.
#[derive(Debug, Clone, PartialEq)]
pub struct OccupancyGrid {
    resolution: f64,
    origin: (f64, f64),
    width: usize,
    height: usize,
    cells: Vec<bool>,
}

impl OccupancyGrid {
    /// An all-free grid.
    pub fn new(width: usize, height: usize, resolution: f64, origin: (f64, f64)) -> Result<Self, WorldError> {
        Self::from_cells(width, height, resolution, origin, vec![false; width * height])
    }

    /// Builds a grid from row-major cells, row 0 lowest in `y`.
    pub fn from_cells(
        width: usize,
        height: usize,
        resolution: f64,
        origin: (f64, f64),
        cells: Vec<bool>,
    ) -> Result<Self, WorldError> {
        if width == 0 || height == 0 || !(resolution.is_finite() && resolution > 0.0) {
            return Err(WorldError::EmptyGrid);
        }
        if cells.len() != width * height {
            return Err(WorldError::CellCount { expected: width * height, got: cells.len() });
        }
        Ok(OccupancyGrid { resolution, origin, width, height, cells })
    }

    pub fn resolution(&self) -> f64 {
        self.resolution
    }

    pub fn origin(&self) -> (f64, f64) {
        self.origin
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    /// World extent `(x_max, y_max)` of the far corner.
    pub fn upper_corner(&self) -> (f64, f64) {
        (self.origin.0 + self.width as f64 * self.resolution, self.origin.1 + self.height as f64 * self.resolution)
    }

    #[inline]
    pub fn index(&self, ix: usize, iy: usize) -> usize {
        iy * self.width + ix
    }

    #[inline]
    pub fn is_occupied(&self, ix: usize, iy: usize) -> bool {
        self.cells[self.index(ix, iy)]
    }

    pub fn set_occupied(&mut self, ix: usize, iy: usize, occupied: bool) {
        let i = self.index(ix, iy);
        self.cells[i] = occupied;
    }

    /// Marks every cell whose centre lies in the axis-aligned box.
    pub fn fill_rect(&mut self, x0: f64, y0: f64, x1: f64, y1: f64) {
        for iy in 0..self.height {
            for ix in 0..self.width {
                let (cx, cy) = self.cell_center(ix, iy);
                if cx >= x0 && cx <= x1 && cy >= y0 && cy <= y1 {
                    self.set_occupied(ix, iy, true);
                }
            }
        }
    }

    pub fn cells(&self) -> &[bool] {
        &self.cells
    }

    pub fn occupied_count(&self) -> usize {
        self.cells.iter().filter(|&&c| c).count()
    }

    pub fn cell_center(&self, ix: usize, iy: usize) -> (f64, f64) {
        (self.origin.0 + (ix as f64 + 0.5) * self.resolution, self.origin.1 + (iy as f64 + 0.5) * self.resolution)
    }

    /// Cell containing the point, or `None` outside the map.
    pub fn cell_of(&self, x: f64, y: f64) -> Option<(usize, usize)> {
        let fx = (x - self.origin.0) / self.resolution;
        let fy = (y - self.origin.1) / self.resolution;
        if !(fx >= 0.0 && fy >= 0.0) {
            return None;
        }
        // truncation is floor for non-negative values
        let (ix, iy) = (fx as usize, fy as usize);
        (ix < self.width && iy < self.height).then_some((ix, iy))
    }

    pub fn contains_point(&self, x: f64, y: f64) -> bool {
        let (xm, ym) = self.upper_corner();
        x >= self.origin.0 && x <= xm && y >= self.origin.1 && y <= ym
    }
}
