//! Uniform Cartesian cell layout.

use crate::error::{Error, Result};

/// A uniform 2D grid of `nx × ny` cells.
///
/// Cell `(i, j)` has its center at
/// `(x0 + (i + ½)·Δx, y0 + (j + ½)·Δy)` for `0 ≤ i < nx`, `0 ≤ j < ny`.
/// Storage order for associated fields is row-major with x varying fastest
/// (a row is a line of constant y).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid2D {
    /// Cell count in x (≥ 3).
    pub nx: usize,
    /// Cell count in y (≥ 3).
    pub ny: usize,
    /// Domain origin, x.
    pub x0: f64,
    /// Domain origin, y.
    pub y0: f64,
    /// Cell size in x (> 0).
    pub dx: f64,
    /// Cell size in y (> 0).
    pub dy: f64,
}

impl Grid2D {
    /// Validated constructor.
    ///
    /// # Errors
    /// Rejects `nx < 3` or `ny < 3` (the stencils need a full 3×3
    /// neighborhood) and non-positive or non-finite spacings/origins.
    pub fn new(nx: usize, ny: usize, x0: f64, y0: f64, dx: f64, dy: f64) -> Result<Self> {
        if nx < 3 || ny < 3 {
            return Err(Error::InvalidGrid(format!(
                "need at least 3x3 cells, got {nx}x{ny}"
            )));
        }
        if !dx.is_finite() || dx <= 0.0 || !dy.is_finite() || dy <= 0.0 {
            return Err(Error::InvalidGrid(format!(
                "cell sizes must be finite and > 0, got dx={dx}, dy={dy}"
            )));
        }
        if !x0.is_finite() || !y0.is_finite() {
            return Err(Error::InvalidGrid(format!(
                "origin must be finite, got ({x0}, {y0})"
            )));
        }
        Ok(Self { nx, ny, x0, y0, dx, dy })
    }

    /// Grid covering `[x0, x1] × [y0, y1]` with `nx × ny` cells.
    ///
    /// # Errors
    /// As [`Grid2D::new`]; additionally rejects empty extents.
    pub fn from_extents(nx: usize, ny: usize, x0: f64, x1: f64, y0: f64, y1: f64) -> Result<Self> {
        if !(x1 > x0) || !(y1 > y0) {
            return Err(Error::InvalidGrid(format!(
                "empty extents [{x0}, {x1}] x [{y0}, {y1}]"
            )));
        }
        Self::new(nx, ny, x0, y0, (x1 - x0) / nx as f64, (y1 - y0) / ny as f64)
    }

    /// Center of cell `(i, j)`.
    #[inline]
    pub fn center(&self, i: usize, j: usize) -> (f64, f64) {
        (
            self.x0 + (i as f64 + 0.5) * self.dx,
            self.y0 + (j as f64 + 0.5) * self.dy,
        )
    }

    /// Row-major storage index of cell `(i, j)` (x fastest).
    #[inline]
    pub fn idx(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.nx && j < self.ny);
        j * self.nx + i
    }

    /// Total number of cells.
    #[inline]
    pub fn n_cells(&self) -> usize {
        self.nx * self.ny
    }

    /// Cell area Δx·Δy.
    #[inline]
    pub fn cell_area(&self) -> f64 {
        self.dx * self.dy
    }
}
