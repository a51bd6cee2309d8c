//! Continuous reconstruction of grid data for exact-evolution cross checks.
//!
//! Cell values are read as point values at cell centers and interpolated by
//! the continuous piecewise-bilinear surface through them (patches span the
//! rectangles between neighboring centers). The payoff is that spherical
//! means of this surface around a grid node are *polynomial* in the radius
//! — degree ≤ 2, with coefficients given by second differences of the cell
//! values — as long as the radius stays below one cell size. Evolving the
//! surface exactly through one timestep therefore needs only low-order
//! quadrature, and comparing against a scheme step on the same data checks
//! the scheme's derivation end to end.

use crate::error::{Error, Result};
use crate::exact::InitialDataOracle;
use crate::field::FieldSet;
use crate::grid::Grid2D;

/// Continuous piecewise-bilinear interpolant through cell-center values of
/// the three fields, extended to 3D as z-independent planar data.
///
/// Build one with [`sliding_average_reconstruction`]. Implements
/// [`InitialDataOracle`], so it can be handed directly to the exact
/// evolution operator; velocity is `(u, v, 0)`.
#[derive(Debug, Clone)]
pub struct BilinearReconstruction {
    grid: Grid2D,
    fields: FieldSet,
}

impl BilinearReconstruction {
    /// The grid whose cell centers carry the interpolated values.
    pub fn grid(&self) -> Grid2D {
        self.grid
    }

    /// Patch index and local coordinate along one axis.
    ///
    /// `t` is the coordinate, `t0 + 0.5·d` the first center; returns
    /// `(k, ξ)` with `ξ ∈ [0, 1]` such that the point sits between centers
    /// `k` and `k+1` at fraction ξ.
    fn locate(t: f64, t0: f64, d: f64, n: usize) -> (usize, f64) {
        let s = (t - (t0 + 0.5 * d)) / d;
        assert!(
            (-1e-12..=(n - 1) as f64 + 1e-12).contains(&s),
            "point {t} lies outside the cell-center hull of the grid"
        );
        let k = (s.floor().max(0.0) as usize).min(n - 2);
        (k, s - k as f64)
    }

    /// The four corner values of the patch containing `(x, y)` together
    /// with the local coordinates, per field: `([q00, q10, q01, q11], ξ, η)`.
    fn patch(&self, x: f64, y: f64) -> ([[f64; 4]; 3], f64, f64) {
        let (i, xi) = Self::locate(x, self.grid.x0, self.grid.dx, self.grid.nx);
        let (j, eta) = Self::locate(y, self.grid.y0, self.grid.dy, self.grid.ny);
        let corner = |q: &[f64]| {
            [
                q[self.grid.idx(i, j)],
                q[self.grid.idx(i + 1, j)],
                q[self.grid.idx(i, j + 1)],
                q[self.grid.idx(i + 1, j + 1)],
            ]
        };
        (
            [corner(&self.fields.u), corner(&self.fields.v), corner(&self.fields.p)],
            xi,
            eta,
        )
    }
}

impl InitialDataOracle for BilinearReconstruction {
    /// # Panics
    /// Panics when `(x, y)` lies outside the hull of the cell centers (the
    /// interpolant is not extrapolated). The z-coordinate is ignored.
    fn value(&self, x: [f64; 3]) -> ([f64; 3], f64) {
        let (corners, xi, eta) = self.patch(x[0], x[1]);
        let interp = |c: [f64; 4]| {
            c[0] * (1.0 - xi) * (1.0 - eta)
                + c[1] * xi * (1.0 - eta)
                + c[2] * (1.0 - xi) * eta
                + c[3] * xi * eta
        };
        (
            [interp(corners[0]), interp(corners[1]), 0.0],
            interp(corners[2]),
        )
    }

    /// # Panics
    /// As [`value`](Self::value). On patch edges the gradient of the patch
    /// found by the floor-based lookup is returned (a one-sided limit).
    fn gradient(&self, x: [f64; 3]) -> ([[f64; 3]; 3], [f64; 3]) {
        let (corners, xi, eta) = self.patch(x[0], x[1]);
        let dqdx = |c: [f64; 4]| ((c[1] - c[0]) * (1.0 - eta) + (c[3] - c[2]) * eta) / self.grid.dx;
        let dqdy = |c: [f64; 4]| ((c[2] - c[0]) * (1.0 - xi) + (c[3] - c[1]) * xi) / self.grid.dy;
        let mut gv = [[0.0; 3]; 3];
        gv[0][0] = dqdx(corners[0]);
        gv[0][1] = dqdx(corners[1]);
        gv[1][0] = dqdy(corners[0]);
        gv[1][1] = dqdy(corners[1]);
        let gp = [dqdx(corners[2]), dqdy(corners[2]), 0.0];
        (gv, gp)
    }
}

/// Builds the continuous piecewise-bilinear interpolant through the
/// cell-center values of `fields` on `grid`.
///
/// The name records the defining property: the spherical mean of the
/// interpolant around the center of cell `(i, j)` at radius
/// `r ≤ min(Δx, Δy)` is exactly
///
/// ```text
///   q_ij + r·(δ²x q/(4Δx) + δ²y q/(4Δy)) + r²·δ²x δ²y q/(6πΔxΔy)
/// ```
///
/// with δ² the centered second difference — the sliding average over a
/// growing sphere is a short polynomial in the cell values, which is what
/// lets the exact evolution of grid data collapse to a compact stencil.
///
/// # Errors
/// [`Error::ShapeMismatch`] when `fields` does not match `grid`.
pub fn sliding_average_reconstruction(
    fields: &FieldSet,
    grid: Grid2D,
) -> Result<BilinearReconstruction> {
    if !fields.matches(&grid) {
        return Err(Error::ShapeMismatch(format!(
            "fields {}x{} vs grid {}x{}",
            fields.nx, fields.ny, grid.nx, grid.ny
        )));
    }
    Ok(BilinearReconstruction {
        grid,
        fields: fields.clone(),
    })
}
