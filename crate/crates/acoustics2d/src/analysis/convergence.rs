//! Observed-order estimation against the exact mode evolution.
//!
//! A smooth periodic mode is sampled on a sequence of grids, marched to a
//! fixed physical time at fixed CFL, and compared against the exactly
//! evolved mode; the observed order is the least-squares slope of
//! log(error) against log(cell size).

use num_complex::Complex64;

use crate::config::AcousticConfig;
use crate::error::{Error, Result};
use crate::exact::{fourier_mode_evolve, ModeState};
use crate::field::{norms, FieldSet};
use crate::grid::Grid2D;
use crate::schemes::{run, BoundaryKind, SchemeKind};

/// Errors and fitted order from a resolution sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceStudy {
    /// Grid resolutions (cells per direction on the unit square).
    pub resolutions: Vec<usize>,
    /// Aggregate L2 error against the exactly evolved mode, per resolution.
    pub errors: Vec<f64>,
    /// Least-squares slope of log error vs log cell size.
    pub order: f64,
}

/// Real part of the mode field at a point.
fn sample_mode(m: &ModeState, x: f64, y: f64) -> (f64, f64, f64) {
    let e = Complex64::new(0.0, m.k[0] * x + m.k[1] * y).exp();
    ((m.uhat[0] * e).re, (m.uhat[1] * e).re, (m.phat * e).re)
}

/// Runs `scheme` on samples of the real part of `mode` over the periodic
/// unit square at each resolution in `resolutions` (N×N cells), to time
/// `t_end` at the CFL number of `cfg`, and fits the observed order.
///
/// `cfg` contributes `c`, `epsilon` and `cfl`; cell sizes are derived from
/// each resolution. The mode's wavevector must be `2π·(mx, my)` with
/// integer `m` so the data is grid-periodic; the reference solution is the
/// exactly evolved mode sampled on the same grid. Fields are treated as
/// symmetric variables throughout (the mode evolution is defined in them).
///
/// # Errors
/// [`Error::InvalidConfig`] for a non-periodic wavevector or bad `t_end`;
/// [`Error::DegenerateFit`] when fewer than two distinct resolutions
/// remain or every error sits at the rounding floor (e.g. `t_end = 0`, or
/// stepping with an exact method); grid construction errors for `N < 3`.
pub fn convergence_order(
    scheme: SchemeKind,
    cfg: AcousticConfig,
    mode: ModeState,
    t_end: f64,
    resolutions: &[usize],
) -> Result<ConvergenceStudy> {
    for k in mode.k {
        let cycles = k / std::f64::consts::TAU;
        if !k.is_finite() || (cycles - cycles.round()).abs() > 1e-12 {
            return Err(Error::InvalidConfig(format!(
                "wavevector component {k} is not 2π×integer; the mode would not be periodic \
                 on the unit square"
            )));
        }
    }
    if resolutions.len() < 2 {
        return Err(Error::DegenerateFit(format!(
            "need at least two resolutions, got {}",
            resolutions.len()
        )));
    }
    let reference = fourier_mode_evolve(mode, t_end, cfg);
    let mut errors = Vec::with_capacity(resolutions.len());
    for &n in resolutions {
        let grid = Grid2D::from_extents(n, n, 0.0, 1.0, 0.0, 1.0)?;
        let run_cfg = AcousticConfig::new(cfg.c, cfg.epsilon, grid.dx, grid.dy, cfg.cfl, true)?;
        let initial = FieldSet::sample(&grid, |x, y| sample_mode(&mode, x, y));
        let (finished, _) = run(initial, run_cfg, BoundaryKind::Periodic, scheme, t_end)?;
        let exact = FieldSet::sample(&grid, |x, y| sample_mode(&reference, x, y));
        errors.push(norms(&finished, &exact, &grid)?.l2_total());
    }
    if errors.iter().any(|e| *e < 1e-13) {
        return Err(Error::DegenerateFit(format!(
            "errors {errors:?} reach the rounding floor; no order can be fitted"
        )));
    }
    // least-squares slope of ln(error) against ln(h), h = 1/N
    let xs: Vec<f64> = resolutions.iter().map(|n| (1.0 / *n as f64).ln()).collect();
    let ys: Vec<f64> = errors.iter().map(|e| e.ln()).collect();
    let xbar = xs.iter().sum::<f64>() / xs.len() as f64;
    let ybar = ys.iter().sum::<f64>() / ys.len() as f64;
    let sxx: f64 = xs.iter().map(|x| (x - xbar) * (x - xbar)).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - xbar) * (y - ybar)).sum();
    if sxx < 1e-12 {
        return Err(Error::DegenerateFit(
            "resolutions are not distinct; the fit has no spread in cell size".into(),
        ));
    }
    Ok(ConvergenceStudy {
        resolutions: resolutions.to_vec(),
        errors,
        order: sxy / sxx,
    })
}
