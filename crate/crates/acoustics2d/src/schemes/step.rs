//! Single time steps: the multidimensional Godunov scheme in update and
//! conservative-flux form, and the dimensionally split upwind baseline.
//!
//! All steps act on fields in symmetric variables (they reject configs marked
//! non-symmetric), advance by the config's derived Δt, and are linear maps of
//! the input state.
//!
//! The multidimensional scheme exists twice on purpose: once as the literal
//! cell-update stencil written with the discrete bracket operators
//! ([`godunov_step_update`]), and once assembled from interface fluxes
//! ([`godunov_step_flux`]) with independent index arithmetic. The two must
//! agree to rounding on arbitrary data; the flux form additionally makes
//! conservation exact by telescoping.
//!
//! Interface notation used throughout: at a vertical interface between cells
//! i and i+1, braces denote the neighbor sum `{q} = q_i + q_{i+1}` and
//! brackets the jump `[q] = q_{i+1} − q_i` (likewise horizontally).

use crate::bracket::{bracket_ops, Neighborhood3x3};
use crate::config::AcousticConfig;
use crate::error::{Error, Result};
use crate::field::FieldSet;

/// 1/(2π): the coefficient the cross-derivative (corner-coupling) terms of
/// the multidimensional stencil carry; it is the second mixed moment of a
/// quadrant cap of the unit sphere (6π-normalized) times 3.
const INV_TWO_PI: f64 = 1.0 / std::f64::consts::TAU;

/// Which scheme a step or a run uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchemeKind {
    /// The multidimensional Godunov scheme with corner coupling.
    MultidimGodunov,
    /// The dimensionally split first-order upwind baseline.
    SplitUpwind,
}

/// How out-of-range stencil indices are resolved.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryKind {
    /// Clamp to the nearest edge cell (copies the edge value outward).
    ZeroGradient,
    /// Wrap indices around the grid.
    Periodic,
}

/// What one step did: the timestep taken, the Courant number realized, and
/// the conserved totals (cell sums × cell area) before and after.
///
/// With [`BoundaryKind::Periodic`] the totals are constant per step up to
/// rounding (the flux form telescopes exactly); with zero-gradient
/// boundaries they change only through the boundary fluxes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepReport {
    /// Timestep advanced by this step.
    pub dt: f64,
    /// Largest characteristic Courant number realized, max(λx, λy) with
    /// λ = (c/ε)·Δt/Δ.
    pub max_cfl: f64,
    /// (∑u, ∑v, ∑p) × ΔxΔy before the step.
    pub totals_before: [f64; 3],
    /// (∑u, ∑v, ∑p) × ΔxΔy after the step.
    pub totals_after: [f64; 3],
}

fn wrap_index(i: isize, n: usize) -> usize {
    let n = n as isize;
    (((i % n) + n) % n) as usize
}

fn clamp_index(i: isize, n: usize) -> usize {
    i.clamp(0, n as isize - 1) as usize
}

/// Cell value with out-of-range indices resolved by the boundary rule.
fn fetch(q: &[f64], nx: usize, ny: usize, i: isize, j: isize, bc: BoundaryKind) -> f64 {
    let (ii, jj) = match bc {
        BoundaryKind::Periodic => (wrap_index(i, nx), wrap_index(j, ny)),
        BoundaryKind::ZeroGradient => (clamp_index(i, nx), clamp_index(j, ny)),
    };
    q[jj * nx + ii]
}

fn check_step_inputs(fields: &FieldSet, cfg: AcousticConfig) -> Result<()> {
    if !cfg.symmetric {
        return Err(Error::NotSymmetric(
            "steps act on symmetric variables; apply the symmetrizing transform first".into(),
        ));
    }
    if fields.nx < 3 || fields.ny < 3 {
        return Err(Error::InvalidGrid(format!(
            "stepping needs at least 3×3 cells, got {}×{}",
            fields.nx, fields.ny
        )));
    }
    Ok(())
}

fn totals(fields: &FieldSet, cfg: AcousticConfig) -> [f64; 3] {
    let area = cfg.dx * cfg.dy;
    let s = fields.sums();
    [s[0] * area, s[1] * area, s[2] * area]
}

fn neighborhood(q: &[f64], nx: usize, ny: usize, i: usize, j: usize, bc: BoundaryKind) -> Neighborhood3x3 {
    Neighborhood3x3::from_fn(|di, dj| {
        fetch(q, nx, ny, i as isize + di as isize, j as isize + dj as isize, bc)
    })
}

/// One step of the multidimensional Godunov scheme as the literal cell-update
/// stencil.
///
/// With λx = (c/ε)Δt/Δx, λy = (c/ε)Δt/Δy, μ = λx·λy and the bracket
/// operators of [`crate::bracket`], each cell is updated by first-order
/// one-dimensional upwind terms plus μ-weighted corner-coupling terms with
/// coefficients 1/(2π) and 1/4 (overall 1/(4π) and 1/8 after the global
/// factor 1/2).
///
/// # Errors
/// [`Error::NotSymmetric`] if `cfg` is not marked symmetric;
/// [`Error::InvalidGrid`] below 3×3 cells.
pub fn godunov_step_update(
    fields: FieldSet,
    cfg: AcousticConfig,
    bc: BoundaryKind,
) -> Result<FieldSet> {
    check_step_inputs(&fields, cfg)?;
    let (nx, ny) = (fields.nx, fields.ny);
    let lx = cfg.lambda_x();
    let ly = cfg.lambda_y();
    let mu = lx * ly;
    let mut out = fields.clone();
    for j in 0..ny {
        for i in 0..nx {
            let bu = bracket_ops(neighborhood(&fields.u, nx, ny, i, j, bc));
            let bv = bracket_ops(neighborhood(&fields.v, nx, ny, i, j, bc));
            let bp = bracket_ops(neighborhood(&fields.p, nx, ny, i, j, bc));
            let idx = j * nx + i;

            out.u[idx] = fields.u[idx]
                - 0.5 * lx * (bp.diff_wide_x - bu.second_diff_x)
                - 0.5
                    * mu
                    * (-INV_TWO_PI * bu.second_diff_xy - 0.25 * bv.diff_wide_xy
                        + 0.25 * bp.wide_x_second_y);

            out.v[idx] = fields.v[idx]
                - 0.5 * ly * (bp.diff_wide_y - bv.second_diff_y)
                - 0.5
                    * mu
                    * (-INV_TWO_PI * bv.second_diff_xy - 0.25 * bu.diff_wide_xy
                        + 0.25 * bp.second_x_wide_y);

            out.p[idx] = fields.p[idx]
                - 0.5 * lx * (bu.diff_wide_x - bp.second_diff_x)
                - 0.5 * ly * (bv.diff_wide_y - bp.second_diff_y)
                - 0.5
                    * mu
                    * (0.25 * bu.wide_x_second_y + 0.25 * bv.second_x_wide_y
                        - 2.0 * INV_TWO_PI * bp.second_diff_xy);
        }
    }
    Ok(out)
}

/// The (u, v, p) components of the flux through the vertical interface
/// between cells (i, j) and (i+1, j).
fn x_flux(
    fields: &FieldSet,
    cfg: AcousticConfig,
    bc: BoundaryKind,
    i: isize,
    j: isize,
) -> [f64; 3] {
    let (nx, ny) = (fields.nx, fields.ny);
    // interface sums {q} and jumps [q] on the three rows j−1, j, j+1
    let mut sum_u = [0.0; 3];
    let mut sum_v = [0.0; 3];
    let mut sum_p = [0.0; 3];
    let mut jump_u = [0.0; 3];
    let mut jump_v = [0.0; 3];
    let mut jump_p = [0.0; 3];
    for (m, row) in [-1_isize, 0, 1].into_iter().enumerate() {
        let l = |q: &[f64]| fetch(q, nx, ny, i, j + row, bc);
        let r = |q: &[f64]| fetch(q, nx, ny, i + 1, j + row, bc);
        sum_u[m] = l(&fields.u) + r(&fields.u);
        sum_v[m] = l(&fields.v) + r(&fields.v);
        sum_p[m] = l(&fields.p) + r(&fields.p);
        jump_u[m] = r(&fields.u) - l(&fields.u);
        jump_v[m] = r(&fields.v) - l(&fields.v);
        jump_p[m] = r(&fields.p) - l(&fields.p);
    }
    let sd = |w: [f64; 3]| w[2] - 2.0 * w[1] + w[0];
    let dw = |w: [f64; 3]| w[2] - w[0];
    let a = 0.5 * cfg.effective_speed();
    let kx = 0.5 * cfg.effective_speed() * cfg.effective_speed() * cfg.dt() / cfg.dy;
    [
        a * (sum_p[1] - jump_u[1])
            + kx * (-INV_TWO_PI * sd(jump_u) - 0.25 * dw(sum_v) + 0.25 * sd(sum_p)),
        0.0,
        a * (sum_u[1] - jump_p[1]) + kx * (0.25 * dw(jump_v) - INV_TWO_PI * sd(jump_p)),
    ]
}

/// The flux through the horizontal interface between cells (i, j) and
/// (i, j+1): the mirror image of [`x_flux`] under x↔y and u↔v.
fn y_flux(
    fields: &FieldSet,
    cfg: AcousticConfig,
    bc: BoundaryKind,
    i: isize,
    j: isize,
) -> [f64; 3] {
    let (nx, ny) = (fields.nx, fields.ny);
    let mut sum_u = [0.0; 3];
    let mut sum_v = [0.0; 3];
    let mut sum_p = [0.0; 3];
    let mut jump_u = [0.0; 3];
    let mut jump_v = [0.0; 3];
    let mut jump_p = [0.0; 3];
    for (m, col) in [-1_isize, 0, 1].into_iter().enumerate() {
        let l = |q: &[f64]| fetch(q, nx, ny, i + col, j, bc);
        let r = |q: &[f64]| fetch(q, nx, ny, i + col, j + 1, bc);
        sum_u[m] = l(&fields.u) + r(&fields.u);
        sum_v[m] = l(&fields.v) + r(&fields.v);
        sum_p[m] = l(&fields.p) + r(&fields.p);
        jump_u[m] = r(&fields.u) - l(&fields.u);
        jump_v[m] = r(&fields.v) - l(&fields.v);
        jump_p[m] = r(&fields.p) - l(&fields.p);
    }
    let sd = |w: [f64; 3]| w[2] - 2.0 * w[1] + w[0];
    let dw = |w: [f64; 3]| w[2] - w[0];
    let a = 0.5 * cfg.effective_speed();
    let ky = 0.5 * cfg.effective_speed() * cfg.effective_speed() * cfg.dt() / cfg.dx;
    [
        0.0,
        a * (sum_p[1] - jump_v[1])
            + ky * (-INV_TWO_PI * sd(jump_v) - 0.25 * dw(sum_u) + 0.25 * sd(sum_p)),
        a * (sum_v[1] - jump_p[1]) + ky * (0.25 * dw(jump_u) - INV_TWO_PI * sd(jump_p)),
    ]
}

/// First-order part of [`x_flux`] alone: the dimensionally split upwind
/// (Roe) flux through a vertical interface.
fn x_flux_split(
    fields: &FieldSet,
    cfg: AcousticConfig,
    bc: BoundaryKind,
    i: isize,
    j: isize,
) -> [f64; 3] {
    let (nx, ny) = (fields.nx, fields.ny);
    let l = |q: &[f64]| fetch(q, nx, ny, i, j, bc);
    let r = |q: &[f64]| fetch(q, nx, ny, i + 1, j, bc);
    let a = 0.5 * cfg.effective_speed();
    [
        a * (l(&fields.p) + r(&fields.p) - (r(&fields.u) - l(&fields.u))),
        0.0,
        a * (l(&fields.u) + r(&fields.u) - (r(&fields.p) - l(&fields.p))),
    ]
}

fn y_flux_split(
    fields: &FieldSet,
    cfg: AcousticConfig,
    bc: BoundaryKind,
    i: isize,
    j: isize,
) -> [f64; 3] {
    let (nx, ny) = (fields.nx, fields.ny);
    let l = |q: &[f64]| fetch(q, nx, ny, i, j, bc);
    let r = |q: &[f64]| fetch(q, nx, ny, i, j + 1, bc);
    let a = 0.5 * cfg.effective_speed();
    [
        0.0,
        a * (l(&fields.p) + r(&fields.p) - (r(&fields.v) - l(&fields.v))),
        a * (l(&fields.v) + r(&fields.v) - (r(&fields.p) - l(&fields.p))),
    ]
}

/// Applies one conservative update from precomputed interface-flux
/// functions and wraps it in a [`StepReport`].
fn conservative_step(
    fields: FieldSet,
    cfg: AcousticConfig,
    bc: BoundaryKind,
    fx: impl Fn(&FieldSet, AcousticConfig, BoundaryKind, isize, isize) -> [f64; 3],
    fy: impl Fn(&FieldSet, AcousticConfig, BoundaryKind, isize, isize) -> [f64; 3],
) -> Result<(FieldSet, StepReport)> {
    check_step_inputs(&fields, cfg)?;
    let (nx, ny) = (fields.nx, fields.ny);
    let dt = cfg.dt();
    // interface fluxes, each computed once: fx has nx+1 columns, fy ny+1 rows
    let mut flux_x = vec![[0.0; 3]; (nx + 1) * ny];
    for j in 0..ny {
        for i in 0..=nx {
            flux_x[j * (nx + 1) + i] = fx(&fields, cfg, bc, i as isize - 1, j as isize);
        }
    }
    let mut flux_y = vec![[0.0; 3]; nx * (ny + 1)];
    for j in 0..=ny {
        for i in 0..nx {
            flux_y[j * nx + i] = fy(&fields, cfg, bc, i as isize, j as isize - 1);
        }
    }
    let rx = dt / cfg.dx;
    let ry = dt / cfg.dy;
    let mut out = fields.clone();
    for j in 0..ny {
        for i in 0..nx {
            let idx = j * nx + i;
            let fxl = flux_x[j * (nx + 1) + i];
            let fxr = flux_x[j * (nx + 1) + i + 1];
            let fyl = flux_y[j * nx + i];
            let fyr = flux_y[(j + 1) * nx + i];
            out.u[idx] = fields.u[idx] - rx * (fxr[0] - fxl[0]) - ry * (fyr[0] - fyl[0]);
            out.v[idx] = fields.v[idx] - rx * (fxr[1] - fxl[1]) - ry * (fyr[1] - fyl[1]);
            out.p[idx] = fields.p[idx] - rx * (fxr[2] - fxl[2]) - ry * (fyr[2] - fyl[2]);
        }
    }
    let report = StepReport {
        dt,
        max_cfl: cfg.lambda_x().max(cfg.lambda_y()),
        totals_before: totals(&fields, cfg),
        totals_after: totals(&out, cfg),
    };
    Ok((out, report))
}

/// One step of the multidimensional Godunov scheme in conservative flux
/// form: interface fluxes through every vertical and horizontal face,
/// applied as flux differences.
///
/// Independent of [`godunov_step_update`] down to the index arithmetic; the
/// two agree to rounding on arbitrary data. Because every interface flux is
/// computed once and shared by its two cells, conserved totals telescope
/// exactly with periodic boundaries.
///
/// # Errors
/// As [`godunov_step_update`].
pub fn godunov_step_flux(
    fields: FieldSet,
    cfg: AcousticConfig,
    bc: BoundaryKind,
) -> Result<(FieldSet, StepReport)> {
    conservative_step(fields, cfg, bc, x_flux, y_flux)
}

/// One step of the dimensionally split first-order upwind scheme: the
/// one-dimensional Roe fluxes in x and y applied together in one
/// conservative update, with no corner coupling.
///
/// # Errors
/// As [`godunov_step_update`].
pub fn split_upwind_step(
    fields: FieldSet,
    cfg: AcousticConfig,
    bc: BoundaryKind,
) -> Result<FieldSet> {
    conservative_step(fields, cfg, bc, x_flux_split, y_flux_split).map(|(f, _)| f)
}

/// Split step variant that also returns the [`StepReport`] (used by the run
/// loop; the public baseline signature returns only the state).
pub(crate) fn split_upwind_step_with_report(
    fields: FieldSet,
    cfg: AcousticConfig,
    bc: BoundaryKind,
) -> Result<(FieldSet, StepReport)> {
    conservative_step(fields, cfg, bc, x_flux_split, y_flux_split)
}
