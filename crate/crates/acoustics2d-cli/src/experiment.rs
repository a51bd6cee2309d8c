//! Experiment catalogue: configurations, presets and initial data.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use acoustics2d::{AcousticConfig, BoundaryKind, FieldSet, Grid2D, SchemeKind};

use crate::{Error, Result};

/// The named experiments the harness can run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExperimentKind {
    /// Corner dam-break: unit `u` in the quadrant `x > 0, y > 0`, zero
    /// elsewhere, zero `v` and `p`. The transverse velocity develops a
    /// logarithmic spike along the jump axes with a known closed form.
    RiemannCorner,
    /// Checkerboard of velocity signs: `u = v = sign(x)·sign(y)`, zero
    /// pressure. Exercises all four corner interactions at once.
    RiemannSignXY,
    /// Compactly supported vortex with a triangular azimuthal speed
    /// profile and constant pressure — an exact stationary state, so any
    /// observed kinetic-energy decay is purely numerical dissipation.
    Vortex,
    /// A single cosine mode aligned with the periodic box, for smooth
    /// transport and convergence checks.
    PlaneWave,
    /// Quiet start (all fields zero); every parameter comes from the
    /// config. Useful for plumbing and timing checks.
    Custom,
}

impl ExperimentKind {
    /// Identifier used in config files, CLI values and reports.
    pub fn slug(self) -> &'static str {
        match self {
            ExperimentKind::RiemannCorner => "riemann_corner",
            ExperimentKind::RiemannSignXY => "riemann_sign_xy",
            ExperimentKind::Vortex => "vortex",
            ExperimentKind::PlaneWave => "plane_wave",
            ExperimentKind::Custom => "custom",
        }
    }
}

impl fmt::Display for ExperimentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.slug())
    }
}

impl FromStr for ExperimentKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.replace('-', "_").as_str() {
            "riemann_corner" => Ok(ExperimentKind::RiemannCorner),
            "riemann_sign_xy" => Ok(ExperimentKind::RiemannSignXY),
            "vortex" => Ok(ExperimentKind::Vortex),
            "plane_wave" => Ok(ExperimentKind::PlaneWave),
            "custom" => Ok(ExperimentKind::Custom),
            other => Err(format!(
                "unknown experiment '{other}' (expected riemann_corner, \
                 riemann_sign_xy, vortex, plane_wave or custom)"
            )),
        }
    }
}

/// Parse a scheme name (`multidim` or `split`).
pub fn parse_scheme(s: &str) -> std::result::Result<SchemeKind, String> {
    match s.replace('-', "_").as_str() {
        "multidim" => Ok(SchemeKind::MultidimGodunov),
        "split" => Ok(SchemeKind::SplitUpwind),
        other => Err(format!("unknown scheme '{other}' (expected multidim or split)")),
    }
}

/// Identifier for a scheme, inverse of [`parse_scheme`].
pub fn scheme_slug(scheme: SchemeKind) -> &'static str {
    match scheme {
        SchemeKind::MultidimGodunov => "multidim",
        SchemeKind::SplitUpwind => "split",
    }
}

/// Parse a boundary name (`zero_gradient` or `periodic`).
pub fn parse_boundary(s: &str) -> std::result::Result<BoundaryKind, String> {
    match s.replace('-', "_").as_str() {
        "zero_gradient" => Ok(BoundaryKind::ZeroGradient),
        "periodic" => Ok(BoundaryKind::Periodic),
        other => Err(format!(
            "unknown boundary '{other}' (expected zero_gradient or periodic)"
        )),
    }
}

/// Identifier for a boundary treatment, inverse of [`parse_boundary`].
pub fn boundary_slug(bc: BoundaryKind) -> &'static str {
    match bc {
        BoundaryKind::ZeroGradient => "zero_gradient",
        BoundaryKind::Periodic => "periodic",
    }
}

/// A fully specified experiment run.
///
/// Construct one with [`ExperimentConfig::preset`] and override fields, or
/// parse one from a config file with [`crate::load_config`].
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    /// Which experiment to run.
    pub experiment: ExperimentKind,
    /// Which scheme advances the fields.
    pub scheme: SchemeKind,
    /// Cells in x (≥ 3).
    pub nx: usize,
    /// Cells in y (≥ 3).
    pub ny: usize,
    /// Left domain edge.
    pub x0: f64,
    /// Right domain edge (> `x0`).
    pub x1: f64,
    /// Bottom domain edge.
    pub y0: f64,
    /// Top domain edge (> `y0`).
    pub y1: f64,
    /// Courant number (> 0; values above the scheme's stability bound are
    /// allowed on purpose, to observe the instability).
    pub cfl: f64,
    /// Wave-speed scaling 1/ε of the effective speed c/ε (> 0).
    pub epsilon: f64,
    /// Sound speed c (> 0).
    pub c: f64,
    /// Physical end time (≥ 0).
    pub t_end: f64,
    /// Boundary treatment.
    pub boundary: BoundaryKind,
    /// Directory that receives the run artifacts.
    pub out: PathBuf,
    /// Core radius r0 of the vortex experiment; its support has radius
    /// `2·r0`.
    pub vortex_radius: f64,
    /// Plane-wave mode count across the box in x.
    pub mode_mx: i64,
    /// Plane-wave mode count across the box in y.
    pub mode_my: i64,
    /// Polar quadrature order for closed-form corner references.
    pub quad_polar: usize,
    /// Radial quadrature order for closed-form corner references.
    pub quad_radial: usize,
    /// Whether to evaluate reference solutions where available (the exact
    /// column of the corner axis profile and its reported L1 error).
    pub reference: bool,
    /// Also write a legacy structured-points file next to the CSV dump.
    pub vtk: bool,
}

impl ExperimentConfig {
    /// The default configuration for an experiment.
    ///
    /// * `riemann_corner` — 101×101 on [−1, 1]², CFL 0.99, c = ε = 1,
    ///   `t_end` 0.25, zero-gradient.
    /// * `riemann_sign_xy` — identical box and numbers to the corner
    ///   preset (the experiments are meant to be compared side by side).
    /// * `vortex` — 51×51 on [−0.5, 0.5]², CFL 0.8, ε = 0.01, `t_end` 1,
    ///   zero-gradient, r0 = 0.2.
    /// * `plane_wave` — 64×64 on [0, 1]² periodic, CFL 0.45, `t_end` 0.3,
    ///   mode (1, 0).
    /// * `custom` — 64×64 on [0, 1]² periodic, CFL 0.5, `t_end` 0.1,
    ///   quiet start.
    pub fn preset(kind: ExperimentKind) -> Self {
        let base = Self {
            experiment: kind,
            scheme: SchemeKind::MultidimGodunov,
            nx: 101,
            ny: 101,
            x0: -1.0,
            x1: 1.0,
            y0: -1.0,
            y1: 1.0,
            cfl: 0.99,
            epsilon: 1.0,
            c: 1.0,
            t_end: 0.25,
            boundary: BoundaryKind::ZeroGradient,
            out: PathBuf::from(format!("out/{}", kind.slug())),
            vortex_radius: 0.2,
            mode_mx: 1,
            mode_my: 0,
            quad_polar: 32,
            quad_radial: 32,
            reference: true,
            vtk: false,
        };
        match kind {
            ExperimentKind::RiemannCorner | ExperimentKind::RiemannSignXY => base,
            ExperimentKind::Vortex => Self {
                nx: 51,
                ny: 51,
                x0: -0.5,
                x1: 0.5,
                y0: -0.5,
                y1: 0.5,
                cfl: 0.8,
                epsilon: 1e-2,
                t_end: 1.0,
                ..base
            },
            ExperimentKind::PlaneWave => Self {
                nx: 64,
                ny: 64,
                x0: 0.0,
                x1: 1.0,
                y0: 0.0,
                y1: 1.0,
                cfl: 0.45,
                t_end: 0.3,
                boundary: BoundaryKind::Periodic,
                ..base
            },
            ExperimentKind::Custom => Self {
                nx: 64,
                ny: 64,
                x0: 0.0,
                x1: 1.0,
                y0: 0.0,
                y1: 1.0,
                cfl: 0.5,
                t_end: 0.1,
                boundary: BoundaryKind::Periodic,
                ..base
            },
        }
    }

    /// Check every field against its invariant.
    ///
    /// # Errors
    /// [`Error::Config`] naming the offending field.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Config(msg));
        if self.nx < 3 || self.ny < 3 {
            return fail(format!("grid must be at least 3x3, got {}x{}", self.nx, self.ny));
        }
        if !self.x0.is_finite() || !self.x1.is_finite() || self.x1 <= self.x0 {
            return fail(format!("need finite x0 < x1, got x0 = {}, x1 = {}", self.x0, self.x1));
        }
        if !self.y0.is_finite() || !self.y1.is_finite() || self.y1 <= self.y0 {
            return fail(format!("need finite y0 < y1, got y0 = {}, y1 = {}", self.y0, self.y1));
        }
        if !(self.cfl > 0.0) || !self.cfl.is_finite() {
            return fail(format!("cfl must be finite and > 0, got {}", self.cfl));
        }
        if !(self.epsilon > 0.0) || !self.epsilon.is_finite() {
            return fail(format!("epsilon must be finite and > 0, got {}", self.epsilon));
        }
        if !(self.c > 0.0) || !self.c.is_finite() {
            return fail(format!("c must be finite and > 0, got {}", self.c));
        }
        if !self.t_end.is_finite() || self.t_end < 0.0 {
            return fail(format!("t_end must be finite and >= 0, got {}", self.t_end));
        }
        if !(self.vortex_radius > 0.0) || !self.vortex_radius.is_finite() {
            return fail(format!(
                "vortex_radius must be finite and > 0, got {}",
                self.vortex_radius
            ));
        }
        if self.quad_polar < 2 || self.quad_radial < 2 {
            return fail(format!(
                "quadrature orders must be at least 2, got polar = {}, radial = {}",
                self.quad_polar, self.quad_radial
            ));
        }
        if self.experiment == ExperimentKind::PlaneWave {
            if self.boundary != BoundaryKind::Periodic {
                return fail("plane_wave requires periodic boundaries".into());
            }
            if self.mode_mx == 0 && self.mode_my == 0 {
                return fail("plane_wave needs a nonzero mode (mode_mx, mode_my)".into());
            }
        }
        Ok(())
    }

    /// The cell-centered grid described by the extents and counts.
    ///
    /// # Errors
    /// Propagates grid-construction failures.
    pub fn grid(&self) -> Result<Grid2D> {
        self.validate()?;
        Ok(Grid2D::from_extents(
            self.nx, self.ny, self.x0, self.x1, self.y0, self.y1,
        )?)
    }

    /// The solver configuration for this run, in physical variables.
    ///
    /// # Errors
    /// Propagates configuration-validation failures.
    pub fn acoustic_config(&self) -> Result<AcousticConfig> {
        let grid = self.grid()?;
        Ok(AcousticConfig::new(
            self.c, self.epsilon, grid.dx, grid.dy, self.cfl, false,
        )?)
    }
}

/// Velocity of the triangular vortex profile at offset (`dx`, `dy`) from
/// the center: azimuthal direction times speed `ρ/r0` in the core,
/// `2 − ρ/r0` in the annulus `r0 < ρ < 2·r0`, and 0 outside.
fn vortex_velocity(dx: f64, dy: f64, r0: f64, tie: f64) -> (f64, f64) {
    let rho = dx.hypot(dy);
    if rho <= tie {
        return (0.0, 0.0);
    }
    let speed = if rho < r0 {
        rho / r0
    } else if rho < 2.0 * r0 {
        2.0 - rho / r0
    } else {
        return (0.0, 0.0);
    };
    (-dy / rho * speed, dx / rho * speed)
}

/// Sign with a dead band: 0 for `|t| ≤ tie`, ±1 otherwise.
fn banded_sign(t: f64, tie: f64) -> f64 {
    if t > tie {
        1.0
    } else if t < -tie {
        -1.0
    } else {
        0.0
    }
}

/// Initial fields for `cfg` sampled at the cell centers of `grid`, in
/// physical variables.
///
/// Cell centers that land on a jump line of the discontinuous data (up to
/// a rounding-scale tolerance) take the value 0 by symmetric convention;
/// this applies to the quadrant edges of `riemann_corner`, the axes of
/// `riemann_sign_xy`, and the center cell of `vortex`.
///
/// # Errors
/// [`Error::Config`] when the config is invalid or the grid disagrees
/// with it.
pub fn init_experiment(cfg: &ExperimentConfig, grid: &Grid2D) -> Result<FieldSet> {
    cfg.validate()?;
    let own = cfg.grid()?;
    if grid != &own {
        return Err(Error::Config(format!(
            "grid does not match the config (expected {}x{} on [{}, {}] x [{}, {}])",
            cfg.nx, cfg.ny, cfg.x0, cfg.x1, cfg.y0, cfg.y1
        )));
    }
    let tie = 1e-12 * grid.dx.max(grid.dy);
    let fields = match cfg.experiment {
        ExperimentKind::RiemannCorner => FieldSet::sample(grid, |x, y| {
            let on_jump = x.abs() <= tie || y.abs() <= tie;
            let u = if !on_jump && x > 0.0 && y > 0.0 { 1.0 } else { 0.0 };
            (u, 0.0, 0.0)
        }),
        ExperimentKind::RiemannSignXY => FieldSet::sample(grid, |x, y| {
            let s = banded_sign(x, tie) * banded_sign(y, tie);
            (s, s, 0.0)
        }),
        ExperimentKind::Vortex => {
            let cx = 0.5 * (cfg.x0 + cfg.x1);
            let cy = 0.5 * (cfg.y0 + cfg.y1);
            FieldSet::sample(grid, |x, y| {
                let (u, v) = vortex_velocity(x - cx, y - cy, cfg.vortex_radius, tie);
                (u, v, 1.0)
            })
        }
        ExperimentKind::PlaneWave => {
            let kx = std::f64::consts::TAU * cfg.mode_mx as f64 / (cfg.x1 - cfg.x0);
            let ky = std::f64::consts::TAU * cfg.mode_my as f64 / (cfg.y1 - cfg.y0);
            let k = kx.hypot(ky);
            FieldSet::sample(grid, |x, y| {
                let a = (kx * (x - cfg.x0) + ky * (y - cfg.y0)).cos();
                (kx / k * a, ky / k * a, a)
            })
        }
        ExperimentKind::Custom => FieldSet::zeros(grid),
    };
    Ok(fields)
}
