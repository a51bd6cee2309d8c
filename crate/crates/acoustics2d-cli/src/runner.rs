//! End-to-end experiment execution with deterministic artifacts.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use acoustics2d::{run_with, symmetrize, FieldSet, Grid2D};

use crate::experiment::{boundary_slug, init_experiment, scheme_slug, ExperimentConfig, ExperimentKind};
use crate::output::{fmt17, write_energy_csv, write_fields_csv, write_profile_csv, write_vtk};
use crate::profile::{extract_axis_profile, RadialProfile};
use crate::{Error, Result};

/// What a completed run produced.
#[derive(Debug, Clone)]
pub struct RunSummary {
    /// The configuration that ran.
    pub config: ExperimentConfig,
    /// The grid it ran on.
    pub grid: Grid2D,
    /// Steps taken (the last one may be shortened to land on `t_end`).
    pub steps: usize,
    /// Time actually reached.
    pub t_final: f64,
    /// Wall-clock duration of the time loop, in seconds.
    pub wall_seconds: f64,
    /// Conserved totals (cell sums × cell area, symmetric variables)
    /// before the first step.
    pub totals_initial: [f64; 3],
    /// Conserved totals after the last step.
    pub totals_final: [f64; 3],
    /// Kinetic-energy history `(step, t, ke)` starting at step 0.
    pub energy: Vec<(usize, f64, f64)>,
    /// Axis profile, for experiments that define one.
    pub profile: Option<RadialProfile>,
    /// Final fields in physical variables.
    pub fields: FieldSet,
    /// Directory the artifacts were written to.
    pub out_dir: PathBuf,
}

impl RunSummary {
    /// Kinetic energy of the initial data.
    pub fn initial_kinetic_energy(&self) -> f64 {
        self.energy.first().map(|&(_, _, ke)| ke).unwrap_or(0.0)
    }

    /// Kinetic energy after the last step.
    pub fn final_kinetic_energy(&self) -> f64 {
        self.energy.last().map(|&(_, _, ke)| ke).unwrap_or(0.0)
    }
}

fn kinetic_energy(fields: &FieldSet, cell_area: f64) -> f64 {
    let mut acc = 0.0;
    for k in 0..fields.u.len() {
        acc += fields.u[k] * fields.u[k] + fields.v[k] * fields.v[k];
    }
    0.5 * acc * cell_area
}

/// Run an experiment end to end and write its artifacts.
///
/// Artifacts in `cfg.out`:
///
/// * `fields.csv` — final fields in physical variables (and `fields.vtk`
///   when requested);
/// * `energy.csv` — kinetic-energy history, including the initial state;
/// * `profile.csv` — corner experiment only: the axis profile, with the
///   closed-form column when references are enabled;
/// * `report.txt` — `key = value` run summary. Every artifact except the
///   report's `wall_seconds` line is byte-identical across reruns of the
///   same configuration.
///
/// The state is checked after every step and the run aborts with a
/// diagnostic naming the step and time at the first non-finite value.
///
/// # Errors
/// Configuration, solver and i/o failures; a non-finite state surfaces as
/// the solver's abort error.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<RunSummary> {
    cfg.validate()?;
    let grid = cfg.grid()?;
    let core = cfg.acoustic_config()?;
    let initial = init_experiment(cfg, &grid)?;
    if !initial.all_finite() {
        return Err(Error::Config("initial data is not finite".into()));
    }
    let area = grid.cell_area();

    // Velocities agree between physical and symmetric variables, so the
    // kinetic energy can be read off the states the observer sees.
    let mut energy = vec![(0usize, 0.0, kinetic_energy(&initial, area))];
    let sym_initial_totals = {
        let s = symmetrize(initial.clone(), core);
        let sums = s.sums();
        [sums[0] * area, sums[1] * area, sums[2] * area]
    };

    let clock = Instant::now();
    let (fields, reports) = run_with(
        initial,
        core,
        cfg.boundary,
        cfg.scheme,
        cfg.t_end,
        |step, t, state, _report| {
            if !state.all_finite() {
                return Err(format!(
                    "non-finite value in the state after step {step} at t = {t:.6e}"
                ));
            }
            energy.push((step, t, kinetic_energy(state, area)));
            Ok(())
        },
    )?;
    let wall_seconds = clock.elapsed().as_secs_f64();

    let steps = reports.len();
    let t_final = energy.last().map(|&(_, t, _)| t).unwrap_or(0.0);
    let totals_initial = reports
        .first()
        .map(|r| r.totals_before)
        .unwrap_or(sym_initial_totals);
    let totals_final = reports
        .last()
        .map(|r| r.totals_after)
        .unwrap_or(sym_initial_totals);

    let profile = if cfg.experiment == ExperimentKind::RiemannCorner {
        Some(extract_axis_profile(&fields, &grid, cfg)?)
    } else {
        None
    };

    fs::create_dir_all(&cfg.out).map_err(|e| Error::io(&cfg.out, e))?;
    write_fields_csv(&cfg.out.join("fields.csv"), &fields, &grid)?;
    if cfg.vtk {
        write_vtk(&cfg.out.join("fields.vtk"), &fields, &grid)?;
    }
    write_energy_csv(&cfg.out.join("energy.csv"), &energy)?;
    if let Some(p) = &profile {
        write_profile_csv(&cfg.out.join("profile.csv"), p, cfg.reference)?;
    }

    let summary = RunSummary {
        config: cfg.clone(),
        grid,
        steps,
        t_final,
        wall_seconds,
        totals_initial,
        totals_final,
        energy,
        profile,
        fields,
        out_dir: cfg.out.clone(),
    };
    fs::write(cfg.out.join("report.txt"), render_report(&summary))
        .map_err(|e| Error::io(cfg.out.join("report.txt"), e))?;
    Ok(summary)
}

fn render_report(s: &RunSummary) -> String {
    let cfg = &s.config;
    let mut out = String::new();
    let mut line = |k: &str, v: String| {
        let _ = writeln!(out, "{k} = {v}");
    };
    line("experiment", cfg.experiment.to_string());
    line("scheme", scheme_slug(cfg.scheme).into());
    line("grid", format!("{}x{}", cfg.nx, cfg.ny));
    line(
        "domain",
        format!("[{}, {}] x [{}, {}]", cfg.x0, cfg.x1, cfg.y0, cfg.y1),
    );
    line("boundary", boundary_slug(cfg.boundary).into());
    line("cfl", cfg.cfl.to_string());
    line("epsilon", cfg.epsilon.to_string());
    line("c", cfg.c.to_string());
    line("t_end", cfg.t_end.to_string());
    line("steps", s.steps.to_string());
    line("t_final", fmt17(s.t_final));
    for (name, idx) in [("u", 0), ("v", 1), ("p", 2)] {
        line(&format!("total_{name}_initial"), fmt17(s.totals_initial[idx]));
        line(&format!("total_{name}_final"), fmt17(s.totals_final[idx]));
        line(
            &format!("total_{name}_drift"),
            fmt17(s.totals_final[idx] - s.totals_initial[idx]),
        );
    }
    line("kinetic_energy_initial", fmt17(s.initial_kinetic_energy()));
    line("kinetic_energy_final", fmt17(s.final_kinetic_energy()));
    if let Some(p) = &s.profile {
        if let Some(err) = p.l1_error(s.grid.dx) {
            line("axis_l1_error", fmt17(err));
        }
    }
    line("wall_seconds", format!("{:.3}", s.wall_seconds));
    out
}
