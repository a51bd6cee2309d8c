//! Time-marching driver: repeated scheme steps to a target time, with an
//! optional per-step observer.
//!
//! The driver always lands on the target time exactly: it takes full steps
//! at the config's derived Δt and shortens the final step to whatever
//! remains. Inputs in physical variables are converted to symmetric
//! variables on entry and converted back on exit, so callers can stay in
//! whichever representation their config declares.

use crate::config::AcousticConfig;
use crate::error::{Error, Result};
use crate::field::FieldSet;
use crate::transform::{symmetrize, unsymmetrize};

use super::step::{
    godunov_step_flux, split_upwind_step_with_report, BoundaryKind, SchemeKind, StepReport,
};

/// Advances `fields` from time 0 to `t_end` with the chosen scheme,
/// returning the final state and one [`StepReport`] per step taken.
///
/// Steps use the timestep derived from `cfg`; the last step is shortened so
/// the run lands on `t_end` exactly (a target below one timestep is reached
/// in a single shortened step, and `t_end = 0` takes no steps). If
/// `cfg.symmetric` is false the input is interpreted as physical variables:
/// it is symmetrized before stepping and the result is returned in physical
/// variables again.
///
/// # Errors
/// [`Error::InvalidConfig`] for a non-finite or negative `t_end`, plus any
/// step-level error.
pub fn run(
    fields: FieldSet,
    cfg: AcousticConfig,
    bc: BoundaryKind,
    scheme: SchemeKind,
    t_end: f64,
) -> Result<(FieldSet, Vec<StepReport>)> {
    run_with(fields, cfg, bc, scheme, t_end, |_, _, _, _| Ok(()))
}

/// [`run`] with a per-step observer.
///
/// After every step the observer receives the 1-based count of completed
/// steps, the time reached, the current state **in symmetric variables**,
/// and that step's report. Returning `Err(reason)` stops the run
/// immediately and surfaces as [`Error::Aborted`] carrying the step count
/// and the reason.
///
/// # Errors
/// As [`run`], plus [`Error::Aborted`] when the observer declines to
/// continue.
pub fn run_with(
    fields: FieldSet,
    cfg: AcousticConfig,
    bc: BoundaryKind,
    scheme: SchemeKind,
    t_end: f64,
    mut observer: impl FnMut(usize, f64, &FieldSet, &StepReport) -> std::result::Result<(), String>,
) -> Result<(FieldSet, Vec<StepReport>)> {
    if !t_end.is_finite() || t_end < 0.0 {
        return Err(Error::InvalidConfig(format!(
            "t_end must be finite and >= 0, got {t_end}"
        )));
    }
    let (mut state, scfg) = if cfg.symmetric {
        (fields, cfg)
    } else {
        (symmetrize(fields, cfg), cfg.as_symmetric())
    };
    let dt = scfg.dt();
    // number of steps that lands on t_end: full steps plus one shortened
    // step; the 1e-9 slack keeps an exact multiple of dt from spilling an
    // extra sliver step
    let n_steps = if t_end == 0.0 {
        0
    } else {
        ((t_end / dt - 1e-9).ceil() as usize).max(1)
    };
    let mut reports = Vec::with_capacity(n_steps);
    for step in 0..n_steps {
        let last = step + 1 == n_steps;
        let (step_cfg, t_after) = if last {
            let dt_last = t_end - step as f64 * dt;
            (scfg.with_cfl(scfg.cfl * (dt_last / dt)), t_end)
        } else {
            (scfg, (step + 1) as f64 * dt)
        };
        let (next, report) = match scheme {
            SchemeKind::MultidimGodunov => godunov_step_flux(state, step_cfg, bc)?,
            SchemeKind::SplitUpwind => split_upwind_step_with_report(state, step_cfg, bc)?,
        };
        state = next;
        observer(step + 1, t_after, &state, &report).map_err(|reason| Error::Aborted {
            step: step + 1,
            reason,
        })?;
        reports.push(report);
    }
    let out = if cfg.symmetric {
        state
    } else {
        unsymmetrize(state, cfg)
    };
    Ok((out, reports))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Grid2D;

    fn cfg(cfl: f64, symmetric: bool) -> AcousticConfig {
        AcousticConfig::new(1.0, 1.0, 0.1, 0.1, cfl, symmetric).unwrap()
    }

    fn wave_fields() -> FieldSet {
        let grid = Grid2D::from_extents(8, 8, 0.0, 0.8, 0.0, 0.8).unwrap();
        FieldSet::sample(&grid, |x, y| {
            let s = (2.0 * std::f64::consts::PI * (x + y) / 0.8).sin();
            (s, 0.3 * s, -0.5 * s)
        })
    }

    #[test]
    fn test_zero_target_takes_no_steps() {
        let f = wave_fields();
        let (out, reports) =
            run(f.clone(), cfg(0.5, true), BoundaryKind::Periodic, SchemeKind::MultidimGodunov, 0.0)
                .unwrap();
        assert!(reports.is_empty());
        assert_eq!(out, f);
    }

    #[test]
    fn test_step_count_and_final_shortened_step() {
        let c = cfg(0.5, true);
        let dt = c.dt();
        let f = wave_fields();
        // t_end = 3.5·dt → 4 steps, last one at half the timestep
        let (_, reports) = run(
            f.clone(),
            c,
            BoundaryKind::Periodic,
            SchemeKind::MultidimGodunov,
            3.5 * dt,
        )
        .unwrap();
        assert_eq!(reports.len(), 4);
        for r in &reports[..3] {
            assert!((r.dt - dt).abs() < 1e-16 * dt.abs().max(1.0));
        }
        assert!((reports[3].dt - 0.5 * dt).abs() < 1e-12 * dt);
        let total: f64 = reports.iter().map(|r| r.dt).sum();
        assert!((total - 3.5 * dt).abs() < 1e-12 * dt);

        // an exact multiple of dt takes exactly that many full steps
        let (_, reports) =
            run(f, c, BoundaryKind::Periodic, SchemeKind::MultidimGodunov, 3.0 * dt).unwrap();
        assert_eq!(reports.len(), 3);
        assert!((reports[2].dt - dt).abs() < 1e-12 * dt);
    }

    #[test]
    fn test_target_below_one_timestep() {
        let c = cfg(0.5, true);
        let dt = c.dt();
        let (_, reports) = run(
            wave_fields(),
            c,
            BoundaryKind::Periodic,
            SchemeKind::MultidimGodunov,
            0.25 * dt,
        )
        .unwrap();
        assert_eq!(reports.len(), 1);
        assert!((reports[0].dt - 0.25 * dt).abs() < 1e-12 * dt);
    }

    #[test]
    fn test_run_matches_manual_stepping() {
        let c = cfg(0.8, true);
        let dt = c.dt();
        let f = wave_fields();
        let (via_run, _) = run(
            f.clone(),
            c,
            BoundaryKind::Periodic,
            SchemeKind::SplitUpwind,
            2.0 * dt,
        )
        .unwrap();
        let mut manual = f;
        for _ in 0..2 {
            manual = super::super::step::split_upwind_step(manual, c, BoundaryKind::Periodic)
                .unwrap();
        }
        assert_eq!(via_run, manual);
    }

    #[test]
    fn test_physical_variables_round_trip() {
        // same run in symmetric and physical variables must agree after the
        // pressure rescaling, because the step is linear and diagonal in the
        // rescaled state
        let csym = AcousticConfig::new(2.0, 0.5, 0.1, 0.1, 0.6, true).unwrap();
        let cphys = AcousticConfig::new(2.0, 0.5, 0.1, 0.1, 0.6, false).unwrap();
        let scale = cphys.c * cphys.epsilon;
        let f = wave_fields();
        let t_end = 2.0 * csym.dt();
        let (sym_out, _) =
            run(f.clone(), csym, BoundaryKind::Periodic, SchemeKind::MultidimGodunov, t_end)
                .unwrap();
        let mut phys_in = f;
        for p in &mut phys_in.p {
            *p *= scale;
        }
        let (phys_out, _) =
            run(phys_in, cphys, BoundaryKind::Periodic, SchemeKind::MultidimGodunov, t_end)
                .unwrap();
        for k in 0..sym_out.u.len() {
            assert!((phys_out.u[k] - sym_out.u[k]).abs() < 1e-14);
            assert!((phys_out.v[k] - sym_out.v[k]).abs() < 1e-14);
            assert!((phys_out.p[k] - scale * sym_out.p[k]).abs() < 1e-14);
        }
    }

    #[test]
    fn test_observer_sees_every_step_and_can_abort() {
        let c = cfg(0.5, true);
        let dt = c.dt();
        let mut seen = Vec::new();
        let result = run_with(
            wave_fields(),
            c,
            BoundaryKind::Periodic,
            SchemeKind::MultidimGodunov,
            5.0 * dt,
            |step, t, state, report| {
                assert!(state.all_finite());
                assert!(report.dt > 0.0);
                seen.push((step, t));
                if step == 3 {
                    Err("enough".to_string())
                } else {
                    Ok(())
                }
            },
        );
        match result {
            Err(Error::Aborted { step, reason }) => {
                assert_eq!(step, 3);
                assert_eq!(reason, "enough");
            }
            other => panic!("expected abort, got {other:?}"),
        }
        assert_eq!(seen.len(), 3);
        assert!((seen[1].1 - 2.0 * dt).abs() < 1e-15);
    }

    #[test]
    fn test_rejects_bad_targets() {
        let c = cfg(0.5, true);
        for bad in [-1.0, f64::NAN, f64::INFINITY] {
            assert!(matches!(
                run(wave_fields(), c, BoundaryKind::Periodic, SchemeKind::SplitUpwind, bad),
                Err(Error::InvalidConfig(_))
            ));
        }
    }
}
