//! Axis profiles: transverse velocity along the jump axis of the corner
//! experiment, with the closed-form reference where it exists.

use acoustics2d::{riemann_axis_velocity, FieldSet, Grid2D};

use crate::experiment::{ExperimentConfig, ExperimentKind};
use crate::{Error, Result};

/// One sample of a radial profile.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProfileSample {
    /// Distance from the corner along the sampled half-axis (> 0).
    pub r: f64,
    /// Numerical value at that cell center.
    pub value: f64,
    /// Closed-form reference, where available.
    pub exact: Option<f64>,
}

/// A profile along a half-axis, with strictly increasing radii.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialProfile {
    /// Samples ordered by increasing `r`.
    pub samples: Vec<ProfileSample>,
}

impl RadialProfile {
    /// L1 distance to the reference, `Σ |value − exact| · dr` over the
    /// samples that carry a reference value; `None` when none do.
    pub fn l1_error(&self, dr: f64) -> Option<f64> {
        let mut any = false;
        let mut acc = 0.0;
        for s in &self.samples {
            if let Some(e) = s.exact {
                any = true;
                acc += (s.value - e).abs() * dr;
            }
        }
        any.then_some(acc)
    }
}

/// Extract the transverse velocity `v` along the positive x half-axis of
/// the corner experiment: the cell row nearest `y = 0`, at every center
/// with `x > 0`, paired with the closed-form value `(1/2π)·𝓛(r/R)` inside
/// the sonic radius `R = (c/ε)·t_end` and 0 outside (the `exact` column is
/// filled when the config asks for references and `t_end > 0`).
///
/// The row choice makes this meaningful only for grids whose box straddles
/// `y = 0`; with an even cell count the two central rows are equidistant
/// from the axis and the lower one is taken.
///
/// # Errors
/// [`Error::Unsupported`] for experiments other than the corner problem;
/// [`Error::Config`] when no cell centers lie at `x > 0`.
pub fn extract_axis_profile(
    fields: &FieldSet,
    grid: &Grid2D,
    cfg: &ExperimentConfig,
) -> Result<RadialProfile> {
    if cfg.experiment != ExperimentKind::RiemannCorner {
        return Err(Error::Unsupported(format!(
            "axis profile with a closed-form reference exists only for \
             riemann_corner, not {}",
            cfg.experiment
        )));
    }
    if fields.nx != grid.nx || fields.ny != grid.ny {
        return Err(Error::Core(acoustics2d::Error::ShapeMismatch(format!(
            "fields are {}x{} but the grid is {}x{}",
            fields.nx, fields.ny, grid.nx, grid.ny
        ))));
    }
    let mut best = (0usize, f64::INFINITY);
    for j in 0..grid.ny {
        let y = grid.center(0, j).1;
        if y.abs() < best.1 {
            best = (j, y.abs());
        }
    }
    let j = best.0;

    let reference = cfg.reference && cfg.t_end > 0.0;
    let core = cfg.acoustic_config()?;
    let mut samples = Vec::new();
    for i in 0..grid.nx {
        let (x, _) = grid.center(i, j);
        if x <= 0.0 {
            continue;
        }
        let exact = if reference {
            Some(riemann_axis_velocity(cfg.t_end, x, core)?)
        } else {
            None
        };
        samples.push(ProfileSample {
            r: x,
            value: fields.v[grid.idx(i, j)],
            exact,
        });
    }
    if samples.is_empty() {
        return Err(Error::Config(
            "no cell centers with x > 0: the box does not cover the positive \
             jump axis"
                .into(),
        ));
    }
    Ok(RadialProfile { samples })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiment::init_experiment;

    fn corner_cfg(n: usize) -> ExperimentConfig {
        let mut cfg = ExperimentConfig::preset(ExperimentKind::RiemannCorner);
        cfg.nx = n;
        cfg.ny = n;
        cfg
    }

    #[test]
    fn test_profile_reads_the_axis_row() {
        let cfg = corner_cfg(11);
        let grid = cfg.grid().unwrap();
        // Plant v = 10x + y so the sampled row (j = 5, y = 0) gives 10x.
        let fields = FieldSet::sample(&grid, |x, y| (0.0, 10.0 * x + y, 0.0));
        let p = extract_axis_profile(&fields, &grid, &cfg).unwrap();
        assert_eq!(p.samples.len(), 5, "five centers at x > 0");
        for pair in p.samples.windows(2) {
            assert!(pair[0].r < pair[1].r, "radii strictly increase");
        }
        for s in &p.samples {
            assert!(s.r > 0.0);
            assert!((s.value - 10.0 * s.r).abs() < 1e-13);
        }
    }

    #[test]
    fn test_reference_column_matches_closed_form() {
        let cfg = corner_cfg(21);
        let grid = cfg.grid().unwrap();
        let fields = init_experiment(&cfg, &grid).unwrap();
        let p = extract_axis_profile(&fields, &grid, &cfg).unwrap();
        let core = cfg.acoustic_config().unwrap();
        let radius = core.effective_speed() * cfg.t_end;
        for s in &p.samples {
            let e = s.exact.expect("reference requested");
            if s.r >= radius {
                assert_eq!(e, 0.0, "causality: zero outside the sonic radius");
            } else {
                let expect = riemann_axis_velocity(cfg.t_end, s.r, core).unwrap();
                assert_eq!(e, expect);
                assert!(e > 0.0);
            }
        }
        // Monotone decay of the log profile inside the radius.
        let inside: Vec<f64> = p
            .samples
            .iter()
            .filter(|s| s.r < radius)
            .map(|s| s.exact.unwrap())
            .collect();
        for pair in inside.windows(2) {
            assert!(pair[0] > pair[1]);
        }
    }

    #[test]
    fn test_reference_column_respects_toggle_and_zero_time() {
        let mut cfg = corner_cfg(11);
        cfg.reference = false;
        let grid = cfg.grid().unwrap();
        let fields = init_experiment(&cfg, &grid).unwrap();
        let p = extract_axis_profile(&fields, &grid, &cfg).unwrap();
        assert!(p.samples.iter().all(|s| s.exact.is_none()));

        let mut cfg = corner_cfg(11);
        cfg.t_end = 0.0;
        let p = extract_axis_profile(&fields, &grid, &cfg).unwrap();
        assert!(p.samples.iter().all(|s| s.exact.is_none()));
    }

    #[test]
    fn test_l1_error_aggregates_referenced_samples() {
        let profile = RadialProfile {
            samples: vec![
                ProfileSample { r: 0.1, value: 1.0, exact: Some(0.75) },
                ProfileSample { r: 0.2, value: 0.5, exact: Some(0.75) },
                ProfileSample { r: 0.3, value: 9.0, exact: None },
            ],
        };
        let err = profile.l1_error(0.1).unwrap();
        assert!((err - 0.05).abs() < 1e-15);
        let none = RadialProfile {
            samples: vec![ProfileSample { r: 0.1, value: 1.0, exact: None }],
        };
        assert!(none.l1_error(0.1).is_none());
    }

    #[test]
    fn test_other_experiments_are_rejected() {
        let cfg = ExperimentConfig::preset(ExperimentKind::Vortex);
        let grid = cfg.grid().unwrap();
        let fields = FieldSet::zeros(&grid);
        let err = extract_axis_profile(&fields, &grid, &cfg).unwrap_err();
        assert!(matches!(err, Error::Unsupported(_)));
    }

    #[test]
    fn test_even_grid_takes_lower_central_row() {
        let cfg = corner_cfg(10);
        let grid = cfg.grid().unwrap();
        // Mark rows by their y so the selected row is identifiable.
        let fields = FieldSet::sample(&grid, |_, y| (0.0, y, 0.0));
        let p = extract_axis_profile(&fields, &grid, &cfg).unwrap();
        let expected_y = grid.center(0, 4).1;
        for s in &p.samples {
            assert_eq!(s.value, expected_y);
        }
        assert!(expected_y < 0.0);
    }
}
