//! Physical and discretization parameters.

use crate::error::{Error, Result};

/// Parameters of the ε-scaled acoustic system and its discretization.
///
/// The system advects signals at the effective speed c/ε; the derived
/// timestep keeps the Courant numbers
///
/// ```text
///   λx = c·Δt/(ε·Δx),   λy = c·Δt/(ε·Δy)
/// ```
///
/// at `cfl` on the finer direction.  `symmetric` records whether associated
/// fields are in symmetric variables (pressure divided by cε) or in scaled
/// physical variables; scheme steps require the symmetric representation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AcousticConfig {
    /// Sound speed (> 0).
    pub c: f64,
    /// Mach scaling parameter ε (> 0); signals travel at c/ε.
    pub epsilon: f64,
    /// Cell size in x (> 0).
    pub dx: f64,
    /// Cell size in y (> 0).
    pub dy: f64,
    /// Courant number (> 0).
    pub cfl: f64,
    /// Whether associated fields are in symmetric variables.
    pub symmetric: bool,
}

impl AcousticConfig {
    /// Validated constructor.
    ///
    /// # Errors
    /// Rejects non-finite or non-positive `c`, `epsilon`, `dx`, `dy`, `cfl`.
    pub fn new(c: f64, epsilon: f64, dx: f64, dy: f64, cfl: f64, symmetric: bool) -> Result<Self> {
        let cfg = Self { c, epsilon, dx, dy, cfl, symmetric };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Checks all positivity invariants.
    ///
    /// # Errors
    /// Returns [`Error::InvalidConfig`] naming the offending field.
    pub fn validate(&self) -> Result<()> {
        for (name, value) in [
            ("c", self.c),
            ("epsilon", self.epsilon),
            ("dx", self.dx),
            ("dy", self.dy),
            ("cfl", self.cfl),
        ] {
            if !value.is_finite() || value <= 0.0 {
                return Err(Error::InvalidConfig(format!(
                    "{name} must be finite and > 0, got {value}"
                )));
            }
        }
        Ok(())
    }

    /// Derived timestep Δt = cfl · ε · min(Δx, Δy) / c (strictly positive
    /// for a valid configuration).
    #[inline]
    pub fn dt(&self) -> f64 {
        self.cfl * self.epsilon * self.dx.min(self.dy) / self.c
    }

    /// Effective signal speed c/ε of the ε-scaled system.
    #[inline]
    pub fn effective_speed(&self) -> f64 {
        self.c / self.epsilon
    }

    /// Courant number in x at the derived timestep, λx = c·Δt/(ε·Δx).
    #[inline]
    pub fn lambda_x(&self) -> f64 {
        self.c * self.dt() / (self.epsilon * self.dx)
    }

    /// Courant number in y at the derived timestep, λy = c·Δt/(ε·Δy).
    #[inline]
    pub fn lambda_y(&self) -> f64 {
        self.c * self.dt() / (self.epsilon * self.dy)
    }

    /// Copy with a different Courant number (used for the shortened final
    /// step of a run).
    #[inline]
    pub fn with_cfl(&self, cfl: f64) -> Self {
        Self { cfl, ..*self }
    }

    /// Copy flagged as holding symmetric-variable fields.
    #[inline]
    pub fn as_symmetric(&self) -> Self {
        Self { symmetric: true, ..*self }
    }
}
