//! Two-dimensional linear acoustics on Cartesian grids.
//!
//! The governing equations are the symmetric acoustic system
//!
//! ```text
//!   ∂t v + (c/ε) ∇p = 0,
//!   ∂t p + (c/ε) ∇·v = 0,
//! ```
//!
//! with sound speed `c` and Mach scaling `ε` (the physical, ε-scaled pressure
//! is related to the symmetric one by p ↦ p/(cε)).  The crate provides
//!
//! * [`exact`] — the exact evolution operator of this system: per-wavevector
//!   Fourier-mode evolution, point evolution by spherical-mean quadrature
//!   (Kirchhoff-type formulas rewritten to use only values and first
//!   gradients of the initial data), and the closed-form/quadrature solution
//!   of the corner Riemann problem with its logarithmic transverse-velocity
//!   profile;
//! * [`schemes`] — a first-order multidimensional Godunov scheme whose
//!   stencil is derived from the exact operator (in update and conservative
//!   flux form), a dimensionally split upwind baseline, the staggered
//!   bilinear sliding-average reconstruction that links the discrete and
//!   continuous pictures, and the time-stepping loop;
//! * [`analysis`] — Fourier symbols of the schemes, spectral-radius
//!   stability scans, the stationarity determinant det(G−I) that explains
//!   low-Mach behaviour, and convergence-order estimation.
//!
//! Shared building blocks (configuration, grids, field storage, the discrete
//! bracket operators, variable transformations, norms) live at the crate
//! root.

pub mod analysis;
pub mod bracket;
pub mod config;
pub mod error;
pub mod exact;
pub mod field;
pub mod grid;
pub mod schemes;
pub mod transform;

pub use analysis::{
    convergence_order, eigenvalues3, exact_symbol, spectral_radius, spectral_radius_scan,
    stationarity_determinant, symbol, ConvergenceStudy, SchemeSymbol, ThetaScan,
};
pub use bracket::{bracket_ops, BracketValues, Neighborhood3x3};
pub use config::AcousticConfig;
pub use error::{Error, Result};
pub use exact::{
    evolve_point, fourier_mode_evolve, in_dependence_cone, log_kernel, riemann_axis_velocity,
    riemann_field, spherical_mean, ConeClass, InitialDataOracle, ModeState, RiemannQuadrature,
    SphereQuadrature, VelocityForm,
};
pub use field::{norms, FieldNorms, FieldSet};
pub use grid::Grid2D;
pub use schemes::{
    godunov_step_flux, godunov_step_update, run, run_with, sliding_average_reconstruction,
    split_upwind_step, BilinearReconstruction, BoundaryKind, SchemeKind, StepReport,
};
pub use transform::{symmetrize, unsymmetrize};
