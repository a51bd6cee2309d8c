//! Finite-volume schemes on uniform grids.
//!
//! Two schemes share this module: the multidimensional Godunov scheme,
//! whose stencil is the exact evolution of a piecewise-bilinear
//! reconstruction through one timestep collapsed to closed form, and the
//! dimensionally split first-order upwind baseline it improves on. The
//! multidimensional stencil exists in two independently coded forms
//! (cell update and conservative interface fluxes) that agree to rounding;
//! the split baseline is the flux form with the corner-coupling terms
//! dropped.
//!
//! [`reconstruct`] supplies the bilinear interpolant as evolvable initial
//! data, which pins the scheme to the exact operator: one scheme step on
//! grid data equals the exact evolution of its reconstruction sampled back
//! at the cell centers (see the tests here). [`run`] marches steps to a
//! target time.

mod reconstruct;
mod run;
mod step;

pub use reconstruct::{sliding_average_reconstruction, BilinearReconstruction};
pub use run::{run, run_with};
pub use step::{
    godunov_step_flux, godunov_step_update, split_upwind_step, BoundaryKind, SchemeKind,
    StepReport,
};
