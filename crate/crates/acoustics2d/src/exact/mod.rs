//! Exact evolution of the symmetric constant-coefficient acoustic system.
//!
//! Three independent routes to the same solution operator, used as oracles
//! for each other and for the finite-volume schemes:
//!
//! - [`fourier_mode_evolve`]: the operator diagonalized on a single plane
//!   wave — exact up to rounding, the ground truth for smooth periodic data.
//! - [`evolve_point`]: the operator in physical space as spherical means of
//!   the initial data and its first derivatives over the sound sphere, with
//!   a radial history integral; evaluated by quadrature at a single point.
//! - [`riemann_field`] / [`riemann_axis_velocity`]: the same representation
//!   specialized to quadrant-jump initial data, with the discontinuities
//!   integrated analytically and, along the jump axis, a closed-form profile
//!   with a logarithmic corner singularity.
//!
//! Shared infrastructure: sphere quadrature rules ([`SphereQuadrature`],
//! [`spherical_mean`]), initial-data descriptions ([`InitialDataOracle`] and
//! ready-made implementations), and causal classification
//! ([`in_dependence_cone`]).

mod quadrature;

pub mod evolve;
pub mod mode;
pub mod oracle;
pub mod riemann;
pub mod sphere;

pub use evolve::{evolve_point, evolve_point_with_form, VelocityForm};
pub use mode::{fourier_mode_evolve, Complex64, ModeState};
pub use oracle::{
    CompactVortex, ConstantData, FnOracle, GaussianPulse, InitialDataOracle, PlaneWaveData,
};
pub use quadrature::QuadratureValue;
pub use riemann::{
    in_dependence_cone, log_kernel, riemann_axis_velocity, riemann_field, ConeClass,
    RiemannQuadrature,
};
pub use sphere::{spherical_mean, SphereQuadrature};
