//! Fourier-symbol analysis of the schemes.
//!
//! Everything here views one scheme step through its action on discrete
//! Fourier modes: [`symbol`] builds the 3×3 amplification matrix from
//! rationally-weighted stencil tables, [`spectral_radius_scan`] maps out
//! von Neumann stability in the Courant number, [`stationarity_determinant`]
//! quantifies whether discrete stationary modes survive a step (the exact
//! operator's `det(G − I)` vanishes identically; the schemes' does not),
//! and [`convergence_order`] measures the order of accuracy against the
//! exactly evolved mode.

mod convergence;
mod stability;
mod symbol;

pub use convergence::{convergence_order, ConvergenceStudy};
pub use stability::{
    eigenvalues3, spectral_radius, spectral_radius_scan, stationarity_determinant, ThetaScan,
};
pub use symbol::{exact_symbol, symbol, SchemeSymbol};
