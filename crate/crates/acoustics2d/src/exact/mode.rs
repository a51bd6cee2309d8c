//! Exact evolution of single Fourier modes.
//!
//! For a plane-wave ansatz `(û, p̂)·exp(i k·x)` the symmetric acoustic
//! system reduces to a 3×3 Hermitian eigenproblem per wavevector with
//! frequencies ω ∈ {0, ±(c/ε)|k|}: two acoustic branches carried by the
//! longitudinal velocity and pressure, and a stationary divergence-free
//! branch. Evolution multiplies each branch by its phase and is unitary in
//! the symmetric variables.

pub use num_complex::Complex64;

use crate::config::AcousticConfig;

/// Amplitudes of one spatial Fourier mode `(û, p̂)·exp(i k·x)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeState {
    /// Wavevector (units 1/length).
    pub k: [f64; 2],
    /// Complex velocity amplitudes (û, v̂).
    pub uhat: [Complex64; 2],
    /// Complex pressure amplitude.
    pub phat: Complex64,
}

impl ModeState {
    /// Squared amplitude norm |û|² + |v̂|² + |p̂|², the quantity conserved
    /// by the evolution.
    pub fn norm_sq(&self) -> f64 {
        self.uhat[0].norm_sqr() + self.uhat[1].norm_sqr() + self.phat.norm_sqr()
    }
}

/// Evolves a single Fourier mode exactly for time `t ≥ 0`.
///
/// The amplitudes are split into the acoustic pair
/// `a± = (p̂ ± k̂·û)/2`, which pick up phases `exp(∓i(c/ε)|k|t)`, and the
/// transverse velocity component, which is stationary. At `k = 0` every
/// branch has zero frequency and the mode is returned unchanged.
pub fn fourier_mode_evolve(m: ModeState, t: f64, cfg: AcousticConfig) -> ModeState {
    let knorm = (m.k[0] * m.k[0] + m.k[1] * m.k[1]).sqrt();
    if knorm == 0.0 {
        return m;
    }
    let khat = [m.k[0] / knorm, m.k[1] / knorm];
    let u_long = khat[0] * m.uhat[0] + khat[1] * m.uhat[1];
    let a_plus = 0.5 * (m.phat + u_long);
    let a_minus = 0.5 * (m.phat - u_long);

    let omega = cfg.effective_speed() * knorm;
    let phase_minus = Complex64::new(0.0, -omega * t).exp(); // exp(−iωt)
    let phase_plus = Complex64::new(0.0, omega * t).exp(); // exp(+iωt)

    let phat = a_plus * phase_minus + a_minus * phase_plus;
    let u_long_t = a_plus * phase_minus - a_minus * phase_plus;

    let transverse = [
        m.uhat[0] - khat[0] * u_long,
        m.uhat[1] - khat[1] * u_long,
    ];
    ModeState {
        k: m.k,
        uhat: [
            khat[0] * u_long_t + transverse[0],
            khat[1] * u_long_t + transverse[1],
        ],
        phat,
    }
}
