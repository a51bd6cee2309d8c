//! Amplification symbols of the schemes and of the exact operator.
//!
//! A scheme step is a convolution with a 9-point stencil per component
//! pair, so on a periodic grid each discrete Fourier mode
//! `exp(i(θx·i + θy·j))` evolves by a 3×3 complex matrix `G(θx, θy)` — the
//! scheme's symbol. The stencils are assembled here from exact rational
//! weights times the Courant factors (and the constant 1/(2π) on the
//! corner-coupling terms), independently of the stepping code; a direct
//! stepping oracle test keeps the two transcriptions identical.

use nalgebra::Matrix3;
use num_complex::Complex64;

use crate::config::AcousticConfig;
use crate::exact::{fourier_mode_evolve, ModeState};
use crate::schemes::SchemeKind;

/// 3×3 stencil weights for one (output, input) component pair, indexed
/// `[a+1][b+1]` for the contribution of the cell at offset `(a, b)`.
type Stencil = [[f64; 3]; 3];

/// offset masks: identity, wide difference, second difference
const E: [f64; 3] = [0.0, 1.0, 0.0];
const W: [f64; 3] = [-1.0, 0.0, 1.0];
const S: [f64; 3] = [1.0, -2.0, 1.0];

const INV_TWO_PI: f64 = 1.0 / std::f64::consts::TAU;

/// x-mask ⊗ y-mask.
fn outer(x: [f64; 3], y: [f64; 3]) -> Stencil {
    let mut t = [[0.0; 3]; 3];
    for a in 0..3 {
        for b in 0..3 {
            t[a][b] = x[a] * y[b];
        }
    }
    t
}

fn add_scaled(t: &mut Stencil, c: f64, m: Stencil) {
    for a in 0..3 {
        for b in 0..3 {
            t[a][b] += c * m[a][b];
        }
    }
}

/// One scheme step as an explicit 9-point stencil per component pair.
///
/// `tables[row][col]` maps input component `col` to output component `row`
/// (component order u, v, p):
/// `q_row'(i,j) = Σ_col Σ_{a,b} tables[row][col][a+1][b+1]·q_col(i+a, j+b)`.
/// Evaluate the symbol at an angle pair with [`at`](Self::at).
///
/// The symbol describes the step in symmetric variables; it depends on the
/// config only through the Courant numbers λx, λy, so it is independent of
/// ε at fixed CFL.
#[derive(Debug, Clone, PartialEq)]
pub struct SchemeSymbol {
    tables: [[Stencil; 3]; 3],
}

impl SchemeSymbol {
    /// Assembles the stencil tables for `scheme` at the Courant numbers of
    /// `cfg`.
    pub fn new(scheme: SchemeKind, cfg: AcousticConfig) -> Self {
        let lx = cfg.lambda_x();
        let ly = cfg.lambda_y();
        let mu = lx * ly;
        let zero = [[0.0; 3]; 3];
        let mut t = [[zero; 3]; 3];

        // first-order upwind part, common to both schemes:
        //   u' += u + (λx/2)δ²x u − (λx/2)δx p           (δ²: second, δ: wide)
        //   v' += v + (λy/2)δ²y v − (λy/2)δy p
        //   p' += p + (λx/2)δ²x p + (λy/2)δ²y p − (λx/2)δx u − (λy/2)δy v
        add_scaled(&mut t[0][0], 1.0, outer(E, E));
        add_scaled(&mut t[0][0], 0.5 * lx, outer(S, E));
        add_scaled(&mut t[0][2], -0.5 * lx, outer(W, E));
        add_scaled(&mut t[1][1], 1.0, outer(E, E));
        add_scaled(&mut t[1][1], 0.5 * ly, outer(E, S));
        add_scaled(&mut t[1][2], -0.5 * ly, outer(E, W));
        add_scaled(&mut t[2][2], 1.0, outer(E, E));
        add_scaled(&mut t[2][2], 0.5 * lx, outer(S, E));
        add_scaled(&mut t[2][2], 0.5 * ly, outer(E, S));
        add_scaled(&mut t[2][0], -0.5 * lx, outer(W, E));
        add_scaled(&mut t[2][1], -0.5 * ly, outer(E, W));

        if scheme == SchemeKind::MultidimGodunov {
            // corner coupling, weight μ/2 times rationals and 1/(2π):
            //   u' += (μ/2)·( (1/2π)δ²xδ²y u + (1/4)δxδy v − (1/4)δxδ²y p )
            //   v' += (μ/2)·( (1/2π)δ²xδ²y v + (1/4)δxδy u − (1/4)δ²xδy p )
            //   p' += (μ/2)·( (1/π)δ²xδ²y p − (1/4)δxδ²y u − (1/4)δ²xδy v )
            add_scaled(&mut t[0][0], 0.5 * mu * INV_TWO_PI, outer(S, S));
            add_scaled(&mut t[0][1], 0.125 * mu, outer(W, W));
            add_scaled(&mut t[0][2], -0.125 * mu, outer(W, S));
            add_scaled(&mut t[1][1], 0.5 * mu * INV_TWO_PI, outer(S, S));
            add_scaled(&mut t[1][0], 0.125 * mu, outer(W, W));
            add_scaled(&mut t[1][2], -0.125 * mu, outer(S, W));
            add_scaled(&mut t[2][2], mu * INV_TWO_PI, outer(S, S));
            add_scaled(&mut t[2][0], -0.125 * mu, outer(W, S));
            add_scaled(&mut t[2][1], -0.125 * mu, outer(S, W));
        }
        Self { tables: t }
    }

    /// The amplification matrix `G(θx, θy)`, mapping a discrete mode's
    /// `(û, v̂, p̂)` across one step.
    pub fn at(&self, theta_x: f64, theta_y: f64) -> Matrix3<Complex64> {
        let mut g = [[Complex64::new(0.0, 0.0); 3]; 3];
        for a in 0..3 {
            for b in 0..3 {
                let phase = Complex64::new(
                    0.0,
                    (a as f64 - 1.0) * theta_x + (b as f64 - 1.0) * theta_y,
                )
                .exp();
                for row in 0..3 {
                    for col in 0..3 {
                        g[row][col] += self.tables[row][col][a][b] * phase;
                    }
                }
            }
        }
        Matrix3::from_fn(|r, c| g[r][c])
    }

    /// Raw stencil weight: contribution of input component `col` at offset
    /// `(a, b) ∈ {−1,0,1}²` to output component `row`.
    pub fn weight(&self, row: usize, col: usize, a: i32, b: i32) -> f64 {
        self.tables[row][col][(a + 1) as usize][(b + 1) as usize]
    }
}

/// The amplification matrix of one `scheme` step at angles
/// `(θx, θy) ∈ [−π, π]²` (θ = k·Δ per direction).
///
/// Convenience wrapper over [`SchemeSymbol::new`] + [`SchemeSymbol::at`];
/// build the `SchemeSymbol` once when evaluating many angles.
pub fn symbol(
    scheme: SchemeKind,
    cfg: AcousticConfig,
    theta_x: f64,
    theta_y: f64,
) -> Matrix3<Complex64> {
    SchemeSymbol::new(scheme, cfg).at(theta_x, theta_y)
}

/// The exact operator's one-step symbol at wavevector `k` (units
/// 1/length): the 3×3 matrix advancing `(û, v̂, p̂)` by time `cfg.dt()`
/// under the continuous system.
///
/// Built by exact mode evolution of the three unit amplitudes. For every
/// `k` it is unitary and has a unit eigenvalue (the stationary transverse
/// branch), so `det(G_exact − I) = 0` identically — the property the
/// schemes are measured against. Compare with scheme symbols via
/// `θ = (kx·Δx, ky·Δy)`.
pub fn exact_symbol(cfg: AcousticConfig, k: [f64; 2]) -> Matrix3<Complex64> {
    let mut g = Matrix3::from_element(Complex64::new(0.0, 0.0));
    for col in 0..3 {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        let m = ModeState {
            k,
            uhat: [
                if col == 0 { one } else { zero },
                if col == 1 { one } else { zero },
            ],
            phat: if col == 2 { one } else { zero },
        };
        let evolved = fourier_mode_evolve(m, cfg.dt(), cfg);
        g[(0, col)] = evolved.uhat[0];
        g[(1, col)] = evolved.uhat[1];
        g[(2, col)] = evolved.phat;
    }
    g
}
