//! Exact point evolution by spherical-mean quadrature.
//!
//! The solution of the unit-speed symmetric system at `(t, x)` is a
//! combination of means of the initial data over the sphere of radius
//! `R = t` around `x`, plus a radial integral over the interior shells —
//! written so that only values and **first** derivatives of the data
//! appear. For parameters `(c, ε)` evaluate at the rescaled time
//! `t·c/ε`; the formulas below take the unit-speed time directly.
//!
//! Two algebraically equivalent arrangements of the velocity formula are
//! provided (their agreement is a useful self-check):
//!
//! * [`VelocityForm::Direct`] keeps every sphere term at the outer radius:
//!   `v = (2/3)v₀(x) − W + 4M(R) + R·M′(R) − ⟨v₀⟩_R + ∫₀ᴿ (3M − ⟨v₀⟩)/r dr`,
//! * [`VelocityForm::ByParts`] is the partially integrated arrangement
//!   `v = v₀(x) − W + 3M(R) + R·M′(R) − ⟨v₀⟩_R + ∫₀ᴿ (3M − ⟨v₀⟩)/r dr + ∫₀ᴿ M′ dr`,
//!
//! where `M(r) = ⟨(v₀·ŷ)ŷ⟩_r`, `M′ = dM/dr = ⟨ŷᵢ(∂ᵢv₀ⱼ)ŷⱼ ŷ⟩_r`, and
//! `W = 2⟨p₀ŷ⟩_R + R⟨(ŷ·∇p₀)ŷ⟩_R`. The pressure is
//! `p = ⟨p₀⟩_R + R⟨ŷ·∇p₀⟩_R − 2⟨ŷ·v₀⟩_R − R⟨ŷᵢŷⱼ∂ᵢv₀ⱼ⟩_R`.
//!
//! The timelike integrand `(3M − ⟨v₀⟩)/r` extends continuously to `r = 0`
//! (it vanishes there because `M(0) = v₀/3`), so an open Gauss–Legendre
//! rule on `(0, R]` — no node at `r = 0` — integrates it without
//! special-casing the removable singularity.

use super::oracle::InitialDataOracle;
use super::quadrature::gauss_legendre;
use super::sphere::SphereQuadrature;
use crate::error::{Error, Result};

/// Which arrangement of the velocity formula to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VelocityForm {
    /// All sphere terms at the outer radius; radial integral of values only.
    Direct,
    /// Partially integrated arrangement with an extra radial integral of
    /// gradient means.
    ByParts,
}

/// All sphere means of the data over one shell of radius `r` around `x`.
#[derive(Debug, Clone, Copy, Default)]
struct ShellMoments {
    /// ⟨p₀⟩
    p: f64,
    /// ⟨ŷ·∇p₀⟩
    dp_radial: f64,
    /// ⟨ŷ·v₀⟩
    v_radial: f64,
    /// ⟨ŷᵢ ŷⱼ ∂ᵢv₀ⱼ⟩
    vgrad_radial: f64,
    /// ⟨p₀ ŷ⟩
    p_dir: [f64; 3],
    /// ⟨(ŷ·∇p₀) ŷ⟩
    dp_dir: [f64; 3],
    /// ⟨v₀⟩
    v: [f64; 3],
    /// M(r) = ⟨(v₀·ŷ) ŷ⟩
    m: [f64; 3],
    /// M′(r) = ⟨(ŷᵢ ∂ᵢv₀ⱼ ŷⱼ) ŷ⟩
    m_prime: [f64; 3],
}

fn shell_moments<O: InitialDataOracle + ?Sized>(
    data: &O,
    x: [f64; 3],
    r: f64,
    quad: &SphereQuadrature,
    with_gradient: bool,
) -> ShellMoments {
    let mut acc = ShellMoments::default();
    for (node, w) in quad.nodes.iter().zip(&quad.weights) {
        let y = *node;
        let w = *w;
        let xi = [x[0] + r * y[0], x[1] + r * y[1], x[2] + r * y[2]];
        let (v0, p0) = data.value(xi);
        let vy = v0[0] * y[0] + v0[1] * y[1] + v0[2] * y[2];
        acc.p += w * p0;
        acc.v_radial += w * vy;
        for k in 0..3 {
            acc.p_dir[k] += w * p0 * y[k];
            acc.v[k] += w * v0[k];
            acc.m[k] += w * vy * y[k];
        }
        if with_gradient {
            let (gv, gp) = data.gradient(xi);
            let dp_y = gp[0] * y[0] + gp[1] * y[1] + gp[2] * y[2];
            // s = ŷᵢ (∂ᵢ v₀ⱼ) ŷⱼ
            let mut s = 0.0;
            for i in 0..3 {
                for j in 0..3 {
                    s += y[i] * gv[i][j] * y[j];
                }
            }
            acc.dp_radial += w * dp_y;
            acc.vgrad_radial += w * s;
            for k in 0..3 {
                acc.dp_dir[k] += w * dp_y * y[k];
                acc.m_prime[k] += w * s * y[k];
            }
        }
    }
    let inv = 1.0 / (4.0 * std::f64::consts::PI);
    acc.p *= inv;
    acc.dp_radial *= inv;
    acc.v_radial *= inv;
    acc.vgrad_radial *= inv;
    for k in 0..3 {
        acc.p_dir[k] *= inv;
        acc.dp_dir[k] *= inv;
        acc.v[k] *= inv;
        acc.m[k] *= inv;
        acc.m_prime[k] *= inv;
    }
    acc
}

/// Radial integrals over the interior shells:
/// `∫₀ᴿ (3M − ⟨v₀⟩)/r dr` and (if requested) `∫₀ᴿ M′ dr`.
fn radial_integrals<O: InitialDataOracle + ?Sized>(
    data: &O,
    x: [f64; 3],
    rmax: f64,
    quad: &SphereQuadrature,
    n_radial: usize,
    with_m_prime: bool,
) -> ([f64; 3], [f64; 3]) {
    let (nodes, weights) = gauss_legendre(n_radial);
    let mut timelike = [0.0; 3];
    let mut m_prime_int = [0.0; 3];
    let half = 0.5 * rmax;
    for (s, w) in nodes.iter().zip(&weights) {
        let r = half * (s + 1.0);
        let wr = half * w;
        let sh = shell_moments(data, x, r, quad, with_m_prime);
        for k in 0..3 {
            timelike[k] += wr * (3.0 * sh.m[k] - sh.v[k]) / r;
            if with_m_prime {
                m_prime_int[k] += wr * sh.m_prime[k];
            }
        }
    }
    (timelike, m_prime_int)
}

/// Evolves the initial data exactly to time `t` at the point `x` for the
/// unit-effective-speed system, returning `(v, p)`.
///
/// `quad` fixes the sphere rule for all shell means, `n_radial` the
/// Gauss–Legendre order of the radial integrals. With `tol = Some(τ)` the
/// radial integrals are recomputed at order `2·n_radial`; if the velocity
/// changes by more than `τ` in any component the evaluation is rejected as
/// non-converged, otherwise the refined value is returned. `tol = None`
/// skips the check (single evaluation at order `n_radial`).
///
/// The data must be continuous and piecewise-C¹ on the closed ball of
/// radius `t` around `x`, with kinks (if any) crossing the spheres
/// transversally or lying on quadrature panel boundaries.
///
/// Uses the [`VelocityForm::Direct`] arrangement; see
/// [`evolve_point_with_form`] to choose explicitly.
pub fn evolve_point<O: InitialDataOracle + ?Sized>(
    data: &O,
    t: f64,
    x: [f64; 3],
    quad: &SphereQuadrature,
    n_radial: usize,
    tol: Option<f64>,
) -> Result<([f64; 3], f64)> {
    evolve_point_with_form(data, t, x, quad, n_radial, tol, VelocityForm::Direct)
}

/// [`evolve_point`] with an explicit choice of velocity arrangement.
pub fn evolve_point_with_form<O: InitialDataOracle + ?Sized>(
    data: &O,
    t: f64,
    x: [f64; 3],
    quad: &SphereQuadrature,
    n_radial: usize,
    tol: Option<f64>,
    form: VelocityForm,
) -> Result<([f64; 3], f64)> {
    if !t.is_finite() || t < 0.0 {
        return Err(Error::OutOfDomain(format!(
            "evolution time must be finite and ≥ 0, got {t}"
        )));
    }
    if n_radial == 0 {
        return Err(Error::InvalidConfig(
            "radial quadrature order must be ≥ 1".into(),
        ));
    }
    if t == 0.0 {
        return Ok(data.value(x));
    }
    let r = t;
    let (v0_center, _) = data.value(x);
    let shell = shell_moments(data, x, r, quad, true);

    let p = shell.p + r * shell.dp_radial - 2.0 * shell.v_radial - r * shell.vgrad_radial;

    let with_m_prime = form == VelocityForm::ByParts;
    let assemble = |timelike: [f64; 3], m_prime_int: [f64; 3]| {
        let mut v = [0.0; 3];
        for k in 0..3 {
            let w_k = 2.0 * shell.p_dir[k] + r * shell.dp_dir[k];
            v[k] = match form {
                VelocityForm::Direct => {
                    2.0 / 3.0 * v0_center[k] - w_k + 4.0 * shell.m[k] + r * shell.m_prime[k]
                        - shell.v[k]
                        + timelike[k]
                }
                VelocityForm::ByParts => {
                    v0_center[k] - w_k + 3.0 * shell.m[k] + r * shell.m_prime[k] - shell.v[k]
                        + timelike[k]
                        + m_prime_int[k]
                }
            };
        }
        v
    };

    let (timelike, m_prime_int) = radial_integrals(data, x, r, quad, n_radial, with_m_prime);
    let v = assemble(timelike, m_prime_int);

    match tol {
        None => Ok((v, p)),
        Some(tol) => {
            let (t2, m2) = radial_integrals(data, x, r, quad, 2 * n_radial, with_m_prime);
            let v2 = assemble(t2, m2);
            let changed = (0..3).map(|k| (v2[k] - v[k]).abs()).fold(0.0, f64::max);
            if changed > tol {
                Err(Error::QuadratureNotConverged { changed, tol })
            } else {
                Ok((v2, p))
            }
        }
    }
}
