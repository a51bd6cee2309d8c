//! Stability and stationarity diagnostics from the scheme symbols.
//!
//! A scheme is (von Neumann) stable at a Courant number when the spectral
//! radius of its amplification matrix stays ≤ 1 over all angles; the scan
//! here samples a uniform θ-grid and reports the worst mode. Stationarity
//! preservation — whether the scheme keeps a nontrivial stationary mode at
//! every wavenumber, as the continuous system does — is probed through
//! `det(G(θ) − I)`: the exact symbol has determinant 0 identically, so a
//! nonzero value at some θ certifies that the discrete scheme destroys all
//! stationary structure at that wavenumber.

use nalgebra::Matrix3;
use num_complex::Complex64;

use crate::config::AcousticConfig;
use crate::error::{Error, Result};
use crate::schemes::SchemeKind;

use super::symbol::SchemeSymbol;

/// Result of a θ-grid spectral-radius scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaScan {
    /// Largest spectral radius found.
    pub max_rho: f64,
    /// Angle pair where the maximum was attained.
    pub argmax: (f64, f64),
}

/// Roots of the monic cubic `λ³ + aλ² + bλ + c` with complex
/// coefficients, by the closed-form (Cardano) solution on the depressed
/// cubic plus a guarded Newton polish.
///
/// Deterministic and iteration-free, unlike a QR eigen-iteration, which
/// can stall on the exactly-degenerate spectra amplification matrices
/// produce. Simple roots come out near machine precision; a defective
/// multiple root is resolved only to roughly the cube root of machine
/// precision (the intrinsic conditioning of a triple root), with the
/// exactly-zero depressed case (e.g. the identity matrix) handled exactly.
fn monic_cubic_roots(a: Complex64, b: Complex64, c: Complex64) -> [Complex64; 3] {
    let third = 1.0 / 3.0;
    let shift = a * third;
    let p = b - a * a * third;
    let q = a * a * a * (2.0 / 27.0) - a * b * third + c;
    let disc = (q * 0.5) * (q * 0.5) + (p * third).powu(3);
    let s = disc.sqrt();
    // pick the larger branch for the cube so u never cancels to zero
    // unless p = q = 0 (exact triple root of the depressed cubic)
    let r1 = -q * 0.5 + s;
    let r2 = -q * 0.5 - s;
    let u3 = if r1.norm() >= r2.norm() { r1 } else { r2 };
    let ts = if u3.norm() == 0.0 {
        [Complex64::new(0.0, 0.0); 3]
    } else {
        let u = u3.cbrt();
        let v = -p * third / u;
        let w = Complex64::new(-0.5, 0.75_f64.sqrt());
        let wc = w.conj();
        [u + v, w * u + wc * v, wc * u + w * v]
    };
    let mut roots = [Complex64::new(0.0, 0.0); 3];
    for (slot, t) in roots.iter_mut().zip(ts) {
        let mut r = t - shift;
        // Newton steps on the original cubic, kept only when they reduce
        // the residual (near a multiple root the raw step is unreliable)
        for _ in 0..2 {
            let f = ((r + a) * r + b) * r + c;
            let df = (r * 3.0 + a * 2.0) * r + b;
            if df.norm() > 1e-300 {
                let cand = r - f / df;
                let fc = ((cand + a) * cand + b) * cand + c;
                if fc.norm() < f.norm() {
                    r = cand;
                }
            }
        }
        *slot = r;
    }
    roots
}

/// Eigenvalues of a 3×3 complex matrix via its characteristic cubic.
///
/// Accuracy follows [`monic_cubic_roots`]: essentially exact for the
/// well-separated spectra of amplification matrices, cube-root-of-epsilon
/// for defective triple eigenvalues.
pub fn eigenvalues3(g: &Matrix3<Complex64>) -> [Complex64; 3] {
    let tr = g[(0, 0)] + g[(1, 1)] + g[(2, 2)];
    // sum of principal 2×2 minors
    let m0 = g[(1, 1)] * g[(2, 2)] - g[(1, 2)] * g[(2, 1)];
    let m1 = g[(0, 0)] * g[(2, 2)] - g[(0, 2)] * g[(2, 0)];
    let m2 = g[(0, 0)] * g[(1, 1)] - g[(0, 1)] * g[(1, 0)];
    let det = g.determinant();
    // char. poly: λ³ − tr·λ² + (Σ minors)·λ − det
    monic_cubic_roots(-tr, m0 + m1 + m2, -det)
}

/// Spectral radius of a 3×3 complex matrix (largest eigenvalue modulus).
pub fn spectral_radius(g: &Matrix3<Complex64>) -> f64 {
    eigenvalues3(g)
        .iter()
        .fold(0.0_f64, |m, e| m.max(e.norm()))
}

/// Scans the amplification symbol over a uniform `n × n` grid of angles
/// `θ ∈ [−π, π)²` and returns the largest spectral radius with its angle.
///
/// # Errors
/// [`Error::InvalidConfig`] when `n < 64` (coarser grids can miss the
/// unstable pocket of the split scheme near its CFL boundary).
pub fn spectral_radius_scan(
    scheme: SchemeKind,
    cfg: AcousticConfig,
    n: usize,
) -> Result<ThetaScan> {
    if n < 64 {
        return Err(Error::InvalidConfig(format!(
            "θ-scan resolution must be ≥ 64, got {n}"
        )));
    }
    let sym = SchemeSymbol::new(scheme, cfg);
    let mut best = ThetaScan {
        max_rho: f64::NEG_INFINITY,
        argmax: (0.0, 0.0),
    };
    for iy in 0..n {
        let ty = -std::f64::consts::PI + std::f64::consts::TAU * iy as f64 / n as f64;
        for ix in 0..n {
            let tx = -std::f64::consts::PI + std::f64::consts::TAU * ix as f64 / n as f64;
            let rho = spectral_radius(&sym.at(tx, ty));
            if rho > best.max_rho {
                best = ThetaScan {
                    max_rho: rho,
                    argmax: (tx, ty),
                };
            }
        }
    }
    Ok(best)
}

/// `det(G(θ) − I)` for one scheme step: zero iff the scheme admits a
/// stationary mode at this angle.
///
/// The exact operator keeps `det(G − I) = 0` for every wavenumber (the
/// transverse branch does not move); a scheme with nonzero determinant at
/// generic θ relaxes *every* mode there and therefore cannot hold discrete
/// stationary states — the mechanism behind low-Mach-number inaccuracy of
/// schemes whose determinant stays bounded away from zero as ε shrinks.
pub fn stationarity_determinant(
    scheme: SchemeKind,
    cfg: AcousticConfig,
    theta_x: f64,
    theta_y: f64,
) -> Complex64 {
    let g = SchemeSymbol::new(scheme, cfg).at(theta_x, theta_y);
    (g - Matrix3::<Complex64>::identity()).determinant()
}
