//! Pointwise initial-data interface for the exact evolution operator.
//!
//! The point-evolution formulas need the initial data and its first
//! spatial derivatives at arbitrary points in 3-space (planar problems are
//! embedded as data independent of the third coordinate). Supplying
//! analytic gradients keeps quadrature convergence clean; implementations
//! for the standard test data used throughout the crate are provided.

/// Query interface for initial data `(v₀, p₀)` and its first derivatives.
///
/// `Sync` is required so that many evaluation points can be processed in
/// parallel against one oracle.
pub trait InitialDataOracle: Sync {
    /// Velocity and pressure at `x`: `(v₀(x), p₀(x))`.
    fn value(&self, x: [f64; 3]) -> ([f64; 3], f64);

    /// First derivatives at `x`: `(∇v₀, ∇p₀)` with `∇v₀[i][j] = ∂ᵢ v₀ⱼ`
    /// and `∇p₀[i] = ∂ᵢ p₀`.
    ///
    /// Must be consistent with [`value`](Self::value) wherever the data is
    /// smooth; at isolated kinks any one-sided limit is acceptable.
    fn gradient(&self, x: [f64; 3]) -> ([[f64; 3]; 3], [f64; 3]);
}

/// Spatially constant data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstantData {
    /// Constant velocity.
    pub v: [f64; 3],
    /// Constant pressure.
    pub p: f64,
}

impl InitialDataOracle for ConstantData {
    fn value(&self, _x: [f64; 3]) -> ([f64; 3], f64) {
        (self.v, self.p)
    }
    fn gradient(&self, _x: [f64; 3]) -> ([[f64; 3]; 3], [f64; 3]) {
        ([[0.0; 3]; 3], [0.0; 3])
    }
}

/// A real plane wave: `v₀ = v_amp·cos(k·x + phase)`, `p₀ = p_amp·cos(k·x + phase)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneWaveData {
    /// Wavevector.
    pub k: [f64; 3],
    /// Velocity amplitude vector.
    pub v_amp: [f64; 3],
    /// Pressure amplitude.
    pub p_amp: f64,
    /// Phase offset.
    pub phase: f64,
}

impl PlaneWaveData {
    fn arg(&self, x: [f64; 3]) -> f64 {
        self.k[0] * x[0] + self.k[1] * x[1] + self.k[2] * x[2] + self.phase
    }
}

impl InitialDataOracle for PlaneWaveData {
    fn value(&self, x: [f64; 3]) -> ([f64; 3], f64) {
        let c = self.arg(x).cos();
        (
            [self.v_amp[0] * c, self.v_amp[1] * c, self.v_amp[2] * c],
            self.p_amp * c,
        )
    }
    fn gradient(&self, x: [f64; 3]) -> ([[f64; 3]; 3], [f64; 3]) {
        let s = self.arg(x).sin();
        let mut gv = [[0.0; 3]; 3];
        let mut gp = [0.0; 3];
        for i in 0..3 {
            let d = -self.k[i] * s; // ∂ᵢ cos(k·x + φ)
            for j in 0..3 {
                gv[i][j] = self.v_amp[j] * d;
            }
            gp[i] = self.p_amp * d;
        }
        (gv, gp)
    }
}

/// An isotropic Gaussian pulse:
/// `v₀ = v_amp·g`, `p₀ = p_amp·g` with `g = exp(−|x−center|²/(2·width²))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianPulse {
    /// Pulse center.
    pub center: [f64; 3],
    /// Standard-deviation-like width (> 0).
    pub width: f64,
    /// Velocity amplitude vector.
    pub v_amp: [f64; 3],
    /// Pressure amplitude.
    pub p_amp: f64,
}

impl GaussianPulse {
    fn envelope(&self, x: [f64; 3]) -> f64 {
        let dx = [
            x[0] - self.center[0],
            x[1] - self.center[1],
            x[2] - self.center[2],
        ];
        let r2 = dx[0] * dx[0] + dx[1] * dx[1] + dx[2] * dx[2];
        (-r2 / (2.0 * self.width * self.width)).exp()
    }
}

impl InitialDataOracle for GaussianPulse {
    fn value(&self, x: [f64; 3]) -> ([f64; 3], f64) {
        let g = self.envelope(x);
        (
            [self.v_amp[0] * g, self.v_amp[1] * g, self.v_amp[2] * g],
            self.p_amp * g,
        )
    }
    fn gradient(&self, x: [f64; 3]) -> ([[f64; 3]; 3], [f64; 3]) {
        let g = self.envelope(x);
        let w2 = self.width * self.width;
        let mut gv = [[0.0; 3]; 3];
        let mut gp = [0.0; 3];
        for i in 0..3 {
            let d = -(x[i] - self.center[i]) / w2 * g; // ∂ᵢ g
            for j in 0..3 {
                gv[i][j] = self.v_amp[j] * d;
            }
            gp[i] = self.p_amp * d;
        }
        (gv, gp)
    }
}

/// A compactly supported planar vortex with a triangular azimuthal speed
/// profile and constant pressure.
///
/// With `ρ = |(x, y) − center|`, the azimuthal speed is `ρ/r0` inside the
/// core (`ρ ≤ r0`), `2 − ρ/r0` in the annulus (`r0 < ρ ≤ 2r0`), and 0
/// outside; the velocity is that speed times the in-plane azimuthal unit
/// vector, the out-of-plane velocity is 0, and `p₀` is constant. The data
/// is continuous but has gradient kinks on the circles `ρ = r0, 2r0`
/// (one-sided gradients are returned there).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CompactVortex {
    /// In-plane vortex center.
    pub center: [f64; 2],
    /// Core radius (> 0); the support has radius `2·r0`.
    pub r0: f64,
    /// Constant background pressure.
    pub p0: f64,
}

impl CompactVortex {
    /// Angular factor ω(ρ) with velocity (−Y, X, 0)·ω for offsets (X, Y),
    /// and its radial derivative ω′(ρ).
    fn omega(&self, rho: f64) -> (f64, f64) {
        if rho <= self.r0 {
            (1.0 / self.r0, 0.0)
        } else if rho <= 2.0 * self.r0 {
            // speed 2 − ρ/r0 ⇒ ω = 2/ρ − 1/r0
            (2.0 / rho - 1.0 / self.r0, -2.0 / (rho * rho))
        } else {
            (0.0, 0.0)
        }
    }
}

impl InitialDataOracle for CompactVortex {
    fn value(&self, x: [f64; 3]) -> ([f64; 3], f64) {
        let dx = x[0] - self.center[0];
        let dy = x[1] - self.center[1];
        let rho = (dx * dx + dy * dy).sqrt();
        let (om, _) = self.omega(rho);
        ([-dy * om, dx * om, 0.0], self.p0)
    }
    fn gradient(&self, x: [f64; 3]) -> ([[f64; 3]; 3], [f64; 3]) {
        let dx = x[0] - self.center[0];
        let dy = x[1] - self.center[1];
        let rho = (dx * dx + dy * dy).sqrt();
        let (om, dom) = self.omega(rho);
        let mut gv = [[0.0; 3]; 3];
        if rho > 0.0 {
            // v = (−Y·ω(ρ), X·ω(ρ), 0), ∂ρ/∂X = X/ρ, ∂ρ/∂Y = Y/ρ
            gv[0][0] = -dy * dom * dx / rho;
            gv[1][0] = -om - dy * dom * dy / rho;
            gv[0][1] = om + dx * dom * dx / rho;
            gv[1][1] = dx * dom * dy / rho;
        } else {
            // at the center the core field is linear: v = (−Y, X)/r0
            gv[0][1] = 1.0 / self.r0;
            gv[1][0] = -1.0 / self.r0;
        }
        (gv, [0.0; 3])
    }
}

/// Oracle built from a pair of closures, for ad-hoc data in tests and
/// wrappers (masked data, numerically differentiated evolved states, …).
pub struct FnOracle<FV, FG>
where
    FV: Fn([f64; 3]) -> ([f64; 3], f64) + Sync,
    FG: Fn([f64; 3]) -> ([[f64; 3]; 3], [f64; 3]) + Sync,
{
    /// Value closure.
    pub value_fn: FV,
    /// Gradient closure.
    pub gradient_fn: FG,
}

impl<FV, FG> InitialDataOracle for FnOracle<FV, FG>
where
    FV: Fn([f64; 3]) -> ([f64; 3], f64) + Sync,
    FG: Fn([f64; 3]) -> ([[f64; 3]; 3], [f64; 3]) + Sync,
{
    fn value(&self, x: [f64; 3]) -> ([f64; 3], f64) {
        (self.value_fn)(x)
    }
    fn gradient(&self, x: [f64; 3]) -> ([[f64; 3]; 3], [f64; 3]) {
        (self.gradient_fn)(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Central-difference check of `gradient` against `value` at smooth
    /// points: agreement to O(h²).
    fn check_gradient_consistency(data: &impl InitialDataOracle, points: &[[f64; 3]], tol: f64) {
        let h = 1e-5;
        for &x in points {
            let (gv, gp) = data.gradient(x);
            for i in 0..3 {
                let mut xp = x;
                let mut xm = x;
                xp[i] += h;
                xm[i] -= h;
                let (vp, pp) = data.value(xp);
                let (vm, pm) = data.value(xm);
                let dp = (pp - pm) / (2.0 * h);
                assert!(
                    (dp - gp[i]).abs() < tol,
                    "∂{i} p₀ at {x:?}: fd {dp}, analytic {}",
                    gp[i]
                );
                for j in 0..3 {
                    let dv = (vp[j] - vm[j]) / (2.0 * h);
                    assert!(
                        (dv - gv[i][j]).abs() < tol,
                        "∂{i} v₀{j} at {x:?}: fd {dv}, analytic {}",
                        gv[i][j]
                    );
                }
            }
        }
    }

    #[test]
    fn test_constant_data() {
        let d = ConstantData {
            v: [1.0, -2.0, 0.5],
            p: 3.0,
        };
        let (v, p) = d.value([10.0, -4.0, 2.0]);
        assert_eq!(v, [1.0, -2.0, 0.5]);
        assert_eq!(p, 3.0);
        check_gradient_consistency(&d, &[[0.0; 3], [1.0, 2.0, 3.0]], 1e-12);
    }

    #[test]
    fn test_plane_wave_gradient_consistency() {
        let d = PlaneWaveData {
            k: [2.0, -1.0, 0.5],
            v_amp: [0.3, 0.7, -0.2],
            p_amp: 1.1,
            phase: 0.4,
        };
        check_gradient_consistency(
            &d,
            &[[0.0; 3], [0.3, -0.2, 0.9], [-1.0, 2.0, 0.1]],
            1e-8,
        );
    }

    #[test]
    fn test_gaussian_gradient_consistency() {
        let d = GaussianPulse {
            center: [0.2, -0.1, 0.0],
            width: 0.5,
            v_amp: [1.0, 0.5, 0.0],
            p_amp: 2.0,
        };
        check_gradient_consistency(
            &d,
            &[[0.0; 3], [0.4, 0.3, -0.2], [1.0, 1.0, 1.0]],
            1e-8,
        );
    }

    #[test]
    fn test_vortex_profile_speeds() {
        let d = CompactVortex {
            center: [0.0, 0.0],
            r0: 0.2,
            p0: 1.0,
        };
        // at ρ = r0 the azimuthal speed peaks at 1
        let (v, p) = d.value([0.2, 0.0, 0.0]);
        assert!((v[1] - 1.0).abs() < 1e-14);
        assert_eq!(v[0], 0.0);
        assert_eq!(p, 1.0);
        // at ρ = 0.3 = 1.5·r0 the speed is 2 − 1.5 = 0.5, azimuthal
        let (v, _) = d.value([0.0, 0.3, 0.0]);
        assert!((v[0] + 0.5).abs() < 1e-14, "v = {v:?}");
        assert!(v[1].abs() < 1e-14);
        // outside the support the velocity vanishes
        let (v, _) = d.value([0.5, 0.5, 0.0]);
        assert_eq!(v, [0.0; 3]);
        // continuity across the kink circles
        for rho in [0.2, 0.4] {
            let (vin, _) = d.value([rho - 1e-12, 0.0, 0.0]);
            let (vout, _) = d.value([rho + 1e-12, 0.0, 0.0]);
            assert!((vin[1] - vout[1]).abs() < 1e-9);
        }
    }

    #[test]
    fn test_vortex_gradient_consistency_at_smooth_points() {
        let d = CompactVortex {
            center: [0.1, -0.05],
            r0: 0.2,
            p0: 1.0,
        };
        // points well inside the core, inside the annulus, and outside
        check_gradient_consistency(
            &d,
            &[
                [0.15, 0.0, 0.0],
                [0.35, -0.05, 0.3],
                [0.1, 0.25, -1.0],
                [0.9, 0.9, 0.0],
            ],
            1e-6,
        );
    }

    #[test]
    fn test_vortex_center_gradient_matches_core_field() {
        let d = CompactVortex {
            center: [0.0, 0.0],
            r0: 0.25,
            p0: 0.0,
        };
        let (gv, _) = d.gradient([0.0, 0.0, 0.0]);
        assert!((gv[0][1] - 4.0).abs() < 1e-14); // ∂x v_y = 1/r0
        assert!((gv[1][0] + 4.0).abs() < 1e-14); // ∂y v_x = −1/r0
    }

    #[test]
    fn test_fn_oracle_forwards() {
        let d = FnOracle {
            value_fn: |x: [f64; 3]| ([x[0], 0.0, 0.0], x[1]),
            gradient_fn: |_| {
                let mut gv = [[0.0; 3]; 3];
                gv[0][0] = 1.0;
                (gv, [0.0, 1.0, 0.0])
            },
        };
        let (v, p) = d.value([2.0, 3.0, 0.0]);
        assert_eq!(v[0], 2.0);
        assert_eq!(p, 3.0);
        check_gradient_consistency(&d, &[[0.5, 0.5, 0.5]], 1e-10);
    }

    #[test]
    fn test_z_independence_of_planar_data() {
        let d = CompactVortex {
            center: [0.0, 0.0],
            r0: 0.2,
            p0: 1.0,
        };
        let (v1, p1) = d.value([0.1, 0.05, 0.0]);
        let (v2, p2) = d.value([0.1, 0.05, 17.0]);
        assert_eq!(v1, v2);
        assert_eq!(p1, p2);
    }
}
