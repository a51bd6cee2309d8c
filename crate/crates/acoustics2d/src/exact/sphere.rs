//! Quadrature rules on the unit sphere and spherical means.

use super::quadrature::{gauss_legendre, QuadratureValue};
use std::f64::consts::PI;

/// A quadrature rule on the unit sphere S².
///
/// Nodes are unit 3-vectors with positive weights summing to 4π, so that
/// `(1/4π)·∑ wᵢ f(nodeᵢ)` approximates the mean of `f` over the sphere.
#[derive(Debug, Clone, PartialEq)]
pub struct SphereQuadrature {
    /// Unit direction vectors.
    pub nodes: Vec<[f64; 3]>,
    /// Positive weights summing to 4π.
    pub weights: Vec<f64>,
    /// Order label: the polar resolution the rule was built with.
    pub n_quad: usize,
}

impl SphereQuadrature {
    /// Product rule: `n_cos`-point Gauss–Legendre in cos θ × `n_phi`-point
    /// uniform (midpoint) rule in the azimuth φ, with the pole axis along z.
    ///
    /// The uniform azimuthal rule integrates trigonometric polynomials of
    /// degree < `n_phi` exactly, so for smooth data the rule is spectrally
    /// accurate: expanding in spherical harmonics, the φ-average annihilates
    /// every m ≠ 0 mode below the alias limit and Gauss–Legendre in cos θ is
    /// exact on the remaining Legendre polynomials of degree < `2·n_cos`.
    pub fn product(n_cos: usize, n_phi: usize) -> Self {
        assert!(n_cos >= 1 && n_phi >= 1, "quadrature orders must be ≥ 1");
        let (cs, cw) = gauss_legendre(n_cos);
        let dphi = 2.0 * PI / n_phi as f64;
        let mut nodes = Vec::with_capacity(n_cos * n_phi);
        let mut weights = Vec::with_capacity(n_cos * n_phi);
        for (c, wc) in cs.iter().zip(&cw) {
            let s = (1.0 - c * c).max(0.0).sqrt();
            for j in 0..n_phi {
                // midpoint offsets keep nodes off the coordinate planes
                let phi = dphi * (j as f64 + 0.5);
                nodes.push([s * phi.cos(), s * phi.sin(), *c]);
                weights.push(wc * dphi);
            }
        }
        Self { nodes, weights, n_quad: n_cos }
    }

    /// Panel rule for data with ridge lines on the two vertical coordinate
    /// planes through the sphere center (x = 0 and y = 0 in sphere-local
    /// coordinates): per-octant Gauss–Legendre in the polar angle θ on
    /// [0, π/2] and [π/2, π] × per-quadrant Gauss–Legendre in the azimuth,
    /// with weight wθ·wφ·sin θ.
    ///
    /// Piecewise-smooth integrands whose kinks lie exactly on those planes
    /// are smooth inside every panel, so the composite rule converges
    /// spectrally where the plain product rule would be limited by the kink.
    /// This is the right rule for sliding-average (bilinear) initial data
    /// evaluated at an interpolation-patch corner.
    pub fn quadrant_panels(n_theta: usize, n_phi_per_quadrant: usize) -> Self {
        assert!(
            n_theta >= 1 && n_phi_per_quadrant >= 1,
            "quadrature orders must be ≥ 1"
        );
        let (tn, tw) = gauss_legendre(n_theta);
        let (pn, pw) = gauss_legendre(n_phi_per_quadrant);
        let mut nodes = Vec::with_capacity(8 * n_theta * n_phi_per_quadrant);
        let mut weights = Vec::with_capacity(8 * n_theta * n_phi_per_quadrant);
        let half = PI / 2.0;
        for band in 0..2 {
            let t0 = band as f64 * half;
            for (tt, wt) in tn.iter().zip(&tw) {
                let theta = t0 + half * 0.5 * (tt + 1.0);
                let (st, ct) = theta.sin_cos();
                let jac_t = half * 0.5 * wt;
                for quadrant in 0..4 {
                    let p0 = quadrant as f64 * half;
                    for (pp, wp) in pn.iter().zip(&pw) {
                        let phi = p0 + half * 0.5 * (pp + 1.0);
                        let jac_p = half * 0.5 * wp;
                        nodes.push([st * phi.cos(), st * phi.sin(), ct]);
                        weights.push(jac_t * jac_p * st);
                    }
                }
            }
        }
        Self { nodes, weights, n_quad: n_theta }
    }
}

impl Default for SphereQuadrature {
    /// `product(24, 48)`: plenty for the smooth-data tolerances used here.
    fn default() -> Self {
        Self::product(24, 48)
    }
}

/// Mean of `f` over the sphere of radius `r` around `x`:
/// `(1/4π) ∑ w·f(x + r·node)`. At `r = 0` returns `f(x)` exactly.
pub fn spherical_mean<T: QuadratureValue>(
    f: impl Fn([f64; 3]) -> T,
    x: [f64; 3],
    r: f64,
    quad: &SphereQuadrature,
) -> T {
    if r == 0.0 {
        return f(x);
    }
    let mut acc = T::zero();
    for (node, w) in quad.nodes.iter().zip(&quad.weights) {
        let xi = [x[0] + r * node[0], x[1] + r * node[1], x[2] + r * node[2]];
        acc = acc.add_scaled(*w, f(xi));
    }
    acc.scale(1.0 / (4.0 * PI))
}
