//! One-dimensional Gauss–Legendre rules and kink-tolerant composite
//! integration, shared by the sphere, radial, and jump-geometry quadratures.

/// A value type the quadrature helpers can accumulate: scalars and small
/// fixed-size vectors of floats.
pub trait QuadratureValue: Copy {
    /// Additive identity.
    fn zero() -> Self;
    /// `self + w·v`.
    fn add_scaled(self, w: f64, v: Self) -> Self;
    /// `s·self`.
    fn scale(self, s: f64) -> Self;
}

impl QuadratureValue for f64 {
    fn zero() -> Self {
        0.0
    }
    fn add_scaled(self, w: f64, v: Self) -> Self {
        self + w * v
    }
    fn scale(self, s: f64) -> Self {
        self * s
    }
}

macro_rules! impl_quadrature_value_for_array {
    ($($n:literal),*) => {$(
        impl QuadratureValue for [f64; $n] {
            fn zero() -> Self {
                [0.0; $n]
            }
            fn add_scaled(mut self, w: f64, v: Self) -> Self {
                for k in 0..$n {
                    self[k] += w * v[k];
                }
                self
            }
            fn scale(mut self, s: f64) -> Self {
                for k in 0..$n {
                    self[k] *= s;
                }
                self
            }
        }
    )*};
}

impl_quadrature_value_for_array!(2, 3, 4);

/// Nodes and weights of the `n`-point Gauss–Legendre rule on `[−1, 1]`,
/// nodes ascending. Exact for polynomials of degree ≤ 2n−1.
///
/// Computed by Newton iteration on the Legendre recurrence; accurate to
/// near machine precision for the orders used here (n ≲ 200).
pub(crate) fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1, "quadrature order must be at least 1");
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n {
        // Tricomi-style initial guess for the i-th root (descending order)
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Legendre P_n(x) and P_n'(x) by three-term recurrence
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        // store ascending
        nodes[n - 1 - i] = x;
        weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}

/// Integrates `f` over `[a, b]` with an `n`-point Gauss–Legendre rule.
pub(crate) fn integrate_gl<T: QuadratureValue>(
    f: impl Fn(f64) -> T,
    a: f64,
    b: f64,
    n: usize,
) -> T {
    let (nodes, weights) = gauss_legendre(n);
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut acc = T::zero();
    for (x, w) in nodes.iter().zip(&weights) {
        acc = acc.add_scaled(*w, f(mid + half * x));
    }
    acc.scale(half)
}

/// Integrates `f` over `[a, b]` assuming `f` may behave like a half-integer
/// power (√-type kink) at either endpoint while being smooth inside.
///
/// The interval is split at its midpoint and each half is mapped by the
/// substitution `x = endpoint ∓ τ²`, which turns endpoint √-singularities of
/// the integrand (or of its derivatives) into smooth functions of `τ`; an
/// `n`-point Gauss–Legendre rule in τ then converges spectrally. Smooth
/// endpoints lose nothing: the composed integrand is still smooth.
pub(crate) fn integrate_endpoint_kinked<T: QuadratureValue>(
    f: impl Fn(f64) -> T,
    a: f64,
    b: f64,
    n: usize,
) -> T {
    if b <= a {
        return T::zero();
    }
    let mid = 0.5 * (a + b);
    // left half: x = a + τ², dx = 2τ dτ, τ ∈ [0, √(mid−a)]
    let ta = (mid - a).sqrt();
    let left = integrate_gl(|t| f(a + t * t).scale(2.0 * t), 0.0, ta, n);
    // right half: x = b − τ², dx = −2τ dτ, τ ∈ [0, √(b−mid)]
    let tb = (b - mid).sqrt();
    let right = integrate_gl(|t| f(b - t * t).scale(2.0 * t), 0.0, tb, n);
    left.add_scaled(1.0, right)
}

/// Integrates `f` over `[a, b]` split at the given interior breakpoints
/// (values outside `(a, b)` are ignored), treating every piece endpoint as a
/// potential √-kink via [`integrate_endpoint_kinked`].
pub(crate) fn integrate_piecewise_kinked<T: QuadratureValue>(
    f: impl Fn(f64) -> T,
    a: f64,
    b: f64,
    breakpoints: &[f64],
    n: usize,
) -> T {
    if b <= a {
        return T::zero();
    }
    let mut cuts: Vec<f64> = breakpoints
        .iter()
        .copied()
        .filter(|&c| c > a && c < b)
        .collect();
    cuts.sort_by(|p, q| p.partial_cmp(q).unwrap());
    cuts.dedup_by(|p, q| (*p - *q).abs() <= 1e-14 * (1.0 + q.abs()));
    let mut acc = T::zero();
    let mut lo = a;
    for c in cuts {
        acc = acc.add_scaled(1.0, integrate_endpoint_kinked(&f, lo, c, n));
        lo = c;
    }
    acc.add_scaled(1.0, integrate_endpoint_kinked(&f, lo, b, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn test_monomial_exactness_degree_2n_minus_1() {
        // ∫_{−1}^{1} x^k dx = 2/(k+1) for even k, 0 for odd k;
        // the 5-point rule must be exact through degree 9.
        let (nodes, weights) = gauss_legendre(5);
        for k in 0..=9usize {
            let got: f64 = nodes
                .iter()
                .zip(&weights)
                .map(|(x, w)| w * x.powi(k as i32))
                .sum();
            let want = if k % 2 == 0 { 2.0 / (k as f64 + 1.0) } else { 0.0 };
            assert!(
                (got - want).abs() < 1e-14,
                "degree {k}: got {got}, want {want}"
            );
        }
    }

    #[test]
    fn test_weights_positive_sum_two_nodes_symmetric() {
        for n in [1, 2, 3, 8, 33, 64] {
            let (nodes, weights) = gauss_legendre(n);
            assert!(weights.iter().all(|&w| w > 0.0));
            let sum: f64 = weights.iter().sum();
            assert!((sum - 2.0).abs() < 1e-13, "n={n}: Σw = {sum}");
            for i in 0..n {
                assert!(
                    (nodes[i] + nodes[n - 1 - i]).abs() < 1e-14,
                    "n={n}: nodes not symmetric"
                );
                if i > 0 {
                    assert!(nodes[i] > nodes[i - 1], "n={n}: nodes not ascending");
                }
            }
        }
        let (n1, w1) = gauss_legendre(1);
        assert_eq!(n1[0], 0.0);
        assert_eq!(w1[0], 2.0);
    }

    #[test]
    fn test_interval_mapping() {
        // ∫_2^5 (3x² − 1) dx = [x³ − x]_2^5 = 120 − 6 = 114
        let got = integrate_gl(|x| 3.0 * x * x - 1.0, 2.0, 5.0, 4);
        assert!((got - 114.0).abs() < 1e-12);
    }

    #[test]
    fn test_sqrt_kink_at_left_endpoint() {
        // ∫_0^1 √x dx = 2/3; plain GL converges slowly, the τ² substitution
        // makes it exact up to rounding.
        let got = integrate_endpoint_kinked(|x: f64| x.sqrt(), 0.0, 1.0, 16);
        assert!((got - 2.0 / 3.0).abs() < 1e-13, "got {got}");
    }

    #[test]
    fn test_sqrt_kink_at_right_endpoint() {
        // ∫_0^1 x·√(1−x) dx = 4/15
        let got = integrate_endpoint_kinked(|x: f64| x * (1.0 - x).sqrt(), 0.0, 1.0, 16);
        assert!((got - 4.0 / 15.0).abs() < 1e-13, "got {got}");
    }

    #[test]
    fn test_piecewise_with_interior_kink() {
        // f(x) = √|x − 0.3| on [0, 1]:
        // ∫ = (2/3)·(0.3)^{3/2} + (2/3)·(0.7)^{3/2}
        let f = |x: f64| (x - 0.3).abs().sqrt();
        let want = 2.0 / 3.0 * (0.3f64.powf(1.5) + 0.7f64.powf(1.5));
        let got = integrate_piecewise_kinked(f, 0.0, 1.0, &[0.3], 16);
        assert!((got - want).abs() < 1e-13, "got {got}, want {want}");
        // breakpoints outside the interval are ignored
        let got2 = integrate_piecewise_kinked(|x| x, 0.0, 1.0, &[-2.0, 5.0], 8);
        assert!((got2 - 0.5).abs() < 1e-13);
    }

    #[test]
    fn test_vector_valued_integration() {
        // componentwise: ∫_0^1 [x, x², √x, 1] dx = [1/2, 1/3, 2/3, 1]
        let got: [f64; 4] =
            integrate_endpoint_kinked(|x: f64| [x, x * x, x.sqrt(), 1.0], 0.0, 1.0, 16);
        let want = [0.5, 1.0 / 3.0, 2.0 / 3.0, 1.0];
        for k in 0..4 {
            assert!((got[k] - want[k]).abs() < 1e-13, "component {k}");
        }
    }

    #[test]
    fn test_empty_interval() {
        assert_eq!(integrate_endpoint_kinked(|x| x, 1.0, 1.0, 8), 0.0);
        assert_eq!(integrate_piecewise_kinked(|x| x, 2.0, 1.0, &[], 8), 0.0);
    }
}
