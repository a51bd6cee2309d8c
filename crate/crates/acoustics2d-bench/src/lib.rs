//! Shared fixtures for the benchmark suite.

use acoustics2d::{AcousticConfig, FieldSet, Grid2D};

/// A smooth, fully excited periodic state on the unit square: a few
/// incommensurate modes in every component so no kernel term is trivially
/// zero.
pub fn smooth_fields(grid: &Grid2D) -> FieldSet {
    use std::f64::consts::TAU;
    FieldSet::sample(grid, |x, y| {
        let a = (TAU * x).sin() * (2.0 * TAU * y).cos();
        let b = (3.0 * TAU * x).cos() * (TAU * y).sin();
        let c = (2.0 * TAU * (x + y)).sin();
        (0.7 * a + 0.1 * c, -0.4 * b + 0.2 * a, 0.9 * c - 0.3 * b)
    })
}

/// Unit-square periodic benchmark domain at a given resolution.
pub fn bench_domain(n: usize) -> (Grid2D, AcousticConfig) {
    let grid = Grid2D::from_extents(n, n, 0.0, 1.0, 0.0, 1.0).expect("valid benchmark grid");
    let cfg = AcousticConfig::new(1.0, 1.0, grid.dx, grid.dy, 0.9, true)
        .expect("valid benchmark config");
    (grid, cfg)
}
