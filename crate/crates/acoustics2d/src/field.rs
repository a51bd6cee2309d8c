//! Cell-value storage for the three unknowns (u, v, p).

use crate::error::{Error, Result};
use crate::grid::Grid2D;

/// The three scalar fields of the acoustic system on an `nx × ny` grid:
/// velocity components `u`, `v` and pressure `p`, stored row-major with x
/// varying fastest (see [`Grid2D::idx`]).
#[derive(Debug, Clone, PartialEq)]
pub struct FieldSet {
    /// Cell count in x.
    pub nx: usize,
    /// Cell count in y.
    pub ny: usize,
    /// x-velocity values, length `nx·ny`.
    pub u: Vec<f64>,
    /// y-velocity values, length `nx·ny`.
    pub v: Vec<f64>,
    /// Pressure values, length `nx·ny`.
    pub p: Vec<f64>,
}

impl FieldSet {
    /// All-zero fields matching `grid`.
    pub fn zeros(grid: &Grid2D) -> Self {
        let n = grid.n_cells();
        Self { nx: grid.nx, ny: grid.ny, u: vec![0.0; n], v: vec![0.0; n], p: vec![0.0; n] }
    }

    /// Point-samples `(u, v, p) = f(x, y)` at every cell center.
    pub fn sample(grid: &Grid2D, f: impl Fn(f64, f64) -> (f64, f64, f64)) -> Self {
        let mut fields = Self::zeros(grid);
        for j in 0..grid.ny {
            for i in 0..grid.nx {
                let (x, y) = grid.center(i, j);
                let (u, v, p) = f(x, y);
                let k = grid.idx(i, j);
                fields.u[k] = u;
                fields.v[k] = v;
                fields.p[k] = p;
            }
        }
        fields
    }

    /// Row-major storage index of cell `(i, j)`.
    #[inline]
    pub fn idx(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.nx && j < self.ny);
        j * self.nx + i
    }

    /// Value triple at cell `(i, j)`.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> (f64, f64, f64) {
        let k = self.idx(i, j);
        (self.u[k], self.v[k], self.p[k])
    }

    /// Overwrites the value triple at cell `(i, j)`.
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, u: f64, v: f64, p: f64) {
        let k = self.idx(i, j);
        self.u[k] = u;
        self.v[k] = v;
        self.p[k] = p;
    }

    /// True when the shape matches `grid`.
    pub fn matches(&self, grid: &Grid2D) -> bool {
        self.nx == grid.nx && self.ny == grid.ny && self.u.len() == grid.n_cells()
    }

    /// True when every stored value is finite.
    pub fn all_finite(&self) -> bool {
        self.u.iter().chain(&self.v).chain(&self.p).all(|q| q.is_finite())
    }

    /// Sums (Σu, Σv, Σp) over all cells (multiply by the cell area for the
    /// conserved totals).
    pub fn sums(&self) -> [f64; 3] {
        [
            self.u.iter().sum::<f64>(),
            self.v.iter().sum::<f64>(),
            self.p.iter().sum::<f64>(),
        ]
    }

    /// In-place linear combination `self ← a·self + b·other`.
    ///
    /// # Errors
    /// Shape mismatch.
    pub fn axpy(&mut self, a: f64, b: f64, other: &FieldSet) -> Result<()> {
        if self.nx != other.nx || self.ny != other.ny {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.nx, self.ny, other.nx, other.ny
            )));
        }
        for (s, o) in self.u.iter_mut().zip(&other.u) {
            *s = a * *s + b * *o;
        }
        for (s, o) in self.v.iter_mut().zip(&other.v) {
            *s = a * *s + b * *o;
        }
        for (s, o) in self.p.iter_mut().zip(&other.p) {
            *s = a * *s + b * *o;
        }
        Ok(())
    }
}

/// Cell-averaged L1, L2 and pointwise L∞ norms of a field difference,
/// reported per component in the order (u, v, p).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldNorms {
    /// ‖a−b‖₁ = Σ|δ|·Δx·Δy per component.
    pub l1: [f64; 3],
    /// ‖a−b‖₂ = √(Σδ²·Δx·Δy) per component.
    pub l2: [f64; 3],
    /// max|δ| per component.
    pub linf: [f64; 3],
}

impl FieldNorms {
    /// Largest L∞ entry over the three components.
    pub fn max_linf(&self) -> f64 {
        self.linf.iter().fold(0.0_f64, |m, &x| m.max(x))
    }

    /// Root-sum-square of the three per-component L2 norms (an aggregate L2
    /// over all unknowns).
    pub fn l2_total(&self) -> f64 {
        self.l2.iter().map(|e| e * e).sum::<f64>().sqrt()
    }
}

/// Cell-averaged norms of the difference `a − b`.
///
/// # Errors
/// Shape mismatch between `a`, `b` and `grid`.
pub fn norms(a: &FieldSet, b: &FieldSet, grid: &Grid2D) -> Result<FieldNorms> {
    if !a.matches(grid) || !b.matches(grid) {
        return Err(Error::ShapeMismatch(format!(
            "fields {}x{} and {}x{} vs grid {}x{}",
            a.nx, a.ny, b.nx, b.ny, grid.nx, grid.ny
        )));
    }
    let area = grid.cell_area();
    let mut out = FieldNorms { l1: [0.0; 3], l2: [0.0; 3], linf: [0.0; 3] };
    for (c, (xa, xb)) in [(&a.u, &b.u), (&a.v, &b.v), (&a.p, &b.p)].iter().enumerate() {
        let mut l1 = 0.0;
        let mut l2 = 0.0;
        let mut linf = 0.0_f64;
        for (qa, qb) in xa.iter().zip(xb.iter()) {
            let d = (qa - qb).abs();
            l1 += d;
            l2 += d * d;
            linf = linf.max(d);
        }
        out.l1[c] = l1 * area;
        out.l2[c] = (l2 * area).sqrt();
        out.linf[c] = linf;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> Grid2D {
        Grid2D::new(4, 3, 0.0, 0.0, 0.5, 0.2).unwrap()
    }

    #[test]
    fn test_single_cell_difference_norms() {
        let g = grid();
        let a = FieldSet::zeros(&g);
        let mut b = FieldSet::zeros(&g);
        b.set(2, 1, 1.0, 0.0, 0.0); // u differs by 1 in one cell
        let n = norms(&a, &b, &g).unwrap();
        assert!((n.l1[0] - g.cell_area()).abs() < 1e-15);
        assert!((n.l2[0] - g.cell_area().sqrt()).abs() < 1e-15);
        assert!((n.linf[0] - 1.0).abs() < 1e-15);
        assert_eq!(n.l1[1], 0.0);
        assert_eq!(n.l1[2], 0.0);
    }

    #[test]
    fn test_norms_match_naive_double_loop() {
        let g = grid();
        let a = FieldSet::sample(&g, |x, y| (x * y, x - y, (3.0 * x).sin()));
        let b = FieldSet::sample(&g, |x, y| (y, x, x + y));
        let n = norms(&a, &b, &g).unwrap();
        let mut l1 = [0.0; 3];
        let mut l2 = [0.0; 3];
        let mut linf = [0.0_f64; 3];
        for j in 0..g.ny {
            for i in 0..g.nx {
                let (ua, va, pa) = a.get(i, j);
                let (ub, vb, pb) = b.get(i, j);
                for (c, d) in [(ua - ub).abs(), (va - vb).abs(), (pa - pb).abs()]
                    .into_iter()
                    .enumerate()
                {
                    l1[c] += d * g.cell_area();
                    l2[c] += d * d * g.cell_area();
                    linf[c] = linf[c].max(d);
                }
            }
        }
        for c in 0..3 {
            assert!((n.l1[c] - l1[c]).abs() < 1e-14);
            assert!((n.l2[c] - l2[c].sqrt()).abs() < 1e-14);
            assert!((n.linf[c] - linf[c]).abs() < 1e-14);
        }
    }

    #[test]
    fn test_sample_places_values_at_centers() {
        let g = grid();
        let f = FieldSet::sample(&g, |x, y| (x, y, x + y));
        let (x, y) = g.center(3, 2);
        let (u, v, p) = f.get(3, 2);
        assert_eq!(u, x);
        assert_eq!(v, y);
        assert_eq!(p, x + y);
    }

    #[test]
    fn test_axpy_shape_mismatch_rejected() {
        let g = grid();
        let other = FieldSet::zeros(&Grid2D::new(3, 3, 0.0, 0.0, 1.0, 1.0).unwrap());
        let mut a = FieldSet::zeros(&g);
        assert!(a.axpy(1.0, 1.0, &other).is_err());
    }
}
