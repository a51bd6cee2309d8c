//! Discrete bracket operators on 3×3 stencil patches.
//!
//! The finite-difference combinations used throughout the schemes are
//! written in a bracket shorthand.  In one dimension,
//!
//! ```text
//!   [q]_{i+1/2}  = q_{i+1} − q_i            (half difference)
//!   {q}_{i+1/2}  = q_{i+1} + q_i            (half sum)
//!   [q]_{i±1}    = q_{i+1} − q_{i−1}        (wide difference)
//!   [[q]]_{i±1/2} = q_{i+1} − 2q_i + q_{i−1} (second difference)
//!   {{q}}_{i±1/2} = q_{i+1} + 2q_i + q_{i−1} (second sum)
//! ```
//!
//! and the 2D cross combinations nest one bracket per direction, e.g.
//! `[[q]_{i±1}]_{j±1}` or `[[ [[q]]_{i±1/2} ]]_{j±1/2}`.  All of them are
//! evaluated on a 3×3 patch of cell values centred on `(i, j)`.

/// A 3×3 patch of values of one scalar field centred on a cell.
///
/// `vals[a][b]` holds the value at offset `(di, dj) = (a−1, b−1)` from the
/// center, so `vals[1][1]` is the center value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Neighborhood3x3 {
    /// Patch values indexed `[x-offset + 1][y-offset + 1]`.
    pub vals: [[f64; 3]; 3],
}

impl Neighborhood3x3 {
    /// Builds a patch from a closure over offsets `di, dj ∈ {−1, 0, 1}`.
    pub fn from_fn(mut f: impl FnMut(i32, i32) -> f64) -> Self {
        let mut vals = [[0.0; 3]; 3];
        for (a, row) in vals.iter_mut().enumerate() {
            for (b, slot) in row.iter_mut().enumerate() {
                *slot = f(a as i32 - 1, b as i32 - 1);
            }
        }
        Self { vals }
    }

    /// Value at offset `(di, dj)` from the center, each in `{−1, 0, 1}`.
    #[inline]
    pub fn q(&self, di: i32, dj: i32) -> f64 {
        self.vals[(di + 1) as usize][(dj + 1) as usize]
    }
}

/// Every 1D and 2D bracket combination of a 3×3 patch.
///
/// x-combinations are taken along the center row (j-offset 0),
/// y-combinations along the center column (i-offset 0); the cross
/// combinations use the full patch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BracketValues {
    /// `[q]_{i+1/2,j}`
    pub diff_half_x: f64,
    /// `[q]_{i−1/2,j}`
    pub diff_half_x_minus: f64,
    /// `{q}_{i+1/2,j}`
    pub sum_half_x: f64,
    /// `{q}_{i−1/2,j}`
    pub sum_half_x_minus: f64,
    /// `[q]_{i±1,j}`
    pub diff_wide_x: f64,
    /// `[[q]]_{i±1/2,j}`
    pub second_diff_x: f64,
    /// `{{q}}_{i±1/2,j}`
    pub second_sum_x: f64,
    /// `[q]_{i,j+1/2}`
    pub diff_half_y: f64,
    /// `[q]_{i,j−1/2}`
    pub diff_half_y_minus: f64,
    /// `{q}_{i,j+1/2}`
    pub sum_half_y: f64,
    /// `{q}_{i,j−1/2}`
    pub sum_half_y_minus: f64,
    /// `[q]_{i,j±1}`
    pub diff_wide_y: f64,
    /// `[[q]]_{i,j±1/2}`
    pub second_diff_y: f64,
    /// `{{q}}_{i,j±1/2}`
    pub second_sum_y: f64,
    /// `[[q]_{i±1}]_{j±1}` (wide difference in both directions)
    pub diff_wide_xy: f64,
    /// `[[ [[q]]_{i±1/2} ]]_{j±1/2}` (second difference in both directions)
    pub second_diff_xy: f64,
    /// `[[ [q]_{i±1} ]]_{j±1/2}` (wide in x, second in y)
    pub wide_x_second_y: f64,
    /// `[[ [[q]]_{i±1/2} ]_{j±1}` (second in x, wide in y)
    pub second_x_wide_y: f64,
}

/// Evaluates every bracket combination of the patch.
pub fn bracket_ops(n: Neighborhood3x3) -> BracketValues {
    let q = |di: i32, dj: i32| n.q(di, dj);

    // 1D second/wide differences per column (for the cross combinations)
    let second_x = |dj: i32| q(1, dj) - 2.0 * q(0, dj) + q(-1, dj);
    let wide_x = |dj: i32| q(1, dj) - q(-1, dj);

    BracketValues {
        diff_half_x: q(1, 0) - q(0, 0),
        diff_half_x_minus: q(0, 0) - q(-1, 0),
        sum_half_x: q(1, 0) + q(0, 0),
        sum_half_x_minus: q(0, 0) + q(-1, 0),
        diff_wide_x: wide_x(0),
        second_diff_x: second_x(0),
        second_sum_x: q(1, 0) + 2.0 * q(0, 0) + q(-1, 0),
        diff_half_y: q(0, 1) - q(0, 0),
        diff_half_y_minus: q(0, 0) - q(0, -1),
        sum_half_y: q(0, 1) + q(0, 0),
        sum_half_y_minus: q(0, 0) + q(0, -1),
        diff_wide_y: q(0, 1) - q(0, -1),
        second_diff_y: q(0, 1) - 2.0 * q(0, 0) + q(0, -1),
        second_sum_y: q(0, 1) + 2.0 * q(0, 0) + q(0, -1),
        diff_wide_xy: wide_x(1) - wide_x(-1),
        second_diff_xy: second_x(1) - 2.0 * second_x(0) + second_x(-1),
        wide_x_second_y: wide_x(1) - 2.0 * wide_x(0) + wide_x(-1),
        second_x_wide_y: second_x(1) - second_x(-1),
    }
}
