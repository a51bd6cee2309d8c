//! Deterministic text artifacts: CSV field dumps, profiles, energy
//! histories, and a legacy structured-points dump.
//!
//! All numbers are written as 17-significant-digit scientific decimals,
//! which reproduces every binary double exactly on read-back, so repeated
//! runs of the same configuration produce byte-identical files.

use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;

use acoustics2d::{FieldSet, Grid2D};

use crate::profile::RadialProfile;
use crate::{Error, Result};

/// Format a double with 17 significant digits (1 leading + 16 fractional),
/// enough to round-trip any finite value exactly.
pub(crate) fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

fn create(path: &Path) -> Result<BufWriter<fs::File>> {
    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
        }
    }
    Ok(BufWriter::new(
        fs::File::create(path).map_err(|e| Error::io(path, e))?,
    ))
}

/// Write the fields as CSV with header `x,y,u,v,p`: one row per cell in
/// row-major order (y varies slowest), coordinates at cell centers.
///
/// # Errors
/// [`Error::Io`] on filesystem failures, [`Error::Core`] when the fields
/// do not match the grid.
pub fn write_fields_csv(path: &Path, fields: &FieldSet, grid: &Grid2D) -> Result<()> {
    check_shape(fields, grid)?;
    let mut w = create(path)?;
    let io = |e| Error::io(path, e);
    writeln!(w, "x,y,u,v,p").map_err(io)?;
    for j in 0..grid.ny {
        for i in 0..grid.nx {
            let (x, y) = grid.center(i, j);
            let k = grid.idx(i, j);
            writeln!(
                w,
                "{},{},{},{},{}",
                fmt17(x),
                fmt17(y),
                fmt17(fields.u[k]),
                fmt17(fields.v[k]),
                fmt17(fields.p[k])
            )
            .map_err(io)?;
        }
    }
    w.flush().map_err(io)
}

fn check_shape(fields: &FieldSet, grid: &Grid2D) -> Result<()> {
    if fields.nx != grid.nx || fields.ny != grid.ny {
        return Err(Error::Core(acoustics2d::Error::ShapeMismatch(format!(
            "fields are {}x{} but the grid is {}x{}",
            fields.nx, fields.ny, grid.nx, grid.ny
        ))));
    }
    Ok(())
}

/// Read back a file written by [`write_fields_csv`] as `[x, y, u, v, p]`
/// rows in file order.
///
/// # Errors
/// [`Error::Io`] on filesystem failures, [`Error::Config`] on a malformed
/// header or row.
pub fn read_fields_csv(path: &Path) -> Result<Vec<[f64; 5]>> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut lines = text.lines();
    match lines.next() {
        Some("x,y,u,v,p") => {}
        other => {
            return Err(Error::Config(format!(
                "expected header 'x,y,u,v,p', got {other:?}"
            )))
        }
    }
    let mut rows = Vec::new();
    for (n, line) in lines.enumerate() {
        if line.is_empty() {
            continue;
        }
        let mut row = [0.0; 5];
        let mut parts = line.split(',');
        for slot in &mut row {
            let field = parts
                .next()
                .ok_or_else(|| Error::Config(format!("row {}: too few columns", n + 2)))?;
            *slot = field
                .parse()
                .map_err(|e| Error::Config(format!("row {}: {e}: {field:?}", n + 2)))?;
        }
        if parts.next().is_some() {
            return Err(Error::Config(format!("row {}: too many columns", n + 2)));
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Write an axis profile as CSV: `r,v,exact` when `with_exact` (entries
/// without a reference value leave the column empty), else `r,v`.
///
/// # Errors
/// [`Error::Io`] on filesystem failures.
pub fn write_profile_csv(path: &Path, profile: &RadialProfile, with_exact: bool) -> Result<()> {
    let mut w = create(path)?;
    let io = |e| Error::io(path, e);
    if with_exact {
        writeln!(w, "r,v,exact").map_err(io)?;
        for s in &profile.samples {
            let exact = s.exact.map(fmt17).unwrap_or_default();
            writeln!(w, "{},{},{exact}", fmt17(s.r), fmt17(s.value)).map_err(io)?;
        }
    } else {
        writeln!(w, "r,v").map_err(io)?;
        for s in &profile.samples {
            writeln!(w, "{},{}", fmt17(s.r), fmt17(s.value)).map_err(io)?;
        }
    }
    w.flush().map_err(io)
}

/// Write a kinetic-energy history as CSV with header
/// `step,t,kinetic_energy`.
///
/// # Errors
/// [`Error::Io`] on filesystem failures.
pub fn write_energy_csv(path: &Path, history: &[(usize, f64, f64)]) -> Result<()> {
    let mut w = create(path)?;
    let io = |e| Error::io(path, e);
    writeln!(w, "step,t,kinetic_energy").map_err(io)?;
    for &(step, t, ke) in history {
        writeln!(w, "{step},{},{}", fmt17(t), fmt17(ke)).map_err(io)?;
    }
    w.flush().map_err(io)
}

/// Write the fields in the legacy structured-points text format, with one
/// point per cell center: pressure as a scalar array and velocity as a
/// vector array.
///
/// # Errors
/// [`Error::Io`] on filesystem failures, [`Error::Core`] when the fields
/// do not match the grid.
pub fn write_vtk(path: &Path, fields: &FieldSet, grid: &Grid2D) -> Result<()> {
    check_shape(fields, grid)?;
    let mut w = create(path)?;
    let io = |e| Error::io(path, e);
    let (cx0, cy0) = grid.center(0, 0);
    writeln!(w, "# vtk DataFile Version 3.0").map_err(io)?;
    writeln!(w, "acoustic fields at cell centers").map_err(io)?;
    writeln!(w, "ASCII").map_err(io)?;
    writeln!(w, "DATASET STRUCTURED_POINTS").map_err(io)?;
    writeln!(w, "DIMENSIONS {} {} 1", grid.nx, grid.ny).map_err(io)?;
    writeln!(w, "ORIGIN {} {} 0", fmt17(cx0), fmt17(cy0)).map_err(io)?;
    writeln!(w, "SPACING {} {} 1", fmt17(grid.dx), fmt17(grid.dy)).map_err(io)?;
    writeln!(w, "POINT_DATA {}", grid.n_cells()).map_err(io)?;
    writeln!(w, "SCALARS pressure double 1").map_err(io)?;
    writeln!(w, "LOOKUP_TABLE default").map_err(io)?;
    for j in 0..grid.ny {
        for i in 0..grid.nx {
            writeln!(w, "{}", fmt17(fields.p[grid.idx(i, j)])).map_err(io)?;
        }
    }
    writeln!(w, "VECTORS velocity double").map_err(io)?;
    for j in 0..grid.ny {
        for i in 0..grid.nx {
            let k = grid.idx(i, j);
            writeln!(w, "{} {} 0", fmt17(fields.u[k]), fmt17(fields.v[k])).map_err(io)?;
        }
    }
    w.flush().map_err(io)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profile::ProfileSample;

    /// A grid below the solver's 3x3 stencil minimum, built directly: the
    /// writers only need coordinates, not a steppable domain.
    fn tiny_grid() -> Grid2D {
        Grid2D {
            nx: 2,
            ny: 2,
            x0: 0.0,
            y0: 0.0,
            dx: 0.5,
            dy: 0.25,
        }
    }

    fn tiny_fields() -> FieldSet {
        FieldSet {
            nx: 2,
            ny: 2,
            u: vec![1.0, 2.0, 3.0, 4.0],
            v: vec![-1.0, -0.5, 0.5, 1.0],
            p: vec![0.125, 0.25, 0.375, 0.5],
        }
    }

    #[test]
    fn test_fields_csv_has_header_and_one_row_per_cell() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("fields.csv");
        write_fields_csv(&path, &tiny_fields(), &tiny_grid()).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 5, "header plus four data rows");
        assert_eq!(lines[0], "x,y,u,v,p");
        // Row-major: the second row is cell (1, 0) at center (0.75, 0.125).
        let row: Vec<f64> = lines[2].split(',').map(|s| s.parse().unwrap()).collect();
        assert_eq!(row, vec![0.75, 0.125, 2.0, -0.5, 0.25]);
    }

    #[test]
    fn test_fields_csv_round_trips_exactly() {
        let grid = Grid2D::from_extents(7, 5, -0.3, 1.1, 0.2, 0.9).unwrap();
        // Awkward values: negative zero, subnormal-ish, many digits.
        let fields = FieldSet::sample(&grid, |x, y| {
            ((x * y).sin() * 1e-7, -0.0_f64.copysign(x), x / 3.0 + y / 7.0)
        });
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("fields.csv");
        write_fields_csv(&path, &fields, &grid).unwrap();
        let rows = read_fields_csv(&path).unwrap();
        assert_eq!(rows.len(), grid.n_cells());
        for j in 0..grid.ny {
            for i in 0..grid.nx {
                let row = rows[j * grid.nx + i];
                let (x, y) = grid.center(i, j);
                let k = grid.idx(i, j);
                assert!((row[0] - x).abs() <= 1e-15 && row[0] == x);
                assert!(row[1] == y);
                assert!(row[2] == fields.u[k]);
                assert!(row[3] == fields.v[k]);
                assert!(row[4] == fields.p[k]);
            }
        }
    }

    #[test]
    fn test_fields_csv_rejects_mismatched_grid() {
        let grid = Grid2D::from_extents(4, 4, 0.0, 1.0, 0.0, 1.0).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("fields.csv");
        assert!(write_fields_csv(&path, &tiny_fields(), &grid).is_err());
    }

    #[test]
    fn test_read_rejects_malformed_input() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.csv");
        std::fs::write(&path, "a,b,c\n1,2,3,4,5\n").unwrap();
        assert!(read_fields_csv(&path).is_err(), "wrong header");
        std::fs::write(&path, "x,y,u,v,p\n1,2,3\n").unwrap();
        assert!(read_fields_csv(&path).is_err(), "short row");
        std::fs::write(&path, "x,y,u,v,p\n1,2,3,4,5,6\n").unwrap();
        assert!(read_fields_csv(&path).is_err(), "long row");
        std::fs::write(&path, "x,y,u,v,p\n1,2,three,4,5\n").unwrap();
        assert!(read_fields_csv(&path).is_err(), "non-numeric field");
    }

    #[test]
    fn test_profile_csv_with_and_without_reference() {
        let profile = RadialProfile {
            samples: vec![
                ProfileSample { r: 0.1, value: 0.5, exact: Some(0.45) },
                ProfileSample { r: 0.2, value: 0.3, exact: None },
            ],
        };
        let dir = tempfile::tempdir().unwrap();
        let with = dir.path().join("with.csv");
        let without = dir.path().join("without.csv");
        write_profile_csv(&with, &profile, true).unwrap();
        write_profile_csv(&without, &profile, false).unwrap();
        let with = std::fs::read_to_string(&with).unwrap();
        let without = std::fs::read_to_string(&without).unwrap();
        assert!(with.starts_with("r,v,exact\n"));
        assert!(with.lines().nth(2).unwrap().ends_with(','), "missing reference leaves the column empty");
        assert!(without.starts_with("r,v\n"));
        assert_eq!(without.lines().count(), 3);
    }

    #[test]
    fn test_vtk_layout() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("fields.vtk");
        write_vtk(&path, &tiny_fields(), &tiny_grid()).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "# vtk DataFile Version 3.0");
        assert_eq!(lines[3], "DATASET STRUCTURED_POINTS");
        assert_eq!(lines[4], "DIMENSIONS 2 2 1");
        assert_eq!(lines[7], "POINT_DATA 4");
        assert_eq!(lines[8], "SCALARS pressure double 1");
        // 10 header-ish lines + 4 scalars + VECTORS line + 4 vectors.
        assert_eq!(lines.len(), 10 + 4 + 1 + 4);
        let last: Vec<&str> = lines.last().unwrap().split(' ').collect();
        assert_eq!(last.len(), 3);
        assert_eq!(last[2], "0");
    }

    #[test]
    fn test_energy_csv_layout() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("energy.csv");
        write_energy_csv(&path, &[(0, 0.0, 1.0), (1, 0.5, 0.75)]).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert!(text.starts_with("step,t,kinetic_energy\n"));
        assert!(text.lines().nth(1).unwrap().starts_with("0,"));
        assert_eq!(text.lines().count(), 3);
    }
}
