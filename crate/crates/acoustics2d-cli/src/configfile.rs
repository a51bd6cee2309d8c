//! Flat `key = value` config files with cosmetic `[section]` headers.
//!
//! The format is line-oriented: blank lines and `#`/`;` comments are
//! ignored, `[section]` lines only group keys visually, and every setting
//! is a unique flat `key = value` pair. The `experiment` key selects the
//! preset the remaining keys override, so a one-line file is a complete
//! run description.
//!
//! ```text
//! [run]
//! experiment = riemann_corner   # also: riemann_sign_xy, vortex, ...
//! scheme     = multidim         # or: split
//!
//! [grid]
//! nx = 101
//! ny = 101
//! ```

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use crate::experiment::{parse_boundary, parse_scheme, ExperimentConfig, ExperimentKind};
use crate::{Error, Result};

/// All keys the parser understands, in documentation order.
pub const KEYS: [&str; 21] = [
    "experiment",
    "scheme",
    "nx",
    "ny",
    "x0",
    "x1",
    "y0",
    "y1",
    "cfl",
    "epsilon",
    "c",
    "t_end",
    "boundary",
    "out",
    "vortex_radius",
    "mode_mx",
    "mode_my",
    "quad_polar",
    "quad_radial",
    "reference",
    "vtk",
];

fn strip_comment(line: &str) -> &str {
    match line.find(['#', ';']) {
        Some(pos) => &line[..pos],
        None => line,
    }
}

fn parse_as<T: std::str::FromStr>(key: &str, value: &str) -> Result<T>
where
    T::Err: std::fmt::Display,
{
    value
        .parse()
        .map_err(|e| Error::Config(format!("key '{key}': {e} (value {value:?})")))
}

fn parse_bool(key: &str, value: &str) -> Result<bool> {
    match value {
        "true" | "yes" | "on" | "1" => Ok(true),
        "false" | "no" | "off" | "0" => Ok(false),
        other => Err(Error::Config(format!(
            "key '{key}': expected a boolean (true/false), got {other:?}"
        ))),
    }
}

/// Apply one `key = value` setting to a config.
///
/// # Errors
/// [`Error::Config`] for unknown keys or unparseable values.
pub(crate) fn apply_key(cfg: &mut ExperimentConfig, key: &str, value: &str) -> Result<()> {
    match key {
        "experiment" => cfg.experiment = parse_as::<ExperimentKind>(key, value)?,
        "scheme" => cfg.scheme = parse_scheme(value).map_err(Error::Config)?,
        "nx" => cfg.nx = parse_as(key, value)?,
        "ny" => cfg.ny = parse_as(key, value)?,
        "x0" => cfg.x0 = parse_as(key, value)?,
        "x1" => cfg.x1 = parse_as(key, value)?,
        "y0" => cfg.y0 = parse_as(key, value)?,
        "y1" => cfg.y1 = parse_as(key, value)?,
        "cfl" => cfg.cfl = parse_as(key, value)?,
        "epsilon" => cfg.epsilon = parse_as(key, value)?,
        "c" => cfg.c = parse_as(key, value)?,
        "t_end" => cfg.t_end = parse_as(key, value)?,
        "boundary" => cfg.boundary = parse_boundary(value).map_err(Error::Config)?,
        "out" => cfg.out = PathBuf::from(value),
        "vortex_radius" => cfg.vortex_radius = parse_as(key, value)?,
        "mode_mx" => cfg.mode_mx = parse_as(key, value)?,
        "mode_my" => cfg.mode_my = parse_as(key, value)?,
        "quad_polar" => cfg.quad_polar = parse_as(key, value)?,
        "quad_radial" => cfg.quad_radial = parse_as(key, value)?,
        "reference" => cfg.reference = parse_bool(key, value)?,
        "vtk" => cfg.vtk = parse_bool(key, value)?,
        other => {
            return Err(Error::Config(format!(
                "unknown key '{other}' (known keys: {})",
                KEYS.join(", ")
            )))
        }
    }
    Ok(())
}

/// Parse a config-file text into an [`ExperimentConfig`].
///
/// The `experiment` key is required; it selects the preset every other key
/// overrides. Keys may appear at most once. The result is validated.
///
/// # Errors
/// [`Error::Config`] on syntax errors, unknown or duplicate keys,
/// unparseable values, a missing `experiment` key, or an invalid final
/// configuration.
pub fn parse_config(text: &str) -> Result<ExperimentConfig> {
    let mut pairs: Vec<(String, String)> = Vec::new();
    let mut seen = BTreeSet::new();
    for (n, raw) in text.lines().enumerate() {
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        if line.starts_with('[') {
            if !line.ends_with(']') {
                return Err(Error::Config(format!(
                    "line {}: unterminated section header {line:?}",
                    n + 1
                )));
            }
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(Error::Config(format!(
                "line {}: expected 'key = value', got {line:?}",
                n + 1
            )));
        };
        let key = key.trim().to_string();
        let value = value.trim().to_string();
        if key.is_empty() || value.is_empty() {
            return Err(Error::Config(format!(
                "line {}: empty key or value in {line:?}",
                n + 1
            )));
        }
        if !seen.insert(key.clone()) {
            return Err(Error::Config(format!(
                "line {}: duplicate key '{key}'",
                n + 1
            )));
        }
        pairs.push((key, value));
    }

    let Some(kind) = pairs
        .iter()
        .find(|(k, _)| k == "experiment")
        .map(|(_, v)| v.clone())
    else {
        return Err(Error::Config("missing required key 'experiment'".into()));
    };
    let mut cfg = ExperimentConfig::preset(kind.parse().map_err(Error::Config)?);
    for (key, value) in &pairs {
        if key != "experiment" {
            apply_key(&mut cfg, key, value)?;
        }
    }
    cfg.validate()?;
    Ok(cfg)
}

/// Read and parse a config file.
///
/// # Errors
/// [`Error::Io`] when the file cannot be read, otherwise as
/// [`parse_config`].
pub fn load_config(path: &Path) -> Result<ExperimentConfig> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_config(&text)
}
