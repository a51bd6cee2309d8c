//! Change of variables between physical and symmetric pressure.
//!
//! The solver operates on the symmetric form of the acoustic system, in
//! which the pressure has been rescaled so that the flux matrices are
//! symmetric. For physical state `(u, v, p)` and parameters `c`, `ε`, the
//! symmetric pressure variable is `p / (c ε)`; velocities are unchanged.

use crate::config::AcousticConfig;
use crate::field::FieldSet;

/// Rescales a physical-variable field set into symmetric variables,
/// dividing the pressure component by `c·ε`.
///
/// Velocities pass through unchanged. Inverse of [`unsymmetrize`].
///
/// # Panics
/// Panics if `c·ε` is not a positive finite number. [`AcousticConfig::new`]
/// guarantees this cannot happen for an unmodified validated config.
pub fn symmetrize(mut fields: FieldSet, cfg: AcousticConfig) -> FieldSet {
    let scale = pressure_scale(cfg);
    for p in &mut fields.p {
        *p /= scale;
    }
    fields
}

/// Rescales symmetric variables back to physical ones, multiplying the
/// pressure component by `c·ε`. Inverse of [`symmetrize`].
///
/// # Panics
/// Panics if `c·ε` is not a positive finite number.
pub fn unsymmetrize(mut fields: FieldSet, cfg: AcousticConfig) -> FieldSet {
    let scale = pressure_scale(cfg);
    for p in &mut fields.p {
        *p *= scale;
    }
    fields
}

fn pressure_scale(cfg: AcousticConfig) -> f64 {
    let scale = cfg.c * cfg.epsilon;
    assert!(
        scale.is_finite() && scale > 0.0,
        "pressure rescaling requires positive finite c·ε, got {scale}"
    );
    scale
}
