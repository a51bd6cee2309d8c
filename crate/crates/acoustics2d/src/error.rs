//! Error type shared across the crate.

/// Errors produced by configuration validation, quadrature evaluators and
/// the time-stepping machinery.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A configuration value violates its invariant (non-positive speed,
    /// spacing, CFL number, negative end time, ...).
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// Grid construction with unusable cell counts or spacings.
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    /// Two field sets (or a field set and a grid) disagree in shape.
    #[error("field shape mismatch: {0}")]
    ShapeMismatch(String),

    /// A scheme step was asked to operate on fields that are not in
    /// symmetric variables; convert with `symmetrize` first.
    #[error("fields are not in symmetric variables: {0}")]
    NotSymmetric(String),

    /// Doubling the radial quadrature order moved the result by more than
    /// the caller-supplied tolerance.
    #[error("quadrature did not converge: result moved by {changed:.3e} > tolerance {tol:.3e} on refinement")]
    QuadratureNotConverged { changed: f64, tol: f64 },

    /// An argument lies outside the mathematical domain of the operation.
    #[error("argument out of domain: {0}")]
    OutOfDomain(String),

    /// Evaluation requested exactly at a singular point of the solution.
    #[error("singular evaluation point: {0}")]
    Singular(String),

    /// A least-squares fit has no usable slope (errors at rounding floor or
    /// too few resolutions).
    #[error("degenerate least-squares fit: {0}")]
    DegenerateFit(String),

    /// A run was stopped early by the caller's per-step observer.
    #[error("run aborted after step {step}: {reason}")]
    Aborted { step: usize, reason: String },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
