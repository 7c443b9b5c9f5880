//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("grid too small for stencil width: need at least {required} points, got {actual}")]
    GridTooSmall { required: usize, actual: usize },

    #[error("fields live on different grids")]
    GridMismatch,

    #[error("field contains NaN or Inf samples")]
    NonFiniteField,

    #[error("derivative order must be in 1..=4, got {0}")]
    InvalidDerivativeOrder(usize),

    #[error("weight exponent must be positive and finite, got {0}")]
    InvalidWeight(f64),

    #[error("velocity {c} outside the admissible range |c| <= sqrt(2) - {margin}")]
    VelocityOutOfRange { c: f64, margin: f64 },

    #[error("input not orthogonal to the soliton direction: residual {residual:.3e} exceeds {tol:.3e}")]
    NotOrthogonal { residual: f64, tol: f64 },

    #[error("nonlinear solve did not converge after {iterations} iterations (residual {residual:.3e}); reduce dt")]
    NonlinearSolveDiverged { iterations: usize, residual: f64 },

    #[error("modulation decomposition diverged at t = {t} after {iterations} iterations (residual {residual:.3e})")]
    DecompositionDiverged {
        t: f64,
        iterations: usize,
        residual: f64,
    },

    #[error("shift {shift} exceeds the interpolation limit {max}")]
    ShiftTooLarge { shift: f64, max: f64 },

    #[error("need at least {needed} uniformly spaced frames, got {got}")]
    InsufficientFrames { needed: usize, got: usize },

    #[error("time series is not uniformly spaced near index {0}")]
    NonUniformSeries(usize),

    #[error("config error: {0}")]
    Config(String),

    #[error("malformed data file: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
