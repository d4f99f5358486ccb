//! Error type shared by all modules of the crate.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Domain and construction failures.
///
/// All numerical routines are total on their stated domains; anything outside
/// is rejected eagerly at construction or call time rather than producing NaN.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("entropic index must be finite and nonnegative, got {0}")]
    InvalidIndex(f64),

    #[error("probability must lie in [0, 1], got {0}")]
    InvalidProbability(f64),

    #[error("angle must be finite, got {0}")]
    InvalidAngle(f64),

    #[error("{name} must lie in [{lo}, {hi}], got {value}")]
    OutOfDomain {
        name: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("operation is undefined at entropic index {0}")]
    UnsupportedIndex(f64),

    #[error("overlap must lie in [1/sqrt(2), 1], got {0}")]
    InvalidOverlap(f64),

    #[error("matrix is not unitary (defect {0:.3e})")]
    NotUnitary(f64),

    #[error("state is not normalized (squared norm {0})")]
    NotNormalized(f64),

    #[error("bound was computed for overlap {expected}, matrix has overlap {actual}")]
    OverlapMismatch { expected: f64, actual: f64 },

    #[error("sweep grid must be non-empty and strictly increasing")]
    InvalidGrid,

    #[error("transition index is undefined at c = 1")]
    TransitionUndefined,

    #[error("oracle grid too coarse: {axis} has {got} points, minimum is {min}")]
    GridTooCoarse {
        axis: &'static str,
        got: usize,
        min: usize,
    },
}
