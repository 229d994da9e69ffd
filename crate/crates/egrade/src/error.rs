use thiserror::Error;

/// Errors reported by the grading kernel.
///
/// Dimension mismatches between vectors that are required to live in the same
/// ambient space are treated as programmer errors and panic instead; the
/// variants here are conditions a caller can meaningfully hit with valid code
/// but unsuitable mathematical input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("ambient dimension {0} exceeds the supported limit {1}")]
    AmbientTooLarge(usize, usize),

    #[error("quadratic form is not regular: {0}")]
    NotRegular(String),

    #[error("subspace is not totally isotropic")]
    NotTotallyIsotropic,

    #[error("vector is not nonisotropic for this form")]
    NotNonisotropic,

    #[error("partial isometry is invalid: {0}")]
    InvalidPartialIsometry(String),

    #[error("subspace meets a root class, so the grading would not be special")]
    NotSpecial,

    #[error("coarsening is invalid: {0}")]
    InvalidCoarsening(String),

    #[error("map is not invertible")]
    NotInvertible,

    #[error("gradings live over different target groups ({0} vs {1})")]
    TargetMismatch(usize, usize),

    #[error("Weyl group of this grading is too large to enumerate")]
    NotEnumerable,

    #[error("flag is not a strictly increasing chain of subspaces of the group")]
    InvalidFlag,

    #[error("document is malformed: {0}")]
    Document(String),
}

pub type Result<T> = std::result::Result<T, Error>;
