use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid minor index ({i}, {j}): need 1 <= i < j <= 4")]
    Index { i: usize, j: usize },

    #[error("invalid annulus: need 0 < a < b, got a={inner}, b={outer}")]
    InvalidAnnulus { inner: f64, outer: f64 },

    #[error("boundary matrix is not rank 2 (singular value ratio {ratio:e})")]
    RankDeficientBoundary { ratio: f64 },

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("invalid spectrum: {0}")]
    InvalidSpectrum(String),

    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),

    #[error("found only {found} of {requested} eigenvalues below lambda_max={lambda_max}")]
    NotEnoughRoots {
        requested: usize,
        found: usize,
        lambda_max: f64,
    },

    #[error("no sign change on [{lo}, {hi}]: f(lo)={f_lo:e}, f(hi)={f_hi:e}")]
    NoSignChange { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    #[error("all Plücker coordinates vanish")]
    DegeneratePlucker,

    #[error("projection onto the Plücker quadric is singular (1 - p^2 = {gap:e})")]
    SingularProjection { gap: f64 },

    #[error("coordinates are off the Plücker quadric (relative residual {relative:e})")]
    OffQuadric { relative: f64 },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("eigenvalues must be positive and strictly increasing, got {0:?}")]
    Ordering(Vec<f64>),

    #[error(
        "frequency matrix is rank deficient: singular values {singular_values:?}, \
         need sigma3 >= {rank_tol:e} * sigma1"
    )]
    RankDeficientSystem {
        singular_values: [f64; 3],
        rank_tol: f64,
    },
}
