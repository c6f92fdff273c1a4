use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("point is not in the open ball: |z| = {norm}")]
    OutsideBall { norm: f64 },
    #[error("boundary point is off the unit sphere: |b| = {norm}")]
    OffSphere { norm: f64 },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not in SU(n,1): {0}")]
    NotIsometry(String),
    #[error("projective action is degenerate: denominator {0:e}")]
    Degenerate(f64),
    #[error("tangent vector has norm {norm}, expected 1")]
    NotUnit { norm: f64 },
    #[error("invalid barycentric coordinates: {0}")]
    InvalidBarycentric(String),
    #[error("form of degree {form} cannot be integrated over a {simplex}-simplex")]
    DegreeMismatch { form: usize, simplex: usize },
    #[error("center did not converge after {iterations} iterations (step {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("element file: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, GeomError>;
