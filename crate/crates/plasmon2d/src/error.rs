//! Error type shared by every module of the crate.

use thiserror::Error;

/// Crate-wide error enum. Variants are named after the failure they signal so
/// that the CLI can report the bare name on a numerical failure.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A boundary radius became non-positive at some angle.
    #[error("NonPositiveRadius: radius {radius:.6e} at t = {t:.6}")]
    NonPositiveRadius { t: f64, radius: f64 },

    /// Argument outside the implemented domain of the cylinder-wave functions.
    #[error("DomainError: argument z = {re:.6e}{im:+.6e}i outside implemented domain")]
    DomainError { re: f64, im: f64 },

    /// mu_c == mu_m makes the spectral parameter undefined.
    #[error("DegenerateContrast: mu_c equals mu_m")]
    DegenerateContrast,

    /// lambda == -1/2 has no finite permeability preimage.
    #[error("DegenerateLambda: lambda = -1/2 is a pole of the inverse map")]
    DegenerateLambda,

    /// Root bracket does not change sign.
    #[error("NoBracket: Re(lambda(omega)) - target does not change sign on [{lo:.6e}, {hi:.6e}]")]
    NoBracket { lo: f64, hi: f64 },

    /// Dense eigensolver did not converge.
    #[error("EigSolverFailure: {0}")]
    EigSolverFailure(String),

    /// The discretized transmission system is numerically singular.
    #[error("SingularSystem: condition estimate {cond_estimate:.3e}")]
    SingularSystem { cond_estimate: f64 },

    /// Field evaluation requested at a point not strictly outside the inclusion.
    #[error("PointInsideInclusion: ({x:.6}, {y:.6}) is not strictly outside the boundary")]
    PointInsideInclusion { x: f64, y: f64 },

    /// Mie series tail failed its bound at the order cap.
    #[error("SeriesDivergence: tail bound {tail:.3e} not met at order {order}")]
    SeriesDivergence { order: usize, tail: f64 },

    /// Field evaluation on (or numerically on) the disk boundary.
    #[error("RadiusOnBoundary: |r - r0| = {dist:.3e}")]
    RadiusOnBoundary { dist: f64 },

    /// Finite-difference Richardson pair disagrees beyond the allowed factor.
    #[error("FDUnstable: Richardson disagreement {disagreement:.3e} exceeds {limit:.3e}")]
    FdUnstable { disagreement: f64, limit: f64 },

    /// Levenberg-Marquardt step rejected after exhausting backtracking.
    #[error("StepRejected: step still infeasible after {halvings} halvings")]
    StepRejected { halvings: u32 },

    /// Regularized normal equations are numerically singular.
    #[error("SingularNormalEq: G^T G + eta delta^2 I is numerically singular")]
    SingularNormalEq,

    /// Posterior precision matrix failed its Cholesky factorization.
    #[error("NotPositiveDefinite: posterior precision is not positive definite")]
    NotPositiveDefinite,

    /// Configuration file or override is invalid.
    #[error("config error: {0}")]
    Config(String),

    /// I/O failure while writing artifacts.
    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    /// Bare variant name, used by the CLI for exit-1 diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NonPositiveRadius { .. } => "NonPositiveRadius",
            Error::DomainError { .. } => "DomainError",
            Error::DegenerateContrast => "DegenerateContrast",
            Error::DegenerateLambda => "DegenerateLambda",
            Error::NoBracket { .. } => "NoBracket",
            Error::EigSolverFailure(_) => "EigSolverFailure",
            Error::SingularSystem { .. } => "SingularSystem",
            Error::PointInsideInclusion { .. } => "PointInsideInclusion",
            Error::SeriesDivergence { .. } => "SeriesDivergence",
            Error::RadiusOnBoundary { .. } => "RadiusOnBoundary",
            Error::FdUnstable { .. } => "FDUnstable",
            Error::StepRejected { .. } => "StepRejected",
            Error::SingularNormalEq => "SingularNormalEq",
            Error::NotPositiveDefinite => "NotPositiveDefinite",
            Error::Config(_) => "Config",
            Error::Io(_) => "Io",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
