use thiserror::Error;

/// Errors raised by the spectral-region toolkit.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("argument of zero is undefined")]
    ZeroArgument,
    #[error("non-finite input: {0}")]
    NonFinite(&'static str),
    #[error("invalid tolerance: {0}")]
    InvalidTolerance(&'static str),
    #[error("leading coefficient of the quartic is zero")]
    DegenerateLeadingCoefficient,
    #[error("root finder did not converge after {0} iterations")]
    NoConvergence(usize),
    #[error("alpha[{index}] = {value} is outside [0, 1)")]
    ParameterOutOfRange { index: usize, value: f64 },
    #[error("spectrum computation failed: {0}")]
    SpectrumFailure(String),
    #[error("point lies in the lower half-plane; conjugate it first")]
    LowerHalfPlane,
    #[error("a nonreal point is required")]
    NonrealRequired,
    #[error("feasible set is empty: {0}")]
    FeasibilityViolation(String),
    #[error("angle or parameter {value} is outside the admissible range [{lo}, {hi})")]
    ArgumentOutOfRange { value: f64, lo: f64, hi: f64 },
    #[error("point is not in the feasible set: {0}")]
    InfeasiblePoint(String),
    #[error("point is not realizable: {0}")]
    NotRealizable(String),
    #[error("point is not on the left boundary curve (|Im alpha| = {0:e})")]
    NotOnCurve(f64),
    #[error("boundary parameter alpha = {0} is outside [0, 1)")]
    AlphaOutOfRange(f64),
    #[error("point is not strictly interior: {0}")]
    NotInterior(String),
    #[error("bisection bracket does not change sign: {0}")]
    BracketFailure(String),
    #[error("shrink factor {0} is outside (0, 1]")]
    ShrinkOutOfRange(f64),
    #[error("point lies outside the spectral region")]
    OutsideRegion,
    #[error("realization residual {residual:e} exceeds tolerance {limit:e}")]
    ResidualTooLarge { residual: f64, limit: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
