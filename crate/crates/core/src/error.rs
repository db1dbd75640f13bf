use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("modulus {modulus} is not admissible: {reason}")]
    InadmissibleModulus { modulus: u64, reason: String },

    #[error("interpolated polynomial disagrees with held-out modulus {modulus}: expected {expected}, counted {counted}")]
    InterpolationMismatch {
        modulus: u64,
        expected: String,
        counted: String,
    },

    #[error("interpolation produced a non-integer coefficient {0}")]
    NonIntegerCoefficient(String),

    #[error("not a characteristic polynomial: {0}")]
    NotCharacteristic(String),

    #[error("size guard exceeded: {what} (limit {limit})")]
    Guard { what: String, limit: u64 },

    #[error("difference constraints are infeasible (invalid sketch)")]
    InfeasibleSystem,

    #[error("point lies on a hyperplane: {0}")]
    OnHyperplane(String),

    #[error("inconsistent arrangement graph")]
    InconsistentGraph,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid object: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
