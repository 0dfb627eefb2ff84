use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed rational {input:?}: {hint}")]
    MalformedRational { input: String, hint: String },

    #[error("matrix of shape {rows}x{cols} cannot hold {len} entries")]
    Shape { rows: usize, cols: usize, len: usize },

    #[error("unknown group {0:?} (expected G1..G7)")]
    UnknownGroup(String),

    #[error("unknown distribution {0:?} (expected b1, b2 or b3)")]
    UnknownDistribution(String),

    #[error("unknown parameter {0:?} (expected alpha, beta, gamma, delta or eta)")]
    UnknownParameter(String),

    #[error("{group} requires parameter {param}")]
    MissingParameter { group: String, param: String },

    #[error("{group} does not take parameter {param}")]
    UnexpectedParameter { group: String, param: String },

    #[error("{group} constraint {constraint} violated ({values})")]
    ConstraintViolation {
        group: String,
        constraint: String,
        values: String,
    },

    #[error("structure constants are not antisymmetric at [e{i},e{j}] component e{k}")]
    Antisymmetry { i: usize, j: usize, k: usize },

    #[error("Jacobi identity fails for triples {triples:?}")]
    JacobiFailure { triples: Vec<(usize, usize, usize)> },

    #[error("cannot parse expression {input:?}: {message}")]
    Expression { input: String, message: String },

    #[error("bad sampling recipe {input:?}: {message}")]
    Recipe { input: String, message: String },

    #[error("no admissible sample for {region} within {draws} draws")]
    ExhaustedSampling { region: String, draws: usize },

    #[error("denominator of {expr} vanishes at {params}")]
    DenominatorVanished { expr: String, params: String },

    #[error("unknown case id {0:?}")]
    UnknownCase(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
