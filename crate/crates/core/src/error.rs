use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NotPrime(u32),

    #[error("cannot combine elements of GF({left}) and GF({right})")]
    FieldMismatch { left: u32, right: u32 },

    #[error("no inverse: zero is not invertible")]
    NoInverse,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid AIR dimensions {rows}x{cols}: need 1 <= cols <= rows")]
    InvalidAirDimensions { rows: usize, cols: usize },

    #[error("invalid problem parameters K={k}, D={d}, U={u}: {reason}")]
    InvalidParams {
        k: usize,
        d: usize,
        u: usize,
        reason: &'static str,
    },

    #[error("receiver index {k} out of range for {count} receivers")]
    ReceiverOutOfRange { k: usize, count: usize },

    #[error("messages and code were built for different parameters or fields")]
    ParamsMismatch,

    #[error("receiver {receiver} is missing side-information message x{message}")]
    MissingSideInformation { receiver: usize, message: usize },

    #[error("receiver {receiver} was given x{message}, which is not in its side-information")]
    UnexpectedSideInformation { receiver: usize, message: usize },

    #[error("the {rows}x{cols} AIR matrix has dependent adjacent rows over GF({modulus})")]
    AirViolation {
        rows: usize,
        cols: usize,
        modulus: u32,
    },

    #[error("decoding system for position {position} is singular; the AIR property is violated")]
    SingularPlanSystem { position: usize },

    #[error(
        "receiver {receiver} cannot isolate component {component}: undecoded symbol x{message},{index} interferes"
    )]
    Interference {
        receiver: usize,
        component: usize,
        message: usize,
        index: usize,
    },

    #[error("code not decodable for receiver {receiver}")]
    NotDecodable { receiver: usize },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
