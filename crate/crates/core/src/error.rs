use thiserror::Error;

/// Errors raised by the semicomp toolkit.
///
/// Mathematical failures that come with a witness (an axiom violation, a
/// non-orderable carrier) are usually reported through [`crate::CheckReport`]
/// or a dedicated outcome type; the variants here cover inputs that cannot be
/// processed at all and refusals of a precondition.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed semiring table: {0}")]
    Structure(String),

    #[error("element `{0}` is not in the carrier")]
    UnknownElement(String),

    #[error("semiring is not orderable: {a} + {x} + {y} = {a} but {a} + {x} != {a}")]
    NotOrderable { a: String, x: String, y: String },

    #[error("semiring is not zero-sum-free: {x} + {y} = 0")]
    NotZeroSumFree { x: String, y: String },

    #[error("not a file and not a gallery name: {0}")]
    UnknownName(String),

    #[error("operation needs an order but the semiring carries none")]
    MissingOrder,

    #[error("order is not compatible with the semiring: {0}")]
    IncompatibleOrder(String),

    #[error("exhaustive enumeration is limited to n <= {max}, got n = {n}")]
    TooLarge { n: usize, max: usize },

    #[error("precondition refused: {0}")]
    Precondition(String),

    /// Two independent routes disagreed. Never masked.
    #[error("internal consistency failure: {0}")]
    Inconsistency(String),

    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
