use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("arc ({tail}, {head}) has an endpoint outside 0..{order}")]
    ArcOutOfRange { tail: usize, head: usize, order: usize },

    #[error("vertex {vertex} is outside 0..{order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("duplicate arc ({tail}, {head}) at position {position}")]
    DuplicateArc { tail: usize, head: usize, position: usize },

    #[error("expected {expected} values, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("precondition violated: {0}")]
    Contract(String),

    #[error("{what}: order {order} exceeds the limit of {limit}")]
    TooLarge { what: &'static str, order: usize, limit: usize },

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
}
