use std::io;

use thiserror::Error;

/// Errors raised by graph construction, invariant evaluation and enumeration.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph is not connected")]
    DisconnectedInput,
    #[error("vertices of a pair must be distinct (got {0} twice)")]
    SameVertex(usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("distance {ell} outside 1..={diameter}")]
    EllOutOfRange { ell: usize, diameter: usize },
    #[error("order {0} is too small")]
    OrderTooSmall(usize),
    #[error("order {order} exceeds the supported maximum {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("no closed form for tube with cycle length {0} (supported: 3, 4, 5)")]
    UnsupportedM(usize),
    #[error("invalid edge {0}-{1}")]
    InvalidEdge(usize, usize),
    #[error("malformed graph6 header")]
    MalformedHeader,
    #[error("graph6 body has {found} bytes, expected {expected}")]
    TruncatedBits { expected: usize, found: usize },
    #[error("byte 0x{0:02x} is not a printable graph6 character")]
    NonPrintableByte(u8),
    #[error("line {line}: {error}")]
    AtLine { line: usize, error: Box<Error> },
    #[error("stream yielded no graphs")]
    EmptyStream,
    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn bad_params(msg: impl Into<String>) -> Self {
        Error::BadParams(msg.into())
    }
}
