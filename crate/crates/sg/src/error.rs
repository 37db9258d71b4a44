use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SgError {
    #[error("loop at vertex {0} (graphs are simple)")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {0} out of range (n = {1})")]
    VertexOutOfRange(usize, usize),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("bad graph6 encoding: {0}")]
    Graph6(String),
    #[error("sign string has {got} signs but the graph has {expected} edges")]
    SignCountMismatch { got: usize, expected: usize },
    #[error("{0}")]
    Invalid(String),
}
