use thiserror::Error;

use crate::complex::Violation;

#[derive(Debug, Error)]
pub enum CoreError {
    #[error("face index {index} out of range for a {dim}-simplex")]
    FaceIndex { index: usize, dim: usize },
    #[error("malformed complex: {0}")]
    Malformed(String),
    #[error("duplicate cell name `{0}`")]
    DuplicateName(String),
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
    #[error("not a simplicial map: {0}")]
    NotAMap(String),
    #[error("not a monomorphism: {0}")]
    NotMono(String),
    #[error("`{0}` is not a vertex")]
    NotAVertex(String),
    #[error("simplicial identities fail: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Identities(Vec<Violation>),
    #[error("maps are not composable")]
    NotComposable,
    #[error("search budget of {0} nodes exceeded")]
    Budget(u64),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("precondition failed: {0}")]
    Precondition(String),
}
