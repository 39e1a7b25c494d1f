use thiserror::Error;

use crate::path::Vertex;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathError {
    #[error("paths do not compose: left path ends at {left_target}, right path starts at {right_source}")]
    NotComposable { left_target: Vertex, right_source: Vertex },
    #[error("arrow `{arrow}` does not start where `{previous}` ends (position {position})")]
    Broken { position: usize, previous: String, arrow: String },
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("empty path expression")]
    Empty,
}

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("malformed algebra document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("quiver has no vertices")]
    NoVertices,
    #[error("vertex `{0}` declared twice")]
    DuplicateVertex(String),
    #[error("arrow `{0}` declared twice")]
    DuplicateArrow(String),
    #[error("arrow `{arrow}` refers to undeclared vertex `{vertex}`")]
    UndeclaredEndpoint { arrow: String, vertex: String },
    #[error("relation #{index}: {source}")]
    BadRelation {
        index: usize,
        #[source]
        source: PathError,
    },
    #[error("relation #{index} ({path}) has length {len}; relations must have length at least 2")]
    ShortRelation { index: usize, path: String, len: usize },
    #[error("arrow_degrees names unknown arrow `{0}`")]
    UnknownDegreeArrow(String),
    #[error("arrow `{arrow}` has negative degree {degree}")]
    NegativeDegree { arrow: String, degree: i64 },
    #[error("ideal is not admissible: the cycle {witness} is never killed by a relation")]
    NotAdmissible { witness: String },
}

/// Raised when a structural property that the theory guarantees fails on a computed
/// object. Seeing one means the implementation (not the input) is wrong.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("internal consistency failure: {0}")]
pub struct ConsistencyError(pub String);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StableError {
    #[error("the zero object has no {0}")]
    ZeroObject(&'static str),
    #[error("{0} is not a perfect path")]
    NotPerfect(String),
    #[error("{0} is zero or trivial")]
    ZeroOrTrivial(String),
    #[error("grading is not positive on cycle {cycle} (degree {degree})")]
    NonPositiveCycleDegree { cycle: String, degree: i64 },
    #[error("arrow `{0}` has degree 0; positivity of the grading cannot be verified")]
    ZeroDegreeArrow(String),
    #[error("empty shift window {lo}..={hi}")]
    EmptyWindow { lo: i64, hi: i64 },
}
