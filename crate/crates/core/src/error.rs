use thiserror::Error;

use crate::graph::Vertex;

/// Every failure the library reports. Vertex ids are stored 0-based and
/// rendered 1-based, matching the text formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TsrError {
    #[error("line {line}: {reason}")]
    MalformedLine { line: usize, reason: String },
    #[error("duplicate edge ({}, {})", .0 + 1, .1 + 1)]
    DuplicateEdge(Vertex, Vertex),
    #[error("self-loop at vertex {}", .0 + 1)]
    SelfLoop(Vertex),
    #[error("vertex {}: threshold {tau} outside [1, {degree}]", .vertex + 1)]
    ThresholdOutOfRange {
        vertex: Vertex,
        tau: u32,
        degree: usize,
    },
    #[error("vertex ids are not dense: {0}")]
    IdGap(String),
    #[error("edge ({}, {}) not found", .0 + 1, .1 + 1)]
    EdgeNotFound(Vertex, Vertex),
    #[error("vertex {} has degree {degree}, need at least {required}", .vertex + 1)]
    DegreeTooSmall {
        vertex: Vertex,
        degree: usize,
        required: usize,
    },
    #[error("vertex {} has degree {degree}, need at most {allowed}", .vertex + 1)]
    DegreeTooLarge {
        vertex: Vertex,
        degree: usize,
        allowed: usize,
    },
    #[error("unknown vertex {}", .0 + 1)]
    UnknownVertex(Vertex),
    #[error("not an orientation: {0}")]
    NotAnOrientation(String),
    #[error("seed set is not a target set")]
    NotATargetSet,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("endpoint sizes differ: start {start}, end {end}, expected {expected}")]
    EndpointSizeMismatch {
        start: usize,
        end: usize,
        expected: usize,
    },
    #[error("seed sets differ in size ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("instance too large: {0}")]
    InstanceTooLarge(String),
    #[error("graph is not a path")]
    NotAPath,
    #[error("graph is not a cycle")]
    NotACycle,
    #[error("graph is not a tree")]
    NotATree,
    #[error("vertex {} is not a (3,3)-vertex", .0 + 1)]
    NotA33Vertex(Vertex),
    #[error("graph is not a (3,3)-graph")]
    NotA33Graph,
    #[error("gadget endpoints coincide at vertex {}", .0 + 1)]
    SameVertex(Vertex),
    #[error("vertex {} has degree {degree}, expected one of 2 or 3", .vertex + 1)]
    BadDegree { vertex: Vertex, degree: usize },
    #[error("family set {} is empty", .0 + 1)]
    EmptyFamilySet(usize),
}

pub type Result<T> = std::result::Result<T, TsrError>;
