use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("self-loop on `{0}` (diagonal labels are implicitly 1)")]
    SelfLoop(String),
    #[error("label {m} on {s}-{t} is below 2")]
    LabelTooSmall { s: String, t: String, m: u32 },
    #[error("conflicting labels {first} and {second} on {s}-{t}")]
    ConflictingLabels {
        s: String,
        t: String,
        first: u32,
        second: u32,
    },
    #[error("{0} vertices exceeds the supported maximum of 64")]
    TooManyVertices(usize),
    #[error("invalid vertex name `{0}`")]
    InvalidVertexName(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("cells do not partition the vertex set: {0}")]
    NotAPartition(String),
    #[error("partition is not admissible: cells {0} and {1} are joined by more than one edge")]
    NotAdmissible(String, String),
    #[error("malformed partition literal: {0}")]
    Syntax(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RetractionError {
    #[error("witness domain does not match the subgroup generators")]
    DomainMismatch,
    #[error("witness does not fix `{0}`")]
    TargetNotFixed(String),
    #[error("target is not contained in the domain")]
    TargetOutsideDomain,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Internal failure while assembling a certificate from a search plan.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no non-adjacent cell pair in a triangle-free quotient with {0} cells")]
    NoNonAdjacentPair(usize),
    #[error("no certificate available for cell {0}")]
    UncertifiedCell(String),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
