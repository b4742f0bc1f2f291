use thiserror::Error;

/// Errors raised by graph construction, parsing and the operations that
/// have checked preconditions.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),
    #[error("duplicate edge `{0} {1}`")]
    DuplicateEdge(String, String),
    #[error("malformed line {line}: {reason}")]
    MalformedLine { line: usize, reason: String },
    #[error("vertex id {id} out of range for n={n}")]
    VertexOutOfRange { id: usize, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is a tree: core is undefined")]
    CoreOfTree,
    #[error("power exponent must be >= 1")]
    BadExponent,
    #[error("json: {0}")]
    Json(String),
}

/// Errors raised by the tail-structure extraction when the chain
/// hypothesis fails.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TailError {
    #[error("tail must list r+1 >= 2 distinct vertices")]
    BadLength,
    #[error("ball of the tail tip is not exactly the tail vertex set")]
    TipBallMismatch,
    #[error("ball inclusion B_v{} <| B_v{} is not strict or fails", .0 + 1, .0)]
    NotNested(usize),
}

/// Errors for operations with explicit size guards.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("too many edges for brute force: {0} > {1}")]
    TooManyEdges(usize, usize),
    #[error("too many vertices for brute force: {0} > {1}")]
    TooManyVertices(usize, usize),
}

/// Errors raised by the instance generators.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("girth target must be >= 3, got {0}")]
    BadGirth(usize),
    #[error("size target {target} infeasible under the policy after {attempts} attempts")]
    Infeasible { target: usize, attempts: usize },
}
