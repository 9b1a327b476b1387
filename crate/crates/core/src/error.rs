use thiserror::Error;

/// Errors raised while reading an edge-list document.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("missing header line `n m`")]
    MissingHeader,
    #[error("line {line}: malformed {what}: {text:?}")]
    Malformed { line: usize, what: &'static str, text: String },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: duplicate edge ({u}, {v})")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("header announced {expected} edges but {found} were listed")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("a digraph needs at least one vertex")]
    NoVertices,
}

/// Errors from the combinatorial side: cores, witnesses and matchings.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("max-degree core has {size} vertices, above the cap of {cap}")]
    CoreTooLarge { size: usize, cap: usize },
    #[error("witness has {arcs} arcs, above the brute-force cap of {cap}")]
    TooManyArcs { arcs: usize, cap: usize },
    #[error("the empty set has no bipartite witness")]
    EmptySet,
    #[error("vertices {0} and {1} of the set are adjacent")]
    NotIndependent(usize, usize),
    #[error("vertex {0} is not in the max-degree core")]
    NotInCore(usize),
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("a digraph needs at least one vertex")]
    NoVertices,
    #[error("arc ({0}, {1}) does not join the two sides of the witness")]
    ArcNotBipartite(usize, usize),
    #[error("no fractional matching saturates the cover side")]
    NotSaturable,
}

/// Errors from the variational solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolveError {
    #[error("level target {0} must exceed the constant term 1")]
    TargetTooSmall(f64),
    #[error("polynomial is constant on this slice; level set is empty")]
    InfeasibleSlice,
    #[error("no feasible point on any boundary family")]
    Infeasible,
    #[error("negative argument {name} = {value}")]
    NegativeInput { name: &'static str, value: f64 },
    #[error("delta must be positive, got {0}")]
    NonPositiveDelta(f64),
}

/// Errors from graphon evaluation and simulation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SimError {
    #[error("p = {0} is outside the open interval (0, 1)")]
    BadProbability(f64),
    #[error("x = {0} is outside [0, 1]")]
    BadDensity(f64),
    #[error("{what} exceeds its cap ({value} > {cap})")]
    CapExceeded { what: &'static str, value: f64, cap: f64 },
    #[error("block measures are infeasible: block {block} has measure {measure}")]
    InfeasibleMeasures { block: usize, measure: f64 },
    #[error("invalid step graphon: {0}")]
    InvalidGraphon(String),
    #[error("clique side {0} exceeds 1")]
    CliqueTooLarge(f64),
    #[error("sample count must be positive")]
    NoSamples,
    #[error("no feasible matrix found after all restarts")]
    NoFeasiblePoint,
    #[error("matrix dimension {got} does not match {expected}")]
    DimensionMismatch { expected: usize, got: usize },
}
