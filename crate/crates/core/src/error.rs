use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("dimension mismatch: expected {expected} rows, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("linear system has no solution")]
    NoSolution,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("quiver must have at least one vertex")]
    EmptyQuiver,
    #[error("duplicate arrow id `{0}`")]
    DuplicateArrow(String),
    #[error("arrow `{id}` has endpoint {vertex} outside 0..{vertex_count}")]
    ArrowOutOfRange { id: String, vertex: usize, vertex_count: usize },
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("relation {relation:?} is malformed: {reason}")]
    MalformedRelation { relation: Vec<String>, reason: String },
    #[error("ideal is not admissible within path length bound {bound}: irreducible path of length {bound} exists")]
    NotAdmissible { bound: usize },
    #[error("path length bound must be at least 1")]
    ZeroBound,
    #[error("vertex {vertex} out of range 0..{vertex_count}")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModuleError {
    #[error("module has {found} vertex dimensions, quiver has {expected} vertices")]
    WrongVertexCount { expected: usize, found: usize },
    #[error("arrow `{arrow}` matrix is {found_rows}x{found_cols}, expected {rows}x{cols}")]
    ArrowShape { arrow: String, rows: usize, cols: usize, found_rows: usize, found_cols: usize },
    #[error("relation {relation} acts by a nonzero matrix")]
    RelationViolated { relation: String },
    #[error("morphism component at vertex {vertex} has wrong shape")]
    MorphismShape { vertex: usize },
    #[error("morphism does not commute with arrow `{arrow}`")]
    NotCommuting { arrow: String },
    #[error("modules over different algebras")]
    AlgebraMismatch,
    #[error("enumeration of dimension vector {dims:?} needs {needed} tuples, budget allows {cap}")]
    BudgetExceeded { dims: Vec<usize>, needed: f64, cap: u64 },
}

/// A decision procedure ran out of budget before it could settle the question.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("undecided: {reason}")]
pub struct Undecided {
    pub reason: String,
}

impl Undecided {
    pub fn new(reason: impl Into<String>) -> Self {
        Undecided { reason: reason.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiftError {
    #[error("square does not commute: {0}")]
    IncompatibleSquare(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("missing approximation witness: {0}")]
    MissingWitness(String),
    #[error("{0}")]
    Lift(#[from] LiftError),
    #[error("invalid universe: {0}")]
    InvalidUniverse(String),
    #[error("subcategory `{label}` generator {index} is not in the universe")]
    GeneratorOutsideUniverse { label: String, index: usize },
    #[error(transparent)]
    Undecided(#[from] Undecided),
}
