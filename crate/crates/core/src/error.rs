use thiserror::Error;

/// Errors raised while building or analysing finite algebras and lattices.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("an algebra needs at least one element")]
    EmptyCarrier,
    #[error("operation `{op}`: entry out of range at index {index} (value {value}, carrier size {size})")]
    EntryOutOfRange {
        op: String,
        index: usize,
        value: usize,
        size: usize,
    },
    #[error("operation `{op}`: wrong table length (expected {expected}, found {found})")]
    WrongTableLength {
        op: String,
        expected: usize,
        found: usize,
    },
    #[error("duplicate operation name `{0}`")]
    DuplicateOp(String),
    #[error("element labels: {0}")]
    BadLabels(String),
    #[error("element {element} out of range for carrier size {size}")]
    ElementOutOfRange { element: usize, size: usize },
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("partition is not compatible with operation `{op}`")]
    NotCompatible { op: String },
    #[error("signature mismatch: {0}")]
    SignatureMismatch(String),
    #[error("{what}: size {size} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("a product needs at least one factor")]
    EmptyProduct,
    #[error("factor index {index} out of range ({count} factors)")]
    FactorOutOfRange { index: usize, count: usize },
    #[error("incompatible system: targets {i} and {j} are not related modulo the join of their congruences")]
    IncompatibleSystem { i: usize, j: usize },
    #[error("not a lattice: {0}")]
    NotALattice(String),
    #[error("the lattice is not distributive")]
    NotDistributive,
    #[error("missing operation `{name}` of arity {arity}")]
    MissingOp { name: String, arity: usize },
    #[error("axiom `{axiom}` fails at {witness:?}")]
    AxiomViolation {
        axiom: &'static str,
        witness: Vec<usize>,
    },
    #[error("not a filter: {0}")]
    NotAFilter(String),
    #[error("the algebra is not arithmetical")]
    NotArithmetical,
    #[error("the algebra is trivial")]
    TrivialAlgebra,
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("infeasible request: {0}")]
    Infeasible(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
