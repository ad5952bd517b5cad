use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set size {0} is outside 1..=64")]
    GroundSize(usize),

    #[error("element {element} out of range 1..={n}")]
    ElementOutOfRange { element: usize, n: usize },

    #[error("ground-set mismatch: expected n = {expected}, found n = {found}")]
    GroundMismatch { expected: usize, found: usize },

    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),

    #[error("{what}: n = {n} exceeds the supported bound {bound}")]
    Capacity {
        what: &'static str,
        n: usize,
        bound: usize,
    },

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("not a spanning tree: {0}")]
    NotATree(String),

    #[error("malformed Prüfer sequence: {0}")]
    MalformedSequence(String),

    #[error("{quantity}({args}) is outside its domain {range}")]
    Domain {
        quantity: &'static str,
        args: String,
        range: &'static str,
    },

    #[error("{quantity}({args}): division by {divisor} leaves remainder {remainder}")]
    InexactDivision {
        quantity: &'static str,
        args: String,
        divisor: String,
        remainder: String,
    },

    #[error("{quantity}({args}) evaluated to the negative value {value}")]
    NegativeCount {
        quantity: &'static str,
        args: String,
        value: String,
    },

    #[error("Stirling table holds rows 0..={bound}, row {needed} requested")]
    TableBound { needed: usize, bound: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
