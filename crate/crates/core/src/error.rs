use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("dimension n={0} outside the supported range {1}")]
    DimensionOutOfRange(usize, &'static str),

    #[error("vector of norm {0} is not a root (roots have norm 1 or 2)")]
    NotARoot(i64),

    #[error("matrix does not preserve the form and the forward cone")]
    NotAnIsometry,

    #[error("Eisenstein vector has norm {0}, expected a norm-one vector")]
    NotNormOne(i64),

    #[error("group closure exceeded the element budget of {0}")]
    BudgetExceeded(usize),

    #[error("matrix entry {0} does not fit the compact element encoding")]
    EntryOverflow(i64),

    #[error("mixed moduli or sizes among generators")]
    IncompatibleGenerators,

    #[error("empty generator list")]
    NoGenerators,

    #[error("subgroup generator lies outside the ambient group")]
    NotASubgroup,

    #[error("neighbours of tile {0} depend on the coset representative")]
    RepresentativeDependent(usize),

    #[error("letter `{0}` has no assigned value")]
    UnassignedLetter(String),

    #[error("letter `{0}` is not a node of the diagram")]
    UnknownLetter(String),

    #[error("{0:?} is not a 6-cycle of the diagram")]
    NotAHexagon(Vec<String>),

    #[error("braid identity precondition violated: {0}")]
    BraidPrecondition(String),

    #[error("Gram entry {value} between walls {left} and {right} is not 0 or -1")]
    BadGramEntry {
        left: String,
        right: String,
        value: i64,
    },

    #[error("malformed relator file at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
