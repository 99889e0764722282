use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u32, u32),
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("polynomial is not multihomogeneous")]
    NotMultihomogeneous,
    #[error("polynomial is not multilinear")]
    NotMultilinear,
    #[error("variable sets intersect in {0:?}")]
    SharedVariables(Vec<u32>),
    #[error("generator count mismatch: E({0}) vs E({1})")]
    GeneratorMismatch(u32, u32),
    #[error("too many generators: {0} (at most {1})")]
    TooManyGenerators(u32, u32),
    #[error("malformed descriptor `{0}`")]
    Descriptor(String),
    #[error("dimension {dim} exceeds the configured cap {cap}")]
    DimensionCap { dim: usize, cap: usize },
    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeCap { degree: usize, cap: usize },
    #[error("scan of {count} basis tuples exceeds the configured cap {cap}")]
    TooManyTuples { count: u128, cap: u128 },
    #[error("no value assigned to x{0}")]
    MissingVariable(u32),
    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),
    #[error("multiplication is not associative on basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("unit law fails on basis element {0}")]
    BadUnit(usize),
    #[error("components do not form a direct sum decomposition: {0}")]
    NotADecomposition(String),
    #[error(
        "commutation scalar of components ({i}, {j}) is not constant: \
         witness basis vectors {x} and {y}"
    )]
    P2Violation { i: usize, j: usize, x: usize, y: usize },
    #[error("unsupported decomposition `{0}`")]
    UnsupportedDecomposition(String),
    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("not a permutation: {0:?}")]
    BadPermutation(Vec<usize>),
    #[error("canonical form is zero: the polynomial is an identity of E")]
    ZeroCanonicalForm,
    #[error("g is a polynomial identity of the algebra")]
    GIsIdentity,
}

pub type Result<T> = std::result::Result<T, Error>;
