use thiserror::Error;

/// Errors produced by the library.
///
/// `Internal` marks a failed consistency recheck (a computed result that
/// contradicts its independent verification); callers should treat it as a bug,
/// never as bad input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown identifier `{name}` at byte {position}")]
    UnknownIdentifier { name: String, position: usize },
    #[error("identifier `{name}` at byte {position} is reserved by the coefficient field")]
    ReservedIdentifier { name: String, position: usize },
    #[error("division by zero at byte {position}")]
    DivisionByZero { position: usize },
    #[error("expected {expected} entries, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("modulus must be at least 1")]
    InvalidModulus,
    #[error("{candidates} candidate weight vectors exceed the enumeration cap of {cap}; use a smaller modulus")]
    EnumerationCap { candidates: u128, cap: u128 },
    #[error("derivation is not homogeneous for the given grading")]
    Inhomogeneous,
    #[error("derivation is not monomial: the image of `{0}` is not a single term")]
    NotMonomial(String),
    #[error("cofactor must be zero or homogeneous of degree {expected}, got degree {found}")]
    CofactorDegree { expected: i64, found: String },
    #[error("cofactor elimination requires a derivation of homogeneity degree 1, got {0}")]
    EliminationDegree(i64),
    #[error("automorphism does not have order {0}")]
    OrderMismatch(u32),
    #[error("conjugation does not scale the derivation by the given unit")]
    ConjugationMismatch,
    #[error("the candidate Darboux polynomial is constant")]
    ConstantPolynomial,
    #[error("not a Darboux pair for the given derivation")]
    NotDarbouxPair,
    #[error("invalid input: {0}")]
    BadSpec(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for failures of the library's own cross-checks (oracle mismatch,
    /// post-hoc verification); the CLI maps these to a distinct exit code.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
