use thiserror::Error;

/// Typed errors for every fallible operation in the crate.
///
/// The CLI maps these to exit codes: [`Error::Unsupported`] exits 2,
/// [`Error::Validation`] exits 3, everything else exits 1.
#[derive(Debug, Error)]
pub enum Error {
    /// Syntax error in a `.germ` file, with 1-based position.
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    /// Factor labels must be `f1..fr` in order, each defined exactly once.
    #[error("factor numbering: expected f{expected}, found f{found}")]
    FactorNumbering { expected: usize, found: usize },

    /// A factor reduced to the zero polynomial.
    #[error("factor f{index} is the zero polynomial")]
    ZeroFactor { index: usize },

    /// Every factor must vanish at the origin.
    #[error("factor f{index} does not vanish at the origin")]
    NonVanishingFactor { index: usize },

    /// A blowup center would need an irrational tangent direction; carries
    /// the direction polynomial that does not split over the rationals.
    #[error("irrational blowup center: direction polynomial {poly} has no full rational splitting")]
    IrrationalCenter { poly: String },

    /// Two factors share an analytic branch.
    #[error("factors f{first} and f{second} share a branch")]
    SharedBranch { first: usize, second: usize },

    /// A factor has a repeated branch (the germ is non-reduced).
    #[error("factor f{index} has a repeated branch")]
    NonReduced { index: usize },

    /// A single factor turned out to have more than one branch.
    #[error("factor f{index} is not a single branch (it splits under blowup)")]
    ReducibleFactor { index: usize },

    /// A deterministic resource cap was hit (expression size, blowup count,
    /// integer factoring for direction enumeration).
    #[error("computation limit exceeded: {what}")]
    LimitExceeded { what: String },

    /// Malformed `.graph` file, with the 1-based line.
    #[error("graph schema error at line {line}: {msg}")]
    GraphSchema { line: usize, msg: String },

    /// Resolution-data invariants failed; every violated invariant is listed.
    #[error("resolution data validation failed:\n{}", violations.join("\n"))]
    Validation { violations: Vec<String> },

    /// A point was outside the half-open unit cube, or had the wrong arity.
    #[error("invalid cube point: {msg}")]
    InvalidCubePoint { msg: String },

    /// Weight vectors must be positive integers with gcd 1.
    #[error("invalid weight vector: {msg}")]
    InvalidWeights { msg: String },

    /// The operation is not available for this input (e.g. full face
    /// arrangements for more than two branches, or trace-dependent
    /// operations on graph-loaded data).
    #[error("unsupported: {msg}")]
    Unsupported { msg: String },

    /// Two independent computations of the same quantity disagreed.
    #[error("cross-check failed: {msg}")]
    CrossCheck { msg: String },

    /// I/O error surfaced by the CLI.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code the CLI uses for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Unsupported { .. } => 2,
            Error::Validation { .. } => 3,
            _ => 1,
        }
    }
}
