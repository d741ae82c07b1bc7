use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime below 2^31")]
    InvalidPrime(u64),

    #[error("runtime prime already fixed to {existing}, cannot switch to {requested}")]
    RuntimePrimeConflict { existing: u32, requested: u32 },

    #[error("cannot parse scalar {0:?}")]
    ParseScalar(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("left Leibniz identity fails on basis triple ({i}, {j}, {k}) (0-based)")]
    LeibnizViolation { i: usize, j: usize, k: usize },

    #[error("bimodule identity ({identity}) fails for basis pair ({x}, {y}) (0-based)")]
    BimoduleViolation { identity: &'static str, x: usize, y: usize },

    #[error("left module identity fails for basis pair ({x}, {y}) (0-based)")]
    LeftModuleViolation { x: usize, y: usize },

    #[error("subspace is not {0}")]
    NotClosed(&'static str),

    #[error("left multiplication by basis element {0} of the given set is not nilpotent")]
    NotNilpotent(usize),

    #[error("{0}")]
    Precondition(String),

    #[error("requires a finite ground field")]
    FiniteFieldRequired,

    #[error("enumeration budget of {budget} exceeded (needs about {needed})")]
    BudgetExceeded { budget: u64, needed: u64 },

    #[error("cochain space too large: about {estimate_mb} MB needed, guard is {limit_mb} MB")]
    MemoryGuard { estimate_mb: u64, limit_mb: u64 },

    #[error("random generation gave up after {attempts} attempts (seed {seed})")]
    GenerationFailed { attempts: u64, seed: u64 },
}
