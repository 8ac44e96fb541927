use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial division is not exact: {0}")]
    NotDivisible(String),

    #[error("polynomial is not palindromic with center {center}")]
    NotPalindromic { center: String },

    #[error("gamma coefficient {k} is not divisible by (-2)^{k}")]
    NonIntegralGamma { k: usize },

    #[error("reverse_prefix needs 2m <= n, got m = {m}, n = {n}")]
    PrefixTooLong { m: usize, n: usize },

    #[error("n = {n} exceeds the brute-force limit {max}")]
    LimitExceeded { n: usize, max: usize },

    #[error("odd doubled coefficient at n = {n}, k = {k}")]
    ParityViolation { n: usize, k: usize },

    #[error("expansion failed: {0}")]
    ExpansionFailed(String),

    #[error("F^({n})(0) times (q;q)_{n} is not a polynomial")]
    DenominatorNotCleared { n: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
