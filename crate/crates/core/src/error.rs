use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {0} must be even and at least 2")]
    InvalidEvenIndex(u64),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("regularity is only defined for primes p >= 5, got {0}")]
    PrimeTooSmall(u64),

    #[error("index {index} must be even and lie in [2, {max}] for p = {p}")]
    IndexOutOfRange { index: u64, p: u64, max: u64 },

    #[error("approximation of B_{two_k} is too coarse to reconstruct the exact value")]
    ReconstructionFailed { two_k: u64 },

    #[error("power sum polynomial for r = {r} gave a non-integral value at n = {n}")]
    NonIntegral { n: u64, r: u32 },

    #[error("order {order} is outside the expansion domain of {tag}")]
    OrderOutOfDomain { tag: &'static str, order: i64 },

    #[error("argument is outside the convergence domain of {tag}")]
    OutsideDomain { tag: &'static str },

    #[error("{0}")]
    Parse(String),
}
