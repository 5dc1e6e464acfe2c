use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("modulus {0} exceeds the supported range (p < 2^32)")]
    ModulusTooLarge(u64),
    #[error("{what}: {got} exceeds the limit of {limit}")]
    Capacity {
        what: &'static str,
        limit: u64,
        got: u64,
    },
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("descent index {index} is out of range for n = {n}")]
    DescentOutOfRange { index: u32, n: u32 },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unknown Coxeter group {0:?}")]
    UnknownGroup(String),
    #[error("subdiagram is not a finite irreducible Coxeter diagram: {0}")]
    Unclassifiable(String),
}
