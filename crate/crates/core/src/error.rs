use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("factorial of negative number {0}")]
    NegativeFactorial(i64),

    #[error("{what} = {value} exceeds the enumeration cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    #[error("not a permutation of 1..n: {0:?}")]
    NotAPermutation(Vec<u32>),

    #[error("{0} is not an involution")]
    NotAnInvolution(String),

    #[error("invalid symmetric matrix: {0}")]
    InvalidMatrix(String),

    #[error("invalid generalized involution: {0}")]
    InvalidGeneralizedInvolution(String),

    /// Two independent computation routes disagreed.
    #[error("{quantity}{point:?}: routes disagree ({left} vs {right})")]
    RouteMismatch {
        quantity: &'static str,
        point: (i64, i64),
        left: BigInt,
        right: BigInt,
    },

    #[error("split component {component} of f({n},{k}) is negative: {value}")]
    NegativeSplit {
        component: &'static str,
        n: usize,
        k: i64,
        value: BigInt,
    },
}
