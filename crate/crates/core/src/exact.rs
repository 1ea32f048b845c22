//! Exact integer helpers shared by every formula in the crate.
//!
//! All counts are [`ExactInt`] (an alias for [`num_bigint::BigInt`]). The
//! binomial coefficient uses the falling-factorial convention
//!
//! ```text
//! C(a, b) = a (a-1) ... (a-b+1) / b!   for b >= 0,
//! C(a, b) = 0                          for b < 0,
//! ```
//!
//! so `C(a, 0) = 1` for every integer `a` (including negative ones) and
//! `C(a, b) = 0` whenever `0 <= a < b`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type ExactInt = BigInt;

/// Binomial coefficient under the falling-factorial convention.
pub fn binomial(a: i64, b: i64) -> ExactInt {
    if b < 0 {
        return BigInt::zero();
    }
    let mut b = b;
    if a >= 0 {
        if b > a {
            return BigInt::zero();
        }
        b = b.min(a - b);
    }
    let mut acc = BigInt::one();
    for i in 0..b {
        // acc == C(a, i) here, so the division is exact.
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

pub fn factorial(n: i64) -> Result<ExactInt> {
    if n < 0 {
        return Err(Error::NegativeFactorial(n));
    }
    Ok((2..=n).fold(BigInt::one(), |acc, i| acc * i))
}

/// `0!, 1!, ..., n_max!`.
pub fn factorial_table(n_max: usize) -> Vec<ExactInt> {
    let mut out = Vec::with_capacity(n_max + 1);
    let mut acc = BigInt::one();
    out.push(acc.clone());
    for i in 1..=n_max {
        acc *= i;
        out.push(acc.clone());
    }
    out
}

/// `C(k + j - 1, j)` for `j = 0..=len-1`: the number of multisets of size
/// `j` drawn from `k` kinds. Built incrementally so long runs stay cheap.
pub fn multiset_coefficients(k: i64, len: usize) -> Vec<ExactInt> {
    let mut out = Vec::with_capacity(len);
    let mut acc = BigInt::one();
    for j in 0..len as i64 {
        if j > 0 {
            acc *= k + j - 1;
            acc /= j;
        }
        out.push(acc.clone());
    }
    out
}

/// `C(m, 0), C(m, 1), ..., C(m, m)` for `m >= 0`.
pub fn binomial_row(m: usize) -> Vec<ExactInt> {
    let mut out = Vec::with_capacity(m + 1);
    let mut acc = BigInt::one();
    out.push(acc.clone());
    for r in 1..=m {
        acc *= m + 1 - r;
        acc /= r;
        out.push(acc.clone());
    }
    out
}

pub(crate) fn sign_of(parity_odd: bool) -> i32 {
    if parity_odd {
        -1
    } else {
        1
    }
}
