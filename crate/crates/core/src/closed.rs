//! Closed formulas, inversions and recurrences for the signed Eulerian
//! numbers on involutions, computed without any enumeration.
//!
//! Notation used in the docs below: `a(n,m)` counts generalized involutions
//! of length `n` over `{1..m}`, `a+(n,m)` / `a-(n,m)` the even / odd ones,
//! `â(n,m) = a+(n,m) - a-(n,m)`, and `f(n,k)` is the signed number of
//! involutions of `S_n` with `k` rises (`f+`, `f-` its even and odd parts).
//!
//! Out-of-range values of `f` are zero, except `f(0,0) = 1` for the empty
//! involution.
//!
//! The exponential generating function `g(t) = exp(t - t^2/2)` of `F_n(1)`
//! satisfies `g' = (1 - t) g`. Comparing coefficients of `t^n / n!` on both
//! sides gives `E(n+1) = E(n) - n E(n-1)` with `E(0) = E(1) = 1` for the
//! scaled coefficients `E(n) = n! [t^n] g`, which is how [`egf_scaled`]
//! produces them with integer arithmetic only.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{binomial, binomial_row, factorial_table, multiset_coefficients, ExactInt};

fn pair_count(m: usize) -> i64 {
    (m * m.saturating_sub(1) / 2) as i64
}

fn pairs_with_diagonal(m: usize) -> i64 {
    (m * (m + 1) / 2) as i64
}

fn alternating(i: i64) -> i32 {
    if i.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Total number of generalized involutions of length `n` over `{1..m}`:
/// `sum_h C(m+n-2h-1, n-2h) C(C(m,2)+h-1, h)`, `h = 0..=n/2`.
pub fn a_total(n: usize, m: usize) -> ExactInt {
    let (n, m) = (n as i64, m as i64);
    let pairs = pair_count(m as usize);
    (0..=n / 2)
        .map(|h| binomial(m + n - 2 * h - 1, n - 2 * h) * binomial(pairs + h - 1, h))
        .sum()
}

/// Even generalized involutions:
/// `sum_h C(m, n-4h) C(C(m+1,2)+2h-1, 2h)`, `h = 0..=n/4`.
pub fn a_plus(n: usize, m: usize) -> ExactInt {
    let pairs = pairs_with_diagonal(m);
    let (n, m) = (n as i64, m as i64);
    (0..=n / 4)
        .map(|h| binomial(m, n - 4 * h) * binomial(pairs + 2 * h - 1, 2 * h))
        .sum()
}

/// Odd generalized involutions, `a(n,m) - a+(n,m)`.
pub fn a_minus(n: usize, m: usize) -> ExactInt {
    a_total(n, m) - a_plus(n, m)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AHatRoute {
    /// `2 a+(n,m) - a(n,m)`.
    EvenMinusTotal,
    /// `sum_j (-1)^j C(C(m+1,2)+j-1, j) C(m, n-2j)`.
    Alternating,
}

pub fn a_hat_route(n: usize, m: usize, route: AHatRoute) -> ExactInt {
    match route {
        AHatRoute::EvenMinusTotal => 2 * a_plus(n, m) - a_total(n, m),
        AHatRoute::Alternating => {
            let pairs = pairs_with_diagonal(m);
            let (n, m) = (n as i64, m as i64);
            (0..=n / 2)
                .map(|j| alternating(j) * binomial(pairs + j - 1, j) * binomial(m, n - 2 * j))
                .sum()
        }
    }
}

/// `â(n,m)` by the alternating sum, checked against `2 a+ - a`.
pub fn a_hat(n: usize, m: usize) -> Result<ExactInt> {
    let alt = a_hat_route(n, m, AHatRoute::Alternating);
    let via_counts = a_hat_route(n, m, AHatRoute::EvenMinusTotal);
    if alt != via_counts {
        return Err(Error::RouteMismatch {
            quantity: "a_hat",
            point: (n as i64, m as i64),
            left: alt,
            right: via_counts,
        });
    }
    Ok(alt)
}

/// Inverts the binomial convolution `c(m) = sum_k C(n+k,k) x(m-k-1)`:
/// `x(k) = sum_{m=0}^{k+1} (-1)^(k-m+1) C(n+1, k-m+1) c(m)`.
fn invert_convolution(n: usize, k: i64, column: impl Fn(usize) -> ExactInt) -> ExactInt {
    if k + 1 < 0 {
        return BigInt::zero();
    }
    let n1 = n as i64 + 1;
    // C(n+1, k-m+1) vanishes for m < k - n
    let lo = (k - n as i64).max(0);
    (lo..=k + 1)
        .map(|m| {
            let d = k - m + 1;
            alternating(d) * binomial(n1, d) * column(m as usize)
        })
        .sum()
}

fn f_empty(k: i64) -> ExactInt {
    if k == 0 {
        BigInt::one()
    } else {
        BigInt::zero()
    }
}

/// `f(n,k)` through the double sum with the alternating inner sum for `â`.
pub fn f_signed(n: usize, k: i64) -> ExactInt {
    if n == 0 {
        return f_empty(k);
    }
    invert_convolution(n, k, |m| a_hat_route(n, m, AHatRoute::Alternating))
}

/// `f(n,k)` through the inversion with `â = 2 a+ - a` spelled out.
pub fn f_signed_via_counts(n: usize, k: i64) -> ExactInt {
    if n == 0 {
        return f_empty(k);
    }
    invert_convolution(n, k, |m| a_hat_route(n, m, AHatRoute::EvenMinusTotal))
}

/// `(f+(n,k), f-(n,k))`, each obtained by inverting its own convolution.
pub fn f_split(n: usize, k: i64) -> Result<(ExactInt, ExactInt)> {
    if n == 0 {
        return Ok((f_empty(k), BigInt::zero()));
    }
    let plus = invert_convolution(n, k, |m| a_plus(n, m));
    let minus = invert_convolution(n, k, |m| a_minus(n, m));
    for (component, value) in [("plus", &plus), ("minus", &minus)] {
        if value < &BigInt::zero() {
            return Err(Error::NegativeSplit {
                component,
                n,
                k,
                value: value.clone(),
            });
        }
    }
    Ok((plus, minus))
}

/// `f(n,k)` with the zero convention for any integer indices.
pub fn f_value(n: i64, k: i64) -> ExactInt {
    if n < 0 {
        BigInt::zero()
    } else {
        f_signed(n as usize, k)
    }
}

/// Left minus right side of the Worpitzky-type identity
/// `sum_{j<s} C(n+j,j) f(n,s-j-1) = â(n,s)` (alternating form of `â`).
pub fn worpitzky_residual(n: usize, s: usize) -> ExactInt {
    worpitzky_residual_with(n, s, f_signed)
}

pub(crate) fn worpitzky_residual_with(
    n: usize,
    s: usize,
    f: impl Fn(usize, i64) -> ExactInt,
) -> ExactInt {
    let lhs: ExactInt = (0..s as i64)
        .map(|j| binomial(n as i64 + j, j) * f(n, s as i64 - j - 1))
        .sum();
    lhs - a_hat_route(n, s, AHatRoute::Alternating)
}

/// `n f(n,k)` minus the nine-term right side of the polynomial-coefficient
/// recurrence in `(n, k)`.
pub fn zeilberger_residual(n: i64, k: i64) -> ExactInt {
    zeilberger_residual_with(n, k, f_value)
}

pub fn zeilberger_residual_with(n: i64, k: i64, f: impl Fn(i64, i64) -> ExactInt) -> ExactInt {
    let terms: [(i64, i64, i64); 9] = [
        (1, 0, 2 + k - n),
        (1, 1, 2 * n - k - 1),
        (2, 0, -(n + 3 * k + k * k)),
        (2, 1, -2 + 4 * k + 2 * k * k - 2 * k * n),
        (2, 2, 2 - k - k * k + 2 * k * n - n * n),
        (3, 0, -n - k * k - 2 * k + 2),
        (3, 1, -7 + 4 * k + 3 * k * k + 2 * n - 2 * k * n),
        (3, 2, 8 - 2 * k - 3 * k * k - 2 * n + 4 * k * n - n * n),
        (3, 3, -3 + k * k + n - 2 * k * n + n * n),
    ];
    let rhs: ExactInt = terms
        .iter()
        .map(|&(dn, dk, coeff)| coeff * f(n - dn, k - dk))
        .sum();
    n * f(n, k) - rhs
}

/// Table of `â(n,m)` for `n <= n_max`, `m <= m_max` by the alternating sum,
/// sharing binomial rows across entries.
#[derive(Debug, Clone)]
pub struct AHatTable {
    n_max: usize,
    m_max: usize,
    values: Vec<ExactInt>,
}

impl AHatTable {
    pub fn new(n_max: usize, m_max: usize) -> Self {
        let mut values = vec![BigInt::zero(); (n_max + 1) * (m_max + 1)];
        for m in 0..=m_max {
            let row = binomial_row(m);
            let multisets = multiset_coefficients(pairs_with_diagonal(m), n_max / 2 + 1);
            for n in 0..=n_max {
                let mut acc = BigInt::zero();
                for (j, multiset) in multisets.iter().enumerate().take(n / 2 + 1) {
                    let r = n - 2 * j;
                    if r > m {
                        continue;
                    }
                    let term = multiset * &row[r];
                    if j % 2 == 0 {
                        acc += term;
                    } else {
                        acc -= term;
                    }
                }
                values[n * (m_max + 1) + m] = acc;
            }
        }
        AHatTable {
            n_max,
            m_max,
            values,
        }
    }

    pub fn get(&self, n: usize, m: usize) -> &ExactInt {
        assert!(
            n <= self.n_max && m <= self.m_max,
            "({n},{m}) outside table"
        );
        &self.values[n * (self.m_max + 1) + m]
    }
}

/// Rows `f(n, 0..n)` for every `n <= n_max`, built from one [`AHatTable`].
#[derive(Debug, Clone)]
pub struct SignedEulerTable {
    rows: Vec<Vec<ExactInt>>,
}

impl SignedEulerTable {
    pub fn new(n_max: usize) -> Self {
        let a_hat = AHatTable::new(n_max, n_max);
        let mut rows = vec![vec![BigInt::one()]];
        for n in 1..=n_max {
            let binoms = binomial_row(n + 1);
            let row = (0..n)
                .map(|k| {
                    // m runs over 0..=k+1 with d = k - m + 1 in 0..=k+1
                    (0..=k + 1)
                        .map(|m| {
                            let d = k + 1 - m;
                            let term = &binoms[d] * a_hat.get(n, m);
                            if d % 2 == 0 {
                                term
                            } else {
                                -term
                            }
                        })
                        .sum()
                })
                .collect();
            rows.push(row);
        }
        SignedEulerTable { rows }
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn row(&self, n: usize) -> &[ExactInt] {
        &self.rows[n]
    }

    /// `f(n,k)` with the zero convention; panics if `n > n_max`.
    pub fn get(&self, n: i64, k: i64) -> ExactInt {
        if n < 0 || k < 0 {
            return BigInt::zero();
        }
        self.rows[n as usize]
            .get(k as usize)
            .cloned()
            .unwrap_or_default()
    }
}

/// Number of even involutions of `S_n`:
/// `sum_h n! / ((2h)! (n-4h)! 4^h)`, `h = 0..=n/4`.
pub fn i_plus(n: usize) -> ExactInt {
    i_plus_with(n, &factorial_table(n))
}

pub(crate) fn i_plus_with(n: usize, fact: &[ExactInt]) -> ExactInt {
    (0..=n / 4)
        .map(|h| &fact[n] / (&fact[2 * h] * &fact[n - 4 * h] * (BigInt::one() << (2 * h))))
        .sum()
}

/// `|I_n| = sum_h n! / ((n-2h)! h! 2^h)`, `h = 0..=n/2`.
pub fn involutions_count(n: usize) -> ExactInt {
    involutions_count_with(n, &factorial_table(n))
}

pub(crate) fn involutions_count_with(n: usize, fact: &[ExactInt]) -> ExactInt {
    (0..=n / 2)
        .map(|h| &fact[n] / (&fact[n - 2 * h] * &fact[h] * (BigInt::one() << h)))
        .sum()
}

/// `F_n(1)` as one expression:
/// `2 sum_h n!/((2h)!(n-4h)! 4^h) - sum_h n!/((n-2h)! h! 2^h)`.
pub fn f1_closed(n: usize) -> ExactInt {
    f1_closed_with(n, &factorial_table(n))
}

pub(crate) fn f1_closed_with(n: usize, fact: &[ExactInt]) -> ExactInt {
    let mut acc = BigInt::zero();
    for h in 0..=n / 4 {
        acc += 2 * (&fact[n] / (&fact[2 * h] * &fact[n - 4 * h] * (BigInt::one() << (2 * h))));
    }
    for h in 0..=n / 2 {
        acc -= &fact[n] / (&fact[n - 2 * h] * &fact[h] * (BigInt::one() << h));
    }
    acc
}

/// `F_0(1) ..= F_N(1)` from `F_n(1) = F_{n-1}(1) - (n-1) F_{n-2}(1)`.
pub fn f1_recurrence(n_max: usize) -> Vec<ExactInt> {
    let mut out: Vec<ExactInt> = vec![BigInt::one(), BigInt::one()];
    for n in 2..=n_max {
        let next = &out[n - 1] - (n - 1) * &out[n - 2];
        out.push(next);
    }
    out.truncate(n_max + 1);
    out
}

/// `E(0) ..= E(N)` with `E(n) = n! [t^n] exp(t - t^2/2)`, from
/// `E(n+1) = E(n) - n E(n-1)`.
pub fn egf_scaled(n_max: usize) -> Vec<ExactInt> {
    let mut e = Vec::with_capacity(n_max + 2);
    e.push(BigInt::one());
    e.push(BigInt::one());
    for n in 1..n_max {
        let next = &e[n] - n * &e[n - 1];
        e.push(next);
    }
    e.truncate(n_max + 1);
    e
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> ExactInt {
        BigInt::from(v)
    }

    fn ints(v: &[i64]) -> Vec<ExactInt> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn counting_examples() {
        assert_eq!(a_total(2, 2), int(4));
        assert_eq!(a_total(1, 3), int(3));
        assert_eq!(a_plus(2, 2), int(1));
        assert_eq!(a_plus(1, 1), int(1));
        assert_eq!(a_plus(0, 0), int(1));
        assert_eq!(a_minus(2, 2), int(3));
        assert_eq!(a_minus(2, 1), int(1));
        for m in 0..6 {
            assert_eq!(a_total(0, m), int(1));
            assert_eq!(a_minus(0, m), int(0));
            assert_eq!(a_hat(0, m).unwrap(), int(1));
        }
    }

    #[test]
    fn a_hat_examples() {
        assert_eq!(a_hat(2, 2).unwrap(), int(-2));
        assert_eq!(a_hat(2, 1).unwrap(), int(-1));
        for n in 1..6 {
            assert_eq!(a_hat(n, 0).unwrap(), int(0));
        }
    }

    #[test]
    fn a_hat_table_matches_pointwise() {
        let table = AHatTable::new(14, 12);
        for n in 0..=14 {
            for m in 0..=12 {
                assert_eq!(*table.get(n, m), a_hat(n, m).unwrap(), "({n},{m})");
            }
        }
    }

    #[test]
    fn f_signed_examples() {
        assert_eq!(f_signed(2, 0), int(-1));
        assert_eq!(f_signed(3, 1), int(-2));
        assert_eq!(f_signed(4, 0), int(1));
        assert_eq!(f_signed(0, 0), int(1));
        assert_eq!(f_signed(0, 1), int(0));
    }

    #[test]
    fn f_signed_out_of_range_is_zero() {
        for n in 1..=10 {
            for k in (-4..0).chain(n as i64..n as i64 + 6) {
                assert_eq!(f_signed(n, k), int(0), "({n},{k})");
                assert_eq!(f_signed_via_counts(n, k), int(0), "({n},{k})");
            }
        }
    }

    #[test]
    fn two_forms_of_inversion_agree() {
        for n in 0..=14 {
            for k in -1..=n as i64 {
                assert_eq!(f_signed(n, k), f_signed_via_counts(n, k), "({n},{k})");
            }
        }
    }

    #[test]
    fn signed_euler_table_matches_pointwise() {
        let table = SignedEulerTable::new(16);
        for n in 0..=16 {
            for k in -2..=n as i64 + 2 {
                assert_eq!(table.get(n as i64, k), f_signed(n, k), "({n},{k})");
            }
        }
        assert_eq!(table.row(4), &ints(&[1, -2, -2, 1])[..]);
    }

    #[test]
    fn f_split_examples() {
        assert_eq!(f_split(3, 1).unwrap(), (int(0), int(2)));
        assert_eq!(f_split(4, 1).unwrap(), (int(1), int(3)));
        assert_eq!(f_split(1, 0).unwrap(), (int(1), int(0)));
        assert_eq!(f_split(0, 0).unwrap(), (int(1), int(0)));
    }

    #[test]
    fn worpitzky_examples() {
        assert_eq!(worpitzky_residual(2, 2), int(0));
        assert_eq!(worpitzky_residual(3, 1), int(0));
        assert_eq!(worpitzky_residual(1, 1), int(0));
    }

    #[test]
    fn zeilberger_examples() {
        assert_eq!(zeilberger_residual(5, 2), int(0));
        assert_eq!(zeilberger_residual(10, 4), int(0));
        for n in 3..8 {
            assert_eq!(zeilberger_residual(n, -1), int(0));
            assert_eq!(zeilberger_residual(n, -5), int(0));
        }
    }

    #[test]
    fn f1_examples() {
        assert_eq!(f1_closed(4), int(-2));
        assert_eq!(f1_closed(2), int(0));
        assert_eq!(f1_closed(5), int(6));
        assert_eq!(f1_recurrence(5), ints(&[1, 1, 0, -2, -2, 6]));
        assert_eq!(f1_recurrence(6)[6], int(16));
        assert_eq!(f1_recurrence(0), ints(&[1]));
        assert_eq!(egf_scaled(4), ints(&[1, 1, 0, -2, -2]));
        assert_eq!(egf_scaled(0), ints(&[1]));
    }

    #[test]
    fn involution_count_examples() {
        assert_eq!(i_plus(4), int(4));
        assert_eq!(involutions_count(4), int(10));
        assert_eq!(i_plus(3), int(1));
        assert_eq!(involutions_count(0), int(1));
        for n in 0..40 {
            assert_eq!(f1_closed(n), 2 * i_plus(n) - involutions_count(n));
        }
    }
}
