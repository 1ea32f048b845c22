//! Truncated bivariate power series with exact integer coefficients.
//!
//! A [`Series`] keeps the coefficients of `t^i u^j` for `i <= t_order`,
//! `j <= u_order`. Addition is exact on the window. A product's coefficient
//! at `(i, j)` only depends on factor coefficients at degrees `<= (i, j)`,
//! so multiplying two series with the same window is also exact there;
//! terms beyond the window are dropped. Univariate series are the cases
//! `u_order = 0` (series in `t`) and `t_order = 0` (series in `u`).

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::closed::{a_hat_route, AHatRoute, SignedEulerTable};
use crate::exact::{binomial, ExactInt};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    t_order: usize,
    u_order: usize,
    coeffs: Vec<ExactInt>,
}

impl Series {
    pub fn zero(t_order: usize, u_order: usize) -> Self {
        Series {
            t_order,
            u_order,
            coeffs: vec![BigInt::zero(); (t_order + 1) * (u_order + 1)],
        }
    }

    pub fn one(t_order: usize, u_order: usize) -> Self {
        let mut s = Series::zero(t_order, u_order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// `c * t^i u^j`, or zero if the monomial lies outside the window.
    pub fn monomial(t_order: usize, u_order: usize, i: usize, j: usize, c: ExactInt) -> Self {
        let mut s = Series::zero(t_order, u_order);
        if i <= t_order && j <= u_order {
            s.set(i, j, c);
        }
        s
    }

    /// Series in `t` alone; coefficients past `t_order` are dropped.
    pub fn in_t(coeffs: &[ExactInt], t_order: usize) -> Self {
        let mut s = Series::zero(t_order, 0);
        for (i, c) in coeffs.iter().enumerate().take(t_order + 1) {
            s.set(i, 0, c.clone());
        }
        s
    }

    /// Series in `u` alone; coefficients past `u_order` are dropped.
    pub fn in_u(coeffs: &[ExactInt], u_order: usize) -> Self {
        let mut s = Series::zero(0, u_order);
        for (j, c) in coeffs.iter().enumerate().take(u_order + 1) {
            s.set(0, j, c.clone());
        }
        s
    }

    pub fn t_order(&self) -> usize {
        self.t_order
    }

    pub fn u_order(&self) -> usize {
        self.u_order
    }

    fn idx(&self, i: usize, j: usize) -> usize {
        i * (self.u_order + 1) + j
    }

    pub fn coeff(&self, i: usize, j: usize) -> &ExactInt {
        &self.coeffs[self.idx(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, c: ExactInt) {
        let k = self.idx(i, j);
        self.coeffs[k] = c;
    }

    /// Coefficients of `t^0 .. t^T` when `u_order == 0`, or of `u^0 .. u^U`
    /// when `t_order == 0`.
    pub fn univariate_coeffs(&self) -> Vec<ExactInt> {
        assert!(
            self.t_order == 0 || self.u_order == 0,
            "not a univariate series"
        );
        self.coeffs.clone()
    }

    /// Re-windows to `(t_order, u_order)`, dropping or zero-filling.
    pub fn with_orders(&self, t_order: usize, u_order: usize) -> Self {
        let mut s = Series::zero(t_order, u_order);
        for i in 0..=t_order.min(self.t_order) {
            for j in 0..=u_order.min(self.u_order) {
                s.set(i, j, self.coeff(i, j).clone());
            }
        }
        s
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &ExactInt) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
            ..self.clone()
        }
    }

    /// Multiplies by `t^a u^b`.
    pub fn shift(&self, a: usize, b: usize) -> Self {
        let mut s = Series::zero(self.t_order, self.u_order);
        for i in a..=self.t_order {
            for j in b..=self.u_order {
                s.set(i, j, self.coeff(i - a, j - b).clone());
            }
        }
        s
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Series::one(self.t_order, self.u_order);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    fn assert_same_window(&self, other: &Series) {
        assert_eq!(
            (self.t_order, self.u_order),
            (other.t_order, other.u_order),
            "series windows differ"
        );
    }
}

impl Add for &Series {
    type Output = Series;

    fn add(self, rhs: &Series) -> Series {
        self.assert_same_window(rhs);
        Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
            ..self.clone()
        }
    }
}

impl Sub for &Series {
    type Output = Series;

    fn sub(self, rhs: &Series) -> Series {
        self.assert_same_window(rhs);
        Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
            ..self.clone()
        }
    }
}

impl Neg for &Series {
    type Output = Series;

    fn neg(self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
            ..self.clone()
        }
    }
}

impl Mul for &Series {
    type Output = Series;

    fn mul(self, rhs: &Series) -> Series {
        self.assert_same_window(rhs);
        let (t, u) = (self.t_order, self.u_order);
        let mut out = Series::zero(t, u);
        for i1 in 0..=t {
            for j1 in 0..=u {
                let a = self.coeff(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..=t - i1 {
                    for j2 in 0..=u - j1 {
                        let b = rhs.coeff(i2, j2);
                        if !b.is_zero() {
                            let k = out.idx(i1 + i2, j1 + j2);
                            out.coeffs[k] += a * b;
                        }
                    }
                }
            }
        }
        out
    }
}

/// `1/(1-t)^p = sum_j C(p+j-1, j) t^j`, up to `t^T`.
pub fn expand_inv_one_minus_t_pow(p: usize, t_order: usize) -> Series {
    let coeffs: Vec<ExactInt> = (0..=t_order as i64)
        .map(|j| binomial(p as i64 + j - 1, j))
        .collect();
    Series::in_t(&coeffs, t_order)
}

/// `(1+u^2)^(-K) = sum_h (-1)^h C(K+h-1, h) u^(2h)`, up to `u^U`.
pub fn expand_inv_one_plus_u2_pow(k: usize, u_order: usize) -> Series {
    let mut s = Series::zero(0, u_order);
    for h in 0..=u_order / 2 {
        let c = binomial(k as i64 + h as i64 - 1, h as i64);
        s.set(0, 2 * h, if h % 2 == 0 { c } else { -c });
    }
    s
}

/// `(1+u)^e` in the `(0, U)` window.
fn one_plus_u_pow(e: usize, u_order: usize) -> Series {
    let coeffs: Vec<ExactInt> = (0..=u_order as i64)
        .map(|j| binomial(e as i64, j))
        .collect();
    Series::in_u(&coeffs, u_order)
}

/// Column generating function `(1+u)^m (1+u^2)^(-C(m+1,2))` up to `u^U`.
pub fn column_gf(m: usize, u_order: usize) -> Series {
    &one_plus_u_pow(m, u_order) * &expand_inv_one_plus_u2_pow(m * (m + 1) / 2, u_order)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoefficientMismatch {
    pub t_degree: usize,
    pub u_degree: usize,
    pub lhs: String,
    pub rhs: String,
}

/// Left side `sum_{n<=U} F_n(t) u^n / (1-t)^(n+1)` on the `(T, U)` window.
pub fn gf_identity_lhs(u_order: usize, t_order: usize) -> Series {
    let f = SignedEulerTable::new(u_order);
    let mut lhs = Series::zero(t_order, u_order);
    for n in 0..=u_order {
        let poly = Series::in_t(f.row(n), t_order);
        let term = &poly * &expand_inv_one_minus_t_pow(n + 1, t_order);
        lhs = &lhs + &term.with_orders(t_order, u_order).shift(0, n);
    }
    lhs
}

/// Right side `sum_{m<=T} t^m (1+u)^(m+1) / (1+u^2)^C(m+2,2)` on the
/// `(T, U)` window.
pub fn gf_identity_rhs(u_order: usize, t_order: usize) -> Series {
    let mut rhs = Series::zero(t_order, u_order);
    for m in 0..=t_order {
        let column = &one_plus_u_pow(m + 1, u_order)
            * &expand_inv_one_plus_u2_pow((m + 1) * (m + 2) / 2, u_order);
        rhs = &rhs + &column.with_orders(t_order, u_order).shift(m, 0);
    }
    rhs
}

/// All coefficients `t^i u^j`, `i <= T`, `j <= U`, where the two sides of
/// the bivariate generating-function identity differ. Terms with `n > U`
/// on the left only reach `u`-degrees above `U`, and terms with `m > T` on
/// the right only reach `t`-degrees above `T`, so the comparison is exact.
pub fn verify_gf_identity(u_order: usize, t_order: usize) -> Vec<CoefficientMismatch> {
    let lhs = gf_identity_lhs(u_order, t_order);
    let rhs = gf_identity_rhs(u_order, t_order);
    mismatches(&lhs, &rhs)
}

/// Checks `t F_n(t) / (1-t)^(n+1) = sum_m â(n,m) t^m` up to `t^T`.
/// Meaningful for `n >= 1` only: at `n = 0` the right side is `1/(1-t)`.
pub fn verify_row_gf(n: usize, t_order: usize) -> Vec<CoefficientMismatch> {
    let f = SignedEulerTable::new(n);
    let lhs = (&Series::in_t(f.row(n), t_order) * &expand_inv_one_minus_t_pow(n + 1, t_order))
        .shift(1, 0);
    let row: Vec<ExactInt> = (0..=t_order)
        .map(|m| a_hat_route(n, m, AHatRoute::Alternating))
        .collect();
    mismatches(&lhs, &Series::in_t(&row, t_order))
}

fn mismatches(lhs: &Series, rhs: &Series) -> Vec<CoefficientMismatch> {
    let mut out = Vec::new();
    for i in 0..=lhs.t_order {
        for j in 0..=lhs.u_order {
            if lhs.coeff(i, j) != rhs.coeff(i, j) {
                out.push(CoefficientMismatch {
                    t_degree: i,
                    u_degree: j,
                    lhs: lhs.coeff(i, j).to_string(),
                    rhs: rhs.coeff(i, j).to_string(),
                });
            }
        }
    }
    out
}
