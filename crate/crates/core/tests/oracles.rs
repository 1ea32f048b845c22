//! Closed forms against routes that share no code with them.

use std::collections::BTreeMap;

use inveuler_core::closed::{
    a_hat, a_minus, a_plus, a_total, egf_scaled, f1_closed, f_signed, f_split, i_plus,
    involutions_count, SignedEulerTable,
};
use inveuler_core::geninv::{count_bruteforce, enumerate, fibers};
use inveuler_core::perm::{brute_involution_tables, enumerate_involutions};
use inveuler_core::{binomial, Caps, ExactInt, GeneralizedInvolution};
use num_bigint::BigInt;
use num_traits::Zero;

fn int(v: i64) -> ExactInt {
    BigInt::from(v)
}

/// Frozen rows of f(n,k), produced by a separate enumeration of the
/// involutions of S_n (filtering all permutations) with sign and rise count.
const F_ROWS: &[&[i64]] = &[
    &[1],
    &[1],
    &[-1, 1],
    &[-1, -2, 1],
    &[1, -2, -2, 1],
    &[1, 6, 0, -2, 1],
    &[-1, 3, 14, 2, -3, 1],
    &[-1, -12, -15, 12, -1, -4, 1],
];

#[test]
fn frozen_rows_match_enumeration_and_closed_form() {
    let caps = Caps::default();
    for (n, row) in F_ROWS.iter().enumerate() {
        let brute = brute_involution_tables(n, &caps).unwrap();
        let want: Vec<ExactInt> = row.iter().map(|&v| int(v)).collect();
        assert_eq!(brute.signed.entries, want, "enumeration, n={n}");
        for (k, v) in want.iter().enumerate() {
            assert_eq!(f_signed(n, k as i64), *v, "closed form ({n},{k})");
        }
    }
}

/// Generalized involutions enumerated as raw biwords: every pair of words
/// over {1..m} that passes the three defining conditions. Shares nothing
/// with the matrix enumerator.
fn biword_oracle(n: usize, m: usize) -> Vec<(Vec<u32>, Vec<u32>)> {
    let mut out = Vec::new();
    let total = (m as u64).pow(2 * n as u32);
    for code in 0..total {
        let mut c = code;
        let mut digits = Vec::with_capacity(2 * n);
        for _ in 0..2 * n {
            digits.push((c % m as u64) as u32 + 1);
            c /= m as u64;
        }
        let (top, bottom) = digits.split_at(n);
        if inveuler_core::geninv::validate(top, bottom, m) {
            out.push((top.to_vec(), bottom.to_vec()));
        }
    }
    out
}

#[test]
fn matrix_enumeration_agrees_with_raw_biwords() {
    let caps = Caps::default();
    for n in 0..=4 {
        for m in 0..=3 {
            let mut raw = biword_oracle(n, m);
            raw.sort();
            let mut via_matrix: Vec<_> = enumerate(n, m, &caps)
                .unwrap()
                .into_iter()
                .map(|g| g.biword())
                .collect();
            via_matrix.sort();
            assert_eq!(via_matrix, raw, "(n,m)=({n},{m})");
            assert_eq!(int(raw.len() as i64), a_total(n, m));
        }
    }
}

#[test]
fn round_trip_through_biword() {
    let caps = Caps::default();
    for n in 0..=8 {
        for m in 0..=6 {
            for g in enumerate(n, m, &caps).unwrap() {
                let (top, bottom) = g.biword();
                let back = GeneralizedInvolution::from_biword(&top, &bottom, m).unwrap();
                assert_eq!(back, g);
                assert_eq!(GeneralizedInvolution::from_matrix(g.to_matrix().clone()), g);
            }
        }
    }
}

#[test]
fn polarization_laws() {
    let caps = Caps::default();
    for n in 0..=8 {
        for m in 1..=6 {
            for g in enumerate(n, m, &caps).unwrap() {
                let sigma = g.polarize();
                assert!(sigma.is_involution(), "{g:?}");
                assert_eq!(g.sign(), sigma.sign_involution().unwrap(), "{g:?}");
            }
        }
    }
}

#[test]
fn fiber_law_and_completeness() {
    let caps = Caps::default();
    for n in 0..=7 {
        for m in 1..=6 {
            let fib: BTreeMap<_, _> = fibers(n, m, &caps).unwrap();
            let mut total = BigInt::zero();
            for (sigma, size) in &fib {
                let t = sigma.rises() as i64;
                assert_eq!(*size, binomial(n as i64 + m as i64 - t - 1, n as i64));
                total += size;
            }
            assert_eq!(total, a_total(n, m));
            // every involution with few enough rises shows up
            let expected_keys = enumerate_involutions(n, &caps)
                .unwrap()
                .into_iter()
                .filter(|s| s.rises() < m || n == 0)
                .count();
            assert_eq!(fib.len(), expected_keys, "(n,m)=({n},{m})");
        }
    }
}

#[test]
fn counts_match_enumeration() {
    let caps = Caps::default();
    for n in 0..=8 {
        for m in 0..=6 {
            let c = count_bruteforce(n, m, &caps).unwrap();
            assert_eq!(a_plus(n, m), int(c.even as i64));
            assert_eq!(a_minus(n, m), int(c.odd as i64));
            assert_eq!(a_total(n, m), int(c.total as i64));
            assert_eq!(a_hat(n, m).unwrap(), int(c.even as i64 - c.odd as i64));
        }
    }
}

#[test]
fn split_matches_enumeration() {
    let caps = Caps::default();
    for n in 0..=12 {
        let brute = brute_involution_tables(n, &caps).unwrap();
        for k in 0..n.max(1) as i64 {
            let (plus, minus) = f_split(n, k).unwrap();
            assert_eq!(plus, brute.even.get(k), "({n},{k})");
            assert_eq!(minus, brute.odd.get(k), "({n},{k})");
            assert_eq!(&plus - &minus, f_signed(n, k));
        }
        assert_eq!(brute.even.total() + brute.odd.total(), involutions_count(n));
        assert_eq!(brute.signed.total(), f1_closed(n));
        assert_eq!(brute.even.total(), i_plus(n));
    }
}

/// Rows n >= 3 generated forward from the recurrence, seeded only with
/// enumerated rows, must keep matching enumeration.
#[test]
fn recurrence_generates_enumerated_rows() {
    let caps = Caps::default();
    let mut rows: Vec<Vec<ExactInt>> = (0..3)
        .map(|n| brute_involution_tables(n, &caps).unwrap().signed.entries)
        .collect();
    let get = |rows: &Vec<Vec<ExactInt>>, n: i64, k: i64| -> ExactInt {
        if n < 0 || k < 0 {
            return BigInt::zero();
        }
        rows[n as usize]
            .get(k as usize)
            .cloned()
            .unwrap_or_default()
    };
    for n in 3..=12i64 {
        let mut row = Vec::new();
        for k in 0..n {
            let mut placeholder = rows.clone();
            placeholder.push(vec![BigInt::zero(); n as usize]);
            // n f(n,k) = rhs, where the rhs only involves rows n-1..n-3
            let rhs = -inveuler_core::closed::zeilberger_residual_with(n, k, |a, b| {
                get(&placeholder, a, b)
            });
            assert!((&rhs % n).is_zero(), "rhs not divisible at ({n},{k})");
            row.push(rhs / n);
        }
        let brute = brute_involution_tables(n as usize, &caps).unwrap();
        assert_eq!(row, brute.signed.entries, "n={n}");
        rows.push(row);
    }
}

/// `n! [t^n] e^t e^(-t^2/2) = sum_j (-1)^j n! / ((n-2j)! j! 2^j)`, the
/// Cauchy product of the two exponential series.
#[test]
fn egf_matches_cauchy_product() {
    let e = egf_scaled(120);
    let mut fact = vec![int(1)];
    for i in 1..=120 {
        let next = &fact[i - 1] * i;
        fact.push(next);
    }
    for n in 0..=120usize {
        let mut acc = BigInt::zero();
        for j in 0..=n / 2 {
            let term = &fact[n] / (&fact[n - 2 * j] * &fact[j] * (BigInt::from(1) << j));
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        assert_eq!(e[n], acc, "n={n}");
    }
}

#[test]
fn involution_counts_follow_their_recurrence() {
    let mut prev2 = int(1);
    let mut prev1 = int(1);
    assert_eq!(involutions_count(0), prev2);
    assert_eq!(involutions_count(1), prev1);
    for n in 2..=200usize {
        let next = &prev1 + (n - 1) * &prev2;
        assert_eq!(involutions_count(n), next, "n={n}");
        prev2 = std::mem::replace(&mut prev1, next);
    }
}

#[test]
fn large_rows_sum_to_f1() {
    let table = SignedEulerTable::new(60);
    for n in [20usize, 40, 60] {
        let total: ExactInt = table.row(n).iter().sum();
        assert_eq!(total, f1_closed(n));
    }
}
