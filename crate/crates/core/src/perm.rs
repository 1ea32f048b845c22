//! Permutations in one-line notation, their rise/descent/fixed-point/sign
//! statistics, and exhaustive enumeration of `S_n` and of its involutions.
//!
//! The enumerators double as the brute-force oracles for every
//! Eulerian-type coefficient table in the crate.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::exact::{sign_of, ExactInt};

/// A permutation of `{1, ..., n}` in one-line notation. `n = 0` is allowed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(word: Vec<u32>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n];
        for &v in &word {
            let idx = (v as usize).wrapping_sub(1);
            if idx >= n || seen[idx] {
                return Err(Error::NotAPermutation(word));
            }
            seen[idx] = true;
        }
        Ok(Permutation(word))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    pub(crate) fn from_word_unchecked(word: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok());
        Permutation(word)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn word(&self) -> &[u32] {
        &self.0
    }

    pub fn into_word(self) -> Vec<u32> {
        self.0
    }

    pub fn rises(&self) -> usize {
        rises(&self.0)
    }

    pub fn descents(&self) -> usize {
        descents(&self.0)
    }

    pub fn fixed_points(&self) -> usize {
        fixed_points(&self.0)
    }

    pub fn is_involution(&self) -> bool {
        is_involution(&self.0)
    }

    /// `(-1)^inv(p)`.
    pub fn sign(&self) -> i32 {
        sign_of(inversions(&self.0) % 2 == 1)
    }

    /// `(-1)^((n - fix(p)) / 2)`, valid only for involutions.
    pub fn sign_involution(&self) -> Result<i32> {
        if !self.is_involution() {
            return Err(Error::NotAnInvolution(self.to_string()));
        }
        Ok(involution_sign(&self.0))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

fn rises(w: &[u32]) -> usize {
    w.windows(2).filter(|p| p[0] < p[1]).count()
}

fn descents(w: &[u32]) -> usize {
    w.windows(2).filter(|p| p[0] > p[1]).count()
}

fn fixed_points(w: &[u32]) -> usize {
    w.iter()
        .enumerate()
        .filter(|&(i, &v)| v as usize == i + 1)
        .count()
}

fn is_involution(w: &[u32]) -> bool {
    w.iter()
        .enumerate()
        .all(|(i, &v)| w[v as usize - 1] as usize == i + 1)
}

fn inversions(w: &[u32]) -> usize {
    let mut count = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                count += 1;
            }
        }
    }
    count
}

fn involution_sign(w: &[u32]) -> i32 {
    let transpositions = (w.len() - fixed_points(w)) / 2;
    sign_of(transpositions % 2 == 1)
}

/// Calls `visit` on every involution of `S_n` in lexicographic order of the
/// one-line word. No cap is applied.
pub(crate) fn for_each_involution(n: usize, mut visit: impl FnMut(&[u32])) {
    fn rec(w: &mut [u32], visit: &mut impl FnMut(&[u32])) {
        // smallest unassigned position; everything before it is fixed
        let Some(i) = w.iter().position(|&v| v == 0) else {
            visit(w);
            return;
        };
        w[i] = i as u32 + 1;
        rec(w, visit);
        for j in i + 1..w.len() {
            if w[j] == 0 {
                w[i] = j as u32 + 1;
                w[j] = i as u32 + 1;
                rec(w, visit);
                w[j] = 0;
            }
        }
        w[i] = 0;
    }
    let mut w = vec![0u32; n];
    rec(&mut w, &mut visit);
}

/// Calls `visit` on every permutation of `S_n` in lexicographic order.
pub(crate) fn for_each_permutation(n: usize, mut visit: impl FnMut(&[u32])) {
    let mut w: Vec<u32> = (1..=n as u32).collect();
    loop {
        visit(&w);
        if !next_permutation(&mut w) {
            break;
        }
    }
}

fn next_permutation(w: &mut [u32]) -> bool {
    let n = w.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

/// Every involution of `S_n`, lexicographically ordered.
pub fn enumerate_involutions(n: usize, caps: &Caps) -> Result<Vec<Permutation>> {
    caps.check_involutions(n)?;
    let mut out = Vec::new();
    for_each_involution(n, |w| out.push(Permutation(w.to_vec())));
    Ok(out)
}

/// Every permutation of `S_n`, lexicographically ordered.
pub fn enumerate_permutations(n: usize, caps: &Caps) -> Result<Vec<Permutation>> {
    caps.check_permutations(n)?;
    let mut out = Vec::new();
    for_each_permutation(n, |w| out.push(Permutation(w.to_vec())));
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableKind {
    /// `a_{n,k}`: permutations of `S_n` with `k` descents.
    Eulerian,
    /// `b_{n,k}`: sign-weighted count of permutations of `S_n` with `k` rises.
    SignedEulerian,
    /// `f_{n,k}`: sign-weighted count of involutions with `k` rises.
    InvolutionSigned,
    /// `f+_{n,k}`: even involutions with `k` rises.
    InvolutionEven,
    /// `f-_{n,k}`: odd involutions with `k` rises.
    InvolutionOdd,
}

impl TableKind {
    fn over_involutions(self) -> bool {
        !matches!(self, TableKind::Eulerian | TableKind::SignedEulerian)
    }
}

/// Coefficients `k = 0 ..= max(n-1, 0)` of one Eulerian-type polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatTable {
    pub n: usize,
    pub kind: TableKind,
    pub entries: Vec<ExactInt>,
}

impl StatTable {
    fn zeros(n: usize, kind: TableKind) -> Self {
        StatTable {
            n,
            kind,
            entries: vec![BigInt::zero(); n.max(1)],
        }
    }

    /// Coefficient of `t^k`; zero outside the stored range.
    pub fn get(&self, k: i64) -> ExactInt {
        usize::try_from(k)
            .ok()
            .and_then(|k| self.entries.get(k))
            .cloned()
            .unwrap_or_default()
    }

    pub fn total(&self) -> ExactInt {
        self.entries.iter().sum()
    }
}

/// The signed involution table together with its even/odd split.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvolutionTables {
    pub signed: StatTable,
    pub even: StatTable,
    pub odd: StatTable,
}

/// One pass over the involutions of `S_n`, bucketed by `statistic`.
fn involution_tables_by(
    n: usize,
    caps: &Caps,
    statistic: fn(&[u32]) -> usize,
) -> Result<InvolutionTables> {
    caps.check_involutions(n)?;
    let len = n.max(1);
    let mut even = vec![0u64; len];
    let mut odd = vec![0u64; len];
    for_each_involution(n, |w| {
        let k = statistic(w);
        if involution_sign(w) > 0 {
            even[k] += 1;
        } else {
            odd[k] += 1;
        }
    });
    let to_table = |kind, counts: Vec<i128>| StatTable {
        n,
        kind,
        entries: counts.into_iter().map(BigInt::from).collect(),
    };
    let signed = even
        .iter()
        .zip(&odd)
        .map(|(&e, &o)| e as i128 - o as i128)
        .collect();
    Ok(InvolutionTables {
        signed: to_table(TableKind::InvolutionSigned, signed),
        even: to_table(
            TableKind::InvolutionEven,
            even.iter().map(|&c| c as i128).collect(),
        ),
        odd: to_table(
            TableKind::InvolutionOdd,
            odd.iter().map(|&c| c as i128).collect(),
        ),
    })
}

/// `f`, `f+` and `f-` rows for `n` by full enumeration of the involutions.
pub fn brute_involution_tables(n: usize, caps: &Caps) -> Result<InvolutionTables> {
    involution_tables_by(n, caps, rises)
}

/// Same as [`brute_involution_tables`] with descents in place of rises.
/// Only computed for comparison; nothing is asserted about it.
pub fn brute_involution_descent_tables(n: usize, caps: &Caps) -> Result<InvolutionTables> {
    involution_tables_by(n, caps, descents)
}

/// Exact coefficient table of the requested kind, by full enumeration.
pub fn brute_table(n: usize, kind: TableKind, caps: &Caps) -> Result<StatTable> {
    if kind.over_involutions() {
        let tables = brute_involution_tables(n, caps)?;
        return Ok(match kind {
            TableKind::InvolutionSigned => tables.signed,
            TableKind::InvolutionEven => tables.even,
            _ => tables.odd,
        });
    }
    caps.check_permutations(n)?;
    let mut counts = vec![0i64; n.max(1)];
    for_each_permutation(n, |w| match kind {
        TableKind::Eulerian => counts[descents(w)] += 1,
        _ => counts[rises(w)] += sign_of(inversions(w) % 2 == 1) as i64,
    });
    let mut table = StatTable::zeros(n, kind);
    for (slot, c) in table.entries.iter_mut().zip(counts) {
        *slot = BigInt::from(c);
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(w: &[u32]) -> Permutation {
        Permutation::new(w.to_vec()).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<ExactInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0]).is_err());
        assert!(Permutation::new(vec![3, 1]).is_err());
        assert!(Permutation::new(vec![]).is_ok());
    }

    #[test]
    fn statistic_examples() {
        assert_eq!(p(&[1, 3, 2]).rises(), 1);
        assert_eq!(p(&[]).rises(), 0);
        assert_eq!(p(&[4, 3, 2, 1]).rises(), 0);

        assert_eq!(p(&[1, 3, 2]).descents(), 1);
        assert_eq!(p(&[1, 2, 3, 4]).descents(), 0);
        assert_eq!(p(&[2, 1, 4, 3]).descents(), 2);

        assert_eq!(p(&[1, 2, 3]).fixed_points(), 3);
        assert_eq!(p(&[2, 1, 3]).fixed_points(), 1);
        assert_eq!(p(&[2, 1]).fixed_points(), 0);

        assert!(p(&[2, 1, 3]).is_involution());
        assert!(!p(&[2, 3, 1]).is_involution());
        assert!(p(&[]).is_involution());
    }

    #[test]
    fn sign_examples() {
        assert_eq!(p(&[1, 2, 3]).sign(), 1);
        assert_eq!(p(&[2, 1]).sign(), -1);
        assert_eq!(p(&[2, 1, 4, 3]).sign(), 1);

        assert_eq!(p(&[2, 1]).sign_involution().unwrap(), -1);
        assert_eq!(p(&[2, 1, 4, 3]).sign_involution().unwrap(), 1);
        assert_eq!(p(&[1, 2, 3, 4, 5]).sign_involution().unwrap(), 1);
        assert!(matches!(
            p(&[2, 3, 1]).sign_involution(),
            Err(Error::NotAnInvolution(_))
        ));
    }

    #[test]
    fn involutions_of_s3() {
        let got = enumerate_involutions(3, &Caps::default()).unwrap();
        let want = vec![p(&[1, 2, 3]), p(&[1, 3, 2]), p(&[2, 1, 3]), p(&[3, 2, 1])];
        assert_eq!(got, want);
        assert_eq!(
            enumerate_involutions(0, &Caps::default()).unwrap(),
            vec![p(&[])]
        );
    }

    #[test]
    fn involution_enumeration_matches_filtered_permutations() {
        let caps = Caps::default();
        for n in 0..=7 {
            let filtered: Vec<_> = enumerate_permutations(n, &caps)
                .unwrap()
                .into_iter()
                .filter(Permutation::is_involution)
                .collect();
            assert_eq!(enumerate_involutions(n, &caps).unwrap(), filtered, "n={n}");
        }
        let counts: Vec<usize> = (0..=5)
            .map(|n| enumerate_involutions(n, &caps).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 10, 26]);
    }

    #[test]
    fn caps_are_enforced() {
        let caps = Caps {
            involution_n: 4,
            permutation_n: 3,
            ..Caps::default()
        };
        assert!(matches!(
            enumerate_involutions(5, &caps),
            Err(Error::CapExceeded {
                value: 5,
                cap: 4,
                ..
            })
        ));
        assert!(brute_table(4, TableKind::Eulerian, &caps).is_err());
        assert!(brute_table(4, TableKind::InvolutionSigned, &caps).is_ok());
    }

    #[test]
    fn brute_table_examples() {
        let caps = Caps::default();
        let table = |n, kind| brute_table(n, kind, &caps).unwrap().entries;
        assert_eq!(table(3, TableKind::InvolutionSigned), ints(&[-1, -2, 1]));
        assert_eq!(table(4, TableKind::InvolutionSigned), ints(&[1, -2, -2, 1]));
        assert_eq!(table(3, TableKind::Eulerian), ints(&[1, 4, 1]));
        assert_eq!(table(3, TableKind::SignedEulerian), ints(&[-1, 0, 1]));
        // n = 0: the empty permutation, sign +1, no rises
        assert_eq!(table(0, TableKind::InvolutionSigned), ints(&[1]));
        assert_eq!(table(0, TableKind::Eulerian), ints(&[1]));
    }

    #[test]
    fn involution_split_examples() {
        let t = brute_involution_tables(4, &Caps::default()).unwrap();
        assert_eq!(t.even.get(1), BigInt::from(1));
        assert_eq!(t.odd.get(1), BigInt::from(3));
        assert_eq!(t.signed.total(), BigInt::from(-2));
    }

    #[test]
    fn descent_table_is_computed() {
        let t = brute_involution_descent_tables(4, &Caps::default()).unwrap();
        assert_eq!(t.signed.total(), BigInt::from(-2));
    }
}
