//! Generalized involutions: biwords whose biletter multiset is symmetric,
//! with a weakly increasing top row and, inside each run of equal top
//! symbols, a weakly decreasing bottom row.
//!
//! A generalized involution of length `n` over `{1..m}` is stored as the
//! symmetric `m x m` matrix `M` where `M[a][b]` counts biletters with top
//! `a` and bottom `b`. The sorting rules make the biword a function of `M`,
//! so the matrix is the canonical form and the biword a derived view. The
//! diagonal entry `M[a][a]` is the multiplicity of the repetition `a`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::exact::{sign_of, ExactInt};
use crate::perm::Permutation;

/// Symmetric nonnegative integer matrix, indexed from 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SymMatrix {
    size: usize,
    entries: Vec<u32>,
}

impl SymMatrix {
    pub fn zeros(size: usize) -> Self {
        SymMatrix {
            size,
            entries: vec![0; size * size],
        }
    }

    /// Rejects ragged, asymmetric or negative input.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let size = rows.len();
        let mut out = SymMatrix::zeros(size);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != size {
                return Err(Error::InvalidMatrix(format!(
                    "row {i} has length {} in a {size}x{size} matrix",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v < 0 {
                    return Err(Error::InvalidMatrix(format!(
                        "negative entry {v} at ({i},{j})"
                    )));
                }
                if v != rows[j][i] {
                    return Err(Error::InvalidMatrix(format!("asymmetric at ({i},{j})")));
                }
                out.entries[i * size + j] = u32::try_from(v)
                    .map_err(|_| Error::InvalidMatrix(format!("entry {v} too large")))?;
            }
        }
        Ok(out)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.size + j]
    }

    fn set_pair(&mut self, i: usize, j: usize, v: u32) {
        self.entries[i * self.size + j] = v;
        self.entries[j * self.size + i] = v;
    }

    /// Sum of all entries, i.e. the length of the biword.
    pub fn weight(&self) -> usize {
        self.entries.iter().map(|&v| v as usize).sum()
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.entries
            .chunks(self.size.max(1))
            .take(self.size)
            .map(<[u32]>::to_vec)
            .collect()
    }
}

/// Checks the three defining conditions on a raw biword over `{1..m}`.
pub fn validate(top: &[u32], bottom: &[u32], alphabet_size: usize) -> bool {
    biword_to_matrix(top, bottom, alphabet_size).is_ok()
}

fn biword_to_matrix(top: &[u32], bottom: &[u32], m: usize) -> Result<SymMatrix> {
    let invalid = |msg: String| Err(Error::InvalidGeneralizedInvolution(msg));
    if top.len() != bottom.len() {
        return invalid(format!("rows of length {} and {}", top.len(), bottom.len()));
    }
    let in_alphabet = |s: u32| s >= 1 && s as usize <= m;
    if let Some(&s) = top.iter().chain(bottom).find(|&&s| !in_alphabet(s)) {
        return invalid(format!("symbol {s} outside 1..={m}"));
    }
    for i in 1..top.len() {
        if top[i - 1] > top[i] {
            return invalid(format!("top row decreases at position {}", i + 1));
        }
        if top[i - 1] == top[i] && bottom[i - 1] < bottom[i] {
            return invalid(format!(
                "bottom row increases inside a tie at position {}",
                i + 1
            ));
        }
    }
    let mut counts = vec![0u32; m * m];
    for (&x, &y) in top.iter().zip(bottom) {
        counts[(x as usize - 1) * m + (y as usize - 1)] += 1;
    }
    for a in 0..m {
        for b in a + 1..m {
            if counts[a * m + b] != counts[b * m + a] {
                return invalid(format!(
                    "biletter ({},{}) occurs {} times but ({},{}) occurs {} times",
                    a + 1,
                    b + 1,
                    counts[a * m + b],
                    b + 1,
                    a + 1,
                    counts[b * m + a]
                ));
            }
        }
    }
    Ok(SymMatrix {
        size: m,
        entries: counts,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GeneralizedInvolution {
    matrix: SymMatrix,
}

impl GeneralizedInvolution {
    pub fn from_matrix(matrix: SymMatrix) -> Self {
        GeneralizedInvolution { matrix }
    }

    pub fn from_biword(top: &[u32], bottom: &[u32], alphabet_size: usize) -> Result<Self> {
        biword_to_matrix(top, bottom, alphabet_size).map(Self::from_matrix)
    }

    pub fn to_matrix(&self) -> &SymMatrix {
        &self.matrix
    }

    pub fn alphabet_size(&self) -> usize {
        self.matrix.size
    }

    pub fn len(&self) -> usize {
        self.matrix.weight()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Top and bottom rows in the unique admissible order.
    pub fn biword(&self) -> (Vec<u32>, Vec<u32>) {
        let m = self.matrix.size;
        let mut top = Vec::with_capacity(self.len());
        let mut bottom = Vec::with_capacity(self.len());
        for a in 0..m {
            for b in (0..m).rev() {
                for _ in 0..self.matrix.get(a, b) {
                    top.push(a as u32 + 1);
                    bottom.push(b as u32 + 1);
                }
            }
        }
        (top, bottom)
    }

    pub fn top(&self) -> Vec<u32> {
        self.biword().0
    }

    pub fn bottom(&self) -> Vec<u32> {
        self.biword().1
    }

    /// Number of repetitions of odd multiplicity.
    pub fn gfix(&self) -> usize {
        (0..self.matrix.size)
            .filter(|&a| self.matrix.get(a, a) % 2 == 1)
            .count()
    }

    /// `+1` iff `(n - gfix) / 2` is even.
    pub fn sign(&self) -> i32 {
        let n = self.len();
        let gfix = self.gfix();
        debug_assert_eq!((n - gfix) % 2, 0);
        sign_of(((n - gfix) / 2) % 2 == 1)
    }

    /// The polarization: replace each bottom symbol by its rank, where among
    /// equal symbols the later occurrence counts as the smaller one.
    pub fn polarize(&self) -> Permutation {
        let bottom = self.bottom();
        let mut order: Vec<usize> = (0..bottom.len()).collect();
        order.sort_by(|&i, &j| bottom[i].cmp(&bottom[j]).then(j.cmp(&i)));
        let mut word = vec![0u32; bottom.len()];
        for (rank, &i) in order.iter().enumerate() {
            word[i] = rank as u32 + 1;
        }
        Permutation::from_word_unchecked(word)
    }
}

/// Visits every symmetric `m x m` matrix of weight `n`, filling the upper
/// triangle row by row. A diagonal cell contributes its value to the weight,
/// an off-diagonal cell twice its value.
pub(crate) fn for_each_matrix(n: usize, m: usize, mut visit: impl FnMut(&SymMatrix)) {
    let cells: Vec<(usize, usize)> = (0..m).flat_map(|i| (i..m).map(move |j| (i, j))).collect();

    fn rec(
        cells: &[(usize, usize)],
        remaining: usize,
        mat: &mut SymMatrix,
        visit: &mut impl FnMut(&SymMatrix),
    ) {
        let Some((&(i, j), rest)) = cells.split_first() else {
            if remaining == 0 {
                visit(mat);
            }
            return;
        };
        let unit = if i == j { 1 } else { 2 };
        for v in 0..=remaining / unit {
            mat.set_pair(i, j, v as u32);
            rec(rest, remaining - v * unit, mat, visit);
        }
        mat.set_pair(i, j, 0);
    }

    let mut mat = SymMatrix::zeros(m);
    rec(&cells, n, &mut mat, &mut visit);
}

/// Every generalized involution of length `n` over `{1..m}`, exactly once.
pub fn enumerate(n: usize, m: usize, caps: &Caps) -> Result<Vec<GeneralizedInvolution>> {
    caps.check_geninv(n, m)?;
    let mut out = Vec::new();
    for_each_matrix(n, m, |mat| {
        out.push(GeneralizedInvolution::from_matrix(mat.clone()))
    });
    Ok(out)
}

/// Enumerated counts of all, even and odd generalized involutions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignCounts {
    pub total: u64,
    pub even: u64,
    pub odd: u64,
}

pub fn count_bruteforce(n: usize, m: usize, caps: &Caps) -> Result<SignCounts> {
    caps.check_geninv(n, m)?;
    let mut counts = SignCounts {
        total: 0,
        even: 0,
        odd: 0,
    };
    for_each_matrix(n, m, |mat| {
        counts.total += 1;
        if GeneralizedInvolution::from_matrix(mat.clone()).sign() > 0 {
            counts.even += 1;
        } else {
            counts.odd += 1;
        }
    });
    Ok(counts)
}

/// Even minus odd generalized involutions, by enumeration.
pub fn a_hat_bruteforce(n: usize, m: usize, caps: &Caps) -> Result<ExactInt> {
    let c = count_bruteforce(n, m, caps)?;
    Ok(BigInt::from(c.even) - BigInt::from(c.odd))
}

/// Generalized involutions of length `n` over `{1..m}` grouped by their
/// polarization.
pub fn fibers(n: usize, m: usize, caps: &Caps) -> Result<BTreeMap<Permutation, ExactInt>> {
    caps.check_geninv(n, m)?;
    let mut out: BTreeMap<Permutation, ExactInt> = BTreeMap::new();
    for_each_matrix(n, m, |mat| {
        let sigma = GeneralizedInvolution::from_matrix(mat.clone()).polarize();
        *out.entry(sigma).or_default() += 1;
    });
    Ok(out)
}
