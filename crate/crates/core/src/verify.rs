//! Range checks for every identity, each pitting an independent route
//! (usually brute-force enumeration) against the closed forms.
//!
//! Every check returns a [`Report`] that serializes to the JSON report
//! format emitted by the command-line tool.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::caps::Caps;
use crate::closed::{
    a_hat_route, a_minus, a_plus, a_total, egf_scaled, f1_closed_with, f1_recurrence, f_signed,
    f_signed_via_counts, f_split, i_plus_with, involutions_count_with, worpitzky_residual_with,
    zeilberger_residual_with, AHatRoute, SignedEulerTable,
};
use crate::error::Result;
use crate::exact::{binomial, factorial_table, ExactInt};
use crate::geninv::{count_bruteforce, fibers};
use crate::perm::brute_involution_tables;
use crate::series::verify_gf_identity;

/// Largest `n` the recurrence check may start from.
pub const ZEILBERGER_MAX_START: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Identity {
    Prop1Fibers,
    Prop2EvenCount,
    Eq34Binomial,
    Thm3Bruteforce,
    Worpitzky,
    GfIdentity,
    Zeilberger,
    F1Fourway,
    AhatRoutes,
}

impl Identity {
    pub const ALL: [Identity; 9] = [
        Identity::Prop1Fibers,
        Identity::Prop2EvenCount,
        Identity::Eq34Binomial,
        Identity::Thm3Bruteforce,
        Identity::Worpitzky,
        Identity::GfIdentity,
        Identity::Zeilberger,
        Identity::F1Fourway,
        Identity::AhatRoutes,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Prop1Fibers => "prop1-fibers",
            Identity::Prop2EvenCount => "prop2-even-count",
            Identity::Eq34Binomial => "eq34-binomial",
            Identity::Thm3Bruteforce => "thm3-bruteforce",
            Identity::Worpitzky => "worpitzky",
            Identity::GfIdentity => "gf-identity",
            Identity::Zeilberger => "zeilberger",
            Identity::F1Fourway => "f1-fourway",
            Identity::AhatRoutes => "ahat-routes",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Identity::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| format!("unknown identity `{s}`"))
    }
}

/// Optional range overrides; unset fields fall back to per-identity
/// defaults.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RangeArgs {
    pub n_max: Option<usize>,
    pub m_max: Option<usize>,
    pub s_max: Option<usize>,
    pub u_max: Option<usize>,
    pub t_max: Option<usize>,
    /// For `f1-fourway`: largest `n` for the comparison with `sum_k f(n,k)`.
    pub sum_n_max: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub check: &'static str,
    pub point: Vec<i64>,
    pub left: String,
    pub right: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub identity: Identity,
    pub range: BTreeMap<&'static str, usize>,
    pub status: Status,
    pub checked: u64,
    pub counterexamples: Vec<Counterexample>,
    /// Smallest `n` from which the recurrence holds for every `k`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n0: Option<usize>,
    /// Points outside the asserted range that fail, reported for reference.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub excluded: Vec<Counterexample>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn is_ok(&self) -> bool {
        self.status == Status::Ok
    }
}

#[derive(Default)]
struct Tally {
    checked: u64,
    counterexamples: Vec<Counterexample>,
}

impl Tally {
    fn compare(&mut self, check: &'static str, point: &[i64], left: &ExactInt, right: &ExactInt) {
        self.checked += 1;
        if left != right {
            self.counterexamples.push(Counterexample {
                check,
                point: point.to_vec(),
                left: left.to_string(),
                right: right.to_string(),
            });
        }
    }

    fn fail(&mut self, check: &'static str, point: &[i64], left: String, right: &str) {
        self.checked += 1;
        self.counterexamples.push(Counterexample {
            check,
            point: point.to_vec(),
            left,
            right: right.into(),
        });
    }
}

pub fn run(identity: Identity, range: &RangeArgs, caps: &Caps) -> Result<Report> {
    let start = Instant::now();
    let mut extra = Extra::default();
    let (bounds, tally) = match identity {
        Identity::Prop1Fibers => {
            let (n_max, m_max) = (range.n_max.unwrap_or(7), range.m_max.unwrap_or(6));
            let b = bounds(&[("n_max", n_max), ("m_min", 1), ("m_max", m_max)]);
            (b, prop1_fibers(n_max, m_max, caps)?)
        }
        Identity::Prop2EvenCount => {
            let (n_max, m_max) = (range.n_max.unwrap_or(8), range.m_max.unwrap_or(6));
            let b = bounds(&[("n_max", n_max), ("m_max", m_max)]);
            (b, prop2_even_count(n_max, m_max, caps)?)
        }
        Identity::Eq34Binomial => {
            let (n_max, m_max) = (range.n_max.unwrap_or(10), range.m_max.unwrap_or(10));
            let b = bounds(&[("n_max", n_max), ("m_max", m_max)]);
            (b, eq34_binomial(n_max, m_max))
        }
        Identity::Thm3Bruteforce => {
            let n_max = range.n_max.unwrap_or(12);
            (bounds(&[("n_max", n_max)]), thm3_bruteforce(n_max, caps)?)
        }
        Identity::Worpitzky => {
            let (n_max, s_max) = (range.n_max.unwrap_or(20), range.s_max.unwrap_or(20));
            let b = bounds(&[
                ("n_min", 1),
                ("n_max", n_max),
                ("s_min", 1),
                ("s_max", s_max),
            ]);
            (b, worpitzky(n_max, s_max))
        }
        Identity::GfIdentity => {
            let (u_max, t_max) = (range.u_max.unwrap_or(16), range.t_max.unwrap_or(16));
            let b = bounds(&[("u_max", u_max), ("t_max", t_max)]);
            (b, gf_identity(u_max, t_max))
        }
        Identity::Zeilberger => {
            let n_max = range.n_max.unwrap_or(200);
            let b = bounds(&[("n_max", n_max)]);
            (b, zeilberger(n_max, &mut extra))
        }
        Identity::F1Fourway => {
            let n_max = range.n_max.unwrap_or(500);
            let sum_n_max = range.sum_n_max.unwrap_or(60).min(n_max);
            let b = bounds(&[("n_max", n_max), ("sum_n_max", sum_n_max)]);
            (b, f1_fourway(n_max, sum_n_max))
        }
        Identity::AhatRoutes => {
            let (n_max, m_max) = (range.n_max.unwrap_or(60), range.m_max.unwrap_or(60));
            let b = bounds(&[("n_max", n_max), ("m_max", m_max)]);
            (b, ahat_routes(n_max, m_max))
        }
    };
    let status = if tally.counterexamples.is_empty() && extra.ok {
        Status::Ok
    } else {
        Status::Fail
    };
    Ok(Report {
        identity,
        range: bounds,
        status,
        checked: tally.checked,
        counterexamples: tally.counterexamples,
        n0: extra.n0,
        excluded: extra.excluded,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Runs every identity with default ranges (plus any overrides), in the
/// order of [`Identity::ALL`].
pub fn run_all(range: &RangeArgs, caps: &Caps) -> Result<Vec<Report>> {
    Identity::ALL
        .iter()
        .map(|&id| run(id, range, caps))
        .collect()
}

struct Extra {
    ok: bool,
    n0: Option<usize>,
    excluded: Vec<Counterexample>,
}

impl Default for Extra {
    fn default() -> Self {
        Extra {
            ok: true,
            n0: None,
            excluded: Vec::new(),
        }
    }
}

fn bounds(pairs: &[(&'static str, usize)]) -> BTreeMap<&'static str, usize> {
    pairs.iter().copied().collect()
}

fn big(v: impl Into<BigInt>) -> ExactInt {
    v.into()
}

/// Every polarization fiber has size `C(n+m-t-1, n)`, and the fibers
/// partition all generalized involutions.
fn prop1_fibers(n_max: usize, m_max: usize, caps: &Caps) -> Result<Tally> {
    let mut tally = Tally::default();
    for n in 0..=n_max {
        for m in 1..=m_max {
            let fib = fibers(n, m, caps)?;
            let mut total = BigInt::zero();
            for (sigma, size) in &fib {
                let point = [n as i64, m as i64];
                if !sigma.is_involution() {
                    tally.fail(
                        "image is an involution",
                        &point,
                        sigma.to_string(),
                        "involution",
                    );
                }
                let t = sigma.rises() as i64;
                let expected = binomial(n as i64 + m as i64 - t - 1, n as i64);
                tally.compare("fiber size", &point, size, &expected);
                total += size;
            }
            tally.compare(
                "fibers partition",
                &[n as i64, m as i64],
                &total,
                &a_total(n, m),
            );
        }
    }
    Ok(tally)
}

/// Closed-form even/total/signed counts against enumeration.
fn prop2_even_count(n_max: usize, m_max: usize, caps: &Caps) -> Result<Tally> {
    let mut tally = Tally::default();
    for n in 0..=n_max {
        for m in 0..=m_max {
            let counts = count_bruteforce(n, m, caps)?;
            let point = [n as i64, m as i64];
            tally.compare("a_plus", &point, &a_plus(n, m), &big(counts.even));
            tally.compare("a_total", &point, &a_total(n, m), &big(counts.total));
            let signed = big(counts.even) - big(counts.odd);
            tally.compare(
                "a_hat",
                &point,
                &a_hat_route(n, m, AHatRoute::Alternating),
                &signed,
            );
        }
    }
    Ok(tally)
}

/// `a±(n,m) = sum_k C(n+k,k) f±(n,m-k-1)` and the same for `â`, on
/// `0 <= n <= n_max`, `0 <= m <= m_max` except `(0,0)` where the sums are
/// empty but the counts equal 1.
fn eq34_binomial(n_max: usize, m_max: usize) -> Tally {
    let mut tally = Tally::default();
    for n in 0..=n_max {
        let k_top = m_max.max(n) as i64;
        let mut split = Vec::with_capacity(k_top as usize);
        for k in 0..k_top {
            match f_split(n, k) {
                Ok(pair) => split.push(pair),
                Err(err) => {
                    tally.fail("f_split", &[n as i64, k], err.to_string(), "nonnegative");
                    split.push((BigInt::zero(), BigInt::zero()));
                }
            }
        }
        let signed: Vec<ExactInt> = (0..k_top).map(|k| f_signed(n, k)).collect();
        for m in 0..=m_max {
            if n == 0 && m == 0 {
                continue;
            }
            let mut plus = BigInt::zero();
            let mut minus = BigInt::zero();
            let mut hat = BigInt::zero();
            for k in 0..m {
                let c = binomial((n + k) as i64, k as i64);
                let idx = m - k - 1;
                plus += &c * &split[idx].0;
                minus += &c * &split[idx].1;
                hat += &c * &signed[idx];
            }
            let point = [n as i64, m as i64];
            tally.compare("a_plus", &point, &a_plus(n, m), &plus);
            tally.compare("a_minus", &point, &a_minus(n, m), &minus);
            tally.compare(
                "a_hat",
                &point,
                &a_hat_route(n, m, AHatRoute::Alternating),
                &hat,
            );
        }
    }
    tally
}

/// Closed-form `f`, both inversion forms and the even/odd split against the
/// enumerated involution tables, including a margin of out-of-range `k`.
fn thm3_bruteforce(n_max: usize, caps: &Caps) -> Result<Tally> {
    let mut tally = Tally::default();
    for n in 0..=n_max {
        let brute = brute_involution_tables(n, caps)?;
        for k in -1..=n as i64 {
            let point = [n as i64, k];
            let f = f_signed(n, k);
            tally.compare("f_signed", &point, &f, &brute.signed.get(k));
            tally.compare(
                "f_signed_via_counts",
                &point,
                &f_signed_via_counts(n, k),
                &f,
            );
            match f_split(n, k) {
                Ok((plus, minus)) => {
                    tally.compare("f_plus", &point, &plus, &brute.even.get(k));
                    tally.compare("f_minus", &point, &minus, &brute.odd.get(k));
                }
                Err(err) => tally.fail("f_split", &point, err.to_string(), "nonnegative"),
            }
        }
    }
    Ok(tally)
}

fn worpitzky(n_max: usize, s_max: usize) -> Tally {
    let mut tally = Tally::default();
    let f = SignedEulerTable::new(n_max);
    for n in 1..=n_max {
        for s in 1..=s_max {
            let residual = worpitzky_residual_with(n, s, |n, k| f.get(n as i64, k));
            tally.compare(
                "residual",
                &[n as i64, s as i64],
                &residual,
                &BigInt::zero(),
            );
        }
    }
    tally
}

fn gf_identity(u_max: usize, t_max: usize) -> Tally {
    let bad = verify_gf_identity(u_max, t_max);
    Tally {
        checked: ((u_max + 1) * (t_max + 1)) as u64,
        counterexamples: bad
            .into_iter()
            .map(|c| Counterexample {
                check: "coefficient",
                point: vec![c.t_degree as i64, c.u_degree as i64],
                left: c.lhs,
                right: c.rhs,
            })
            .collect(),
    }
}

/// Evaluates the recurrence for `3 <= n <= n_max` and `-1 <= k <= n+1`
/// (outside that band every term vanishes), then finds the least `n0`
/// such that all residuals with `n >= n0` are zero. Fails if
/// `n0 > ZEILBERGER_MAX_START`.
fn zeilberger(n_max: usize, extra: &mut Extra) -> Tally {
    let f = SignedEulerTable::new(n_max);
    let mut failures: Vec<Counterexample> = Vec::new();
    let mut checked = 0;
    for n in 3..=n_max as i64 {
        for k in -1..=n + 1 {
            checked += 1;
            let r = zeilberger_residual_with(n, k, |a, b| f.get(a, b));
            if !r.is_zero() {
                failures.push(Counterexample {
                    check: "residual",
                    point: vec![n, k],
                    left: r.to_string(),
                    right: "0".into(),
                });
            }
        }
    }
    let n0 = failures
        .iter()
        .map(|c| c.point[0] as usize + 1)
        .max()
        .unwrap_or(3);
    extra.n0 = Some(n0);
    extra.excluded = failures;
    let mut tally = Tally {
        checked,
        ..Tally::default()
    };
    if n0 > ZEILBERGER_MAX_START {
        extra.ok = false;
        let first_bad: Vec<_> = extra
            .excluded
            .iter()
            .filter(|c| c.point[0] as usize >= ZEILBERGER_MAX_START)
            .cloned()
            .collect();
        tally.counterexamples = first_bad;
    }
    tally
}

fn f1_fourway(n_max: usize, sum_n_max: usize) -> Tally {
    let mut tally = Tally::default();
    let fact = factorial_table(n_max);
    let rec = f1_recurrence(n_max);
    let egf = egf_scaled(n_max);
    for n in 0..=n_max {
        let point = [n as i64];
        let closed = f1_closed_with(n, &fact);
        let counts = 2 * i_plus_with(n, &fact) - involutions_count_with(n, &fact);
        tally.compare("recurrence", &point, &closed, &rec[n]);
        tally.compare("egf", &point, &closed, &egf[n]);
        tally.compare("2 i_plus - |I_n|", &point, &closed, &counts);
    }
    let f = SignedEulerTable::new(sum_n_max);
    for n in 0..=sum_n_max {
        let total: ExactInt = f.row(n).iter().sum();
        tally.compare(
            "sum_k f(n,k)",
            &[n as i64],
            &f1_closed_with(n, &fact),
            &total,
        );
    }
    tally
}

fn ahat_routes(n_max: usize, m_max: usize) -> Tally {
    let mut tally = Tally::default();
    for n in 0..=n_max {
        for m in 0..=m_max {
            tally.compare(
                "2 a_plus - a_total = alternating",
                &[n as i64, m as i64],
                &a_hat_route(n, m, AHatRoute::EvenMinusTotal),
                &a_hat_route(n, m, AHatRoute::Alternating),
            );
        }
    }
    tally
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_names_round_trip() {
        for id in Identity::ALL {
            assert_eq!(id.name().parse::<Identity>().unwrap(), id);
            assert_eq!(
                serde_json::to_value(id).unwrap(),
                serde_json::Value::String(id.name().into())
            );
        }
        assert!("bogus".parse::<Identity>().is_err());
    }

    #[test]
    fn small_ranges_pass() {
        let caps = Caps::default();
        let small = RangeArgs {
            n_max: Some(4),
            m_max: Some(3),
            s_max: Some(4),
            u_max: Some(4),
            t_max: Some(4),
            sum_n_max: Some(4),
        };
        for id in Identity::ALL {
            let report = run(id, &small, &caps).unwrap();
            assert!(report.is_ok(), "{id}: {:?}", report.counterexamples);
            assert!(report.checked > 0, "{id}");
        }
    }

    #[test]
    fn caps_surface_as_errors() {
        let caps = Caps {
            geninv_n: 3,
            ..Caps::default()
        };
        let range = RangeArgs {
            n_max: Some(4),
            ..RangeArgs::default()
        };
        assert!(run(Identity::Prop2EvenCount, &range, &caps).is_err());
    }

    #[test]
    fn tally_records_mismatch() {
        let mut t = Tally::default();
        t.compare("x", &[1, 2], &big(3), &big(3));
        t.compare("x", &[1, 3], &big(3), &big(4));
        assert_eq!(t.checked, 2);
        assert_eq!(t.counterexamples.len(), 1);
        assert_eq!(t.counterexamples[0].point, vec![1, 3]);
    }
}
