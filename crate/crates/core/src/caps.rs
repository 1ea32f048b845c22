//! Size limits for the brute-force enumerators.
//!
//! Defaults keep the whole oracle suite in the seconds range. Each limit can
//! be overridden through an environment variable, read by [`Caps::from_env`].

use crate::error::{Error, Result};

pub const ENV_INVOLUTION_N: &str = "INVEULER_CAP_INVOLUTION_N";
pub const ENV_PERMUTATION_N: &str = "INVEULER_CAP_PERMUTATION_N";
pub const ENV_GENINV_N: &str = "INVEULER_CAP_GENINV_N";
pub const ENV_GENINV_M: &str = "INVEULER_CAP_GENINV_M";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest `n` for which all involutions of `S_n` are enumerated.
    pub involution_n: usize,
    /// Largest `n` for which all of `S_n` is enumerated.
    pub permutation_n: usize,
    /// Largest length of enumerated generalized involutions.
    pub geninv_n: usize,
    /// Largest alphabet size of enumerated generalized involutions.
    pub geninv_m: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            involution_n: 14,
            permutation_n: 10,
            geninv_n: 10,
            geninv_m: 8,
        }
    }
}

impl Caps {
    /// Defaults, overridden by any of the `INVEULER_CAP_*` variables that
    /// parse as an unsigned integer.
    pub fn from_env() -> Self {
        let read = |key: &str, default: usize| {
            std::env::var(key)
                .ok()
                .and_then(|v| v.trim().parse().ok())
                .unwrap_or(default)
        };
        let d = Caps::default();
        Caps {
            involution_n: read(ENV_INVOLUTION_N, d.involution_n),
            permutation_n: read(ENV_PERMUTATION_N, d.permutation_n),
            geninv_n: read(ENV_GENINV_N, d.geninv_n),
            geninv_m: read(ENV_GENINV_M, d.geninv_m),
        }
    }

    pub(crate) fn check_involutions(&self, n: usize) -> Result<()> {
        check("involution length n", n, self.involution_n)
    }

    pub(crate) fn check_permutations(&self, n: usize) -> Result<()> {
        check("permutation length n", n, self.permutation_n)
    }

    pub(crate) fn check_geninv(&self, n: usize, m: usize) -> Result<()> {
        check("generalized involution length n", n, self.geninv_n)?;
        check("alphabet size m", m, self.geninv_m)
    }
}

fn check(what: &'static str, value: usize, cap: usize) -> Result<()> {
    if value > cap {
        Err(Error::CapExceeded { what, value, cap })
    } else {
        Ok(())
    }
}
