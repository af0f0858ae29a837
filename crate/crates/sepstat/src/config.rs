//! Defaults and limits for the command line. The enumeration cap can be
//! raised or lowered with `SEPSTAT_MAX_N`.

use sepstat_core::enumerate::MAX_SWEEP_N;

/// Default truncation order for `gf`.
pub const DEFAULT_ORDER: usize = 12;
/// Largest accepted truncation order.
pub const MAX_ORDER: usize = 64;
/// Default cap on exhaustive enumeration.
pub const DEFAULT_MAX_N: usize = 10;
/// Default size for `verify`.
pub const DEFAULT_VERIFY_N: usize = 8;
pub const MAX_N_ENV: &str = "SEPSTAT_MAX_N";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_n: usize,
    pub max_order: usize,
}

impl Limits {
    /// Reads the cap from the environment. Values that do not parse are
    /// reported; values above what rank arithmetic supports are clamped.
    pub fn from_env() -> Result<Self, String> {
        let max_n = match std::env::var(MAX_N_ENV) {
            Ok(s) => s
                .trim()
                .parse::<usize>()
                .map_err(|_| format!("{MAX_N_ENV}={s:?} is not a nonnegative integer"))?
                .min(MAX_SWEEP_N),
            Err(_) => DEFAULT_MAX_N,
        };
        Ok(Limits {
            max_n,
            max_order: MAX_ORDER,
        })
    }

    pub fn check_n(&self, n: usize) -> Result<(), String> {
        if n > self.max_n {
            return Err(format!(
                "n = {n} exceeds the enumeration cap {} (set {MAX_N_ENV} to change it)",
                self.max_n
            ));
        }
        Ok(())
    }

    pub fn check_order(&self, order: usize) -> Result<(), String> {
        if order > self.max_order {
            return Err(format!("order {order} exceeds the maximum {}", self.max_order));
        }
        Ok(())
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_n: DEFAULT_MAX_N,
            max_order: MAX_ORDER,
        }
    }
}

/// Largest `k` for `maxsep`; the output has `2^k k!` permutations.
pub const MAX_MAXSEP_K: usize = 6;
