//! Expected number of separators in a uniformly random permutation, as
//! closed forms and as exact averages over `S_n`.

use core::fmt;

use num_bigint::{BigInt, BigUint};

use super::{sweep, EnumError, Histograms, StatKind};
use crate::numbers::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExpectationKind {
    Vertical,
    Both,
    Any,
}

impl ExpectationKind {
    pub fn stat(self) -> StatKind {
        match self {
            ExpectationKind::Vertical => StatKind::Vertical,
            ExpectationKind::Both => StatKind::Both,
            ExpectationKind::Any => StatKind::Any,
        }
    }
}

impl TryFrom<StatKind> for ExpectationKind {
    type Error = EnumError;

    fn try_from(kind: StatKind) -> Result<Self, EnumError> {
        match kind {
            StatKind::Vertical => Ok(ExpectationKind::Vertical),
            StatKind::Both => Ok(ExpectationKind::Both),
            StatKind::Any => Ok(ExpectationKind::Any),
            other => Err(EnumError::NoFormula(other)),
        }
    }
}

impl fmt::Display for ExpectationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.stat().name())
    }
}

/// Closed forms, with `n(n-1)(n-2)` in the denominator for the two-type
/// counts:
///
/// * vertical: `2(n-2)/n`
/// * both types: `4(n-3)^2 / (n(n-1)(n-2))`
/// * any type: `4(n^3 - 6n^2 + 14n - 13) / (n(n-1)(n-2))`
///
/// For `n < 3` no permutation has a separator and the result is 0.
pub fn expectation_formula(n: u64, kind: ExpectationKind) -> Rational {
    if n < 3 {
        return Rational::from_integer(BigInt::default());
    }
    let n = BigInt::from(n);
    let falling3 = &n * (&n - 1) * (&n - 2);
    match kind {
        ExpectationKind::Vertical => Rational::new(2 * (&n - 2), n),
        ExpectationKind::Both => {
            let d = &n - 3;
            Rational::new(4 * &d * &d, falling3)
        }
        ExpectationKind::Any => {
            let cubic = &n * &n * &n - 6 * &n * &n + 14 * &n - 13;
            Rational::new(4 * cubic, falling3)
        }
    }
}

/// `sum_pi stat(pi) / n!` from an existing sweep.
pub fn expectation_from(hist: &Histograms, kind: StatKind) -> Rational {
    let table = hist.table(kind);
    Rational::new(
        BigInt::from(table.weighted_sum()),
        BigInt::from(table.total().max(BigUint::from(1u8))),
    )
}

/// Exact average of the statistic over all of `S_n`.
pub fn expectation_empirical(n: usize, kind: ExpectationKind) -> Result<Rational, EnumError> {
    Ok(expectation_from(&sweep(n)?, kind.stat()))
}
