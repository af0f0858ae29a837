//! Exhaustive sweeps over `S_n` and the statistics derived from them.
//!
//! The sweep walks permutations in lexicographic order. Any rank interval
//! `[start, start + count)` can be swept on its own and the resulting
//! [`Histograms`] merged, so callers may split `0..n!` into chunks and run
//! them concurrently; merging is associative and commutative, so the result
//! does not depend on how the range was split.

mod expectation;
pub mod verify;

pub use expectation::{
    expectation_empirical, expectation_formula, expectation_from, ExpectationKind,
};

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::{BigInt, BigUint};

use crate::gf::MarkerPoly;
use crate::numbers::factorial_u64;
use crate::perm::Permutation;
use crate::separators::{knight_free_word, scan_counts, ScanScratch, StatCounts};

/// Largest `n` whose `n!` ranks fit in a `u64`.
pub const MAX_SWEEP_N: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumError {
    #[error("n = {n} exceeds the enumeration cap {cap}")]
    AboveCap { n: usize, cap: usize },
    #[error("unknown statistic {0:?} (expected vertical, horizontal, both, any or bonds)")]
    UnknownKind(String),
    #[error("no expectation formula for statistic {0}")]
    NoFormula(StatKind),
    #[error(
        "separator-free oracles disagree at n = {n}: report-based {by_report}, knight-based {by_knight}"
    )]
    OracleDisagreement {
        n: usize,
        by_report: u64,
        by_knight: u64,
    },
}

pub(crate) fn check_cap(n: usize) -> Result<(), EnumError> {
    if n > MAX_SWEEP_N {
        return Err(EnumError::AboveCap {
            n,
            cap: MAX_SWEEP_N,
        });
    }
    Ok(())
}

/// `n!` for `n <= MAX_SWEEP_N`.
pub fn sn_size(n: usize) -> Result<u64, EnumError> {
    check_cap(n)?;
    Ok(factorial_u64(n as u64).expect("n! fits below the cap"))
}

/// The permutation of rank `rank` (0-based) in lexicographic order.
pub fn unrank(n: usize, mut rank: u64) -> Vec<usize> {
    let mut pool: Vec<usize> = (1..=n).collect();
    let mut out = Vec::with_capacity(n);
    for i in (0..n).rev() {
        let block = factorial_u64(i as u64).expect("rank space fits u64");
        let idx = (rank / block) as usize;
        rank %= block;
        out.push(pool.remove(idx));
    }
    out
}

/// Advances to the lexicographic successor; false at the last permutation.
fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Lexicographic iterator over a rank interval of `S_n`.
#[derive(Debug, Clone)]
pub struct LexPermutations {
    current: Vec<usize>,
    remaining: u64,
}

impl LexPermutations {
    /// All of `S_n`. `n = 0` yields the empty permutation once.
    pub fn new(n: usize) -> Result<Self, EnumError> {
        Self::range(n, 0, sn_size(n)?)
    }

    /// Ranks `start .. start + count`, clamped to `n!`.
    pub fn range(n: usize, start: u64, count: u64) -> Result<Self, EnumError> {
        let total = sn_size(n)?;
        let start = start.min(total);
        Ok(Self {
            current: unrank(n, start.min(total.saturating_sub(1))),
            remaining: count.min(total - start),
        })
    }

    /// Visits each word in order without allocating.
    pub fn for_each_entries(mut self, mut f: impl FnMut(&[usize])) {
        while self.remaining > 0 {
            f(&self.current);
            self.remaining -= 1;
            if self.remaining > 0 {
                next_permutation(&mut self.current);
            }
        }
    }
}

impl Iterator for LexPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.remaining == 0 {
            return None;
        }
        let out = Permutation::from_vec_unchecked(self.current.clone());
        self.remaining -= 1;
        if self.remaining > 0 {
            next_permutation(&mut self.current);
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = usize::try_from(self.remaining).unwrap_or(usize::MAX);
        (r, Some(r))
    }
}

/// Every permutation of `S_n` in lexicographic order.
pub fn iterate_sn(n: usize) -> Result<LexPermutations, EnumError> {
    LexPermutations::new(n)
}

/// Which statistic a distribution table counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StatKind {
    /// Number of vertical separators.
    Vertical,
    /// Number of horizontal separators.
    Horizontal,
    /// Number of digits that are separators of both types.
    Both,
    /// Number of separators of either type.
    Any,
    /// Number of bonds.
    Bonds,
}

impl StatKind {
    pub const ALL: [StatKind; 5] = [
        StatKind::Vertical,
        StatKind::Horizontal,
        StatKind::Both,
        StatKind::Any,
        StatKind::Bonds,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StatKind::Vertical => "vertical",
            StatKind::Horizontal => "horizontal",
            StatKind::Both => "both",
            StatKind::Any => "any",
            StatKind::Bonds => "bonds",
        }
    }

    fn index(self) -> usize {
        self as usize
    }

    fn pick(self, c: &StatCounts) -> usize {
        match self {
            StatKind::Vertical => c.vertical,
            StatKind::Horizontal => c.horizontal,
            StatKind::Both => c.both,
            StatKind::Any => c.any,
            StatKind::Bonds => c.bonds,
        }
    }
}

impl fmt::Display for StatKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StatKind {
    type Err = EnumError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        StatKind::ALL
            .into_iter()
            .find(|k| k.name() == s.trim().to_ascii_lowercase())
            .ok_or_else(|| EnumError::UnknownKind(s.to_string()))
    }
}

/// Distribution of one statistic over `S_n`: `counts[m]` permutations take
/// the value `m`. Only nonzero counts are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistTable {
    pub n: usize,
    pub kind: StatKind,
    pub counts: BTreeMap<usize, BigUint>,
}

impl DistTable {
    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    pub fn count(&self, m: usize) -> BigUint {
        self.counts.get(&m).cloned().unwrap_or_default()
    }

    /// Largest `m` with a nonzero count.
    pub fn max_value(&self) -> Option<usize> {
        self.counts.keys().next_back().copied()
    }

    /// The table as a polynomial `sum_m counts[m] u^m`.
    pub fn as_poly(&self) -> MarkerPoly {
        let len = self.max_value().map_or(0, |m| m + 1);
        let mut coeffs = vec![BigInt::default(); len];
        for (&m, c) in &self.counts {
            coeffs[m] = BigInt::from(c.clone());
        }
        MarkerPoly::from_coeffs(coeffs)
    }

    /// `sum_m m * counts[m]`.
    pub fn weighted_sum(&self) -> BigUint {
        self.counts
            .iter()
            .map(|(&m, c)| c * BigUint::from(m))
            .sum()
    }
}

/// Raw per-value histograms of every statistic, plus the knight-oracle
/// tally, for one sweep (or a merge of several).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Histograms {
    n: usize,
    hist: [Vec<u64>; 5],
    knight_free: u64,
    visited: u64,
}

impl Histograms {
    pub fn new(n: usize) -> Self {
        let row = || vec![0u64; n + 1];
        Self {
            n,
            hist: [row(), row(), row(), row(), row()],
            knight_free: 0,
            visited: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Permutations seen so far.
    pub fn visited(&self) -> u64 {
        self.visited
    }

    pub fn record(&mut self, counts: &StatCounts, knight_free: bool) {
        for kind in StatKind::ALL {
            self.hist[kind.index()][kind.pick(counts)] += 1;
        }
        self.knight_free += u64::from(knight_free);
        self.visited += 1;
    }

    /// Adds another sweep's tallies. Both must be for the same `n`.
    pub fn merge(&mut self, other: &Self) {
        assert_eq!(self.n, other.n, "merging sweeps of different sizes");
        for (mine, theirs) in self.hist.iter_mut().zip(&other.hist) {
            for (a, b) in mine.iter_mut().zip(theirs) {
                *a += b;
            }
        }
        self.knight_free += other.knight_free;
        self.visited += other.visited;
    }

    pub fn table(&self, kind: StatKind) -> DistTable {
        let counts = self.hist[kind.index()]
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(m, &c)| (m, BigUint::from(c)))
            .collect();
        DistTable {
            n: self.n,
            kind,
            counts,
        }
    }

    /// Separator-free count from the separator report.
    pub fn separator_free_by_report(&self) -> u64 {
        self.hist[StatKind::Any.index()][0]
    }

    /// Separator-free count from the knight-move oracle.
    pub fn separator_free_by_knight(&self) -> u64 {
        self.knight_free
    }

    /// Permutations in which every digit is a separator.
    pub fn all_separators_count(&self) -> u64 {
        self.hist[StatKind::Any.index()][self.n]
    }
}

/// Sweeps ranks `start .. start + count` of `S_n`.
pub fn sweep_range(n: usize, start: u64, count: u64) -> Result<Histograms, EnumError> {
    let mut hist = Histograms::new(n);
    let mut scratch = ScanScratch::default();
    LexPermutations::range(n, start, count)?.for_each_entries(|e| {
        let counts = scan_counts(e, &mut scratch);
        hist.record(&counts, knight_free_word(e));
    });
    Ok(hist)
}

/// Sweeps all of `S_n` on the current thread.
pub fn sweep(n: usize) -> Result<Histograms, EnumError> {
    sweep_range(n, 0, sn_size(n)?)
}

/// Splits `0..n!` into at most `parts` contiguous `(start, count)` chunks.
pub fn chunk_ranks(n: usize, parts: usize) -> Result<Vec<(u64, u64)>, EnumError> {
    let total = sn_size(n)?;
    let parts = (parts.max(1) as u64).min(total);
    let base = total / parts;
    let extra = total % parts;
    let mut start = 0;
    Ok((0..parts)
        .map(|i| {
            let count = base + u64::from(i < extra);
            let chunk = (start, count);
            start += count;
            chunk
        })
        .collect())
}

pub fn distribution(n: usize, kind: StatKind) -> Result<DistTable, EnumError> {
    Ok(sweep(n)?.table(kind))
}

/// Checks the two separator-free oracles against each other.
pub fn separator_free_from(hist: &Histograms) -> Result<u64, EnumError> {
    let by_report = hist.separator_free_by_report();
    let by_knight = hist.separator_free_by_knight();
    if by_report != by_knight {
        return Err(EnumError::OracleDisagreement {
            n: hist.n(),
            by_report,
            by_knight,
        });
    }
    Ok(by_report)
}

/// Number of permutations of `S_n` without separators (non-attacking
/// empress placements), computed by two independent oracles.
pub fn separator_free_count(n: usize) -> Result<u64, EnumError> {
    separator_free_from(&sweep(n)?)
}

/// All inflations `pi[a_1, ..., a_k]` with `pi` in `S_k` and each block
/// `3142` or `2413`. These are exactly the permutations of length `4k`
/// in which every digit is a separator. Sorted.
pub fn max_separator_perms(k: usize) -> Result<Vec<Permutation>, EnumError> {
    check_cap(k)?;
    let blocks = [
        Permutation::from_vec_unchecked(vec![3, 1, 4, 2]),
        Permutation::from_vec_unchecked(vec![2, 4, 1, 3]),
    ];
    let mut out = Vec::new();
    if k == 0 {
        return Ok(out);
    }
    for pattern in iterate_sn(k)? {
        for mask in 0u64..1 << k {
            let chosen: Vec<Permutation> = (0..k)
                .map(|i| blocks[(mask >> i & 1) as usize].clone())
                .collect();
            out.push(Permutation::inflate(&pattern, &chosen).expect("k blocks, nonempty"));
        }
    }
    out.sort();
    Ok(out)
}

/// Exhaustive list of permutations of `S_n` in which every digit is a
/// separator, in lexicographic order.
pub fn full_separator_perms(n: usize) -> Result<Vec<Permutation>, EnumError> {
    let mut scratch = ScanScratch::default();
    let mut out = Vec::new();
    LexPermutations::new(n)?.for_each_entries(|e| {
        if n > 0 && scan_counts(e, &mut scratch).any == n {
            out.push(Permutation::from_vec_unchecked(e.to_vec()));
        }
    });
    Ok(out)
}
