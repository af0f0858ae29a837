//! Permutations in one-line notation and the structural operations the
//! separator machinery is built on: bonds, runs, deletion with
//! standardization, inflation and the comb (odd/even interleave) product.
//!
//! Positions and values are both 1-indexed everywhere in the public API.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

/// Errors raised while building or transforming permutations and words.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PermError {
    #[error("value {value} appears more than once")]
    DuplicateValue { value: usize },
    #[error("value {value} is outside 1..={len}")]
    ValueOutOfRange { value: usize, len: usize },
    #[error("position {pos} is outside 1..={len}")]
    PositionOutOfRange { pos: usize, len: usize },
    #[error("word value {value} is not a distinct positive integer")]
    InvalidWordValue { value: usize },
    #[error("cannot interleave halves of lengths {odd} and {even}")]
    CombShape { odd: usize, even: usize },
    #[error("comb halves do not cover 1..={len}: offending value {value}")]
    CombValues { value: usize, len: usize },
    #[error("inflation of a pattern of length {expected} needs {expected} blocks, got {got}")]
    BlockCount { expected: usize, got: usize },
    #[error("inflation block {index} is empty")]
    EmptyBlock { index: usize },
    #[error("inflation needs a nonempty pattern")]
    EmptyPattern,
    #[error("cannot parse permutation from {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// A permutation of `{1..n}` in one-line notation. `n = 0` is allowed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Permutation {
    entries: Vec<usize>,
}

/// Direction of a run of bonds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RunDirection {
    Ascending,
    Descending,
    /// A run of length one.
    Trivial,
}

/// A maximal run: consecutive positions whose adjacent entries all differ by
/// exactly one in the same direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Run {
    /// 1-indexed start position.
    pub start: usize,
    pub len: usize,
    pub direction: RunDirection,
}

impl Run {
    pub fn positions(&self) -> core::ops::RangeInclusive<usize> {
        self.start..=self.start + self.len - 1
    }
}

/// Splits `values` into maximal runs, where `joined(i)` (0-indexed) says
/// whether the pair `(values[i], values[i + 1])` may belong to one run.
/// Only pairs differing by exactly one, in a consistent direction, join.
pub(crate) fn runs_where(values: &[usize], joined: impl Fn(usize) -> bool) -> Vec<Run> {
    let mut runs = Vec::new();
    let mut i = 0;
    while i < values.len() {
        let mut j = i;
        let mut direction = RunDirection::Trivial;
        while j + 1 < values.len() && joined(j) {
            let step = if values[j + 1] == values[j] + 1 {
                RunDirection::Ascending
            } else if values[j] == values[j + 1] + 1 {
                RunDirection::Descending
            } else {
                break;
            };
            if direction != RunDirection::Trivial && direction != step {
                break;
            }
            direction = step;
            j += 1;
        }
        runs.push(Run {
            start: i + 1,
            len: j - i + 1,
            direction,
        });
        i = j + 1;
    }
    runs
}

fn is_bond(a: usize, b: usize) -> bool {
    a.abs_diff(b) == 1
}

impl Permutation {
    /// Validates that `values` is a bijection on `{1..values.len()}`.
    pub fn new(values: Vec<usize>) -> Result<Self, PermError> {
        let len = values.len();
        let mut seen = vec![false; len + 1];
        for &value in &values {
            if value == 0 || value > len {
                return Err(PermError::ValueOutOfRange { value, len });
            }
            if seen[value] {
                return Err(PermError::DuplicateValue { value });
            }
            seen[value] = true;
        }
        Ok(Self { entries: values })
    }

    /// Callers guarantee `values` is a bijection on `{1..len}`.
    pub(crate) fn from_vec_unchecked(values: Vec<usize>) -> Self {
        debug_assert!(Self::new(values.clone()).is_ok());
        Self { entries: values }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            entries: (1..=n).collect(),
        }
    }

    pub fn decreasing(n: usize) -> Self {
        Self {
            entries: (1..=n).rev().collect(),
        }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The one-line word `[p_1, ..., p_n]`.
    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<usize> {
        self.entries
    }

    /// Value at the 1-indexed position `pos`.
    pub fn value_at(&self, pos: usize) -> Option<usize> {
        pos.checked_sub(1).and_then(|i| self.entries.get(i).copied())
    }

    /// 1-indexed position holding `value`.
    pub fn position_of(&self, value: usize) -> Option<usize> {
        self.entries.iter().position(|&v| v == value).map(|i| i + 1)
    }

    /// Positions `i` with `|p_i - p_{i+1}| = 1`.
    pub fn bonds(&self) -> Vec<usize> {
        self.entries
            .windows(2)
            .enumerate()
            .filter(|(_, w)| is_bond(w[0], w[1]))
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Number of bonds, usually written beta(p).
    pub fn bond_count(&self) -> usize {
        self.entries
            .windows(2)
            .filter(|w| is_bond(w[0], w[1]))
            .count()
    }

    /// Maximal runs, left to right. Runs of length one are `Trivial`.
    pub fn maximal_runs(&self) -> Vec<Run> {
        runs_where(&self.entries, |_| true)
    }

    /// King permutations have no bonds.
    pub fn is_king(&self) -> bool {
        self.bond_count() == 0
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.entries.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Self { entries: inv }
    }

    pub fn reverse(&self) -> Self {
        Self {
            entries: self.entries.iter().rev().copied().collect(),
        }
    }

    /// Removes the entry at `pos` and relabels the rest onto `{1..n-1}`.
    pub fn delete_and_standardize(&self, pos: usize) -> Result<Self, PermError> {
        let removed = self
            .value_at(pos)
            .ok_or(PermError::PositionOutOfRange { pos, len: self.len() })?;
        let entries = self
            .entries
            .iter()
            .enumerate()
            .filter(|&(i, _)| i + 1 != pos)
            .map(|(_, &v)| if v > removed { v - 1 } else { v })
            .collect();
        Ok(Self { entries })
    }

    /// Every single-entry deletion, in position order, duplicates kept.
    /// Duplicates occur exactly where a deleted entry sits in a bond.
    pub fn deletions(&self) -> Vec<Self> {
        (1..=self.len())
            .map(|pos| {
                self.delete_and_standardize(pos)
                    .expect("position in range")
            })
            .collect()
    }

    /// The distinct permutations of length `n - 1` contained in `self`.
    /// Has exactly `n - bond_count()` elements when `n >= 1`.
    pub fn children(&self) -> BTreeSet<Self> {
        self.deletions().into_iter().collect()
    }

    /// Inflation `pattern[blocks[0], ..., blocks[k-1]]`: the entry at position
    /// `i` of `pattern` is replaced by a copy of `blocks[i]`, shifted onto a
    /// value interval; intervals are stacked in the order of pattern values.
    pub fn inflate(pattern: &Self, blocks: &[Self]) -> Result<Self, PermError> {
        if pattern.is_empty() {
            return Err(PermError::EmptyPattern);
        }
        if blocks.len() != pattern.len() {
            return Err(PermError::BlockCount {
                expected: pattern.len(),
                got: blocks.len(),
            });
        }
        if let Some(index) = blocks.iter().position(Self::is_empty) {
            return Err(PermError::EmptyBlock { index: index + 1 });
        }
        // offset[v] = total size of blocks whose pattern value is below v
        let mut size_by_value = vec![0; pattern.len() + 1];
        for (block, &v) in blocks.iter().zip(&pattern.entries) {
            size_by_value[v] = block.len();
        }
        let mut offset = vec![0; pattern.len() + 1];
        for v in 2..=pattern.len() {
            offset[v] = offset[v - 1] + size_by_value[v - 1];
        }
        let entries = blocks
            .iter()
            .zip(&pattern.entries)
            .flat_map(|(block, &v)| {
                let shift = offset[v];
                block.entries.iter().map(move |&b| b + shift)
            })
            .collect();
        Ok(Self { entries })
    }

    /// Interleaves `odd` and `even` as `[o_1, e_1, o_2, e_2, ...]`.
    pub fn comb(odd: &Word, even: &Word) -> Result<Self, PermError> {
        let (k_odd, k_even) = (odd.len(), even.len());
        if k_odd != k_even && k_odd != k_even + 1 {
            return Err(PermError::CombShape {
                odd: k_odd,
                even: k_even,
            });
        }
        let mut entries = Vec::with_capacity(k_odd + k_even);
        for i in 0..k_odd {
            entries.push(odd.0[i]);
            if let Some(&e) = even.0.get(i) {
                entries.push(e);
            }
        }
        let len = entries.len();
        Self::new(entries).map_err(|e| match e {
            PermError::ValueOutOfRange { value, .. } | PermError::DuplicateValue { value } => {
                PermError::CombValues { value, len }
            }
            other => other,
        })
    }

    /// Entries at odd positions and entries at even positions.
    pub fn comb_split(&self) -> (Word, Word) {
        let odd = self.entries.iter().step_by(2).copied().collect();
        let even = self.entries.iter().skip(1).step_by(2).copied().collect();
        (Word(odd), Word(even))
    }
}

impl fmt::Display for Permutation {
    /// Compact digits for `n <= 9`, comma separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.entries {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            write_joined(f, &self.entries)
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        if self.len() <= 9 {
            write!(f, "{self}")?;
        } else {
            write_joined(f, &self.entries)?;
        }
        write!(f, "]")
    }
}

fn write_joined(f: &mut fmt::Formatter<'_>, values: &[usize]) -> fmt::Result {
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

impl FromStr for Permutation {
    type Err = PermError;

    /// Accepts `"53241"` (one digit per entry), or entries delimited by
    /// commas and/or whitespace (`"5,3,2,4,1"`, `"5 3 2 4 1"`), optionally
    /// wrapped in square brackets.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_err = |reason: &str| PermError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let body = s.trim();
        let body = match body.strip_prefix('[') {
            Some(rest) => rest
                .strip_suffix(']')
                .ok_or_else(|| parse_err("unbalanced bracket"))?,
            None => body,
        }
        .trim();
        let delimited = body.contains(|c: char| c == ',' || c.is_whitespace());
        let values = if delimited {
            body.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| parse_err("non-numeric entry")))
                .collect::<Result<Vec<_>, _>>()?
        } else {
            body.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| parse_err("non-digit character"))
                })
                .collect::<Result<Vec<_>, _>>()?
        };
        Self::new(values)
    }
}

/// A sequence of distinct positive integers, not necessarily `{1..k}`.
/// The two halves of a comb permutation are words.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(values: Vec<usize>) -> Result<Self, PermError> {
        let mut seen = BTreeSet::new();
        for &value in &values {
            if value == 0 || !seen.insert(value) {
                return Err(PermError::InvalidWordValue { value });
            }
        }
        Ok(Self(values))
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 1-indexed `i` with `|w_i - w_{i+1}| = 1`.
    pub fn bonds(&self) -> Vec<usize> {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, w)| is_bond(w[0], w[1]))
            .map(|(i, _)| i + 1)
            .collect()
    }
}

impl From<&Permutation> for Word {
    fn from(p: &Permutation) -> Self {
        Self(p.entries.clone())
    }
}
