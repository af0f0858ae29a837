//! Separator detection.
//!
//! A digit is a vertical separator when its two positional neighbours are
//! consecutive values, and a horizontal separator when the values just below
//! and just above it sit in adjacent positions. Deleting a separator of
//! either kind brings two consecutive values together, creating a bond that
//! was not present before.
//!
//! Sets here hold values (digits), not positions.

mod marked;

pub use marked::{
    comb_marked, decode_marked, encode_marked, split_marked, Arrow, ArrowedComposition,
    MarkedError, MarkedSepPermutation, MarkedWord, Part,
};

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::perm::Permutation;

/// Vertical, horizontal and combined separator sets of one permutation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SeparatorReport {
    pub vertical: BTreeSet<usize>,
    pub horizontal: BTreeSet<usize>,
    pub both: BTreeSet<usize>,
    pub sep_count: usize,
}

impl SeparatorReport {
    /// All separators, of either type.
    pub fn all(&self) -> BTreeSet<usize> {
        self.vertical.union(&self.horizontal).copied().collect()
    }
}

/// Positions `i` (1-indexed, `2 <= i <= n-1`) with `|p_{i-1} - p_{i+1}| = 1`.
pub fn vertical_separator_positions(p: &Permutation) -> Vec<usize> {
    p.entries()
        .windows(3)
        .enumerate()
        .filter(|(_, w)| w[0].abs_diff(w[2]) == 1)
        .map(|(i, _)| i + 2)
        .collect()
}

pub fn vertical_separators(p: &Permutation) -> BTreeSet<usize> {
    p.entries()
        .windows(3)
        .filter(|w| w[0].abs_diff(w[2]) == 1)
        .map(|w| w[1])
        .collect()
}

pub fn horizontal_separators(p: &Permutation) -> BTreeSet<usize> {
    let n = p.len();
    if n < 3 {
        return BTreeSet::new();
    }
    let inv = p.inverse();
    let pos = inv.entries();
    (2..n)
        .filter(|&a| pos[a - 2].abs_diff(pos[a]) == 1)
        .collect()
}

pub fn separator_report(p: &Permutation) -> SeparatorReport {
    let vertical = vertical_separators(p);
    let horizontal = horizontal_separators(p);
    let both: BTreeSet<usize> = vertical.intersection(&horizontal).copied().collect();
    let sep_count = vertical.len() + horizontal.len() - both.len();
    SeparatorReport {
        vertical,
        horizontal,
        both,
        sep_count,
    }
}

pub fn sep_count(p: &Permutation) -> usize {
    separator_report(p).sep_count
}

pub fn is_separator_free(p: &Permutation) -> bool {
    sep_count(p) == 0
}

/// Independent check: the permutation matrix, read as pieces on an `n x n`
/// board, has no two pieces a knight's move apart. Together with the
/// permutation property (rooks never attack) this is the non-attacking
/// empress condition, equivalent to having no separators.
pub fn knight_free(p: &Permutation) -> bool {
    knight_free_word(p.entries())
}

/// [`knight_free`] on a raw one-line word.
pub fn knight_free_word(e: &[usize]) -> bool {
    for i in 0..e.len() {
        for j in i + 1..e.len().min(i + 3) {
            let dv = e[i].abs_diff(e[j]);
            if (j - i, dv) == (1, 2) || (j - i, dv) == (2, 1) {
                return false;
            }
        }
    }
    true
}

/// Whether deleting the entry at `pos` produces a bond whose two entries
/// were not already a bond of `p`.
pub fn deletion_creates_new_bond(p: &Permutation, pos: usize) -> bool {
    let Ok(child) = p.delete_and_standardize(pos) else {
        return false;
    };
    // origin[i] = position in p of the child's i-th entry (0-indexed)
    let origin: Vec<usize> = (0..p.len()).filter(|&i| i + 1 != pos).collect();
    child.bonds().into_iter().any(|b| {
        let (l, r) = (origin[b - 1], origin[b]);
        !(r == l + 1 && p.entries()[l].abs_diff(p.entries()[r]) == 1)
    })
}

/// Per-value flags for a single permutation, filled by one scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct StatCounts {
    pub bonds: usize,
    pub vertical: usize,
    pub horizontal: usize,
    pub both: usize,
    pub any: usize,
}

/// Scratch buffers for [`scan_counts`], reused across a sweep.
#[derive(Debug, Default)]
pub struct ScanScratch {
    pos: Vec<usize>,
    vertical: Vec<bool>,
}

/// Computes every statistic at once without allocating per call.
pub fn scan_counts(entries: &[usize], scratch: &mut ScanScratch) -> StatCounts {
    let n = entries.len();
    if scratch.pos.len() < n + 1 {
        scratch.pos = vec![0; n + 1];
        scratch.vertical = vec![false; n + 1];
    }
    let mut out = StatCounts::default();
    for (i, &v) in entries.iter().enumerate() {
        scratch.pos[v] = i;
        scratch.vertical[v] = false;
        if i + 1 < n && v.abs_diff(entries[i + 1]) == 1 {
            out.bonds += 1;
        }
    }
    for w in entries.windows(3) {
        if w[0].abs_diff(w[2]) == 1 {
            scratch.vertical[w[1]] = true;
            out.vertical += 1;
        }
    }
    for a in 2..n {
        if scratch.pos[a - 1].abs_diff(scratch.pos[a + 1]) == 1 {
            out.horizontal += 1;
            if scratch.vertical[a] {
                out.both += 1;
            }
        }
    }
    out.any = out.vertical + out.horizontal - out.both;
    out
}
