//! Marked bonds, arrowed compositions and marked separators.
//!
//! A marked permutation is encoded as an arrowed composition (the lengths
//! and directions of its maximal marked runs) together with the relative
//! order of those runs. Combing two marked words turns every marked bond of
//! one half into a marked vertical separator of the interleaved permutation.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::perm::{runs_where, PermError, Permutation, RunDirection, Word};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MarkedError {
    #[error("marked index {index} is not a bond of the word")]
    NotABond { index: usize },
    #[error("the marked word is not a permutation of 1..=n")]
    NotAPermutation,
    #[error("composition has {parts} parts but the permutation has length {len}")]
    PartCount { parts: usize, len: usize },
    #[error("invalid part {size}: {reason}")]
    InvalidPart { size: usize, reason: &'static str },
    #[error("marked position {pos} is not a vertical separator position")]
    NotASeparator { pos: usize },
    #[error("cannot parse arrowed composition from {input:?}")]
    Parse { input: String },
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// A word together with a subset of its bonds. Index `i` marks the pair
/// `(w_i, w_{i+1})`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MarkedWord {
    word: Word,
    marked: BTreeSet<usize>,
}

impl MarkedWord {
    pub fn new(word: Word, marked: impl IntoIterator<Item = usize>) -> Result<Self, MarkedError> {
        let marked: BTreeSet<usize> = marked.into_iter().collect();
        let bonds = word.bonds();
        if let Some(&index) = marked.iter().find(|i| !bonds.contains(i)) {
            return Err(MarkedError::NotABond { index });
        }
        Ok(Self { word, marked })
    }

    pub fn unmarked(word: Word) -> Self {
        Self {
            word,
            marked: BTreeSet::new(),
        }
    }

    pub fn from_permutation(
        p: &Permutation,
        marked: impl IntoIterator<Item = usize>,
    ) -> Result<Self, MarkedError> {
        Self::new(Word::from(p), marked)
    }

    /// All `2^bonds` ways of marking `word`.
    pub fn all_markings(word: &Word) -> Vec<Self> {
        let bonds = word.bonds();
        (0u64..1 << bonds.len())
            .map(|mask| Self {
                word: word.clone(),
                marked: bonds
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| mask >> b & 1 == 1)
                    .map(|(_, &i)| i)
                    .collect(),
            })
            .collect()
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn marked(&self) -> &BTreeSet<usize> {
        &self.marked
    }

    pub fn marked_count(&self) -> usize {
        self.marked.len()
    }

    pub fn as_permutation(&self) -> Option<Permutation> {
        Permutation::new(self.word.values().to_vec()).ok()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Arrow {
    Up,
    Down,
    /// Only for parts of size one.
    None,
}

impl Arrow {
    pub fn name(self) -> &'static str {
        match self {
            Arrow::Up => "up",
            Arrow::Down => "down",
            Arrow::None => "",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "up" => Some(Arrow::Up),
            "down" => Some(Arrow::Down),
            "" | "none" => Some(Arrow::None),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Part {
    size: usize,
    arrow: Arrow,
}

impl Part {
    pub fn new(size: usize, arrow: Arrow) -> Result<Self, MarkedError> {
        let reason = match (size, arrow) {
            (0, _) => "parts must be positive",
            (1, Arrow::None) => return Ok(Self { size, arrow }),
            (1, _) => "a part of size 1 carries no arrow",
            (_, Arrow::None) => "a part larger than 1 needs an arrow",
            _ => return Ok(Self { size, arrow }),
        };
        Err(MarkedError::InvalidPart { size, reason })
    }

    pub fn single() -> Self {
        Self {
            size: 1,
            arrow: Arrow::None,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn arrow(&self) -> Arrow {
        self.arrow
    }

    fn block(&self) -> Permutation {
        match self.arrow {
            Arrow::Down => Permutation::decreasing(self.size),
            _ => Permutation::identity(self.size),
        }
    }
}

/// A composition whose parts larger than one carry an up or down arrow.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ArrowedComposition {
    parts: Vec<Part>,
}

impl ArrowedComposition {
    pub fn new(parts: Vec<Part>) -> Self {
        Self { parts }
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The composed integer, sum of part sizes.
    pub fn total(&self) -> usize {
        self.parts.iter().map(|p| p.size).sum()
    }

    /// Concatenates two compositions (odd half first).
    pub fn concat(&self, other: &Self) -> Self {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Self { parts }
    }
}

impl fmt::Display for ArrowedComposition {
    /// Compact form such as `1,3↓,1,2↑`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            let arrow = match part.arrow {
                Arrow::Up => "↑",
                Arrow::Down => "↓",
                Arrow::None => "",
            };
            write!(f, "{}{arrow}", part.size)?;
        }
        Ok(())
    }
}

impl FromStr for ArrowedComposition {
    type Err = MarkedError;

    /// Parses the compact form; `^`/`v` are accepted for `↑`/`↓`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || MarkedError::Parse {
            input: s.to_string(),
        };
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        if body.trim().is_empty() {
            return Ok(Self::default());
        }
        let parts = body
            .split(',')
            .map(|token| {
                let token = token.trim();
                let (digits, arrow) = match token.char_indices().find(|(_, c)| !c.is_ascii_digit())
                {
                    None => (token, Arrow::None),
                    Some((i, _)) => {
                        let arrow = match &token[i..] {
                            "↑" | "^" => Arrow::Up,
                            "↓" | "v" => Arrow::Down,
                            _ => return Err(err()),
                        };
                        (&token[..i], arrow)
                    }
                };
                let size = digits.parse().map_err(|_| err())?;
                Part::new(size, arrow)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { parts })
    }
}

/// A permutation with some vertical separators marked (by position).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MarkedSepPermutation {
    perm: Permutation,
    marked_seps: BTreeSet<usize>,
}

impl MarkedSepPermutation {
    pub fn new(
        perm: Permutation,
        marked_seps: impl IntoIterator<Item = usize>,
    ) -> Result<Self, MarkedError> {
        let marked_seps: BTreeSet<usize> = marked_seps.into_iter().collect();
        let e = perm.entries();
        for &pos in &marked_seps {
            let ok = pos >= 2 && pos < e.len() && e[pos - 2].abs_diff(e[pos]) == 1;
            if !ok {
                return Err(MarkedError::NotASeparator { pos });
            }
        }
        Ok(Self { perm, marked_seps })
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn marked_seps(&self) -> &BTreeSet<usize> {
        &self.marked_seps
    }
}

/// Splits a marked permutation into its maximal marked runs.
pub fn encode_marked(mp: &MarkedWord) -> Result<(ArrowedComposition, Permutation), MarkedError> {
    let perm = mp.as_permutation().ok_or(MarkedError::NotAPermutation)?;
    let values = perm.entries();
    let runs = runs_where(values, |i| mp.marked.contains(&(i + 1)));
    let parts = runs
        .iter()
        .map(|run| Part {
            size: run.len,
            arrow: match run.direction {
                RunDirection::Ascending => Arrow::Up,
                RunDirection::Descending => Arrow::Down,
                RunDirection::Trivial => Arrow::None,
            },
        })
        .collect();
    // runs are value intervals, so their minima standardize to the block order
    let minima: Vec<usize> = runs
        .iter()
        .map(|run| run.positions().map(|pos| values[pos - 1]).min().unwrap_or(0))
        .collect();
    let mut order: Vec<usize> = (0..minima.len()).collect();
    order.sort_by_key(|&i| minima[i]);
    let mut sigma = alloc::vec![0; minima.len()];
    for (rank, &i) in order.iter().enumerate() {
        sigma[i] = rank + 1;
    }
    Ok((
        ArrowedComposition { parts },
        Permutation::from_vec_unchecked(sigma),
    ))
}

/// Inflates `sigma` by monotone runs and marks every bond inside a run.
pub fn decode_marked(
    lambda: &ArrowedComposition,
    sigma: &Permutation,
) -> Result<MarkedWord, MarkedError> {
    if lambda.len() != sigma.len() {
        return Err(MarkedError::PartCount {
            parts: lambda.len(),
            len: sigma.len(),
        });
    }
    if lambda.is_empty() {
        return Ok(MarkedWord::unmarked(Word::default()));
    }
    let blocks: Vec<Permutation> = lambda.parts.iter().map(Part::block).collect();
    let perm = Permutation::inflate(sigma, &blocks)?;
    let mut marked = BTreeSet::new();
    let mut start = 1;
    for part in &lambda.parts {
        marked.extend(start..start + part.size - 1);
        start += part.size;
    }
    Ok(MarkedWord {
        word: Word::from(&perm),
        marked,
    })
}

/// Interleaves two marked halves; each marked bond becomes a marked
/// separator at the position between its endpoints.
pub fn comb_marked(odd: &MarkedWord, even: &MarkedWord) -> Result<MarkedSepPermutation, MarkedError> {
    let perm = Permutation::comb(&odd.word, &even.word)?;
    let marked_seps = odd
        .marked
        .iter()
        .map(|&i| 2 * i)
        .chain(even.marked.iter().map(|&i| 2 * i + 1))
        .collect();
    Ok(MarkedSepPermutation { perm, marked_seps })
}

/// Inverse of [`comb_marked`].
pub fn split_marked(msp: &MarkedSepPermutation) -> Result<(MarkedWord, MarkedWord), MarkedError> {
    let (odd, even) = msp.perm.comb_split();
    let odd_marks = msp.marked_seps.iter().filter(|&&j| j % 2 == 0).map(|&j| j / 2);
    let even_marks = msp.marked_seps.iter().filter(|&&j| j % 2 == 1).map(|&j| j / 2);
    Ok((
        MarkedWord::new(odd, odd_marks)?,
        MarkedWord::new(even, even_marks)?,
    ))
}
