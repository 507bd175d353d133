//! Words over `Z_q` and their run statistics.
//!
//! A [`Word`] always carries its alphabet size, and operations that combine
//! two words reject mismatched alphabets instead of coercing them.
//!
//! Text format: for `q <= 10` a word is a digit string (`"11110220"`); for
//! larger alphabets the symbols are comma separated (`"12,0,11"`). With
//! `q = 4` the nucleotide letters `A C G T` are accepted as aliases for
//! `0 1 2 3` when parsing.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Word {
    symbols: Vec<u32>,
    q: u32,
}

impl Word {
    pub fn new(symbols: Vec<u32>, q: u32) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidAlphabet(q));
        }
        if let Some((index, &symbol)) = symbols.iter().enumerate().find(|(_, &s)| s >= q) {
            return Err(Error::SymbolOutOfRange { symbol, index, q });
        }
        Ok(Word { symbols, q })
    }

    /// Builds a word from symbols already known to lie in `Z_q`.
    pub(crate) fn from_trusted(symbols: Vec<u32>, q: u32) -> Self {
        debug_assert!(q >= 2 && symbols.iter().all(|&s| s < q));
        Word { symbols, q }
    }

    pub fn empty(q: u32) -> Result<Self> {
        Word::new(Vec::new(), q)
    }

    /// The word with index `index` in the lexicographic order of `Z_q^n`.
    pub fn from_index(mut index: u64, n: usize, q: u32) -> Self {
        let mut symbols = vec![0; n];
        for slot in symbols.iter_mut().rev() {
            *slot = (index % q as u64) as u32;
            index /= q as u64;
        }
        Word::from_trusted(symbols, q)
    }

    /// Position of this word in the lexicographic order of `Z_q^n`.
    pub fn index(&self) -> u64 {
        self.symbols
            .iter()
            .fold(0u64, |acc, &s| acc * self.q as u64 + s as u64)
    }

    /// Every word of `Z_q^n` in lexicographic order.
    pub fn enumerate(n: usize, q: u32) -> impl Iterator<Item = Word> {
        let total = space_size(n, q).expect("word space too large to enumerate");
        (0..total).map(move |i| Word::from_index(i, n, q))
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<u32> {
        self.symbols
    }

    pub fn hamming_weight(&self) -> usize {
        self.symbols.iter().filter(|&&s| s != 0).count()
    }

    pub fn ensure_same_alphabet(&self, other: &Word) -> Result<()> {
        if self.q != other.q {
            return Err(Error::AlphabetMismatch {
                left: self.q,
                right: other.q,
            });
        }
        Ok(())
    }

    /// Parses the text word format for alphabet `Z_q`.
    pub fn parse(text: &str, q: u32) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidAlphabet(q));
        }
        let text = text.trim();
        let symbols = if text.contains(',') || (q > 10 && !text.is_empty()) {
            text.split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad symbol {tok:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            text.chars()
                .map(|c| match c {
                    'A' | 'a' if q == 4 => Ok(0),
                    'C' | 'c' if q == 4 => Ok(1),
                    'G' | 'g' if q == 4 => Ok(2),
                    'T' | 't' if q == 4 => Ok(3),
                    _ => c
                        .to_digit(10)
                        .ok_or_else(|| Error::Parse(format!("bad symbol {c:?}"))),
                })
                .collect::<Result<Vec<_>>>()?
        };
        Word::new(symbols, q)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q <= 10 {
            for s in &self.symbols {
                write!(f, "{s}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.symbols.iter().map(|s| s.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

/// `q^n` if it fits in a `u64`.
pub fn space_size(n: usize, q: u32) -> Option<u64> {
    (q as u64).checked_pow(u32::try_from(n).ok()?)
}

/// Run-length profile of a nonempty word: the lengths of its maximal blocks
/// of equal symbols, left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunProfile {
    lengths: Vec<usize>,
}

impl RunProfile {
    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    /// `r(x)`, the number of runs.
    pub fn count(&self) -> usize {
        self.lengths.len()
    }

    /// `r^(i)(x)`, the number of runs of length exactly `i`.
    pub fn count_of_length(&self, i: usize) -> usize {
        self.lengths.iter().filter(|&&r| r == i).count()
    }

    /// `r^(>=i)(x)`.
    pub fn count_at_least(&self, i: usize) -> usize {
        self.lengths.iter().filter(|&&r| r >= i).count()
    }

    /// Run checksum `sum_i i * r_i(x)` with 1-based run indices, unreduced.
    pub fn checksum(&self) -> u64 {
        self.lengths
            .iter()
            .enumerate()
            .map(|(i, &r)| (i as u64 + 1) * r as u64)
            .sum()
    }

    /// 0-based start offset of every run.
    pub fn starts(&self) -> Vec<usize> {
        let mut acc = 0;
        self.lengths
            .iter()
            .map(|&r| {
                let s = acc;
                acc += r;
                s
            })
            .collect()
    }
}

pub fn run_profile(x: &Word) -> Result<RunProfile> {
    let symbols = x.symbols();
    if symbols.is_empty() {
        return Err(Error::EmptyInput);
    }
    let lengths = symbols.chunk_by(|a, b| a == b).map(<[u32]>::len).collect();
    Ok(RunProfile { lengths })
}

pub fn run_count_of_length(x: &Word, i: usize) -> Result<usize> {
    Ok(run_profile(x)?.count_of_length(i))
}

pub fn run_count_at_least(x: &Word, i: usize) -> Result<usize> {
    Ok(run_profile(x)?.count_at_least(i))
}

pub fn run_checksum(x: &Word) -> Result<u64> {
    Ok(run_profile(x)?.checksum())
}
