//! One handle over the three constructions, plus enumerated codebooks with
//! an index-based encoder.
//!
//! The constructions are defined as subsets of `Z_q^n`, so the encoder here
//! simply numbers the codewords in lexicographic order.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::palindrome_free::PalindromeFreeCode;
use super::palindromic::PalindromicL2Code;
use super::vt::TandemVtCode;
use crate::channel::ErrorKind;
use crate::error::Result;
use crate::guard::Guard;
use crate::words::Word;

/// Parameters of one code, serialized as
/// `{"construction": "c1" | "c2" | "cpf", ...}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "construction", rename_all = "lowercase")]
pub enum CodeSpec {
    C1(TandemVtCode),
    C2(PalindromicL2Code),
    Cpf(PalindromeFreeCode),
}

impl CodeSpec {
    pub fn id(&self) -> &'static str {
        match self {
            CodeSpec::C1(_) => "c1",
            CodeSpec::C2(_) => "c2",
            CodeSpec::Cpf(_) => "cpf",
        }
    }

    pub fn n(&self) -> usize {
        match self {
            CodeSpec::C1(c) => c.n(),
            CodeSpec::C2(c) => c.n(),
            CodeSpec::Cpf(c) => c.n(),
        }
    }

    pub fn q(&self) -> u32 {
        match self {
            CodeSpec::C1(c) => c.q(),
            CodeSpec::C2(_) => 2,
            CodeSpec::Cpf(c) => c.q(),
        }
    }

    /// The single errors the code is built to correct.
    pub fn error_kinds(&self) -> Vec<ErrorKind> {
        match self {
            CodeSpec::C1(c) => vec![ErrorKind::TandemDup(c.l())],
            CodeSpec::C2(_) => vec![ErrorKind::PalDup(2)],
            CodeSpec::Cpf(c) => (2..=c.n()).map(ErrorKind::PalDup).collect(),
        }
    }

    pub fn is_member(&self, x: &Word) -> Result<bool> {
        match self {
            CodeSpec::C1(c) => c.is_member(x),
            CodeSpec::C2(c) => c.is_member(x),
            CodeSpec::Cpf(c) => c.is_member(x),
        }
    }

    pub fn decode(&self, y: &Word) -> Result<Word> {
        match self {
            CodeSpec::C1(c) => c.decode(y),
            CodeSpec::C2(c) => c.decode(y),
            CodeSpec::Cpf(c) => c.decode(y),
        }
    }

    pub fn codebook(&self, guard: Guard) -> Result<Codebook> {
        let words = match self {
            CodeSpec::C1(c) => c.codebook(guard)?,
            CodeSpec::C2(c) => c.codebook(guard)?,
            CodeSpec::Cpf(c) => c.codebook(guard)?,
        };
        Ok(Codebook {
            spec: self.clone(),
            words,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("code parameters serialize")
    }
}

/// All codewords of a code in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Codebook {
    pub spec: CodeSpec,
    pub words: Vec<Word>,
}

impl Codebook {
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Codeword number `index`.
    pub fn encode(&self, index: usize) -> Option<&Word> {
        self.words.get(index)
    }

    /// Inverse of [`Codebook::encode`].
    pub fn index_of(&self, x: &Word) -> Option<usize> {
        self.words.binary_search(x).ok()
    }

    /// One codeword per line in the text word format.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for w in &self.words {
            writeln!(out, "{w}").unwrap();
        }
        out
    }
}
