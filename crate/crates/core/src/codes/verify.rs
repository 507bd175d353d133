//! Exhaustive verification of a code: pairwise disjoint single-error balls
//! and agreement of the syndrome decoder with the oracle decoder on every
//! codeword and every single error.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::codebook::CodeSpec;
use super::oracle::oracle_decode;
use crate::channel::find_ball_collision;
use crate::error::Result;
use crate::guard::Guard;

/// At most this many decoder failures are kept in a report.
const MAX_FAILURES: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub code: CodeSpec,
    pub codewords: usize,
    /// First pair of codewords with intersecting balls and a shared word.
    pub collision: Option<[String; 3]>,
    /// Received words decoded (codewords themselves included).
    pub received_words: u64,
    /// Failures as `"received -> reason"`, truncated.
    pub failures: Vec<String>,
    pub failure_count: u64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.collision.is_none() && self.failure_count == 0
    }
}

pub fn verify_code(spec: &CodeSpec, guard: Guard) -> Result<VerifyReport> {
    let book = spec.codebook(guard)?;
    let kinds = spec.error_kinds();
    let collision = kinds
        .iter()
        .find_map(|&kind| find_ball_collision(&book.words, kind, 1))
        .map(|(a, b, w)| [a.to_string(), b.to_string(), w.to_string()]);

    let member = |x: &crate::words::Word| spec.is_member(x).unwrap_or(false);
    let n = spec.n();
    let per_word: Vec<(u64, Vec<String>)> = book
        .words
        .par_iter()
        .map(|c| {
            let mut checked = 1;
            let mut failures = Vec::new();
            match spec.decode(c) {
                Ok(x) if x == *c => {}
                other => failures.push(format!("{c} -> {other:?}")),
            }
            for &kind in &kinds {
                for p in kind.positions(c) {
                    let y = kind.apply(c, p).expect("position from positions()");
                    checked += 1;
                    let syndrome = spec.decode(&y);
                    let oracle = oracle_decode(&y, n, kind, member);
                    let ok = matches!((&syndrome, &oracle), (Ok(a), Ok(b)) if a == c && b == c);
                    if !ok {
                        failures.push(format!(
                            "{y} ({kind} of {c} at {p}) -> decoder {syndrome:?}, oracle {oracle:?}"
                        ));
                    }
                }
            }
            (checked, failures)
        })
        .collect();

    let received_words = per_word.iter().map(|(k, _)| k).sum();
    let failure_count = per_word.iter().map(|(_, f)| f.len() as u64).sum();
    let failures = per_word
        .into_iter()
        .flat_map(|(_, f)| f)
        .take(MAX_FAILURES)
        .collect();
    Ok(VerifyReport {
        code: spec.clone(),
        codewords: book.len(),
        collision,
        received_words,
        failures,
        failure_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{PalindromeFreeCode, PalindromicL2Code, TandemVtCode};

    #[test]
    fn constructions_pass() {
        let specs = [
            CodeSpec::C1(
                crate::codes::c1_best_params(6, 2, 2, Guard::default())
                    .unwrap()
                    .0,
            ),
            CodeSpec::C2(PalindromicL2Code::new(8, 4, 13).unwrap()),
            CodeSpec::Cpf(PalindromeFreeCode::new(7, 2).unwrap()),
        ];
        for spec in specs {
            let r = verify_code(&spec, Guard::default()).unwrap();
            assert!(r.passed(), "{r:?}");
            assert!(r.received_words > r.codewords as u64);
        }
    }

    #[test]
    fn zero_residue_code_passes() {
        let spec = CodeSpec::C1(TandemVtCode::zero(5, 2, 1).unwrap());
        assert!(verify_code(&spec, Guard::default()).unwrap().passed());
    }
}
