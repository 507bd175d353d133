//! Binary code correcting one palindromic duplication of length 2.
//!
//! Codewords fix the number of length-1 runs modulo 5 and the weighted run
//! checksum `C(x) = sum_i i r_i(x)` modulo `2n + 1`. A duplication turns the
//! pattern `ab` at the end of run `j` into `abba`; the five ways this can
//! reshape the neighbouring runs shift `r^(1)` by five distinct amounts, and
//! within each case the checksum difference pins down `j`.

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::channel::palindromic_delete;
use crate::error::{Error, Result};
use crate::guard::Guard;
use crate::words::{run_profile, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PalindromicL2Code {
    n: usize,
    /// Residue of `r^(1)(x)` modulo 5.
    a: usize,
    /// Residue of `C(x)` modulo `2n + 1`.
    b: usize,
}

/// How a received word was decoded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecodeTrace {
    /// Case 1 to 5, from the shift of `r^(1)`.
    pub case: u8,
    /// `"1.a"`, `"1.b"`, `"2.a"`, `"2.b"`, `"3"`, `"4.a"`, `"4.b"` or `"5"`.
    pub subcase: &'static str,
    /// 1-based run of the received word ending in the duplicated `ab`.
    pub run: usize,
    /// 0-based position of the palindromic deletion applied to it.
    pub position: usize,
}

fn case_of(delta: usize) -> u8 {
    match delta {
        0 => 1,
        4 => 2,
        3 => 3,
        2 => 4,
        _ => 5,
    }
}

/// Run profile summary needed by the checksum formulas, with 1-based
/// run indexing.
struct Runs {
    lengths: Vec<usize>,
    starts: Vec<usize>,
    /// `suffix[k - 1] = sum_{i >= k} r_i`, with a trailing 0.
    suffix: Vec<usize>,
}

impl Runs {
    fn of(y: &Word) -> Result<Self> {
        let profile = run_profile(y)?;
        let lengths = profile.lengths().to_vec();
        let starts = profile.starts();
        let mut suffix = vec![0; lengths.len() + 1];
        for k in (0..lengths.len()).rev() {
            suffix[k] = suffix[k + 1] + lengths[k];
        }
        Ok(Runs {
            lengths,
            starts,
            suffix,
        })
    }

    fn count(&self) -> usize {
        self.lengths.len()
    }

    fn len(&self, j: usize) -> usize {
        self.lengths[j - 1]
    }

    fn start(&self, j: usize) -> usize {
        self.starts[j - 1]
    }

    fn end(&self, j: usize) -> usize {
        self.starts[j - 1] + self.lengths[j - 1]
    }

    /// `sum_{i >= k} r_i`, zero past the last run.
    fn tail_sum(&self, k: usize) -> usize {
        self.suffix[(k - 1).min(self.lengths.len())]
    }
}

impl PalindromicL2Code {
    pub fn new(n: usize, a: usize, b: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameters(
                "code length must be positive".into(),
            ));
        }
        if a > 4 {
            return Err(Error::InvalidParameters(format!(
                "a = {a} must lie in 0..=4"
            )));
        }
        if b > 2 * n {
            return Err(Error::InvalidParameters(format!(
                "b = {b} must lie in 0..={}",
                2 * n
            )));
        }
        Ok(PalindromicL2Code { n, a, b })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    fn modulus(&self) -> usize {
        2 * self.n + 1
    }

    /// `(r^(1)(x) mod 5, C(x) mod (2n + 1))` using this code's `n`.
    fn syndrome(&self, x: &Word) -> Result<(usize, usize)> {
        let runs = run_profile(x)?;
        Ok((
            runs.count_of_length(1) % 5,
            (runs.checksum() % self.modulus() as u64) as usize,
        ))
    }

    pub fn is_member(&self, x: &Word) -> Result<bool> {
        if x.q() != 2 {
            return Err(Error::BinaryOnly(x.q()));
        }
        if x.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                actual: x.len(),
            });
        }
        Ok(self.syndrome(x)? == (self.a, self.b))
    }

    pub fn decode(&self, y: &Word) -> Result<Word> {
        self.decode_traced(y).map(|(x, _)| x)
    }

    /// Decodes and reports the case, run and position used; the trace is
    /// `None` when `y` is already a codeword.
    pub fn decode_traced(&self, y: &Word) -> Result<(Word, Option<DecodeTrace>)> {
        if y.q() != 2 {
            return Err(Error::BinaryOnly(y.q()));
        }
        if y.len() == self.n {
            return if self.is_member(y)? {
                Ok((y.clone(), None))
            } else {
                Err(Error::DecodingFailure(format!("{y} is not a codeword")))
            };
        }
        if y.len() != self.n + 2 {
            return Err(Error::LengthMismatch {
                expected: self.n + 2,
                actual: y.len(),
            });
        }
        let (ones, checksum) = self.syndrome(y)?;
        let case = case_of((ones + 5 - self.a) % 5);
        let m = self.modulus();
        let diff = (checksum + m - self.b) % m;
        let runs = Runs::of(y)?;
        let r = runs.count();

        let mut found: Vec<(Word, DecodeTrace)> = Vec::new();
        for (subcase, j, value) in candidates(case, &runs) {
            if value % m != diff {
                continue;
            }
            let position = if subcase == "1.a" {
                if runs.len(j) < 4 {
                    continue;
                }
                runs.start(j)
            } else {
                runs.end(j) - 1
            };
            let Ok(x) = palindromic_delete(y, 2, position) else {
                continue;
            };
            if self.is_member(&x)? && found.iter().all(|(w, _)| *w != x) {
                let trace = DecodeTrace {
                    case,
                    subcase,
                    run: j,
                    position,
                };
                found.push((x, trace));
            }
        }
        match found.len() {
            1 => {
                let (x, trace) = found.pop().unwrap();
                Ok((x, Some(trace)))
            }
            0 => Err(Error::DecodingFailure(format!(
                "case {case}: no run of {y} (r = {r}) matches checksum difference {diff}"
            ))),
            k => Err(Error::DecodingFailure(format!(
                "case {case}: {k} distinct codewords explain {y}"
            ))),
        }
    }

    /// Every codeword in lexicographic order.
    pub fn codebook(&self, guard: Guard) -> Result<Vec<Word>> {
        let total = guard.check(self.n, 2)?;
        let n = self.n;
        Ok((0..total)
            .into_par_iter()
            .map(|i| Word::from_index(i, n, 2))
            .filter(|x| self.is_member(x).expect("binary word of length n"))
            .collect())
    }
}

/// `(subcase, j, checksum difference)` for every run `j` the case allows,
/// scanned left to right.
fn candidates(case: u8, runs: &Runs) -> Vec<(&'static str, usize, usize)> {
    let r = runs.count();
    let mut out = Vec::new();
    let end_case = |out: &mut Vec<_>, name, back: usize| {
        if r > back {
            out.push((name, r - back, 2 * r - 1));
        }
    };
    match case {
        1 => {
            for j in 1..=r {
                out.push(("1.a", j, 2 * j));
            }
            end_case(&mut out, "1.b", 2);
        }
        2 => {
            for j in 1..=r.saturating_sub(2) {
                out.push(("2.a", j, 2 * j + 3));
            }
        }
        // `aba` at the very end becomes `abbaa`: two length-1 runs turn
        // into length-2 runs, the same shift of `r^(1)` as case 3
        3 => {
            for j in 1..=r.saturating_sub(3) {
                out.push(("3", j, 2 * j + 3));
            }
            end_case(&mut out, "2.b", 2);
        }
        4 => {
            for j in 1..=r.saturating_sub(4) {
                out.push(("4.a", j, 2 * j + 5 + 2 * runs.tail_sum(j + 4)));
            }
            end_case(&mut out, "4.b", 3);
        }
        _ => {
            for j in 1..=r.saturating_sub(3) {
                out.push(("5", j, 2 * j + 3 + 2 * runs.tail_sum(j + 3)));
            }
        }
    }
    out
}

pub fn c2_member(x: &Word, code: &PalindromicL2Code) -> Result<bool> {
    code.is_member(x)
}

pub fn c2_decode(y: &Word, code: &PalindromicL2Code) -> Result<Word> {
    code.decode(y)
}

/// Size of every `C_2(n, a, b)`, indexed `[a][b]`.
pub fn c2_size_table(n: usize, guard: Guard) -> Result<Vec<Vec<u64>>> {
    let total = guard.check(n, 2)?;
    let m = 2 * n + 1;
    let empty = || vec![vec![0u64; m]; 5];
    Ok((0..total)
        .into_par_iter()
        .fold(empty, |mut acc, i| {
            let runs = run_profile(&Word::from_index(i, n, 2)).expect("n >= 1");
            acc[runs.count_of_length(1) % 5][(runs.checksum() % m as u64) as usize] += 1;
            acc
        })
        .reduce(empty, |mut a, b| {
            for (ra, rb) in a.iter_mut().zip(b) {
                for (x, y) in ra.iter_mut().zip(rb) {
                    *x += y;
                }
            }
            a
        }))
}

/// The largest `C_2(n, a, b)`, ties broken by smallest `(a, b)`.
pub fn c2_best_params(n: usize, guard: Guard) -> Result<(PalindromicL2Code, u64)> {
    if n == 0 {
        return Err(Error::InvalidParameters(
            "code length must be positive".into(),
        ));
    }
    let table = c2_size_table(n, guard)?;
    let mut best = (0, 0, 0);
    for (a, row) in table.iter().enumerate() {
        for (b, &count) in row.iter().enumerate() {
            if count > best.2 {
                best = (a, b, count);
            }
        }
    }
    Ok((PalindromicL2Code::new(n, best.0, best.1)?, best.2))
}

/// `2^n / (5 (2n + 1))`.
pub fn c2_size_lower_bound(n: usize) -> BigRational {
    BigRational::new(BigInt::from(2).pow(n as u32), BigInt::from(5 * (2 * n + 1)))
}
