//! Tandem-duplication-correcting code: the zero signature of the derivative
//! tail must satisfy a weighted VT checksum, with one residue per signature
//! length.
//!
//! A single tandem duplication of length `l` increments exactly one
//! signature coordinate `k`, which raises the weighted checksum by `k`.
//! Since `1 <= k <= m < m + 1` the syndrome names `k` directly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::rll_weight_count;
use crate::combinatorics::binomial_big;
use crate::error::{Error, Result};
use crate::guard::Guard;
use crate::transform::{
    assemble, derive, integrate, zero_signature, DerivativePair, SignatureDecomposition,
};
use crate::words::Word;

/// `sum_k k * s_k` with 1-based `k`.
pub fn vt_checksum(s: &[usize]) -> usize {
    s.iter().enumerate().map(|(k, &v)| (k + 1) * v).sum()
}

/// `sum_k k * s_k = a mod (|s| + 1)`.
pub fn vt_member(s: &[usize], a: usize) -> bool {
    vt_checksum(s) % (s.len() + 1) == a
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TandemVtCode {
    n: usize,
    q: u32,
    l: usize,
    /// `residues[s - 1]` is the residue for signatures of length `s`.
    residues: Vec<usize>,
}

impl TandemVtCode {
    pub fn new(n: usize, q: u32, l: usize, residues: Vec<usize>) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidAlphabet(q));
        }
        if l == 0 {
            return Err(Error::InvalidLength(0));
        }
        if n < l {
            return Err(Error::InvalidParameters(format!(
                "code length {n} is below l = {l}"
            )));
        }
        if residues.len() != n - l + 1 {
            return Err(Error::InvalidParameters(format!(
                "expected {} residues, got {}",
                n - l + 1,
                residues.len()
            )));
        }
        if let Some((i, &a)) = residues.iter().enumerate().find(|&(i, &a)| a > i + 1) {
            return Err(Error::InvalidParameters(format!(
                "residue {a} for signature length {} exceeds it",
                i + 1
            )));
        }
        Ok(TandemVtCode { n, q, l, residues })
    }

    /// All residues zero.
    pub fn zero(n: usize, q: u32, l: usize) -> Result<Self> {
        TandemVtCode::new(n, q, l, vec![0; n.saturating_sub(l) + 1])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn residues(&self) -> &[usize] {
        &self.residues
    }

    /// Residue applied to signatures of length `s`.
    pub fn residue(&self, s: usize) -> usize {
        self.residues[s - 1]
    }

    fn check_word(&self, x: &Word, len: usize) -> Result<()> {
        if x.q() != self.q {
            return Err(Error::AlphabetMismatch {
                left: self.q,
                right: x.q(),
            });
        }
        if x.len() != len {
            return Err(Error::LengthMismatch {
                expected: len,
                actual: x.len(),
            });
        }
        Ok(())
    }

    pub fn is_member(&self, x: &Word) -> Result<bool> {
        self.check_word(x, self.n)?;
        let pair = derive(x, self.l)?;
        let sigma = zero_signature(&pair.tail, self.l);
        Ok(vt_member(&sigma, self.residue(sigma.len())))
    }

    /// Corrects at most one tandem duplication of length `l`.
    pub fn decode(&self, y: &Word) -> Result<Word> {
        if y.len() == self.n {
            return if self.is_member(y)? {
                Ok(y.clone())
            } else {
                Err(Error::DecodingFailure(format!("{y} is not a codeword")))
            };
        }
        self.check_word(y, self.n + self.l)?;
        let pair = derive(y, self.l)?;
        let SignatureDecomposition {
            trunk,
            mut signature,
        } = SignatureDecomposition::of(&pair.tail, self.l);
        let m = signature.len();
        let k = (vt_checksum(&signature) + (m + 1) - self.residue(m)) % (m + 1);
        if k == 0 || signature[k - 1] == 0 {
            return Err(Error::DecodingFailure(format!(
                "syndrome {k} names no duplicated block of {y}"
            )));
        }
        signature[k - 1] -= 1;
        let tail = assemble(&trunk, &signature, self.l)?;
        let x = integrate(&DerivativePair {
            head: pair.head,
            tail,
        })?;
        if !self.is_member(&x)? {
            return Err(Error::DecodingFailure(format!("{x} is not a codeword")));
        }
        Ok(x)
    }

    /// Every codeword in lexicographic order.
    pub fn codebook(&self, guard: Guard) -> Result<Vec<Word>> {
        let total = guard.check(self.n, self.q)?;
        let (n, q) = (self.n, self.q);
        Ok((0..total)
            .into_par_iter()
            .map(|i| Word::from_index(i, n, q))
            .filter(|x| self.is_member(x).expect("length and alphabet match"))
            .collect())
    }
}

pub fn c1_member(x: &Word, code: &TandemVtCode) -> Result<bool> {
    code.is_member(x)
}

pub fn c1_decode(y: &Word, code: &TandemVtCode) -> Result<Word> {
    code.decode(y)
}

/// Picks, per signature length, the residue holding the most words (ties go
/// to the smaller residue) and returns the code with its size.
pub fn c1_best_params(n: usize, l: usize, q: u32, guard: Guard) -> Result<(TandemVtCode, u64)> {
    let total = guard.check(n, q)?;
    // validates (n, q, l) before the sweep
    TandemVtCode::zero(n, q, l)?;
    let lengths = n - l + 1;
    let empty = || (1..=lengths).map(|s| vec![0u64; s + 1]).collect::<Vec<_>>();
    let counts = (0..total)
        .into_par_iter()
        .fold(empty, |mut acc, i| {
            let x = Word::from_index(i, n, q);
            let pair = derive(&x, l).expect("n >= l");
            let sigma = zero_signature(&pair.tail, l);
            let s = sigma.len();
            acc[s - 1][vt_checksum(&sigma) % (s + 1)] += 1;
            acc
        })
        .reduce(empty, |mut a, b| {
            for (ra, rb) in a.iter_mut().zip(b) {
                for (x, y) in ra.iter_mut().zip(rb) {
                    *x += y;
                }
            }
            a
        });
    let mut residues = Vec::with_capacity(lengths);
    let mut size = 0;
    for row in &counts {
        let (best, &count) = row
            .iter()
            .enumerate()
            .rev()
            .max_by_key(|&(_, c)| c)
            .expect("nonempty residue row");
        residues.push(best);
        size += count;
    }
    Ok((TandemVtCode::new(n, q, l, residues)?, size))
}

/// `q^l sum_nu sum_w A(n - (nu + 1) l, l - 1, w) C(w + nu, nu) / (w + 2)`,
/// a size every best-residue code reaches.
pub fn c1_size_lower_bound(n: usize, l: usize, q: u32) -> BigRational {
    assert!(l >= 1 && n >= l, "needs n >= l >= 1");
    let mut sum = BigRational::zero();
    for nu in 0..n / l {
        let rest = n - (nu + 1) * l;
        for w in 0..=rest {
            let trunks = rll_weight_count(rest, l - 1, w, q);
            if trunks.is_zero() {
                continue;
            }
            let sigs = binomial_big((w + nu) as i64, nu as i64);
            sum += BigRational::new(BigInt::from(trunks * sigs), BigInt::from(w + 2));
        }
    }
    sum * BigRational::from_integer(BigInt::from(q).pow(l as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::tandem_duplicate;

    #[test]
    fn vt_examples() {
        assert!(vt_member(&[0, 1, 0], 2));
        assert!(!vt_member(&[0, 1, 0], 0));
        assert!(vt_member(&[0; 5], 0));
        assert_eq!(vt_checksum(&[1, 1, 0]), 3);
    }

    #[test]
    fn parameter_validation() {
        assert!(TandemVtCode::new(6, 2, 2, vec![0; 5]).is_ok());
        assert!(TandemVtCode::new(6, 2, 2, vec![0; 4]).is_err());
        assert!(TandemVtCode::new(6, 2, 2, vec![2, 0, 0, 0, 0]).is_err());
        assert!(TandemVtCode::new(6, 2, 2, vec![1, 2, 3, 4, 5]).is_ok());
        assert!(TandemVtCode::new(1, 2, 2, vec![0]).is_err());
    }

    #[test]
    fn round_trip_on_best_code() {
        let (code, size) = c1_best_params(6, 2, 2, Guard::default()).unwrap();
        let book = code.codebook(Guard::default()).unwrap();
        assert_eq!(book.len() as u64, size);
        for c in &book {
            assert_eq!(code.decode(c).unwrap(), *c);
            for p in 0..=c.len() - 2 {
                let y = tandem_duplicate(c, 2, p).unwrap();
                assert_eq!(code.decode(&y).unwrap(), *c, "c={c} p={p}");
            }
        }
    }

    #[test]
    fn zero_signature_received_word_fails() {
        // v = (1,1,1,1) has no zero block to remove
        let code = TandemVtCode::zero(4, 2, 2).unwrap();
        let y = Word::parse("010101", 2).unwrap();
        assert!(matches!(code.decode(&y), Err(Error::DecodingFailure(_))));
        assert!(code.decode(&Word::parse("0101010", 2).unwrap()).is_err());
    }

    #[test]
    fn best_size_meets_lower_bound() {
        for (n, l, q) in [(6, 2, 2), (8, 1, 2), (7, 2, 3), (5, 3, 2)] {
            let (_, size) = c1_best_params(n, l, q, Guard::default()).unwrap();
            let bound = c1_size_lower_bound(n, l, q);
            assert!(
                BigRational::from_integer(BigInt::from(size)) >= bound,
                "n={n} l={l} q={q}"
            );
        }
        let (_, size) = c1_best_params(3, 3, 2, Guard::default()).unwrap();
        assert_eq!(size, 8);
    }
}
