//! Closed forms and upper bounds for single-word error sphere sizes.
//!
//! Every function here has an enumeration counterpart in
//! [`crate::channel::error_sphere`]; the tests compare them exhaustively.

use crate::combinatorics::{binomial, bounded_compositions};
use crate::error::{Error, Result};
use crate::transform::{derive, zero_signature};
use crate::words::{run_profile, Word};

/// `|S^{tau_l}_t(x)| = C(wt_H(v_x) + t, t)`.
pub fn tandem_dup_sphere_size(x: &Word, l: usize, t: usize) -> Result<u128> {
    let pair = derive(x, l)?;
    let wt = pair.tail.hamming_weight() as u64;
    Ok(binomial(wt + t as u64, t as u64))
}

/// Number of vectors `s <= sigma_l(v_x)` with `|s|_1 = t`; zero when the
/// signature holds fewer than `t` blocks.
pub fn tandem_del_sphere_size(x: &Word, l: usize, t: usize) -> Result<u128> {
    let pair = derive(x, l)?;
    let sigma = zero_signature(&pair.tail, l);
    Ok(bounded_compositions(&sigma, t))
}

/// `|S^{rho_1}_1(x)| = r(x)`.
pub fn pal_dup_sphere_size_l1(x: &Word) -> Result<usize> {
    Ok(run_profile(x)?.count())
}

/// `|S^{rho_2}_1(x)| = 2 r(x) - r^(1)(x) - 1`.
pub fn pal_dup_sphere_size_l2(x: &Word) -> Result<usize> {
    if x.len() < 2 {
        return Err(Error::WordTooShort {
            len: x.len(),
            required: 2,
        });
    }
    let runs = run_profile(x)?;
    Ok(2 * runs.count() - runs.count_of_length(1) - 1)
}

/// `n - l + 1 - sum_{i > l} (i - l) r^(i)(x)`, an upper bound on
/// `|S^{rho_l}_1(x)|`.
pub fn pal_dup_sphere_upper_bound(x: &Word, l: usize) -> Result<usize> {
    if l == 0 {
        return Err(Error::InvalidLength(0));
    }
    if x.len() < l {
        return Err(Error::WordTooShort {
            len: x.len(),
            required: l,
        });
    }
    let runs = run_profile(x)?;
    let surplus: usize = runs
        .lengths()
        .iter()
        .filter(|&&r| r > l)
        .map(|&r| r - l)
        .sum();
    Ok(x.len() - l + 1 - surplus)
}

/// `|S^{rho_1^D}_1(x)| = r^(>=2)(x)`.
pub fn pal_del_sphere_size_l1(x: &Word) -> Result<usize> {
    Ok(run_profile(x)?.count_at_least(2))
}

/// `|S^{rho_2^D}_1(x)| = r^(2)_I(x) + r^(>=4)(x)` for binary words, where
/// `r^(2)_I` counts length-2 runs touching neither end of the word. Words
/// shorter than 4 have no deletion window and give 0.
pub fn pal_del_sphere_size_l2_binary(x: &Word) -> Result<usize> {
    if x.q() != 2 {
        return Err(Error::BinaryOnly(x.q()));
    }
    if x.len() < 4 {
        return Ok(0);
    }
    let runs = run_profile(x)?;
    let lengths = runs.lengths();
    let last = lengths.len() - 1;
    let interior_pairs = lengths
        .iter()
        .enumerate()
        .filter(|&(i, &r)| r == 2 && i != 0 && i != last)
        .count();
    Ok(interior_pairs + runs.count_at_least(4))
}

/// The `l x (n - 2l + 1)` difference matrix whose zero columns mark the
/// palindromes of half-length `l`.
///
/// Rows and columns are 1-based: entry `(r, c)` is
/// `x_{c + 2l - r} - x_{c + r - 1} mod q`, so column `c` is all zero exactly
/// when a palindrome starts at position `c - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PalindromeMatrix {
    l: usize,
    cols: usize,
    // row-major, rows * cols entries
    entries: Vec<u32>,
}

impl PalindromeMatrix {
    pub fn rows(&self) -> usize {
        self.l
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> u32 {
        self.entries[(r - 1) * self.cols + (c - 1)]
    }

    fn column_is_zero(&self, c: usize) -> bool {
        (1..=self.l).all(|r| self.entry(r, c) == 0)
    }

    /// 1-based indices of the all-zero columns.
    pub fn zero_columns(&self) -> Vec<usize> {
        (1..=self.cols)
            .filter(|&c| self.column_is_zero(c))
            .collect()
    }

    /// Number of maximal blocks of consecutive all-zero columns.
    pub fn zero_column_runs(&self) -> usize {
        let zero = self.zero_columns();
        zero.iter()
            .enumerate()
            .filter(|&(k, &c)| k == 0 || zero[k - 1] + 1 != c)
            .count()
    }
}

pub fn palindrome_matrix(x: &Word, l: usize) -> Result<PalindromeMatrix> {
    if l == 0 {
        return Err(Error::InvalidLength(0));
    }
    let n = x.len();
    if n < 2 * l {
        return Err(Error::WordTooShort {
            len: n,
            required: 2 * l,
        });
    }
    let q = x.q();
    let s = x.symbols();
    let cols = n - 2 * l + 1;
    let mut entries = Vec::with_capacity(l * cols);
    for r in 1..=l {
        for c in 1..=cols {
            let a = s[c + 2 * l - r - 1];
            let b = s[c + r - 2];
            entries.push((a + q - b) % q);
        }
    }
    Ok(PalindromeMatrix { l, cols, entries })
}

/// Number of runs of all-zero columns in the palindrome matrix, an upper
/// bound on `|S^{rho_l^D}_1(x)|`.
pub fn pal_del_sphere_upper_bound(x: &Word, l: usize) -> Result<usize> {
    Ok(palindrome_matrix(x, l)?.zero_column_runs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::{error_sphere, ErrorKind};

    fn w(s: &str, q: u32) -> Word {
        Word::parse(s, q).unwrap()
    }

    fn oracle(x: &Word, kind: ErrorKind, t: usize) -> u128 {
        error_sphere(x, kind, t).len() as u128
    }

    #[test]
    fn tandem_dup_examples() {
        let x = w("21010121", 3);
        // v = (1,0,0,0,2,0) has weight 2
        assert_eq!(tandem_dup_sphere_size(&x, 2, 1).unwrap(), 3);
        assert_eq!(oracle(&x, ErrorKind::TandemDup(2), 1), 3);
        assert_eq!(tandem_dup_sphere_size(&x, 2, 2).unwrap(), 6);
        assert_eq!(oracle(&x, ErrorKind::TandemDup(2), 2), 6);
        assert_eq!(tandem_dup_sphere_size(&w("1111", 2), 1, 1).unwrap(), 1);
    }

    #[test]
    fn tandem_del_examples() {
        let x = w("2121010121", 3);
        assert_eq!(tandem_del_sphere_size(&x, 2, 1).unwrap(), 2);
        assert_eq!(oracle(&x, ErrorKind::TandemDel(2), 1), 2);
        assert_eq!(tandem_del_sphere_size(&w("0121", 3), 1, 1).unwrap(), 0);
        assert_eq!(tandem_del_sphere_size(&w("0000", 2), 1, 2).unwrap(), 1);
        assert_eq!(oracle(&w("0000", 2), ErrorKind::TandemDel(1), 2), 1);
    }

    #[test]
    fn palindromic_dup_examples() {
        assert_eq!(pal_dup_sphere_size_l1(&w("001", 2)).unwrap(), 2);
        assert_eq!(pal_dup_sphere_size_l1(&w("11110220", 3)).unwrap(), 4);
        assert_eq!(pal_dup_sphere_size_l1(&w("2222", 3)).unwrap(), 1);

        let x = w("11110220", 3);
        assert_eq!(pal_dup_sphere_size_l2(&x).unwrap(), 5);
        assert_eq!(oracle(&x, ErrorKind::PalDup(2), 1), 5);
        assert_eq!(pal_dup_sphere_size_l2(&w("01", 2)).unwrap(), 1);
        assert_eq!(pal_dup_sphere_size_l2(&w("00000", 2)).unwrap(), 1);
        assert!(pal_dup_sphere_size_l2(&w("0", 2)).is_err());

        let y = w("010010", 2);
        assert_eq!(pal_dup_sphere_upper_bound(&y, 3).unwrap(), 4);
        assert_eq!(oracle(&y, ErrorKind::PalDup(3), 1), 3);
        assert_eq!(pal_dup_sphere_upper_bound(&w("000000", 2), 2).unwrap(), 1);
        assert_eq!(pal_dup_sphere_upper_bound(&x, 2).unwrap(), 5);
    }

    #[test]
    fn palindromic_del_examples() {
        assert_eq!(pal_del_sphere_size_l1(&w("001", 2)).unwrap(), 1);
        assert_eq!(pal_del_sphere_size_l1(&w("0101", 2)).unwrap(), 0);
        assert_eq!(pal_del_sphere_size_l1(&w("11110220", 3)).unwrap(), 2);

        assert_eq!(pal_del_sphere_size_l2_binary(&w("01100001", 2)).unwrap(), 2);
        assert_eq!(oracle(&w("01100001", 2), ErrorKind::PalDel(2), 1), 2);
        assert_eq!(pal_del_sphere_size_l2_binary(&w("0101", 2)).unwrap(), 0);
        assert_eq!(pal_del_sphere_size_l2_binary(&w("1100", 2)).unwrap(), 0);
        assert_eq!(oracle(&w("1100", 2), ErrorKind::PalDel(2), 1), 0);
        assert_eq!(pal_del_sphere_size_l2_binary(&w("011", 2)).unwrap(), 0);
        assert_eq!(
            pal_del_sphere_size_l2_binary(&w("0110", 3)),
            Err(Error::BinaryOnly(3))
        );
    }

    #[test]
    fn palindrome_matrix_example() {
        let x = w("21011012210", 3);
        let a = palindrome_matrix(&x, 3).unwrap();
        let expected = [[1, 0, 2, 1, 0, 0], [0, 0, 0, 1, 2, 0], [1, 0, 2, 1, 1, 0]];
        for (r, row) in expected.iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                assert_eq!(a.entry(r + 1, c + 1), e, "entry ({}, {})", r + 1, c + 1);
            }
        }
        assert_eq!(a.zero_columns(), vec![2, 6]);
        assert_eq!(pal_del_sphere_upper_bound(&x, 3).unwrap(), 2);
        assert_eq!(oracle(&x, ErrorKind::PalDel(3), 1), 2);
    }

    #[test]
    fn palindrome_matrix_edge_cases() {
        assert!(palindrome_matrix(&w("0120", 3), 2)
            .unwrap()
            .zero_columns()
            .is_empty());
        assert_eq!(pal_del_sphere_upper_bound(&w("012012", 3), 2).unwrap(), 0);
        let c = palindrome_matrix(&w("1111", 2), 2).unwrap();
        assert_eq!(c.zero_columns(), vec![1]);
        assert_eq!(pal_del_sphere_upper_bound(&w("11111", 2), 2).unwrap(), 1);
        assert_eq!(
            palindrome_matrix(&w("11111", 2), 2).unwrap().zero_columns(),
            vec![1, 2]
        );
        assert!(palindrome_matrix(&w("111", 2), 2).is_err());
    }
}
