//! Generic decoding by exhaustive search, the reference every syndrome
//! decoder is checked against.

use crate::channel::{error_sphere, ErrorKind};
use crate::error::{Error, Result};
use crate::words::Word;

/// The unique word of length `n` that satisfies `member` and turns into `y`
/// under errors of `kind`, found by undoing those errors in every possible
/// way.
pub fn oracle_decode<F>(y: &Word, n: usize, kind: ErrorKind, member: F) -> Result<Word>
where
    F: Fn(&Word) -> bool,
{
    let undo = kind.inverse();
    let gap = n as isize - y.len() as isize;
    let step = undo.length_delta();
    if gap % step != 0 || gap / step < 0 {
        return Err(Error::Uncorrectable);
    }
    let steps = (gap / step) as usize;
    let found: Vec<Word> = error_sphere(y, undo, steps)
        .members
        .into_iter()
        .filter(|x| member(x))
        .collect();
    match found.len() {
        0 => Err(Error::Uncorrectable),
        1 => Ok(found.into_iter().next().unwrap()),
        k => Err(Error::NotCorrecting(k)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s, 2).unwrap()
    }

    #[test]
    fn outcomes() {
        let everything = |_: &Word| true;
        assert_eq!(
            oracle_decode(&w("0110"), 4, ErrorKind::PalDup(2), everything).unwrap(),
            w("0110")
        );
        assert_eq!(
            oracle_decode(&w("001"), 2, ErrorKind::TandemDup(1), |x: &Word| *x
                == w("01"))
            .unwrap(),
            w("01")
        );
        assert_eq!(
            oracle_decode(&w("0011"), 3, ErrorKind::TandemDup(1), everything),
            Err(Error::NotCorrecting(2))
        );
        assert_eq!(
            oracle_decode(&w("0101"), 3, ErrorKind::TandemDup(1), everything),
            Err(Error::Uncorrectable)
        );
        assert_eq!(
            oracle_decode(&w("01010"), 4, ErrorKind::TandemDup(2), everything),
            Err(Error::Uncorrectable)
        );
    }
}
