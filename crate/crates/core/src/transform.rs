//! The `l`-step derivative and the trunk / zero-signature decomposition of
//! its difference tail.
//!
//! A tandem duplication of length `l` inserts `l` zeros into the tail of
//! the derivative. After the decomposition that becomes a unit increment of
//! a single signature coordinate while the head and the trunk stay fixed.
//!
//! Signature coordinates are documented 1-based: coordinate `k` counts the
//! whole `l`-blocks of zeros in the gap before the `k`-th nonzero tail
//! symbol, coordinate `wt + 1` the trailing gap. In Rust slices that is
//! index `k - 1`.

use crate::error::{Error, Result};
use crate::words::Word;

/// `(u, v)` with `u` the first `l` symbols and `v_i = x_{i+l} - x_i mod q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DerivativePair {
    pub head: Word,
    pub tail: Word,
}

impl DerivativePair {
    pub fn step(&self) -> usize {
        self.head.len()
    }
}

pub fn derive(x: &Word, l: usize) -> Result<DerivativePair> {
    if l == 0 {
        return Err(Error::InvalidLength(l));
    }
    if x.len() < l {
        return Err(Error::WordTooShort {
            len: x.len(),
            required: l,
        });
    }
    let q = x.q();
    let s = x.symbols();
    let head = Word::from_trusted(s[..l].to_vec(), q);
    let tail = s[l..]
        .iter()
        .zip(s)
        .map(|(&later, &earlier)| (later + q - earlier) % q)
        .collect();
    Ok(DerivativePair {
        head,
        tail: Word::from_trusted(tail, q),
    })
}

/// Inverse of [`derive`]: `x_i = u_i` for `i <= l`, `x_{i+l} = x_i + v_i`.
pub fn integrate(pair: &DerivativePair) -> Result<Word> {
    pair.head.ensure_same_alphabet(&pair.tail)?;
    let l = pair.step();
    if l == 0 {
        return Err(Error::InvalidLength(0));
    }
    let q = pair.head.q();
    let mut out = Vec::with_capacity(l + pair.tail.len());
    out.extend_from_slice(pair.head.symbols());
    for (i, &d) in pair.tail.symbols().iter().enumerate() {
        out.push((out[i] + d) % q);
    }
    Ok(Word::from_trusted(out, q))
}

/// Lengths `m_0, ..., m_p` of the zero gaps around the `p` nonzero symbols.
fn zero_gaps(v: &Word) -> Vec<usize> {
    let mut gaps = vec![0];
    for &s in v.symbols() {
        if s == 0 {
            *gaps.last_mut().unwrap() += 1;
        } else {
            gaps.push(0);
        }
    }
    gaps
}

/// Shortens every maximal zero run of length `m` to `m mod l` zeros.
///
/// # Panics
/// If `l == 0`.
pub fn trunk(v: &Word, l: usize) -> Word {
    assert!(l >= 1, "trunk needs l >= 1");
    let mut out = Vec::with_capacity(v.len());
    let mut zeros = 0;
    for &s in v.symbols() {
        if s == 0 {
            zeros += 1;
        } else {
            out.extend(std::iter::repeat_n(0, zeros % l));
            out.push(s);
            zeros = 0;
        }
    }
    out.extend(std::iter::repeat_n(0, zeros % l));
    Word::from_trusted(out, v.q())
}

/// `(floor(m_0 / l), ..., floor(m_p / l))`, of length `wt_H(v) + 1`.
///
/// # Panics
/// If `l == 0`.
pub fn zero_signature(v: &Word, l: usize) -> Vec<usize> {
    assert!(l >= 1, "zero signature needs l >= 1");
    zero_gaps(v).into_iter().map(|m| m / l).collect()
}

/// Rebuilds `v` by inserting `signature[k] * l` zeros into gap `k` of
/// the trunk.
pub fn assemble(trunk: &Word, signature: &[usize], l: usize) -> Result<Word> {
    if l == 0 {
        return Err(Error::InvalidLength(0));
    }
    let gaps = zero_gaps(trunk);
    if gaps.len() != signature.len() {
        return Err(Error::IncompatibleDecomposition(format!(
            "signature has {} coordinates but the trunk has weight {}",
            signature.len(),
            gaps.len() - 1
        )));
    }
    if let Some(m) = gaps.iter().find(|&&m| m >= l) {
        return Err(Error::IncompatibleDecomposition(format!(
            "trunk contains a zero run of length {m} >= {l}"
        )));
    }
    let extra: usize = signature.iter().sum::<usize>() * l;
    let mut out = Vec::with_capacity(trunk.len() + extra);
    let mut gap = 0;
    for &s in trunk.symbols() {
        if s != 0 {
            out.extend(std::iter::repeat_n(0, signature[gap] * l));
            gap += 1;
        }
        out.push(s);
    }
    out.extend(std::iter::repeat_n(0, signature[gap] * l));
    Ok(Word::from_trusted(out, trunk.q()))
}

/// Trunk and zero signature of a difference tail.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignatureDecomposition {
    pub trunk: Word,
    pub signature: Vec<usize>,
}

impl SignatureDecomposition {
    pub fn of(v: &Word, l: usize) -> Self {
        SignatureDecomposition {
            trunk: trunk(v, l),
            signature: zero_signature(v, l),
        }
    }

    pub fn reassemble(&self, l: usize) -> Result<Word> {
        assemble(&self.trunk, &self.signature, l)
    }
}

/// `(head, trunk, signature)` of a word: the head and trunk are invariant
/// under tandem duplications and deletions of length `l`.
pub fn signature_of(x: &Word, l: usize) -> Result<(Word, SignatureDecomposition)> {
    let pair = derive(x, l)?;
    let dec = SignatureDecomposition::of(&pair.tail, l);
    Ok((pair.head, dec))
}
