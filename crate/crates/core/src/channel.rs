//! Tandem and palindromic duplications and deletions, error spheres and
//! balls, and the closed condition systems telling when two palindromic
//! operations produce the same word.
//!
//! Positions are 0-based prefix lengths: an operation "at `p`" acts on the
//! block that starts right after the first `p` symbols.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::words::Word;

/// The four error operations, each with its block length `l >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ErrorKind {
    TandemDup(usize),
    TandemDel(usize),
    PalDup(usize),
    PalDel(usize),
}

/// Whether an operation lengthens or shortens a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Duplication,
    Deletion,
}

impl ErrorKind {
    pub fn from_name(name: &str, l: usize) -> Result<Self> {
        match name {
            "tandem-dup" => Ok(ErrorKind::TandemDup(l)),
            "tandem-del" => Ok(ErrorKind::TandemDel(l)),
            "pal-dup" => Ok(ErrorKind::PalDup(l)),
            "pal-del" => Ok(ErrorKind::PalDel(l)),
            other => Err(Error::Parse(format!("unknown error kind {other:?}"))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ErrorKind::TandemDup(_) => "tandem-dup",
            ErrorKind::TandemDel(_) => "tandem-del",
            ErrorKind::PalDup(_) => "pal-dup",
            ErrorKind::PalDel(_) => "pal-del",
        }
    }

    /// Block length `l` of the operation.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        match *self {
            ErrorKind::TandemDup(l)
            | ErrorKind::TandemDel(l)
            | ErrorKind::PalDup(l)
            | ErrorKind::PalDel(l) => l,
        }
    }

    pub fn direction(&self) -> Direction {
        match self {
            ErrorKind::TandemDup(_) | ErrorKind::PalDup(_) => Direction::Duplication,
            ErrorKind::TandemDel(_) | ErrorKind::PalDel(_) => Direction::Deletion,
        }
    }

    pub fn is_deletion(&self) -> bool {
        self.direction() == Direction::Deletion
    }

    pub fn is_palindromic(&self) -> bool {
        matches!(self, ErrorKind::PalDup(_) | ErrorKind::PalDel(_))
    }

    /// The operation undoing this one.
    pub fn inverse(&self) -> ErrorKind {
        match *self {
            ErrorKind::TandemDup(l) => ErrorKind::TandemDel(l),
            ErrorKind::TandemDel(l) => ErrorKind::TandemDup(l),
            ErrorKind::PalDup(l) => ErrorKind::PalDel(l),
            ErrorKind::PalDel(l) => ErrorKind::PalDup(l),
        }
    }

    /// Signed change in word length caused by one error.
    pub fn length_delta(&self) -> isize {
        match self.direction() {
            Direction::Duplication => self.len() as isize,
            Direction::Deletion => -(self.len() as isize),
        }
    }

    pub fn apply(&self, x: &Word, p: usize) -> Result<Word> {
        match *self {
            ErrorKind::TandemDup(l) => tandem_duplicate(x, l, p),
            ErrorKind::TandemDel(l) => tandem_delete(x, l, p),
            ErrorKind::PalDup(l) => palindromic_duplicate(x, l, p),
            ErrorKind::PalDel(l) => palindromic_delete(x, l, p),
        }
    }

    /// Every position at which this operation is defined on `x`, ascending.
    pub fn positions(&self, x: &Word) -> Vec<usize> {
        let l = self.len();
        let n = x.len();
        if l == 0 {
            return Vec::new();
        }
        match self.direction() {
            Direction::Duplication if n >= l => (0..=n - l).collect(),
            Direction::Deletion if n >= 2 * l => {
                let s = x.symbols();
                (0..=n - 2 * l)
                    .filter(|&p| {
                        if self.is_palindromic() {
                            is_palindromic_square(s, l, p)
                        } else {
                            is_tandem_square(s, l, p)
                        }
                    })
                    .collect()
            }
            _ => Vec::new(),
        }
    }
}

impl fmt::Display for ErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (l={})", self.name(), self.len())
    }
}

fn is_tandem_square(s: &[u32], l: usize, p: usize) -> bool {
    s[p..p + l] == s[p + l..p + 2 * l]
}

fn is_palindromic_square(s: &[u32], l: usize, p: usize) -> bool {
    (0..l).all(|m| s[p + m] == s[p + 2 * l - 1 - m])
}

fn check_dup_position(x: &Word, l: usize, p: usize) -> Result<()> {
    if l == 0 {
        return Err(Error::InvalidLength(l));
    }
    if x.len() < l || p > x.len() - l {
        return Err(Error::InvalidPosition {
            position: p,
            len: x.len(),
            l,
        });
    }
    Ok(())
}

fn check_del_position(x: &Word, l: usize, p: usize) -> Result<()> {
    if l == 0 {
        return Err(Error::InvalidLength(l));
    }
    if x.len() < 2 * l || p > x.len() - 2 * l {
        return Err(Error::InvalidPosition {
            position: p,
            len: x.len(),
            l,
        });
    }
    Ok(())
}

/// `(u v w) -> (u v v w)` with `|u| = p`, `|v| = l`.
pub fn tandem_duplicate(x: &Word, l: usize, p: usize) -> Result<Word> {
    check_dup_position(x, l, p)?;
    let s = x.symbols();
    let mut out = Vec::with_capacity(s.len() + l);
    out.extend_from_slice(&s[..p + l]);
    out.extend_from_slice(&s[p..]);
    Ok(Word::from_trusted(out, x.q()))
}

/// `(u v w) -> (u v v^R w)` with `|u| = p`, `|v| = l`.
pub fn palindromic_duplicate(x: &Word, l: usize, p: usize) -> Result<Word> {
    check_dup_position(x, l, p)?;
    let s = x.symbols();
    let mut out = Vec::with_capacity(s.len() + l);
    out.extend_from_slice(&s[..p + l]);
    out.extend(s[p..p + l].iter().rev());
    out.extend_from_slice(&s[p + l..]);
    Ok(Word::from_trusted(out, x.q()))
}

fn remove_second_block(x: &Word, l: usize, p: usize) -> Word {
    let s = x.symbols();
    let mut out = Vec::with_capacity(s.len() - l);
    out.extend_from_slice(&s[..p + l]);
    out.extend_from_slice(&s[p + 2 * l..]);
    Word::from_trusted(out, x.q())
}

/// `(u v v w) -> (u v w)`; fails unless a tandem repeat of length `l`
/// starts at `p`.
pub fn tandem_delete(x: &Word, l: usize, p: usize) -> Result<Word> {
    check_del_position(x, l, p)?;
    if !is_tandem_square(x.symbols(), l, p) {
        return Err(Error::NotATandem(p));
    }
    Ok(remove_second_block(x, l, p))
}

/// `(u v v^R w) -> (u v w)`; fails unless a palindrome of half-length `l`
/// starts at `p`.
pub fn palindromic_delete(x: &Word, l: usize, p: usize) -> Result<Word> {
    check_del_position(x, l, p)?;
    if !is_palindromic_square(x.symbols(), l, p) {
        return Err(Error::NotAPalindrome(p));
    }
    Ok(remove_second_block(x, l, p))
}

/// Positions where the deletion `kind` succeeds on `x`.
pub fn deletion_positions(x: &Word, kind: ErrorKind) -> Result<Vec<usize>> {
    if !kind.is_deletion() {
        return Err(Error::WrongKind {
            expected: "deletion",
        });
    }
    Ok(kind.positions(x))
}

/// The words reachable from `center` by exactly `t` errors of one kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ErrorSphere {
    pub center: Word,
    pub kind: ErrorKind,
    pub t: usize,
    pub members: BTreeSet<Word>,
}

impl ErrorSphere {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

fn one_step(level: &BTreeSet<Word>, kind: ErrorKind) -> BTreeSet<Word> {
    let mut next = BTreeSet::new();
    for w in level {
        for p in kind.positions(w) {
            next.insert(kind.apply(w, p).expect("position came from positions()"));
        }
    }
    next
}

/// Breadth-first sphere enumeration: `t` rounds of single errors applied to
/// the previous round's (deduplicated) words. Memory is `O(|sphere| * n)`.
pub fn error_sphere(x: &Word, kind: ErrorKind, t: usize) -> ErrorSphere {
    let mut level = BTreeSet::from([x.clone()]);
    for _ in 0..t {
        level = one_step(&level, kind);
        if level.is_empty() {
            break;
        }
    }
    ErrorSphere {
        center: x.clone(),
        kind,
        t,
        members: level,
    }
}

/// Union of the spheres of radius `0..=t`.
pub fn error_ball(x: &Word, kind: ErrorKind, t: usize) -> BTreeSet<Word> {
    let mut ball = BTreeSet::from([x.clone()]);
    let mut level = ball.clone();
    for _ in 0..t {
        level = one_step(&level, kind);
        if level.is_empty() {
            break;
        }
        ball.extend(level.iter().cloned());
    }
    ball
}

fn check_pair(x: &Word, y: &Word) -> Result<()> {
    x.ensure_same_alphabet(y)?;
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            expected: x.len(),
            actual: y.len(),
        });
    }
    Ok(())
}

/// `B_t(x) ∩ B_t(y)` for two words of equal length.
pub fn ball_intersection(x: &Word, y: &Word, kind: ErrorKind, t: usize) -> Result<BTreeSet<Word>> {
    check_pair(x, y)?;
    let bx = error_ball(x, kind, t);
    let by = error_ball(y, kind, t);
    Ok(bx.intersection(&by).cloned().collect())
}

pub fn balls_intersect(x: &Word, y: &Word, kind: ErrorKind, t: usize) -> Result<bool> {
    Ok(intersection_witness(x, y, kind, t)?.is_some())
}

/// The smallest common element of the two balls, if any.
pub fn intersection_witness(x: &Word, y: &Word, kind: ErrorKind, t: usize) -> Result<Option<Word>> {
    Ok(ball_intersection(x, y, kind, t)?.into_iter().next())
}

/// A pair of distinct codewords whose balls share a word, together with
/// that word. `None` means the balls are pairwise disjoint.
pub fn find_ball_collision(
    codewords: &[Word],
    kind: ErrorKind,
    t: usize,
) -> Option<(Word, Word, Word)> {
    let mut owner: HashMap<Word, usize> = HashMap::new();
    for (idx, c) in codewords.iter().enumerate() {
        for w in error_ball(c, kind, t) {
            match owner.get(&w) {
                Some(&other) if other != idx => {
                    return Some((codewords[other].clone(), c.clone(), w));
                }
                Some(_) => {}
                None => {
                    owner.insert(w, idx);
                }
            }
        }
    }
    None
}

/// Applies one uniformly chosen error of `kind`; `None` when no position is
/// available.
pub fn inject_random_error<R: Rng + ?Sized>(
    x: &Word,
    kind: ErrorKind,
    rng: &mut R,
) -> Option<(usize, Word)> {
    let positions = kind.positions(x);
    if positions.is_empty() {
        return None;
    }
    let p = positions[rng.gen_range(0..positions.len())];
    Some((p, kind.apply(x, p).ok()?))
}

// 1-based symbol access, matching the indexing of the condition systems.
fn at(s: &[u32], k: usize) -> u32 {
    s[k - 1]
}

fn check_predicate_args(n: usize, l: usize, i: usize, j: usize, dir: Direction) -> Result<()> {
    if l == 0 {
        return Err(Error::InvalidLength(l));
    }
    if j == 0 {
        return Err(Error::InvalidPosition {
            position: i,
            len: n,
            l,
        });
    }
    let span = match dir {
        Direction::Duplication => l,
        Direction::Deletion => 2 * l,
    };
    if i + j + span > n {
        return Err(Error::InvalidPosition {
            position: i + j,
            len: n,
            l,
        });
    }
    Ok(())
}

/// Decides `rho(x, i) = rho(y, i + j)` (duplication) or
/// `rho^D(x, i) = rho^D(y, i + j)` (deletion) for palindromic operations of
/// length `l` and offset `j > 0`, by evaluating the symbol-equality system
/// for two words. With `y = x` it reduces to the single-word system of
/// [`same_outcome_single_word`].
pub fn same_outcome_predicate(
    x: &Word,
    y: &Word,
    l: usize,
    i: usize,
    j: usize,
    dir: Direction,
) -> Result<bool> {
    check_pair(x, y)?;
    let n = x.len();
    check_predicate_args(n, l, i, j, dir)?;
    let (xs, ys) = (x.symbols(), y.symbols());
    let agree = |ix: usize, iy: usize| at(xs, ix) == at(ys, iy);

    Ok(match dir {
        Direction::Duplication => {
            let outer = (1..=i + l).chain(i + j + l + 1..=n).all(|m| agree(m, m));
            if j < l {
                outer
                    && (0..j).all(|m| agree(i + l - m, i + l + 1 + m))
                    && (0..l - j).all(|m| agree(i + 1 + m, i + 2 * j + 1 + m))
                    && (0..j).all(|m| agree(i + l + 1 + m, i + 2 * j - m))
            } else {
                outer
                    && (0..l).all(|m| agree(i + l - m, i + l + 1 + m))
                    && (0..j - l).all(|m| agree(i + l + 1 + m, i + 2 * l + 1 + m))
                    && (0..l).all(|m| agree(i + j + 1 + m, i + j + l - m))
            }
        }
        Direction::Deletion => {
            (1..=i + l)
                .chain(i + j + 2 * l + 1..=n)
                .all(|m| agree(m, m))
                && (0..l).all(|m| at(xs, i + l - m) == at(xs, i + l + 1 + m))
                && (0..l).all(|m| at(ys, i + j + l - m) == at(ys, i + j + l + 1 + m))
                && (0..j).all(|m| agree(i + 2 * l + 1 + m, i + l + 1 + m))
        }
    })
}

/// Decides `rho(x, i) = rho(x, i + j)` (or the deletion analogue) from the
/// single-word condition system.
pub fn same_outcome_single_word(
    x: &Word,
    l: usize,
    i: usize,
    j: usize,
    dir: Direction,
) -> Result<bool> {
    let n = x.len();
    check_predicate_args(n, l, i, j, dir)?;
    let s = x.symbols();
    let eq = |a: usize, b: usize| at(s, a) == at(s, b);

    Ok(match dir {
        Direction::Duplication if j < l => {
            (0..j).all(|m| eq(i + l + 1 + m, i + l - m))
                && (j..l).all(|m| eq(i + l + 2 * j - m, i + l - m))
                && (l..l + j).all(|m| eq(i + l + 2 * j - m, i + 1 + m))
        }
        Direction::Duplication => {
            (0..l).all(|m| eq(i + l + 1 + m, i + l - m))
                && (l..j).all(|m| eq(i + l + 1 + m, i + 1 + m))
                && (j..l + j).all(|m| eq(i + l + 2 * j - m, i + 1 + m))
        }
        Direction::Deletion => {
            (0..l).all(|m| eq(i + l + 1 + m, i + l - m))
                && (0..l).all(|m| eq(i + l + j + 1 + m, i + l + j - m))
                && (0..j).all(|m| eq(i + 2 * l + 1 + m, i + l + 1 + m))
        }
    })
}
