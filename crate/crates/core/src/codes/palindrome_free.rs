//! Code of all 2-palindrome-free words, correcting one palindromic
//! duplication of any length `2..=n`.
//!
//! Counting uses a five-state transfer matrix over the ending pattern of the
//! last three symbols; its characteristic cubic gives the closed form and
//! the asymptotic rate `log_q lambda(q)`.

use num_bigint::BigUint;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::channel::{palindromic_delete, ErrorKind};
use crate::combinatorics::log2_biguint;
use crate::error::{Error, Result};
use crate::words::Word;

/// No window `x_{p+1} x_{p+2} x_{p+3} x_{p+4}` with `x_{p+1} = x_{p+4}` and
/// `x_{p+2} = x_{p+3}`.
pub fn cpf_member(x: &Word) -> bool {
    x.symbols()
        .windows(4)
        .all(|w| !(w[0] == w[3] && w[1] == w[2]))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PalindromeFreeCode {
    n: usize,
    q: u32,
}

impl PalindromeFreeCode {
    pub fn new(n: usize, q: u32) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidAlphabet(q));
        }
        if n == 0 {
            return Err(Error::InvalidParameters(
                "code length must be positive".into(),
            ));
        }
        Ok(PalindromeFreeCode { n, q })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn is_member(&self, x: &Word) -> Result<bool> {
        if x.q() != self.q {
            return Err(Error::AlphabetMismatch {
                left: self.q,
                right: x.q(),
            });
        }
        if x.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                actual: x.len(),
            });
        }
        Ok(cpf_member(x))
    }

    /// The duplication length is `|y| - n`; every palindromic deletion of
    /// that length is tried and the unique palindrome-free survivor kept.
    pub fn decode(&self, y: &Word) -> Result<Word> {
        if y.len() < self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                actual: y.len(),
            });
        }
        let l = y.len() - self.n;
        match l {
            0 => {
                if self.is_member(y)? {
                    Ok(y.clone())
                } else {
                    Err(Error::DecodingFailure(format!("{y} is not a codeword")))
                }
            }
            1 => Err(Error::UnsupportedLength(1)),
            _ => {
                let mut found: Vec<Word> = Vec::new();
                for p in ErrorKind::PalDel(l).positions(y) {
                    let x = palindromic_delete(y, l, p)?;
                    if cpf_member(&x) && !found.contains(&x) {
                        found.push(x);
                    }
                }
                match found.len() {
                    1 => Ok(found.pop().unwrap()),
                    0 => Err(Error::DecodingFailure(format!(
                        "no palindromic deletion of length {l} leaves a palindrome-free word"
                    ))),
                    k => Err(Error::DecodingFailure(format!(
                        "{k} palindrome-free words explain {y}"
                    ))),
                }
            }
        }
    }

    /// Every codeword in lexicographic order, generated by extension so that
    /// only palindrome-free prefixes are visited.
    pub fn codebook(&self, limit: crate::guard::Guard) -> Result<Vec<Word>> {
        limit.check(self.n, self.q)?;
        let mut level: Vec<Vec<u32>> = vec![Vec::new()];
        for _ in 0..self.n {
            let mut next = Vec::with_capacity(level.len() * self.q as usize);
            for prefix in &level {
                for s in 0..self.q {
                    let k = prefix.len();
                    if k >= 3 && prefix[k - 3] == s && prefix[k - 2] == prefix[k - 1] {
                        continue;
                    }
                    let mut w = prefix.clone();
                    w.push(s);
                    next.push(w);
                }
            }
            level = next;
        }
        level.into_iter().map(|s| Word::new(s, self.q)).collect()
    }
}

pub fn cpf_decode(y: &Word, n: usize) -> Result<Word> {
    PalindromeFreeCode::new(n, y.q())?.decode(y)
}

/// Transfer matrix over the ending patterns `(aaa, aab, aba, abb, abc)`:
/// entry `[from][to]` counts the appended symbols taking one to the other.
fn transfer(q: u64) -> [[u64; 5]; 5] {
    [
        [0, q - 1, 0, 0, 0],
        [0, 0, 1, 1, q - 2],
        [0, 0, 1, 1, q - 2],
        [1, q - 2, 0, 0, 0],
        [0, 0, 1, 1, q - 2],
    ]
}

/// Exact number of 2-palindrome-free words of length `n`.
pub fn cpf_count_recursive(n: usize, q: u32) -> BigUint {
    assert!(q >= 2, "alphabet size must be at least 2");
    if n <= 3 {
        return BigUint::from(q).pow(n as u32);
    }
    let qq = q as u64;
    let a = transfer(qq);
    let mut state: Vec<BigUint> = [
        qq,
        qq * (qq - 1),
        qq * (qq - 1),
        qq * (qq - 1),
        qq * (qq - 1) * (qq - 2),
    ]
    .into_iter()
    .map(BigUint::from)
    .collect();
    for _ in 3..n {
        state = (0..5)
            .map(|to| {
                (0..5)
                    .filter(|&from| a[from][to] != 0)
                    .map(|from| &state[from] * a[from][to])
                    .sum()
            })
            .collect();
    }
    state.into_iter().sum()
}

fn cubic(q: f64, z: Complex64) -> Complex64 {
    ((z - (q - 1.0)) * z - (q - 2.0)) * z - (q - 1.0)
}

fn cubic_derivative(q: f64, z: Complex64) -> Complex64 {
    (3.0 * z - 2.0 * (q - 1.0)) * z - (q - 2.0)
}

/// Roots of `lambda^3 - (q-1) lambda^2 - (q-2) lambda - (q-1)`, found by
/// Durand-Kerner iteration and polished by Newton steps, sorted by
/// decreasing modulus. The residual is checked relative to the size of the
/// polynomial's terms at each root.
pub fn cpf_cubic_roots(q: f64) -> Result<[Complex64; 3]> {
    let bound = 1.0 + (q - 1.0).abs().max((q - 2.0).abs());
    let seed = Complex64::new(0.4, 0.9);
    let mut z = [seed * bound, seed.powu(2) * bound, seed.powu(3) * bound];
    let mut converged = false;
    for _ in 0..2000 {
        let mut shift: f64 = 0.0;
        for i in 0..3 {
            let mut denom = Complex64::new(1.0, 0.0);
            for k in 0..3 {
                if k != i {
                    denom *= z[i] - z[k];
                }
            }
            let step = cubic(q, z[i]) / denom;
            z[i] -= step;
            shift = shift.max(step.norm() / z[i].norm().max(1.0));
        }
        if shift < 1e-15 {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::RootFinding(format!(
            "Durand-Kerner did not settle for q = {q}"
        )));
    }
    for root in &mut z {
        for _ in 0..3 {
            let d = cubic_derivative(q, *root);
            if d.norm() == 0.0 {
                break;
            }
            *root -= cubic(q, *root) / d;
        }
        let r = root.norm();
        let scale = r.powi(3) + (q - 1.0) * r * r + (q - 2.0).abs() * r + (q - 1.0);
        let residual = cubic(q, *root).norm();
        if residual > 1e-12 * scale {
            return Err(Error::RootFinding(format!(
                "residual {residual:e} at root {root} for q = {q}"
            )));
        }
    }
    z.sort_by(|a, b| b.norm().total_cmp(&a.norm()));
    Ok(z)
}

/// Weight of root `lambda` in the closed form.
fn closed_form_coefficient(q: f64, lambda: Complex64) -> Complex64 {
    let num = (q * q + q) * lambda * lambda + (q * q - 1.0) * lambda + q * q;
    let den = (q - 1.0) * lambda * lambda + (2.0 * q - 4.0) * lambda + (3.0 * q - 3.0);
    q * (q - 1.0) * num / den
}

/// `sum_i c_i lambda_i^(n-3)` over the three cubic roots.
pub fn cpf_count_closed(n: usize, q: u32) -> Result<f64> {
    if n < 3 {
        return Err(Error::InvalidParameters(format!(
            "closed form needs n >= 3, got {n}"
        )));
    }
    let qf = q as f64;
    let roots = cpf_cubic_roots(qf)?;
    let total: Complex64 = roots
        .iter()
        .map(|&lambda| closed_form_coefficient(qf, lambda) * lambda.powu((n - 3) as u32))
        .sum();
    if total.im.abs() > 1e-9 * total.re.abs().max(1.0) {
        return Err(Error::RootFinding(format!(
            "closed form keeps imaginary part {:e}",
            total.im
        )));
    }
    Ok(total.re)
}

/// Dominant root of the cubic by Cardano's formula.
pub fn cpf_lambda(q: u32) -> f64 {
    let q = q as f64;
    let a = (q - 1.0) / 2.0 + (q - 1.0) * (q - 2.0) / 6.0 + (q - 1.0).powi(3) / 27.0;
    let b = (q - 2.0) / 3.0 + (q - 1.0).powi(2) / 9.0;
    let root = (a * a - b.powi(3)).sqrt();
    (q - 1.0) / 3.0 + (a + root).cbrt() + (a - root).cbrt()
}

/// Code length column of the rate table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RateLength {
    Finite(usize),
    /// The `n -> infinity` limit, serialized as `null`.
    Infinite,
}

impl std::str::FromStr for RateLength {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(RateLength::Infinite),
            t => t
                .parse()
                .map(RateLength::Finite)
                .map_err(|_| Error::Parse(format!("bad code length {t:?}"))),
        }
    }
}

impl std::fmt::Display for RateLength {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RateLength::Finite(n) => write!(f, "{n}"),
            RateLength::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RateRow {
    pub q: u32,
    pub n: RateLength,
    pub rate: f64,
}

/// `log_q |C_PF(n)| / n` per finite length, `log_q lambda(q)` for the limit.
pub fn cpf_rate_table(qs: &[u32], ns: &[RateLength]) -> Vec<RateRow> {
    let mut rows = Vec::with_capacity(qs.len() * ns.len());
    for &q in qs {
        let log_q = (q as f64).log2();
        for &n in ns {
            let rate = match n {
                RateLength::Finite(0) => 1.0,
                RateLength::Finite(n) => {
                    log2_biguint(&cpf_count_recursive(n, q)) / log_q / n as f64
                }
                RateLength::Infinite => cpf_lambda(q).log2() / log_q,
            };
            rows.push(RateRow { q, n, rate });
        }
    }
    rows
}
