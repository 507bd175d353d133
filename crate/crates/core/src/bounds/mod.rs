//! Counting formulas for tandem deletion spheres and the generalized
//! sphere-packing upper bound on tandem-duplication-correcting codes.
//!
//! All counts are exact (`BigUint`), bound values are exact rationals.
//! Exhaustive routines live in [`independent_set`] and [`report`].

mod independent_set;
mod report;

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinatorics::{binomial_big, binomial_signed, log2_biguint};

pub use independent_set::{exact_optimum, maximum_code, transversal_check, TransversalReport};
pub use report::{bound_report, redundancy_table, BoundReport, RedundancyRow};

fn pow(q: u32, e: usize) -> BigUint {
    BigUint::from(q).pow(e as u32)
}

/// Number of words in `Z_q^n` with Hamming weight `weight` whose zero runs
/// all have length at most `max_run`.
pub fn rll_weight_count(n: usize, max_run: usize, weight: usize, q: u32) -> BigUint {
    if weight > n {
        return BigUint::zero();
    }
    if weight == 0 {
        return if n <= max_run {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    }
    let scale = pow(q - 1, weight);
    if n <= max_run {
        return scale * binomial_big(n as i64, weight as i64);
    }
    // Inclusion-exclusion over the weight - 1 interior gaps; the leading
    // gap takes p zeros and the trailing gap absorbs the remainder.
    let (n, block, w) = (n as i64, max_run as i64 + 1, weight as i64);
    let mut sum = BigInt::zero();
    for p in 0..block {
        for j in 0..w {
            let bracket = binomial_signed(n - p - 1 - j * block, w - 1)
                - binomial_signed(n - p - 1 - (j + 1) * block, w - 1);
            let term = binomial_signed(w - 1, j) * bracket;
            if j % 2 == 0 {
                sum += term;
            } else {
                sum -= term;
            }
        }
    }
    scale
        * sum
            .to_biguint()
            .expect("inclusion-exclusion count is nonnegative")
}

/// Words of length `n` admitting no tandem deletion of length `l`.
pub fn irreducible_count(n: usize, l: usize, q: u32) -> BigUint {
    assert!(l >= 1, "duplication length must be at least 1");
    if n < l {
        return pow(q, n);
    }
    let total: BigUint = (0..=n - l)
        .map(|w| rll_weight_count(n - l, l - 1, w, q))
        .sum();
    pow(q, l) * total
}

/// Map `i -> #{x in Z_q^n : |S_1(x)| = i}` for single tandem deletions of
/// length `l`. Only nonzero entries are present; entry 0 is the irreducible
/// count.
pub fn deletion_histogram(n: usize, l: usize, q: u32) -> BTreeMap<usize, BigUint> {
    assert!(l >= 1, "duplication length must be at least 1");
    let mut hist = BTreeMap::new();
    let irr = irreducible_count(n, l, q);
    if !irr.is_zero() {
        hist.insert(0, irr);
    }
    let head = pow(q, l);
    let blocks = n / l;
    // i nonzero signature coordinates need at least i blocks
    for i in 1..blocks.max(1) {
        let mut count = BigUint::zero();
        for nu in i..blocks {
            let rest = n - (nu + 1) * l;
            let spread = binomial_big(nu as i64 - 1, i as i64 - 1);
            for w in i - 1..=rest {
                let trunks = rll_weight_count(rest, l - 1, w, q);
                if trunks.is_zero() {
                    continue;
                }
                count += &trunks * binomial_big(w as i64 + 1, i as i64) * &spread;
            }
        }
        if !count.is_zero() {
            hist.insert(i, &head * count);
        }
    }
    hist
}

/// Upper bound on the size of a code correcting one tandem duplication of
/// length `l`: `IRR(n) + IRR(n - l) + sum_{i >= 1} N(n - l, i) / i`.
pub fn gsp_bound_tandem(n: usize, l: usize, q: u32) -> BigRational {
    assert!(n >= l, "bound needs n >= l");
    let whole = |v: BigUint| BigRational::from_integer(BigInt::from(v));
    let mut bound = whole(irreducible_count(n, l, q)) + whole(irreducible_count(n - l, l, q));
    for (&i, count) in &deletion_histogram(n - l, l, q) {
        if i >= 1 {
            bound += BigRational::new(BigInt::from(count.clone()), BigInt::from(i));
        }
    }
    bound
}

/// `log2` of a positive rational.
pub(crate) fn log2_rational(r: &BigRational) -> f64 {
    let part = |x: &BigInt| log2_biguint(&x.to_biguint().expect("positive rational"));
    part(r.numer()) - part(r.denom())
}
