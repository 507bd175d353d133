//! Binomials and bounded compositions shared by the counting formulas.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

/// `C(n, k)` as `u128`; panics on overflow.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = acc.checked_mul((n - i) as u128).expect("binomial overflow") / (i as u128 + 1);
    }
    acc
}

/// `C(n, k)` over the integers, zero whenever `n < 0`, `k < 0` or `k > n`.
pub fn binomial_big(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn binomial_signed(n: i64, k: i64) -> BigInt {
    BigInt::from(binomial_big(n, k))
}

/// `log2 x` for `x > 0`, accurate far beyond the `f64` integer range.
pub fn log2_biguint(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().expect("finite below 2^1000").log2();
    }
    let shift = bits - 900;
    (x >> shift).to_f64().expect("finite below 2^1000").log2() + shift as f64
}

/// Number of integer vectors `s` with `0 <= s_k <= bounds_k` and
/// `sum s = total`.
pub fn bounded_compositions(bounds: &[usize], total: usize) -> u128 {
    let mut ways = vec![0u128; total + 1];
    ways[0] = 1;
    for &b in bounds {
        let mut next = vec![0u128; total + 1];
        for (sum, &w) in ways.iter().enumerate() {
            if w == 0 {
                continue;
            }
            for take in 0..=b.min(total - sum) {
                next[sum + take] += w;
            }
        }
        ways = next;
    }
    ways[total]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(4, 0), 1);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(60, 30), 118264581564861424);
        assert_eq!(binomial_big(-1, 0), BigUint::zero());
        assert_eq!(binomial_big(10, 3), BigUint::from(120u32));
    }

    #[test]
    fn compositions_match_brute_force() {
        let bounds = [2usize, 0, 3, 1];
        for total in 0..8 {
            let mut count = 0;
            for a in 0..=2 {
                for c in 0..=3 {
                    for d in 0..=1 {
                        if a + c + d == total {
                            count += 1;
                        }
                    }
                }
            }
            assert_eq!(bounded_compositions(&bounds, total), count);
        }
        assert_eq!(bounded_compositions(&[], 0), 1);
        assert_eq!(bounded_compositions(&[], 1), 0);
    }
}
