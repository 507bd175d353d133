//! Per-length bound records and the redundancy comparison table.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::{deletion_histogram, gsp_bound_tandem, irreducible_count, log2_rational};
use crate::codes::vt::c1_best_params;
use crate::error::Result;
use crate::guard::Guard;

/// Big integers travel as decimal strings so JSON consumers never lose
/// precision.
mod decimal {
    use std::collections::BTreeMap;

    use num_bigint::BigUint;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    fn parse<E: serde::de::Error>(s: &str) -> Result<BigUint, E> {
        s.parse()
            .map_err(|_| E::custom(format!("not a decimal integer: {s:?}")))
    }

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        parse(&String::deserialize(d)?)
    }

    pub mod vec {
        use super::*;
        use serde::ser::SerializeSeq;

        pub fn serialize<S: Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for x in v {
                seq.serialize_element(&x.to_string())?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigUint>, D::Error> {
            Vec::<String>::deserialize(d)?
                .iter()
                .map(|s| parse(s))
                .collect()
        }
    }

    pub mod map {
        use super::*;
        use serde::ser::SerializeMap;

        pub fn serialize<S: Serializer>(
            v: &BTreeMap<usize, BigUint>,
            s: S,
        ) -> Result<S::Ok, S::Error> {
            let mut map = s.serialize_map(Some(v.len()))?;
            for (k, x) in v {
                map.serialize_entry(k, &x.to_string())?;
            }
            map.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(
            d: D,
        ) -> Result<BTreeMap<usize, BigUint>, D::Error> {
            BTreeMap::<String, String>::deserialize(d)?
                .into_iter()
                .map(|(k, v)| {
                    let k = k
                        .parse()
                        .map_err(|_| D::Error::custom(format!("bad key {k:?}")))?;
                    Ok((k, parse(&v)?))
                })
                .collect()
        }
    }
}

/// Single-error bound for one `(n, l, q)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: usize,
    pub l: usize,
    pub q: u32,
    pub t: usize,
    /// Irreducible counts at lengths `n` and `n - l`.
    #[serde(with = "decimal::vec")]
    pub irreducible_counts: Vec<BigUint>,
    /// Deletion sphere size histogram at length `n - l`.
    #[serde(with = "decimal::map")]
    pub histogram: BTreeMap<usize, BigUint>,
    #[serde(with = "decimal")]
    pub bound_numerator: BigUint,
    #[serde(with = "decimal")]
    pub bound_denominator: BigUint,
    /// `n log2 q - log2 bound`, clamped at 0.
    pub redundancy_lb_bits: f64,
    /// The same quantity before clamping.
    pub redundancy_lb_raw_bits: f64,
}

impl BoundReport {
    pub fn bound(&self) -> BigRational {
        BigRational::new(
            BigInt::from(self.bound_numerator.clone()),
            BigInt::from(self.bound_denominator.clone()),
        )
    }
}

pub fn bound_report(n: usize, l: usize, q: u32) -> BoundReport {
    let bound = gsp_bound_tandem(n, l, q);
    let raw = n as f64 * (q as f64).log2() - log2_rational(&bound);
    BoundReport {
        n,
        l,
        q,
        t: 1,
        irreducible_counts: vec![irreducible_count(n, l, q), irreducible_count(n - l, l, q)],
        histogram: deletion_histogram(n - l, l, q),
        bound_numerator: bound.numer().to_biguint().expect("positive bound"),
        bound_denominator: bound.denom().to_biguint().expect("positive bound"),
        redundancy_lb_bits: raw.max(0.0),
        redundancy_lb_raw_bits: raw,
    }
}

/// One line of the redundancy comparison, all redundancies in bits.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RedundancyRow {
    #[serde(flatten)]
    pub bound: BoundReport,
    /// Size of the tandem VT code with the best residues.
    pub c1_size: u64,
    pub c1_redundancy_bits: f64,
    /// Redundancy guarantee of the palindromic `l = 2` code.
    pub c2_redundancy_bits: f64,
    /// Redundancy of the best known burst-insertion code, for reference.
    pub burst_redundancy_bits: f64,
}

pub fn c2_redundancy_bits(n: usize) -> f64 {
    (n as f64).log2() + 10f64.log2()
}

pub fn burst_redundancy_bits(n: usize) -> f64 {
    let log_n = (n as f64).log2();
    log_n + log_n.log2() + 1.0
}

/// Rows for every `n` in `lengths`; the VT column enumerates `Z_q^n`, so the
/// guard applies.
pub fn redundancy_table(
    lengths: &[usize],
    l: usize,
    q: u32,
    guard: Guard,
) -> Result<Vec<RedundancyRow>> {
    for &n in lengths {
        guard.check(n, q)?;
    }
    lengths
        .iter()
        .map(|&n| {
            let (_, c1_size) = c1_best_params(n, l, q, guard)?;
            Ok(RedundancyRow {
                bound: bound_report(n, l, q),
                c1_size,
                c1_redundancy_bits: n as f64 * (q as f64).log2() - (c1_size as f64).log2(),
                c2_redundancy_bits: c2_redundancy_bits(n),
                burst_redundancy_bits: burst_redundancy_bits(n),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_matches_bound() {
        let r = bound_report(6, 2, 2);
        let mut sum = BigRational::from_integer(0.into());
        for c in &r.irreducible_counts {
            sum += BigRational::from_integer(BigInt::from(c.clone()));
        }
        for (&i, c) in &r.histogram {
            if i > 0 {
                sum += BigRational::new(BigInt::from(c.clone()), BigInt::from(i));
            }
        }
        assert_eq!(sum, r.bound());
        let total: BigUint = r.histogram.values().sum();
        assert_eq!(total, BigUint::from(16u32));
    }

    #[test]
    fn clamping_keeps_raw_value() {
        // bound 4 for n = 2 gives exactly zero redundancy
        let r = bound_report(2, 1, 2);
        assert_eq!(r.redundancy_lb_raw_bits, 0.0);
        let r = bound_report(2, 2, 2);
        assert!(r.redundancy_lb_raw_bits < 0.0);
        assert_eq!(r.redundancy_lb_bits, 0.0);
    }

    #[test]
    fn json_round_trip() {
        let r = bound_report(10, 1, 3);
        let text = serde_json::to_string(&r).unwrap();
        assert!(text.contains("\"bound_numerator\":\""));
        let back: BoundReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn reference_columns() {
        assert!((c2_redundancy_bits(8) - (3.0 + 10f64.log2())).abs() < 1e-15);
        assert_eq!(burst_redundancy_bits(16), 7.0);
    }

    #[test]
    fn table_rows() {
        let rows = redundancy_table(&[4, 5, 6], 1, 2, Guard::default()).unwrap();
        assert_eq!(rows.len(), 3);
        for row in &rows {
            assert!(row.bound.redundancy_lb_bits <= row.c1_redundancy_bits + 1e-12);
        }
        assert!(redundancy_table(&[30], 1, 4, Guard::default()).is_err());
    }
}
