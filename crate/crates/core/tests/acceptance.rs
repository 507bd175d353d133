//! Acceptance suite: one test per criterion, each printing a `[PASS]` or
//! `[FAIL]` line per check and a summary line for the criterion.
//!
//! Run with `cargo test --test acceptance -- --nocapture --test-threads=1`
//! to see the lines in order.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rayon::prelude::*;

use dupcodes::bounds::{
    deletion_histogram, exact_optimum, gsp_bound_tandem, irreducible_count, redundancy_table,
    rll_weight_count, transversal_check,
};
use dupcodes::channel::{ball_intersection, error_ball, error_sphere, ErrorKind};
use dupcodes::codes::{
    c1_best_params, c1_size_lower_bound, c2_best_params, c2_size_lower_bound, cpf_count_closed,
    cpf_count_recursive, cpf_cubic_roots, cpf_lambda, cpf_rate_table, verify_code, CodeSpec,
    PalindromeFreeCode, PalindromicL2Code, RateLength,
};
use dupcodes::formulas;
use dupcodes::{Guard, Word};

struct Criterion {
    id: u32,
    name: &'static str,
    failed: Vec<String>,
    checks: usize,
}

impl Criterion {
    fn new(id: u32, name: &'static str) -> Self {
        Criterion {
            id,
            name,
            failed: Vec::new(),
            checks: 0,
        }
    }

    /// Records one check and prints its line.
    fn check(&mut self, label: impl Into<String>, ok: bool, detail: impl Into<String>) {
        let (label, detail) = (label.into(), detail.into());
        self.checks += 1;
        let tag = if ok { "PASS" } else { "FAIL" };
        println!("  [{tag}] {}.{}: {label} ({detail})", self.id, self.checks);
        if !ok {
            self.failed.push(format!("{label}: {detail}"));
        }
    }

    fn finish(self) {
        let tag = if self.failed.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        println!(
            "[{tag}] criterion {}: {} ({} checks, {} failed)",
            self.id,
            self.name,
            self.checks,
            self.failed.len()
        );
        assert!(
            self.failed.is_empty(),
            "criterion {} failed: {:#?}",
            self.id,
            self.failed
        );
    }
}

fn w(s: &str) -> Word {
    Word::parse(s, 2).unwrap()
}

fn set(words: &[&str]) -> BTreeSet<Word> {
    words.iter().map(|s| w(s)).collect()
}

fn show(words: &BTreeSet<Word>) -> String {
    let items: Vec<String> = words.iter().map(Word::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

fn int(v: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn spaces() -> Vec<(u32, usize)> {
    let mut out = Vec::new();
    for n in 0..=10 {
        out.push((2, n));
    }
    for n in 0..=7 {
        out.push((3, n));
    }
    out
}

#[test]
fn criterion_01_sphere_formulas() {
    let mut c = Criterion::new(1, "sphere formulas equal enumeration, bounds dominate");
    for (q, n) in spaces() {
        let words: Vec<Word> = Word::enumerate(n, q).collect();
        for l in 1..=3usize {
            let bad: Vec<String> = words
                .par_iter()
                .flat_map_iter(|x| {
                    let mut bad = Vec::new();
                    let mut expect = |what: &str, ok: bool| {
                        if !ok {
                            bad.push(format!("{what} at {x}"));
                        }
                    };
                    let size = |kind, t| error_sphere(x, kind, t).len();
                    if n >= l {
                        for t in 1..=2 {
                            let dup = formulas::tandem_dup_sphere_size(x, l, t).unwrap();
                            expect(
                                "tandem dup",
                                dup == size(ErrorKind::TandemDup(l), t) as u128,
                            );
                            let del = formulas::tandem_del_sphere_size(x, l, t).unwrap();
                            expect(
                                "tandem del",
                                del == size(ErrorKind::TandemDel(l), t) as u128,
                            );
                        }
                        let dup_bound = formulas::pal_dup_sphere_upper_bound(x, l).unwrap();
                        expect("pal dup bound", dup_bound >= size(ErrorKind::PalDup(l), 1));
                    }
                    if n >= 2 * l {
                        let del_bound = formulas::pal_del_sphere_upper_bound(x, l).unwrap();
                        expect("pal del bound", del_bound >= size(ErrorKind::PalDel(l), 1));
                    }
                    if l == 1 && n >= 1 {
                        let dup = formulas::pal_dup_sphere_size_l1(x).unwrap();
                        expect("pal dup l=1", dup == size(ErrorKind::PalDup(1), 1));
                        let del = formulas::pal_del_sphere_size_l1(x).unwrap();
                        expect("pal del l=1", del == size(ErrorKind::PalDel(1), 1));
                    }
                    if l == 2 && n >= 2 {
                        let dup = formulas::pal_dup_sphere_size_l2(x).unwrap();
                        expect("pal dup l=2", dup == size(ErrorKind::PalDup(2), 1));
                    }
                    if l == 2 && q == 2 {
                        let del = formulas::pal_del_sphere_size_l2_binary(x).unwrap();
                        expect("pal del l=2", del == size(ErrorKind::PalDel(2), 1));
                    }
                    bad
                })
                .collect();
            c.check(
                format!("q={q} n={n} l={l}"),
                bad.is_empty(),
                match bad.first() {
                    None => format!("{} words", words.len()),
                    Some(first) => format!("{} mismatches, first {first}", bad.len()),
                },
            );
        }
    }
    c.finish();
}

#[test]
fn criterion_02_duplication_deletion_equivalence() {
    let mut c = Criterion::new(2, "tandem duplication and deletion balls intersect alike");
    for l in 1..=2usize {
        for n in 1..=8usize {
            let words: Vec<Word> = Word::enumerate(n, 2).collect();
            let dup: Vec<BTreeSet<Word>> = words
                .iter()
                .map(|x| error_ball(x, ErrorKind::TandemDup(l), 1))
                .collect();
            let del: Vec<BTreeSet<Word>> = words
                .iter()
                .map(|x| error_ball(x, ErrorKind::TandemDel(l), 1))
                .collect();
            let violations: Vec<(usize, usize)> = (0..words.len())
                .into_par_iter()
                .flat_map_iter(|a| {
                    let (dup, del) = (&dup, &del);
                    (a + 1..words.len())
                        .filter(move |&b| {
                            dup[a].is_disjoint(&dup[b]) != del[a].is_disjoint(&del[b])
                        })
                        .map(move |b| (a, b))
                })
                .collect();
            let pairs = words.len() * (words.len() - 1) / 2;
            c.check(
                format!("n={n} l={l}"),
                violations.is_empty(),
                match violations.first() {
                    None => format!("{pairs} pairs"),
                    Some(&(a, b)) => format!(
                        "{} violations, first {} {}",
                        violations.len(),
                        words[a],
                        words[b]
                    ),
                },
            );
        }
    }
    c.finish();
}

#[test]
fn criterion_03_palindromic_counterexamples() {
    let mut c = Criterion::new(3, "palindromic duplication and deletion correction differ");
    let del = ErrorKind::PalDel(2);
    let dup = ErrorKind::PalDup(2);
    let ball = error_ball(&w("010101"), del, 1);
    c.check(
        "deletion ball of 010101",
        ball == set(&["010101"]),
        show(&ball),
    );
    let ball = error_ball(&w("010011"), del, 1);
    c.check(
        "deletion ball of 010011",
        ball == set(&["010011", "0101"]),
        show(&ball),
    );
    let shared = ball_intersection(&w("010101"), &w("010011"), dup, 1).unwrap();
    c.check(
        "first pair, duplication",
        shared == set(&["01001101"]),
        show(&shared),
    );
    let shared = ball_intersection(&w("010101"), &w("010011"), del, 1).unwrap();
    c.check(
        "first pair, deletion disjoint",
        shared.is_empty(),
        show(&shared),
    );
    let shared = ball_intersection(&w("011010"), &w("011110"), dup, 1).unwrap();
    c.check(
        "second pair, duplication disjoint",
        shared.is_empty(),
        show(&shared),
    );
    let shared = ball_intersection(&w("011010"), &w("011110"), del, 1).unwrap();
    c.check(
        "second pair, deletion",
        shared == set(&["0110"]),
        show(&shared),
    );
    c.finish();
}

fn zero_runs_ok(x: &Word, max_run: usize) -> bool {
    x.symbols().split(|&s| s != 0).all(|z| z.len() <= max_run)
}

#[test]
fn criterion_04_run_limited_counts_and_histogram() {
    let mut c = Criterion::new(4, "run-limited counts and deletion histogram match oracles");
    for (q, max_n) in [(2u32, 10usize), (3, 10)] {
        for n in 0..=max_n {
            let words: Vec<Word> = Word::enumerate(n, q).collect();
            let mut bad = 0;
            for max_run in 0..=n {
                for weight in 0..=n {
                    let oracle = words
                        .iter()
                        .filter(|x| x.hamming_weight() == weight && zero_runs_ok(x, max_run))
                        .count();
                    if rll_weight_count(n, max_run, weight, q) != BigUint::from(oracle) {
                        bad += 1;
                    }
                }
            }
            c.check(
                format!("run-limited q={q} n={n}"),
                bad == 0,
                format!("{bad} mismatches"),
            );
        }
    }
    for (q, max_n) in [(2u32, 10usize), (3, 8)] {
        for l in 1..=3usize {
            for n in l..=max_n {
                let mut oracle = std::collections::BTreeMap::new();
                for x in Word::enumerate(n, q) {
                    let i = error_sphere(&x, ErrorKind::TandemDel(l), 1).len();
                    *oracle.entry(i).or_insert_with(|| BigUint::from(0u32)) += 1u32;
                }
                let hist = deletion_histogram(n, l, q);
                let total: BigUint = hist.values().sum();
                let irr_ok =
                    irreducible_count(n, l, q) == oracle.get(&0).cloned().unwrap_or_default();
                c.check(
                    format!("histogram q={q} n={n} l={l}"),
                    hist == oracle && total == BigUint::from(q).pow(n as u32) && irr_ok,
                    format!("row sum {total}"),
                );
            }
        }
    }
    c.finish();
}

#[test]
fn criterion_05_bound_soundness_and_transversal() {
    let mut c = Criterion::new(
        5,
        "sphere-packing bound dominates the optimum, transversal feasible",
    );
    let guard = Guard::default();
    for l in 1..=2usize {
        for n in l..=9usize {
            let bound = gsp_bound_tandem(n, l, 2);
            let opt = exact_optimum(n, ErrorKind::TandemDup(l), 1, 2, guard).unwrap();
            c.check(
                format!("bound n={n} l={l}"),
                bound >= int(opt as u64),
                format!("bound {bound}, optimum {opt}"),
            );
            let report = transversal_check(n, l, 1, 2, guard).unwrap();
            c.check(
                format!("transversal n={n} l={l}"),
                report.feasible && report.deficits.is_empty() && report.total_weight == bound,
                format!(
                    "{} deficits, weight {}",
                    report.deficits.len(),
                    report.total_weight
                ),
            );
        }
    }
    c.finish();
}

#[test]
fn criterion_06_tandem_vt_code() {
    let mut c = Criterion::new(
        6,
        "tandem VT code corrects one duplication and meets its size bound",
    );
    let guard = Guard::default();
    for l in 1..=2usize {
        for n in l.max(2)..=10usize {
            let (code, size) = c1_best_params(n, l, 2, guard).unwrap();
            let report = verify_code(&CodeSpec::C1(code), guard).unwrap();
            c.check(
                format!("correction n={n} l={l}"),
                report.passed() && report.codewords as u64 == size,
                format!(
                    "{} codewords, {} received words, {} failures, collision {:?}",
                    report.codewords, report.received_words, report.failure_count, report.collision
                ),
            );
            let bound = c1_size_lower_bound(n, l, 2);
            c.check(
                format!("size n={n} l={l}"),
                int(size) >= bound,
                format!("size {size}, bound {bound}"),
            );
        }
    }
    c.finish();
}

#[test]
fn criterion_07_palindromic_code() {
    let mut c = Criterion::new(7, "palindromic code corrects one duplication of length 2");
    let guard = Guard::default();
    for n in 6..=12usize {
        let failing: Vec<(usize, usize)> = (0..5)
            .flat_map(|a| (0..=2 * n).map(move |b| (a, b)))
            .collect::<Vec<_>>()
            .into_par_iter()
            .filter(|&(a, b)| {
                let code = PalindromicL2Code::new(n, a, b).unwrap();
                !verify_code(&CodeSpec::C2(code), guard).unwrap().passed()
            })
            .collect();
        c.check(
            format!("all {} parameter pairs n={n}", 5 * (2 * n + 1)),
            failing.is_empty(),
            format!("failing {failing:?}"),
        );
        let (_, best) = c2_best_params(n, guard).unwrap();
        let bound = c2_size_lower_bound(n);
        let needed = bound.ceil().to_integer();
        c.check(
            format!("best size n={n}"),
            BigInt::from(best) >= needed,
            format!("best {best}, need {needed}"),
        );
    }
    let code = PalindromicL2Code::new(8, 4, 13).unwrap();
    let x = w("01011001");
    let (decoded, trace) = code.decode_traced(&w("0101101001")).unwrap();
    let trace = trace.unwrap();
    c.check(
        "worked example",
        code.is_member(&x).unwrap() && decoded == x && trace.case == 4 && trace.run == 3,
        format!(
            "decoded {decoded}, case {} ({}), j={}",
            trace.case, trace.subcase, trace.run
        ),
    );
    c.finish();
}

fn palindrome_free_oracle(x: &Word) -> bool {
    x.symbols()
        .windows(4)
        .all(|v| !(v[0] == v[3] && v[1] == v[2]))
}

const PUBLISHED_RATES: [(u32, [f64; 9]); 4] = [
    (
        2,
        [1.0, 0.896, 0.792, 0.639, 0.595, 0.573, 0.562, 0.557, 0.552],
    ),
    (
        3,
        [1.0, 0.973, 0.932, 0.911, 0.901, 0.895, 0.893, 0.892, 0.892],
    ),
    (
        4,
        [1.0, 0.988, 0.971, 0.962, 0.957, 0.955, 0.954, 0.954, 0.953],
    ),
    (
        5,
        [1.0, 0.994, 0.984, 0.979, 0.977, 0.976, 0.975, 0.975, 0.975],
    ),
];

fn rate_lengths() -> Vec<RateLength> {
    let mut out: Vec<RateLength> = [2, 4, 8, 16, 32, 64, 128, 256]
        .map(RateLength::Finite)
        .to_vec();
    out.push(RateLength::Infinite);
    out
}

#[test]
fn criterion_08_palindrome_free_code() {
    let mut c = Criterion::new(8, "palindrome-free code counts, rates and decoding");
    for (q, max_n) in [(2u32, 14usize), (3, 8)] {
        for n in 0..=max_n {
            let oracle = Word::enumerate(n, q).filter(palindrome_free_oracle).count();
            let rec = cpf_count_recursive(n, q);
            c.check(
                format!("count q={q} n={n}"),
                rec == BigUint::from(oracle),
                format!("{rec} vs {oracle}"),
            );
        }
    }
    let mut worst: f64 = 0.0;
    for q in 2..=5u32 {
        for n in 3..=60usize {
            let exact: f64 = cpf_count_recursive(n, q).to_string().parse().unwrap();
            let closed = cpf_count_closed(n, q).unwrap();
            worst = worst.max(((closed - exact) / exact).abs());
        }
    }
    c.check(
        "closed form, q=2..5, n=3..60",
        worst <= 1e-6,
        format!("worst relative error {worst:.2e}"),
    );

    let lengths = rate_lengths();
    for (q, row) in PUBLISHED_RATES {
        let got = cpf_rate_table(&[q], &lengths);
        for (cell, &published) in got.iter().zip(row.iter()) {
            let ok = (cell.rate - published).abs() <= 5e-4;
            c.check(
                format!("rate q={q} n={}", cell.n),
                ok,
                format!("{:.6} vs {published:.3}", cell.rate),
            );
        }
    }
    // the unbounded-alphabet row, taken at q = 10^6
    for cell in cpf_rate_table(&[1_000_000], &lengths) {
        let ok = (cell.rate - 1.0).abs() <= 5e-4;
        c.check(
            format!("rate q=10^6 n={}", cell.n),
            ok,
            format!("{:.6} vs 1", cell.rate),
        );
    }

    let guard = Guard::default();
    for (q, max_n) in [(2u32, 9usize), (3, 9)] {
        for n in 2..=max_n {
            let spec = CodeSpec::Cpf(PalindromeFreeCode::new(n, q).unwrap());
            let report = verify_code(&spec, guard).unwrap();
            c.check(
                format!("decoding q={q} n={n}"),
                report.passed(),
                format!(
                    "{} codewords, {} received words, {} failures",
                    report.codewords, report.received_words, report.failure_count
                ),
            );
        }
    }
    c.finish();
}

#[test]
fn criterion_09_growth_rate() {
    let mut c = Criterion::new(9, "growth rate of palindrome-free words");
    for q in (2..=10u32).chain([100, 1000, 1_000_000]) {
        let lambda = cpf_lambda(q);
        let root = cpf_cubic_roots(q as f64).unwrap()[0];
        let ok = (lambda - root.re).abs() <= 1e-9 * lambda && root.im.abs() <= 1e-9 * lambda;
        c.check(
            format!("Cardano vs largest root q={q}"),
            ok,
            format!("{lambda:.12} vs {root:.12}"),
        );
    }
    let r2 = cpf_lambda(2).log2();
    c.check(
        "log2 lambda(2) = 0.552",
        (r2 - 0.552).abs() <= 5e-4,
        format!("{r2:.6}"),
    );
    let r3 = cpf_lambda(3).ln() / 3f64.ln();
    c.check(
        "log3 lambda(3) = 0.892",
        (r3 - 0.892).abs() <= 5e-4,
        format!("{r3:.6}"),
    );
    let ratio = cpf_lambda(1_000_000) / 1e6;
    c.check(
        "lambda(q)/q at q=10^6",
        (ratio - 1.0).abs() <= 1e-3,
        format!("{ratio:.9}"),
    );
    c.finish();
}

#[test]
fn criterion_10_redundancy_table() {
    let mut c = Criterion::new(10, "redundancy table columns and bound consistency");
    let lengths: Vec<usize> = (2..=16).collect();
    for l in 1..=2usize {
        let rows = redundancy_table(&lengths, l, 2, Guard::default()).unwrap();
        for row in rows {
            let n = row.bound.n as f64;
            let c2 = n.log2() + 10f64.log2();
            let burst = n.log2() + n.log2().log2() + 1.0;
            let eps = 4.0 * f64::EPSILON * c2.max(burst);
            c.check(
                format!("columns l={l} n={}", row.bound.n),
                (row.c2_redundancy_bits - c2).abs() <= eps
                    && (row.burst_redundancy_bits - burst).abs() <= eps,
                format!(
                    "c2 {}, burst {}",
                    row.c2_redundancy_bits, row.burst_redundancy_bits
                ),
            );
            let lb = row.bound.redundancy_lb_bits;
            c.check(
                format!("consistency l={l} n={}", row.bound.n),
                lb >= 0.0 && lb <= row.c1_redundancy_bits + 1e-12,
                format!("bound {lb:.6} <= c1 {:.6}", row.c1_redundancy_bits),
            );
        }
    }
    c.finish();
}
