//! Words avoiding every pattern abba correct palindromic duplications of
//! all lengths. Counts, growth rate and rates table.
//!
//! cargo run --example palindrome_free_rates

use dupcodes::channel::palindromic_duplicate;
use dupcodes::codes::{
    cpf_count_closed, cpf_count_recursive, cpf_decode, cpf_lambda, cpf_rate_table, RateLength,
};
use dupcodes::{Result, Word};

fn main() -> Result<()> {
    for n in [4, 8, 16, 32] {
        println!(
            "q=2 n={n}: {} words (closed form {:.3})",
            cpf_count_recursive(n, 2),
            cpf_count_closed(n, 2)?
        );
    }
    for q in [2, 3, 4, 5] {
        println!("lambda({q}) = {:.6}", cpf_lambda(q));
    }
    let lengths = [4, 16, 256]
        .map(RateLength::Finite)
        .into_iter()
        .chain([RateLength::Infinite]);
    for row in cpf_rate_table(&[2, 3], &lengths.collect::<Vec<_>>()) {
        println!("rate q={} n={}: {:.4}", row.q, row.n, row.rate);
    }

    let x = Word::parse("012012", 3)?;
    for l in 2..=x.len() {
        for p in 0..=x.len() - l {
            let y = palindromic_duplicate(&x, l, p)?;
            assert_eq!(cpf_decode(&y, x.len())?, x);
        }
    }
    let y = palindromic_duplicate(&x, 3, 1)?;
    println!(
        "{y} -> {}, every duplication of {x} decoded",
        cpf_decode(&y, x.len())?
    );
    Ok(())
}
