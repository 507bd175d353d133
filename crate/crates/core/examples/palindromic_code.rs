//! Binary code correcting one palindromic duplication of length 2, with the
//! decoding case that located the error.
//!
//! cargo run --example palindromic_code

use dupcodes::channel::palindromic_duplicate;
use dupcodes::codes::{c2_best_params, PalindromicL2Code};
use dupcodes::{Guard, Result, Word};

fn main() -> Result<()> {
    let code = PalindromicL2Code::new(8, 4, 13)?;
    let x = Word::parse("01011001", 2)?;
    let y = Word::parse("0101101001", 2)?;
    let (decoded, trace) = code.decode_traced(&y)?;
    let trace = trace.expect("a duplication was removed");
    println!(
        "{y} -> {decoded} via case {} ({}), run {}, deletion at {}",
        trace.case, trace.subcase, trace.run, trace.position
    );
    assert_eq!(decoded, x);

    let (best, size) = c2_best_params(12, Guard::default())?;
    println!(
        "n=12: best a={}, b={} with {size} codewords",
        best.a(),
        best.b()
    );
    let book = best.codebook(Guard::default())?;
    let c = &book[book.len() / 2];
    for p in 0..=c.len() - 2 {
        let y = palindromic_duplicate(c, 2, p)?;
        assert_eq!(&best.decode(&y)?, c);
    }
    println!("all {} duplications of {c} decoded", c.len() - 1);
    Ok(())
}
