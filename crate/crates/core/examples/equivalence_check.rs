//! Tandem duplication and tandem deletion correction coincide: two words
//! have intersecting duplication balls exactly when their deletion balls
//! intersect. Palindromic operations break this.
//!
//! cargo run --release --example equivalence_check

use dupcodes::channel::{balls_intersect, ErrorKind};
use dupcodes::{Result, Word};

fn main() -> Result<()> {
    for l in 1..=2 {
        let n = 7;
        let words: Vec<Word> = Word::enumerate(n, 2).collect();
        let mut agree = 0;
        let mut disagree = 0;
        for (i, x) in words.iter().enumerate() {
            for y in &words[i + 1..] {
                let dup = balls_intersect(x, y, ErrorKind::TandemDup(l), 1)?;
                let del = balls_intersect(x, y, ErrorKind::TandemDel(l), 1)?;
                if dup == del {
                    agree += 1
                } else {
                    disagree += 1
                }
            }
        }
        println!("tandem l={l} n={n}: {agree} pairs agree, {disagree} disagree");
    }

    let (a, b) = (Word::parse("011010", 2)?, Word::parse("011110", 2)?);
    println!(
        "palindromic l=2 {a}, {b}: duplication balls meet {}, deletion balls meet {}",
        balls_intersect(&a, &b, ErrorKind::PalDup(2), 1)?,
        balls_intersect(&a, &b, ErrorKind::PalDel(2), 1)?
    );
    Ok(())
}
