//! The l-step derivative turns a tandem duplication into a unit increment of
//! one coordinate of the zero signature.
//!
//! cargo run --example derivative_signature

use dupcodes::channel::tandem_duplicate;
use dupcodes::transform::{derive, integrate, signature_of};
use dupcodes::{Result, Word};

fn main() -> Result<()> {
    let l = 2;
    let x = Word::parse("21010121", 3)?;
    let pair = derive(&x, l)?;
    println!("x = {x}, head {}, tail {}", pair.head, pair.tail);
    assert_eq!(integrate(&pair)?, x);

    let (head, dec) = signature_of(&x, l)?;
    println!(
        "head {head}, trunk {}, signature {:?}",
        dec.trunk, dec.signature
    );
    for p in 0..=x.len() - l {
        let y = tandem_duplicate(&x, l, p)?;
        let (_, after) = signature_of(&y, l)?;
        let k = dec
            .signature
            .iter()
            .zip(&after.signature)
            .position(|(a, b)| a != b)
            .map_or(0, |i| i + 1);
        println!(
            "dup at {p}: {y} signature {:?} (coordinate {k} grew)",
            after.signature
        );
    }
    Ok(())
}
