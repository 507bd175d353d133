//! Error spheres and balls for the four duplication channels, and a pair of
//! codewords whose balls collide.
//!
//! cargo run --example channel_spheres

use dupcodes::channel::{error_ball, error_sphere, intersection_witness, ErrorKind};
use dupcodes::{Result, Word};

fn main() -> Result<()> {
    let x = Word::parse("0110", 2)?;
    for kind in [
        ErrorKind::TandemDup(2),
        ErrorKind::TandemDel(1),
        ErrorKind::PalDup(2),
        ErrorKind::PalDel(1),
    ] {
        for t in 1..=2 {
            let sphere = error_sphere(&x, kind, t);
            let members: Vec<String> = sphere.members.iter().map(Word::to_string).collect();
            println!(
                "{kind} t={t}: {} words {{{}}}",
                sphere.len(),
                members.join(", ")
            );
        }
    }

    let (a, b) = (Word::parse("010101", 2)?, Word::parse("010011", 2)?);
    let kind = ErrorKind::PalDup(2);
    println!(
        "ball of {a} under {kind}: {} words",
        error_ball(&a, kind, 1).len()
    );
    match intersection_witness(&a, &b, kind, 1)? {
        Some(y) => println!("{a} and {b} both reach {y}"),
        None => println!("{a} and {b} have disjoint balls"),
    }
    Ok(())
}
