//! Code correcting one tandem duplication of length l: pick the best
//! residues, encode by index, corrupt and decode.
//!
//! cargo run --release --example tandem_vt_code

use dupcodes::channel::tandem_duplicate;
use dupcodes::codes::{c1_best_params, c1_size_lower_bound, CodeSpec};
use dupcodes::{Guard, Result};

fn main() -> Result<()> {
    let (n, l, q) = (10, 2, 2);
    let (code, size) = c1_best_params(n, l, q, Guard::default())?;
    println!(
        "residues {:?}: {size} codewords, lower bound {}",
        code.residues(),
        c1_size_lower_bound(n, l, q)
    );
    let book = CodeSpec::C1(code.clone()).codebook(Guard::default())?;
    let x = book.encode(size as usize / 3).expect("index in range");
    for p in [0, 4, n - l] {
        let y = tandem_duplicate(x, l, p)?;
        let decoded = code.decode(&y)?;
        println!("{x} -> dup at {p} -> {y} -> {decoded}");
        assert_eq!(&decoded, x);
    }
    Ok(())
}
