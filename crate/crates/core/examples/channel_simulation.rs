//! Seeded simulation: random codewords, one random error each, decoded by
//! the matching construction. Also available as `dupcodes simulate`.
//!
//! cargo run --release --example channel_simulation

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use dupcodes::channel::inject_random_error;
use dupcodes::codes::{c1_best_params, c2_best_params, CodeSpec, PalindromeFreeCode};
use dupcodes::{Guard, Result};

fn main() -> Result<()> {
    let guard = Guard::default();
    let specs = [
        CodeSpec::C1(c1_best_params(12, 3, 2, guard)?.0),
        CodeSpec::C2(c2_best_params(12, guard)?.0),
        CodeSpec::Cpf(PalindromeFreeCode::new(12, 3)?),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for spec in specs {
        let book = spec.codebook(guard)?;
        let kinds = spec.error_kinds();
        let trials = 2000;
        let mut ok = 0;
        for _ in 0..trials {
            let c = &book.words[rng.gen_range(0..book.len())];
            let kind = kinds[rng.gen_range(0..kinds.len())];
            let Some((_, y)) = inject_random_error(c, kind, &mut rng) else {
                continue;
            };
            if spec.decode(&y).as_ref() == Ok(c) {
                ok += 1;
            }
        }
        println!(
            "{}: {} codewords, {ok}/{trials} decoded",
            spec.to_json(),
            book.len()
        );
    }
    Ok(())
}
