//! Closed-form sphere sizes and bounds next to brute-force enumeration.
//!
//! cargo run --example sphere_formulas

use dupcodes::channel::{error_sphere, ErrorKind};
use dupcodes::formulas::{
    pal_del_sphere_size_l2_binary, pal_del_sphere_upper_bound, pal_dup_sphere_size_l2,
    pal_dup_sphere_upper_bound, palindrome_matrix, tandem_dup_sphere_size,
};
use dupcodes::{Result, Word};

fn main() -> Result<()> {
    let x = Word::parse("21010121", 3)?;
    for t in 1..=3 {
        let formula = tandem_dup_sphere_size(&x, 2, t)?;
        let size = error_sphere(&x, ErrorKind::TandemDup(2), t).len();
        println!("tandem dup l=2 t={t} of {x}: formula {formula}, enumerated {size}");
    }

    let y = Word::parse("11110220", 3)?;
    let size = error_sphere(&y, ErrorKind::PalDup(2), 1).len();
    println!(
        "pal dup l=2 of {y}: formula {}, bound {}, enumerated {size}",
        pal_dup_sphere_size_l2(&y)?,
        pal_dup_sphere_upper_bound(&y, 2)?
    );

    let z = Word::parse("0110011010", 2)?;
    let m = palindrome_matrix(&z, 2)?;
    println!(
        "palindrome matrix of {z}: zero columns {:?}, runs {}",
        m.zero_columns(),
        m.zero_column_runs()
    );
    let size = error_sphere(&z, ErrorKind::PalDel(2), 1).len();
    println!(
        "pal del l=2 of {z}: formula {}, bound {}, enumerated {size}",
        pal_del_sphere_size_l2_binary(&z)?,
        pal_del_sphere_upper_bound(&z, 2)?
    );
    Ok(())
}
