//! Upper bound on codes correcting one tandem duplication, the exact optimum
//! on small lengths, and the fractional transversal behind the bound.
//!
//! cargo run --release --example sphere_packing_bound

use dupcodes::bounds::{
    bound_report, deletion_histogram, exact_optimum, gsp_bound_tandem, transversal_check,
};
use dupcodes::channel::ErrorKind;
use dupcodes::{Guard, Result};

fn main() -> Result<()> {
    let (l, q) = (2, 2);
    println!(
        "deletion histogram n=8 l=2: {:?}",
        deletion_histogram(8, l, q)
    );
    for n in 2..=9 {
        let bound = gsp_bound_tandem(n, l, q);
        let opt = exact_optimum(n, ErrorKind::TandemDup(l), 1, q, Guard::default())?;
        let report = transversal_check(n, l, 1, q, Guard::default())?;
        println!(
            "n={n}: bound {bound}, optimum {opt}, transversal feasible {}",
            report.feasible
        );
    }
    let report = bound_report(40, l, q);
    println!(
        "n=40: redundancy at least {:.4} bits",
        report.redundancy_lb_bits
    );
    Ok(())
}
