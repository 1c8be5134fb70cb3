//! The universe (uniform superposition of all 2^N product strings) built two
//! ways: as `prod_r (L_r + H_r)` and as the explicit sum of 2^N products.
//!
//! Run with `cargo run --example universe_synthesis`.

use nbl_lab::hyperspace::{realize_superposition_counted, synthesize_universe_counted};
use nbl_lab::{enumerate_superpositions, expand_universe, make_reference_system, OpCounter};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for n in 1..=3 {
        println!(
            "N = {n}: {} distinct superpositions",
            enumerate_superpositions(n)?
        );
    }

    let clocks = 128;
    println!(
        "\n{:>3} {:>6} {:>14} {:>14}",
        "N", "equal", "product ops/t", "oracle ops/t"
    );
    for n in [0, 2, 4, 6, 8, 10, 12] {
        let sys = make_reference_system(7, n, clocks);
        let mut product_ops = OpCounter::default();
        let mut oracle_ops = OpCounter::default();
        let product = synthesize_universe_counted(&sys, &mut product_ops)?;
        let oracle = realize_superposition_counted(&expand_universe(n)?, &sys, &mut oracle_ops)?;
        println!(
            "{n:>3} {:>6} {:>14} {:>14}",
            product == oracle,
            product_ops.total() / clocks as u64,
            oracle_ops.total() / clocks as u64
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
