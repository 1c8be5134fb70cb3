//! Monte Carlo failure rate of the GF(2) readout against the random-matrix
//! rank prediction.
//!
//! Run with `cargo run --release --example failure_rate_sweep`.

use nbl_lab::readout::count_failures;

fn predicted_failure(bits: usize, clocks: usize) -> f64 {
    1.0 - (0..bits)
        .map(|i| 1.0 - 2f64.powi(i as i32 - clocks as i32))
        .product::<f64>()
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let trials = 20_000;
    println!(
        "{:>3} {:>3} {:>9} {:>10} {:>10}",
        "N", "K", "failures", "rate", "predicted"
    );
    for n in [4, 6, 8, 10] {
        for k in [n, 2 * n] {
            let c = count_failures(n, k, trials, 1)?;
            println!(
                "{n:>3} {k:>3} {:>9} {:>10.5} {:>10.5}",
                c.failures,
                c.rate(),
                predicted_failure(n, k)
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
