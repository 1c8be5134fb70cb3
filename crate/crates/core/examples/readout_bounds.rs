//! Clock budgets for reading out an N-bit product string: the sinusoidal
//! Fourier window, the fast-measurement bound and the time-shifted scheme.
//!
//! Run with `cargo run --example readout_bounds`.

use nbl_lab::{stacho_clock_bound, timeshifted_readout_steps, SinusRepresentation};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!(
        "{:>5} {:>22} {:>14} {:>14} {:>18}",
        "N", "exp. sinus samples", "N log2 N", "eps = 0.1", "2N log4(N/2^-10)"
    );
    for n in [2usize, 4, 8, 16, 31, 64, 1024] {
        let sinus = SinusRepresentation::exponential(n)
            .map(|r| r.readout_sample_count().to_string())
            .unwrap_or_else(|_| "overflow".into());
        println!(
            "{n:>5} {sinus:>22} {:>14.1} {:>14.1} {:>18.1}",
            stacho_clock_bound(n, 0.0)?,
            stacho_clock_bound(n, 0.1)?,
            timeshifted_readout_steps(n, 2f64.powi(-10))?
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
