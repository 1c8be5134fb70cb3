//! Random telegraph waves and their finite-time orthogonality.
//!
//! Run with `cargo run --example rtw_orthogonality`.

use nbl_lab::experiments::{median, pair_correlations};
use nbl_lab::{make_reference_system, multiply, time_average_product, Role};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let sys = make_reference_system(2012, 2, 24);
    for r in 1..=2 {
        for role in [Role::L, Role::H] {
            let wave = sys.wave(r, role)?;
            let text: String = wave
                .samples()
                .iter()
                .map(|&s| if s > 0 { '+' } else { '-' })
                .collect();
            println!("{}{r}: {text}", role.as_char());
        }
    }

    let l1 = sys.wave(1, Role::L)?;
    println!("L1 * L1 is all ones: {}", multiply(l1, l1)?.is_all_ones());
    println!("<L1 L1> = {}", time_average_product(l1, l1)?);
    println!("<L1 -L1> = {}", time_average_product(l1, &l1.negate())?);

    println!("\n{:>9} {:>12} {:>10}", "K", "median|<LH>|", "4/sqrt(K)");
    for k in [100, 10_000, 1_000_000] {
        let mut values = pair_correlations(2012, k, 100, false)?;
        println!(
            "{k:>9} {:>12.6} {:>10.6}",
            median(&mut values),
            4.0 / (k as f64).sqrt()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
