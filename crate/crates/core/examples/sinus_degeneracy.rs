//! Linear vs exponential sinusoidal bit representations: degeneracy and
//! bandwidth.
//!
//! Run with `cargo run --example sinus_degeneracy`.

use nbl_lab::sinus::realize_sinus_product;
use nbl_lab::{ProductString, Role, SinusRepresentation};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let lin = SinusRepresentation::linear(3)?;
    let exp = SinusRepresentation::exponential(3)?;
    println!("bit value linear exponential");
    for r in 1..=3 {
        for role in [Role::L, Role::H] {
            println!(
                "{r:>3} {:>5} {:>6} {:>11}",
                role.as_char(),
                lin.value_frequency(r, role)?,
                exp.value_frequency(r, role)?
            );
        }
    }

    let report = SinusRepresentation::linear(2)?.find_degeneracies()?;
    println!("\nlinear N=2 degeneracies: {}", report.to_json()?);
    let rep = SinusRepresentation::linear(2)?;
    let a = realize_sinus_product(&rep, &"LH".parse::<ProductString>()?, 21)?;
    let b = realize_sinus_product(&rep, &"HL".parse::<ProductString>()?, 21)?;
    let gap = a
        .iter()
        .zip(&b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max);
    println!("max |L1H2 - H1L2| over one window: {gap:.1e}");

    println!(
        "\n{:>3} {:>10} {:>6} {:>12} {:>6}",
        "N", "lin f_max", "groups", "exp f_max", "groups"
    );
    for n in [2, 4, 8, 12, 16] {
        let lin = SinusRepresentation::linear(n)?;
        let exp = SinusRepresentation::exponential(n)?;
        println!(
            "{n:>3} {:>10} {:>6} {:>12} {:>6}",
            lin.max_system_frequency(),
            lin.find_degeneracies()?.groups.len(),
            exp.max_system_frequency(),
            exp.find_degeneracies()?.groups.len()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
