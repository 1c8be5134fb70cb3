//! Reading a hyperspace product string back from its waveform with the
//! brute-force decoder and the GF(2) decoder.
//!
//! Run with `cargo run --example product_readout`.

use nbl_lab::{
    brute_force_readout, gf2_fast_readout, make_reference_system, realize_product, IntegerWave,
    ProductString,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let planted: ProductString = "HLLHHLHL".parse()?;
    println!("planted: {planted}");
    for clocks in [0, 4, 8, 12, 16, 32] {
        let sys = make_reference_system(99, planted.bits(), clocks);
        let observed = IntegerWave::from(realize_product(&planted, &sys)?);
        let brute = brute_force_readout(&observed, &sys)?;
        let fast = gf2_fast_readout(&observed, &sys)?;
        println!(
            "K = {clocks:>2}: {:?} with {} survivors, decoded {}, decoders agree: {}",
            fast.status,
            fast.survivors.count(),
            fast.decoded().map_or("-".to_string(), |p| p.to_string()),
            fast.agrees_with(&brute)
        );
    }

    // A wide system that brute force cannot touch.
    let wide = ProductString::new(40, 0x00AB_CDEF_0123)?;
    let sys = make_reference_system(5, 40, 60);
    let observed = IntegerWave::from(realize_product(&wide, &sys)?);
    let r = gf2_fast_readout(&observed, &sys)?;
    println!(
        "\nN = 40, K = 60: {:?}, recovered: {}",
        r.status,
        r.decoded() == Some(wide)
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
