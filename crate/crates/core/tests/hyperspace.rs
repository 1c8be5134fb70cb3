use std::collections::HashSet;

use nbl_lab::hyperspace::{realize_superposition_counted, synthesize_universe_counted};
use nbl_lab::{
    expand_universe, make_reference_system, realize_product, realize_superposition,
    synthesize_universe, OpCounter, ProductString, Superposition,
};
use proptest::prelude::*;

const SEEDS: [u64; 5] = [1, 2, 3, 0x5EED, 0xDEAD_BEEF];

#[test]
fn universe_equals_expanded_sum_up_to_twelve_bits() {
    for bits in 0..=12 {
        let expanded = expand_universe(bits).unwrap();
        for seed in SEEDS {
            let sys = make_reference_system(seed, bits, 128);
            assert_eq!(
                synthesize_universe(&sys).unwrap(),
                realize_superposition(&expanded, &sys).unwrap(),
                "N = {bits}, seed = {seed}"
            );
        }
    }
}

#[test]
fn all_sixteen_two_bit_superpositions_are_distinct() {
    let strings: Vec<ProductString> = ProductString::enumerate(2).unwrap().collect();
    for seed in 100..110u64 {
        let sys = make_reference_system(seed, 2, 64);
        let mut seen = HashSet::new();
        for subset in 0u32..16 {
            let s = Superposition::from_members(
                2,
                strings
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| subset >> i & 1 == 1)
                    .map(|(_, p)| *p),
            )
            .unwrap();
            assert!(
                seen.insert(realize_superposition(&s, &sys).unwrap()),
                "seed {seed}"
            );
        }
    }
}

fn per_clock_ops(bits: usize) -> (f64, f64) {
    let clocks = 32;
    let sys = make_reference_system(9, bits, clocks);
    let mut product = OpCounter::default();
    let mut oracle = OpCounter::default();
    synthesize_universe_counted(&sys, &mut product).unwrap();
    realize_superposition_counted(&expand_universe(bits).unwrap(), &sys, &mut oracle).unwrap();
    (
        product.total() as f64 / clocks as f64,
        oracle.multiplications as f64 / clocks as f64,
    )
}

#[test]
fn product_form_cost_is_linear_and_oracle_cost_is_n_two_to_the_n() {
    let ns = [4usize, 6, 8, 10];
    let costs: Vec<(f64, f64)> = ns.iter().map(|&n| per_clock_ops(n)).collect();
    for (&n, &(product, oracle)) in ns.iter().zip(&costs) {
        assert_eq!(product, (2 * n - 1) as f64);
        assert_eq!(oracle, (n << n) as f64);
    }
    // Constant slope in N for the product form.
    for w in costs.windows(2) {
        assert_eq!(w[1].0 - w[0].0, 4.0);
    }
    // Oracle grows by (n+2)/n * 4 per two-bit step.
    for (i, w) in costs.windows(2).enumerate() {
        let expected = (ns[i + 1] as f64 / ns[i] as f64) * 4.0;
        assert!((w[1].1 / w[0].1 - expected).abs() < 1e-12);
    }
}

fn product_string(max_bits: usize) -> impl Strategy<Value = ProductString> {
    (0..=max_bits).prop_flat_map(|n| {
        let top = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
        (0..=top).prop_map(move |mask| ProductString::new(n, mask).unwrap())
    })
}

proptest! {
    #[test]
    fn realized_products_stay_bipolar(ps in product_string(10), seed in any::<u64>(), k in 0usize..200) {
        let sys = make_reference_system(seed, ps.bits(), k);
        let w = realize_product(&ps, &sys).unwrap();
        prop_assert_eq!(w.len(), k);
        prop_assert!(w.samples().iter().all(|&s| s == 1 || s == -1));
    }

    #[test]
    fn text_form_round_trips(ps in product_string(64)) {
        prop_assert_eq!(ps.to_string().parse::<ProductString>().unwrap(), ps);
    }

    #[test]
    fn superposition_samples_are_bounded(seed in any::<u64>(), members in proptest::collection::btree_set(0u64..16, 0..16)) {
        let s = Superposition::from_members(4, members.iter().map(|&m| ProductString::new(4, m).unwrap())).unwrap();
        let sys = make_reference_system(seed, 4, 50);
        let m = s.len() as i64;
        let w = realize_superposition(&s, &sys).unwrap();
        prop_assert!(w.samples().iter().all(|&x| (-m..=m).contains(&x)));
    }
}
