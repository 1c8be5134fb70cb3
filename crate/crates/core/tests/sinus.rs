use std::collections::HashSet;
use std::f64::consts::TAU;

use nbl_lab::sinus::{find_degeneracies, realize_frequency, realize_sinus_product};
use nbl_lab::{ProductString, Role, SinusKind, SinusRepresentation};
use num_complex::Complex64;

fn naive_dft(x: &[Complex64]) -> Vec<Complex64> {
    let n = x.len();
    (0..n)
        .map(|bin| {
            x.iter()
                .enumerate()
                .map(|(k, &v)| {
                    v * Complex64::from_polar(1.0, -TAU * (bin * k % n) as f64 / n as f64)
                })
                .sum()
        })
        .collect()
}

#[test]
fn exponential_frequencies_are_injective_up_to_sixteen_bits() {
    for n in 0..=16 {
        let rep = SinusRepresentation::exponential(n).unwrap();
        let mut seen = HashSet::new();
        for ps in ProductString::enumerate(n).unwrap() {
            assert!(
                seen.insert(rep.product_frequency(&ps).unwrap()),
                "N = {n}: {ps}"
            );
        }
        assert_eq!(seen.len(), 1 << n);
    }
}

#[test]
fn linear_always_collides_from_two_bits() {
    for n in 2..=16 {
        let rep = SinusRepresentation::linear(n).unwrap();
        let report = find_degeneracies(&rep).unwrap();
        let tail = "L".repeat(n - 2);
        let a: ProductString = format!("LH{tail}").parse().unwrap();
        let b: ProductString = format!("HL{tail}").parse().unwrap();
        assert!(
            report
                .groups
                .iter()
                .any(|g| g.members.contains(&a) && g.members.contains(&b)),
            "N = {n}"
        );
    }
}

#[test]
fn groups_are_disjoint_with_distinct_frequencies() {
    let report = find_degeneracies(&SinusRepresentation::linear(8).unwrap()).unwrap();
    let mut members = HashSet::new();
    let mut freqs = HashSet::new();
    for g in &report.groups {
        assert!(g.members.len() >= 2);
        assert!(freqs.insert(g.frequency));
        for m in &g.members {
            assert!(members.insert(*m));
        }
    }
}

#[test]
fn bandwidth_scaling_laws() {
    for n in [4usize, 8, 12, 16] {
        let lin = SinusRepresentation::linear(n)
            .unwrap()
            .max_system_frequency() as f64;
        let exp = SinusRepresentation::exponential(n)
            .unwrap()
            .max_system_frequency() as f64;
        let quad = lin / (n * n) as f64;
        let expo = exp.log2() / (2 * n) as f64;
        // N(2N+1)/N^2 = 2 + 1/N, which is 12.5% above 2 at N = 4.
        assert!((quad - (2.0 + 1.0 / n as f64)).abs() < 1e-12);
        if n >= 8 {
            assert!((quad - 2.0).abs() <= 0.1 * 2.0, "N = {n}: {quad}");
        }
        assert!((expo - 1.0).abs() <= 0.1, "N = {n}: {expo}");
    }
}

#[test]
fn max_frequency_is_the_sum_of_all_assignments() {
    for n in 0..=16 {
        for kind in [SinusKind::Linear, SinusKind::Exponential] {
            let rep = SinusRepresentation::new(kind, n).unwrap();
            let sum: u64 = (1..=n)
                .flat_map(|r| [Role::L, Role::H].map(|v| rep.value_frequency(r, v).unwrap()))
                .sum();
            assert_eq!(sum, rep.max_system_frequency());
        }
    }
}

#[test]
fn factor_waveforms_multiply_to_the_product_waveform() {
    let samples = 257;
    for kind in [SinusKind::Linear, SinusKind::Exponential] {
        let rep = SinusRepresentation::new(kind, 4).unwrap();
        for ps in ProductString::enumerate(4).unwrap() {
            let mut acc = vec![Complex64::new(1.0, 0.0); samples];
            for (i, role) in ps.roles().enumerate() {
                let f = rep.value_frequency(i + 1, role).unwrap();
                for (a, z) in acc.iter_mut().zip(realize_frequency(f, samples)) {
                    *a *= z;
                }
            }
            let direct = realize_sinus_product(&rep, &ps, samples).unwrap();
            for (a, d) in acc.iter().zip(&direct) {
                assert!((a - d).norm() < 1e-9);
            }
        }
    }
}

#[test]
fn dft_peaks_at_the_product_frequency() {
    for kind in [SinusKind::Linear, SinusKind::Exponential] {
        let rep = SinusRepresentation::new(kind, 3).unwrap();
        let samples = rep.readout_sample_count() as usize;
        for ps in ProductString::enumerate(3).unwrap() {
            let f = rep.product_frequency(&ps).unwrap() as usize;
            let spectrum = naive_dft(&realize_sinus_product(&rep, &ps, samples).unwrap());
            for (bin, c) in spectrum.iter().enumerate() {
                if bin == f {
                    assert!((c.norm() - samples as f64).abs() < 1e-6);
                } else {
                    assert!(c.norm() < 1e-6, "{kind} {ps}: bin {bin} = {}", c.norm());
                }
            }
        }
    }
}

#[test]
fn linear_collision_is_a_waveform_collision() {
    let rep = SinusRepresentation::linear(2).unwrap();
    let samples = rep.readout_sample_count() as usize;
    let a = realize_sinus_product(&rep, &"LH".parse().unwrap(), samples).unwrap();
    let b = realize_sinus_product(&rep, &"HL".parse().unwrap(), samples).unwrap();
    assert!(a.iter().zip(&b).all(|(x, y)| (x - y).norm() < 1e-12));
}
