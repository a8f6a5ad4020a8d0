//! Threshold activation spread and the synchrony measures p_k and e_k.
//!
//! ```bash
//! cargo run --example synchrony_measures
//! ```

use treelab::families;
use treelab::synchrony::{evolve, measures_exhaustive, measures_monte_carlo, SeedConfig};

fn main() {
    let c4 = families::cycle(4).unwrap();

    println!("single trajectories on C_4 (vertices 0..4):");
    for (threshold, seed) in [(1usize, vec![0usize]), (2, vec![0, 2]), (2, vec![0, 1])] {
        let cfg = SeedConfig::new(threshold, seed.clone(), 4).unwrap();
        let out = evolve(&c4, &cfg);
        println!(
            "  t={threshold} seed={seed:?}: trajectory {:?}, steps to synchrony {:?}",
            out.trajectory, out.i_star
        );
    }

    println!("\nexhaustive measures on C_4:");
    for (threshold, k) in [(1usize, 1usize), (2, 2), (1, 4)] {
        let m = measures_exhaustive(&c4, threshold, k).unwrap();
        println!(
            "  t={threshold} k={k}: p_k = {}/{} = {:.4}, e_k = {}/{}",
            m.p_k.numer(),
            m.p_k.denom(),
            rational(&m.p_k),
            m.e_k.numer(),
            m.e_k.denom()
        );
    }

    println!("\nMonte Carlo convergence on C_4 (t=2, k=2, exact value 1/3):");
    for samples in [100u64, 1_000, 10_000, 60_000] {
        let m = measures_monte_carlo(&c4, 2, 2, samples, 0).unwrap();
        println!("  {samples:>6} samples: p_k = {:.5}", rational(&m.p_k));
    }

    let petersen = families::petersen();
    println!("\nPetersen graph, threshold 2, exhaustive sweep over k-subsets:");
    for k in 1..=5 {
        let m = measures_exhaustive(&petersen, 2, k).unwrap();
        println!(
            "  k={k}: p_k = {:>6.4}, e_k = {:>6.4}",
            rational(&m.p_k),
            rational(&m.e_k)
        );
    }
}

fn rational(r: &num_rational::BigRational) -> f64 {
    let num: f64 = r.numer().to_string().parse().unwrap();
    let den: f64 = r.denom().to_string().parse().unwrap();
    num / den
}
