//! Threshold activation spread: from a seed set, a vertex turns active
//! once at least `t` of its neighbors are active. Synchrony means the whole
//! vertex set eventually activates; `i_star` counts the steps it takes.
//!
//! The per-subset measures p_k (synchrony probability) and e_k (synchrony
//! efficiency, mean inverse step count) are computed in exact rational
//! arithmetic, exhaustively or by seeded Monte Carlo sampling.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SynchronyError {
    #[error("threshold must be at least 1")]
    ZeroThreshold,
    #[error("seed vertex {index} out of range for order {order}")]
    SeedOutOfRange { index: usize, order: usize },
    #[error("subset size {k} exceeds order {order}")]
    SubsetTooLarge { k: usize, order: usize },
    #[error("{subsets} subsets of size {k} exceed the exhaustive envelope of {limit}")]
    EnvelopeExceeded { subsets: u128, k: usize, limit: u128 },
    #[error("sample count must be at least 1")]
    ZeroSamples,
}

/// Activation threshold plus initial active set.
#[derive(Debug, Clone)]
pub struct SeedConfig {
    threshold: usize,
    seed: Vec<usize>,
}

impl SeedConfig {
    pub fn new(threshold: usize, mut seed: Vec<usize>, order: usize) -> Result<Self, SynchronyError> {
        if threshold == 0 {
            return Err(SynchronyError::ZeroThreshold);
        }
        seed.sort_unstable();
        seed.dedup();
        if let Some(&bad) = seed.iter().find(|&&v| v >= order) {
            return Err(SynchronyError::SeedOutOfRange { index: bad, order });
        }
        Ok(SeedConfig { threshold, seed })
    }

    pub fn threshold(&self) -> usize {
        self.threshold
    }

    pub fn seed(&self) -> &[usize] {
        &self.seed
    }
}

/// Trajectory of a single activation run.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SynchronyOutcome {
    /// Active sets S_0, S_1, ... up to the full set or the first repeat.
    pub trajectory: Vec<Vec<usize>>,
    /// Steps to reach the full vertex set; `None` when the spread stalls.
    pub i_star: Option<usize>,
    pub synchronized: bool,
}

/// Runs the activation process to its fixpoint.
pub fn evolve(g: &Graph, cfg: &SeedConfig) -> SynchronyOutcome {
    let words = g.order().div_ceil(64);
    let mut active = vec![0u64; words];
    for &v in cfg.seed() {
        active[v / 64] |= 1 << (v % 64);
    }
    let full_count = g.order();
    let mut trajectory = vec![words_to_vec(&active, g.order())];
    let mut i_star = if count(&active) == full_count { Some(0) } else { None };
    while i_star.is_none() {
        let next = step(g, &active, cfg.threshold());
        let grew = next != active;
        let now_full = count(&next) == full_count;
        trajectory.push(words_to_vec(&next, g.order()));
        if now_full {
            i_star = Some(trajectory.len() - 1);
        } else if !grew {
            break; // stalled short of synchrony; the repeat witnesses the fixpoint
        }
        active = next;
    }
    SynchronyOutcome { trajectory, synchronized: i_star.is_some(), i_star }
}

/// One activation step on word-packed vertex sets.
fn step(g: &Graph, active: &[u64], threshold: usize) -> Vec<u64> {
    let mut next = active.to_vec();
    for v in 0..g.order() {
        if active[v / 64] >> (v % 64) & 1 == 1 {
            continue;
        }
        let hot: usize = g
            .row(v)
            .iter()
            .zip(active)
            .map(|(r, a)| (r & a).count_ones() as usize)
            .sum();
        if hot >= threshold {
            next[v / 64] |= 1 << (v % 64);
        }
    }
    next
}

fn count(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

fn words_to_vec(words: &[u64], order: usize) -> Vec<usize> {
    (0..order).filter(|&v| words[v / 64] >> (v % 64) & 1 == 1).collect()
}

/// Steps-to-synchrony for a seed given as packed words; measure-path twin
/// of [`evolve`] without trajectory bookkeeping.
fn i_star_words(g: &Graph, seed: &[u64], threshold: usize) -> Option<usize> {
    let full = g.order();
    let mut active = seed.to_vec();
    if count(&active) == full {
        return Some(0);
    }
    let mut steps = 0;
    loop {
        let next = step(g, &active, threshold);
        steps += 1;
        if count(&next) == full {
            return Some(steps);
        }
        if next == active {
            return None;
        }
        active = next;
    }
}

/// How a measure was computed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum MeasureMethod {
    Exhaustive { subsets: u128 },
    MonteCarlo { samples: u64, rng_seed: u64 },
}

/// Synchrony probability and efficiency for k-subsets, exact rationals.
///
/// A seed that is already the whole vertex set has `i_star = 0`; its
/// efficiency contribution is defined as 1, the supremum of 1/i_star over
/// synchronizing seeds.
#[derive(Debug, Clone)]
pub struct SynchronyMeasures {
    pub k: usize,
    pub threshold: usize,
    pub p_k: BigRational,
    pub e_k: BigRational,
    pub method: MeasureMethod,
}

const EXHAUSTIVE_LIMIT: u128 = 10_000_000;

/// Exact measures over every k-subset.
pub fn measures_exhaustive(
    g: &Graph,
    threshold: usize,
    k: usize,
) -> Result<SynchronyMeasures, SynchronyError> {
    if threshold == 0 {
        return Err(SynchronyError::ZeroThreshold);
    }
    let order = g.order();
    if k > order {
        return Err(SynchronyError::SubsetTooLarge { k, order });
    }
    let subsets = binomial_capped(order, k, EXHAUSTIVE_LIMIT);
    if subsets > EXHAUSTIVE_LIMIT {
        return Err(SynchronyError::EnvelopeExceeded { subsets, k, limit: EXHAUSTIVE_LIMIT });
    }
    let words = order.div_ceil(64);
    let mut indices: Vec<usize> = (0..k).collect();
    let mut hits: u64 = 0;
    let mut speed_sum = BigRational::zero();
    let mut seen: u128 = 0;
    loop {
        let mut seed = vec![0u64; words];
        for &v in &indices {
            seed[v / 64] |= 1 << (v % 64);
        }
        match i_star_words(g, &seed, threshold) {
            Some(0) => {
                hits += 1;
                speed_sum += BigRational::one();
            }
            Some(steps) => {
                hits += 1;
                speed_sum += BigRational::new(BigInt::one(), BigInt::from(steps));
            }
            None => {}
        }
        seen += 1;
        if !next_combination(&mut indices, order) {
            break;
        }
    }
    debug_assert_eq!(seen, subsets);
    let total = BigInt::from(subsets);
    Ok(SynchronyMeasures {
        k,
        threshold,
        p_k: BigRational::new(BigInt::from(hits), total.clone()),
        e_k: speed_sum / BigRational::from_integer(total),
        method: MeasureMethod::Exhaustive { subsets },
    })
}

/// Seeded Monte Carlo measures: `samples` uniform k-subsets drawn from a
/// ChaCha8 stream, Floyd's algorithm per draw. Identical seeds give
/// identical output.
pub fn measures_monte_carlo(
    g: &Graph,
    threshold: usize,
    k: usize,
    samples: u64,
    rng_seed: u64,
) -> Result<SynchronyMeasures, SynchronyError> {
    if threshold == 0 {
        return Err(SynchronyError::ZeroThreshold);
    }
    if samples == 0 {
        return Err(SynchronyError::ZeroSamples);
    }
    let order = g.order();
    if k > order {
        return Err(SynchronyError::SubsetTooLarge { k, order });
    }
    let words = order.div_ceil(64);
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut hits: u64 = 0;
    let mut speed_sum = BigRational::zero();
    for _ in 0..samples {
        let mut seed = vec![0u64; words];
        // Floyd's uniform k-subset sample
        for i in (order - k)..order {
            let r = rng.random_range(0..=i);
            let slot = if seed[r / 64] >> (r % 64) & 1 == 1 { i } else { r };
            seed[slot / 64] |= 1 << (slot % 64);
        }
        match i_star_words(g, &seed, threshold) {
            Some(0) => {
                hits += 1;
                speed_sum += BigRational::one();
            }
            Some(steps) => {
                hits += 1;
                speed_sum += BigRational::new(BigInt::one(), BigInt::from(steps));
            }
            None => {}
        }
    }
    let total = BigInt::from(samples);
    Ok(SynchronyMeasures {
        k,
        threshold,
        p_k: BigRational::new(BigInt::from(hits), total.clone()),
        e_k: speed_sum / BigRational::from_integer(total),
        method: MeasureMethod::MonteCarlo { samples, rng_seed },
    })
}

/// C(n, k), short-circuiting once the count clears `cap`. The running
/// value after each step is itself a binomial coefficient, so the partial
/// values grow monotonically and the early exit is safe.
fn binomial_capped(n: usize, k: usize, cap: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut value: u128 = 1;
    for i in 0..k {
        value = value.saturating_mul((n - i) as u128) / (i + 1) as u128;
        if value > cap {
            return value;
        }
    }
    value
}

/// Advances `indices` to the next k-combination of 0..n in lexicographic
/// order; false when exhausted.
fn next_combination(indices: &mut [usize], n: usize) -> bool {
    let k = indices.len();
    if k == 0 {
        return false;
    }
    let mut i = k;
    while i > 0 {
        i -= 1;
        if indices[i] < n - (k - i) {
            indices[i] += 1;
            for j in i + 1..k {
                indices[j] = indices[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::testkit::random_connected;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn evolve_on_the_four_cycle() {
        let c4 = families::cycle(4).unwrap();

        let cfg = SeedConfig::new(1, vec![0], 4).unwrap();
        let out = evolve(&c4, &cfg);
        assert_eq!(out.trajectory, vec![vec![0], vec![0, 1, 3], vec![0, 1, 2, 3]]);
        assert_eq!(out.i_star, Some(2));
        assert!(out.synchronized);

        let cfg = SeedConfig::new(2, vec![0, 2], 4).unwrap();
        let out = evolve(&c4, &cfg);
        assert_eq!(out.i_star, Some(1));

        let cfg = SeedConfig::new(2, vec![0, 1], 4).unwrap();
        let out = evolve(&c4, &cfg);
        assert_eq!(out.i_star, None);
        assert!(!out.synchronized);
        // the stalled fixpoint is witnessed by a repeated final entry
        let n = out.trajectory.len();
        assert!(n >= 2 && out.trajectory[n - 1] == out.trajectory[n - 2]);
    }

    #[test]
    fn evolve_full_seed_is_instant() {
        let c4 = families::cycle(4).unwrap();
        let cfg = SeedConfig::new(3, vec![0, 1, 2, 3], 4).unwrap();
        let out = evolve(&c4, &cfg);
        assert_eq!(out.i_star, Some(0));
    }

    #[test]
    fn seed_validation() {
        assert!(matches!(
            SeedConfig::new(0, vec![0], 4),
            Err(SynchronyError::ZeroThreshold)
        ));
        assert!(matches!(
            SeedConfig::new(1, vec![4], 4),
            Err(SynchronyError::SeedOutOfRange { index: 4, order: 4 })
        ));
    }

    #[test]
    fn exhaustive_measures_on_the_four_cycle() {
        let c4 = families::cycle(4).unwrap();
        // only the two diagonal pairs synchronize, each in one step
        let m = measures_exhaustive(&c4, 2, 2).unwrap();
        assert_eq!(m.p_k, ratio(1, 3));
        assert_eq!(m.e_k, ratio(1, 3));
        // every singleton synchronizes in exactly two steps
        let m = measures_exhaustive(&c4, 1, 1).unwrap();
        assert_eq!(m.p_k, ratio(1, 1));
        assert_eq!(m.e_k, ratio(1, 2));
        // the only order-sized subset is the full set, i_star = 0
        let m = measures_exhaustive(&c4, 1, 4).unwrap();
        assert_eq!(m.p_k, ratio(1, 1));
        assert_eq!(m.e_k, ratio(1, 1));
    }

    #[test]
    fn monte_carlo_is_reproducible_and_concentrates() {
        let c4 = families::cycle(4).unwrap();
        let a = measures_monte_carlo(&c4, 2, 2, 60_000, 0).unwrap();
        let b = measures_monte_carlo(&c4, 2, 2, 60_000, 0).unwrap();
        assert_eq!(a.p_k, b.p_k);
        assert_eq!(a.e_k, b.e_k);
        // within 3 sigma of the exhaustive 1/3
        let p = big_rational_to_f64(&a.p_k);
        let sigma = ((1.0 / 3.0) * (2.0 / 3.0) / 60_000.0_f64).sqrt();
        assert!((p - 1.0 / 3.0).abs() <= 3.0 * sigma, "p = {p}");

        let other = measures_monte_carlo(&c4, 2, 2, 60_000, 1).unwrap();
        assert_ne!(a.p_k, other.p_k, "different seeds draw different subsets");

        assert!(matches!(
            measures_monte_carlo(&c4, 2, 2, 0, 0),
            Err(SynchronyError::ZeroSamples)
        ));
    }

    pub(crate) fn big_rational_to_f64(r: &BigRational) -> f64 {
        let num: f64 = r.numer().to_string().parse().unwrap();
        let den: f64 = r.denom().to_string().parse().unwrap();
        num / den
    }

    #[test]
    fn threshold_one_always_percolates_on_connected_graphs() {
        let pet = families::petersen();
        let m = measures_exhaustive(&pet, 1, 1).unwrap();
        assert_eq!(m.p_k, ratio(1, 1));
        let mc = measures_monte_carlo(&pet, 1, 1, 500, 0).unwrap();
        assert_eq!(mc.p_k, ratio(1, 1));
    }

    #[test]
    fn trajectories_grow_monotonically_and_stabilize_quickly() {
        let mut rng = ChaCha8Rng::seed_from_u64(30);
        for _ in 0..500 {
            let order = rng.random_range(2..=9);
            let g = random_connected(&mut rng, order, 0.45);
            let t = rng.random_range(1..=3);
            let k = rng.random_range(1..=order);
            let seed: Vec<usize> = rand::seq::index::sample(&mut rng, order, k).into_vec();
            let cfg = SeedConfig::new(t, seed, order).unwrap();
            let out = evolve(&g, &cfg);
            for w in out.trajectory.windows(2) {
                assert!(w[0].iter().all(|v| w[1].contains(v)), "S_i grows");
            }
            if let Some(steps) = out.i_star {
                assert!(steps <= order, "fixpoint within order steps");
            }
        }
    }

    #[test]
    fn i_star_monotone_in_threshold_and_seed() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..300 {
            let order = rng.random_range(3..=9);
            let g = random_connected(&mut rng, order, 0.5);
            let k = rng.random_range(1..order);
            let seed: Vec<usize> = rand::seq::index::sample(&mut rng, order, k).into_vec();

            // threshold monotonicity: raising t can only slow the spread,
            // and a stalled spread stays stalled
            let runs: Vec<Option<usize>> = (1..=3usize)
                .map(|t| {
                    let cfg = SeedConfig::new(t, seed.clone(), order).unwrap();
                    evolve(&g, &cfg).i_star
                })
                .collect();
            for w in runs.windows(2) {
                match (w[0], w[1]) {
                    (Some(lo), Some(hi)) => assert!(hi >= lo),
                    (None, Some(_)) => panic!("synchrony appeared at a higher threshold"),
                    _ => {}
                }
            }

            // seed monotonicity: a superset seed dominates stepwise
            let extra: Vec<usize> = {
                let mut s = seed.clone();
                for v in 0..order {
                    if !s.contains(&v) {
                        s.push(v);
                        break;
                    }
                }
                s
            };
            let t = rng.random_range(1..=2);
            let small = SeedConfig::new(t, seed.clone(), order).unwrap();
            let large = SeedConfig::new(t, extra, order).unwrap();
            let a = evolve(&g, &small);
            let b = evolve(&g, &large);
            let steps = a.trajectory.len().max(b.trajectory.len());
            for i in 0..steps {
                let sa = a.trajectory.get(i).unwrap_or_else(|| a.trajectory.last().unwrap());
                let sb = b.trajectory.get(i).unwrap_or_else(|| b.trajectory.last().unwrap());
                assert!(sa.iter().all(|v| sb.contains(v)), "step {i}");
            }
        }
    }

    #[test]
    fn envelope_guard_trips() {
        let g = crate::graph::Graph::empty(40).unwrap();
        assert!(matches!(
            measures_exhaustive(&g, 1, 20),
            Err(SynchronyError::EnvelopeExceeded { .. })
        ));
    }
}
