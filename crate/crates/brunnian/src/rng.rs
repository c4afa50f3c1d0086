//! Seeded pseudo-randomness for reproducible sampling.
//!
//! A plain 64-bit linear congruential generator with multiplier
//! `6364136223846793005` and increment `1442695040888963407`; each step
//! advances the state and yields the high 32 bits. Sampled test sets are
//! therefore reproducible across implementations from the seed alone.

const MULTIPLIER: u64 = 6364136223846793005;
const INCREMENT: u64 = 1442695040888963407;

#[derive(Debug, Clone)]
pub struct Lcg64 {
    state: u64,
}

impl Lcg64 {
    pub fn new(seed: u64) -> Self {
        Lcg64 { state: seed }
    }

    pub fn next_u32(&mut self) -> u32 {
        self.state = self.state.wrapping_mul(MULTIPLIER).wrapping_add(INCREMENT);
        (self.state >> 32) as u32
    }

    /// Uniform-ish value in `0..bound` by reduction. Fine for sampling at
    /// desk scale; the modulo bias is irrelevant for bounds far below 2^32.
    pub fn next_below(&mut self, bound: usize) -> usize {
        assert!(bound > 0, "bound must be positive");
        self.next_u32() as usize % bound
    }
}

/// `count` distinct indices below `len`, drawn in order with repeats
/// skipped, returned in ascending order.
pub fn sample_distinct(len: usize, count: usize, seed: u64) -> Vec<usize> {
    assert!(count <= len, "cannot sample {count} distinct indices from {len}");
    let mut rng = Lcg64::new(seed);
    let mut seen = vec![false; len];
    let mut picked = Vec::with_capacity(count);
    while picked.len() < count {
        let idx = rng.next_below(len);
        if !seen[idx] {
            seen[idx] = true;
            picked.push(idx);
        }
    }
    picked.sort_unstable();
    picked
}
