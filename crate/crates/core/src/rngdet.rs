//! Deterministic, splittable random streams.
//!
//! Every stream is a SplitMix64 sequence whose 64-bit key is derived from a
//! lineage: the master seed plus the path of split indices leading to it.
//! Splitting depends only on the lineage, never on how many values the parent
//! has already produced, so islands evolving on different threads draw from
//! streams that are fixed before any work is scheduled.

use std::fmt;

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64 finalizer (Stafford variant 13).
#[inline]
fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Where a stream came from: master seed and split path.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lineage {
    pub seed: u64,
    pub path: Vec<u64>,
}

impl fmt::Display for Lineage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.seed)?;
        for idx in &self.path {
            write!(f, "/{idx}")?;
        }
        Ok(())
    }
}

/// A counter-based random stream.
///
/// The `n`-th output is `mix64(key + (n + 1) * GOLDEN_GAMMA)`, i.e. plain
/// SplitMix64 seeded with `key`.
#[derive(Clone, Debug)]
pub struct RngStream {
    key: u64,
    counter: u64,
    lineage: Lineage,
}

impl RngStream {
    pub fn new(seed: u64) -> Self {
        Self { key: mix64(seed ^ 0x6A09_E667_F3BC_C908), counter: 0, lineage: Lineage { seed, path: Vec::new() } }
    }

    /// Child stream keyed by this stream's lineage and `index`.
    pub fn split(&self, index: u64) -> Self {
        let key = mix64(self.key ^ mix64(index.wrapping_add(1).wrapping_mul(GOLDEN_GAMMA)));
        let mut path = self.lineage.path.clone();
        path.push(index);
        Self {
            key: mix64(key.wrapping_add(GOLDEN_GAMMA)),
            counter: 0,
            lineage: Lineage { seed: self.lineage.seed, path },
        }
    }

    /// Split along a whole path, e.g. `[stage, epoch, island]`.
    pub fn split_path(&self, path: &[u64]) -> Self {
        path.iter().fold(self.clone(), |s, &i| s.split(i))
    }

    pub fn lineage(&self) -> &Lineage {
        &self.lineage
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.counter = self.counter.wrapping_add(1);
        mix64(self.key.wrapping_add(self.counter.wrapping_mul(GOLDEN_GAMMA)))
    }

    /// Uniform in `[0, 1)` with 53 bits of precision.
    #[inline]
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform integer in `[0, bound)`, unbiased (Lemire's multiply-shift with rejection).
    pub fn below(&mut self, bound: usize) -> usize {
        assert!(bound > 0, "below(0)");
        let bound = bound as u64;
        let threshold = bound.wrapping_neg() % bound;
        loop {
            let wide = (self.next_u64() as u128) * (bound as u128);
            if (wide as u64) >= threshold {
                return (wide >> 64) as usize;
            }
        }
    }

    /// Bernoulli trial with success probability `p`.
    #[inline]
    pub fn chance(&mut self, p: f64) -> bool {
        if p <= 0.0 {
            false
        } else if p >= 1.0 {
            true
        } else {
            self.next_f64() < p
        }
    }

    /// Fisher–Yates shuffle.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i + 1);
            items.swap(i, j);
        }
    }

    /// `count` distinct indices from `0..n`, uniformly, in draw order.
    pub fn sample_indices(&mut self, n: usize, count: usize) -> Vec<usize> {
        let count = count.min(n);
        let mut pool: Vec<usize> = (0..n).collect();
        for i in 0..count {
            let j = i + self.below(n - i);
            pool.swap(i, j);
        }
        pool.truncate(count);
        pool
    }
}
