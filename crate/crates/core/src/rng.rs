//! Deterministic pseudo-random generator for seeded sampling.
//!
//! This is the splitmix64 generator: a 64-bit Weyl sequence passed through a
//! two-round finalizer. It is not cryptographic; it exists so that sampled
//! verification runs are exactly reproducible from a single `u64` seed, with
//! no dependence on platform, thread count or library version. The constants
//! are the standard splitmix64 constants.

/// Splitmix64 stream. Copy-sized, no heap state.
#[derive(Clone, Copy, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..n`. Uses plain reduction: the modulo bias is
    /// below 2^-40 for every `n` used in this crate and reproducibility
    /// matters more than perfect uniformity here.
    pub fn below(&mut self, n: u64) -> u64 {
        debug_assert!(n > 0);
        self.next_u64() % n
    }

    /// Unordered pair of distinct indices in `0..n`, returned as (low, high).
    pub fn distinct_pair(&mut self, n: u64) -> (u64, u64) {
        debug_assert!(n > 1);
        let i = self.below(n);
        let mut j = self.below(n - 1);
        if j >= i {
            j += 1;
        }
        if i < j {
            (i, j)
        } else {
            (j, i)
        }
    }
}
