//! Small deterministic generator for seeded label sampling.
//!
//! SplitMix64: reproducible across platforms and dependency-free, which
//! keeps the sampled verification assignments stable forever.

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish draw in `1..=bound` (bound small, bias negligible and
    /// irrelevant for test sampling).
    pub fn positive_below(&mut self, bound: u64) -> i64 {
        (1 + self.next_u64() % bound) as i64
    }
}
