//! Small shared utilities.

/// SplitMix64: a tiny deterministic generator used wherever reproducible
/// pseudo-random choices are needed (random matrices in tests, spinning
/// elements in the module chopper). Not suitable for cryptography.
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform enough draw from `0..n` for non-statistical use.
    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }
}

/// A child seed that differs for every `tag` under the same parent seed.
pub fn derive_seed(seed: u64, tag: u64) -> u64 {
    SplitMix64::new(seed.wrapping_add(tag.wrapping_mul(0x9e3779b97f4a7c15))).next_u64()
}
