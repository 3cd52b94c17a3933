//! A small deterministic generator for reproducible sampling.
//!
//! Randomized checks (the self-test command, the property suites) need the
//! same sequence for the same 64-bit seed on every platform, so this is a
//! fixed splitmix64 rather than an external RNG.

use crate::word::{Letter, Word};

#[derive(Debug, Clone)]
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..bound` (`bound > 0`).
    pub fn below(&mut self, bound: u64) -> u64 {
        ((self.next_u64() as u128 * bound as u128) >> 64) as u64
    }

    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.below(den) < num
    }
}

/// A random word on `n` strands with at most `max_len` letters and at most
/// `max_pre` pre-crossings.
pub fn random_word(rng: &mut Rng, n: usize, max_len: usize, max_pre: usize) -> Word {
    let len = rng.below(max_len as u64 + 1) as usize;
    let mut letters = Vec::with_capacity(len);
    let mut pre_left = max_pre;
    for _ in 0..len {
        let index = 1 + rng.below((n - 1) as u64) as usize;
        let kind = rng.below(3);
        letters.push(match kind {
            0 => Letter::sigma(index),
            1 => Letter::sigma_inv(index),
            _ => {
                if pre_left > 0 {
                    pre_left -= 1;
                    Letter::pre(index)
                } else if rng.chance(1, 2) {
                    Letter::sigma(index)
                } else {
                    Letter::sigma_inv(index)
                }
            }
        });
    }
    Word::new(n, letters).expect("indices generated in range")
}

/// A random classical (pre-crossing-free) word.
pub fn random_classical_word(rng: &mut Rng, n: usize, max_len: usize) -> Word {
    let len = rng.below(max_len as u64 + 1) as usize;
    let mut letters = Vec::with_capacity(len);
    for _ in 0..len {
        let index = 1 + rng.below((n - 1) as u64) as usize;
        if rng.chance(1, 2) {
            letters.push(Letter::sigma(index));
        } else {
            letters.push(Letter::sigma_inv(index));
        }
    }
    Word::new(n, letters).expect("indices generated in range")
}
