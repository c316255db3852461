//! Seeded pseudo-random words. A seed fixes every sample.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use surfcover_core::{Letter, Word};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Freely reduced word of length exactly `len` over `rank` generators.
pub fn reduced_word(rng: &mut impl Rng, rank: usize, len: usize) -> Word {
    let mut v: Vec<Letter> = Vec::with_capacity(len);
    while v.len() < len {
        let l = Letter::from_index(rng.random_range(0..2 * rank));
        if v.last() != Some(&l.inverse()) {
            v.push(l);
        }
    }
    Word::from_letters(v)
}

/// Cyclically reduced word of length exactly `len >= 1`.
pub fn cyclic_word(rng: &mut impl Rng, rank: usize, len: usize) -> Word {
    loop {
        let w = reduced_word(rng, rank, len);
        let l = w.letters();
        if len == 1 || l[0] != l[len - 1].inverse() {
            return w;
        }
    }
}

/// Cyclically reduced word with length uniform in `1..=maxlen`.
pub fn cyclic_word_upto(rng: &mut impl Rng, rank: usize, maxlen: usize) -> Word {
    let len = rng.random_range(1..=maxlen);
    cyclic_word(rng, rank, len)
}
