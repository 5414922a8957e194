//! Fixtures shared by the benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use semiorder_core::clifford::Letter;
use semiorder_core::poset::FinitePoset;
use semiorder_core::Rational;

/// A random order on `n` points, each forward pair related with probability `p`.
pub fn random_poset(n: usize, p: f64, seed: u64) -> FinitePoset {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    FinitePoset::from_edges(n, &edges).unwrap()
}

/// The semiorder `x < y iff key(y) - key(x) >= 3` on `n` random integer keys.
pub fn random_semiorder(n: usize, seed: u64) -> FinitePoset {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let keys: Vec<i64> = (0..n).map(|_| rng.gen_range(0..4 * n as i64)).collect();
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| keys[j] - keys[i] >= 3)
        .collect();
    FinitePoset::from_edges(n, &edges).unwrap()
}

/// A word of `len` letters with dyadic alphas, mostly positive powers.
pub fn random_word(len: usize, seed: u64) -> Vec<Letter> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..len)
        .map(|_| {
            let alpha = Rational::new(
                rng.gen_range(-32i64..=32).into(),
                (1i64 << rng.gen_range(0..4)).into(),
            );
            let power = if rng.gen_bool(0.8) { 1 } else { -1 };
            Letter::new(alpha, power)
        })
        .collect()
}
