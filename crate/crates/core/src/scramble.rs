//! Seeded random changes of basis.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::lie::LieAlgebra;
use crate::linalg::{rat, RatMatrix};

/// Entries of random basis changes are drawn from `-RANGE..=RANGE`.
const RANGE: i64 = 3;

/// Random invertible integer matrix, resampled until nonsingular.
pub fn random_invertible<R: Rng>(n: usize, rng: &mut R) -> RatMatrix {
    loop {
        let mut p = RatMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                p[(i, j)] = rat(rng.gen_range(-RANGE..=RANGE));
            }
        }
        if p.rank() == n {
            return p;
        }
    }
}

/// Deterministic per seed: same seed, same matrix.
pub fn seeded_invertible(n: usize, seed: u64) -> RatMatrix {
    random_invertible(n, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// `algebra` rewritten in a seeded random basis, together with the basis change used.
pub fn scramble(algebra: &LieAlgebra, seed: u64) -> (LieAlgebra, RatMatrix) {
    let p = seeded_invertible(algebra.dim(), seed);
    let scrambled = algebra
        .change_of_basis(&p)
        .expect("random_invertible returns a nonsingular matrix");
    (scrambled, p)
}
