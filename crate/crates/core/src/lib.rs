//! Exact computations around level-d congruence subgroups of Sp(2g; Z),
//! the level-2 mapping class group abelianization as a Z_8 group-ring
//! quotient, Brown invariants of Z_4 quadratic enhancements and the mod-d
//! Johnson homomorphism.

pub mod b3;
pub mod beta;
pub mod brown;
pub mod error;
pub mod group_ring;
pub mod homology;
pub mod magnus;
pub mod reproduce;
pub mod smith;
pub mod symplectic;

pub use error::{Error, Result};
pub use smith::{InvariantFactors, PresentationMatrix};

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Deterministic RNG used by every sampled check.
pub fn rng(seed: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}
