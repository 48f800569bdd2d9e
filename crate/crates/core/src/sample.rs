//! Seeded random transitive subgroups of small symmetric groups.

use rand::seq::SliceRandom;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::perm::{PermGroup, Permutation};

pub const SAMPLE_MIN_DEGREE: usize = 4;
pub const SAMPLE_MAX_DEGREE: usize = 8;
/// Draws allowed per accepted group before giving up.
const ATTEMPTS_PER_GROUP: usize = 1000;

#[derive(Clone, Debug)]
pub struct SampledGroup {
    pub name: String,
    pub group: PermGroup,
}

fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    let mut images: Vec<u32> = (0..n as u32).collect();
    images.shuffle(rng);
    Permutation::from_images(images).expect("a shuffle is a bijection")
}

/// `count` transitive groups `<x, y>` with `x, y` uniform in `Sym(n)` and
/// `n` uniform in `4..=8`; intransitive draws are discarded.
pub fn sample_transitive(count: usize, seed: u64) -> Result<Vec<SampledGroup>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut draws = 0;
    while out.len() < count && draws < count * ATTEMPTS_PER_GROUP {
        draws += 1;
        let n = rng.random_range(SAMPLE_MIN_DEGREE..=SAMPLE_MAX_DEGREE);
        let x = random_permutation(&mut rng, n);
        let y = random_permutation(&mut rng, n);
        let group = PermGroup::generate(n, vec![x, y])?;
        if group.is_transitive() {
            out.push(SampledGroup {
                name: format!("sample-{seed}-{draws}"),
                group,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_transitive() {
        let a = sample_transitive(20, 7).unwrap();
        let b = sample_transitive(20, 7).unwrap();
        assert_eq!(a.len(), 20);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.name, y.name);
            assert_eq!(x.group.generators(), y.group.generators());
            assert!(x.group.is_transitive());
            assert!((SAMPLE_MIN_DEGREE..=SAMPLE_MAX_DEGREE).contains(&x.group.degree()));
        }
        let c = sample_transitive(20, 8).unwrap();
        assert!(a.iter().zip(&c).any(|(x, y)| x.group.generators() != y.group.generators()));
    }
}
