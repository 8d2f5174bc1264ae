#![allow(dead_code)]

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use torsor_core::{FiniteAbelianGroup, Rational, WeightedGroup};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x7052_5e00 + seed)
}

/// Every finite abelian group of order at most `n`, one per isomorphism
/// class, built from invariant-factor chains `n_1 | n_2 | ... | n_k`.
pub fn groups_up_to(n: u64) -> Vec<FiniteAbelianGroup> {
    fn extend(chain: &mut Vec<u64>, order: u64, n: u64, out: &mut Vec<Vec<u64>>) {
        out.push(chain.clone());
        let last = chain.last().copied().unwrap_or(1);
        let mut m = if chain.is_empty() { 2 } else { last };
        while order * m <= n {
            if m % last == 0 {
                chain.push(m);
                extend(chain, order * m, n, out);
                chain.pop();
            }
            m += 1;
        }
    }
    let mut chains = Vec::new();
    extend(&mut Vec::new(), 1, n, &mut chains);
    chains.iter().map(|c| FiniteAbelianGroup::new(c).unwrap()).collect()
}

pub fn random_rational<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    let num = rng.gen_range(-bound..=bound);
    let den = rng.gen_range(1..=4);
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn random_weighting<R: Rng>(rng: &mut R, group: FiniteAbelianGroup, bound: i64) -> WeightedGroup {
    let weights = (0..group.order()).map(|_| random_rational(rng, bound)).collect();
    WeightedGroup::new(group, weights).unwrap()
}
