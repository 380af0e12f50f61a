use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::rational::rat;
use crate::poly::Rational;

/// Generic parameter values are drawn from this integer range.
pub const SAMPLE_RANGE: RangeInclusive<i64> = 1009..=9973;

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Per-task seed, independent of scheduling.
pub fn derive_seed(global: u64, chart: usize, point: usize) -> u64 {
    splitmix64(global ^ splitmix64((chart as u64) << 32 ^ splitmix64(point as u64)))
}

/// Deterministic source of generic parameter values.
pub struct GenericSampler {
    rng: ChaCha8Rng,
    used: BTreeSet<Rational>,
}

impl GenericSampler {
    pub fn new(seed: u64) -> Self {
        GenericSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            used: BTreeSet::new(),
        }
    }

    /// A fresh value outside `avoid` and different from every earlier draw.
    pub fn draw(&mut self, avoid: &BTreeSet<Rational>) -> Rational {
        loop {
            let v = rat(self.rng.gen_range(SAMPLE_RANGE));
            if !avoid.contains(&v) && self.used.insert(v.clone()) {
                return v;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn draws_are_deterministic_and_distinct() {
        let mut a = GenericSampler::new(7);
        let mut b = GenericSampler::new(7);
        let avoid = BTreeSet::new();
        let xs: Vec<_> = (0..20).map(|_| a.draw(&avoid)).collect();
        let ys: Vec<_> = (0..20).map(|_| b.draw(&avoid)).collect();
        assert_eq!(xs, ys);
        let set: BTreeSet<_> = xs.iter().cloned().collect();
        assert_eq!(set.len(), 20);
        for x in &xs {
            assert!(*x >= rat(1009) && *x <= rat(9973));
        }
    }

    #[test]
    fn avoids_requested_values() {
        let avoid: BTreeSet<Rational> = SAMPLE_RANGE.filter(|v| v % 2 == 0).map(rat).collect();
        let mut s = GenericSampler::new(1);
        for _ in 0..50 {
            assert!(!avoid.contains(&s.draw(&avoid)));
        }
    }

    #[test]
    fn seeds_differ_per_task() {
        assert_ne!(derive_seed(1, 0, 0), derive_seed(1, 0, 1));
        assert_ne!(derive_seed(1, 0, 1), derive_seed(1, 1, 0));
        assert_eq!(derive_seed(5, 2, 3), derive_seed(5, 2, 3));
    }
}
