//! Seeded random instances for property checks and `--seed`.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::functional::{CanonicalTriple, MomentFunctional};
use crate::series::{Coeff, Rational};

/// Small rationals `p/q` with `|p| ≤ 6`, `1 ≤ q ≤ 4`, reproducible from a seed.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rational(&mut self) -> Rational {
        let p: i64 = self.rng.random_range(-6..=6);
        let q: i64 = self.rng.random_range(1..=4);
        Rational::new(BigInt::from(p), BigInt::from(q))
    }

    pub fn nonzero(&mut self) -> Rational {
        loop {
            let r = self.rational();
            if !r.is_zero() {
                return r;
            }
        }
    }

    /// Strictly positive, for parameters such as `p`.
    pub fn positive(&mut self) -> Rational {
        let r = self.nonzero();
        if r < Rational::zero() {
            -r
        } else {
            r
        }
    }

    /// Arbitrary moments `m_1..m_N`.
    pub fn functional(&mut self, order: usize) -> MomentFunctional<Rational> {
        MomentFunctional::new((0..order).map(|_| self.rational()).collect())
    }

    /// A triple with `γ ≠ 0` and random `ρ`.
    pub fn triple(&mut self, order: usize) -> CanonicalTriple<Rational> {
        CanonicalTriple { beta: self.rational(), gamma: self.nonzero(), rho: Some(self.functional(order)) }
    }

    /// Like [`Sampler::triple`], but `γ = 0` with probability one in four.
    pub fn triple_any(&mut self, order: usize) -> CanonicalTriple<Rational> {
        if self.rng.random_range(0..4) == 0 {
            CanonicalTriple::drift(self.rational())
        } else {
            self.triple(order)
        }
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.random_range(0..n)
    }
}
