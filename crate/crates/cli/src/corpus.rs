//! Deterministic corpora of hyperbolic polynomials.
//!
//! Generated polynomials are monic products of linear factors `(x - r)` with
//! rational roots, so they are hyperbolic by construction.

use hyperop_core::rational::rat;
use hyperop_core::{Poly, Rational};
use serde::{Deserialize, Serialize};

/// xorshift64* with the shift triple (12, 25, 27) and output multiplier
/// `0x2545F4914F6CDD1D`. The seed is XORed with `0x9E3779B97F4A7C15` so that a
/// zero seed still yields a nonzero state.
#[derive(Debug, Clone)]
pub struct Xorshift64Star {
    state: u64,
}

const SEED_MIX: u64 = 0x9E37_79B9_7F4A_7C15;
const MULTIPLIER: u64 = 0x2545_F491_4F6C_DD1D;

impl Xorshift64Star {
    pub fn new(seed: u64) -> Self {
        let state = match seed ^ SEED_MIX {
            0 => SEED_MIX,
            s => s,
        };
        Xorshift64Star { state }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.state = x;
        x.wrapping_mul(MULTIPLIER)
    }

    /// Uniform-ish in `0..n` by reduction modulo `n`.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        self.next_u64() % n
    }

    /// Uniform-ish in `lo..=hi`.
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }

    /// `n/d` with `n` in `-num_bound..=num_bound` and `d` in `1..=max_den`.
    pub fn rational(&mut self, num_bound: i64, max_den: i64) -> Rational {
        let n = self.range(-num_bound, num_bound);
        let d = self.range(1, max_den);
        rat(n, d)
    }

    pub fn nonzero_rational(&mut self, num_bound: i64, max_den: i64) -> Rational {
        loop {
            let r = self.rational(num_bound, max_den);
            if r != rat(0, 1) {
                return r;
            }
        }
    }
}

/// Largest root denominator used by the generator.
pub const ROOT_MAX_DEN: i64 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusGenerator {
    pub seed: u64,
    pub count: usize,
    pub max_degree: usize,
    /// Root numerators lie in `-root_pool..=root_pool`.
    #[serde(default = "default_root_pool")]
    pub root_pool: i64,
}

fn default_root_pool() -> i64 {
    4
}

impl CorpusGenerator {
    pub fn new(seed: u64, count: usize, max_degree: usize) -> Self {
        CorpusGenerator { seed, count, max_degree, root_pool: default_root_pool() }
    }

    /// Degrees are drawn from `1..=max_degree`; each root is
    /// `n / d` with `n` in `-root_pool..=root_pool`, `d` in `1..=4`.
    pub fn generate(&self) -> Vec<Poly> {
        let mut rng = Xorshift64Star::new(self.seed);
        let max_degree = self.max_degree.max(1) as u64;
        (0..self.count)
            .map(|_| {
                let degree = 1 + rng.below(max_degree) as usize;
                let roots: Vec<Rational> =
                    (0..degree).map(|_| rng.rational(self.root_pool, ROOT_MAX_DEN)).collect();
                Poly::from_roots(&roots)
            })
            .collect()
    }
}

/// A corpus file: either explicit polynomials or generator parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CorpusSpec {
    Explicit(Vec<Poly>),
    Generator(CorpusGenerator),
}

impl CorpusSpec {
    pub fn polys(&self) -> Vec<Poly> {
        match self {
            CorpusSpec::Explicit(v) => v.clone(),
            CorpusSpec::Generator(g) => g.generate(),
        }
    }
}
