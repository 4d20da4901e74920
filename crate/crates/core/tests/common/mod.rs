//! Shared helpers for the integration suites.

use num_bigint::BigInt;
use sturmian_abelian::exact::{QuadraticIrrational, Rational};
use sturmian_abelian::sturmian::{Convention, SturmianSpec};

/// Deterministic xorshift64*, so randomized sweeps reproduce exactly.
pub struct TestRng(u64);

impl TestRng {
    pub fn new(seed: u64) -> Self {
        TestRng(seed.max(1))
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545_f491_4f6c_dd1d)
    }

    /// Uniform in `[0, bound)`.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    /// Uniform in `[lo, hi]`.
    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.below((hi - lo + 1) as u64) as i64)
    }
}

pub fn fib_angle() -> QuadraticIrrational {
    QuadraticIrrational::new(-1, 1, 2, 5).unwrap()
}

pub fn sqrt3_angle() -> QuadraticIrrational {
    QuadraticIrrational::new(-1, 1, 2, 3).unwrap()
}

/// `frac(√2) = √2 − 1`.
pub fn sqrt2_angle() -> QuadraticIrrational {
    QuadraticIrrational::new(-1, 1, 1, 2).unwrap()
}

pub fn fib_word_spec() -> SturmianSpec {
    SturmianSpec::characteristic(fib_angle(), Convention::ZeroInB).unwrap()
}

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn norm(alpha: &QuadraticIrrational, m: u64) -> QuadraticIrrational {
    alpha
        .scale(&Rational::from_integer(BigInt::from(m)))
        .dist_nearest_int()
}
