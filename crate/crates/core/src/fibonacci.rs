//! Closed forms special to the Fibonacci word `f = s_{φ−1,φ−1}`: maximum
//! abelian-power exponents at Fibonacci periods, longest prefix repetitions,
//! and minimum abelian periods of the finite Fibonacci words and of factors.
//!
//! Indexing follows `F_0 = F_1 = 1`, `F_{j+1} = F_j + F_{j−1}`, matching the
//! word lengths of `f_0 = b`, `f_1 = a`, `f_j = f_{j−1} f_{j−2}`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::exact::QuadraticIrrational;
use crate::oracle;
use crate::scan;
use crate::sturmian::{partition, Convention};
use crate::words::{word_string, Letter};
use crate::{Error, Result};

/// `F_j` with `F_0 = F_1 = 1`.
pub fn fib(j: usize) -> BigInt {
    let (mut a, mut b) = (BigInt::from(1), BigInt::from(1));
    for _ in 0..j {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

pub fn fib_u64(j: usize) -> u64 {
    fib(j).to_u64().expect("Fibonacci number fits u64")
}

pub fn is_fibonacci(n: &BigInt) -> bool {
    let (mut a, mut b) = (BigInt::from(1), BigInt::from(1));
    while &a < n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a == *n
}

/// The golden-ratio angle `φ − 1 = (−1 + √5)/2`.
pub fn fibonacci_angle() -> QuadraticIrrational {
    QuadraticIrrational::new(-1, 1, 2, 5).expect("static value")
}

/// The finite Fibonacci word `f_j`, of length `F_j`.
pub fn fib_word(j: usize) -> Vec<Letter> {
    match j {
        0 => vec![Letter::B],
        1 => vec![Letter::A],
        _ => {
            let (mut prev, mut cur) = (vec![Letter::B], vec![Letter::A]);
            for _ in 2..=j {
                let mut next = cur.clone();
                next.extend_from_slice(&prev);
                prev = std::mem::replace(&mut cur, next);
            }
            cur
        }
    }
}

/// Maximum exponent of an abelian power of period `F_j` in `f`:
/// `⌊φF_j + F_{j−1}⌋ = F_{j+1} + F_{j−1}` minus one when `j` is odd.
pub fn max_exponent_at_fib_period(j: usize) -> BigInt {
    assert!(j >= 1);
    let adjust = BigInt::from((j % 2 == 1) as i64);
    fib(j + 1) + fib(j - 1) - adjust
}

/// The longest abelian power of period `F_j` starting before position `F_j`
/// occurs at position `F_j − 1`, with exponent one less than the overall
/// maximum.
pub fn longest_power_before(j: usize) -> (BigInt, BigInt) {
    assert!(j > 1);
    (fib(j) - 1, max_exponent_at_fib_period(j) - 1)
}

/// Length of the longest prefix of `f` that is an abelian repetition of
/// period `F_j`: `F_j(F_{j+1} + F_{j−1} + 1) − 2` for even `j`, and without
/// the `+1` for odd `j`.
pub fn longest_prefix_repetition_len(j: usize) -> BigInt {
    assert!(j > 1);
    let bump = BigInt::from(j.is_multiple_of(2) as i64);
    fib(j) * (fib(j + 1) + fib(j - 1) + bump) - 2
}

/// Minimum abelian period of the finite Fibonacci word `f_j`, `j ≥ 3`,
/// returned as `(n, F_n)`: the Fibonacci index is `⌊j/2⌋`, bumped by one
/// when `j ≡ 3 (mod 4)`.
pub fn min_abelian_period_fib(j: usize) -> Result<(usize, BigInt)> {
    if j < 3 {
        return Err(Error::IndexOutOfRange(
            "closed form starts at the third Fibonacci word".into(),
        ));
    }
    let n = j / 2 + (j % 4 == 3) as usize;
    Ok((n, fib(n)))
}

/// `F_j(F_{j+1} + F_{j−1}) = F_{2j+1}`.
pub fn fib_product_identity(j: usize) -> bool {
    assert!(j >= 1);
    fib(j) * (fib(j + 1) + fib(j - 1)) == fib(2 * j + 1)
}

/// Outcome of scanning every distinct factor of `f` up to a length bound:
/// the distribution of minimum abelian periods and any non-Fibonacci ones.
#[derive(Debug, Clone)]
pub struct FactorPeriodReport {
    pub max_len: u64,
    pub histogram: BTreeMap<u64, u64>,
    pub violations: Vec<(String, u64)>,
}

impl FactorPeriodReport {
    pub fn all_fibonacci(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn factors_checked(&self) -> u64 {
        self.histogram.values().sum()
    }
}

/// Computes the minimum abelian period of every distinct factor of `f` of
/// length at most `max_len`, harvesting the `ℓ + 1` factors of each length
/// from the interval bijection rather than by sliding windows.
pub fn verify_factor_periods(max_len: u64) -> Result<FactorPeriodReport> {
    let alpha = fibonacci_angle();
    let mut histogram = BTreeMap::new();
    let mut violations = Vec::new();
    for len in 1..=max_len {
        let part = partition(&alpha, len, Convention::ZeroInB)?;
        let factors: Vec<_> = part.intervals.iter().map(|iv| iv.factor.clone()).collect();
        let periods = scan::map_collect(0..factors.len(), |i| {
            oracle::min_abelian_period(&factors[i]).expect("factors are nonempty")
        });
        for (factor, period) in factors.iter().zip(&periods) {
            *histogram.entry(*period).or_insert(0) += 1;
            if !is_fibonacci(&BigInt::from(*period)) {
                violations.push((word_string(factor), *period));
            }
        }
    }
    Ok(FactorPeriodReport {
        max_len,
        histogram,
        violations,
    })
}
