//! Exact arithmetic over real quadratic fields and eventually periodic
//! continued fractions.
//!
//! Every number the rest of the crate manipulates lives here: rationals,
//! values `(a + b√d)/c` of a real quadratic field, and continued fractions
//! `[a₀; pre | period]`. All comparisons are exact sign computations over
//! big integers.

mod cf;
mod quadratic;

pub use cf::{smallest_better, ContinuedFraction, Convergent};
pub use quadratic::QuadraticIrrational;

pub(crate) use cf::periodic_value;

/// Arbitrary-precision rational, reduced with positive denominator.
pub type Rational = num_rational::BigRational;

#[cfg(test)]
pub(crate) fn rat(n: i64) -> Rational {
    Rational::from_integer(num_bigint::BigInt::from(n))
}

#[cfg(test)]
pub(crate) fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(num_bigint::BigInt::from(n), num_bigint::BigInt::from(d))
}
