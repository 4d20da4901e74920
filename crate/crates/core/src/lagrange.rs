//! Lagrange constants of quadratic irrationals, exactly, and the abelian
//! critical exponent of a Sturmian word, which equals the Lagrange constant
//! of its angle.
//!
//! For an eventually periodic expansion the limit superior of
//! `(m_i‖m_iα‖)⁻¹ = [a_{i+1}; a_{i+2}, …] + [0; a_i, …, a_1]` is attained
//! along residue classes of the period: the forward tail is purely periodic,
//! and the reversed head converges (per residue) to the purely periodic
//! expansion of the reversed period, the finite preperiod washing out. Both
//! limits are quadratic irrationals in one common field, so the maximum over
//! residues is decided exactly.
//!
//! Values here sit in the classical Lagrange spectrum, whose portion below 3
//! is the discrete set √5 < √8 < √221/5 < …; past Freiman's constant
//! (2221564096 + 283748√462)/491993569 ≈ 4.5278 the spectrum is a full ray.
//! Only √5, √8 and friends are ever computed; the constants above are
//! context, not code.

use num_bigint::BigInt;

use crate::exact::{periodic_value, ContinuedFraction, QuadraticIrrational, Rational};
use crate::{Error, Result};

/// A Lagrange constant with the period residue attaining it. Always at
/// least √5, and finite by construction: eventually periodic expansions
/// have bounded partial quotients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LagrangeValue {
    pub exact: QuadraticIrrational,
    pub witness_residue: usize,
}

/// Exact Lagrange constant `limsup (m‖mα‖)⁻¹` of the value of `cf`.
pub fn lagrange_constant(cf: &ContinuedFraction) -> LagrangeValue {
    let period = cf.period();
    let k = period.len();
    let mut best: Option<(QuadraticIrrational, usize)> = None;
    for j in 0..k {
        let forward: Vec<BigInt> = (0..k).map(|s| period[(j + 1 + s) % k].clone()).collect();
        let reversed: Vec<BigInt> = (0..k).map(|s| period[(j + k - s) % k].clone()).collect();
        let tail = periodic_value(&forward);
        let head = periodic_value(&reversed).inv();
        let sum = &tail + &head;
        if best.as_ref().is_none_or(|(b, _)| sum > *b) {
            best = Some((sum, j));
        }
    }
    let (exact, witness_residue) = best.expect("period is nonempty");
    LagrangeValue {
        exact,
        witness_residue,
    }
}

/// Rational value of the finite expansion `[d_0; d_1, …]`, folded exactly.
fn finite_value(digits: &[BigInt]) -> Rational {
    let mut acc = Rational::from_integer(digits.last().expect("nonempty").clone());
    for d in digits.iter().rev().skip(1) {
        acc = Rational::from_integer(d.clone()) + acc.recip();
    }
    acc
}

/// A certified rational lower bound on the Lagrange constant, monotone in
/// `depth` and converging to it.
///
/// Per period residue, the tail `[a_{i+1}; a_{i+2}, …]` and reversed head
/// `[0; a_i, …, a_1]` limits are truncated at an even convergent index, so
/// each truncation sits below its limit; the maximum over residues is then
/// at most the constant. Truncating the word's actual head digits instead
/// would not be sound: a large preperiod digit sitting at the end of the
/// reversed head can push a single term above the limit superior.
pub fn lagrange_lower_bound(cf: &ContinuedFraction, depth: usize) -> Rational {
    assert!(depth >= 2, "depth must be at least 2");
    let period = cf.period();
    let k = period.len();
    let tail_count = if depth.is_multiple_of(2) {
        depth - 1
    } else {
        depth
    };
    let head_count = if depth.is_multiple_of(2) {
        depth
    } else {
        depth - 1
    };
    let mut best: Option<Rational> = None;
    for j in 0..k {
        let tail_digits: Vec<BigInt> = (0..tail_count)
            .map(|s| period[(j + 1 + s) % k].clone())
            .collect();
        let head_digits: Vec<BigInt> = (0..head_count)
            .map(|s| period[(j + k - (s % k)) % k].clone())
            .collect();
        let term = finite_value(&tail_digits) + finite_value(&head_digits).recip();
        if best.as_ref().is_none_or(|b| term > *b) {
            best = Some(term);
        }
    }
    best.expect("period is nonempty")
}

/// Whether two expansions have ultimately coinciding digit tails.
pub fn are_equivalent(a: &ContinuedFraction, b: &ContinuedFraction) -> bool {
    a.is_equivalent_to(b)
}

/// The abelian critical exponent of the Sturmian words of angle `alpha`:
/// `limsup k_m/m = limsup k'_m/m`, equal to the Lagrange constant of the
/// angle.
pub fn abelian_critical_exponent(alpha: &QuadraticIrrational) -> Result<LagrangeValue> {
    if alpha.sign() != std::cmp::Ordering::Greater || *alpha >= QuadraticIrrational::one() {
        return Err(Error::AngleOutOfRange);
    }
    let cf = alpha
        .continued_fraction()
        .map_err(|_| Error::AngleOutOfRange)?;
    Ok(lagrange_constant(&cf))
}

/// √5, the floor of the Lagrange spectrum.
pub fn sqrt5() -> QuadraticIrrational {
    QuadraticIrrational::new(0, 1, 1, 5).expect("static value")
}

impl LagrangeValue {
    /// Whether the constant sits at the spectrum's minimum.
    pub fn is_minimal(&self) -> bool {
        self.exact == sqrt5()
    }
}
