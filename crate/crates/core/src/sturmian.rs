//! Sturmian words as codings of rotations, and the bijection between factors
//! of length `m` and the `m + 1` torus subintervals cut by the points `{−iα}`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::exact::{QuadraticIrrational, Rational};
use crate::oracle::ParikhVector;
use crate::words::Letter;
use crate::{Error, Result};

/// Which letter codes the point 0: `b` when `I_b = [0, 1−α)`, `a` when
/// `I_b = (0, 1−α]`. The two choices change the generated word in at most
/// two adjacent positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Convention {
    ZeroInB,
    ZeroInA,
}

impl Convention {
    pub fn zero_in_b(self) -> bool {
        matches!(self, Convention::ZeroInB)
    }
}

/// Parikh-vector class of a factor of length `m`: heavy factors hold
/// `⌈mα⌉` letters `a`, light ones `⌊mα⌋`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Weight {
    Heavy,
    Light,
}

/// A point of the torus `[0, 1)` of the form `u + v·α mod 1`, keeping the
/// rational coordinates `(u, v)` alongside the exact value. The coordinates
/// decide membership in the exceptional orbit `{−rmα}` exactly: the point
/// equals `{−rmα}` iff `v = −rm` and `u` is an integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusPoint {
    pub u: Rational,
    pub v: Rational,
    pub value: QuadraticIrrational,
}

/// A Sturmian word `s_{α,ρ}`: angle `α`, initial point `ρ = u + v·α`
/// reduced into `[0, 1)`, and an endpoint convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmianSpec {
    alpha: QuadraticIrrational,
    boundary: QuadraticIrrational, // {−α} = 1 − α, the split between I_b and I_a
    u: Rational,
    v: Rational,
    convention: Convention,
}

impl SturmianSpec {
    /// Word of angle `alpha` and initial point `u + v·alpha` (reduced mod 1).
    pub fn new(
        alpha: QuadraticIrrational,
        u: Rational,
        v: Rational,
        convention: Convention,
    ) -> Result<Self> {
        if alpha.is_rational()
            || alpha.sign() != Ordering::Greater
            || alpha >= QuadraticIrrational::one()
        {
            return Err(Error::AngleOutOfRange);
        }
        let raw = &QuadraticIrrational::from_rational(&u) + &alpha.scale(&v);
        let shift = raw.floor();
        let u = u - Rational::from_integer(shift);
        let boundary = &QuadraticIrrational::one() - &alpha;
        Ok(SturmianSpec {
            alpha,
            boundary,
            u,
            v,
            convention,
        })
    }

    /// The characteristic word of the angle: `ρ = α`.
    pub fn characteristic(alpha: QuadraticIrrational, convention: Convention) -> Result<Self> {
        Self::new(
            alpha,
            Rational::from_integer(BigInt::zero()),
            Rational::from_integer(BigInt::from(1)),
            convention,
        )
    }

    /// The word with initial point `ρ = 0`.
    pub fn from_zero(alpha: QuadraticIrrational, convention: Convention) -> Result<Self> {
        Self::new(
            alpha,
            Rational::from_integer(BigInt::zero()),
            Rational::from_integer(BigInt::zero()),
            convention,
        )
    }

    pub fn alpha(&self) -> &QuadraticIrrational {
        &self.alpha
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn initial_point(&self) -> TorusPoint {
        self.point(0)
    }

    /// The orbit point `{ρ + nα}`.
    pub fn point(&self, n: u64) -> TorusPoint {
        let v = &self.v + Rational::from_integer(BigInt::from(n));
        let raw = &QuadraticIrrational::from_rational(&self.u) + &self.alpha.scale(&v);
        let shift = raw.floor();
        let value = &raw - &QuadraticIrrational::from_integer(shift.clone());
        TorusPoint {
            u: &self.u - Rational::from_integer(shift),
            v,
            value,
        }
    }

    /// If `{ρ + nα} = {−rmα}` for some integer `r ≥ 0`, returns that `r`.
    pub fn exceptional_r(&self, n: u64, m: u64) -> Option<u64> {
        if !self.u.is_integer() {
            return None;
        }
        let vn = &self.v + Rational::from_integer(BigInt::from(n));
        let r = -vn / Rational::from_integer(BigInt::from(m));
        (r.is_integer() && !r.numer().is_negative())
            .then(|| r.to_integer().to_u64().expect("orbit index fits u64"))
    }

    pub fn letter_at(&self, n: u64) -> Letter {
        decode(&self.point(n).value, &self.boundary, self.convention)
    }

    /// The factor `a_n ⋯ a_{n+m−1}`, decoded from the single point
    /// `{ρ + nα}` against the rotated intervals `I_b^{−i}`.
    pub fn factor(&self, n: u64, m: u64) -> Vec<Letter> {
        decode_factor(
            self.point(n).value,
            &self.alpha,
            &self.boundary,
            self.convention,
            m,
        )
    }

    /// Letters from position `start` on, generated incrementally.
    pub fn letters(&self, start: u64) -> Letters {
        Letters {
            alpha: self.alpha.clone(),
            boundary: self.boundary.clone(),
            point: self.point(start).value,
            convention: self.convention,
        }
    }

    pub fn prefix(&self, len: usize) -> Vec<Letter> {
        self.letters(0).take(len).collect()
    }

    /// Heavy/light class of the length-`m` factor at position `n`: decided by
    /// comparing `{ρ + nα}` with `{−mα}`, falling back to an actual decode
    /// when the point sits on the split itself or at 0, where the endpoint
    /// convention owns the answer (under `0 ∉ I_b` the point 0 codes as 1).
    pub fn classify_position(&self, n: u64, m: u64) -> Weight {
        let p = self.point(n).value;
        let threshold = neg_multiple_frac(&self.alpha, m);
        if p.is_zero() || p == threshold {
            let parikh = ParikhVector::of(&self.factor(n, m));
            let heavy_a = self
                .alpha
                .scale(&Rational::from_integer(BigInt::from(m)))
                .floor()
                + BigInt::from(1);
            return if BigInt::from(parikh.count_a) == heavy_a {
                Weight::Heavy
            } else {
                Weight::Light
            };
        }
        if p > threshold {
            Weight::Heavy
        } else {
            Weight::Light
        }
    }
}

/// `{−mα}` for `m ≥ 1`, i.e. `1 − {mα}`.
pub(crate) fn neg_multiple_frac(alpha: &QuadraticIrrational, m: u64) -> QuadraticIrrational {
    &QuadraticIrrational::one() - &alpha.scale(&Rational::from_integer(BigInt::from(m))).frac()
}

fn decode(point: &QuadraticIrrational, boundary: &QuadraticIrrational, c: Convention) -> Letter {
    match c {
        Convention::ZeroInB => {
            if point < boundary {
                Letter::B
            } else {
                Letter::A
            }
        }
        Convention::ZeroInA => {
            if point.is_zero() || point > boundary {
                Letter::A
            } else {
                Letter::B
            }
        }
    }
}

fn decode_factor(
    start: QuadraticIrrational,
    alpha: &QuadraticIrrational,
    boundary: &QuadraticIrrational,
    convention: Convention,
    m: u64,
) -> Vec<Letter> {
    let mut out = Vec::with_capacity(m as usize);
    let mut point = start;
    let one = QuadraticIrrational::one();
    for _ in 0..m {
        out.push(decode(&point, boundary, convention));
        point = &point + alpha;
        if point >= one {
            point = &point - &one;
        }
    }
    out
}

/// Iterator over the letters of a Sturmian word; one exact field addition
/// and one comparison per letter.
pub struct Letters {
    alpha: QuadraticIrrational,
    boundary: QuadraticIrrational,
    point: QuadraticIrrational,
    convention: Convention,
}

impl Iterator for Letters {
    type Item = Letter;

    fn next(&mut self) -> Option<Letter> {
        let letter = decode(&self.point, &self.boundary, self.convention);
        self.point = &self.point + &self.alpha;
        if self.point >= QuadraticIrrational::one() {
            self.point = &self.point - &QuadraticIrrational::one();
        }
        Some(letter)
    }
}

/// One subinterval of the partition, with the factor it is in bijection with.
#[derive(Debug, Clone)]
pub struct Interval {
    pub index: usize,
    pub left: QuadraticIrrational,
    pub right: QuadraticIrrational,
    pub factor: Vec<Letter>,
    pub parikh: ParikhVector,
    pub heavy: bool,
}

/// The partition of `[0, 1)` by the points `0, {−α}, …, {−mα}, 1` into
/// `m + 1` subintervals, each associated with one factor of length `m`.
/// Factors are strictly lexicographically decreasing in the interval index.
#[derive(Debug, Clone)]
pub struct IntervalPartition {
    pub m: u64,
    pub convention: Convention,
    pub boundaries: Vec<QuadraticIrrational>,
    pub intervals: Vec<Interval>,
    /// Largest interval length, the `l_m` of the guaranteed-exponent bound.
    pub max_len: QuadraticIrrational,
}

impl IntervalPartition {
    pub fn factors(&self) -> impl Iterator<Item = &[Letter]> {
        self.intervals.iter().map(|iv| iv.factor.as_slice())
    }

    /// Distinct interval lengths, sorted ascending.
    pub fn distinct_lengths(&self) -> Vec<QuadraticIrrational> {
        let mut lengths: Vec<_> = self
            .intervals
            .iter()
            .map(|iv| &iv.right - &iv.left)
            .collect();
        lengths.sort();
        lengths.dedup();
        lengths
    }
}

/// Builds the factor/interval bijection for factors of length `m ≥ 1`.
///
/// Each interval's factor is decoded from its included endpoint: the left one
/// under `ZeroInB` (intervals `[·,·)`), the right one under `ZeroInA`
/// (intervals `(·,·]`, where the endpoint 1 is the torus point 0).
pub fn partition(
    alpha: &QuadraticIrrational,
    m: u64,
    convention: Convention,
) -> Result<IntervalPartition> {
    if alpha.is_rational()
        || alpha.sign() != Ordering::Greater
        || *alpha >= QuadraticIrrational::one()
    {
        return Err(Error::AngleOutOfRange);
    }
    if m == 0 {
        return Err(Error::IndexOutOfRange("partition needs m >= 1".into()));
    }
    let one = QuadraticIrrational::one();
    let boundary = &one - alpha;

    let mut points = Vec::with_capacity(m as usize + 2);
    points.push(QuadraticIrrational::zero());
    let mut t = boundary.clone();
    for _ in 1..=m {
        points.push(t.clone());
        t = &t - alpha;
        if t.sign() == Ordering::Less {
            t = &t + &one;
        }
    }
    let threshold = points[m as usize].clone(); // {−mα}
    points.push(one.clone());
    points.sort();
    debug_assert!(points.windows(2).all(|w| w[0] < w[1]));

    let mut intervals = Vec::with_capacity(m as usize + 1);
    let mut max_len = QuadraticIrrational::zero();
    for k in 0..=m as usize {
        let left = points[k].clone();
        let right = points[k + 1].clone();
        let decode_from = match convention {
            Convention::ZeroInB => left.clone(),
            Convention::ZeroInA => {
                if right == one {
                    QuadraticIrrational::zero()
                } else {
                    right.clone()
                }
            }
        };
        let factor = decode_factor(decode_from, alpha, &boundary, convention, m);
        let parikh = ParikhVector::of(&factor);
        let heavy = left >= threshold;
        let len = &right - &left;
        if len > max_len {
            max_len = len;
        }
        intervals.push(Interval {
            index: k,
            left,
            right,
            factor,
            parikh,
            heavy,
        });
    }
    Ok(IntervalPartition {
        m,
        convention,
        boundaries: points,
        intervals,
        max_len,
    })
}
