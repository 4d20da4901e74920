//! Values of real quadratic fields in the canonical form `(a + b·√d)/c`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::Rational;
use crate::{Error, Result};

/// An element `(a + b·√d)/c` of a real quadratic field, in canonical form:
///
/// * `c > 0` and `gcd(a, b, c) = 1`;
/// * `d` squarefree; `d = 1` exactly when `b = 0` (a rational value).
///
/// Canonical form makes equality structural: two values are equal as real
/// numbers if and only if their four components coincide. Ordering is the
/// order of the real line, decided exactly even across different fields.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticIrrational {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

/// Splits `d` into `s²·d'` with `d'` squarefree, returning `(s, d')`.
///
/// Square factors are extracted by trial division; a remaining perfect square
/// is caught by an integer square root. Complete for every `d` whose square
/// factors have a prime divisor below 10⁶, which covers all realistic inputs.
fn extract_square(d: &BigInt) -> (BigInt, BigInt) {
    let mut s = BigInt::from(1);
    let mut rem = d.clone();
    let mut p = BigInt::from(2);
    let limit = BigInt::from(1_000_000);
    while &p * &p <= rem && p <= limit {
        let p2 = &p * &p;
        while (&rem % &p2).is_zero() {
            rem /= &p2;
            s *= &p;
        }
        p += 1;
    }
    let root = rem.sqrt();
    if &root * &root == rem {
        s *= &root;
        rem = BigInt::from(1);
    }
    (s, rem)
}

impl QuadraticIrrational {
    /// Builds `(a + b·√d)/c`, reducing to canonical form.
    ///
    /// Fails if `c = 0`, or if `b ≠ 0` with `d ≤ 0`.
    ///
    /// ```
    /// use sturmian_abelian::exact::QuadraticIrrational;
    ///
    /// // √8/2 and √2 normalize to the same element
    /// let x = QuadraticIrrational::new(0, 1, 2, 8)?;
    /// assert_eq!(x, QuadraticIrrational::new(0, 1, 1, 2)?);
    /// assert_eq!(x.to_decimal(4), "1.4142");
    /// # Ok::<(), sturmian_abelian::Error>(())
    /// ```
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self> {
        let (a, b, c, d) = (a.into(), b.into(), c.into(), d.into());
        if c.is_zero() {
            return Err(Error::InvalidQuadratic("zero denominator".into()));
        }
        if !b.is_zero() && d.sign() != num_bigint::Sign::Plus {
            return Err(Error::InvalidQuadratic(
                "radicand must be positive for an irrational value".into(),
            ));
        }
        Ok(Self::canon(a, b, c, d))
    }

    /// Canonicalizes components known to be a valid field element.
    fn canon(mut a: BigInt, mut b: BigInt, mut c: BigInt, mut d: BigInt) -> Self {
        debug_assert!(!c.is_zero());
        if b.is_zero() {
            d = BigInt::from(1);
        } else {
            let (s, rem) = extract_square(&d);
            b *= s;
            d = rem;
            if d == BigInt::from(1) {
                a += std::mem::take(&mut b);
            }
        }
        if c.is_negative() {
            a = -a;
            b = -b;
            c = -c;
        }
        let g = a.gcd(&b).gcd(&c);
        if !g.is_zero() && g != BigInt::from(1) {
            a /= &g;
            b /= &g;
            c /= &g;
        }
        if a.is_zero() && b.is_zero() {
            c = BigInt::from(1);
        }
        QuadraticIrrational { a, b, c, d }
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self::canon(n.into(), BigInt::from(0), BigInt::from(1), BigInt::from(1))
    }

    pub fn from_rational(r: &Rational) -> Self {
        Self::canon(
            r.numer().clone(),
            BigInt::from(0),
            r.denom().clone(),
            BigInt::from(1),
        )
    }

    /// `√d` for a positive integer `d`.
    pub fn sqrt(d: impl Into<BigInt>) -> Result<Self> {
        Self::new(0, 1, 1, d)
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.b.is_zero() && self.c == BigInt::from(1)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.b
            .is_zero()
            .then(|| Rational::new(self.a.clone(), self.c.clone()))
    }

    /// Sign of the value: the ordering relative to zero.
    pub fn sign(&self) -> Ordering {
        sign_pair(&self.a, &self.b, &self.d)
    }

    /// Radicand shared by two values, if they live in compatible fields.
    /// Rationals are compatible with everything.
    fn common_d(&self, other: &Self) -> Option<BigInt> {
        if self.b.is_zero() {
            Some(other.d.clone())
        } else if other.b.is_zero() || self.d == other.d {
            Some(self.d.clone())
        } else {
            None
        }
    }

    fn expect_common_d(&self, other: &Self) -> BigInt {
        self.common_d(other)
            .expect("arithmetic between distinct quadratic fields")
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::canon(
            &self.a * r.numer(),
            &self.b * r.numer(),
            &self.c * r.denom(),
            self.d.clone(),
        )
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        // 1/x = c(a - b√d) / (a² - b²d)
        let n = &self.a * &self.a - &self.b * &self.b * &self.d;
        debug_assert!(!n.is_zero());
        Self::canon(&self.c * &self.a, -(&self.c * &self.b), n, self.d.clone())
    }

    /// Largest integer not exceeding the value.
    pub fn floor(&self) -> BigInt {
        // floor(b√d) first: with t = b²d, √t has integer part isqrt(t).
        let fb = if self.b.is_zero() {
            BigInt::from(0)
        } else {
            let t = &self.b * &self.b * &self.d;
            let s = t.sqrt();
            if self.b.is_positive() {
                s
            } else if &s * &s == t {
                -s
            } else {
                -s - 1
            }
        };
        // a + b√d = a + fb + θ with θ ∈ [0, 1), and c ≥ 1, so the floor of
        // the quotient is exactly floor((a + fb)/c).
        (self.a.clone() + fb).div_floor(&self.c)
    }

    /// Fractional part `{x} = x − ⌊x⌋`, in `[0, 1)`.
    pub fn frac(&self) -> Self {
        self - &Self::from_integer(self.floor())
    }

    /// Distance to the nearest integer, `min({x}, 1 − {x})`, in `[0, 1/2]`.
    pub fn dist_nearest_int(&self) -> Self {
        let f = self.frac();
        let half = Self::canon(
            BigInt::from(1),
            BigInt::from(0),
            BigInt::from(2),
            BigInt::from(1),
        );
        if f <= half {
            f
        } else {
            &Self::one() - &f
        }
    }

    pub fn abs(&self) -> Self {
        if self.sign() == Ordering::Less {
            -self
        } else {
            self.clone()
        }
    }

    /// Decimal rendering to `digits` places, round half up, certified by
    /// exact comparison. Display-only; never feeds back into computations.
    pub fn to_decimal(&self, digits: usize) -> String {
        if self.sign() == Ordering::Less {
            return format!("-{}", (-self).to_decimal(digits));
        }
        let pow = BigInt::from(10).pow(digits as u32);
        let scaled = self.scale(&Rational::from_integer(pow));
        let mut n = scaled.floor();
        let frac = scaled.frac();
        let half = Self::canon(
            BigInt::from(1),
            BigInt::from(0),
            BigInt::from(2),
            BigInt::from(1),
        );
        if frac >= half {
            n += 1;
        }
        let s = n.to_string();
        if digits == 0 {
            return s;
        }
        let s = if s.len() <= digits {
            format!("{}{}", "0".repeat(digits + 1 - s.len()), s)
        } else {
            s
        };
        let split = s.len() - digits;
        format!("{}.{}", &s[..split], &s[split..])
    }
}

/// Exact sign of `a + b·√d` (`d ≥ 1`).
fn sign_pair(a: &BigInt, b: &BigInt, d: &BigInt) -> Ordering {
    match (a.sign(), b.sign()) {
        (_, num_bigint::Sign::NoSign) => a.cmp(&BigInt::from(0)),
        (num_bigint::Sign::NoSign, _) => b.cmp(&BigInt::from(0)),
        (num_bigint::Sign::Plus, num_bigint::Sign::Plus) => Ordering::Greater,
        (num_bigint::Sign::Minus, num_bigint::Sign::Minus) => Ordering::Less,
        (num_bigint::Sign::Plus, num_bigint::Sign::Minus) => {
            // a > 0 > b√d: sign decided by a² vs b²d
            (a * a).cmp(&(b * b * d))
        }
        (num_bigint::Sign::Minus, num_bigint::Sign::Plus) => (b * b * d).cmp(&(a * a)),
    }
}

/// Exact sign of `A + B·√d1 + C·√d2` with `d1, d2 ≥ 1`, by comparing
/// `A + B√d1` against `−C√d2` and squaring once when both sides share a sign.
fn sign_triple(a: &BigInt, b: &BigInt, d1: &BigInt, c: &BigInt, d2: &BigInt) -> Ordering {
    if c.is_zero() {
        return sign_pair(a, b, d1);
    }
    if b.is_zero() {
        return sign_pair(a, c, d2);
    }
    if d1 == d2 {
        return sign_pair(a, &(b + c), d1);
    }
    let left = sign_pair(a, b, d1);
    let right = (-c).cmp(&BigInt::from(0));
    match (left, right) {
        (Ordering::Equal, Ordering::Equal) => Ordering::Equal,
        (l, r) if l != Ordering::Less && r != Ordering::Greater => Ordering::Greater,
        (l, r) if l != Ordering::Greater && r != Ordering::Less => Ordering::Less,
        _ => {
            // Both sides strictly positive or strictly negative: compare
            // squares. (A + B√d1)² = A² + B²d1 + 2AB√d1, (−C√d2)² = C²d2.
            let sq = sign_pair(&(a * a + b * b * d1 - c * c * d2), &(2 * a * b), d1);
            if left == Ordering::Greater {
                sq
            } else {
                sq.reverse()
            }
        }
    }
}

impl PartialOrd for QuadraticIrrational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadraticIrrational {
    fn cmp(&self, other: &Self) -> Ordering {
        // sign(x − y) after clearing the positive denominators:
        // c2(a1 + b1√d1) − c1(a2 + b2√d2)
        sign_triple(
            &(&other.c * &self.a - &self.c * &other.a),
            &(&other.c * &self.b),
            &self.d,
            &(-(&self.c * &other.b)),
            &other.d,
        )
    }
}

impl Add for &QuadraticIrrational {
    type Output = QuadraticIrrational;
    fn add(self, rhs: &QuadraticIrrational) -> QuadraticIrrational {
        let d = self.expect_common_d(rhs);
        QuadraticIrrational::canon(
            &self.a * &rhs.c + &rhs.a * &self.c,
            &self.b * &rhs.c + &rhs.b * &self.c,
            &self.c * &rhs.c,
            d,
        )
    }
}

impl Sub for &QuadraticIrrational {
    type Output = QuadraticIrrational;
    fn sub(self, rhs: &QuadraticIrrational) -> QuadraticIrrational {
        self + &(-rhs)
    }
}

impl Neg for &QuadraticIrrational {
    type Output = QuadraticIrrational;
    fn neg(self) -> QuadraticIrrational {
        QuadraticIrrational {
            a: -&self.a,
            b: -&self.b,
            c: self.c.clone(),
            d: self.d.clone(),
        }
    }
}

impl Mul for &QuadraticIrrational {
    type Output = QuadraticIrrational;
    fn mul(self, rhs: &QuadraticIrrational) -> QuadraticIrrational {
        let d = self.expect_common_d(rhs);
        QuadraticIrrational::canon(
            &self.a * &rhs.a + &self.b * &rhs.b * &d,
            &self.a * &rhs.b + &self.b * &rhs.a,
            &self.c * &rhs.c,
            d,
        )
    }
}

impl Div for &QuadraticIrrational {
    type Output = QuadraticIrrational;
    #[allow(clippy::suspicious_arithmetic_impl)] // x/y as x·y⁻¹
    fn div(self, rhs: &QuadraticIrrational) -> QuadraticIrrational {
        self * &rhs.inv()
    }
}

impl fmt::Display for QuadraticIrrational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            if self.c == BigInt::from(1) {
                return write!(f, "{}", self.a);
            }
            return write!(f, "{}/{}", self.a, self.c);
        }
        let radical = if self.b == BigInt::from(1) {
            format!("sqrt({})", self.d)
        } else if self.b == BigInt::from(-1) {
            format!("-sqrt({})", self.d)
        } else {
            format!("{}*sqrt({})", self.b, self.d)
        };
        let numerator = if self.a.is_zero() {
            radical
        } else if radical.starts_with('-') {
            format!("{}{}", self.a, radical)
        } else {
            format!("{}+{}", self.a, radical)
        };
        if self.c == BigInt::from(1) {
            write!(f, "{}", numerator)
        } else {
            write!(f, "({})/{}", numerator, self.c)
        }
    }
}
