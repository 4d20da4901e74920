//! Closed forms for abelian powers in Sturmian words: existence and maximum
//! exponents by period and by position, guaranteed exponents under
//! anticipation, interval-length sets, and repetition extension at convergent
//! denominators. Every strict inequality is decided in exact arithmetic.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::exact::{smallest_better, QuadraticIrrational, Rational};
use crate::sturmian::{neg_multiple_frac, partition, Convention, SturmianSpec, Weight};
use crate::words::Letter;
use crate::{Error, Result};

fn scale_int(x: &QuadraticIrrational, k: u64) -> QuadraticIrrational {
    x.scale(&Rational::from_integer(BigInt::from(k)))
}

fn floor_u64(x: &QuadraticIrrational) -> u64 {
    x.floor().to_u64().expect("exponent fits in u64")
}

/// Maximum exponent of an abelian power of period `m` in any Sturmian word
/// of angle `alpha`: the largest `k` with `‖mα‖ < 1/k`, i.e. `⌊1/‖mα‖⌋`.
pub fn max_exponent(alpha: &QuadraticIrrational, m: u64) -> u64 {
    assert!(m >= 1, "period must be positive");
    let norm = scale_int(alpha, m).dist_nearest_int();
    floor_u64(&norm.inv())
}

/// Which of the four coding situations the orbit point `{ρ + nα}` is in.
/// The last two arise only when the point lies on the backward orbit
/// `{−rmα}` of the interval boundary, where the endpoint convention decides
/// the letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PowerCase {
    Generic,
    ZeroPoint,
    ExceptionalBelow,
    ExceptionalAtOrAbove,
}

/// Maximum exponent of the (possibly degenerated) abelian power of period
/// `period` starting at `position`, together with the quantities deciding it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerReport {
    pub period: u64,
    pub position: u64,
    pub exponent: u64,
    pub case: PowerCase,
    /// `⌊{−ρ−nα}/{mα}⌋`: blocks available climbing by `{mα}` before the top.
    pub rise_cap: u64,
    /// `⌊{ρ+nα}/{−mα}⌋`: blocks available falling by `{−mα}` before zero.
    pub fall_cap: u64,
    /// Whether the word's convention codes the point 0 as `b`.
    pub zero_in_b: bool,
}

/// Maximum exponent of a (possibly degenerated) abelian power of period `m`
/// at position `n`. The result is at least 1: the caps cannot both vanish.
pub fn max_exponent_at(spec: &SturmianSpec, m: u64, n: u64) -> PowerReport {
    assert!(m >= 1, "period must be positive");
    let one = QuadraticIrrational::one();
    let p = spec.point(n).value;
    let ma = scale_int(spec.alpha(), m).frac();
    let neg_ma = &one - &ma;
    let zero_in_b = spec.convention().zero_in_b();

    if p.is_zero() {
        let k = if zero_in_b {
            floor_u64(&ma.inv())
        } else {
            floor_u64(&neg_ma.inv())
        };
        return PowerReport {
            period: m,
            position: n,
            exponent: k,
            case: PowerCase::ZeroPoint,
            rise_cap: 0,
            fall_cap: 0,
            zero_in_b,
        };
    }

    let rise_cap = floor_u64(&(&(&one - &p) / &ma));
    let fall_cap = floor_u64(&(&p / &neg_ma));
    let plain = rise_cap.max(fall_cap);
    let (case, exponent) = match spec.exceptional_r(n, m) {
        None => (PowerCase::Generic, plain),
        Some(r) if r > plain => (PowerCase::ExceptionalBelow, plain),
        Some(_) => {
            let gamma = zero_in_b as i64;
            let k = (rise_cap as i64 - gamma).max(fall_cap as i64 + gamma - 1);
            debug_assert!(k >= 1);
            (PowerCase::ExceptionalAtOrAbove, k as u64)
        }
    };
    debug_assert!(exponent >= 1);
    PowerReport {
        period: m,
        position: n,
        exponent,
        case,
        rise_cap,
        fall_cap,
        zero_in_b,
    }
}

/// Whether an abelian power of period `m` and exponent `k ≥ 2` starts at
/// position `n`.
///
/// Away from the backward boundary orbit this is the inequality
/// `{ρ+nα} < 1 − k{mα}` (when `{mα} < 1/2`) or `{ρ+nα} > k{−mα}`
/// (when `{mα} > 1/2`). On the orbit the endpoint convention decides, and
/// at the orbit index itself the comparison becomes non-strict: the chain's
/// last point may sit exactly on the included interval endpoint.
pub fn power_exists_at(spec: &SturmianSpec, n: u64, m: u64, k: u64) -> bool {
    assert!(m >= 1, "period must be positive");
    assert!(k >= 2, "exponent below 2 is a degenerated power");
    let one = QuadraticIrrational::one();
    let p = spec.point(n).value;
    let ma = scale_int(spec.alpha(), m).frac();
    let neg_ma = &one - &ma;
    let rising = ma < neg_ma; // {mα} < 1/2
    let zero_in_b = spec.convention().zero_in_b();

    let generic = || {
        if rising {
            p < &one - &scale_int(&ma, k)
        } else {
            p > scale_int(&neg_ma, k)
        }
    };
    match spec.exceptional_r(n, m) {
        None => generic(),
        Some(0) => {
            if rising {
                zero_in_b && scale_int(&ma, k) < one
            } else {
                !zero_in_b && scale_int(&neg_ma, k) < one
            }
        }
        Some(r) if k < r => generic(),
        Some(_) => {
            if rising {
                !zero_in_b && p <= &one - &scale_int(&ma, k)
            } else {
                zero_in_b && p >= scale_int(&neg_ma, k)
            }
        }
    }
}

/// Largest exponent guaranteed to start within every window of
/// `anticipation + 1` consecutive positions:
/// `max(1, ⌊(1 − l_i)/‖mα‖⌋)` with `l_i` the largest interval length of the
/// order-`i` partition (`l_0 = 1`).
pub fn guaranteed_exponent(alpha: &QuadraticIrrational, m: u64, anticipation: u64) -> Result<u64> {
    if anticipation > m {
        return Err(Error::AnticipationTooLarge {
            anticipation,
            period: m,
        });
    }
    if anticipation == 0 {
        return Ok(1);
    }
    let widest = partition(alpha, anticipation, Convention::ZeroInB)?.max_len;
    let norm = scale_int(alpha, m).dist_nearest_int();
    let k = floor_u64(&(&(&QuadraticIrrational::one() - &widest) / &norm));
    Ok(k.max(1))
}

/// The (at most two) interval lengths of the partition of order `m_k − 1`,
/// where `m_k` is the `k`-th convergent denominator of `alpha`:
/// `‖m_{k−1}α‖` and `‖((a_k − 1)m_{k−1} + m_{k−2})α‖`.
///
/// Needs `m_k ≥ 3`: a two-interval partition may have a length above 1/2,
/// which no `‖·‖` value can express.
pub fn three_distance_lengths(
    alpha: &QuadraticIrrational,
    k: usize,
) -> Result<Vec<QuadraticIrrational>> {
    if k < 2 {
        return Err(Error::IndexOutOfRange(
            "convergent index must be >= 2".into(),
        ));
    }
    let cf = alpha.continued_fraction()?;
    let conv = cf.convergents(k + 1);
    let m_k = &conv[k].denominator;
    if m_k < &BigInt::from(3) {
        return Err(Error::IndexOutOfRange(format!(
            "denominator {m_k} too small for the two-length property"
        )));
    }
    let m_k1 = &conv[k - 1].denominator;
    let m_k2 = &conv[k - 2].denominator;
    let coeff = (cf.digit(k) - BigInt::from(1)) * m_k1 + m_k2;
    let mut lengths = vec![
        alpha
            .scale(&Rational::from_integer(m_k1.clone()))
            .dist_nearest_int(),
        alpha
            .scale(&Rational::from_integer(coeff))
            .dist_nearest_int(),
    ];
    lengths.sort();
    lengths.dedup();
    Ok(lengths)
}

/// The unique extreme factor of length `m` (a convergent denominator):
/// the single heavy factor when `{−mα} ≥ {−α}`, which starts and ends with
/// `a`, or the single light factor otherwise, which starts and ends with `b`.
pub fn unique_extreme_factor(alpha: &QuadraticIrrational, m: u64) -> Result<(Vec<Letter>, Weight)> {
    smallest_better(alpha, &BigInt::from(m))?;
    let neg_m = neg_multiple_frac(alpha, m);
    let neg_one = neg_multiple_frac(alpha, 1);
    let class = if neg_m >= neg_one {
        Weight::Heavy
    } else {
        Weight::Light
    };
    let part = partition(alpha, m, Convention::ZeroInB)?;
    let mut matching = part
        .intervals
        .iter()
        .filter(|iv| iv.heavy == (class == Weight::Heavy));
    let only = matching.next().expect("extreme class is nonempty");
    assert!(
        matching.next().is_none(),
        "extreme factor at a convergent denominator must be unique"
    );
    Ok((only.factor.clone(), class))
}

/// An abelian repetition span within an infinite word: absolute start
/// position, total length, and head/tail lengths.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RepetitionSpan {
    pub start: u64,
    pub len: u64,
    pub head_len: u64,
    pub tail_len: u64,
}

/// Extends the maximal abelian power of period `m` (a convergent
/// denominator) starting at `n ≥ m − 1` to the enclosing abelian repetition,
/// which always has maximum head and tail length `m − 1`.
pub fn repetition_extension(spec: &SturmianSpec, n: u64, m: u64) -> Result<RepetitionSpan> {
    smallest_better(spec.alpha(), &BigInt::from(m))?;
    if n + 1 < m {
        return Err(Error::IndexOutOfRange(format!(
            "position {n} leaves no room for a head of length {}",
            m - 1
        )));
    }
    let k = max_exponent_at(spec, m, n).exponent;
    if k < 2 {
        return Err(Error::NoPowerAtPosition {
            period: m,
            position: n,
        });
    }
    Ok(RepetitionSpan {
        start: n - (m - 1),
        len: k * m + 2 * (m - 1),
        head_len: m - 1,
        tail_len: m - 1,
    })
}

/// Maximum exponent of an abelian repetition of period `m` (a convergent
/// denominator), as an exact rational: `k_m + 2 − 2/m`.
pub fn max_repetition_exponent(alpha: &QuadraticIrrational, m: u64) -> Result<Rational> {
    smallest_better(alpha, &BigInt::from(m))?;
    let k = max_exponent(alpha, m);
    Ok(Rational::from_integer(BigInt::from(k + 2))
        - Rational::new(BigInt::from(2), BigInt::from(m)))
}
