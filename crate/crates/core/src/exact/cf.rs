//! Eventually periodic continued fractions `[a₀; a₁, …, a_j | p₁, …, p_k]`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::QuadraticIrrational;
use crate::{Error, Result};

/// A continued fraction with an eventually periodic expansion, stored in
/// canonical form: the period is primitive (no shorter repeating block) and
/// the preperiod is as short as possible (trailing preperiod digits that
/// match the period's tail are absorbed into the period). Canonical form makes value equality a
/// structural check.
///
/// Digit `i` of the expansion is `preperiod[i]` while `i < preperiod.len()`,
/// then the period repeats forever. Every digit except the leading one is at
/// least 1; a purely periodic expansion is stored with an empty preperiod.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ContinuedFraction {
    preperiod: Vec<BigInt>,
    period: Vec<BigInt>,
}

/// One rational truncation `n_i / m_i` of an expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Convergent {
    pub numerator: BigInt,
    pub denominator: BigInt,
}

impl ContinuedFraction {
    pub fn new<P, Q>(preperiod: P, period: Q) -> Result<Self>
    where
        P: IntoIterator,
        P::Item: Into<BigInt>,
        Q: IntoIterator,
        Q::Item: Into<BigInt>,
    {
        let mut pre: Vec<BigInt> = preperiod.into_iter().map(Into::into).collect();
        let mut per: Vec<BigInt> = period.into_iter().map(Into::into).collect();
        if per.is_empty() {
            return Err(Error::InvalidContinuedFraction("empty period".into()));
        }
        if per.iter().any(|a| !a.is_positive()) {
            return Err(Error::InvalidContinuedFraction(
                "period entries must be positive".into(),
            ));
        }
        if pre.iter().skip(1).any(|a| !a.is_positive()) {
            return Err(Error::InvalidContinuedFraction(
                "partial quotients after the first must be positive".into(),
            ));
        }
        // Primitive period: shortest block whose repetition gives the stored one.
        let k = per.len();
        for p in 1..k {
            if k.is_multiple_of(p) && (p..k).all(|i| per[i] == per[i % p]) {
                per.truncate(p);
                break;
            }
        }
        // Shortest preperiod: absorb digits that merely repeat the period's tail.
        while let Some(last) = pre.last() {
            if last == per.last().unwrap() {
                pre.pop();
                per.rotate_right(1);
            } else {
                break;
            }
        }
        Ok(ContinuedFraction {
            preperiod: pre,
            period: per,
        })
    }

    pub fn preperiod(&self) -> &[BigInt] {
        &self.preperiod
    }

    pub fn period(&self) -> &[BigInt] {
        &self.period
    }

    /// Partial quotient at position `i` of the infinite expansion.
    pub fn digit(&self, i: usize) -> &BigInt {
        if i < self.preperiod.len() {
            &self.preperiod[i]
        } else {
            &self.period[(i - self.preperiod.len()) % self.period.len()]
        }
    }

    /// The expansion with its first `k` digits dropped.
    pub fn tail(&self, k: usize) -> Self {
        if k <= self.preperiod.len() {
            ContinuedFraction::new(self.preperiod[k..].to_vec(), self.period.clone())
                .expect("tail of a valid expansion is valid")
        } else {
            let shift = (k - self.preperiod.len()) % self.period.len();
            let mut per = self.period.clone();
            per.rotate_left(shift);
            ContinuedFraction::new(Vec::<BigInt>::new(), per)
                .expect("tail of a valid expansion is valid")
        }
    }

    /// Exact value of the expansion.
    ///
    /// The purely periodic tail `t` satisfies `t = (p·t + p′)/(q·t + q′)`
    /// for the period's convergent matrix, a quadratic equation solved
    /// exactly; the preperiod is then folded in from the right.
    pub fn value(&self) -> QuadraticIrrational {
        let mut x = periodic_value(&self.period);
        for a in self.preperiod.iter().rev() {
            x = &QuadraticIrrational::from_integer(a.clone()) + &x.inv();
        }
        x
    }

    /// First `count` convergents `n_i/m_i` by the standard recurrence.
    pub fn convergents(&self, count: usize) -> Vec<Convergent> {
        let mut out = Vec::with_capacity(count);
        let (mut n_prev, mut n_prev2) = (BigInt::one(), BigInt::zero());
        let (mut m_prev, mut m_prev2) = (BigInt::zero(), BigInt::one());
        for i in 0..count {
            let a = self.digit(i);
            let n = a * &n_prev + &n_prev2;
            let m = a * &m_prev + &m_prev2;
            out.push(Convergent {
                numerator: n.clone(),
                denominator: m.clone(),
            });
            n_prev2 = std::mem::replace(&mut n_prev, n);
            m_prev2 = std::mem::replace(&mut m_prev, m);
        }
        out
    }

    /// Whether two expansions ultimately coincide, i.e. their canonical
    /// periods agree up to rotation.
    pub fn is_equivalent_to(&self, other: &Self) -> bool {
        let (p, q) = (&self.period, &other.period);
        p.len() == q.len()
            && (0..p.len()).any(|r| (0..p.len()).all(|i| p[(i + r) % p.len()] == q[i]))
    }
}

/// Value of the purely periodic expansion with the given digit block.
pub(crate) fn periodic_value(period: &[BigInt]) -> QuadraticIrrational {
    let (mut p, mut p_prev) = (BigInt::one(), BigInt::zero());
    let (mut q, mut q_prev) = (BigInt::zero(), BigInt::one());
    for a in period {
        let np = a * &p + &p_prev;
        let nq = a * &q + &q_prev;
        p_prev = std::mem::replace(&mut p, np);
        q_prev = std::mem::replace(&mut q, nq);
    }
    // t = (p·t + p')/(q·t + q'), the positive root of q·t² + (q'−p)·t − p' = 0
    let disc = (&q_prev - &p) * (&q_prev - &p) + BigInt::from(4) * &q * &p_prev;
    QuadraticIrrational::new(&p - &q_prev, BigInt::one(), BigInt::from(2) * q, disc)
        .expect("periodic expansions have positive discriminant")
}

impl QuadraticIrrational {
    /// The (canonical, eventually periodic) continued fraction expansion.
    ///
    /// Fails on rational input. Periodicity is detected by the first repeated
    /// complete quotient, which yields the shortest preperiod directly.
    pub fn continued_fraction(&self) -> Result<ContinuedFraction> {
        if self.is_rational() {
            return Err(Error::NotIrrational);
        }
        let mut x = self.clone();
        let mut digits: Vec<BigInt> = Vec::new();
        let mut seen: HashMap<QuadraticIrrational, usize> = HashMap::new();
        loop {
            if let Some(&j) = seen.get(&x) {
                let period = digits.split_off(j);
                return ContinuedFraction::new(digits, period);
            }
            if digits.len() > 100_000 {
                unreachable!("quadratic irrational expansion failed to cycle");
            }
            seen.insert(x.clone(), digits.len());
            let a = x.floor();
            x = (&x - &QuadraticIrrational::from_integer(a.clone())).inv();
            digits.push(a);
        }
    }
}

/// Next convergent denominator of `alpha` after `m`: the smallest `m' > m`
/// with `‖m'α‖ < ‖mα‖`, defined when `m` is itself a convergent denominator.
pub fn smallest_better(alpha: &QuadraticIrrational, m: &BigInt) -> Result<BigInt> {
    let cf = alpha.continued_fraction()?;
    let mut found = false;
    let (mut m_prev, mut m_prev2) = (BigInt::zero(), BigInt::one());
    for i in 0.. {
        let den = cf.digit(i) * &m_prev + &m_prev2;
        if found && &den > m {
            return Ok(den);
        }
        if &den == m {
            found = true;
        } else if &den > m {
            return Err(Error::NotConvergentDenominator(m.to_string()));
        }
        m_prev2 = std::mem::replace(&mut m_prev, den);
    }
    unreachable!()
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // A purely periodic expansion is shown with its leading digit pulled
        // out so the text always reads "[a0;pre|period]".
        let (pre, per): (Vec<BigInt>, Vec<BigInt>) = if self.preperiod.is_empty() {
            let mut rotated = self.period.clone();
            rotated.rotate_left(1);
            (vec![self.period[0].clone()], rotated)
        } else {
            (self.preperiod.clone(), self.period.clone())
        };
        let join = |xs: &[BigInt]| {
            xs.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "[{};{}|{}]", pre[0], join(&pre[1..]), join(&per))
    }
}

impl FromStr for ContinuedFraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid continued fraction literal: {s}"));
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(bad)?;
        let (head, rest) = inner.split_once(';').ok_or_else(bad)?;
        let (pre_part, per_part) = rest.split_once('|').ok_or_else(bad)?;
        let parse_list = |part: &str| -> Result<Vec<BigInt>> {
            part.split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<BigInt>().map_err(|_| bad()))
                .collect()
        };
        let mut pre = vec![head.trim().parse::<BigInt>().map_err(|_| bad())?];
        pre.extend(parse_list(pre_part)?);
        let per = parse_list(per_part)?;
        ContinuedFraction::new(pre, per)
    }
}
