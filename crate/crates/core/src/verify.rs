//! Sweep kernels pitting the closed forms against the brute-force oracle
//! over grids of periods and positions. Used by the test suite and by the
//! command-line `verify` subcommand. Cells are independent and may be
//! checked concurrently; reported mismatches are always the first in key
//! order.

use std::fmt;

use num_traits::ToPrimitive;

use crate::exact::QuadraticIrrational;
use crate::fibonacci;
use crate::formulas;
use crate::oracle::{self, PrefixCounts};
use crate::scan;
use crate::sturmian::{Convention, SturmianSpec};
use crate::{Error, Result};

/// A disagreeing cell: where, and what each side computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub cell: String,
    pub formula: String,
    pub oracle: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: formula gives {}, oracle gives {}",
            self.cell, self.formula, self.oracle
        )
    }
}

/// Outcome of a sweep: cells checked, or the first mismatch.
pub type SweepResult = std::result::Result<usize, Mismatch>;

fn convention_name(c: Convention) -> &'static str {
    match c {
        Convention::ZeroInB => "zero-in-b",
        Convention::ZeroInA => "zero-in-a",
    }
}

/// The three words whose prefixes witness the maximum exponent of any
/// period: initial point 0 under both conventions, plus the characteristic
/// word.
fn witness_specs(alpha: &QuadraticIrrational) -> Result<Vec<(SturmianSpec, String)>> {
    Ok(vec![
        (
            SturmianSpec::from_zero(alpha.clone(), Convention::ZeroInB)?,
            "rho=0 zero-in-b".into(),
        ),
        (
            SturmianSpec::from_zero(alpha.clone(), Convention::ZeroInA)?,
            "rho=0 zero-in-a".into(),
        ),
        (
            SturmianSpec::characteristic(alpha.clone(), Convention::ZeroInB)?,
            "rho=alpha".into(),
        ),
    ])
}

/// Checks `⌊1/‖mα‖⌋` against the oracle maximum over generated prefixes for
/// every period in the range.
///
/// The prefix is sized at `20·m·k` letters. Equality alone is not accepted:
/// some occurrence of the maximum must be certified by a visible following
/// block that breaks it, otherwise the window is reported as too short
/// instead of silently passing.
pub fn km_sweep(alpha: &QuadraticIrrational, alpha_label: &str, ms: &[u64]) -> Result<SweepResult> {
    let specs = witness_specs(alpha)?;
    let outcome = scan::find_first_over(0..ms.len(), |idx| {
        let m = ms[idx];
        let k = formulas::max_exponent(alpha, m);
        let len = (20 * m * k).max(m * (k + 2) + 1) as usize;
        let mut best = 0u64;
        let mut certified = false;
        for (spec, _) in &specs {
            let counts = PrefixCounts::new(&spec.prefix(len));
            for pos in 0..=len - m as usize {
                let got = counts.max_power_at(pos, m);
                if got > best {
                    best = got;
                    certified = false;
                }
                if got == best && pos + (best as usize + 1) * m as usize <= len {
                    certified = true;
                }
            }
        }
        let cell = format!("alpha={alpha_label} m={m}");
        if best != k {
            Some(Mismatch {
                cell,
                formula: k.to_string(),
                oracle: best.to_string(),
            })
        } else if !certified {
            Some(Mismatch {
                cell,
                formula: k.to_string(),
                oracle: format!("{best} (still rising at the window edge; scan longer)"),
            })
        } else {
            None
        }
    });
    Ok(match outcome {
        Some(mismatch) => Err(mismatch),
        None => Ok(ms.len()),
    })
}

/// Checks the per-position exponent formula against the oracle for every
/// `(m, n)` cell of every given word.
pub fn kmn_sweep(
    specs: &[(SturmianSpec, String)],
    alpha_label: &str,
    ms: &[u64],
    n_max: u64,
) -> Result<SweepResult> {
    let mut checked = 0usize;
    for (spec, rho_label) in specs {
        let k_bound = ms
            .iter()
            .map(|&m| formulas::max_exponent(spec.alpha(), m))
            .max()
            .unwrap_or(1);
        let m_max = ms.iter().copied().max().unwrap_or(1);
        let len = (n_max + m_max * (k_bound + 2)) as usize;
        let counts = PrefixCounts::new(&spec.prefix(len));
        let cells = ms.len() * (n_max as usize + 1);
        let outcome = scan::find_first_over(0..cells, |idx| {
            let m = ms[idx / (n_max as usize + 1)];
            let n = (idx % (n_max as usize + 1)) as u64;
            let formula = formulas::max_exponent_at(spec, m, n).exponent;
            let scanned = counts.max_power_at(n as usize, m);
            (formula != scanned).then(|| Mismatch {
                cell: format!(
                    "alpha={alpha_label} {rho_label} convention={} m={m} n={n}",
                    convention_name(spec.convention())
                ),
                formula: formula.to_string(),
                oracle: scanned.to_string(),
            })
        });
        if let Some(mismatch) = outcome {
            return Ok(Err(mismatch));
        }
        checked += cells;
    }
    Ok(Ok(checked))
}

/// Checks the closed form for the longest abelian-repetition prefix of the
/// Fibonacci word against the oracle, for each Fibonacci index in `js`.
pub fn lp_sweep(js: &[usize]) -> Result<SweepResult> {
    let j_max = js.iter().copied().max().unwrap_or(2);
    let len = (fibonacci::longest_prefix_repetition_len(j_max)
        + num_bigint::BigInt::from(2) * fibonacci::fib(j_max))
    .to_usize()
    .ok_or_else(|| Error::IndexOutOfRange("prefix length overflows usize".into()))?;
    let spec = SturmianSpec::characteristic(fibonacci::fibonacci_angle(), Convention::ZeroInB)?;
    let word = spec.prefix(len);
    let outcome = scan::find_first_over(0..js.len(), |idx| {
        let j = js[idx];
        let closed = fibonacci::longest_prefix_repetition_len(j);
        let m = fibonacci::fib_u64(j);
        let scanned = oracle::longest_prefix_repetition(&word, m)
            .map(|rep| rep.len())
            .unwrap_or(0);
        (closed != num_bigint::BigInt::from(scanned)).then(|| Mismatch {
            cell: format!("j={j} (period {m})"),
            formula: closed.to_string(),
            oracle: scanned.to_string(),
        })
    });
    Ok(match outcome {
        Some(mismatch) => Err(mismatch),
        None => Ok(js.len()),
    })
}

/// Checks the minimum-abelian-period closed form for the finite Fibonacci
/// words against the oracle.
pub fn fib_period_sweep(js: &[usize]) -> Result<SweepResult> {
    for &j in js {
        fibonacci::min_abelian_period_fib(j)?;
    }
    let outcome = scan::find_first_over(0..js.len(), |idx| {
        let j = js[idx];
        let (_, closed) = fibonacci::min_abelian_period_fib(j).expect("validated above");
        let scanned = oracle::min_abelian_period(&fibonacci::fib_word(j)).expect("nonempty");
        (closed != num_bigint::BigInt::from(scanned)).then(|| Mismatch {
            cell: format!("j={j}"),
            formula: closed.to_string(),
            oracle: scanned.to_string(),
        })
    });
    Ok(match outcome {
        Some(mismatch) => Err(mismatch),
        None => Ok(js.len()),
    })
}
