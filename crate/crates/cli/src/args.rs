//! Parsers for the command-line value grammars: angles, initial points,
//! conventions, and index ranges.

use num_bigint::BigInt;
use sturmian_abelian::exact::{ContinuedFraction, QuadraticIrrational, Rational};
use sturmian_abelian::sturmian::Convention;

/// An angle: the alias `fib`, a quadruple `(a,b,c,d)` meaning `(a+b√d)/c`,
/// or a continued-fraction literal `[a0;pre|period]`.
pub fn parse_alpha(s: &str) -> Result<QuadraticIrrational, String> {
    let s = s.trim();
    if s == "fib" {
        return Ok(QuadraticIrrational::new(-1, 1, 2, 5).expect("static value"));
    }
    if let Some(body) = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
        let parts: Vec<&str> = body.split(',').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(format!("expected four components in {s:?}"));
        }
        let nums: Vec<BigInt> = parts
            .iter()
            .map(|p| p.parse::<BigInt>().map_err(|e| format!("{p:?}: {e}")))
            .collect::<Result<_, _>>()?;
        return QuadraticIrrational::new(
            nums[0].clone(),
            nums[1].clone(),
            nums[2].clone(),
            nums[3].clone(),
        )
        .map_err(|e| e.to_string());
    }
    if s.starts_with('[') {
        let cf: ContinuedFraction = s.parse().map_err(|e| format!("{e}"))?;
        return Ok(cf.value());
    }
    Err(format!(
        "cannot parse angle {s:?}: expected \"fib\", \"(a,b,c,d)\" or \"[a0;pre|period]\""
    ))
}

pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num.parse().map_err(|e| format!("{num:?}: {e}"))?;
    let d: BigInt = den.parse().map_err(|e| format!("{den:?}: {e}"))?;
    if d == BigInt::from(0) {
        return Err("zero denominator".into());
    }
    Ok(Rational::new(n, d))
}

/// An initial point `u + v*alpha`: any of `alpha`, `u`, `v*alpha`,
/// `u+v*alpha`, `u-v*alpha`, with `u`, `v` rationals like `1/3`.
pub fn parse_rho(s: &str) -> Result<(Rational, Rational), String> {
    let zero = || Rational::new(BigInt::from(0), BigInt::from(1));
    let one = || Rational::new(BigInt::from(1), BigInt::from(1));
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let term_v = |t: &str| -> Result<Rational, String> {
        match t.strip_suffix("*alpha") {
            Some(coeff) => parse_rational(coeff),
            None if t == "alpha" => Ok(one()),
            None if t == "-alpha" => Ok(-one()),
            None => Err(format!("expected a multiple of alpha, got {t:?}")),
        }
    };
    if !s.contains("alpha") {
        return Ok((parse_rational(&s)?, zero()));
    }
    // split u ± v*alpha on the last top-level sign before "alpha"
    let alpha_at = s.find("alpha").expect("checked above");
    let split = s[..alpha_at]
        .char_indices()
        .rev()
        .find(|(i, c)| (*c == '+' || *c == '-') && *i > 0);
    match split {
        None => Ok((zero(), term_v(&s)?)),
        Some((i, sign)) => {
            let u = parse_rational(&s[..i])?;
            let v = term_v(&s[i + 1..])?;
            Ok((u, if sign == '-' { -v } else { v }))
        }
    }
}

pub fn parse_convention(s: &str) -> Result<Convention, String> {
    match s {
        "zero-in-b" => Ok(Convention::ZeroInB),
        "zero-in-a" => Ok(Convention::ZeroInA),
        other => Err(format!(
            "unknown convention {other:?}: expected zero-in-b or zero-in-a"
        )),
    }
}

/// `a..b` (inclusive), a single index, or a comma list of either.
pub fn parse_range(s: &str) -> Result<Vec<u64>, String> {
    let mut out = Vec::new();
    for item in s.split(',') {
        let item = item.trim();
        match item.split_once("..") {
            Some((lo, hi)) => {
                let lo: u64 = lo.trim().parse().map_err(|e| format!("{lo:?}: {e}"))?;
                let hi: u64 = hi.trim().parse().map_err(|e| format!("{hi:?}: {e}"))?;
                if hi < lo {
                    return Err(format!("empty range {item:?}"));
                }
                out.extend(lo..=hi);
            }
            None => out.push(item.parse().map_err(|e| format!("{item:?}: {e}"))?),
        }
    }
    if out.is_empty() {
        return Err("empty index list".into());
    }
    Ok(out)
}

/// Canonical continued-fraction string for an angle, used as the `alpha`
/// field of JSON output.
pub fn alpha_cf_string(alpha: &QuadraticIrrational) -> String {
    alpha
        .continued_fraction()
        .map(|cf| cf.to_string())
        .unwrap_or_else(|_| alpha.to_string())
}
