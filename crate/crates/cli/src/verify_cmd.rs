//! The `verify` subcommand: sweep the closed forms against the brute-force
//! oracle. Requests past the documented budgets are clamped; the clamped
//! part still runs and the process exits with code 3 to flag the partial
//! report.

use sturmian_abelian::exact::QuadraticIrrational;
use sturmian_abelian::fibonacci;
use sturmian_abelian::sturmian::SturmianSpec;
use sturmian_abelian::verify;

pub const MAX_M: u64 = 64;
pub const MAX_N: u64 = 2000;
pub const MAX_LP_J: u64 = 10;
pub const MAX_FIB_J: u64 = 14;
pub const MAX_FACTOR_LEN: u64 = 100;

pub enum Outcome {
    Pass { cells: usize, clamped: bool },
    Fail(String),
}

fn clamp(values: Vec<u64>, max: u64, what: &str) -> (Vec<u64>, bool) {
    let kept: Vec<u64> = values.iter().copied().filter(|v| *v <= max).collect();
    let clamped = kept.len() != values.len();
    if clamped {
        eprintln!("note: {what} above {max} exceed the verification budget; skipping them");
    }
    (kept, clamped)
}

pub fn km(alpha: &QuadraticIrrational, label: &str, ms: Vec<u64>) -> Result<Outcome, String> {
    let (ms, clamped) = clamp(ms, MAX_M, "periods");
    let outcome = verify::km_sweep(alpha, label, &ms).map_err(|e| e.to_string())?;
    Ok(match outcome {
        Ok(cells) => Outcome::Pass { cells, clamped },
        Err(mismatch) => Outcome::Fail(mismatch.to_string()),
    })
}

pub fn kmn(
    spec: SturmianSpec,
    label: &str,
    rho_label: &str,
    ms: Vec<u64>,
    ns: Vec<u64>,
) -> Result<Outcome, String> {
    let (ms, clamped_m) = clamp(ms, MAX_M, "periods");
    let (ns, clamped_n) = clamp(ns, MAX_N, "positions");
    let n_max = ns.iter().copied().max().ok_or("no positions left")?;
    let specs = vec![(spec, format!("rho={rho_label}"))];
    let outcome = verify::kmn_sweep(&specs, label, &ms, n_max).map_err(|e| e.to_string())?;
    Ok(match outcome {
        Ok(cells) => Outcome::Pass {
            cells,
            clamped: clamped_m || clamped_n,
        },
        Err(mismatch) => Outcome::Fail(mismatch.to_string()),
    })
}

pub fn lp(js: Vec<u64>) -> Result<Outcome, String> {
    let (js, clamped) = clamp(js, MAX_LP_J, "indices");
    let js: Vec<usize> = js.iter().map(|&j| j as usize).collect();
    if js.iter().any(|&j| j < 2) {
        return Err("lp needs indices j > 1".into());
    }
    let outcome = verify::lp_sweep(&js).map_err(|e| e.to_string())?;
    Ok(match outcome {
        Ok(cells) => Outcome::Pass { cells, clamped },
        Err(mismatch) => Outcome::Fail(mismatch.to_string()),
    })
}

pub fn fibperiods(js: Vec<u64>) -> Result<Outcome, String> {
    let (js, clamped) = clamp(js, MAX_FIB_J, "indices");
    let js: Vec<usize> = js.iter().map(|&j| j as usize).collect();
    let outcome = verify::fib_period_sweep(&js).map_err(|e| e.to_string())?;
    Ok(match outcome {
        Ok(cells) => Outcome::Pass { cells, clamped },
        Err(mismatch) => Outcome::Fail(mismatch.to_string()),
    })
}

pub fn factors(max_len: u64) -> Result<Outcome, String> {
    let clamped = max_len > MAX_FACTOR_LEN;
    if clamped {
        eprintln!(
            "note: factor lengths above {MAX_FACTOR_LEN} exceed the verification budget; clamping"
        );
    }
    let report =
        fibonacci::verify_factor_periods(max_len.min(MAX_FACTOR_LEN)).map_err(|e| e.to_string())?;
    Ok(if report.all_fibonacci() {
        Outcome::Pass {
            cells: report.factors_checked() as usize,
            clamped,
        }
    } else {
        let (word, period) = &report.violations[0];
        Outcome::Fail(format!(
            "factor {word} has non-Fibonacci minimum abelian period {period}"
        ))
    })
}
