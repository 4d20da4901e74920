//! Command-line front end: generate Sturmian words, emit the library's
//! tables as TSV or JSON, render SVG diagrams of the interval bijection and
//! the rotation coding, and run formula-vs-oracle verification sweeps.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage error,
//! 3 verification budget exceeded (partial report).

mod args;
mod svg;
mod tables;
mod verify_cmd;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use sturmian_abelian::exact::QuadraticIrrational;
use sturmian_abelian::lagrange;
use sturmian_abelian::sturmian::SturmianSpec;
use sturmian_abelian::words::word_string;

use crate::args::{alpha_cf_string, parse_alpha, parse_convention, parse_range, parse_rho};
use crate::tables::Format;

#[derive(Parser)]
#[command(
    name = "sturmian-abelian",
    version,
    about = "Exact abelian powers and repetitions in Sturmian words"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a stretch of a Sturmian word.
    Word {
        #[arg(long, default_value = "fib")]
        alpha: String,
        /// Initial point, e.g. "alpha", "0", "1/3", "4-6*alpha".
        #[arg(long, default_value = "alpha")]
        rho: String,
        #[arg(long, default_value = "zero-in-b")]
        convention: String,
        /// Number of letters to print.
        #[arg(long)]
        len: u64,
        /// First position.
        #[arg(long, default_value_t = 0)]
        start: u64,
    },
    /// Emit a table: km, kmn, kmi, norms, lp, fibperiods or sqrt5dev.
    Table {
        id: String,
        #[arg(long, default_value = "fib")]
        alpha: String,
        #[arg(long, default_value = "alpha")]
        rho: String,
        #[arg(long, default_value = "zero-in-b")]
        convention: String,
        /// Periods, e.g. "1..21" or "3,10".
        #[arg(long)]
        m: Option<String>,
        /// Positions, e.g. "0..20".
        #[arg(long)]
        n: Option<String>,
        /// Anticipations, e.g. "0..9".
        #[arg(long)]
        i: Option<String>,
        /// Fibonacci indices, e.g. "2..11".
        #[arg(long)]
        j: Option<String>,
        /// Decimal digits for irrational entries.
        #[arg(long)]
        digits: Option<usize>,
        #[arg(long, default_value = "tsv")]
        format: String,
    },
    /// Exact Lagrange constant (= abelian critical exponent) of an angle.
    Lagrange {
        #[arg(long, default_value = "fib")]
        alpha: String,
        /// Depth of the certified rational lower bound.
        #[arg(long, default_value_t = 40)]
        depth: usize,
    },
    /// Check closed forms against the brute-force oracle:
    /// km, kmn, lp, fibperiods or factors.
    Verify {
        target: String,
        #[arg(long, default_value = "fib")]
        alpha: String,
        #[arg(long, default_value = "alpha")]
        rho: String,
        #[arg(long, default_value = "zero-in-b")]
        convention: String,
        #[arg(long)]
        m: Option<String>,
        #[arg(long)]
        n: Option<String>,
        #[arg(long)]
        j: Option<String>,
        /// Maximum factor length for the factors target.
        #[arg(long, default_value_t = 50)]
        max_len: u64,
    },
    /// Render an SVG diagram: partition or circle.
    Svg {
        kind: String,
        #[arg(long, default_value = "fib")]
        alpha: String,
        #[arg(long, default_value = "alpha")]
        rho: String,
        #[arg(long, default_value = "zero-in-b")]
        convention: String,
        /// Factor length for the partition view.
        #[arg(long, default_value_t = 6)]
        m: u64,
        /// Orbit points for the circle view.
        #[arg(long, default_value_t = 15)]
        steps: u64,
    },
}

fn build_spec(
    alpha: &str,
    rho: &str,
    convention: &str,
) -> Result<(SturmianSpec, QuadraticIrrational), String> {
    let alpha = parse_alpha(alpha)?;
    let (u, v) = parse_rho(rho)?;
    let convention = parse_convention(convention)?;
    let spec = SturmianSpec::new(alpha.clone(), u, v, convention).map_err(|e| e.to_string())?;
    Ok((spec, alpha))
}

fn range_or(opt: &Option<String>, default: &str) -> Result<Vec<u64>, String> {
    parse_range(opt.as_deref().unwrap_or(default))
}

/// Periods must be positive; 0 is representable in a range but meaningless.
fn periods_or(opt: &Option<String>, default: &str) -> Result<Vec<u64>, String> {
    let ms = range_or(opt, default)?;
    if ms.contains(&0) {
        return Err("periods must be positive".into());
    }
    Ok(ms)
}

fn run() -> Result<u8, String> {
    match Cli::parse().command {
        Command::Word {
            alpha,
            rho,
            convention,
            len,
            start,
        } => {
            let (spec, _) = build_spec(&alpha, &rho, &convention)?;
            let letters: Vec<_> = spec.letters(start).take(len as usize).collect();
            println!("{}", word_string(&letters));
            Ok(0)
        }
        Command::Table {
            id,
            alpha,
            rho,
            convention,
            m,
            n,
            i,
            j,
            digits,
            format,
        } => {
            let format = Format::parse(&format)?;
            let table = match id.as_str() {
                "km" => {
                    let a = parse_alpha(&alpha)?;
                    let cf = alpha_cf_string(&a);
                    tables::km(&a, cf, &periods_or(&m, "1..21")?)
                }
                "kmn" => {
                    let (spec, a) = build_spec(&alpha, &rho, &convention)?;
                    let cf = alpha_cf_string(&a);
                    tables::kmn(&spec, cf, &periods_or(&m, "3,10")?, &range_or(&n, "0..20")?)
                }
                "kmi" => {
                    let a = parse_alpha(&alpha)?;
                    let cf = alpha_cf_string(&a);
                    let ms = periods_or(&m, "10")?;
                    if ms.len() != 1 {
                        return Err("kmi takes a single period".into());
                    }
                    let default_i = format!("0..{}", ms[0].saturating_sub(1));
                    tables::kmi(&a, cf, ms[0], &range_or(&i, &default_i)?)?
                }
                "norms" => {
                    let a = parse_alpha(&alpha)?;
                    let cf = alpha_cf_string(&a);
                    tables::norms(&a, cf, &periods_or(&m, "1..18")?, digits.unwrap_or(6))
                }
                "lp" => tables::lp(&range_or(&j, "2..11")?)?,
                "fibperiods" => tables::fibperiods(&range_or(&j, "3..16")?)?,
                "sqrt5dev" => tables::sqrt5dev(&range_or(&j, "2..11")?, digits.unwrap_or(3))?,
                other => return Err(format!("unknown table id {other:?}")),
            };
            print!("{}", table.render(format));
            Ok(0)
        }
        Command::Lagrange { alpha, depth } => {
            if depth < 2 {
                return Err("depth must be at least 2".into());
            }
            let a = parse_alpha(&alpha)?;
            let cf = a.continued_fraction().map_err(|e| e.to_string())?;
            let value = lagrange::lagrange_constant(&cf);
            let bound = lagrange::lagrange_lower_bound(&cf, depth);
            let bound_qi = QuadraticIrrational::from_rational(&bound);
            println!("alpha\t{cf}");
            println!(
                "constant\t({},{},{},{})\t{}",
                value.exact.a(),
                value.exact.b(),
                value.exact.c(),
                value.exact.d(),
                value.exact.to_decimal(6)
            );
            println!("witness_residue\t{}", value.witness_residue);
            println!(
                "lower_bound\t{}/{}\t{}\tdepth={}",
                bound.numer(),
                bound.denom(),
                bound_qi.to_decimal(6),
                depth
            );
            Ok(0)
        }
        Command::Verify {
            target,
            alpha,
            rho,
            convention,
            m,
            n,
            j,
            max_len,
        } => {
            let outcome = match target.as_str() {
                "km" => {
                    let a = parse_alpha(&alpha)?;
                    let label = alpha_cf_string(&a);
                    verify_cmd::km(&a, &label, periods_or(&m, "1..21")?)?
                }
                "kmn" => {
                    let (spec, a) = build_spec(&alpha, &rho, &convention)?;
                    let label = alpha_cf_string(&a);
                    verify_cmd::kmn(
                        spec,
                        &label,
                        &rho,
                        periods_or(&m, "1..10")?,
                        range_or(&n, "0..100")?,
                    )?
                }
                "lp" => verify_cmd::lp(range_or(&j, "2..8")?)?,
                "fibperiods" => verify_cmd::fibperiods(range_or(&j, "3..13")?)?,
                "factors" => verify_cmd::factors(max_len)?,
                other => return Err(format!("unknown verify target {other:?}")),
            };
            match outcome {
                verify_cmd::Outcome::Pass { cells, clamped } => {
                    println!("ok: {cells} cells agree");
                    Ok(if clamped { 3 } else { 0 })
                }
                verify_cmd::Outcome::Fail(line) => {
                    println!("MISMATCH {line}");
                    Ok(1)
                }
            }
        }
        Command::Svg {
            kind,
            alpha,
            rho,
            convention,
            m,
            steps,
        } => {
            let document = match kind.as_str() {
                "partition" => {
                    let a = parse_alpha(&alpha)?;
                    let c = parse_convention(&convention)?;
                    svg::partition_svg(&a, m, c)?
                }
                "circle" => {
                    let (spec, _) = build_spec(&alpha, &rho, &convention)?;
                    svg::circle_svg(&spec, steps)?
                }
                other => return Err(format!("unknown svg kind {other:?}")),
            };
            print!("{document}");
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
