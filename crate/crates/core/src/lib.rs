//! Exact computation of abelian powers and repetitions in Sturmian words.
//!
//! A Sturmian word of angle `α` and initial point `ρ` is the coding of the
//! rotation orbit `{ρ + nα}` on the torus `[0, 1)`: positions falling in
//! `I_b = [0, 1−α)` are written `b`, the rest `a`. This crate restricts the
//! angle to quadratic irrationals, so every comparison the theory needs
//! (strict inequalities between torus points, membership of a point in the
//! exceptional orbit `{−rmα}`, equality of interval lengths) is decided with
//! exact integer arithmetic. There is no floating point anywhere in a decision
//! path; decimal output is produced by certified rounding of exact values.
//!
//! The crate has two halves that check each other:
//!
//! * closed forms ([`formulas`], [`lagrange`], [`fibonacci`]) computing
//!   maximum abelian-power exponents, guaranteed exponents, Lagrange
//!   constants and the special values attached to the Fibonacci word;
//! * word-level brute force ([`oracle`]) recomputing the same quantities by
//!   scanning generated prefixes, with no shared code path.
//!
//! [`verify`] wires the two together into sweep kernels used by the test
//! suite and the command-line `verify` subcommand.
//!
//! With the default `parallel` feature the oracle scans and verification
//! sweeps fan out with rayon; disabling it yields the same results from
//! purely sequential loops.
//!
//! ```
//! use sturmian_abelian::exact::QuadraticIrrational;
//! use sturmian_abelian::sturmian::{Convention, SturmianSpec};
//! use sturmian_abelian::words::word_string;
//! use sturmian_abelian::{formulas, lagrange, oracle};
//!
//! // the Fibonacci word: angle and initial point both (−1+√5)/2
//! let angle = QuadraticIrrational::new(-1, 1, 2, 5)?;
//! let f = SturmianSpec::characteristic(angle.clone(), Convention::ZeroInB)?;
//! assert_eq!(word_string(&f.prefix(15)), "abaababaabaabab");
//!
//! // the longest abelian power of period 5 has exponent ⌊1/‖5α‖⌋ = 11,
//! // and a brute-force scan of a prefix agrees
//! assert_eq!(formulas::max_exponent(&angle, 5), 11);
//! assert_eq!(oracle::max_power_exponent(&f.prefix(1200), 5), 11);
//!
//! // the abelian critical exponent of the word is the Lagrange constant √5
//! let exponent = lagrange::abelian_critical_exponent(&angle)?;
//! assert_eq!(exponent.exact, QuadraticIrrational::new(0, 1, 1, 5)?);
//! # Ok::<(), sturmian_abelian::Error>(())
//! ```

pub mod exact;
pub mod fibonacci;
pub mod formulas;
pub mod lagrange;
pub mod oracle;
pub mod sturmian;
pub mod verify;
pub mod words;

pub(crate) mod scan;

pub use exact::{ContinuedFraction, QuadraticIrrational, Rational};
pub use words::Letter;

/// Errors for operations with restricted domains.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("value is rational, not a quadratic irrational")]
    NotIrrational,
    #[error("invalid quadratic irrational: {0}")]
    InvalidQuadratic(String),
    #[error("invalid continued fraction: {0}")]
    InvalidContinuedFraction(String),
    #[error("{0} is not a convergent denominator of the angle")]
    NotConvergentDenominator(String),
    #[error("angle must be an irrational in (0, 1)")]
    AngleOutOfRange,
    #[error("initial point must satisfy 0 <= rho < 1")]
    InitialPointOutOfRange,
    #[error("word is empty")]
    EmptyWord,
    #[error("anticipation {anticipation} exceeds period {period}")]
    AnticipationTooLarge { anticipation: u64, period: u64 },
    #[error("no abelian power of period {period} starts at position {position}")]
    NoPowerAtPosition { period: u64, position: u64 },
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
