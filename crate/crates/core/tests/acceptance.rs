//! Acceptance suite: one test per criterion, each printing a PASS line and
//! enforcing its runtime budget. Run with `--nocapture` to see the lines.

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use common::*;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use sturmian_abelian::exact::{ContinuedFraction, QuadraticIrrational, Rational};
use sturmian_abelian::fibonacci;
use sturmian_abelian::formulas;
use sturmian_abelian::lagrange;
use sturmian_abelian::oracle;
use sturmian_abelian::sturmian::{partition, Convention, SturmianSpec};
use sturmian_abelian::verify;

fn finish(name: &str, detail: &str, started: Instant, budget_secs: u64) {
    let elapsed = started.elapsed();
    println!("PASS {name}: {detail} [{elapsed:.2?}]");
    assert!(
        elapsed.as_secs() < budget_secs,
        "{name} exceeded its {budget_secs}s budget: {elapsed:?}"
    );
}

#[test]
fn criterion_01_max_exponents_by_period() {
    let started = Instant::now();
    let expected = [
        2u64, 4, 6, 2, 11, 3, 3, 17, 2, 5, 4, 2, 29, 2, 3, 8, 2, 8, 3, 2, 46,
    ];
    let alpha = fib_angle();
    for (i, want) in expected.iter().enumerate() {
        let m = i as u64 + 1;
        assert_eq!(formulas::max_exponent(&alpha, m), *want, "m={m}");
    }
    let ms: Vec<u64> = (1..=21).collect();
    let sweep = verify::km_sweep(&alpha, "[0;|1]", &ms).unwrap();
    assert_eq!(sweep, Ok(21), "oracle sweep: {sweep:?}");
    finish(
        "criterion 01",
        "k_m for m=1..21 matches and the oracle confirms each on 20·m·k letters",
        started,
        30,
    );
}

#[test]
fn criterion_02_max_exponents_by_position() {
    let started = Instant::now();
    let f = fib_word_spec();
    let row3: Vec<u64> = (0..=20)
        .map(|n| formulas::max_exponent_at(&f, 3, n).exponent)
        .collect();
    assert_eq!(
        row3,
        [4, 1, 5, 3, 1, 4, 2, 6, 3, 1, 5, 2, 1, 4, 1, 6, 3, 1, 5, 2, 6]
    );
    let row10: Vec<u64> = (0..=20)
        .map(|n| formulas::max_exponent_at(&f, 10, n).exponent)
        .collect();
    assert_eq!(
        row10,
        [2, 4, 1, 2, 5, 1, 3, 1, 2, 4, 1, 3, 5, 1, 4, 1, 2, 4, 1, 3, 1]
    );
    let specs = vec![(f, "rho=alpha".to_string())];
    let sweep = verify::kmn_sweep(&specs, "[0;|1]", &[3, 10], 20).unwrap();
    assert_eq!(sweep, Ok(42), "oracle sweep: {sweep:?}");
    finish(
        "criterion 02",
        "k_{m,n} rows for m=3 and m=10, n=0..20, match and agree with the oracle",
        started,
        10,
    );
}

#[test]
fn criterion_03_guaranteed_exponents() {
    let started = Instant::now();
    let expected = [1u64, 2, 3, 3, 4, 4, 4, 4, 4, 4];
    for (i, want) in expected.iter().enumerate() {
        assert_eq!(
            formulas::guaranteed_exponent(&fib_angle(), 10, i as u64),
            Ok(*want),
            "anticipation {i}"
        );
    }
    finish(
        "criterion 03",
        "guaranteed exponents for period 10, anticipation 0..9",
        started,
        5,
    );
}

/// Round-half-up of a nonnegative decimal-scaled integer: value/10 at the
/// last digit.
fn halve_digit(scaled: &BigInt) -> BigInt {
    (scaled + BigInt::from(5)).div_floor(&BigInt::from(10))
}

#[test]
fn criterion_04_norm_table() {
    let started = Instant::now();
    let published = [
        "0.38", "0.24", "0.15", "0.47", "0.09", "0.29", "0.33", "0.06", "0.44", "0.18", "0.20",
        "0.42", "0.03", "0.35", "0.27", "0.11", "0.49", "0.13",
    ];
    let alpha = fib_angle();
    for (i, want) in published.iter().enumerate() {
        let m = i as u64 + 1;
        let value = norm(&alpha, m);
        // The published row was produced by rounding a three-decimal table
        // to two decimals; reproduce that pipeline exactly.
        let thousandths = {
            let scaled = value.scale(&rational(1000, 1));
            let floor = scaled.floor();
            let half = QuadraticIrrational::new(1, 0, 2, 1).unwrap();
            if scaled.frac() >= half {
                floor + 1
            } else {
                floor
            }
        };
        let hundredths = halve_digit(&thousandths);
        let two_stage = format!(
            "{}.{:02}",
            &hundredths / BigInt::from(100),
            (&hundredths % BigInt::from(100)).to_u64().unwrap()
        );
        assert_eq!(two_stage, *want, "m={m}");
        // Direct certified rendering agrees everywhere except m=18, where
        // 0.12461 rounds to 0.12 in one step but to 0.13 through the
        // three-decimal intermediate.
        let direct = value.to_decimal(2);
        if m == 18 {
            assert_eq!(direct, "0.12");
        } else {
            assert_eq!(direct, *want, "m={m}");
        }
    }
    // Record lows of ‖m(φ−1)‖ sit exactly at the Fibonacci numbers.
    let mut records = Vec::new();
    let mut best: Option<QuadraticIrrational> = None;
    for m in 1..=18u64 {
        let value = norm(&alpha, m);
        if best.as_ref().is_none_or(|b| value < *b) {
            records.push(m);
            best = Some(value);
        }
    }
    assert_eq!(records, [1, 2, 3, 5, 8, 13]);
    finish(
        "criterion 04",
        "‖m(φ−1)‖ for m=1..18 reproduces the published two-decimal row \
         (m=18 documented as a double-rounding artifact); record minima at Fibonacci m",
        started,
        5,
    );
}

#[test]
fn criterion_05_longest_prefix_repetitions() {
    let started = Instant::now();
    let expected = [8u64, 19, 58, 142, 388, 985, 2616, 6763, 17798, 46366];
    for (j, want) in (2..=11).zip(expected) {
        assert_eq!(
            fibonacci::longest_prefix_repetition_len(j),
            BigInt::from(want),
            "j={j}"
        );
    }
    // oracle confirmation for j ≤ 6 over a 500-letter prefix
    let word = fib_word_spec().prefix(500);
    for j in 2..=6usize {
        let m = fibonacci::fib_u64(j);
        let scanned = oracle::longest_prefix_repetition(&word, m).unwrap();
        assert_eq!(
            BigInt::from(scanned.len()),
            fibonacci::longest_prefix_repetition_len(j),
            "j={j}"
        );
    }
    // deviation row |√5 − lp(F_j)/F_j²|·10², at each entry's printed precision
    let printed = [
        ("23.6", 1usize),
        ("12.5", 1),
        ("8.393", 3),
        ("1.732", 3),
        ("5.98", 2),
        ("0.25", 2),
        ("2.69", 2),
        ("0.037", 3),
        ("1.087", 3),
        ("0.005", 3),
    ];
    let sqrt5 = lagrange::sqrt5();
    for (j, (want, digits)) in (2..=11).zip(printed) {
        let fj = fibonacci::fib(j);
        let lp = fibonacci::longest_prefix_repetition_len(j);
        let ratio = Rational::new(lp, &fj * &fj);
        let deviation = (&sqrt5 - &QuadraticIrrational::from_rational(&ratio))
            .abs()
            .scale(&rational(100, 1));
        assert_eq!(deviation.to_decimal(digits), want, "j={j}");
    }
    finish(
        "criterion 05",
        "lp(F_j) for j=2..11, oracle-confirmed through j=6, deviations at printed precision",
        started,
        60,
    );
}

#[test]
fn criterion_06_min_periods_of_fibonacci_words() {
    let started = Instant::now();
    let expected_indices = [2usize, 2, 2, 3, 4, 4, 4, 5, 6, 6, 6, 7, 8, 8];
    for (j, want) in (3..=16).zip(expected_indices) {
        let (index, value) = fibonacci::min_abelian_period_fib(j).unwrap();
        assert_eq!(index, want, "j={j}");
        assert_eq!(value, fibonacci::fib(want), "j={j}");
    }
    let js: Vec<usize> = (3..=13).collect();
    let sweep = verify::fib_period_sweep(&js).unwrap();
    assert_eq!(sweep, Ok(11), "oracle sweep: {sweep:?}");
    finish(
        "criterion 06",
        "minimum abelian periods of f_3..f_16 match; oracle agrees through f_13",
        started,
        60,
    );
}

#[test]
fn criterion_07_lagrange_exactness() {
    let started = Instant::now();
    let cases = [
        ("[0;|1]", QuadraticIrrational::new(0, 1, 1, 5).unwrap()),
        ("[0;|2]", QuadraticIrrational::new(0, 2, 1, 2).unwrap()),
        ("[0;|2,1]", QuadraticIrrational::new(0, 2, 1, 3).unwrap()),
    ];
    let eps = QuadraticIrrational::new(1, 0, 1_000_000, 1).unwrap();
    for (text, exact) in &cases {
        let cf: ContinuedFraction = text.parse().unwrap();
        let value = lagrange::lagrange_constant(&cf);
        assert_eq!(value.exact, *exact, "{text}");
        let lb = lagrange::lagrange_lower_bound(&cf, 60);
        let lb = QuadraticIrrational::from_rational(&lb);
        assert!(lb <= *exact, "{text}");
        assert!(exact - &lb < eps, "{text} not within 1e-6 at depth 60");
    }
    finish(
        "criterion 07",
        "exact constants √5, √8, 2√3 with depth-60 bounds within 1e-6",
        started,
        5,
    );
}

#[test]
fn criterion_08_sqrt5_floor_of_the_spectrum() {
    let started = Instant::now();
    let sqrt5 = lagrange::sqrt5();
    let golden: ContinuedFraction = "[0;|1]".parse().unwrap();
    let mut rng = TestRng::new(0x50ede11d);
    let mut equal_seen = 0;
    for case in 0..200 {
        // every fourth case is equivalent to the golden expansion
        let period: Vec<BigInt> = if case % 4 == 0 {
            vec![BigInt::from(1)]
        } else {
            (0..1 + rng.below(6))
                .map(|_| BigInt::from(rng.range_i64(1, 9)))
                .collect()
        };
        let mut pre = vec![BigInt::zero()];
        for _ in 0..rng.below(4) {
            pre.push(BigInt::from(rng.range_i64(1, 9)));
        }
        let cf = ContinuedFraction::new(pre, period).unwrap();
        let value = lagrange::lagrange_constant(&cf);
        assert!(value.exact >= sqrt5, "{cf}");
        let equivalent = lagrange::are_equivalent(&cf, &golden);
        assert_eq!(value.exact == sqrt5, equivalent, "{cf}");
        equal_seen += equivalent as usize;
    }
    assert!(equal_seen >= 50, "corpus must exercise the equality case");
    finish(
        "criterion 08",
        "200 random expansions all at or above √5, equality exactly on the golden class",
        started,
        30,
    );
}

#[test]
fn criterion_09_factor_periods_are_fibonacci() {
    let started = Instant::now();
    let report = fibonacci::verify_factor_periods(50).unwrap();
    assert!(
        report.all_fibonacci(),
        "violations: {:?}",
        report.violations
    );
    assert_eq!(report.factors_checked(), (2..=51).sum::<u64>());
    // control: another angle admits a non-Fibonacci minimum abelian period
    let alpha = sqrt3_angle();
    let spec = SturmianSpec::characteristic(alpha.clone(), Convention::ZeroInB).unwrap();
    let factor = spec.factor(35, 40);
    assert_eq!(oracle::min_abelian_period(&factor), Ok(6));
    assert!(
        sturmian_abelian::exact::smallest_better(&alpha, &BigInt::from(6)).is_err(),
        "6 must not be a convergent denominator of (−1+√3)/2"
    );
    finish(
        "criterion 09",
        "all 1325 factors of length ≤ 50 have Fibonacci periods; the √3 control does not",
        started,
        120,
    );
}

#[test]
fn criterion_10_structural_invariants() {
    let started = Instant::now();
    let alpha = fib_angle();

    // factor complexity and lexicographic order, m ≤ 100
    for angle in [fib_angle(), sqrt3_angle(), sqrt2_angle()] {
        for m in 1..=100u64 {
            let part = partition(&angle, m, Convention::ZeroInB).unwrap();
            let factors: Vec<_> = part.factors().collect();
            assert_eq!(factors.len(), m as usize + 1);
            assert_eq!(
                factors.iter().collect::<BTreeSet<_>>().len(),
                m as usize + 1
            );
            assert!(factors.windows(2).all(|w| w[0] > w[1]));
        }
    }

    // refinement by one point
    for m in 1..=60u64 {
        let coarse = partition(&alpha, m, Convention::ZeroInB).unwrap();
        let fine = partition(&alpha, m + 1, Convention::ZeroInB).unwrap();
        let mut expected = coarse.boundaries.clone();
        expected.push(
            &QuadraticIrrational::one()
                - &alpha
                    .scale(&Rational::from_integer(BigInt::from(m + 1)))
                    .frac(),
        );
        expected.sort();
        assert_eq!(fine.boundaries, expected);
    }

    // three-distance: at most two interval lengths at m = F_k − 1, equal to
    // the predicted pair once F_k ≥ 3
    for k in 2..=12usize {
        let m = fibonacci::fib_u64(k);
        let part = partition(&alpha, m - 1, Convention::ZeroInB).unwrap();
        let lengths = part.distinct_lengths();
        assert!(lengths.len() <= 2, "k={k}");
        if m >= 3 {
            assert_eq!(
                lengths,
                formulas::three_distance_lengths(&alpha, k).unwrap(),
                "k={k}"
            );
        }
    }

    // ordering of chain points, away from the boundary orbit
    let f = fib_word_spec();
    let half = QuadraticIrrational::new(1, 0, 2, 1).unwrap();
    for m in 1..=10u64 {
        let ma = alpha.scale(&Rational::from_integer(BigInt::from(m))).frac();
        let rising = ma < half;
        for n in 0..60u64 {
            let k = formulas::max_exponent_at(&f, m, n).exponent;
            if k < 2 {
                continue;
            }
            let points: Vec<_> = (0..k).map(|i| f.point(n + i * m).value).collect();
            assert!(points
                .windows(2)
                .all(|w| if rising { w[0] < w[1] } else { w[0] > w[1] }));
        }
    }

    // closed form of the distance to each convergent
    for angle in [fib_angle(), sqrt3_angle()] {
        let cf = angle.continued_fraction().unwrap();
        let conv = cf.convergents(17);
        for i in 1..=15usize {
            let tail = cf.tail(i + 1).value();
            let n_i = QuadraticIrrational::new(
                conv[i].numerator.clone(),
                0,
                conv[i].denominator.clone(),
                1,
            )
            .unwrap();
            let m_i = QuadraticIrrational::from_integer(conv[i].denominator.clone());
            let m_prev = QuadraticIrrational::from_integer(conv[i - 1].denominator.clone());
            let rhs = &QuadraticIrrational::from_integer(if i % 2 == 0 { 1 } else { -1 })
                / &(&m_i * &(&(&tail * &m_i) + &m_prev));
            assert_eq!(&angle - &n_i, rhs, "i={i}");
        }
    }

    // expansion round-trip on a seeded corpus
    let mut rng = TestRng::new(0x0c0f_feed);
    for _ in 0..300 {
        let mut pre = vec![BigInt::from(rng.range_i64(-9, 9))];
        for _ in 0..rng.below(6) {
            pre.push(BigInt::from(rng.range_i64(1, 9)));
        }
        let period: Vec<BigInt> = (0..1 + rng.below(6))
            .map(|_| BigInt::from(rng.range_i64(1, 9)))
            .collect();
        let cf = ContinuedFraction::new(pre, period).unwrap();
        assert_eq!(cf.value().continued_fraction().unwrap(), cf);
    }

    finish(
        "criterion 10",
        "lex order, complexity, refinement, three-distance, chain ordering, \
         convergent identity, expansion round-trip: all exact",
        started,
        60,
    );
}
