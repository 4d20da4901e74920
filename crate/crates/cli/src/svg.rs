//! Deterministic SVG renderings of the factor/interval bijection and the
//! rotation coding. All coordinates are exact values rendered to six
//! decimals; no floating point, no timestamps, so repeated runs are
//! byte-identical.

use std::fmt::Write;

use num_bigint::BigInt;
use sturmian_abelian::exact::{QuadraticIrrational, Rational};
use sturmian_abelian::sturmian::{partition, Convention, IntervalPartition, SturmianSpec};
use sturmian_abelian::words::word_string;

const HEAVY_FILL: &str = "#c9c9c9";
const LIGHT_FILL: &str = "#f2f2f2";

fn d6(x: &QuadraticIrrational) -> String {
    x.to_decimal(6)
}

fn scaled(x: &QuadraticIrrational, factor: i64, offset: i64) -> String {
    let value = &x.scale(&Rational::from_integer(BigInt::from(factor)))
        + &QuadraticIrrational::from_integer(offset);
    d6(&value)
}

/// The unit segment cut at `{−iα}`, intervals shaded by weight and labeled
/// with their factors.
pub fn partition_svg(
    alpha: &QuadraticIrrational,
    m: u64,
    convention: Convention,
) -> Result<String, String> {
    if m > 200 {
        return Err("partition drawings are limited to m <= 200".into());
    }
    let part: IntervalPartition = partition(alpha, m, convention).map_err(|e| e.to_string())?;
    let mut out = String::new();
    out.push_str(concat!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" ",
        "viewBox=\"0 0 1000 240\" font-family=\"monospace\">\n"
    ));
    let _ = writeln!(
        out,
        "  <title>factors of length {m} for alpha = {alpha}</title>"
    );
    let _ = writeln!(
        out,
        "  <text x=\"40\" y=\"24\" font-size=\"12\">alpha = {} ~ {}   m = {}</text>",
        alpha,
        d6(alpha),
        m
    );
    let _ = writeln!(
        out,
        "  <rect x=\"700\" y=\"12\" width=\"14\" height=\"14\" fill=\"{HEAVY_FILL}\" stroke=\"#555\"/>\n  \
         <text x=\"720\" y=\"24\" font-size=\"12\">heavy</text>\n  \
         <rect x=\"790\" y=\"12\" width=\"14\" height=\"14\" fill=\"{LIGHT_FILL}\" stroke=\"#555\"/>\n  \
         <text x=\"810\" y=\"24\" font-size=\"12\">light</text>"
    );
    // intervals
    for iv in &part.intervals {
        let x = scaled(&iv.left, 920, 40);
        let width = d6(&(&iv.right - &iv.left).scale(&Rational::from_integer(BigInt::from(920))));
        let fill = if iv.heavy { HEAVY_FILL } else { LIGHT_FILL };
        let _ = writeln!(
            out,
            "  <rect x=\"{x}\" y=\"120\" width=\"{width}\" height=\"26\" fill=\"{fill}\" stroke=\"#555\" stroke-width=\"0.5\"/>"
        );
        let midpoint =
            &(&iv.left + &iv.right).scale(&Rational::new(BigInt::from(1), BigInt::from(2)));
        let mx = scaled(midpoint, 920, 40);
        let label = word_string(&iv.factor);
        if m <= 8 {
            let _ = writeln!(
                out,
                "  <text x=\"{mx}\" y=\"110\" font-size=\"11\" text-anchor=\"middle\">{label}</text>"
            );
        } else {
            let _ = writeln!(
                out,
                "  <text x=\"{mx}\" y=\"110\" font-size=\"9\" text-anchor=\"start\" transform=\"rotate(-45 {mx} 110)\">{label}</text>"
            );
        }
    }
    // boundary ticks
    for b in &part.boundaries {
        let x = scaled(b, 920, 40);
        let _ = writeln!(
            out,
            "  <line x1=\"{x}\" y1=\"114\" x2=\"{x}\" y2=\"152\" stroke=\"#222\" stroke-width=\"0.8\"/>"
        );
        let _ = writeln!(
            out,
            "  <text x=\"{x}\" y=\"166\" font-size=\"8\" text-anchor=\"start\" transform=\"rotate(45 {x} 166)\">{}</text>",
            d6(b)
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// The rotation view: the coding circle with the two coding arcs and the
/// first orbit points of the word. Arc extents and point angles are placed
/// with exact fractions of the circumference via `pathLength`, so the
/// browser does the trigonometry.
pub fn circle_svg(spec: &SturmianSpec, steps: u64) -> Result<String, String> {
    if steps > 400 {
        return Err("rotation drawings are limited to 400 steps".into());
    }
    let alpha = spec.alpha();
    let boundary = &QuadraticIrrational::one() - alpha; // 1 − α
    let mut out = String::new();
    out.push_str(concat!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" ",
        "viewBox=\"0 0 720 760\" font-family=\"monospace\">\n"
    ));
    let _ = writeln!(out, "  <title>rotation coding, alpha = {alpha}</title>");
    let _ = writeln!(
        out,
        "  <text x=\"24\" y=\"28\" font-size=\"13\">alpha = {} ~ {}</text>",
        alpha,
        d6(alpha)
    );
    let _ = writeln!(
        out,
        "  <text x=\"24\" y=\"46\" font-size=\"13\">split 1-alpha ~ {}</text>",
        d6(&boundary)
    );
    // the torus position t maps to t turns clockwise from the top
    let len_b = d6(&boundary); // |I_b| = 1 − α
    let len_a = d6(alpha);
    out.push_str("  <g transform=\"rotate(-90 360 400)\">\n");
    let _ = writeln!(
        out,
        "    <circle cx=\"360\" cy=\"400\" r=\"250\" fill=\"none\" stroke=\"{LIGHT_FILL}\" stroke-width=\"34\" pathLength=\"1\" stroke-dasharray=\"{len_b} {len_a}\"/>"
    );
    let _ = writeln!(
        out,
        "    <circle cx=\"360\" cy=\"400\" r=\"250\" fill=\"none\" stroke=\"{HEAVY_FILL}\" stroke-width=\"34\" pathLength=\"1\" stroke-dasharray=\"0 {len_b} {len_a} 0\"/>"
    );
    out.push_str("  </g>\n");
    let _ = writeln!(
        out,
        "  <circle cx=\"360\" cy=\"400\" r=\"250\" fill=\"none\" stroke=\"#333\" stroke-width=\"1\"/>"
    );
    // arc labels: b on the I_b side, a on the I_a side
    out.push_str("  <text x=\"360\" y=\"136\" font-size=\"16\" text-anchor=\"middle\">b</text>\n");
    out.push_str("  <text x=\"360\" y=\"676\" font-size=\"16\" text-anchor=\"middle\">a</text>\n");
    // boundary marks at 0 and 1−α
    for (t, label) in [
        (QuadraticIrrational::zero(), "0".to_string()),
        (boundary.clone(), format!("1-alpha ~ {}", d6(&boundary))),
    ] {
        let turns = d6(&t.scale(&Rational::from_integer(BigInt::from(360))));
        let _ = writeln!(
            out,
            "  <g transform=\"rotate({turns} 360 400)\">\n    <line x1=\"360\" y1=\"128\" x2=\"360\" y2=\"172\" stroke=\"#222\"/>\n    <text x=\"368\" y=\"124\" font-size=\"11\">{label}</text>\n  </g>"
        );
    }
    // orbit points {ρ + nα}
    for n in 0..steps {
        let point = spec.point(n).value;
        let turns = d6(&point.scale(&Rational::from_integer(BigInt::from(360))));
        let _ = writeln!(
            out,
            "  <g transform=\"rotate({turns} 360 400)\">\n    <circle cx=\"360\" cy=\"150\" r=\"4\" fill=\"#d9402a\"/>\n    <text x=\"360\" y=\"196\" font-size=\"10\" text-anchor=\"middle\">{n}</text>\n  </g>"
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}
