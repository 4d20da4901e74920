//! Table emitters. TSV goes out with tab separators, a header line and no
//! trailing whitespace; JSON follows the fixed schema
//! `{"table": id, "alpha": cf-string, "rows": [{"key":…, "value":…}]}` with
//! irrationals serialized as `{"a","b","c","d","approx"}`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use sturmian_abelian::exact::{QuadraticIrrational, Rational};
use sturmian_abelian::fibonacci;
use sturmian_abelian::formulas;
use sturmian_abelian::lagrange;
use sturmian_abelian::sturmian::SturmianSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Tsv,
    Json,
}

impl Format {
    pub fn parse(s: &str) -> Result<Self, String> {
        match s {
            "tsv" => Ok(Format::Tsv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format {other:?}: expected tsv or json")),
        }
    }
}

pub struct Table {
    pub id: &'static str,
    pub alpha_cf: String,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Row>,
}

pub struct Row {
    pub key: Value,
    pub value: Value,
    pub cells: Vec<String>,
}

fn int_value(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(small) => json!(small),
        None => json!(n.to_string()),
    }
}

fn qi_value(x: &QuadraticIrrational, digits: usize) -> Value {
    json!({
        "a": int_value(x.a()),
        "b": int_value(x.b()),
        "c": int_value(x.c()),
        "d": int_value(x.d()),
        "approx": x.to_decimal(digits),
    })
}

impl Table {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Tsv => {
                let mut out = self.columns.join("\t");
                for row in &self.rows {
                    out.push('\n');
                    out.push_str(&row.cells.join("\t"));
                }
                out.push('\n');
                out
            }
            Format::Json => {
                let rows: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|r| json!({"key": r.key, "value": r.value}))
                    .collect();
                let mut out = json!({
                    "table": self.id,
                    "alpha": self.alpha_cf,
                    "rows": rows,
                })
                .to_string();
                out.push('\n');
                out
            }
        }
    }
}

/// Maximum abelian-power exponent per period.
pub fn km(alpha: &QuadraticIrrational, alpha_cf: String, ms: &[u64]) -> Table {
    let rows = ms
        .iter()
        .map(|&m| {
            let k = formulas::max_exponent(alpha, m);
            Row {
                key: json!(m),
                value: json!(k),
                cells: vec![m.to_string(), k.to_string()],
            }
        })
        .collect();
    Table {
        id: "km",
        alpha_cf,
        columns: vec!["m", "k_m"],
        rows,
    }
}

/// Maximum exponent per period and position.
pub fn kmn(spec: &SturmianSpec, alpha_cf: String, ms: &[u64], ns: &[u64]) -> Table {
    let mut rows = Vec::with_capacity(ms.len() * ns.len());
    for &m in ms {
        for &n in ns {
            let k = formulas::max_exponent_at(spec, m, n).exponent;
            rows.push(Row {
                key: json!([m, n]),
                value: json!(k),
                cells: vec![m.to_string(), n.to_string(), k.to_string()],
            });
        }
    }
    Table {
        id: "kmn",
        alpha_cf,
        columns: vec!["m", "n", "k"],
        rows,
    }
}

/// Guaranteed exponent by anticipation.
pub fn kmi(
    alpha: &QuadraticIrrational,
    alpha_cf: String,
    m: u64,
    is: &[u64],
) -> Result<Table, String> {
    let mut rows = Vec::with_capacity(is.len());
    for &i in is {
        let k = formulas::guaranteed_exponent(alpha, m, i).map_err(|e| e.to_string())?;
        rows.push(Row {
            key: json!([m, i]),
            value: json!(k),
            cells: vec![m.to_string(), i.to_string(), k.to_string()],
        });
    }
    Ok(Table {
        id: "kmi",
        alpha_cf,
        columns: vec!["m", "i", "k"],
        rows,
    })
}

/// Distances to the nearest integer, `‖mα‖`.
pub fn norms(alpha: &QuadraticIrrational, alpha_cf: String, ms: &[u64], digits: usize) -> Table {
    let rows = ms
        .iter()
        .map(|&m| {
            let value = alpha
                .scale(&Rational::from_integer(BigInt::from(m)))
                .dist_nearest_int();
            Row {
                key: json!(m),
                value: qi_value(&value, digits),
                cells: vec![m.to_string(), value.to_decimal(digits)],
            }
        })
        .collect();
    Table {
        id: "norms",
        alpha_cf,
        columns: vec!["m", "norm"],
        rows,
    }
}

/// Longest abelian-repetition prefixes of the Fibonacci word.
pub fn lp(js: &[u64]) -> Result<Table, String> {
    let mut rows = Vec::with_capacity(js.len());
    for &j in js {
        if j < 2 {
            return Err(format!("lp needs j > 1, got {j}"));
        }
        let fib = fibonacci::fib(j as usize);
        let len = fibonacci::longest_prefix_repetition_len(j as usize);
        rows.push(Row {
            key: json!(j),
            value: json!({"fib": int_value(&fib), "lp": int_value(&len)}),
            cells: vec![j.to_string(), fib.to_string(), len.to_string()],
        });
    }
    Ok(Table {
        id: "lp",
        alpha_cf: "[0;|1]".into(),
        columns: vec!["j", "F_j", "lp"],
        rows,
    })
}

/// Minimum abelian periods of the finite Fibonacci words.
pub fn fibperiods(js: &[u64]) -> Result<Table, String> {
    let mut rows = Vec::with_capacity(js.len());
    for &j in js {
        let (index, period) =
            fibonacci::min_abelian_period_fib(j as usize).map_err(|e| e.to_string())?;
        rows.push(Row {
            key: json!(j),
            value: json!({"index": index, "period": int_value(&period)}),
            cells: vec![j.to_string(), index.to_string(), period.to_string()],
        });
    }
    Ok(Table {
        id: "fibperiods",
        alpha_cf: "[0;|1]".into(),
        columns: vec!["j", "period_index", "period"],
        rows,
    })
}

/// Deviations `|√5 − lp(F_j)/F_j²| · 100`.
pub fn sqrt5dev(js: &[u64], digits: usize) -> Result<Table, String> {
    let sqrt5 = lagrange::sqrt5();
    let mut rows = Vec::with_capacity(js.len());
    for &j in js {
        if j < 2 {
            return Err(format!("sqrt5dev needs j > 1, got {j}"));
        }
        let fib = fibonacci::fib(j as usize);
        let len = fibonacci::longest_prefix_repetition_len(j as usize);
        let ratio = Rational::new(len, &fib * &fib);
        let deviation = (&sqrt5 - &QuadraticIrrational::from_rational(&ratio))
            .abs()
            .scale(&Rational::new(BigInt::from(100), BigInt::from(1)));
        let rendered = deviation.to_decimal(digits);
        rows.push(Row {
            key: json!(j),
            value: json!(rendered),
            cells: vec![j.to_string(), rendered],
        });
    }
    Ok(Table {
        id: "sqrt5dev",
        alpha_cf: "[0;|1]".into(),
        columns: vec!["j", "deviation_x100"],
        rows,
    })
}
