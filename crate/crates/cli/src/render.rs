use std::io::{self, Write};

use bernoulli_core::{FixedReal, Rational};
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Text,
    Json,
}

/// `{"num": "-3617", "den": "510"}`
pub fn rational_json(q: &Rational) -> Value {
    json!({ "num": q.numer().to_string(), "den": q.denom().to_string() })
}

pub fn fixed_json(x: &FixedReal) -> Value {
    let digits = x.significant_decimal_digits();
    json!({
        "mantissa": x.mantissa().to_string(),
        "scale_bits": x.scale_bits(),
        "decimal": format!("{x:.digits$}"),
        "digits": digits,
    })
}

pub fn json_line(out: &mut impl Write, v: &Value) -> io::Result<()> {
    serde_json::to_writer(&mut *out, v)?;
    writeln!(out)
}
