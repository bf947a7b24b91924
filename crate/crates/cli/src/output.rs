//! Output formatting shared by every subcommand.

use clap::ValueEnum;
use serde::Serialize;
use serde_json::{Number, Value};

pub const SIGNIFICANT_DIGITS: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// Rounds to 12 significant digits; folds `-0.0` into `0.0`.
pub fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x.is_finite() { 0.0 } else { x };
    }
    let rounded: f64 = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x).parse().expect("formatted float parses");
    if rounded == 0.0 {
        0.0
    } else {
        rounded
    }
}

fn normalize(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = round_sig(n.as_f64().expect("f64 number"));
            Number::from_f64(x).map_or(Value::Null, Value::Number)
        }
        Value::Array(items) => Value::Array(items.into_iter().map(normalize).collect()),
        Value::Object(map) => Value::Object(map.into_iter().map(|(k, v)| (k, normalize(v))).collect()),
        other => other,
    }
}

/// Pretty JSON with every float rounded; non-finite values become `null`.
pub fn to_json<T: Serialize>(value: &T) -> anyhow::Result<String> {
    let v = normalize(serde_json::to_value(value)?);
    Ok(serde_json::to_string_pretty(&v)?)
}

/// Compact rendering for text tables; magnitudes below `1e-12` print as 0.
pub fn num(x: f64) -> String {
    let x = if x.abs() < 1e-12 { 0.0 } else { round_sig(x) };
    if x == x.trunc() && x.abs() < 1e12 {
        format!("{x:.0}")
    } else if x.abs() >= 1e-4 && x.abs() < 1e7 {
        let s = format!("{x:.10}");
        s.trim_end_matches('0').to_string()
    } else {
        format!("{x:.6e}")
    }
}

pub fn list(xs: &[f64]) -> String {
    xs.iter().map(|&x| num(x)).collect::<Vec<_>>().join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding() {
        assert_eq!(round_sig(1.0 / 3.0), 0.333333333333);
        assert_eq!(round_sig(-0.0), 0.0);
        assert!(round_sig(-0.0).is_sign_positive());
        assert_eq!(round_sig(1e-20), 1e-20);
        assert_eq!(round_sig(123_456_789.123_456_79), 123456789.123);
    }

    #[test]
    fn json_round_trips() {
        let s = to_json(&serde_json::json!({"a": [0.1 + 0.2, -0.0, 2.0, 7], "b": f64::NAN})).unwrap();
        let again = serde_json::to_string_pretty(&serde_json::from_str::<Value>(&s).unwrap()).unwrap();
        assert_eq!(s, again);
        assert!(s.contains("0.3"));
        assert!(s.contains("null"));
    }

    #[test]
    fn text_numbers() {
        assert_eq!(num(2.0), "2");
        assert_eq!(num(-0.5), "-0.5");
        assert_eq!(num(3f64.sqrt()), "1.7320508076");
        assert_eq!(num(4.9e-17), "0");
        assert_eq!(num(-2e-16), "0");
    }
}
