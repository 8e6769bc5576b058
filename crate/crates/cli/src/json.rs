//! JSON rendering with every float at 17 significant digits.

use serde::Serialize;
use serde_json::Value;
use std::fmt::Write as _;

/// Renders `value` as indented JSON. Integers print as integers; all other
/// numbers print in `{:.16e}` scientific form, which round-trips exactly.
pub fn to_json_17<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("CLI outputs serialize to JSON");
    let mut out = String::new();
    write_value(&v, 0, &mut out);
    out.push('\n');
    out
}

/// Formats one float at 17 significant digits (non-finite values as `null`).
pub fn float17(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        "null".into()
    }
}

fn indent(level: usize, out: &mut String) {
    for _ in 0..level {
        out.push_str("  ");
    }
}

fn write_value(v: &Value, level: usize, out: &mut String) {
    match v {
        Value::Null => out.push_str("null"),
        Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Value::Number(n) => {
            if n.is_f64() {
                out.push_str(&float17(n.as_f64().expect("f64 number")));
            } else {
                let _ = write!(out, "{n}");
            }
        }
        Value::String(s) => out.push_str(&serde_json::to_string(s).expect("strings serialize")),
        Value::Array(items) => {
            if items.iter().all(|x| !x.is_array() && !x.is_object()) {
                out.push('[');
                for (i, x) in items.iter().enumerate() {
                    if i > 0 {
                        out.push_str(", ");
                    }
                    write_value(x, level, out);
                }
                out.push(']');
            } else {
                out.push_str("[\n");
                for (i, x) in items.iter().enumerate() {
                    indent(level + 1, out);
                    write_value(x, level + 1, out);
                    out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
                }
                indent(level, out);
                out.push(']');
            }
        }
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                indent(level + 1, out);
                out.push_str(&serde_json::to_string(k).expect("keys serialize"));
                out.push_str(": ");
                write_value(x, level + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            indent(level, out);
            out.push('}');
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_round_trip_and_integers_stay_integers() {
        let v = serde_json::json!({"a": 1.0 / 3.0, "n": 7, "xs": [0.1, -2.5e-300], "s": "q\"x"});
        let text = to_json_17(&v);
        assert!(text.contains("3.3333333333333331e-1"));
        assert!(text.contains("\"n\": 7"));
        let back: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(back, v);
    }
}
