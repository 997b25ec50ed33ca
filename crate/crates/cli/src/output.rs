use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use serde_json::Value;

/// Rounds to 15 significant digits; serde_json then prints the shortest
/// decimal that reads back to the rounded value.
pub fn round_sig15(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.14e}").parse().unwrap_or(x)
}

pub fn round_reals(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            if let Some(r) = n.as_f64().map(round_sig15).and_then(serde_json::Number::from_f64) {
                *n = r;
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_reals),
        Value::Object(map) => map.values_mut().for_each(round_reals),
        _ => {}
    }
}

pub fn to_json_line(mut v: Value) -> String {
    round_reals(&mut v);
    serde_json::to_string_pretty(&v).expect("json value serializes")
}

pub fn sink(out: Option<&Path>) -> io::Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn rounding() {
        assert_eq!(round_sig15(0.1 + 0.2), 0.3);
        assert_eq!(round_sig15(1.0 / 3.0), 0.333333333333333);
        assert_eq!(round_sig15(0.0), 0.0);
        let mut v = json!({"a": [1.0000000000000002, 7], "b": "x"});
        round_reals(&mut v);
        assert_eq!(v.to_string(), r#"{"a":[1.0,7],"b":"x"}"#);
    }
}
