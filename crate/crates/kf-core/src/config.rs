//! JSON (de)serialization of the control-function configuration.
//!
//! Schema:
//!
//! ```json
//! {
//!   "alpha": "2",
//!   "breakpoints": [[1, "2"], [4, "5"], [6, "6"]],
//!   "tail": {"kind": "log3"}
//! }
//! ```
//!
//! Rationals are integers or `"p/q"` strings; table tails use
//! `{"kind": "table", "values": [[7, "13/2"], ...]}` and slow tails
//! `{"kind": "slow_table", "values": [...]}`.

use serde_json::Value;

use crate::error::{Error, Result};
use crate::predim::{GoodFunction, Tail};
use crate::rational::{q_from_json, q_json, Q};

fn parse_pairs(v: &Value, what: &str) -> Result<Vec<(u64, Q)>> {
    let arr = v.as_array().ok_or_else(|| Error::Parse {
        line: 0,
        msg: format!("`{what}` must be an array of [size, value] pairs"),
    })?;
    arr.iter()
        .map(|pair| {
            let p = pair.as_array().filter(|p| p.len() == 2).ok_or_else(|| Error::Parse {
                line: 0,
                msg: format!("each `{what}` entry must be a [size, value] pair"),
            })?;
            let n = p[0].as_u64().ok_or_else(|| Error::Parse {
                line: 0,
                msg: format!("`{what}` sizes must be non-negative integers"),
            })?;
            Ok((n, q_from_json(&p[1])?))
        })
        .collect()
}

/// Parses a configuration document.
pub fn good_function_from_json(input: &str) -> Result<GoodFunction> {
    let v: Value = serde_json::from_str(input).map_err(|e| Error::Parse {
        line: e.line(),
        msg: e.to_string(),
    })?;
    let obj = v.as_object().ok_or_else(|| Error::Parse {
        line: 0,
        msg: "configuration must be a JSON object".into(),
    })?;
    let alpha = match obj.get("alpha") {
        Some(a) => q_from_json(a)?,
        None => crate::rational::q(2),
    };
    let breakpoints = match obj.get("breakpoints") {
        Some(b) => parse_pairs(b, "breakpoints")?,
        None => GoodFunction::standard().breakpoints_cloned(),
    };
    let tail = match obj.get("tail") {
        None => Tail::LogBase3,
        Some(t) => {
            let kind = t
                .get("kind")
                .and_then(|k| k.as_str())
                .ok_or_else(|| Error::Parse {
                    line: 0,
                    msg: "tail needs a `kind` field".into(),
                })?;
            match kind {
                "log3" => Tail::LogBase3,
                "table" => Tail::RationalTable(parse_pairs(
                    t.get("values").unwrap_or(&Value::Null),
                    "tail.values",
                )?),
                "slow_table" => Tail::SlowTable(parse_pairs(
                    t.get("values").unwrap_or(&Value::Null),
                    "tail.values",
                )?),
                other => {
                    return Err(Error::Parse {
                        line: 0,
                        msg: format!("unknown tail kind `{other}`"),
                    })
                }
            }
        }
    };
    GoodFunction::new(alpha, breakpoints, tail)
}

/// Serializes a configuration back to the JSON schema.
pub fn good_function_to_json(cfg: &GoodFunction) -> Value {
    let pairs = |v: &[(u64, Q)]| -> Value {
        Value::Array(
            v.iter()
                .map(|(n, val)| serde_json::json!([n, q_json(val)]))
                .collect(),
        )
    };
    let tail = match cfg.tail() {
        Tail::LogBase3 => serde_json::json!({"kind": "log3"}),
        Tail::RationalTable(v) => serde_json::json!({"kind": "table", "values": pairs(v)}),
        Tail::SlowTable(v) => serde_json::json!({"kind": "slow_table", "values": pairs(v)}),
    };
    serde_json::json!({
        "alpha": q_json(cfg.alpha()),
        "breakpoints": pairs(&cfg.breakpoints_cloned()),
        "tail": tail,
    })
}
