//! Exact rational scalars used everywhere in the workbench.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number. All arithmetic in the workbench is exact; floating
/// point only appears in optional numeric cross-checks.
pub type Q = BigRational;

/// Integer as a rational.
pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// The fraction `p / r`.
pub fn q_ratio(p: i64, r: i64) -> Q {
    Q::new(BigInt::from(p), BigInt::from(r))
}

/// Parses `"p/q"` or `"p"` into an exact rational.
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let mk_err = || Error::Parse {
        line: 0,
        msg: format!("invalid rational `{s}`"),
    };
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| mk_err())?;
        let den: BigInt = den.trim().parse().map_err(|_| mk_err())?;
        if den.is_zero() {
            return Err(mk_err());
        }
        Ok(Q::new(num, den))
    } else {
        let num: BigInt = s.parse().map_err(|_| mk_err())?;
        Ok(Q::from_integer(num))
    }
}

/// Renders a rational as `"p"` or `"p/q"`.
pub fn q_str(v: &Q) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

/// Converts to a JSON value: an integer number when small and integral,
/// otherwise an exact string.
pub fn q_json(v: &Q) -> serde_json::Value {
    if v.denom().is_one() {
        if let Ok(n) = i64::try_from(v.numer().clone()) {
            return serde_json::Value::from(n);
        }
    }
    serde_json::Value::String(q_str(v))
}

/// Reads a rational from a JSON value (integer number or `"p/q"` string).
pub fn q_from_json(v: &serde_json::Value) -> Result<Q> {
    match v {
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(q(i))
            } else {
                Err(Error::Parse {
                    line: 0,
                    msg: format!("non-integer numeric rational `{n}`; use a \"p/q\" string"),
                })
            }
        }
        serde_json::Value::String(s) => parse_q(s),
        other => Err(Error::Parse {
            line: 0,
            msg: format!("expected rational, got `{other}`"),
        }),
    }
}

/// Floor of a rational as a `BigInt`.
pub fn q_floor(v: &Q) -> BigInt {
    v.floor().to_integer()
}

/// True when the value is a non-negative integer.
pub fn q_is_nat(v: &Q) -> bool {
    v.denom().is_one() && !v.numer().is_negative()
}
