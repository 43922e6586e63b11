//! JSON conventions shared by every interchange format.
//!
//! Integers are JSON numbers while `|x| <= 2^53` and decimal strings beyond that.
//! Rationals are `"p/q"` strings in lowest terms (`"p"` when `q = 1`).

use num::{BigInt, BigRational, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::error::{Error, Result};

const SAFE_INTEGER: i64 = 1 << 53;

pub fn int_to_json(x: &BigInt) -> Value {
    if x.abs() <= BigInt::from(SAFE_INTEGER) {
        let v: i64 = x.try_into().expect("bounded by 2^53");
        Value::from(v)
    } else {
        Value::String(x.to_string())
    }
}

pub fn int_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigInt::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(BigInt::from(u))
            } else {
                Err(Error::InvalidArgument(format!(
                    "{n} is not an exact integer; write large integers as decimal strings"
                )))
            }
        }
        Value::String(s) => s
            .trim()
            .parse::<BigInt>()
            .map_err(|_| Error::InvalidArgument(format!("{s:?} is not a decimal integer"))),
        other => Err(Error::InvalidArgument(format!(
            "expected an integer, found {other}"
        ))),
    }
}

pub fn int_vec_from_json(v: &Value) -> Result<Vec<BigInt>> {
    match v {
        Value::Array(items) => items.iter().map(int_from_json).collect(),
        other => Err(Error::InvalidArgument(format!(
            "expected an array of integers, found {other}"
        ))),
    }
}

pub fn int_vec_to_json(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(int_to_json).collect())
}

pub fn rational_to_string(q: &BigRational) -> String {
    if q.denom() == &BigInt::from(1) {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn rational_from_str(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidArgument(format!("{s:?} is not a rational \"p/q\""));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(p, q))
}

/// Parses JSON, reporting failures with a byte offset into `text`.
pub fn parse(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        offset: byte_offset(text, e.line(), e.column()),
        message: e.to_string(),
    })
}

/// Converts serde_json's 1-based line/column into a byte offset.
fn byte_offset(text: &str, line: usize, column: usize) -> usize {
    if line == 0 {
        return 0;
    }
    let start: usize = text
        .split_inclusive('\n')
        .take(line - 1)
        .map(str::len)
        .sum();
    (start + column.saturating_sub(1)).min(text.len())
}

/// `serde(with = ...)` adapter for a single integer.
pub mod bigint {
    use super::*;

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
        int_to_json(x).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigInt, D::Error> {
        let v = Value::deserialize(d)?;
        int_from_json(&v).map_err(serde::de::Error::custom)
    }
}
