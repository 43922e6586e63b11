//! Gram matrix text formats.
//!
//! JSON: `{"rank": n, "gram": [[..], ..]}` (extra keys ignored). Plain text: `n`
//! followed by `n*n` integers in row-major order, separated by whitespace.

use num::BigInt;
use serde_json::{json, Value};

use super::form::IntegerForm;
use crate::error::{Error, Result};
use crate::json;

pub fn parse_gram(text: &str) -> Result<IntegerForm> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        gram_from_json(&json::parse(text)?)
    } else {
        parse_plain(text)
    }
}

pub fn gram_from_json(v: &Value) -> Result<IntegerForm> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::InvalidArgument("gram document must be a JSON object".into()))?;
    let rows = obj
        .get("gram")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::InvalidArgument("missing \"gram\" array".into()))?;
    let gram = rows
        .iter()
        .map(json::int_vec_from_json)
        .collect::<Result<Vec<_>>>()?;
    if let Some(rank) = obj.get("rank") {
        let rank = rank.as_u64().ok_or_else(|| {
            Error::InvalidArgument("\"rank\" must be a nonnegative integer".into())
        })?;
        if rank as usize != gram.len() {
            return Err(Error::DimensionMismatch {
                expected: rank as usize,
                found: gram.len(),
            });
        }
    }
    IntegerForm::new(gram)
}

fn parse_plain(text: &str) -> Result<IntegerForm> {
    let mut tokens = text.split_ascii_whitespace().map(|t| {
        let offset = t.as_ptr() as usize - text.as_ptr() as usize;
        t.parse::<BigInt>().map_err(|_| Error::Parse {
            offset,
            message: format!("{t:?} is not an integer"),
        })
    });
    let n = tokens.next().ok_or(Error::Parse {
        offset: text.len(),
        message: "empty input".into(),
    })??;
    let n: usize = (&n)
        .try_into()
        .map_err(|_| Error::InvalidArgument(format!("rank {n} is not a valid size")))?;
    let entries = tokens.collect::<Result<Vec<_>>>()?;
    if entries.len() != n * n {
        return Err(Error::DimensionMismatch {
            expected: n * n,
            found: entries.len(),
        });
    }
    IntegerForm::new(
        entries
            .chunks(n.max(1))
            .take(n)
            .map(<[BigInt]>::to_vec)
            .collect(),
    )
}

pub fn gram_to_json(form: &IntegerForm) -> Value {
    json!({
        "rank": form.rank(),
        "gram": form.gram().iter().map(|r| json::int_vec_to_json(r)).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::form::StandardForm;

    #[test]
    fn parses_json_and_plain() {
        let h = IntegerForm::standard(StandardForm::Hyperbolic);
        assert_eq!(
            parse_gram(r#"{"rank": 2, "gram": [[0, 1], ["1", 0]]}"#).unwrap(),
            h
        );
        assert_eq!(parse_gram("2\n0 1\n1 0\n").unwrap(), h);
        assert_eq!(parse_gram("0").unwrap().rank(), 0);
    }

    #[test]
    fn big_entries_survive_round_trip() {
        let text = r#"{"rank":1,"gram":[["123456789012345678901234567890"]]}"#;
        let f = parse_gram(text).unwrap();
        assert_eq!(parse_gram(&gram_to_json(&f).to_string()).unwrap(), f);
        assert_eq!(gram_to_json(&f).to_string(), text);
    }

    #[test]
    fn reports_bad_input() {
        assert!(matches!(
            parse_gram("2 0 1 1"),
            Err(Error::DimensionMismatch {
                expected: 4,
                found: 3
            })
        ));
        match parse_gram("2 0 1 x 0") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 6),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_gram(r#"{"rank": 3, "gram": [[1]]}"#),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            parse_gram("{\"gram\": [[1]"),
            Err(Error::Parse { .. })
        ));
    }
}
