//! Loading command inputs from files, stdin or inline JSON.

use std::fs;
use std::io::Read;

use cr4_core::adjunction::SurfaceGeometry;
use cr4_core::lattice::io::parse_gram;
use cr4_core::{json, Error, HomologyClass, IntegerForm, Result, StandardForm};
use serde_json::Value;

/// Reads a path, or stdin for `-`.
pub fn read_source(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::InvalidArgument(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("{path}: {e}")))
}

/// Inline JSON, or `@path` to read it from a file.
pub fn inline_or_file(arg: &str) -> Result<Value> {
    match arg.strip_prefix('@') {
        Some(path) => json::parse(&read_source(path)?),
        None => json::parse(arg),
    }
}

pub fn load_gram(path: &str) -> Result<IntegerForm> {
    parse_gram(&read_source(path)?)
}

/// `e8`, `neg_e8`, `hyperbolic` (or `h`), `diag:p,q`.
pub fn standard_form(name: &str) -> Result<IntegerForm> {
    let f = match name {
        "e8" | "E8" => StandardForm::E8,
        "neg_e8" | "-e8" | "-E8" => StandardForm::NegE8,
        "hyperbolic" | "h" | "H" => StandardForm::Hyperbolic,
        other => {
            let bad = || Error::InvalidArgument(format!("unknown standard form {other:?}"));
            let (p, q) = other
                .strip_prefix("diag:")
                .ok_or_else(bad)?
                .split_once(',')
                .ok_or_else(bad)?;
            StandardForm::DiagonalPQ(
                p.trim().parse().map_err(|_| bad())?,
                q.trim().parse().map_err(|_| bad())?,
            )
        }
    };
    Ok(IntegerForm::standard(f))
}

pub fn load_vector(arg: &str) -> Result<HomologyClass> {
    json::int_vec_from_json(&inline_or_file(arg)?).map(HomologyClass)
}

pub fn load_geometry(arg: &str) -> Result<SurfaceGeometry> {
    serde_json::from_value(inline_or_file(arg)?)
        .map_err(|e| Error::InvalidArgument(format!("surface data: {e}")))
}
