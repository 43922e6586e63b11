//! Built-in surfaces in C^2 with analytic derivatives.
//!
//! | preset | charts | regime |
//! |---|---|---|
//! | `clifford_torus` | one periodic chart | totally real, no jump points |
//! | `round_sphere` | two stereographic charts | jump points at the poles |
//! | `holomorphic_graph(d)` | square patch of `(z, z^d)` | complex everywhere |
//! | `graph_of_zbar` | square patch of `(z, conj z)` | totally real |

use std::f64::consts::TAU;

use nalgebra::{Matrix4, Vector4};
use num::complex::Complex64;
use serde_json::Value;

use super::structure::AlmostComplexStructure;
use super::surface::{Chart, ParamDomain, ParamSurface};
use crate::error::{Error, Result};

/// Half-width of the parameter square used by each sphere chart.
pub const SPHERE_CHART_RADIUS: f64 = 1.5;

/// `(u, v) -> (e^{iu}, e^{iv})` on `[0, 2pi)^2`.
pub fn clifford_torus() -> ParamSurface {
    let chart = Chart::new(
        "torus",
        ParamDomain::torus((0.0, TAU), (0.0, TAU)),
        |u, v| Vector4::new(u.cos(), u.sin(), v.cos(), v.sin()),
    )
    .with_derivatives(|u, v| {
        (
            Vector4::new(-u.sin(), u.cos(), 0.0, 0.0),
            Vector4::new(0.0, 0.0, -v.sin(), v.cos()),
        )
    });
    ParamSurface::new("clifford_torus", vec![chart])
}

/// Unit sphere in `R^3 x {0}`, coordinates `(x1, y1, x2, 0)`.
///
/// Chart 0 (`north`) is inverse stereographic projection from the south pole,
/// `w = u + iv -> (2w, 1 - |w|^2) / (1 + |w|^2)`, centred on `(0, 0, 1, 0)`.
/// Chart 1 (`south`) is `w' -> (2 conj(w'), |w'|^2 - 1) / (1 + |w'|^2)`, centred on
/// `(0, 0, -1, 0)`. On the overlap `w' = 1/w`, a holomorphic map, so both charts
/// carry the same orientation.
pub fn round_sphere() -> ParamSurface {
    let r = SPHERE_CHART_RADIUS;
    let domain = ParamDomain::rect((-r, r), (-r, r));
    let north = Chart::new("north", domain, |u, v| {
        let s = 1.0 + u * u + v * v;
        Vector4::new(2.0 * u / s, 2.0 * v / s, 2.0 / s - 1.0, 0.0)
    })
    .with_derivatives(|u, v| {
        let s = 1.0 + u * u + v * v;
        let s2 = s * s;
        (
            Vector4::new(
                2.0 * (s - 2.0 * u * u) / s2,
                -4.0 * u * v / s2,
                -4.0 * u / s2,
                0.0,
            ),
            Vector4::new(
                -4.0 * u * v / s2,
                2.0 * (s - 2.0 * v * v) / s2,
                -4.0 * v / s2,
                0.0,
            ),
        )
    });
    let south = Chart::new("south", domain, |u, v| {
        let s = 1.0 + u * u + v * v;
        Vector4::new(2.0 * u / s, -2.0 * v / s, 1.0 - 2.0 / s, 0.0)
    })
    .with_derivatives(|u, v| {
        let s = 1.0 + u * u + v * v;
        let s2 = s * s;
        (
            Vector4::new(
                2.0 * (s - 2.0 * u * u) / s2,
                4.0 * u * v / s2,
                4.0 * u / s2,
                0.0,
            ),
            Vector4::new(
                -4.0 * u * v / s2,
                -2.0 * (s - 2.0 * v * v) / s2,
                4.0 * v / s2,
                0.0,
            ),
        )
    });
    ParamSurface::new("round_sphere", vec![north, south])
}

/// Graph of `z -> z^d` over the square `|Re z|, |Im z| <= 1`.
pub fn holomorphic_graph(degree: u32) -> ParamSurface {
    let d = degree as i32;
    let chart = Chart::new(
        format!("graph_z{degree}"),
        ParamDomain::rect((-1.0, 1.0), (-1.0, 1.0)),
        move |u, v| {
            let w = Complex64::new(u, v).powi(d);
            Vector4::new(u, v, w.re, w.im)
        },
    )
    .with_derivatives(move |u, v| {
        let dw = if d == 0 {
            Complex64::new(0.0, 0.0)
        } else {
            Complex64::new(u, v).powi(d - 1) * f64::from(d)
        };
        let idw = Complex64::i() * dw;
        (
            Vector4::new(1.0, 0.0, dw.re, dw.im),
            Vector4::new(0.0, 1.0, idw.re, idw.im),
        )
    });
    ParamSurface::new(format!("holomorphic_graph({degree})"), vec![chart])
}

/// Graph of `z -> conj(z)` over the unit square.
pub fn graph_of_zbar() -> ParamSurface {
    let chart = Chart::new(
        "graph_zbar",
        ParamDomain::rect((-1.0, 1.0), (-1.0, 1.0)),
        |u, v| Vector4::new(u, v, u, -v),
    )
    .with_derivatives(|_, _| {
        (
            Vector4::new(1.0, 0.0, 1.0, 0.0),
            Vector4::new(0.0, 1.0, 0.0, -1.0),
        )
    });
    ParamSurface::new("graph_of_zbar", vec![chart])
}

/// Looks up `clifford_torus`, `round_sphere`, `graph_of_zbar`, `holomorphic_graph`
/// (degree 2) or `holomorphic_graph:<d>`.
pub fn by_name(name: &str) -> Result<ParamSurface> {
    match name {
        "clifford_torus" => Ok(clifford_torus()),
        "round_sphere" => Ok(round_sphere()),
        "graph_of_zbar" => Ok(graph_of_zbar()),
        "holomorphic_graph" => Ok(holomorphic_graph(2)),
        other => match other
            .strip_prefix("holomorphic_graph:")
            .map(str::parse::<u32>)
        {
            Some(Ok(d)) => Ok(holomorphic_graph(d)),
            _ => Err(Error::InvalidArgument(format!(
                "unknown surface preset {other:?}"
            ))),
        },
    }
}

/// Reads a surface description file:
/// `{"preset": "<name>", "degree": d, "structure": "standard" | [[4x4 rows]]}`.
pub fn from_json(v: &Value) -> Result<(ParamSurface, AlmostComplexStructure)> {
    let name = v
        .get("preset")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::InvalidArgument("surface file needs a \"preset\" string".into()))?;
    let surface = match (name, v.get("degree")) {
        ("holomorphic_graph", Some(d)) => {
            let d = d
                .as_u64()
                .and_then(|d| u32::try_from(d).ok())
                .ok_or_else(|| {
                    Error::InvalidArgument("\"degree\" must be a small nonnegative integer".into())
                })?;
            holomorphic_graph(d)
        }
        _ => by_name(name)?,
    };
    let structure = match v.get("structure") {
        None => AlmostComplexStructure::standard(),
        Some(Value::String(s)) if s == "standard" => AlmostComplexStructure::standard(),
        Some(Value::Array(rows)) => {
            let mut m = Matrix4::zeros();
            if rows.len() != 4 {
                return Err(Error::InvalidArgument(
                    "\"structure\" must have 4 rows".into(),
                ));
            }
            for (i, row) in rows.iter().enumerate() {
                let row = row.as_array().filter(|r| r.len() == 4).ok_or_else(|| {
                    Error::InvalidArgument("each \"structure\" row must have 4 numbers".into())
                })?;
                for (j, x) in row.iter().enumerate() {
                    m[(i, j)] = x.as_f64().ok_or_else(|| {
                        Error::InvalidArgument("\"structure\" entries must be numbers".into())
                    })?;
                }
            }
            AlmostComplexStructure::constant(m)?
        }
        Some(other) => {
            return Err(Error::InvalidArgument(format!(
                "unsupported \"structure\" {other}"
            )))
        }
    };
    Ok((surface, structure))
}
