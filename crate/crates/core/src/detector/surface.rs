use std::fmt;
use std::sync::Arc;

use nalgebra::Vector4;

pub type ChartMap = Arc<dyn Fn(f64, f64) -> Vector4<f64> + Send + Sync>;
pub type ChartDerivatives = Arc<dyn Fn(f64, f64) -> (Vector4<f64>, Vector4<f64>) + Send + Sync>;

/// Central difference step used when a chart has no analytic derivatives.
pub const FD_STEP: f64 = 1e-5;

/// Rectangular parameter domain; a periodic direction identifies its two edges.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamDomain {
    pub u: (f64, f64),
    pub v: (f64, f64),
    pub periodic_u: bool,
    pub periodic_v: bool,
}

impl ParamDomain {
    pub fn rect(u: (f64, f64), v: (f64, f64)) -> Self {
        ParamDomain {
            u,
            v,
            periodic_u: false,
            periodic_v: false,
        }
    }

    pub fn torus(u: (f64, f64), v: (f64, f64)) -> Self {
        ParamDomain {
            u,
            v,
            periodic_u: true,
            periodic_v: true,
        }
    }

    /// `n` sample coordinates along an axis; periodic axes omit the duplicated endpoint.
    pub(crate) fn axis_nodes(range: (f64, f64), periodic: bool, n: usize) -> Vec<f64> {
        let (lo, hi) = range;
        let steps = if periodic { n } else { n - 1 };
        (0..n)
            .map(|i| lo + (hi - lo) * i as f64 / steps as f64)
            .collect()
    }

    /// Wraps periodic coordinates into the domain; `None` if a non-periodic one is outside.
    pub fn normalize(&self, u: f64, v: f64) -> Option<(f64, f64)> {
        let fix = |x: f64, (lo, hi): (f64, f64), periodic: bool| {
            if periodic {
                Some(lo + (x - lo).rem_euclid(hi - lo))
            } else if (lo..=hi).contains(&x) {
                Some(x)
            } else {
                None
            }
        };
        Some((
            fix(u, self.u, self.periodic_u)?,
            fix(v, self.v, self.periodic_v)?,
        ))
    }

    /// Distance from `(u, v)` to the nearest non-periodic edge.
    pub fn margin(&self, u: f64, v: f64) -> f64 {
        let mut m = f64::INFINITY;
        if !self.periodic_u {
            m = m.min(u - self.u.0).min(self.u.1 - u);
        }
        if !self.periodic_v {
            m = m.min(v - self.v.0).min(self.v.1 - v);
        }
        m
    }

    /// Parameter distance with periodic wrap-around.
    pub fn distance(&self, a: (f64, f64), b: (f64, f64)) -> f64 {
        let d = |x: f64, y: f64, (lo, hi): (f64, f64), periodic: bool| {
            let raw = (x - y).abs();
            if periodic {
                raw.min((hi - lo) - raw)
            } else {
                raw
            }
        };
        d(a.0, b.0, self.u, self.periodic_u).hypot(d(a.1, b.1, self.v, self.periodic_v))
    }
}

/// One parametrized patch `(u, v) -> R^4`, oriented by its parameters.
#[derive(Clone)]
pub struct Chart {
    pub name: String,
    pub domain: ParamDomain,
    map: ChartMap,
    derivatives: Option<ChartDerivatives>,
}

impl fmt::Debug for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Chart")
            .field("name", &self.name)
            .field("domain", &self.domain)
            .field("analytic_derivatives", &self.derivatives.is_some())
            .finish()
    }
}

impl Chart {
    pub fn new<F>(name: impl Into<String>, domain: ParamDomain, map: F) -> Self
    where
        F: Fn(f64, f64) -> Vector4<f64> + Send + Sync + 'static,
    {
        Chart {
            name: name.into(),
            domain,
            map: Arc::new(map),
            derivatives: None,
        }
    }

    pub fn with_derivatives<D>(mut self, d: D) -> Self
    where
        D: Fn(f64, f64) -> (Vector4<f64>, Vector4<f64>) + Send + Sync + 'static,
    {
        self.derivatives = Some(Arc::new(d));
        self
    }

    pub fn point(&self, u: f64, v: f64) -> Vector4<f64> {
        (self.map)(u, v)
    }

    /// `(df/du, df/dv)`.
    pub fn tangents(&self, u: f64, v: f64) -> (Vector4<f64>, Vector4<f64>) {
        match &self.derivatives {
            Some(d) => d(u, v),
            None => {
                let h = FD_STEP;
                let du = (self.point(u + h, v) - self.point(u - h, v)) / (2.0 * h);
                let dv = (self.point(u, v + h) - self.point(u, v - h)) / (2.0 * h);
                (du, dv)
            }
        }
    }
}

/// A surface given by finitely many charts with mutually consistent orientations.
#[derive(Debug, Clone)]
pub struct ParamSurface {
    pub name: String,
    pub charts: Vec<Chart>,
}

impl ParamSurface {
    pub fn new(name: impl Into<String>, charts: Vec<Chart>) -> Self {
        ParamSurface {
            name: name.into(),
            charts,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn periodic_normalization_and_distance() {
        let tau = std::f64::consts::TAU;
        let d = ParamDomain::torus((0.0, tau), (0.0, tau));
        let (u, v) = d.normalize(-0.5, tau + 0.25).unwrap();
        assert!((u - (tau - 0.5)).abs() < 1e-12 && (v - 0.25).abs() < 1e-12);
        assert!((d.distance((0.1, 0.0), (tau - 0.1, 0.0)) - 0.2).abs() < 1e-12);
        assert_eq!(d.margin(1.0, 1.0), f64::INFINITY);
    }

    #[test]
    fn rectangle_rejects_outside_points() {
        let d = ParamDomain::rect((-1.0, 1.0), (-1.0, 1.0));
        assert!(d.normalize(1.5, 0.0).is_none());
        assert!((d.margin(0.5, -0.75) - 0.25).abs() < 1e-15);
        assert_eq!(
            ParamDomain::axis_nodes((-1.0, 1.0), false, 3),
            vec![-1.0, 0.0, 1.0]
        );
    }

    #[test]
    fn finite_differences_match_analytic_tangents() {
        let c = Chart::new(
            "graph",
            ParamDomain::rect((-1.0, 1.0), (-1.0, 1.0)),
            |u, v| Vector4::new(u, v, u * u - v * v, 2.0 * u * v),
        );
        let (du, dv) = c.tangents(0.3, -0.2);
        assert!((du - Vector4::new(1.0, 0.0, 0.6, -0.4)).amax() < 1e-8);
        assert!((dv - Vector4::new(0.0, 1.0, 0.4, 0.6)).amax() < 1e-8);
    }
}
