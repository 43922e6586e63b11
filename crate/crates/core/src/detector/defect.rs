//! The jump-point defect: `det_C [z(X) z(Y)]` in a `J`-complex frame.
//!
//! The frame `{e1, J e1, e2, J e2}` gives complex coordinates `z: (R^4, J) -> C^2`.
//! The chart tangents `X, Y` span a `J`-invariant plane exactly when `z(X), z(Y)`
//! are complex-linearly dependent, i.e. when the determinant vanishes.

use nalgebra::{Matrix4, Vector4};
use num::complex::Complex64;

use super::structure::AlmostComplexStructure;
use super::surface::ParamSurface;
use crate::error::{Error, Result};

/// Relative area below which the tangent vectors count as dependent.
const IMMERSION_TOLERANCE: f64 = 1e-12;

/// Inverse of the frame matrix `[e1 | J e1 | e2 | J e2]` at a point.
pub(crate) fn complex_frame_inverse(j: &Matrix4<f64>) -> Result<Matrix4<f64>> {
    let e1 = Vector4::x();
    let je1 = j * e1;
    let q2 = je1 - e1 * e1.dot(&je1);
    let q2_norm = q2.norm();
    // J e1 parallel to e1 would give J an eigenvector, impossible when J^2 = -I.
    debug_assert!(q2_norm > 0.0);
    if !(q2_norm > 1e-12) {
        return Err(Error::InvalidStructure { residual: f64::NAN });
    }
    let q2 = q2 / q2_norm;
    let e2 = [Vector4::z(), Vector4::w(), Vector4::y()]
        .into_iter()
        .map(|s| s - e1 * e1.dot(&s) - q2 * q2.dot(&s))
        .find(|r| r.norm() > 0.1)
        .expect("a 2-plane cannot contain three standard basis vectors");
    let e2 = e2.normalize();
    let frame = Matrix4::from_columns(&[e1, je1, e2, j * e2]);
    frame
        .try_inverse()
        .ok_or(Error::InvalidStructure { residual: f64::NAN })
}

fn to_complex(frame_inv: &Matrix4<f64>, x: &Vector4<f64>) -> [Complex64; 2] {
    let c = frame_inv * x;
    [Complex64::new(c[0], c[1]), Complex64::new(c[2], c[3])]
}

/// Tangent data at one parameter value.
#[derive(Debug, Clone, Copy)]
pub(crate) struct LocalFrame {
    pub point: Vector4<f64>,
    pub zx: [Complex64; 2],
    pub zy: [Complex64; 2],
    /// `|X| |Y|`, the natural scale of the defect.
    pub scale: f64,
}

impl LocalFrame {
    pub fn defect(&self) -> Complex64 {
        self.zx[0] * self.zy[1] - self.zx[1] * self.zy[0]
    }

    /// Sign of `Im <z(X), z(Y)>`: `+1` when `Y` lies on the `J X` side of `X`.
    /// At a jump point this compares the surface orientation with the complex one.
    pub fn complex_orientation(&self) -> i8 {
        let h = self.zx[0].conj() * self.zy[0] + self.zx[1].conj() * self.zy[1];
        if h.im >= 0.0 {
            1
        } else {
            -1
        }
    }
}

pub(crate) fn local_frame(
    surface: &ParamSurface,
    j: &AlmostComplexStructure,
    chart_id: usize,
    u: f64,
    v: f64,
) -> Result<LocalFrame> {
    let chart = surface
        .charts
        .get(chart_id)
        .ok_or_else(|| Error::InvalidArgument(format!("chart {chart_id} does not exist")))?;
    let point = chart.point(u, v);
    let (x, y) = chart.tangents(u, v);
    let (xx, yy, xy) = (x.norm_squared(), y.norm_squared(), x.dot(&y));
    let area2 = xx * yy - xy * xy;
    if !(area2 > IMMERSION_TOLERANCE * xx * yy) || xx == 0.0 || yy == 0.0 {
        return Err(Error::DegenerateSurface {
            chart: chart_id,
            u,
            v,
        });
    }
    let frame_inv = complex_frame_inverse(&j.at(&point)?)?;
    Ok(LocalFrame {
        point,
        zx: to_complex(&frame_inv, &x),
        zy: to_complex(&frame_inv, &y),
        scale: (xx * yy).sqrt(),
    })
}

/// Complex scalar that vanishes exactly where the tangent plane is `J`-invariant.
pub fn defect(
    surface: &ParamSurface,
    j: &AlmostComplexStructure,
    chart_id: usize,
    u: f64,
    v: f64,
) -> Result<Complex64> {
    Ok(local_frame(surface, j, chart_id, u, v)?.defect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detector::presets;
    use crate::detector::structure::standard_j;

    #[test]
    fn standard_frame_is_identity() {
        let inv = complex_frame_inverse(&standard_j()).unwrap();
        assert!((inv - Matrix4::identity()).amax() < 1e-15);
    }

    #[test]
    fn clifford_torus_defect_is_minus_exp_i_sum() {
        let t = presets::clifford_torus();
        let j = AlmostComplexStructure::standard();
        for &(u, v) in &[(0.0, 0.0), (0.3, 1.7), (2.0, -1.1), (5.5, 4.0)] {
            let d = defect(&t, &j, 0, u, v).unwrap();
            let expected = -Complex64::from_polar(1.0, u + v);
            assert!((d - expected).norm() < 1e-14, "{d} vs {expected}");
        }
    }

    #[test]
    fn holomorphic_graph_defect_vanishes() {
        let s = presets::holomorphic_graph(2);
        let j = AlmostComplexStructure::standard();
        for &(u, v) in &[(0.0, 0.0), (0.5, -0.25), (-0.9, 0.9)] {
            assert!(defect(&s, &j, 0, u, v).unwrap().norm() < 1e-14);
        }
    }

    #[test]
    fn sphere_north_chart_matches_stereographic_formula() {
        // d = 8 i w / (1 + |w|^2)^3 in the north chart
        let s = presets::round_sphere();
        let j = AlmostComplexStructure::standard();
        for &(u, v) in &[(0.0, 0.0), (0.1, 0.2), (-0.7, 0.4), (1.2, -1.3)] {
            let w = Complex64::new(u, v);
            let s3 = (1.0 + w.norm_sqr()).powi(3);
            let expected = Complex64::i() * w * 8.0 / s3;
            assert!((defect(&s, &j, 0, u, v).unwrap() - expected).norm() < 1e-14);
            let expected_south = Complex64::i() * w.conj() * 8.0 / s3;
            assert!((defect(&s, &j, 1, u, v).unwrap() - expected_south).norm() < 1e-14);
        }
    }

    #[test]
    fn graph_chart_defect_is_i_z_over_h() {
        // north graph chart (z, sqrt(1 - |z|^2)) of the round sphere, finite-difference tangents
        use crate::detector::surface::{Chart, ParamDomain};
        let chart = Chart::new(
            "graph",
            ParamDomain::rect((-0.8, 0.8), (-0.8, 0.8)),
            |u, v| Vector4::new(u, v, (1.0 - u * u - v * v).sqrt(), 0.0),
        );
        let s = ParamSurface::new("graph", vec![chart]);
        let j = AlmostComplexStructure::standard();
        for &(u, v) in &[(0.1, 0.0), (0.2, -0.3), (-0.5, 0.1)] {
            let z = Complex64::new(u, v);
            let h = (1.0 - z.norm_sqr()).sqrt();
            let expected = Complex64::i() * z / h;
            assert!((defect(&s, &j, 0, u, v).unwrap() - expected).norm() < 1e-8);
        }
    }

    #[test]
    fn zbar_graph_defect_is_constant() {
        let s = presets::graph_of_zbar();
        let d = defect(&s, &AlmostComplexStructure::standard(), 0, 0.3, 0.4).unwrap();
        assert!((d - Complex64::new(0.0, -2.0)).norm() < 1e-14);
    }

    #[test]
    fn degenerate_chart_is_rejected() {
        use crate::detector::surface::{Chart, ParamDomain};
        let chart = Chart::new("line", ParamDomain::rect((0.0, 1.0), (0.0, 1.0)), |u, v| {
            Vector4::new(u + v, 0.0, 0.0, 0.0)
        });
        let s = ParamSurface::new("line", vec![chart]);
        assert!(matches!(
            defect(&s, &AlmostComplexStructure::standard(), 0, 0.5, 0.5),
            Err(Error::DegenerateSurface { .. })
        ));
    }
}
