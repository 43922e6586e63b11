use std::f64::consts::TAU;

use cr4_core::detector::{
    defect, find_jump_points, presets, standard_j, AlmostComplexStructure, Chart, ParamDomain,
    ParamSurface, DEFAULT_TOL,
};
use nalgebra::{Matrix4, Vector4};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Rank of `[X Y JX JY]` from singular values, relative tolerance 1e-8.
fn tangent_rank(x: Vector4<f64>, y: Vector4<f64>, j: &Matrix4<f64>) -> usize {
    let (x, y) = (x.normalize(), y.normalize());
    let m = Matrix4::from_columns(&[x, y, j * x, j * y]);
    m.singular_values().iter().filter(|&&s| s > 1e-8).count()
}

fn tangents_fd(chart: &Chart, u: f64, v: f64) -> (Vector4<f64>, Vector4<f64>) {
    chart.tangents(u, v)
}

fn skewed_structure() -> (Matrix4<f64>, AlmostComplexStructure) {
    let a = Matrix4::new(
        1.0, 0.3, 0.0, 0.1, 0.0, 1.2, 0.2, 0.0, 0.1, 0.0, 0.9, 0.0, 0.0, 0.2, 0.0, 1.1,
    );
    let j = a * standard_j() * a.try_inverse().unwrap();
    (j, AlmostComplexStructure::constant(j).unwrap())
}

#[test]
fn defect_vanishes_exactly_when_tangent_plane_is_complex() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let (skew, skew_j) = skewed_structure();
    let cases: Vec<(ParamSurface, Matrix4<f64>, AlmostComplexStructure)> = vec![
        (
            presets::round_sphere(),
            standard_j(),
            AlmostComplexStructure::standard(),
        ),
        (
            presets::clifford_torus(),
            standard_j(),
            AlmostComplexStructure::standard(),
        ),
        (
            presets::holomorphic_graph(3),
            standard_j(),
            AlmostComplexStructure::standard(),
        ),
        (
            presets::graph_of_zbar(),
            standard_j(),
            AlmostComplexStructure::standard(),
        ),
        (presets::round_sphere(), skew, skew_j),
    ];
    for (surface, jm, j) in &cases {
        for (chart_id, chart) in surface.charts.iter().enumerate() {
            let mut params: Vec<(f64, f64)> = (0..200)
                .map(|_| {
                    let d = chart.domain;
                    (rng.gen_range(d.u.0..d.u.1), rng.gen_range(d.v.0..d.v.1))
                })
                .collect();
            params.push((0.0, 0.0));
            for (u, v) in params {
                let (x, y) = tangents_fd(chart, u, v);
                let d = defect(surface, j, chart_id, u, v).unwrap();
                let vanishing = d.norm() / (x.norm() * y.norm()) < 1e-8;
                assert_eq!(
                    vanishing,
                    tangent_rank(x, y, jm) == 2,
                    "{} chart {chart_id} at ({u}, {v})",
                    surface.name
                );
            }
        }
    }
}

#[test]
fn clifford_torus_is_totally_real_at_every_grid() {
    let t = presets::clifford_torus();
    let j = AlmostComplexStructure::standard();
    for grid in [32, 64, 128] {
        let r = find_jump_points(&t, &j, grid, DEFAULT_TOL).unwrap();
        assert!(r.points.is_empty(), "grid {grid}");
    }
}

#[test]
fn sheared_torus_chart_stays_totally_real_and_scales_defect() {
    // (s, t) -> (s + t, t) is in SL(2, Z), so the reparametrized chart is still periodic
    let base = presets::clifford_torus();
    let chart = base.charts[0].clone();
    let sheared = Chart::new(
        "sheared",
        ParamDomain::torus((0.0, TAU), (0.0, TAU)),
        move |s, t| chart.point(s + t, t),
    );
    let surface = ParamSurface::new("sheared_torus", vec![sheared]);
    let j = AlmostComplexStructure::standard();
    for (s, t) in [(0.2, 0.5), (3.0, 1.0), (5.0, 6.0)] {
        let d_new = defect(&surface, &j, 0, s, t).unwrap();
        let d_old = defect(&base, &j, 0, s + t, t).unwrap();
        assert!((d_new - d_old).norm() < 1e-8, "det of the shear is 1");
    }
    assert!(find_jump_points(&surface, &j, 64, DEFAULT_TOL)
        .unwrap()
        .points
        .is_empty());
}

fn linear_reparam(surface: &ParamSurface, a: [[f64; 2]; 2]) -> ParamSurface {
    let charts = surface
        .charts
        .iter()
        .map(|c| {
            let inner = c.clone();
            Chart::new(format!("{}_reparam", c.name), c.domain, move |s, t| {
                inner.point(a[0][0] * s + a[0][1] * t, a[1][0] * s + a[1][1] * t)
            })
        })
        .collect();
    ParamSurface::new(format!("{}_reparam", surface.name), charts)
}

#[test]
fn orientation_preserving_reparametrization_keeps_poles_and_indices() {
    let sphere = presets::round_sphere();
    let a = [[0.9, 0.25], [-0.15, 1.1]];
    let det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    assert!(det > 0.0);
    let moved = linear_reparam(&sphere, a);
    let j = AlmostComplexStructure::standard();
    for (s, t) in [(0.3, -0.4), (1.0, 0.2)] {
        let (u, v) = (a[0][0] * s + a[0][1] * t, a[1][0] * s + a[1][1] * t);
        let ratio = defect(&moved, &j, 0, s, t).unwrap() / defect(&sphere, &j, 0, u, v).unwrap();
        assert!(
            (ratio.re - det).abs() < 1e-6 && ratio.im.abs() < 1e-6,
            "ratio {ratio}"
        );
    }
    let before = find_jump_points(&sphere, &j, 96, DEFAULT_TOL).unwrap();
    let after = find_jump_points(&moved, &j, 96, DEFAULT_TOL).unwrap();
    assert_eq!(before.points.len(), 2);
    assert_eq!(after.points.len(), 2);
    for p in &before.points {
        let q = after
            .points
            .iter()
            .find(|q| (q.location[2] - p.location[2]).abs() < 1e-6)
            .expect("matching pole");
        assert_eq!(q.index, p.index);
        assert_eq!(q.complex_orientation, p.complex_orientation);
    }
}

#[test]
fn reported_points_are_refined_and_indexed() {
    let (_, skew_j) = skewed_structure();
    for j in [AlmostComplexStructure::standard(), skew_j] {
        for tol in [1e-8, 1e-10, 1e-12] {
            let r = find_jump_points(&presets::round_sphere(), &j, 64, tol).unwrap();
            assert!(!r.points.is_empty());
            for p in &r.points {
                assert!(p.residual < tol);
                assert!(p.index.abs() >= 1);
            }
            assert_eq!(r.total_oriented_index(), 2);
        }
    }
}

#[test]
fn detection_is_deterministic() {
    let j = AlmostComplexStructure::standard();
    let s = presets::round_sphere();
    let a = find_jump_points(&s, &j, 80, DEFAULT_TOL).unwrap();
    let b = find_jump_points(&s, &j, 80, DEFAULT_TOL).unwrap();
    assert_eq!(a, b);
}

#[test]
fn finite_difference_charts_find_the_same_poles() {
    let sphere = presets::round_sphere();
    let fd_charts = sphere
        .charts
        .iter()
        .map(|c| {
            let inner = c.clone();
            Chart::new(c.name.clone(), c.domain, move |u, v| inner.point(u, v))
        })
        .collect();
    let fd = ParamSurface::new("fd_sphere", fd_charts);
    let r = find_jump_points(&fd, &AlmostComplexStructure::standard(), 64, 1e-9).unwrap();
    assert_eq!(r.points.len(), 2);
    assert_eq!(r.total_index(), 0);
}
