//! Grid scan, Newton refinement and winding-number indices of jump points.

use std::f64::consts::{PI, TAU};

use num::complex::Complex64;
use rayon::prelude::*;

use super::defect::{local_frame, LocalFrame};
use super::structure::AlmostComplexStructure;
use super::surface::{ParamDomain, ParamSurface};
use crate::error::{Error, Result};

pub const MIN_GRID: usize = 16;
pub const DEFAULT_TOL: f64 = 1e-10;
pub const MAX_NEWTON_ITERATIONS: usize = 50;
/// Samples of |defect| / (|X||Y|) below this count as vanishing.
pub const VANISHING_THRESHOLD: f64 = 1e-8;
/// Seeds need |defect| below this multiple of the local variation to the neighbours.
const SEED_FACTOR: f64 = 10.0;
const MIN_WINDING_SAMPLES: usize = 256;
const MAX_WINDING_SAMPLES: usize = 1 << 16;
/// Largest accepted phase step between consecutive winding samples.
const MAX_PHASE_STEP: f64 = PI / 2.0;

/// A located complex jump point.
#[derive(Debug, Clone, PartialEq)]
pub struct JumpPoint {
    pub chart_id: usize,
    pub params: (f64, f64),
    pub location: [f64; 4],
    /// Winding number of the defect around the point, in the chart orientation.
    pub index: i64,
    pub residual: f64,
    /// `+1` if the tangent plane is a complex line with its complex orientation,
    /// `-1` if with the opposite one.
    pub complex_orientation: i8,
}

impl JumpPoint {
    /// Index with the sign of the complex orientation folded in.
    pub fn oriented_index(&self) -> i64 {
        self.index * i64::from(self.complex_orientation)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DetectionReport {
    pub points: Vec<JumpPoint>,
    /// Seeds whose Newton iteration did not converge.
    pub dropped_seeds: usize,
    /// Converged points discarded because their winding number is zero.
    pub zero_index: usize,
    pub samples: usize,
}

impl DetectionReport {
    pub fn total_index(&self) -> i64 {
        self.points.iter().map(|p| p.index).sum()
    }

    pub fn total_oriented_index(&self) -> i64 {
        self.points.iter().map(JumpPoint::oriented_index).sum()
    }
}

/// One sample of the defect field.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldSample {
    pub chart_id: usize,
    pub u: f64,
    pub v: f64,
    pub value: Complex64,
}

struct ChartGrid {
    us: Vec<f64>,
    vs: Vec<f64>,
    /// `values[i][k]` at `(us[i], vs[k])`, with the normalized magnitude.
    values: Vec<Vec<(Complex64, f64)>>,
}

fn scan_chart(
    surface: &ParamSurface,
    j: &AlmostComplexStructure,
    chart_id: usize,
    grid_n: usize,
) -> Result<ChartGrid> {
    let domain = surface.charts[chart_id].domain;
    let us = ParamDomain::axis_nodes(domain.u, domain.periodic_u, grid_n);
    let vs = ParamDomain::axis_nodes(domain.v, domain.periodic_v, grid_n);
    let values = us
        .par_iter()
        .map(|&u| {
            vs.iter()
                .map(|&v| {
                    let f = local_frame(surface, j, chart_id, u, v)?;
                    let d = f.defect();
                    Ok((d, d.norm() / f.scale))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ChartGrid { us, vs, values })
}

/// Samples the defect on the `grid_n x grid_n` grid of every chart, row-major per chart.
pub fn sample_field(
    surface: &ParamSurface,
    j: &AlmostComplexStructure,
    grid_n: usize,
) -> Result<Vec<FieldSample>> {
    check_grid(grid_n)?;
    let mut out = Vec::with_capacity(surface.charts.len() * grid_n * grid_n);
    for chart_id in 0..surface.charts.len() {
        let g = scan_chart(surface, j, chart_id, grid_n)?;
        for (i, &u) in g.us.iter().enumerate() {
            for (k, &v) in g.vs.iter().enumerate() {
                out.push(FieldSample {
                    chart_id,
                    u,
                    v,
                    value: g.values[i][k].0,
                });
            }
        }
    }
    Ok(out)
}

fn check_grid(grid_n: usize) -> Result<()> {
    if grid_n < MIN_GRID {
        return Err(Error::InvalidArgument(format!(
            "grid must be at least {MIN_GRID}, got {grid_n}"
        )));
    }
    Ok(())
}

/// Grid nodes that are local minima of |defect| and small relative to the local variation.
fn seeds(grid: &ChartGrid, domain: &ParamDomain) -> Vec<(f64, f64)> {
    let n_u = grid.us.len() as isize;
    let n_v = grid.vs.len() as isize;
    let wrap = |i: isize, n: isize, periodic: bool| -> Option<usize> {
        if periodic {
            Some(i.rem_euclid(n) as usize)
        } else if (0..n).contains(&i) {
            Some(i as usize)
        } else {
            None
        }
    };
    let mut out = Vec::new();
    for i in 0..n_u {
        for k in 0..n_v {
            let (d, _) = grid.values[i as usize][k as usize];
            let here = d.norm();
            let mut is_min = true;
            let mut variation: f64 = 0.0;
            for di in -1..=1 {
                for dk in -1..=1 {
                    if di == 0 && dk == 0 {
                        continue;
                    }
                    let (Some(a), Some(b)) = (
                        wrap(i + di, n_u, domain.periodic_u),
                        wrap(k + dk, n_v, domain.periodic_v),
                    ) else {
                        continue;
                    };
                    let (nd, _) = grid.values[a][b];
                    variation = variation.max((nd - d).norm());
                    // ties broken by scan order so plateaus yield a single seed
                    let later = (a, b) > (i as usize, k as usize);
                    if nd.norm() < here || (nd.norm() == here && !later) {
                        is_min = false;
                    }
                }
            }
            if is_min && here < SEED_FACTOR * variation {
                out.push((grid.us[i as usize], grid.vs[k as usize]));
            }
        }
    }
    out
}

/// Newton iteration on `(Re d, Im d)` with a central-difference Jacobian and backtracking.
fn refine(
    surface: &ParamSurface,
    j: &AlmostComplexStructure,
    chart_id: usize,
    start: (f64, f64),
    tol: f64,
    step_scale: f64,
) -> Option<((f64, f64), LocalFrame)> {
    let domain = surface.charts[chart_id].domain;
    let eval = |u: f64, v: f64| -> Option<LocalFrame> {
        let (u, v) = domain.normalize(u, v)?;
        local_frame(surface, j, chart_id, u, v).ok()
    };
    let (mut u, mut v) = start;
    let mut frame = eval(u, v)?;
    let h = 1e-6 * step_scale;
    for _ in 0..MAX_NEWTON_ITERATIONS {
        let d = frame.defect();
        if d.norm() < tol {
            return Some((domain.normalize(u, v)?, frame));
        }
        let du = (eval(u + h, v)?.defect() - eval(u - h, v)?.defect()) / (2.0 * h);
        let dv = (eval(u, v + h)?.defect() - eval(u, v - h)?.defect()) / (2.0 * h);
        let det = du.re * dv.im - dv.re * du.im;
        if !(det.abs() > f64::MIN_POSITIVE) || !det.is_finite() {
            return None;
        }
        // solve [du dv] (su, sv) = -d
        let mut su = -(dv.im * d.re - dv.re * d.im) / det;
        let mut sv = -(-du.im * d.re + du.re * d.im) / det;
        let mut accepted = None;
        for _ in 0..12 {
            if let Some(f) = eval(u + su, v + sv) {
                if f.defect().norm() < d.norm() {
                    accepted = Some(f);
                    break;
                }
            }
            su *= 0.5;
            sv *= 0.5;
        }
        frame = accepted?;
        let (nu, nv) = domain.normalize(u + su, v + sv)?;
        u = nu;
        v = nv;
    }
    (frame.defect().norm() < tol).then(|| (domain.normalize(u, v).unwrap(), frame))
}

fn winding(
    surface: &ParamSurface,
    j: &AlmostComplexStructure,
    chart_id: usize,
    center: (f64, f64),
    radius: f64,
) -> Result<i64> {
    let chart = surface
        .charts
        .get(chart_id)
        .ok_or_else(|| Error::InvalidArgument(format!("chart {chart_id} does not exist")))?;
    if !(radius > 0.0) || chart.domain.margin(center.0, center.1) <= radius {
        return Err(Error::RadiusUnusable { radius });
    }
    let mut samples = MIN_WINDING_SAMPLES;
    loop {
        let mut values = Vec::with_capacity(samples);
        for s in 0..samples {
            let t = TAU * s as f64 / samples as f64;
            let (u, v) = (center.0 + radius * t.cos(), center.1 + radius * t.sin());
            let f = local_frame(surface, j, chart_id, u, v)?;
            let d = f.defect();
            if d.norm() <= VANISHING_THRESHOLD * f.scale {
                return Err(Error::RadiusUnusable { radius });
            }
            values.push(d);
        }
        match phase_total(&values) {
            Some(total) => return Ok((total / TAU).round() as i64),
            None if samples >= MAX_WINDING_SAMPLES => return Err(Error::RadiusUnusable { radius }),
            None => samples *= 2,
        }
    }
}

fn phase_total(values: &[Complex64]) -> Option<f64> {
    let n = values.len();
    let mut total = 0.0;
    for s in 0..n {
        let step = (values[(s + 1) % n] / values[s]).arg();
        if step.abs() >= MAX_PHASE_STEP {
            return None;
        }
        total += step;
    }
    Some(total)
}

/// Winding number of the defect along the positively oriented parameter circle
/// of the given radius around `point`.
pub fn index_at(
    surface: &ParamSurface,
    j: &AlmostComplexStructure,
    point: &JumpPoint,
    radius: f64,
) -> Result<i64> {
    winding(surface, j, point.chart_id, point.params, radius)
}

/// Locates all complex jump points on the surface.
pub fn find_jump_points(
    surface: &ParamSurface,
    j: &AlmostComplexStructure,
    grid_n: usize,
    tol: f64,
) -> Result<DetectionReport> {
    check_grid(grid_n)?;
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let dedup = TAU / grid_n as f64;
    let mut samples = 0;
    let mut vanishing = 0;
    let mut dropped = 0;
    let mut zero_index = 0;
    let mut candidates: Vec<(JumpPoint, f64)> = Vec::new();

    let grids = (0..surface.charts.len())
        .map(|c| scan_chart(surface, j, c, grid_n))
        .collect::<Result<Vec<_>>>()?;
    for g in &grids {
        for row in &g.values {
            samples += row.len();
            vanishing += row.iter().filter(|(_, m)| *m < VANISHING_THRESHOLD).count();
        }
    }
    if 2 * vanishing > samples {
        return Err(Error::IdenticallyComplex {
            fraction: vanishing as f64 / samples as f64,
        });
    }

    for (chart_id, g) in grids.iter().enumerate() {
        let domain = surface.charts[chart_id].domain;
        let cell = ((domain.u.1 - domain.u.0) / grid_n as f64)
            .max((domain.v.1 - domain.v.0) / grid_n as f64);
        let mut found: Vec<JumpPoint> = Vec::new();
        for seed in seeds(g, &domain) {
            let Some((params, frame)) = refine(surface, j, chart_id, seed, tol, cell) else {
                dropped += 1;
                continue;
            };
            let p = JumpPoint {
                chart_id,
                params,
                location: [
                    frame.point[0],
                    frame.point[1],
                    frame.point[2],
                    frame.point[3],
                ],
                index: 0,
                residual: frame.defect().norm(),
                complex_orientation: frame.complex_orientation(),
            };
            match found
                .iter_mut()
                .find(|q| domain.distance(q.params, p.params) < dedup)
            {
                Some(q) if q.residual <= p.residual => {}
                Some(q) => *q = p,
                None => found.push(p),
            }
        }
        for mut p in found {
            let margin = domain.margin(p.params.0, p.params.1);
            let mut radius = (0.5 * dedup).min(0.9 * margin);
            let mut index = None;
            for _ in 0..6 {
                match winding(surface, j, chart_id, p.params, radius) {
                    Ok(w) => {
                        index = Some(w);
                        break;
                    }
                    Err(Error::RadiusUnusable { .. }) => radius *= 0.5,
                    Err(e) => return Err(e),
                }
            }
            match index {
                Some(w) if w != 0 => {
                    p.index = w;
                    candidates.push((p, margin));
                }
                _ => zero_index += 1,
            }
        }
    }

    // Across charts keep the copy farthest from its chart boundary.
    let mut points: Vec<(JumpPoint, f64)> = Vec::new();
    for (p, margin) in candidates {
        let near = points.iter_mut().find(|(q, _)| {
            let d2: f64 = q
                .location
                .iter()
                .zip(&p.location)
                .map(|(a, b)| (a - b) * (a - b))
                .sum();
            d2.sqrt() < dedup
        });
        match near {
            Some((q, m)) if *m < margin => {
                *q = p;
                *m = margin;
            }
            Some(_) => {}
            None => points.push((p, margin)),
        }
    }
    Ok(DetectionReport {
        points: points.into_iter().map(|(p, _)| p).collect(),
        dropped_seeds: dropped,
        zero_index,
        samples,
    })
}

/// Sum of the indices of all detected jump points.
pub fn total_algebraic_count(
    surface: &ParamSurface,
    j: &AlmostComplexStructure,
    grid_n: usize,
    tol: f64,
) -> Result<i64> {
    Ok(find_jump_points(surface, j, grid_n, tol)?.total_index())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detector::presets;

    fn std_j() -> AlmostComplexStructure {
        AlmostComplexStructure::standard()
    }

    fn pole(chart_id: usize) -> JumpPoint {
        JumpPoint {
            chart_id,
            params: (0.0, 0.0),
            location: [0.0; 4],
            index: 0,
            residual: 0.0,
            complex_orientation: 1,
        }
    }

    #[test]
    fn pole_indices() {
        let s = presets::round_sphere();
        assert_eq!(index_at(&s, &std_j(), &pole(0), 0.1).unwrap(), 1);
        assert_eq!(index_at(&s, &std_j(), &pole(1), 0.1).unwrap(), -1);
    }

    #[test]
    fn torus_loops_wind_zero() {
        let t = presets::clifford_torus();
        let p = JumpPoint {
            params: (1.0, 2.0),
            ..pole(0)
        };
        assert_eq!(index_at(&t, &std_j(), &p, 0.3).unwrap(), 0);
    }

    #[test]
    fn radius_leaving_the_chart_is_unusable() {
        let s = presets::round_sphere();
        assert!(matches!(
            index_at(&s, &std_j(), &pole(0), 2.0),
            Err(Error::RadiusUnusable { .. })
        ));
    }

    #[test]
    fn sphere_has_two_poles_with_opposite_complex_orientation() {
        let r = find_jump_points(&presets::round_sphere(), &std_j(), 64, DEFAULT_TOL).unwrap();
        assert_eq!(r.points.len(), 2);
        let mut z: Vec<_> = r
            .points
            .iter()
            .map(|p| (p.location[2], p.index, p.complex_orientation))
            .collect();
        z.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        assert!((z[0].0 + 1.0).abs() < 1e-6 && (z[1].0 - 1.0).abs() < 1e-6);
        assert_eq!((z[0].1, z[0].2), (-1, -1));
        assert_eq!((z[1].1, z[1].2), (1, 1));
        assert_eq!(r.total_index(), 0);
        assert_eq!(r.total_oriented_index(), 2);
    }

    #[test]
    fn zbar_graph_is_totally_real() {
        let r = find_jump_points(&presets::graph_of_zbar(), &std_j(), 32, DEFAULT_TOL).unwrap();
        assert!(r.points.is_empty());
    }

    #[test]
    fn holomorphic_graph_is_identically_complex() {
        for d in [1, 2, 3] {
            assert!(matches!(
                find_jump_points(&presets::holomorphic_graph(d), &std_j(), 32, DEFAULT_TOL),
                Err(Error::IdenticallyComplex { .. })
            ));
        }
    }

    #[test]
    fn rejects_small_grids_and_bad_tolerance() {
        let t = presets::clifford_torus();
        assert!(find_jump_points(&t, &std_j(), 8, DEFAULT_TOL).is_err());
        assert!(find_jump_points(&t, &std_j(), 32, 0.0).is_err());
    }

    #[test]
    fn field_dump_covers_every_chart() {
        let f = sample_field(&presets::round_sphere(), &std_j(), 16).unwrap();
        assert_eq!(f.len(), 2 * 16 * 16);
        assert_eq!(f[0].chart_id, 0);
        assert_eq!(f[256].chart_id, 1);
    }
}
