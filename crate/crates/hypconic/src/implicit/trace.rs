//! Marching-squares tracing of implicit curves inside a model domain.
//!
//! Grid cells whose corners all lie inside the model are classified by
//! corner signs (zero counts as positive), edge crossings are refined by
//! bisection, and segments are chained into maximal polylines. Saddle cells
//! are disambiguated by the cell-center value. Output is deterministic for a
//! given field and region.

use super::boundary::ideal_boundary_points;
use super::poly::BivarPoly;
use crate::hypgeo::{IdealPoint, ModelKind};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// Rectangular tracing window inside a model, with grid pitch `h` and
/// per-crossing bisection depth.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct TraceRegion {
    pub model: ModelKind,
    pub xmin: f64,
    pub xmax: f64,
    pub ymin: f64,
    pub ymax: f64,
    pub h: f64,
    pub refine_steps: u32,
}

impl TraceRegion {
    /// The tracing window used for the figures: `x in [-4, 4]`,
    /// `y in (0, 4]`, `h = 1/512`.
    pub fn half_plane_default() -> Self {
        Self {
            model: ModelKind::HalfPlane,
            xmin: -4.0,
            xmax: 4.0,
            ymin: 0.0,
            ymax: 4.0,
            h: 1.0 / 512.0,
            refine_steps: 40,
        }
    }

    pub fn disk_default(model: ModelKind) -> Self {
        Self { model, xmin: -1.0, xmax: 1.0, ymin: -1.0, ymax: 1.0, h: 1.0 / 512.0, refine_steps: 40 }
    }

    pub fn with_h(mut self, h: f64) -> Self {
        self.h = h;
        self
    }

    fn inside_domain(&self, x: f64, y: f64) -> bool {
        match self.model {
            ModelKind::HalfPlane => y > 0.0,
            ModelKind::PoincareDisk | ModelKind::KleinDisk => x * x + y * y < 1.0,
        }
    }
}

/// One refined point of a traced polyline with the field value left there.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TracedPoint {
    pub x: f64,
    pub y: f64,
    pub residual: f64,
}

/// Polylines traced from one implicit curve.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SampledCurve {
    pub model: ModelKind,
    pub polylines: Vec<Vec<TracedPoint>>,
    /// Ideal boundary points of the underlying polynomial, when traced from
    /// one (empty for plain field traces).
    pub ideal_points: Vec<IdealPoint>,
}

impl SampledCurve {
    pub fn point_count(&self) -> usize {
        self.polylines.iter().map(|p| p.len()).sum()
    }

    pub fn points(&self) -> impl Iterator<Item = &TracedPoint> {
        self.polylines.iter().flatten()
    }

    pub fn max_abs_residual(&self) -> f64 {
        self.points().fold(0.0f64, |m, p| m.max(p.residual.abs()))
    }
}

const H_EDGE: u8 = 0;
const V_EDGE: u8 = 1;

type EdgeId = (usize, usize, u8);

struct Grid<'f> {
    field: &'f dyn Fn(f64, f64) -> f64,
    region: TraceRegion,
    nx: usize,
    values: Vec<f64>,
    valid: Vec<bool>,
}

impl<'f> Grid<'f> {
    fn node_xy(&self, i: usize, j: usize) -> (f64, f64) {
        (self.region.xmin + i as f64 * self.region.h, self.region.ymin + j as f64 * self.region.h)
    }

    fn value(&self, i: usize, j: usize) -> f64 {
        self.values[j * (self.nx + 1) + i]
    }

    fn is_valid(&self, i: usize, j: usize) -> bool {
        self.valid[j * (self.nx + 1) + i]
    }
}

fn negative(v: f64) -> bool {
    v < 0.0 // zero counts as positive, so node hits start no crossing
}

/// Traces a scalar field's zero set. Ideal-endpoint analysis is only
/// available for polynomial fields ([`trace`]).
pub fn trace_field(field: &dyn Fn(f64, f64) -> f64, region: &TraceRegion) -> SampledCurve {
    trace_impl(field, region, None)
}

/// Traces a polynomial's zero set and attaches its ideal boundary points.
pub fn trace(poly: &BivarPoly, region: &TraceRegion) -> SampledCurve {
    let f = |x: f64, y: f64| poly.eval(x, y);
    trace_impl(&f, region, Some(poly))
}

fn trace_impl(
    field: &dyn Fn(f64, f64) -> f64,
    region: &TraceRegion,
    poly: Option<&BivarPoly>,
) -> SampledCurve {
    let nx = ((region.xmax - region.xmin) / region.h).round().max(1.0) as usize;
    let ny = ((region.ymax - region.ymin) / region.h).round().max(1.0) as usize;
    let mut values = Vec::with_capacity((nx + 1) * (ny + 1));
    let mut valid = Vec::with_capacity((nx + 1) * (ny + 1));
    for j in 0..=ny {
        for i in 0..=nx {
            let x = region.xmin + i as f64 * region.h;
            let y = region.ymin + j as f64 * region.h;
            let ok = region.inside_domain(x, y);
            valid.push(ok);
            values.push(if ok { field(x, y) } else { f64::NAN });
        }
    }
    let grid = Grid { field, region: *region, nx, values, valid };

    let mut crossing_index: HashMap<EdgeId, usize> = HashMap::new();
    let mut points: Vec<TracedPoint> = Vec::new();
    let mut segments: Vec<(usize, usize)> = Vec::new();

    let mut crossing = |edge: EdgeId, grid: &Grid, points: &mut Vec<TracedPoint>| -> usize {
        *crossing_index.entry(edge).or_insert_with(|| {
            let (i, j, dir) = edge;
            let (x0, y0) = grid.node_xy(i, j);
            let (x1, y1) = if dir == H_EDGE {
                grid.node_xy(i + 1, j)
            } else {
                grid.node_xy(i, j + 1)
            };
            let f0 = grid.value(i, j);
            let (mut a, mut b) = ((x0, y0, f0), (x1, y1, 0.0));
            b.2 = if dir == H_EDGE { grid.value(i + 1, j) } else { grid.value(i, j + 1) };
            for _ in 0..grid.region.refine_steps {
                let mx = 0.5 * (a.0 + b.0);
                let my = 0.5 * (a.1 + b.1);
                let mv = (grid.field)(mx, my);
                if negative(mv) == negative(a.2) {
                    a = (mx, my, mv);
                } else {
                    b = (mx, my, mv);
                }
            }
            // final linear interpolation inside the last bracket
            let t = if (b.2 - a.2).abs() > 0.0 { a.2 / (a.2 - b.2) } else { 0.5 };
            let x = a.0 + t.clamp(0.0, 1.0) * (b.0 - a.0);
            let y = a.1 + t.clamp(0.0, 1.0) * (b.1 - a.1);
            points.push(TracedPoint { x, y, residual: (grid.field)(x, y) });
            points.len() - 1
        })
    };

    for j in 0..ny {
        for i in 0..nx {
            if !(grid.is_valid(i, j)
                && grid.is_valid(i + 1, j)
                && grid.is_valid(i + 1, j + 1)
                && grid.is_valid(i, j + 1))
            {
                continue;
            }
            let bl = negative(grid.value(i, j));
            let br = negative(grid.value(i + 1, j));
            let tr = negative(grid.value(i + 1, j + 1));
            let tl = negative(grid.value(i, j + 1));
            let case =
                (bl as usize) | (br as usize) << 1 | (tr as usize) << 2 | (tl as usize) << 3;
            if case == 0 || case == 15 {
                continue;
            }
            let bottom: EdgeId = (i, j, H_EDGE);
            let top: EdgeId = (i, j + 1, H_EDGE);
            let left: EdgeId = (i, j, V_EDGE);
            let right: EdgeId = (i + 1, j, V_EDGE);
            let pairs: &[(EdgeId, EdgeId)] = match case {
                1 | 14 => &[(left, bottom)],
                2 | 13 => &[(bottom, right)],
                3 | 12 => &[(left, right)],
                4 | 11 => &[(top, right)],
                6 | 9 => &[(bottom, top)],
                7 | 8 => &[(left, top)],
                5 => {
                    let (cx, cy) = {
                        let (x0, y0) = grid.node_xy(i, j);
                        (x0 + 0.5 * region.h, y0 + 0.5 * region.h)
                    };
                    if negative((grid.field)(cx, cy)) {
                        &[(left, top), (bottom, right)]
                    } else {
                        &[(left, bottom), (top, right)]
                    }
                }
                10 => {
                    let (cx, cy) = {
                        let (x0, y0) = grid.node_xy(i, j);
                        (x0 + 0.5 * region.h, y0 + 0.5 * region.h)
                    };
                    if negative((grid.field)(cx, cy)) {
                        &[(bottom, left), (top, right)]
                    } else {
                        &[(bottom, right), (top, left)]
                    }
                }
                _ => unreachable!(),
            };
            for (ea, eb) in pairs {
                let pa = crossing(*ea, &grid, &mut points);
                let pb = crossing(*eb, &grid, &mut points);
                segments.push((pa, pb));
            }
        }
    }

    let mut polylines = assemble_polylines(&points, &segments);

    // start separate polylines near curve singularities (lemniscate nodes)
    if let Some(p) = poly {
        let singular = singular_points(p, region);
        if !singular.is_empty() {
            polylines = split_near_singularities(polylines, &singular, 2.0 * region.h);
        }
    }

    normalize_polylines(&mut polylines);

    let ideal_points = match poly {
        Some(p) => ideal_boundary_points(p, region.model, None),
        None => Vec::new(),
    };
    SampledCurve { model: region.model, polylines, ideal_points }
}

fn assemble_polylines(points: &[TracedPoint], segments: &[(usize, usize)]) -> Vec<Vec<TracedPoint>> {
    let mut adjacency: HashMap<usize, Vec<usize>> = HashMap::new();
    for (sid, (a, b)) in segments.iter().enumerate() {
        adjacency.entry(*a).or_default().push(sid);
        adjacency.entry(*b).or_default().push(sid);
    }
    let mut used = vec![false; segments.len()];
    let mut polylines = Vec::new();
    for start in 0..segments.len() {
        if used[start] {
            continue;
        }
        used[start] = true;
        let (a, b) = segments[start];
        let mut chain = vec![a, b];
        // extend forward then backward; junction points (3+ segments) stop a
        // chain so nodes are never traversed
        for _ in 0..2 {
            loop {
                let tip = *chain.last().unwrap();
                let candidates = &adjacency[&tip];
                if candidates.len() != 2 {
                    break;
                }
                let next = candidates.iter().copied().find(|sid| !used[*sid]);
                let Some(sid) = next else { break };
                used[sid] = true;
                let (p, q) = segments[sid];
                chain.push(if p == tip { q } else { p });
            }
            chain.reverse();
        }
        polylines.push(chain.into_iter().map(|idx| points[idx]).collect());
    }
    polylines
}

/// Interior singular points: common zeros of both partials lying on the
/// curve, found by Newton iteration from cells where both partials change
/// sign.
fn singular_points(poly: &BivarPoly, region: &TraceRegion) -> Vec<(f64, f64)> {
    let px = poly.partial_x();
    let py = poly.partial_y();
    let pxx = px.partial_x();
    let pxy = px.partial_y();
    let pyy = py.partial_y();
    let scale = poly.max_abs_coeff().max(1.0);
    let coarse = (region.h * 16.0).min((region.xmax - region.xmin) / 8.0);
    let nx = ((region.xmax - region.xmin) / coarse).ceil() as usize;
    let ny = ((region.ymax - region.ymin) / coarse).ceil() as usize;
    let mut found: Vec<(f64, f64)> = Vec::new();
    for j in 0..ny {
        for i in 0..nx {
            let x0 = region.xmin + i as f64 * coarse;
            let y0 = region.ymin + j as f64 * coarse;
            let corners = [(x0, y0), (x0 + coarse, y0), (x0 + coarse, y0 + coarse), (x0, y0 + coarse)];
            let sx: Vec<bool> = corners.iter().map(|(x, y)| px.eval(*x, *y) < 0.0).collect();
            let sy: Vec<bool> = corners.iter().map(|(x, y)| py.eval(*x, *y) < 0.0).collect();
            let x_changes = sx.iter().any(|s| *s != sx[0]);
            let y_changes = sy.iter().any(|s| *s != sy[0]);
            if !(x_changes && y_changes) {
                continue;
            }
            // Newton on the gradient from the cell center
            let (mut x, mut y) = (x0 + 0.5 * coarse, y0 + 0.5 * coarse);
            let mut converged = false;
            for _ in 0..30 {
                let gx = px.eval(x, y);
                let gy = py.eval(x, y);
                let a = pxx.eval(x, y);
                let b = pxy.eval(x, y);
                let c = pyy.eval(x, y);
                let det = a * c - b * b;
                if det.abs() < 1e-14 * scale * scale {
                    break;
                }
                let dx = (c * gx - b * gy) / det;
                let dy = (a * gy - b * gx) / det;
                x -= dx;
                y -= dy;
                if dx.abs() + dy.abs() < 1e-13 {
                    converged = true;
                    break;
                }
            }
            if converged
                && px.eval(x, y).abs() < 1e-8 * scale
                && py.eval(x, y).abs() < 1e-8 * scale
                && poly.eval(x, y).abs() < 1e-7 * scale
                && region.inside_domain(x, y)
                && !found.iter().any(|(fx, fy)| (fx - x).abs() + (fy - y).abs() < 1e-6)
            {
                found.push((x, y));
            }
        }
    }
    found
}

fn split_near_singularities(
    polylines: Vec<Vec<TracedPoint>>,
    singular: &[(f64, f64)],
    radius: f64,
) -> Vec<Vec<TracedPoint>> {
    let near = |p: &TracedPoint| {
        singular.iter().any(|(sx, sy)| ((p.x - sx).powi(2) + (p.y - sy).powi(2)).sqrt() < radius)
    };
    let mut out = Vec::new();
    for line in polylines {
        let mut current: Vec<TracedPoint> = Vec::new();
        for p in line {
            if near(&p) {
                if current.len() > 1 {
                    out.push(std::mem::take(&mut current));
                } else {
                    current.clear();
                }
            } else {
                current.push(p);
            }
        }
        if current.len() > 1 {
            out.push(current);
        }
    }
    out
}

fn normalize_polylines(polylines: &mut Vec<Vec<TracedPoint>>) {
    let key = |p: &TracedPoint| (p.x, p.y);
    for line in polylines.iter_mut() {
        if line.len() < 2 {
            continue;
        }
        let closed = line.first().map(key) == line.last().map(key);
        if closed {
            line.pop();
            let min_idx = (0..line.len())
                .min_by(|a, b| key(&line[*a]).partial_cmp(&key(&line[*b])).unwrap())
                .unwrap();
            line.rotate_left(min_idx);
            if line.len() > 2 && key(&line[1]) > key(&line[line.len() - 1]) {
                line[1..].reverse();
            }
            let first = line[0];
            line.push(first);
        } else if key(line.first().unwrap()) > key(line.last().unwrap()) {
            line.reverse();
        }
    }
    polylines.sort_by(|a, b| {
        let ka = a.first().map(key);
        let kb = b.first().map(key);
        ka.partial_cmp(&kb).unwrap().then(a.len().cmp(&b.len()))
    });
    polylines.retain(|l| l.len() >= 2);
}

/// Hausdorff distance between the point sets of two sampled curves.
pub fn hausdorff_distance(a: &SampledCurve, b: &SampledCurve) -> f64 {
    let pa: Vec<(f64, f64)> = a.points().map(|p| (p.x, p.y)).collect();
    let pb: Vec<(f64, f64)> = b.points().map(|p| (p.x, p.y)).collect();
    let one_sided = |from: &[(f64, f64)], to: &[(f64, f64)]| {
        from.iter()
            .map(|p| {
                to.iter()
                    .map(|q| ((p.0 - q.0).powi(2) + (p.1 - q.1).powi(2)).sqrt())
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0f64, f64::max)
    };
    one_sided(&pa, &pb).max(one_sided(&pb, &pa))
}
