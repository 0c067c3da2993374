//! Euclidean supports of horocycles and hypercycles in the Poincaré disk.
//!
//! A horocycle is a Euclidean circle internally tangent to the unit circle
//! at its ideal point; a hypercycle is the arc of a circle through the two
//! ideal endpoints of its axis, meeting the absolute at the angle `phi` with
//! `sin(phi) = tanh(h)`.

use super::ConicSpec;
use crate::error::ConicError;
use crate::hypgeo::{
    EuclideanCircle, Geodesic, GeodesicShape, IdealCoord, IdealPoint, ModelKind,
    signed_distance_to_geodesic, ModelPoint,
};

/// Euclidean support of a cycle in the Poincaré disk.
#[derive(Debug, Clone, PartialEq)]
pub enum CycleSupport {
    Circle(EuclideanCircle),
    /// Straight chord (a diameter-axis hypercycle with `h = 0`, or the rare
    /// coincidence `tanh h = cos(half-gap)` where the constant-distance
    /// curve is the Euclidean chord itself).
    Chord { a: (f64, f64), b: (f64, f64) },
}

/// A horocycle or hypercycle as drawn in the Poincaré disk.
#[derive(Debug, Clone, PartialEq)]
pub struct CycleCurve {
    pub support: CycleSupport,
    /// Boundary contact: one tangency point for a horocycle, the two axis
    /// endpoints for a hypercycle.
    pub ideal: Vec<IdealPoint>,
}

impl CycleCurve {
    /// Points of the support inside the open unit disk, for sampling tests
    /// and plotting.
    pub fn sample(&self, n: usize) -> Vec<ModelPoint> {
        let mut out = Vec::new();
        match &self.support {
            CycleSupport::Circle(c) => {
                for k in 0..n {
                    let t = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
                    let x = c.center.0 + c.radius * t.cos();
                    let y = c.center.1 + c.radius * t.sin();
                    if x * x + y * y < (1.0 - 1e-7) * (1.0 - 1e-7) {
                        if let Ok(p) = ModelPoint::poincare(x, y) {
                            out.push(p);
                        }
                    }
                }
            }
            CycleSupport::Chord { a, b } => {
                for k in 1..n {
                    let t = k as f64 / n as f64;
                    let x = a.0 + t * (b.0 - a.0);
                    let y = a.1 + t * (b.1 - a.1);
                    if x * x + y * y < (1.0 - 1e-7) * (1.0 - 1e-7) {
                        if let Ok(p) = ModelPoint::poincare(x, y) {
                            out.push(p);
                        }
                    }
                }
            }
        }
        out
    }
}

/// Euclidean description of a horocycle or hypercycle in the Poincaré disk.
///
/// Horocycle: the circle tangent to the unit circle at the ideal point and
/// passing through the given interior point. Hypercycle: the arc through the
/// axis endpoints on the positive side of the axis at signed distance `h`.
pub fn cycle_curve(spec: &ConicSpec) -> Result<CycleCurve, ConicError> {
    match spec {
        ConicSpec::Horocycle { ideal, through } => {
            let xi = ideal.convert(ModelKind::PoincareDisk);
            let alpha = match xi.coord() {
                IdealCoord::Angle(a) => a,
                _ => unreachable!("disk ideal points carry angles"),
            };
            let q = through.convert(ModelKind::PoincareDisk);
            let dot = q.x() * alpha.cos() + q.y() * alpha.sin();
            let t = (1.0 - q.x() * q.x() - q.y() * q.y()) / (2.0 * (1.0 - dot));
            let circle = EuclideanCircle::new((t * alpha.cos(), t * alpha.sin()), 1.0 - t)?;
            Ok(CycleCurve { support: CycleSupport::Circle(circle), ideal: vec![xi] })
        }
        ConicSpec::Hypercycle { axis, h } => {
            spec.validate()?;
            hypercycle_curve(axis, *h)
        }
        _ => Err(ConicError::InvalidParams(
            "cycle_curve applies to horocycle and hypercycle specs".into(),
        )),
    }
}

fn hypercycle_curve(axis: &Geodesic, h: f64) -> Result<CycleCurve, ConicError> {
    let axis_disk = axis.convert(ModelKind::PoincareDisk);
    let (e1, e2) = axis_disk.ideal_endpoints();
    let u = e1.position().unwrap();
    let v = e2.position().unwrap();
    if h == 0.0 {
        let support = match axis_disk.shape() {
            GeodesicShape::Diameter { .. } => CycleSupport::Chord { a: u, b: v },
            GeodesicShape::OrthoArc { cx, cy, radius } => {
                CycleSupport::Circle(EuclideanCircle::new((cx, cy), radius)?)
            }
            _ => unreachable!("disk geodesics"),
        };
        return Ok(CycleCurve { support, ideal: vec![e1, e2] });
    }

    let tau = h.tanh();
    // frame the chord: u = e^{i(mu + delta)}, v = e^{i(mu - delta)}
    let sum = (u.0 + v.0, u.1 + v.1);
    let sum_norm = (sum.0 * sum.0 + sum.1 * sum.1).sqrt();
    let candidates: Vec<CycleSupport> = if sum_norm < 1e-9 {
        // diameter: centers at +- i e^{i mu} / sinh h, radius coth h
        let dir = (u.0 / 1.0, u.1 / 1.0);
        let perp = (-dir.1, dir.0);
        let s = 1.0 / h.sinh();
        let radius = 1.0 / h.tanh();
        [1.0f64, -1.0]
            .into_iter()
            .map(|sg| {
                CycleSupport::Circle(EuclideanCircle {
                    center: (sg * s * perp.0, sg * s * perp.1),
                    radius,
                })
            })
            .collect()
    } else {
        let mu_dir = (sum.0 / sum_norm, sum.1 / sum_norm);
        let a = u.0 * mu_dir.0 + u.1 * mu_dir.1; // cos(delta)
        let quad_a = a * a - tau * tau;
        let quad_b = -2.0 * a * (1.0 - tau * tau);
        let quad_c = 1.0 - tau * tau;
        if quad_a.abs() < 1e-12 {
            // tanh h = cos(delta): one solution plus the straight chord
            let t = -quad_c / quad_b;
            let radius = (1.0 - 2.0 * t * a + t * t).max(0.0).sqrt();
            vec![
                CycleSupport::Circle(EuclideanCircle {
                    center: (t * mu_dir.0, t * mu_dir.1),
                    radius,
                }),
                CycleSupport::Chord { a: u, b: v },
            ]
        } else {
            let disc = (quad_b * quad_b - 4.0 * quad_a * quad_c).max(0.0).sqrt();
            [(-quad_b + disc) / (2.0 * quad_a), (-quad_b - disc) / (2.0 * quad_a)]
                .into_iter()
                .map(|t| {
                    let radius = (1.0 - 2.0 * t * a + t * t).max(0.0).sqrt();
                    CycleSupport::Circle(EuclideanCircle {
                        center: (t * mu_dir.0, t * mu_dir.1),
                        radius,
                    })
                })
                .collect()
        }
    };

    // keep the branch on the positive side of the axis
    for support in candidates {
        let trial = CycleCurve { support, ideal: vec![e1, e2] };
        let samples = trial.sample(64);
        if samples.is_empty() {
            continue;
        }
        let ok = samples.iter().all(|p| {
            signed_distance_to_geodesic(p, &axis_disk)
                .map(|d| (d - h).abs() < 1e-9 * (1.0 + h))
                .unwrap_or(false)
        });
        if ok {
            return Ok(trial);
        }
    }
    Err(ConicError::InvalidParams("no hypercycle branch matched the requested side".into()))
}
