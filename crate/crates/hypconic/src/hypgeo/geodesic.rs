//! Geodesics and reflections.
//!
//! Half-plane geodesics are stored as a vertical-or-arc tagged union so the
//! reflection formulas `z -> 2a - conj(z)` and `z -> a + rho^2/(conj(z) - a)`
//! are branch-free per variant. Disk geodesics are diameters or arcs of
//! circles orthogonal to the unit circle; Klein geodesics are chords.

use super::{distance, IdealCoord, IdealPoint, ModelKind, ModelPoint};
use crate::error::HypError;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum GeodesicShape {
    /// Half-plane vertical ray with foot `x` on the real axis.
    Vertical { x: f64 },
    /// Half-plane semicircle centered at `(center, 0)` with radius > 0.
    Arc { center: f64, radius: f64 },
    /// Poincaré-disk diameter in direction `angle`.
    Diameter { angle: f64 },
    /// Poincaré-disk arc of a circle orthogonal to the unit circle
    /// (so `cx^2 + cy^2 = 1 + radius^2`).
    OrthoArc { cx: f64, cy: f64, radius: f64 },
    /// Klein-disk chord with both endpoints on the unit circle.
    Chord { x1: f64, y1: f64, x2: f64, y2: f64 },
}

/// A hyperbolic line in a given model.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Geodesic {
    model: ModelKind,
    shape: GeodesicShape,
}

impl Geodesic {
    pub fn vertical(x: f64) -> Geodesic {
        Geodesic { model: ModelKind::HalfPlane, shape: GeodesicShape::Vertical { x } }
    }

    pub fn arc(center: f64, radius: f64) -> Result<Geodesic, HypError> {
        if radius > 0.0 && radius.is_finite() {
            Ok(Geodesic { model: ModelKind::HalfPlane, shape: GeodesicShape::Arc { center, radius } })
        } else {
            Err(HypError::NonPositiveRadius(radius))
        }
    }

    pub fn diameter(angle: f64) -> Geodesic {
        Geodesic { model: ModelKind::PoincareDisk, shape: GeodesicShape::Diameter { angle } }
    }

    pub fn ortho_arc(cx: f64, cy: f64, radius: f64) -> Result<Geodesic, HypError> {
        if radius <= 0.0 || !radius.is_finite() {
            return Err(HypError::NonPositiveRadius(radius));
        }
        let ortho = (cx * cx + cy * cy - 1.0 - radius * radius).abs();
        if ortho > 1e-9 * (1.0 + radius * radius) {
            return Err(HypError::InvalidGeodesic(
                "arc circle is not orthogonal to the unit circle".into(),
            ));
        }
        Ok(Geodesic { model: ModelKind::PoincareDisk, shape: GeodesicShape::OrthoArc { cx, cy, radius } })
    }

    pub fn chord(p1: (f64, f64), p2: (f64, f64)) -> Result<Geodesic, HypError> {
        for p in [p1, p2] {
            if ((p.0 * p.0 + p.1 * p.1).sqrt() - 1.0).abs() > 1e-9 {
                return Err(HypError::InvalidGeodesic("chord endpoint not on the unit circle".into()));
            }
        }
        if (p1.0 - p2.0).abs() < 1e-12 && (p1.1 - p2.1).abs() < 1e-12 {
            return Err(HypError::InvalidGeodesic("chord endpoints coincide".into()));
        }
        Ok(Geodesic {
            model: ModelKind::KleinDisk,
            shape: GeodesicShape::Chord { x1: p1.0, y1: p1.1, x2: p2.0, y2: p2.1 },
        })
    }

    pub fn model(&self) -> ModelKind {
        self.model
    }

    pub fn shape(&self) -> GeodesicShape {
        self.shape
    }

    /// The two ideal endpoints of the geodesic.
    pub fn ideal_endpoints(&self) -> (IdealPoint, IdealPoint) {
        match self.shape {
            GeodesicShape::Vertical { x } => (IdealPoint::axis(x), IdealPoint::infinity()),
            GeodesicShape::Arc { center, radius } => {
                (IdealPoint::axis(center - radius), IdealPoint::axis(center + radius))
            }
            GeodesicShape::Diameter { angle } => (
                IdealPoint::angle(self.model, angle).unwrap(),
                IdealPoint::angle(self.model, angle + std::f64::consts::PI).unwrap(),
            ),
            GeodesicShape::OrthoArc { cx, cy, radius: _ } => {
                // endpoints u on the unit circle satisfy u . c = 1
                let n = (cx * cx + cy * cy).sqrt();
                let (ux, uy) = (cx / n, cy / n);
                let along = 1.0 / n;
                let perp = (1.0 - along * along).max(0.0).sqrt();
                let e1 = (along * ux - perp * uy, along * uy + perp * ux);
                let e2 = (along * ux + perp * uy, along * uy - perp * ux);
                (
                    IdealPoint::angle(self.model, f64::atan2(e1.1, e1.0)).unwrap(),
                    IdealPoint::angle(self.model, f64::atan2(e2.1, e2.0)).unwrap(),
                )
            }
            GeodesicShape::Chord { x1, y1, x2, y2 } => (
                IdealPoint::angle(self.model, f64::atan2(y1, x1)).unwrap(),
                IdealPoint::angle(self.model, f64::atan2(y2, x2)).unwrap(),
            ),
        }
    }

    /// Rebuilds a geodesic of `model` from two distinct ideal endpoints
    /// (given in any model; they are converted first).
    pub fn from_ideal_endpoints(
        model: ModelKind,
        e1: &IdealPoint,
        e2: &IdealPoint,
    ) -> Result<Geodesic, HypError> {
        let a = e1.convert(model);
        let b = e2.convert(model);
        match model {
            ModelKind::HalfPlane => match (a.coord(), b.coord()) {
                (IdealCoord::Infinity, IdealCoord::Infinity) => {
                    Err(HypError::InvalidGeodesic("coincident ideal endpoints".into()))
                }
                (IdealCoord::Infinity, IdealCoord::Axis(t))
                | (IdealCoord::Axis(t), IdealCoord::Infinity) => Ok(Geodesic::vertical(t)),
                (IdealCoord::Axis(s), IdealCoord::Axis(t)) => {
                    if (s - t).abs() < 1e-12 {
                        Err(HypError::InvalidGeodesic("coincident ideal endpoints".into()))
                    } else {
                        Geodesic::arc(0.5 * (s + t), 0.5 * (s - t).abs())
                    }
                }
                _ => unreachable!("half-plane ideal coords"),
            },
            ModelKind::PoincareDisk => {
                let (pa, pb) = (a.position().unwrap(), b.position().unwrap());
                let dot = pa.0 * pb.0 + pa.1 * pb.1;
                if dot < -1.0 + 1e-12 {
                    // antipodal endpoints: a diameter
                    return Ok(Geodesic::diameter(f64::atan2(pa.1, pa.0)));
                }
                if dot > 1.0 - 1e-12 {
                    return Err(HypError::InvalidGeodesic("coincident ideal endpoints".into()));
                }
                // solve c . pa = 1, c . pb = 1
                let det = pa.0 * pb.1 - pa.1 * pb.0;
                let cx = (pb.1 - pa.1) / det;
                let cy = (pa.0 - pb.0) / det;
                let radius = (cx * cx + cy * cy - 1.0).max(0.0).sqrt();
                Geodesic::ortho_arc(cx, cy, radius)
            }
            ModelKind::KleinDisk => {
                let (pa, pb) = (a.position().unwrap(), b.position().unwrap());
                Geodesic::chord(pa, pb)
            }
        }
    }

    /// Converts the geodesic to `target` by transporting its ideal endpoints.
    pub fn convert(&self, target: ModelKind) -> Geodesic {
        if self.model == target {
            return *self;
        }
        let (a, b) = self.ideal_endpoints();
        Geodesic::from_ideal_endpoints(target, &a, &b).expect("distinct endpoints stay distinct")
    }

    /// Geodesic through two distinct interior points of the same model.
    pub fn through(p: &ModelPoint, q: &ModelPoint) -> Result<Geodesic, HypError> {
        if p.model() != q.model() {
            return Err(HypError::ModelMismatch { expected: p.model(), got: q.model() });
        }
        let (hp, hq) = (p.convert(ModelKind::HalfPlane), q.convert(ModelKind::HalfPlane));
        if (hp.x() - hq.x()).abs() < 1e-12 && (hp.y() - hq.y()).abs() < 1e-12 {
            return Err(HypError::InvalidGeodesic("points coincide".into()));
        }
        let g = if (hp.x() - hq.x()).abs() < 1e-12 {
            Geodesic::vertical(hp.x())
        } else {
            let a = (hp.x() * hp.x() + hp.y() * hp.y() - hq.x() * hq.x() - hq.y() * hq.y())
                / (2.0 * (hp.x() - hq.x()));
            let radius = ((hp.x() - a).powi(2) + hp.y() * hp.y()).sqrt();
            Geodesic::arc(a, radius)?
        };
        Ok(g.convert(p.model()))
    }

    /// Whether `p` lies on the geodesic within Euclidean tolerance `tol`.
    pub fn contains(&self, p: &ModelPoint, tol: f64) -> bool {
        if p.model() != self.model {
            return false;
        }
        match self.shape {
            GeodesicShape::Vertical { x } => (p.x() - x).abs() <= tol,
            GeodesicShape::Arc { center, radius } => {
                (((p.x() - center).powi(2) + p.y() * p.y()).sqrt() - radius).abs() <= tol
            }
            GeodesicShape::Diameter { angle } => {
                (p.x() * angle.sin() - p.y() * angle.cos()).abs() <= tol
            }
            GeodesicShape::OrthoArc { cx, cy, radius } => {
                (((p.x() - cx).powi(2) + (p.y() - cy).powi(2)).sqrt() - radius).abs() <= tol
            }
            GeodesicShape::Chord { x1, y1, x2, y2 } => {
                let cross = (x2 - x1) * (p.y() - y1) - (y2 - y1) * (p.x() - x1);
                cross.abs() / ((x2 - x1).hypot(y2 - y1)) <= tol
            }
        }
    }
}

/// Reflects an interior point across a geodesic of the same model.
pub fn reflect_point(p: &ModelPoint, line: &Geodesic) -> Result<ModelPoint, HypError> {
    if p.model() != line.model() {
        return Err(HypError::ModelMismatch { expected: line.model(), got: p.model() });
    }
    let z = p.to_complex();
    let w = match line.shape() {
        GeodesicShape::Vertical { x } => Complex64::new(2.0 * x - z.re, z.im),
        GeodesicShape::Arc { center, radius } => {
            let a = Complex64::new(center, 0.0);
            a + radius * radius / (z.conj() - a)
        }
        GeodesicShape::Diameter { angle } => Complex64::from_polar(1.0, 2.0 * angle) * z.conj(),
        GeodesicShape::OrthoArc { cx, cy, radius } => {
            let c = Complex64::new(cx, cy);
            c + radius * radius / (z.conj() - c.conj())
        }
        GeodesicShape::Chord { .. } => {
            let pd = p.convert(ModelKind::PoincareDisk);
            let ld = line.convert(ModelKind::PoincareDisk);
            return Ok(reflect_point(&pd, &ld)?.convert(ModelKind::KleinDisk));
        }
    };
    Ok(ModelPoint::from_complex_unchecked(p.model(), w))
}

/// Reflects an ideal point across a geodesic of the same model.
pub fn reflect_ideal(p: &IdealPoint, line: &Geodesic) -> Result<IdealPoint, HypError> {
    if p.model() != line.model() {
        return Err(HypError::ModelMismatch { expected: line.model(), got: p.model() });
    }
    match line.shape() {
        GeodesicShape::Vertical { x } => Ok(match p.coord() {
            IdealCoord::Axis(t) => IdealPoint::axis(2.0 * x - t),
            IdealCoord::Infinity => IdealPoint::infinity(),
            IdealCoord::Angle(_) => unreachable!(),
        }),
        GeodesicShape::Arc { center, radius } => Ok(match p.coord() {
            IdealCoord::Axis(t) if (t - center).abs() < 1e-300 => IdealPoint::infinity(),
            IdealCoord::Axis(t) => IdealPoint::axis(center + radius * radius / (t - center)),
            IdealCoord::Infinity => IdealPoint::axis(center),
            IdealCoord::Angle(_) => unreachable!(),
        }),
        GeodesicShape::Diameter { angle } => Ok(match p.coord() {
            IdealCoord::Angle(a) => IdealPoint::angle(p.model(), 2.0 * angle - a)?,
            _ => unreachable!(),
        }),
        GeodesicShape::OrthoArc { cx, cy, radius } => match p.coord() {
            IdealCoord::Angle(a) => {
                let z = Complex64::from_polar(1.0, a);
                let c = Complex64::new(cx, cy);
                let w = c + radius * radius / (z.conj() - c.conj());
                IdealPoint::angle(p.model(), f64::atan2(w.im, w.re))
            }
            _ => unreachable!(),
        },
        GeodesicShape::Chord { .. } => {
            let pd = p.convert(ModelKind::PoincareDisk);
            let ld = line.convert(ModelKind::PoincareDisk);
            Ok(reflect_ideal(&pd, &ld)?.convert(ModelKind::KleinDisk))
        }
    }
}

/// Reflects a geodesic across another geodesic by transporting its ideal
/// endpoints.
pub fn reflect_geodesic(g: &Geodesic, line: &Geodesic) -> Result<Geodesic, HypError> {
    let (a, b) = g.ideal_endpoints();
    let ra = reflect_ideal(&a, line)?;
    let rb = reflect_ideal(&b, line)?;
    Geodesic::from_ideal_endpoints(g.model(), &ra, &rb)
}

/// Distance from a point to a geodesic: half the distance to the mirror
/// image, `d(z, l) = d(z, sigma_l(z)) / 2`.
pub fn distance_to_geodesic(p: &ModelPoint, line: &Geodesic) -> Result<f64, HypError> {
    let w = reflect_point(p, line)?;
    Ok(0.5 * distance(p, &w)?)
}

/// Signed variant used by hypercycles: positive on one fixed side of the
/// line. For vertical lines the positive side is x > foot; for half-plane
/// arcs it is the outside of the arc circle; for diameters the left of the
/// direction vector; for Poincaré arcs the outside of the arc circle; Klein
/// chords take the sign of the cross product with the chord direction.
pub fn signed_distance_to_geodesic(p: &ModelPoint, line: &Geodesic) -> Result<f64, HypError> {
    let d = distance_to_geodesic(p, line)?;
    let side = match line.shape() {
        GeodesicShape::Vertical { x } => p.x() - x,
        GeodesicShape::Arc { center, radius } => {
            ((p.x() - center).powi(2) + p.y() * p.y()).sqrt() - radius
        }
        GeodesicShape::Diameter { angle } => p.y() * angle.cos() - p.x() * angle.sin(),
        GeodesicShape::OrthoArc { cx, cy, radius } => {
            ((p.x() - cx).powi(2) + (p.y() - cy).powi(2)).sqrt() - radius
        }
        GeodesicShape::Chord { x1, y1, x2, y2 } => {
            (x2 - x1) * (p.y() - y1) - (y2 - y1) * (p.x() - x1)
        }
    };
    Ok(if side < 0.0 { -d } else { d })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn hp(x: f64, y: f64) -> ModelPoint {
        ModelPoint::half_plane(x, y).unwrap()
    }

    #[test]
    fn reflect_across_circle_is_inversion() {
        // reflect i across |z| = R gives i R^2
        for r in [2.0, 0.7, 5.0] {
            let line = Geodesic::arc(0.0, r).unwrap();
            let w = reflect_point(&hp(0.0, 1.0), &line).unwrap();
            assert_relative_eq!(w.x(), 0.0, epsilon = 1e-14);
            assert_relative_eq!(w.y(), r * r, epsilon = 1e-12);
        }
    }

    #[test]
    fn reflect_across_vertical_is_euclidean_mirror() {
        let line = Geodesic::vertical(0.0);
        let w = reflect_point(&hp(1.0, 1.0), &line).unwrap();
        assert_eq!((w.x(), w.y()), (-1.0, 1.0));
    }

    #[test]
    fn points_on_the_geodesic_are_fixed() {
        let line = Geodesic::arc(0.0, 2.0).unwrap();
        let p = hp(0.0, 2.0);
        let w = reflect_point(&p, &line).unwrap();
        assert_relative_eq!(w.x(), p.x(), epsilon = 1e-14);
        assert_relative_eq!(w.y(), p.y(), epsilon = 1e-14);
    }

    #[test]
    fn reflection_is_an_involution() {
        let line = Geodesic::arc(0.7, 1.3).unwrap();
        let p = hp(-0.4, 2.1);
        let w = reflect_point(&reflect_point(&p, &line).unwrap(), &line).unwrap();
        assert_relative_eq!(w.x(), p.x(), epsilon = 1e-12);
        assert_relative_eq!(w.y(), p.y(), epsilon = 1e-12);
    }

    #[test]
    fn distance_to_arc_geodesic() {
        // d(i, |z|=R) = log R, and d(3i, |z|=2) = log(3/2)
        for r in [2.0, 3.0, 10.0] {
            let line = Geodesic::arc(0.0, r).unwrap();
            let d = distance_to_geodesic(&hp(0.0, 1.0), &line).unwrap();
            assert_relative_eq!(d, r.ln(), epsilon = 1e-13);
        }
        let line = Geodesic::arc(0.0, 2.0).unwrap();
        let d = distance_to_geodesic(&hp(0.0, 3.0), &line).unwrap();
        assert_relative_eq!(d, 1.5f64.ln(), epsilon = 1e-13);
        // and a point on the geodesic has distance 0
        let d = distance_to_geodesic(&hp(0.0, 2.0), &line).unwrap();
        assert!(d.abs() < 1e-12);
    }

    #[test]
    fn geodesic_conversion_round_trip() {
        let g = Geodesic::arc(0.5, 1.5).unwrap();
        let back = g.convert(ModelKind::KleinDisk).convert(ModelKind::HalfPlane);
        match back.shape() {
            GeodesicShape::Arc { center, radius } => {
                assert_relative_eq!(center, 0.5, epsilon = 1e-10);
                assert_relative_eq!(radius, 1.5, epsilon = 1e-10);
            }
            other => panic!("expected an arc, got {other:?}"),
        }
        // the imaginary axis maps to a disk diameter
        let v = Geodesic::vertical(0.0).convert(ModelKind::PoincareDisk);
        assert!(matches!(v.shape(), GeodesicShape::Diameter { .. }));
    }

    #[test]
    fn through_two_points() {
        let g = Geodesic::through(&hp(0.0, 1.0), &hp(1.0, 1.0)).unwrap();
        match g.shape() {
            GeodesicShape::Arc { center, radius } => {
                assert_relative_eq!(center, 0.5, epsilon = 1e-12);
                assert_relative_eq!(radius, 1.25f64.sqrt(), epsilon = 1e-12);
            }
            other => panic!("expected an arc, got {other:?}"),
        }
        assert!(g.contains(&hp(0.0, 1.0), 1e-9));
        let v = Geodesic::through(&hp(2.0, 1.0), &hp(2.0, 5.0)).unwrap();
        assert!(matches!(v.shape(), GeodesicShape::Vertical { x } if (x - 2.0).abs() < 1e-12));
    }

    #[test]
    fn reflection_preserves_distances_to_the_line() {
        let line = Geodesic::arc(-0.3, 2.4).unwrap();
        let p = hp(1.1, 0.8);
        let w = reflect_point(&p, &line).unwrap();
        let dp = distance_to_geodesic(&p, &line).unwrap();
        let dw = distance_to_geodesic(&w, &line).unwrap();
        assert_relative_eq!(dp, dw, epsilon = 1e-12);
    }

    #[test]
    fn klein_reflection_via_poincare() {
        // Klein (0,0) reflected across the chord y = 1/2 lands at (0, 4/5)
        let s3 = 3.0f64.sqrt() / 2.0;
        let chord = Geodesic::chord((s3, 0.5), (-s3, 0.5)).unwrap();
        let p = ModelPoint::klein(0.0, 0.0).unwrap();
        let w = reflect_point(&p, &chord).unwrap();
        assert_relative_eq!(w.x(), 0.0, epsilon = 1e-12);
        assert_relative_eq!(w.y(), 0.8, epsilon = 1e-12);
    }

    #[test]
    fn signed_distance_changes_sign_across_the_line() {
        let line = Geodesic::vertical(0.0);
        let a = signed_distance_to_geodesic(&hp(1.0, 1.0), &line).unwrap();
        let b = signed_distance_to_geodesic(&hp(-1.0, 1.0), &line).unwrap();
        assert_relative_eq!(a, -b, epsilon = 1e-13);
        assert!(a > 0.0);
    }
}
