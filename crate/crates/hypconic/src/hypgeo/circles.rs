//! Metric circles versus Euclidean circles in the conformal models.
//!
//! A Euclidean circle strictly inside the half-plane or the Poincaré disk is
//! a metric circle and vice versa; only the center shifts. In the Klein disk
//! metric circles are Euclidean ellipses, so the conversion is refused there.

use super::{ModelKind, ModelPoint, EuclideanCircle, BOUNDARY_GUARD};
use crate::error::HypError;

/// Euclidean description of the metric circle `{p : d(p, center) = r}`.
///
/// Half-plane center `x + iy`: Euclidean center `(x, y cosh r)`, radius
/// `y sinh r`.
pub fn metric_circle_to_euclidean(center: &ModelPoint, r: f64) -> Result<EuclideanCircle, HypError> {
    if r <= 0.0 || !r.is_finite() {
        return Err(HypError::NonPositiveRadius(r));
    }
    match center.model() {
        ModelKind::HalfPlane => {
            EuclideanCircle::new((center.x(), center.y() * r.cosh()), center.y() * r.sinh())
        }
        ModelKind::PoincareDisk => {
            // image of |w| = tanh(r/2) under the Möbius map centered at c
            let t = (0.5 * r).tanh();
            let c2 = center.x() * center.x() + center.y() * center.y();
            let denom = 1.0 - t * t * c2;
            let scale = (1.0 - t * t) / denom;
            EuclideanCircle::new(
                (center.x() * scale, center.y() * scale),
                t * (1.0 - c2) / denom,
            )
        }
        ModelKind::KleinDisk => Err(HypError::KleinCircleUnsupported),
    }
}

/// Inverse of [`metric_circle_to_euclidean`]: the metric center and radius of
/// a Euclidean circle lying strictly inside the model.
pub fn euclidean_circle_to_metric(
    circle: &EuclideanCircle,
    model: ModelKind,
) -> Result<(ModelPoint, f64), HypError> {
    match model {
        ModelKind::HalfPlane => {
            let (x0, y0) = circle.center;
            if y0 - circle.radius < BOUNDARY_GUARD {
                return Err(HypError::CircleNotInterior);
            }
            let r = (circle.radius / y0).atanh();
            let y = (y0 * y0 - circle.radius * circle.radius).sqrt();
            Ok((ModelPoint::half_plane(x0, y)?, r))
        }
        ModelKind::PoincareDisk => {
            let (ex, ey) = circle.center;
            let e = (ex * ex + ey * ey).sqrt();
            if e + circle.radius > 1.0 - BOUNDARY_GUARD {
                return Err(HypError::CircleNotInterior);
            }
            // hyperbolic midpoint of the two diametral points along the ray
            let u1 = e - circle.radius;
            let u2 = e + circle.radius;
            let m = u1.atanh() + u2.atanh(); // = 2 atanh(u_c)
            let r = u2.atanh() - u1.atanh();
            let uc = (0.5 * m).tanh();
            let (dx, dy) = if e < 1e-300 { (1.0, 0.0) } else { (ex / e, ey / e) };
            Ok((ModelPoint::poincare(uc * dx, uc * dy)?, r))
        }
        ModelKind::KleinDisk => Err(HypError::KleinCircleUnsupported),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypgeo::distance;
    use approx::assert_relative_eq;

    #[test]
    fn remark_example_center_shift() {
        // metric circle (i, log 2) has Euclidean center 5i/4 and radius 3/4
        let c = ModelPoint::half_plane(0.0, 1.0).unwrap();
        let e = metric_circle_to_euclidean(&c, 2.0f64.ln()).unwrap();
        assert_relative_eq!(e.center.0, 0.0, epsilon = 1e-15);
        assert_relative_eq!(e.center.1, 1.25, epsilon = 1e-14);
        assert_relative_eq!(e.radius, 0.75, epsilon = 1e-14);

        // scaling z -> 2z is an isometry: (2i, log 2) -> center 5i/2, radius 3/2
        let c = ModelPoint::half_plane(0.0, 2.0).unwrap();
        let e = metric_circle_to_euclidean(&c, 2.0f64.ln()).unwrap();
        assert_relative_eq!(e.center.1, 2.5, epsilon = 1e-14);
        assert_relative_eq!(e.radius, 1.5, epsilon = 1e-14);
    }

    #[test]
    fn small_radius_limit() {
        let c = ModelPoint::half_plane(0.0, 1.0).unwrap();
        let e = metric_circle_to_euclidean(&c, 1e-9).unwrap();
        assert_relative_eq!(e.center.1, 1.0, epsilon = 1e-12);
        assert!(e.radius < 2e-9);
    }

    #[test]
    fn klein_model_is_refused() {
        let c = ModelPoint::klein(0.2, 0.0).unwrap();
        assert!(matches!(
            metric_circle_to_euclidean(&c, 1.0),
            Err(HypError::KleinCircleUnsupported)
        ));
    }

    #[test]
    fn inverse_recovers_remark_example() {
        let e = EuclideanCircle::new((0.0, 1.25), 0.75).unwrap();
        let (c, r) = euclidean_circle_to_metric(&e, ModelKind::HalfPlane).unwrap();
        assert_relative_eq!(c.y(), 1.0, epsilon = 1e-14);
        assert_relative_eq!(r, 2.0f64.ln(), epsilon = 1e-14);

        let e = EuclideanCircle::new((0.0, 2.5), 1.5).unwrap();
        let (c, r) = euclidean_circle_to_metric(&e, ModelKind::HalfPlane).unwrap();
        assert_relative_eq!(c.y(), 2.0, epsilon = 1e-14);
        assert_relative_eq!(r, 2.0f64.ln(), epsilon = 1e-14);
    }

    #[test]
    fn disk_circle_centered_at_origin() {
        for t in [0.1, 0.5, 0.9] {
            let e = EuclideanCircle::new((0.0, 0.0), t).unwrap();
            let (c, r) = euclidean_circle_to_metric(&e, ModelKind::PoincareDisk).unwrap();
            assert_relative_eq!(c.x(), 0.0, epsilon = 1e-15);
            assert_relative_eq!(r, 2.0 * t.atanh(), epsilon = 1e-13);
        }
    }

    #[test]
    fn boundary_touching_circle_is_refused() {
        let e = EuclideanCircle::new((0.0, 1.0), 1.0).unwrap();
        assert!(matches!(
            euclidean_circle_to_metric(&e, ModelKind::HalfPlane),
            Err(HypError::CircleNotInterior)
        ));
        let e = EuclideanCircle::new((0.5, 0.0), 0.5).unwrap();
        assert!(matches!(
            euclidean_circle_to_metric(&e, ModelKind::PoincareDisk),
            Err(HypError::CircleNotInterior)
        ));
    }

    #[test]
    fn euclidean_description_matches_distances_pointwise() {
        // points of the Euclidean circle really are at metric distance r
        let center = ModelPoint::poincare(0.3, -0.2).unwrap();
        let r = 0.9;
        let e = metric_circle_to_euclidean(&center, r).unwrap();
        for k in 0..32 {
            let a = 2.0 * std::f64::consts::PI * k as f64 / 32.0;
            let p = ModelPoint::poincare(
                e.center.0 + e.radius * a.cos(),
                e.center.1 + e.radius * a.sin(),
            )
            .unwrap();
            assert_relative_eq!(distance(&center, &p).unwrap(), r, epsilon = 1e-12);
        }
    }
}
