//! Conversions between the three models.
//!
//! Half-plane -> Poincaré disk is the Cayley map `z -> (z - i)/(z + i)`;
//! Poincaré -> Klein is the radial map `z -> 2z/(1 + |z|^2)`. Both are
//! isometries for the metrics used here, and both extend to the ideal
//! boundary.

use super::{IdealCoord, IdealPoint, ModelKind, ModelPoint};
use num_complex::Complex64;

const I: Complex64 = Complex64::new(0.0, 1.0);

fn half_plane_to_poincare(z: Complex64) -> Complex64 {
    (z - I) / (z + I)
}

fn poincare_to_half_plane(w: Complex64) -> Complex64 {
    I * (Complex64::new(1.0, 0.0) + w) / (Complex64::new(1.0, 0.0) - w)
}

fn poincare_to_klein(w: Complex64) -> Complex64 {
    2.0 * w / (1.0 + w.norm_sqr())
}

fn klein_to_poincare(k: Complex64) -> Complex64 {
    k / (1.0 + (1.0 - k.norm_sqr()).max(0.0).sqrt())
}

fn to_poincare(p: &ModelPoint) -> Complex64 {
    let z = p.to_complex();
    match p.model() {
        ModelKind::HalfPlane => half_plane_to_poincare(z),
        ModelKind::PoincareDisk => z,
        ModelKind::KleinDisk => klein_to_poincare(z),
    }
}

pub(super) fn convert_point(p: &ModelPoint, target: ModelKind) -> ModelPoint {
    if p.model() == target {
        return *p;
    }
    let w = to_poincare(p);
    let z = match target {
        ModelKind::HalfPlane => poincare_to_half_plane(w),
        ModelKind::PoincareDisk => w,
        ModelKind::KleinDisk => poincare_to_klein(w),
    };
    ModelPoint::from_complex_unchecked(target, z)
}

/// Boundary map half-plane -> disk angle. `t = infinity` goes to angle 0.
fn axis_to_angle(t: Option<f64>) -> f64 {
    match t {
        None => 0.0,
        // (t - i)/(t + i) = ((t^2 - 1) - 2ti) / (t^2 + 1)
        Some(t) => f64::atan2(-2.0 * t, t * t - 1.0),
    }
}

/// Boundary map disk angle -> half-plane. Angle 0 goes to infinity.
fn angle_to_axis(a: f64) -> Option<f64> {
    let half = 0.5 * a;
    if half.sin().abs() < 1e-300 {
        None
    } else {
        Some(-half.cos() / half.sin())
    }
}

pub(super) fn convert_ideal(p: &IdealPoint, target: ModelKind) -> IdealPoint {
    if p.model() == target {
        return *p;
    }
    let angle = match p.coord() {
        IdealCoord::Axis(t) => axis_to_angle(Some(t)),
        IdealCoord::Infinity => axis_to_angle(None),
        IdealCoord::Angle(a) => a,
    };
    match target {
        ModelKind::HalfPlane => match angle_to_axis(angle) {
            Some(t) => IdealPoint::axis(t),
            None => IdealPoint::infinity(),
        },
        // the Poincaré -> Klein boundary map is the identity on angles
        ModelKind::PoincareDisk | ModelKind::KleinDisk => {
            IdealPoint::angle(target, angle).expect("finite angle")
        }
    }
}
