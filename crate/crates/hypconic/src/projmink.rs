//! The real projective plane equipped with the Minkowski form
//! `B(p, q) = p1 q1 + p2 q2 - p3 q3`.
//!
//! The absolute is the zero conic of `Q(x, y, z) = x^2 + y^2 - z^2`; its
//! interior (`B(p, p) < 0`) is the Klein chart of the hyperbolic plane.
//! Polarity, B-orthogonal reflections, the point-by-point reflection
//! construction of conics from two foci and an auxiliary line, and
//! least-squares conic fitting all live here.

use crate::error::ProjError;
use nalgebra::{Matrix3, SMatrix, SVector, Vector3};
use serde::{Deserialize, Serialize};

const SIGN_EPS: f64 = 1e-9;

/// Homogeneous triples are normalized to unit Euclidean norm with the first
/// coordinate of magnitude above `SIGN_EPS` made positive, so equality up to
/// sign becomes plain equality.
fn normalize(v: Vector3<f64>) -> Vector3<f64> {
    let n = v.norm();
    let mut u = v / n;
    for k in 0..3 {
        if u[k].abs() > SIGN_EPS {
            if u[k] < 0.0 {
                u = -u;
            }
            break;
        }
    }
    u
}

/// A point of the projective plane as a normalized homogeneous triple.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProjPoint(pub [f64; 3]);

/// A line of the projective plane as a normalized homogeneous covector.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProjLine(pub [f64; 3]);

impl ProjPoint {
    pub fn new(x: f64, y: f64, z: f64) -> ProjPoint {
        let v = normalize(Vector3::new(x, y, z));
        ProjPoint([v[0], v[1], v[2]])
    }

    /// Lift of a Klein-chart point `(x, y)`.
    pub fn from_chart(x: f64, y: f64) -> ProjPoint {
        ProjPoint::new(x, y, 1.0)
    }

    /// Chart coordinates, if the point is not at infinity.
    pub fn to_chart(&self) -> Option<(f64, f64)> {
        let [x, y, z] = self.0;
        if z.abs() < 1e-12 {
            None
        } else {
            Some((x / z, y / z))
        }
    }

    pub fn vector(&self) -> Vector3<f64> {
        Vector3::from(self.0)
    }

    /// Minkowski norm `B(p, p)`: negative inside the absolute, zero on it,
    /// positive outside.
    pub fn minkowski_norm(&self) -> f64 {
        minkowski(&self.vector(), &self.vector())
    }

    pub fn approx_eq(&self, other: &ProjPoint, tol: f64) -> bool {
        let a = self.vector();
        let b = other.vector();
        (a - b).norm() < tol || (a + b).norm() < tol
    }
}

impl ProjLine {
    pub fn new(u: f64, v: f64, w: f64) -> ProjLine {
        let n = normalize(Vector3::new(u, v, w));
        ProjLine([n[0], n[1], n[2]])
    }

    /// Chart line `a x + b y + c = 0` as a covector.
    pub fn from_chart(a: f64, b: f64, c: f64) -> ProjLine {
        ProjLine::new(a, b, c)
    }

    pub fn vector(&self) -> Vector3<f64> {
        Vector3::from(self.0)
    }

    /// Dual Minkowski norm `B*(l, l) = u^2 + v^2 - w^2`.
    pub fn dual_norm(&self) -> f64 {
        minkowski(&self.vector(), &self.vector())
    }

    pub fn approx_eq(&self, other: &ProjLine, tol: f64) -> bool {
        let a = self.vector();
        let b = other.vector();
        (a - b).norm() < tol || (a + b).norm() < tol
    }

    /// Incidence `l . p = 0` within `tol`.
    pub fn passes_through(&self, p: &ProjPoint, tol: f64) -> bool {
        self.vector().dot(&p.vector()).abs() < tol
    }
}

/// The bilinear form `B(p, q) = p1 q1 + p2 q2 - p3 q3`.
pub fn minkowski(p: &Vector3<f64>, q: &Vector3<f64>) -> f64 {
    p[0] * q[0] + p[1] * q[1] - p[2] * q[2]
}

/// Polar line of a point: the B-orthogonal complement of its span.
pub fn polar_line(p: &ProjPoint) -> ProjLine {
    let [x, y, z] = p.0;
    ProjLine::new(x, y, -z)
}

/// Pole of a line, dual to [`polar_line`].
pub fn pole(l: &ProjLine) -> ProjPoint {
    let [u, v, w] = l.0;
    ProjPoint::new(u, v, -w)
}

/// Line through two distinct points.
pub fn join(p: &ProjPoint, q: &ProjPoint) -> Result<ProjLine, ProjError> {
    let c = p.vector().cross(&q.vector());
    if c.norm() < 1e-12 {
        return Err(ProjError::EqualElements);
    }
    Ok(ProjLine::new(c[0], c[1], c[2]))
}

/// Intersection point of two distinct lines.
pub fn meet(l: &ProjLine, m: &ProjLine) -> Result<ProjPoint, ProjError> {
    let c = l.vector().cross(&m.vector());
    if c.norm() < 1e-12 {
        return Err(ProjError::EqualElements);
    }
    Ok(ProjPoint::new(c[0], c[1], c[2]))
}

/// Whether the line is tangent to the absolute (`B*(l, l) = 0` within 1e-12).
pub fn is_boundary_line(l: &ProjLine) -> bool {
    l.dual_norm().abs() < 1e-12
}

/// Raw linear action of the B-orthogonal reflection with mirror `m`:
/// `v -> v - 2 B(v, n)/B(n, n) n` with `n` the pole direction of `m`. This
/// preserves `B` exactly; the `ProjPoint` wrapper renormalizes afterwards.
pub fn reflect_vector(v: &Vector3<f64>, mirror: &ProjLine) -> Result<Vector3<f64>, ProjError> {
    if is_boundary_line(mirror) {
        return Err(ProjError::BoundaryMirror);
    }
    let n = pole(mirror).vector();
    Ok(v - 2.0 * minkowski(v, &n) / minkowski(&n, &n) * n)
}

/// B-orthogonal reflection of a point across a non-boundary line.
pub fn reflect_point_across_line(p: &ProjPoint, mirror: &ProjLine) -> Result<ProjPoint, ProjError> {
    let r = reflect_vector(&p.vector(), mirror)?;
    Ok(ProjPoint::new(r[0], r[1], r[2]))
}

/// Covector transport under the same reflection:
/// `u -> u - 2 B*(u, m)/B*(m, m) m`.
pub fn reflect_line_across_line(l: &ProjLine, mirror: &ProjLine) -> Result<ProjLine, ProjError> {
    if is_boundary_line(mirror) {
        return Err(ProjError::BoundaryMirror);
    }
    let m = mirror.vector();
    let u = l.vector();
    let bstar = |a: &Vector3<f64>, b: &Vector3<f64>| a[0] * b[0] + a[1] * b[1] - a[2] * b[2];
    let r = u - 2.0 * bstar(&u, &m) / bstar(&m, &m) * m;
    Ok(ProjLine::new(r[0], r[1], r[2]))
}

/// Output of the reflection construction: the produced points plus sample
/// diagnostics.
#[derive(Debug, Clone)]
pub struct ReflectionConic {
    /// The special point from the base configuration followed by one point
    /// per retained sample, ordered by sample parameter.
    pub points: Vec<ProjPoint>,
    /// Samples dropped because a derived line was a boundary line.
    pub skipped_boundary: usize,
    /// Samples dropped because the two reflected lines coincided.
    pub skipped_degenerate: usize,
}

/// Point-by-point conic construction from foci `A` and `B` and an auxiliary
/// line `x1`.
///
/// The base point is the intersection of `a11 = join(A, B^x1)` and
/// `b11 = join(B, A^x1)`. Each further point comes from a point `Y` on `x1`:
/// with `a = join(Y, A)` and `b = join(Y, B)`, the conic point is the meet of
/// the reflections of `a11` across `a` and of `b11` across `b`. Samples where
/// `a` or `b` is a boundary line are skipped and counted.
pub fn molnar_conic(
    focus_a: &ProjPoint,
    focus_b: &ProjPoint,
    x1: &ProjLine,
    samples: usize,
) -> Result<ReflectionConic, ProjError> {
    if is_boundary_line(x1) {
        return Err(ProjError::AuxBoundaryLine);
    }
    if focus_a.approx_eq(focus_b, 1e-12) {
        return Err(ProjError::FociCoincide);
    }
    if x1.passes_through(focus_a, 1e-12) {
        return Err(ProjError::LineThroughFocus('A'));
    }
    if x1.passes_through(focus_b, 1e-12) {
        return Err(ProjError::LineThroughFocus('B'));
    }
    let b_mirrored = reflect_point_across_line(focus_b, x1)?;
    let a_mirrored = reflect_point_across_line(focus_a, x1)?;
    if focus_a.approx_eq(&b_mirrored, 1e-12) {
        return Err(ProjError::FociAreMirrorImages);
    }
    let a11 = join(focus_a, &b_mirrored)?;
    let b11 = join(focus_b, &a_mirrored)?;
    if is_boundary_line(&a11) {
        return Err(ProjError::DerivedBoundaryLine("a11"));
    }
    if is_boundary_line(&b11) {
        return Err(ProjError::DerivedBoundaryLine("b11"));
    }
    let x11 = meet(&a11, &b11)?;

    // Rational parametrization of x1: Y(t) = y0 + t y1 with tan-spaced t,
    // which covers the whole projective line of samples.
    let u = x1.vector();
    let axis = if u[0].abs() <= u[1].abs() && u[0].abs() <= u[2].abs() {
        Vector3::x()
    } else if u[1].abs() <= u[2].abs() {
        Vector3::y()
    } else {
        Vector3::z()
    };
    let y0 = u.cross(&axis).normalize();
    let y1 = u.cross(&y0).normalize();

    let mut out = ReflectionConic {
        points: vec![x11],
        skipped_boundary: 0,
        skipped_degenerate: 0,
    };
    for k in 0..samples {
        let theta = std::f64::consts::PI * ((k as f64 + 0.5) / samples as f64 - 0.5);
        let t = theta.tan();
        let yv = y0 + t * y1;
        let y = ProjPoint::new(yv[0], yv[1], yv[2]);
        let line_a = match join(&y, focus_a) {
            Ok(l) => l,
            Err(_) => {
                out.skipped_degenerate += 1;
                continue;
            }
        };
        let line_b = match join(&y, focus_b) {
            Ok(l) => l,
            Err(_) => {
                out.skipped_degenerate += 1;
                continue;
            }
        };
        if is_boundary_line(&line_a) || is_boundary_line(&line_b) {
            out.skipped_boundary += 1;
            continue;
        }
        let ra = reflect_line_across_line(&a11, &line_a).expect("non-boundary checked");
        let rb = reflect_line_across_line(&b11, &line_b).expect("non-boundary checked");
        match meet(&ra, &rb) {
            Ok(x) => out.points.push(x),
            Err(_) => out.skipped_degenerate += 1,
        }
    }
    Ok(out)
}

/// Result of a least-squares conic fit.
#[derive(Debug, Clone)]
pub struct ConicFit {
    /// Symmetric coefficient matrix, unit Frobenius norm.
    pub form: Matrix3<f64>,
    /// Largest `|p^T C p|` over the input points (points unit-normalized).
    pub max_residual: f64,
    /// Determinant of the normalized form; near zero means degenerate.
    pub det: f64,
    /// Set when the fitted form is degenerate (e.g. the points lie on a line).
    pub degenerate: bool,
}

/// Fits one symmetric quadratic form through >= 5 points by minimizing the
/// sum of squared evaluations over unit-Frobenius-norm forms (smallest
/// eigenvector of the Veronese Gram matrix).
pub fn fit_conic(points: &[ProjPoint]) -> Result<ConicFit, ProjError> {
    if points.len() < 5 {
        return Err(ProjError::TooFewPoints(points.len()));
    }
    let s2 = std::f64::consts::SQRT_2;
    let mut gram: SMatrix<f64, 6, 6> = SMatrix::zeros();
    for p in points {
        let [x, y, z] = p.0;
        let row = SVector::<f64, 6>::from([x * x, y * y, z * z, s2 * x * y, s2 * x * z, s2 * y * z]);
        gram += row * row.transpose();
    }
    let eig = gram.symmetric_eigen();
    let mut best = 0;
    for k in 1..6 {
        if eig.eigenvalues[k] < eig.eigenvalues[best] {
            best = k;
        }
    }
    let v = eig.eigenvectors.column(best);
    // unit eigenvector <=> unit Frobenius norm of the form
    let form = Matrix3::new(
        v[0],
        v[3] / s2,
        v[4] / s2,
        v[3] / s2,
        v[1],
        v[5] / s2,
        v[4] / s2,
        v[5] / s2,
        v[2],
    );
    let mut max_residual: f64 = 0.0;
    for p in points {
        let w = p.vector();
        max_residual = max_residual.max((w.transpose() * form * w)[(0, 0)].abs());
    }
    let det = form.determinant();
    Ok(ConicFit { form, max_residual, det, degenerate: det.abs() < 1e-10 })
}

/// Scale- and congruence-invariant signature of a form with respect to the
/// Minkowski absolute: built from the characteristic polynomial of `Q^-1 C`,
/// whose generalized eigenvalues are preserved (up to common scale) by any
/// B-congruence. Returns `(c2 c1 / c0, c2^3 / c0)` for
/// `det(Q^-1 C - t I) = -(t^3 + c2 t^2 + c1 t + c0)`.
pub fn congruence_invariants(form: &Matrix3<f64>) -> (f64, f64) {
    // Q = Q^-1 = diag(1, 1, -1)
    let m = Matrix3::new(
        form[(0, 0)],
        form[(0, 1)],
        form[(0, 2)],
        form[(1, 0)],
        form[(1, 1)],
        form[(1, 2)],
        -form[(2, 0)],
        -form[(2, 1)],
        -form[(2, 2)],
    );
    let tr = m.trace();
    let minors = m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)]
        + m[(0, 0)] * m[(2, 2)]
        - m[(0, 2)] * m[(2, 0)]
        + m[(1, 1)] * m[(2, 2)]
        - m[(1, 2)] * m[(2, 1)];
    let det = m.determinant();
    let c2 = -tr;
    let c1 = minors;
    let c0 = -det;
    (c2 * c1 / c0, c2.powi(3) / c0)
}
