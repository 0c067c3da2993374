//! Conic specifications and the machinery comparing them.
//!
//! Every definition is represented by a [`ConicSpec`] with a signed metric
//! residual that vanishes exactly on the locus. The canonical half-plane
//! configurations (focus at `i`, axis = the imaginary axis) additionally
//! carry explicit implicit polynomials built by radical elimination; matching
//! and classification operate on those.

mod cycles;
mod matching;
mod poly;

pub use cycles::{cycle_curve, CycleCurve, CycleSupport};
pub use matching::{
    axis_intercepts, classify_fd, match_closed_fd_ellipse_to_two_focus, match_fd_to_two_focus,
    match_two_focus_hyperbola_to_fd, FdMatchOutcome,
};
pub use poly::{
    degenerate_fd_hyperbola_poly, eliminate_radicals, fd_circle_limit_poly, fd_parabola_poly,
    focus_directrix_poly, two_focus_ellipse_poly, two_focus_hyperbola_poly,
    two_focus_parabola_poly, CanonicalFrame, CanonicalPoly, RadicalFree, SignMask,
};

use crate::error::ConicError;
use crate::hypgeo::{
    distance, distance_to_geodesic, signed_distance_to_geodesic, Geodesic, IdealPoint, ModelKind,
    ModelPoint,
};
use crate::implicit::SampledCurve;
use crate::projmink::{fit_conic, molnar_conic, ProjLine, ProjPoint};
use nalgebra::{Matrix3, Vector3};
use serde::{Deserialize, Serialize};

/// Ellipse or hyperbola flavor of the two-focus definition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TwoFocusKind {
    Ellipse,
    Hyperbola,
}

/// A conic given by one of the competing definitions.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum ConicSpec {
    /// Locus at fixed distance `r` from `center`.
    MetricCircle { center: ModelPoint, r: f64 },
    /// `d(x, f1) + d(x, f2) = c` (ellipse) or `|d(x, f1) - d(x, f2)| = c`
    /// (hyperbola).
    TwoFocus { f1: ModelPoint, f2: ModelPoint, c: f64, kind: TwoFocusKind },
    /// `sinh d(x, focus) = eps * sinh d(x, directrix)`.
    FocusDirectrix { focus: ModelPoint, directrix: Geodesic, eps: f64 },
    /// Zero set of a symmetric quadratic form in the Klein chart.
    KleinAlgebraic { form: [[f64; 3]; 3] },
    /// Reflection construction from two foci and an auxiliary line.
    Molnar { a: ProjPoint, b: ProjPoint, x1: ProjLine },
    /// Limit circle tangent to the boundary at `ideal`, through `through`.
    Horocycle { ideal: IdealPoint, through: ModelPoint },
    /// Constant signed distance `h` from `axis`.
    Hypercycle { axis: Geodesic, h: f64 },
}

/// Classification of a focus-directrix conic by its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConicClass {
    ClosedEllipse,
    Lemniscate,
    OpenTwoIdealPoints,
    Parabola,
    Hyperbola,
    DegenerateOneVertex,
    CircleLimit,
}

impl std::fmt::Display for ConicClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ConicClass::ClosedEllipse => "closed-ellipse",
            ConicClass::Lemniscate => "lemniscate",
            ConicClass::OpenTwoIdealPoints => "open-two-ideal-points",
            ConicClass::Parabola => "parabola",
            ConicClass::Hyperbola => "hyperbola",
            ConicClass::DegenerateOneVertex => "one-vertex-degenerate",
            ConicClass::CircleLimit => "circle-limit",
        };
        f.write_str(s)
    }
}

impl ConicSpec {
    /// The model the residual is evaluated in.
    pub fn model(&self) -> ModelKind {
        match self {
            ConicSpec::MetricCircle { center, .. } => center.model(),
            ConicSpec::TwoFocus { f1, .. } => f1.model(),
            ConicSpec::FocusDirectrix { focus, .. } => focus.model(),
            ConicSpec::KleinAlgebraic { .. } => ModelKind::KleinDisk,
            ConicSpec::Molnar { .. } => ModelKind::KleinDisk,
            ConicSpec::Horocycle { through, .. } => through.model(),
            ConicSpec::Hypercycle { axis, .. } => axis.model(),
        }
    }

    /// Checks the definition's invariants, naming the violated one.
    pub fn validate(&self) -> Result<(), ConicError> {
        match self {
            ConicSpec::MetricCircle { r, .. } => {
                if *r <= 0.0 || !r.is_finite() {
                    return Err(ConicError::InvalidParams(format!(
                        "metric circle radius must be positive, got {r}"
                    )));
                }
            }
            ConicSpec::TwoFocus { f1, f2, c, kind } => {
                if f1.model() != f2.model() {
                    return Err(ConicError::InvalidParams("foci lie in different models".into()));
                }
                if *c <= 0.0 || !c.is_finite() {
                    return Err(ConicError::InvalidParams(format!(
                        "two-focus constant must be positive (the c = 0 hyperbola degenerates to the bisector), got {c}"
                    )));
                }
                let sep = distance(f1, f2)?;
                match kind {
                    TwoFocusKind::Ellipse => {
                        if sep > 0.0 && *c <= sep {
                            return Err(ConicError::InvalidParams(format!(
                                "ellipse constant {c} must exceed the focal distance {sep}"
                            )));
                        }
                    }
                    TwoFocusKind::Hyperbola => {
                        if *c >= sep {
                            return Err(ConicError::InvalidParams(format!(
                                "hyperbola constant {c} must be below the focal distance {sep}"
                            )));
                        }
                    }
                }
            }
            ConicSpec::FocusDirectrix { focus, directrix, eps } => {
                if *eps <= 0.0 || !eps.is_finite() {
                    return Err(ConicError::InvalidParams(format!(
                        "eccentricity must be positive, got {eps}"
                    )));
                }
                let d = distance_to_geodesic(&focus.convert(directrix.model()), directrix)?;
                if d < 1e-9 {
                    return Err(ConicError::InvalidParams(
                        "directrix passes through the focus".into(),
                    ));
                }
            }
            ConicSpec::KleinAlgebraic { form } => {
                let m = symmetric_form(form);
                let n = m.norm();
                if !(n.is_finite() && n > 0.0) {
                    return Err(ConicError::InvalidParams("zero or non-finite form".into()));
                }
                let m = m / n;
                if m.determinant().abs() < 1e-12 {
                    return Err(ConicError::InvalidParams("form is degenerate".into()));
                }
                let eig = m.symmetric_eigen();
                let min = eig.eigenvalues.min();
                let max = eig.eigenvalues.max();
                if !(min < -1e-12 && max > 1e-12) {
                    return Err(ConicError::InvalidParams(
                        "form is definite; the conic is empty".into(),
                    ));
                }
            }
            ConicSpec::Molnar { a, b, x1 } => {
                // dry-run the construction preconditions
                molnar_conic(a, b, x1, 0)?;
            }
            ConicSpec::Horocycle { .. } => {}
            ConicSpec::Hypercycle { h, .. } => {
                if *h < 0.0 || !h.is_finite() {
                    return Err(ConicError::InvalidParams(format!(
                        "hypercycle distance must be nonnegative, got {h}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Builds the residual evaluator once (the reflection construction fits
    /// its algebraic form up front).
    pub fn residual_fn(&self) -> Result<Box<dyn Fn(&ModelPoint) -> f64>, ConicError> {
        self.validate()?;
        match self {
            ConicSpec::MetricCircle { center, r } => {
                let (center, r) = (*center, *r);
                Ok(Box::new(move |p| {
                    distance(&p.convert(center.model()), &center).unwrap_or(f64::NAN) - r
                }))
            }
            ConicSpec::TwoFocus { f1, f2, c, kind } => {
                let (f1, f2, c, kind) = (*f1, *f2, *c, *kind);
                Ok(Box::new(move |p| {
                    let q = p.convert(f1.model());
                    let d1 = distance(&q, &f1).unwrap_or(f64::NAN);
                    let d2 = distance(&q, &f2).unwrap_or(f64::NAN);
                    match kind {
                        TwoFocusKind::Ellipse => d1 + d2 - c,
                        TwoFocusKind::Hyperbola => (d1 - d2).abs() - c,
                    }
                }))
            }
            ConicSpec::FocusDirectrix { focus, directrix, eps } => {
                let (focus, directrix, eps) = (*focus, *directrix, *eps);
                Ok(Box::new(move |p| {
                    let q = p.convert(focus.model());
                    let df = distance(&q, &focus).unwrap_or(f64::NAN);
                    let dl =
                        distance_to_geodesic(&q.convert(directrix.model()), &directrix).unwrap_or(f64::NAN);
                    df.sinh() - eps * dl.sinh()
                }))
            }
            ConicSpec::KleinAlgebraic { form } => {
                let m = {
                    let m = symmetric_form(form);
                    m / m.norm()
                };
                Ok(Box::new(move |p| {
                    let k = p.convert(ModelKind::KleinDisk);
                    let v = Vector3::new(k.x(), k.y(), 1.0);
                    (v.transpose() * m * v)[(0, 0)]
                }))
            }
            ConicSpec::Molnar { a, b, x1 } => {
                let run = molnar_conic(a, b, x1, 64)?;
                let fit = fit_conic(&run.points)?;
                let m = fit.form;
                Ok(Box::new(move |p| {
                    let k = p.convert(ModelKind::KleinDisk);
                    let v = Vector3::new(k.x(), k.y(), 1.0);
                    (v.transpose() * m * v)[(0, 0)]
                }))
            }
            ConicSpec::Horocycle { ideal, through } => {
                let xi = ideal.convert(ModelKind::PoincareDisk).position().unwrap();
                let q = through.convert(ModelKind::PoincareDisk);
                let level = busemann(xi, (q.x(), q.y()));
                Ok(Box::new(move |p| {
                    let z = p.convert(ModelKind::PoincareDisk);
                    busemann(xi, (z.x(), z.y())) - level
                }))
            }
            ConicSpec::Hypercycle { axis, h } => {
                let (axis, h) = (*axis, *h);
                Ok(Box::new(move |p| {
                    signed_distance_to_geodesic(&p.convert(axis.model()), &axis).unwrap_or(f64::NAN)
                        - h
                }))
            }
        }
    }
}

/// Signed residual of `p` against the conic definition: zero exactly on the
/// locus. Points are converted into the spec's model first.
pub fn residual(spec: &ConicSpec, p: &ModelPoint) -> Result<f64, ConicError> {
    Ok(spec.residual_fn()?(p))
}

fn symmetric_form(form: &[[f64; 3]; 3]) -> Matrix3<f64> {
    let m = Matrix3::from_fn(|i, j| form[i][j]);
    0.5 * (m + m.transpose())
}

/// Busemann function of the disk-boundary point `xi`, whose level sets are
/// the horocycles at `xi`.
fn busemann(xi: (f64, f64), z: (f64, f64)) -> f64 {
    let dx = xi.0 - z.0;
    let dy = xi.1 - z.1;
    ((1.0 - z.0 * z.0 - z.1 * z.1) / (dx * dx + dy * dy)).ln()
}

/// Residual audit of a traced curve against a metric definition.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct AuditReport {
    /// Max `|residual|` over the mask-valid, constructible points.
    pub max_residual: f64,
    /// Points evaluated.
    pub evaluated: usize,
    /// Points rejected by the branch mask or the model-boundary guard.
    pub rejected: usize,
}

/// Audits every mask-valid traced point against `spec`'s metric residual.
pub fn audit(
    curve: &SampledCurve,
    spec: &ConicSpec,
    mask: Option<&SignMask>,
) -> Result<AuditReport, ConicError> {
    let f = spec.residual_fn()?;
    Ok(audit_with(curve, |p| f(p), mask))
}

/// Audit against an arbitrary residual function (used for the canonical
/// limit curves that are not `ConicSpec`s).
pub fn audit_with(
    curve: &SampledCurve,
    residual: impl Fn(&ModelPoint) -> f64,
    mask: Option<&SignMask>,
) -> AuditReport {
    let mut report = AuditReport { max_residual: 0.0, evaluated: 0, rejected: 0 };
    for pt in curve.points() {
        if let Some(m) = mask {
            if !m.is_valid(pt.x, pt.y) {
                report.rejected += 1;
                continue;
            }
        }
        match ModelPoint::new(curve.model, pt.x, pt.y) {
            Ok(p) => {
                let r = residual(&p);
                if r.is_finite() {
                    report.evaluated += 1;
                    report.max_residual = report.max_residual.max(r.abs());
                } else {
                    report.rejected += 1;
                }
            }
            Err(_) => report.rejected += 1,
        }
    }
    report
}
