//! Explicit implicit polynomials of the canonical half-plane configurations
//! (focus at `i`, conic axis = the imaginary axis) and the double-squaring
//! radical elimination that produces them.
//!
//! Squaring introduces extraneous loci, so every polynomial carries a
//! [`SignMask`]: the inequality chain recorded while squaring, which picks
//! the true branch back out of the zero set.

use super::{ConicSpec, TwoFocusKind};
use crate::error::ConicError;
use crate::hypgeo::{distance, Geodesic, ModelKind, ModelPoint};
use crate::implicit::BivarPoly;

const PARAM_TOL: f64 = 1e-12;

fn x2() -> BivarPoly {
    BivarPoly::monomial(2, 0, 1.0)
}

fn y2() -> BivarPoly {
    BivarPoly::monomial(0, 2, 1.0)
}

fn s_plus(w: f64) -> BivarPoly {
    // x^2 + y^2 + w
    x2().add(&y2()).add(&BivarPoly::constant(w))
}

fn modulus_sq(w: f64) -> BivarPoly {
    // |z^2 + w|^2 = (x^2 - y^2 + w)^2 + 4 x^2 y^2
    x2().sub(&y2())
        .add(&BivarPoly::constant(w))
        .square()
        .add(&x2().mul(&y2()).scale(4.0))
}

/// One squaring chain `E + sqrt(B) = F sqrt(D)`: the true branch must keep
/// both pre-squaring equalities sign-consistent.
#[derive(Debug, Clone)]
pub struct RadicalChain {
    e: BivarPoly,
    rad_e: BivarPoly,
    f: BivarPoly,
    rad_f: BivarPoly,
}

impl RadicalChain {
    fn is_valid(&self, x: f64, y: f64) -> bool {
        let e = self.e.eval(x, y);
        let b = self.rad_e.eval(x, y).max(0.0).sqrt();
        let fv = self.f.eval(x, y);
        let d = self.rad_f.eval(x, y).max(0.0).sqrt();
        let lhs = e + b;
        let rhs = fv * d;
        // first squaring: E + sqrt(B) and F sqrt(D) share a sign
        let c1 = lhs * rhs >= -1e-9 * (lhs * lhs + rhs * rhs + 1.0);
        // second squaring: 2 E sqrt(B) = F^2 D - E^2 - B needs matching signs
        let g = fv * fv * self.rad_f.eval(x, y) - e * e - self.rad_e.eval(x, y);
        let c2 = e * g >= -1e-9 * (e * e + g * g + 1.0);
        c1 && c2
    }
}

/// Branch-validity predicate attached to a squared-out polynomial.
#[derive(Debug, Clone)]
pub enum SignMask {
    /// No squaring happened; the whole zero set is the locus.
    All,
    /// Inequalities from one elimination chain.
    Chain(RadicalChain),
    /// Requires `p(x, y) >= 0` (single-squaring eliminations).
    NonNegative(BivarPoly),
    /// Union of two branches (the hyperbola's +-c).
    Or(Box<SignMask>, Box<SignMask>),
}

impl SignMask {
    pub fn is_valid(&self, x: f64, y: f64) -> bool {
        match self {
            SignMask::All => true,
            SignMask::Chain(c) => c.is_valid(x, y),
            SignMask::NonNegative(p) => {
                let v = p.eval(x, y);
                v >= -1e-9 * (1.0 + v.abs())
            }
            SignMask::Or(a, b) => a.is_valid(x, y) || b.is_valid(x, y),
        }
    }
}

/// Polynomial produced by [`eliminate_radicals`].
#[derive(Debug, Clone)]
pub struct RadicalFree {
    pub poly: BivarPoly,
    /// Number of `y^2` factors removed.
    pub y2_removed: usize,
    /// Set when the input was an identity (zero polynomial).
    pub identity: bool,
    pub mask: SignMask,
}

/// Clears the radicals from `E + sqrt(B) = F sqrt(D)` by the double
/// squaring/regrouping procedure: square, isolate the remaining radical,
/// square again, then strip common `y^2` factors. Returns the polynomial
/// `(F^2 D - E^2 - B)^2 - 4 E^2 B` (up to those factors) with its sign mask.
///
/// `B` and `D` must be nonnegative on the domain of interest.
pub fn eliminate_radicals(
    e: &BivarPoly,
    rad_b: &BivarPoly,
    f: &BivarPoly,
    rad_d: &BivarPoly,
) -> RadicalFree {
    let g = f.square().mul(rad_d).sub(&e.square()).sub(rad_b);
    let p = g.square().sub(&e.square().mul(rad_b).scale(4.0));
    // coefficients that should cancel exactly leave ~1e-14 relative residue
    let mut p = p.chop(1e-10);
    let identity = p.is_zero();
    let mut y2_removed = 0;
    while let Some(q) = p.try_divide_y2() {
        p = q;
        y2_removed += 1;
    }
    RadicalFree {
        poly: p,
        y2_removed,
        identity,
        mask: SignMask::Chain(RadicalChain {
            e: e.clone(),
            rad_e: rad_b.clone(),
            f: f.clone(),
            rad_f: rad_d.clone(),
        }),
    }
}

/// A canonical-frame polynomial together with its branch mask.
#[derive(Debug, Clone)]
pub struct CanonicalPoly {
    pub poly: BivarPoly,
    pub mask: SignMask,
}

impl CanonicalPoly {
    pub fn mask_fn(&self) -> impl Fn(f64, f64) -> bool + '_ {
        |x, y| self.mask.is_valid(x, y)
    }
}

/// Two-focus ellipse with foci `i` and `bi`: the squared-out quartic of
/// `(S1 + sqrt(B))(S2 + sqrt(D)) = 4 b e^c y^2`. Coincident foci (`b = 1`)
/// reduce to the Euclidean circle `x^2 + (y - cosh(c/2))^2 = sinh^2(c/2)`.
pub fn two_focus_ellipse_poly(b: f64, c: f64) -> Result<CanonicalPoly, ConicError> {
    if !(b > 0.0 && b.is_finite()) {
        return Err(ConicError::InvalidParams(format!("focus height must be positive, got {b}")));
    }
    if !(c > 0.0 && c.is_finite()) || c <= b.ln().abs() + PARAM_TOL {
        return Err(ConicError::InvalidParams(format!(
            "ellipse constant c = {c} must exceed the focal distance |log b| = {}",
            b.ln().abs()
        )));
    }
    if (b - 1.0).abs() <= PARAM_TOL {
        // x^2 + y^2 - 2 cosh(c/2) y + 1 (cosh^2 - sinh^2 = 1 exactly)
        let k = (0.5 * c).cosh();
        let poly = x2().add(&y2()).add(&BivarPoly::monomial(0, 1, -2.0 * k)).add(&BivarPoly::constant(1.0));
        return Ok(CanonicalPoly { poly, mask: SignMask::All });
    }
    // regrouped form: [S1 - (e^c/b) S2] + sqrt(B) = -(e^c/b) sqrt(D)
    let k = c.exp() / b;
    let e = s_plus(1.0).sub(&s_plus(b * b).scale(k));
    let f = BivarPoly::constant(-k);
    let out = eliminate_radicals(&e, &modulus_sq(1.0), &f, &modulus_sq(b * b));
    debug_assert_eq!(out.poly.degree(), 4);
    Ok(CanonicalPoly { poly: out.poly, mask: out.mask })
}

/// Two-focus hyperbola quartic (foci `i` and `bi`, `b > 1`,
/// `0 < c < log b`). Both `+-c` branches square to one quartic.
pub fn two_focus_hyperbola_poly(b: f64, c: f64) -> Result<CanonicalPoly, ConicError> {
    if !(b > 1.0 + PARAM_TOL) {
        return Err(ConicError::InvalidParams(format!("second focus must lie above i, got b = {b}")));
    }
    hyperbola_quartic_unchecked(b, c)
}

/// Same construction without the `b > 1` canonical-orientation requirement;
/// matching may produce mirrored configurations with `b < 1`.
pub(crate) fn hyperbola_quartic_unchecked(b: f64, c: f64) -> Result<CanonicalPoly, ConicError> {
    if !(c > PARAM_TOL && c.is_finite() && c < b.ln().abs() - PARAM_TOL) {
        return Err(ConicError::InvalidParams(format!(
            "hyperbola constant must satisfy 0 < c < |log b|, got c = {c}, |log b| = {}",
            b.ln().abs()
        )));
    }
    let quartic_for = |m: f64| {
        // (S2 - m S1) + sqrt(D) = m sqrt(B)
        let e = s_plus(b * b).sub(&s_plus(1.0).scale(m));
        let f = BivarPoly::constant(m);
        eliminate_radicals(&e, &modulus_sq(b * b), &f, &modulus_sq(1.0))
    };
    let plus = quartic_for(b * c.exp());
    let minus = quartic_for(b * (-c).exp());
    debug_assert!(plus.poly.proportional_distance(&minus.poly) < 1e-8);
    Ok(CanonicalPoly {
        poly: plus.poly,
        mask: SignMask::Or(Box::new(plus.mask), Box::new(minus.mask)),
    })
}

/// Focus-directrix quartic for focus `i`, directrix `|z| = r`, eccentricity
/// `eps`: `r^2 (1 + x^4 + y^4 + 2 y^2 (eps^2 - 1) + 2 x^2 (1 + y^2 + eps^2))
/// = eps^2 (r^4 + (x^2 + y^2)^2)`. Its zero set in `y > 0` is the locus
/// itself (both sides of the defining equation are nonnegative), so the mask
/// is trivial.
pub fn focus_directrix_poly(r: f64, eps: f64) -> Result<CanonicalPoly, ConicError> {
    check_directrix_radius(r)?;
    if !(eps > 0.0 && eps.is_finite()) {
        return Err(ConicError::InvalidParams(format!("eccentricity must be positive, got {eps}")));
    }
    let (r2, e2) = (r * r, eps * eps);
    let poly = BivarPoly::from_coeffs(vec![
        vec![r2 - e2 * r2 * r2, 0.0, 2.0 * r2 * (e2 - 1.0), 0.0, r2 - e2],
        vec![],
        vec![2.0 * r2 * (1.0 + e2), 0.0, 2.0 * (r2 - e2)],
        vec![],
        vec![r2 - e2],
    ]);
    Ok(CanonicalPoly { poly, mask: SignMask::All })
}

/// The eps -> 0 circle limit `|z^2 + 1|^2 = 4 r^2` as a real quartic.
pub fn fd_circle_limit_poly(r: f64) -> Result<CanonicalPoly, ConicError> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(ConicError::InvalidParams(format!("radius parameter must be positive, got {r}")));
    }
    let poly = modulus_sq(1.0).sub(&BivarPoly::constant(4.0 * r * r));
    Ok(CanonicalPoly { poly, mask: SignMask::All })
}

/// Two-focus parabola: the `b -> 0+` limit holding `b e^c = C/2` fixed,
/// `2 (C - 2)(x^2 + y^2)^2 + 2 C (x^2 + y^2) - C^2 y^2 = 0` — a lemniscate
/// through the ideal point at the origin.
pub fn two_focus_parabola_poly(cap: f64) -> Result<CanonicalPoly, ConicError> {
    if !(cap > 2.0 + PARAM_TOL && cap.is_finite()) {
        return Err(ConicError::InvalidParams(format!(
            "parabola parameter must exceed 2 for a nonempty interior locus, got {cap}"
        )));
    }
    let s = x2().add(&y2());
    let poly = s.square().scale(2.0 * (cap - 2.0)).add(&s.scale(2.0 * cap)).sub(
        &BivarPoly::monomial(0, 2, cap * cap),
    );
    // single squaring of sqrt(B) s = C y^2 - S1 s: the right side must be >= 0
    let guard = BivarPoly::monomial(0, 2, cap).sub(&s_plus(1.0).mul(&s));
    Ok(CanonicalPoly { poly, mask: SignMask::NonNegative(guard) })
}

/// Focus-directrix parabola (`eps = 1`):
/// `1 - r^2 + 4 x^2 + (1 - 1/r^2)(x^2 + y^2)^2 = 0`.
pub fn fd_parabola_poly(r: f64) -> Result<CanonicalPoly, ConicError> {
    check_directrix_radius(r)?;
    let poly = BivarPoly::constant(1.0 - r * r)
        .add(&BivarPoly::monomial(2, 0, 4.0))
        .add(&x2().add(&y2()).square().scale(1.0 - 1.0 / (r * r)));
    Ok(CanonicalPoly { poly, mask: SignMask::All })
}

/// The degenerate `r = eps > 1` focus-directrix hyperbola:
/// `(r^2 + 1) x^2 + (r^2 - 1) y^2 = (r^4 - 1)/2`, a Euclidean ellipse with a
/// single vertex `i sqrt((r^2 + 1)/2)` in the upper half-plane.
pub fn degenerate_fd_hyperbola_poly(r: f64) -> Result<CanonicalPoly, ConicError> {
    if !(r > 1.0 + PARAM_TOL && r.is_finite()) {
        return Err(ConicError::InvalidParams(format!(
            "the one-vertex degenerate case needs r = eps > 1, got {r}"
        )));
    }
    let r2 = r * r;
    let poly = BivarPoly::monomial(2, 0, r2 + 1.0)
        .add(&BivarPoly::monomial(0, 2, r2 - 1.0))
        .sub(&BivarPoly::constant((r2 * r2 - 1.0) / 2.0));
    Ok(CanonicalPoly { poly, mask: SignMask::All })
}

fn check_directrix_radius(r: f64) -> Result<(), ConicError> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(ConicError::InvalidParams(format!("directrix radius must be positive, got {r}")));
    }
    if (r - 1.0).abs() <= PARAM_TOL {
        return Err(ConicError::InvalidParams(
            "directrix |z| = 1 passes through the focus i".into(),
        ));
    }
    Ok(())
}

/// The normalized half-plane configurations of the explicit polynomials:
/// first focus at `i`, conic axis = the imaginary axis, second focus `bi` or
/// directrix `|z| = r`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CanonicalFrame {
    TwoFocusEllipse { b: f64, c: f64 },
    TwoFocusHyperbola { b: f64, c: f64 },
    /// Two-focus parabola limit with `C = 2 b e^c` held fixed.
    TwoFocusParabola { cap: f64 },
    FocusDirectrix { r: f64, eps: f64 },
    /// Focus-directrix circle limit with `r = eps sinh d(i, directrix)` fixed.
    CircleLimit { r: f64 },
    /// `r = eps > 1` one-vertex degenerate hyperbola.
    DegenerateFdHyperbola { r: f64 },
}

impl CanonicalFrame {
    /// Metric residual in the half-plane, including the limit definitions
    /// that are not representable as a [`ConicSpec`].
    pub fn residual_at(&self, p: &ModelPoint) -> f64 {
        let p = p.convert(ModelKind::HalfPlane);
        let focus = ModelPoint::half_plane(0.0, 1.0).unwrap();
        let d_focus = distance(&p, &focus).unwrap_or(f64::NAN);
        match *self {
            CanonicalFrame::TwoFocusEllipse { b, c } => {
                let f2 = ModelPoint::half_plane(0.0, b).unwrap();
                d_focus + distance(&p, &f2).unwrap_or(f64::NAN) - c
            }
            CanonicalFrame::TwoFocusHyperbola { b, c } => {
                let f2 = ModelPoint::half_plane(0.0, b).unwrap();
                (d_focus - distance(&p, &f2).unwrap_or(f64::NAN)).abs() - c
            }
            CanonicalFrame::TwoFocusParabola { cap } => {
                // limit of d1 + d2 - c with the second focus at bi -> 0:
                // d(z, bi) + log b -> log(|z|^2 / y), the Busemann function
                // of the ideal origin
                let busemann = ((p.x() * p.x() + p.y() * p.y()) / p.y()).ln();
                d_focus + busemann - (0.5 * cap).ln()
            }
            CanonicalFrame::FocusDirectrix { r, eps } => {
                let directrix = Geodesic::arc(0.0, r).unwrap();
                let dl = crate::hypgeo::distance_to_geodesic(&p, &directrix).unwrap_or(f64::NAN);
                d_focus.sinh() - eps * dl.sinh()
            }
            CanonicalFrame::CircleLimit { r } => d_focus.sinh() - r / p.y(),
            CanonicalFrame::DegenerateFdHyperbola { r } => {
                CanonicalFrame::FocusDirectrix { r, eps: r }.residual_at(&p)
            }
        }
    }

    /// The implicit polynomial of the frame.
    pub fn poly(&self) -> Result<CanonicalPoly, ConicError> {
        match *self {
            CanonicalFrame::TwoFocusEllipse { b, c } => two_focus_ellipse_poly(b, c),
            CanonicalFrame::TwoFocusHyperbola { b, c } => two_focus_hyperbola_poly(b, c),
            CanonicalFrame::TwoFocusParabola { cap } => two_focus_parabola_poly(cap),
            CanonicalFrame::FocusDirectrix { r, eps } => focus_directrix_poly(r, eps),
            CanonicalFrame::CircleLimit { r } => fd_circle_limit_poly(r),
            CanonicalFrame::DegenerateFdHyperbola { r } => degenerate_fd_hyperbola_poly(r),
        }
    }

    /// The equivalent [`ConicSpec`], when the frame is not a limit case.
    pub fn conic_spec(&self) -> Option<ConicSpec> {
        let focus = ModelPoint::half_plane(0.0, 1.0).unwrap();
        match *self {
            CanonicalFrame::TwoFocusEllipse { b, c } => Some(ConicSpec::TwoFocus {
                f1: focus,
                f2: ModelPoint::half_plane(0.0, b).unwrap(),
                c,
                kind: TwoFocusKind::Ellipse,
            }),
            CanonicalFrame::TwoFocusHyperbola { b, c } => Some(ConicSpec::TwoFocus {
                f1: focus,
                f2: ModelPoint::half_plane(0.0, b).unwrap(),
                c,
                kind: TwoFocusKind::Hyperbola,
            }),
            CanonicalFrame::FocusDirectrix { r, eps } => Some(ConicSpec::FocusDirectrix {
                focus,
                directrix: Geodesic::arc(0.0, r).ok()?,
                eps,
            }),
            CanonicalFrame::DegenerateFdHyperbola { r } => Some(ConicSpec::FocusDirectrix {
                focus,
                directrix: Geodesic::arc(0.0, r).ok()?,
                eps: r,
            }),
            CanonicalFrame::TwoFocusParabola { .. } | CanonicalFrame::CircleLimit { .. } => None,
        }
    }

    /// Imaginary-axis heights where the axis residual can change monotony
    /// (focus and directrix heights).
    pub(crate) fn axis_split_heights(&self) -> Vec<f64> {
        match *self {
            CanonicalFrame::TwoFocusEllipse { b, .. }
            | CanonicalFrame::TwoFocusHyperbola { b, .. } => vec![1.0, b],
            CanonicalFrame::TwoFocusParabola { .. } => vec![1.0],
            CanonicalFrame::FocusDirectrix { r, .. }
            | CanonicalFrame::DegenerateFdHyperbola { r } => vec![1.0, r],
            CanonicalFrame::CircleLimit { .. } => vec![1.0],
        }
    }
}
