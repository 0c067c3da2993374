//! Axis-intercept solving, focus-directrix classification, and matching
//! between the two-focus and focus-directrix definitions.

use super::poly::{hyperbola_quartic_unchecked, CanonicalFrame};
use super::ConicClass;
use crate::error::ConicError;
use crate::hypgeo::ModelPoint;

const PARAM_TOL: f64 = 1e-12;

/// Positive-imaginary-axis intercepts of a canonical conic: all `y > 0` with
/// `residual(i y) = 0`, found by sign-change bisection on the pieces of the
/// residual split at the focus and directrix heights.
pub fn axis_intercepts(frame: &CanonicalFrame) -> Vec<f64> {
    let g = |t: f64| {
        let p = ModelPoint::half_plane(0.0, t.exp()).expect("positive height");
        frame.residual_at(&p)
    };
    let mut splits: Vec<f64> = frame
        .axis_split_heights()
        .into_iter()
        .filter(|h| *h > 0.0)
        .map(f64::ln)
        .collect();
    splits.push(-16.0);
    splits.push(16.0);
    splits.sort_by(f64::total_cmp);
    splits.dedup_by(|a, b| (*a - *b).abs() < 1e-13);

    let mut roots: Vec<f64> = Vec::new();
    for pair in splits.windows(2) {
        let (lo, hi) = (pair[0], pair[1]);
        let steps = 2000;
        let dt = (hi - lo) / steps as f64;
        let mut t_prev = lo + 1e-11; // keep off the split point itself
        let mut v_prev = g(t_prev);
        for k in 1..=steps {
            let t = if k == steps { hi - 1e-11 } else { lo + k as f64 * dt };
            let v = g(t);
            if v_prev == 0.0 {
                roots.push(t_prev);
            } else if v.is_finite() && v_prev.is_finite() && (v < 0.0) != (v_prev < 0.0) {
                // bisect to machine resolution in t
                let (mut a, mut b, mut va) = (t_prev, t, v_prev);
                for _ in 0..100 {
                    let m = 0.5 * (a + b);
                    if m <= a || m >= b {
                        break;
                    }
                    let vm = g(m);
                    if vm == 0.0 {
                        a = m;
                        b = m;
                        break;
                    }
                    if (vm < 0.0) == (va < 0.0) {
                        a = m;
                        va = vm;
                    } else {
                        b = m;
                    }
                }
                roots.push(0.5 * (a + b));
            }
            t_prev = t;
            v_prev = v;
        }
    }
    let mut ys: Vec<f64> = roots.into_iter().map(f64::exp).collect();
    ys.sort_by(f64::total_cmp);
    ys.dedup_by(|a, b| (*a - *b).abs() < 1e-9 * (1.0 + b.abs()));
    ys
}

/// Classifies the focus-directrix conic with focus `i`, directrix `|z| = r`,
/// and eccentricity `eps`, deciding closedness by the sign analysis of the
/// `y = 0` slice (a quadratic in `x^2`).
pub fn classify_fd(r: f64, eps: f64) -> ConicClass {
    if (eps - 1.0).abs() <= PARAM_TOL {
        return ConicClass::Parabola;
    }
    if eps < 1.0 {
        if (eps * r - 1.0).abs() <= PARAM_TOL {
            return ConicClass::Lemniscate;
        }
        // slice: (r^2 - eps^2) w^2 + 2 r^2 (1 + eps^2) w + r^2 (1 - eps^2 r^2),
        // w = x^2; the linear coefficient is always positive, so positive
        // roots exist exactly when the outer coefficients disagree in sign.
        if eps * r > 1.0 || eps > r {
            ConicClass::OpenTwoIdealPoints
        } else {
            ConicClass::ClosedEllipse
        }
    } else if (eps - r).abs() <= PARAM_TOL {
        ConicClass::DegenerateOneVertex
    } else {
        ConicClass::Hyperbola
    }
}

/// Eccentricity and directrix radius of the focus-directrix hyperbola with
/// the same quartic as the two-focus hyperbola (foci `i`, `bi`):
/// `r = sqrt((-b + 2 b^2 e^c - b e^{2c}) / (b - 2 e^c + b e^{2c}))` and the
/// companion eccentricity, both `> 1` on the valid range `0 < c < log b`.
pub fn match_two_focus_hyperbola_to_fd(b: f64, c: f64) -> Result<(f64, f64), ConicError> {
    if !(b > 1.0 + PARAM_TOL && b.is_finite()) {
        return Err(ConicError::InvalidParams(format!("need b > 1, got {b}")));
    }
    if !(c > PARAM_TOL && c < b.ln() - PARAM_TOL) {
        return Err(ConicError::InvalidParams(format!(
            "need 0 < c < log b = {}, got c = {c}",
            b.ln()
        )));
    }
    let ec = c.exp();
    let num = b * (2.0 * b * ec - 1.0 - ec * ec);
    let den = b * (1.0 + ec * ec) - 2.0 * ec;
    if num <= 0.0 || den <= 0.0 {
        return Err(ConicError::InvalidParams("negative radicand; (b, c) out of range".into()));
    }
    let r = (num / den).sqrt();
    let eps = (num * den).sqrt() / (b * (ec * ec - 1.0));
    Ok((r, eps))
}

/// Two-focus parameters `(b, c)` of a closed focus-directrix ellipse,
/// obtained by equating axis intercepts: `b = y+ y-`, `c = log(y+ / y-)`.
pub fn match_closed_fd_ellipse_to_two_focus(r: f64, eps: f64) -> Result<(f64, f64), ConicError> {
    let class = classify_fd(r, eps);
    if class != ConicClass::ClosedEllipse {
        return Err(ConicError::NoMatch(format!(
            "focus-directrix conic classifies as {class}, not a closed ellipse"
        )));
    }
    let ys = axis_intercepts(&CanonicalFrame::FocusDirectrix { r, eps });
    if ys.len() != 2 {
        return Err(ConicError::NoMatch(format!(
            "expected two axis intercepts for a closed ellipse, found {}",
            ys.len()
        )));
    }
    let (lo, hi) = (ys[0], ys[1]);
    Ok((hi * lo, (hi / lo).ln()))
}

/// Outcome of matching a focus-directrix conic to the two-focus definition.
/// Successful matches carry the coefficient-wise distance between the
/// normalized quartics as a built-in validation.
#[derive(Debug, Clone)]
pub enum FdMatchOutcome {
    TwoFocusEllipse { b: f64, c: f64, poly_residual: f64 },
    TwoFocusHyperbola { b: f64, c: f64, poly_residual: f64 },
    /// The match provably does not exist.
    NoMatch { class: ConicClass, reason: String },
}

/// Full matching dispatch used by the CLI: closed ellipses and two-vertex
/// hyperbolas match; lemniscates, open ellipses, parabolas, and one-vertex
/// degenerate hyperbolas provably do not.
pub fn match_fd_to_two_focus(r: f64, eps: f64) -> Result<FdMatchOutcome, ConicError> {
    if !(r > 0.0 && eps > 0.0 && r.is_finite() && eps.is_finite()) {
        return Err(ConicError::InvalidParams(format!("need positive r and eps, got ({r}, {eps})")));
    }
    if (r - 1.0).abs() <= PARAM_TOL {
        return Err(ConicError::InvalidParams("directrix |z| = 1 passes through the focus".into()));
    }
    let class = classify_fd(r, eps);
    let no = |reason: &str| {
        Ok(FdMatchOutcome::NoMatch { class, reason: reason.to_string() })
    };
    match class {
        ConicClass::ClosedEllipse => {
            let (b, c) = match_closed_fd_ellipse_to_two_focus(r, eps)?;
            let fd = super::poly::focus_directrix_poly(r, eps)?;
            let tf = super::poly::two_focus_ellipse_poly(b, c)?;
            let poly_residual = fd.poly.proportional_distance(&tf.poly);
            Ok(FdMatchOutcome::TwoFocusEllipse { b, c, poly_residual })
        }
        ConicClass::Lemniscate => {
            no("lemniscate passes through an ideal point; two-focus ellipses are compact")
        }
        ConicClass::OpenTwoIdealPoints => {
            no("curve reaches two ideal points; two-focus ellipses are compact")
        }
        ConicClass::Parabola => no("the parabola definitions never agree"),
        ConicClass::DegenerateOneVertex => {
            no("one-vertex degenerate: the second vertex escaped to infinity")
        }
        ConicClass::CircleLimit => no("the circle limit is not an algebraic match target"),
        ConicClass::Hyperbola => {
            let ys = axis_intercepts(&CanonicalFrame::FocusDirectrix { r, eps });
            if ys.len() != 2 {
                return no("hyperbola has a single vertex on the axis; no two-focus form");
            }
            let (lo, hi) = (ys[0], ys[1]);
            if (lo - 1.0) * (hi - 1.0) < 0.0 {
                return no("vertices straddle the focus; no two-focus hyperbola has that");
            }
            let (b, c) = (hi * lo, (hi / lo).ln());
            // vertices of a two-focus hyperbola lie strictly between the foci
            if c >= b.ln().abs() - PARAM_TOL || c <= PARAM_TOL {
                return no("vertex spacing incompatible with foci at i and bi");
            }
            let fd = super::poly::focus_directrix_poly(r, eps)?;
            let tf = hyperbola_quartic_unchecked(b, c)?;
            let poly_residual = fd.poly.proportional_distance(&tf.poly);
            Ok(FdMatchOutcome::TwoFocusHyperbola { b, c, poly_residual })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conicdefs::poly::{focus_directrix_poly, two_focus_ellipse_poly};
    use approx::assert_relative_eq;

    #[test]
    fn ellipse_intercepts_closed_form() {
        // foci i and 2i, c = log(5/2): intercepts sqrt(5) and 2/sqrt(5)
        let ys = axis_intercepts(&CanonicalFrame::TwoFocusEllipse { b: 2.0, c: 2.5f64.ln() });
        assert_eq!(ys.len(), 2);
        assert_relative_eq!(ys[0], 2.0 / 5.0f64.sqrt(), epsilon = 1e-12);
        assert_relative_eq!(ys[1], 5.0f64.sqrt(), epsilon = 1e-12);
    }

    #[test]
    fn hyperbola_intercepts() {
        let (b, c) = (2.0, 1.5f64.ln());
        let ys = axis_intercepts(&CanonicalFrame::TwoFocusHyperbola { b, c });
        assert_eq!(ys.len(), 2);
        assert_relative_eq!(ys[0], (b * (-c).exp()).sqrt(), epsilon = 1e-12);
        assert_relative_eq!(ys[1], (b * c.exp()).sqrt(), epsilon = 1e-12);
    }

    #[test]
    fn fd_intercepts_match_equivalent_ellipse() {
        // r = sqrt(11/19), eps = sqrt(209)/21 is the b = 2, c = log(5/2) ellipse
        let frame = CanonicalFrame::FocusDirectrix {
            r: (11.0f64 / 19.0).sqrt(),
            eps: 209.0f64.sqrt() / 21.0,
        };
        let ys = axis_intercepts(&frame);
        assert_eq!(ys.len(), 2);
        assert_relative_eq!(ys[0], 2.0 / 5.0f64.sqrt(), epsilon = 1e-10);
        assert_relative_eq!(ys[1], 5.0f64.sqrt(), epsilon = 1e-10);
    }

    #[test]
    fn classification_cases() {
        assert_eq!(classify_fd(2.0, 0.5), ConicClass::Lemniscate);
        assert_eq!(classify_fd(3.0, 0.5), ConicClass::OpenTwoIdealPoints);
        assert_eq!(classify_fd(2.0, 2.0), ConicClass::DegenerateOneVertex);
        assert_eq!(classify_fd(2.0, 0.25), ConicClass::ClosedEllipse);
        assert_eq!(classify_fd(2.0, 1.0), ConicClass::Parabola);
        assert_eq!(classify_fd((11.0f64 / 7.0).sqrt(), 77.0f64.sqrt() / 5.0), ConicClass::Hyperbola);
        // r < 1 configurations classify by the root test: eps between r and 1 opens the curve
        assert_eq!(classify_fd(0.5, 0.75), ConicClass::OpenTwoIdealPoints);
        assert_eq!(classify_fd(0.5, 0.3), ConicClass::ClosedEllipse);
    }

    #[test]
    fn classification_agrees_with_slice_roots() {
        // the analytic case split must match the actual y = 0 slice roots
        for (r, eps) in [
            (2.0, 0.25),
            (3.0, 0.5),
            (0.5, 0.75),
            (0.5, 0.3),
            (1.5, 0.9),
            (4.0, 0.2),
            (0.8, 0.95),
        ] {
            let p = focus_directrix_poly(r, eps).unwrap();
            let slice = p.poly.slice_at_y(0.0);
            let roots = crate::implicit::uni::real_roots(&slice, 1e-12);
            let class = classify_fd(r, eps);
            match class {
                ConicClass::ClosedEllipse => assert!(roots.is_empty(), "r={r} eps={eps}"),
                ConicClass::OpenTwoIdealPoints => assert_eq!(roots.len(), 2, "r={r} eps={eps}"),
                other => panic!("unexpected class {other:?} for r={r} eps={eps}"),
            }
        }
    }

    #[test]
    fn revals_instance() {
        let (r, eps) = match_two_focus_hyperbola_to_fd(2.0, 1.5f64.ln()).unwrap();
        assert_relative_eq!(r, (11.0f64 / 7.0).sqrt(), epsilon = 1e-12);
        assert_relative_eq!(eps, 77.0f64.sqrt() / 5.0, epsilon = 1e-12);
        assert!(eps > 1.0);
    }

    #[test]
    fn revals_limit_toward_parabola() {
        // c -> log b: eps -> 1+
        let b = 2.0;
        let (_, eps) = match_two_focus_hyperbola_to_fd(b, b.ln() - 1e-6).unwrap();
        assert!(eps > 1.0);
        assert!(eps - 1.0 < 1e-3, "eps = {eps}");
    }

    #[test]
    fn revals_rejects_boundary() {
        assert!(match_two_focus_hyperbola_to_fd(2.0, 2.0f64.ln()).is_err());
        assert!(match_two_focus_hyperbola_to_fd(2.0, 0.0).is_err());
        assert!(match_two_focus_hyperbola_to_fd(1.0, 0.1).is_err());
    }

    #[test]
    fn closed_fd_ellipse_matches_paper_instance() {
        let (b, c) =
            match_closed_fd_ellipse_to_two_focus((11.0f64 / 19.0).sqrt(), 209.0f64.sqrt() / 21.0)
                .unwrap();
        assert_relative_eq!(b, 2.0, epsilon = 1e-9);
        assert_relative_eq!(c, 2.5f64.ln(), epsilon = 1e-9);
    }

    #[test]
    fn closed_fd_match_polynomials_agree() {
        let (r, eps) = (2.0, 0.25);
        let (b, c) = match_closed_fd_ellipse_to_two_focus(r, eps).unwrap();
        let fd = focus_directrix_poly(r, eps).unwrap();
        let tf = two_focus_ellipse_poly(b, c).unwrap();
        assert!(
            fd.poly.proportional_distance(&tf.poly) < 1e-8,
            "distance {}",
            fd.poly.proportional_distance(&tf.poly)
        );
    }

    #[test]
    fn open_classification_is_an_error_for_ellipse_match() {
        assert!(matches!(
            match_closed_fd_ellipse_to_two_focus(3.0, 0.5),
            Err(ConicError::NoMatch(_))
        ));
    }

    #[test]
    fn degenerate_case_yields_no_match() {
        match match_fd_to_two_focus(2.0, 2.0).unwrap() {
            FdMatchOutcome::NoMatch { class, reason } => {
                assert_eq!(class, ConicClass::DegenerateOneVertex);
                assert!(reason.contains("one-vertex"));
            }
            other => panic!("expected NoMatch, got {other:?}"),
        }
    }

    #[test]
    fn round_trip_hyperbola_match() {
        let (b, c) = (2.0, 1.5f64.ln());
        let (r, eps) = match_two_focus_hyperbola_to_fd(b, c).unwrap();
        match match_fd_to_two_focus(r, eps).unwrap() {
            FdMatchOutcome::TwoFocusHyperbola { b: b2, c: c2, poly_residual } => {
                assert_relative_eq!(b, b2, epsilon = 1e-9);
                assert_relative_eq!(c, c2, epsilon = 1e-9);
                assert!(poly_residual < 1e-8, "poly residual {poly_residual}");
            }
            other => panic!("expected hyperbola, got {other:?}"),
        }
    }
}
