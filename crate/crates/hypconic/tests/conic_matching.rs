//! Cross-definition consistency: traced polynomials against metric
//! residuals, isometry covariance of specs, and matching round trips.

use hypconic::conicdefs::{
    audit, audit_with, classify_fd, match_closed_fd_ellipse_to_two_focus, residual, ConicClass,
    CanonicalFrame, ConicSpec, TwoFocusKind,
};
use hypconic::hypgeo::{reflect_geodesic, reflect_point, Geodesic, ModelPoint};
use hypconic::implicit::{trace, TraceRegion};
use proptest::prelude::*;

fn region(h: f64) -> TraceRegion {
    TraceRegion { h, ..TraceRegion::half_plane_default() }
}

fn focus_i() -> ModelPoint {
    ModelPoint::half_plane(0.0, 1.0).unwrap()
}

/// Every canonical polynomial's traced zero set satisfies the matching
/// metric residual after mask filtering.
#[test]
fn polynomial_metric_consistency_across_the_corpus() {
    let frames = [
        CanonicalFrame::TwoFocusEllipse { b: 2.0, c: 2.5f64.ln() },
        CanonicalFrame::TwoFocusEllipse { b: 0.75, c: 1.0 },
        CanonicalFrame::TwoFocusEllipse { b: 1.0, c: 1.0 },
        CanonicalFrame::TwoFocusHyperbola { b: 2.0, c: 1.5f64.ln() },
        CanonicalFrame::FocusDirectrix { r: 2.0, eps: 0.25 },
        CanonicalFrame::FocusDirectrix { r: 3.0, eps: 0.5 },
        CanonicalFrame::FocusDirectrix { r: 2.0, eps: 0.5 },
        CanonicalFrame::TwoFocusParabola { cap: 4.0 },
        CanonicalFrame::FocusDirectrix { r: 2.0, eps: 1.0 },
        CanonicalFrame::CircleLimit { r: 0.25 },
        CanonicalFrame::DegenerateFdHyperbola { r: 2.0 },
    ];
    for frame in frames {
        let cp = frame.poly().unwrap();
        let curve = trace(&cp.poly, &region(1.0 / 512.0));
        assert!(curve.point_count() >= 500, "{frame:?}: only {} points", curve.point_count());
        let report = audit_with(&curve, |p| frame.residual_at(p), Some(&cp.mask));
        assert!(
            report.max_residual < 1e-6,
            "{frame:?}: max residual {} over {} points",
            report.max_residual,
            report.evaluated
        );
    }
}

/// The same consistency through the public ConicSpec audit path.
#[test]
fn audit_binds_traces_to_specs() {
    let frame = CanonicalFrame::TwoFocusEllipse { b: 2.0, c: 2.5f64.ln() };
    let cp = frame.poly().unwrap();
    let curve = trace(&cp.poly, &region(1.0 / 256.0));
    let spec = frame.conic_spec().unwrap();
    let report = audit(&curve, &spec, Some(&cp.mask)).unwrap();
    assert!(report.max_residual < 1e-6);
    assert!(report.evaluated > 500);

    // a wrong spec leaves a visible residual
    let wrong = ConicSpec::MetricCircle { center: focus_i(), r: 1.0 };
    let report = audit(&curve, &wrong, None).unwrap();
    assert!(report.max_residual > 1e-2);
}

/// Known curve points land within one grid cell of the trace (tracer
/// completeness on closed-form anchors).
#[test]
fn traces_pass_through_closed_form_points() {
    let h = 1.0 / 256.0;
    let anchors: Vec<(CanonicalFrame, Vec<(f64, f64)>)> = vec![
        (
            CanonicalFrame::CircleLimit { r: 0.25 },
            vec![
                (0.0, 1.5f64.sqrt()),
                (0.0, 0.5f64.sqrt()),
                ((((17.0f64).sqrt() - 4.0) / 2.0).sqrt(), 1.0),
            ],
        ),
        (
            CanonicalFrame::TwoFocusEllipse { b: 2.0, c: 2.5f64.ln() },
            vec![(0.0, 5.0f64.sqrt()), (0.0, 2.0 / 5.0f64.sqrt())],
        ),
        (
            CanonicalFrame::TwoFocusHyperbola { b: 2.0, c: 1.5f64.ln() },
            vec![(0.0, 3.0f64.sqrt()), (0.0, (4.0f64 / 3.0).sqrt())],
        ),
        (CanonicalFrame::TwoFocusParabola { cap: 4.0 }, vec![(0.0, 2.0f64.sqrt())]),
        (CanonicalFrame::FocusDirectrix { r: 2.0, eps: 1.0 }, vec![(0.0, 2.0f64.sqrt())]),
    ];
    for (frame, points) in anchors {
        let curve = trace(&frame.poly().unwrap().poly, &region(h));
        for (x, y) in points {
            let nearest = curve
                .points()
                .map(|p| ((p.x - x).powi(2) + (p.y - y).powi(2)).sqrt())
                .fold(f64::INFINITY, f64::min);
            assert!(nearest <= h, "{frame:?}: anchor ({x}, {y}) is {nearest} away");
        }
    }
}

/// The lemniscate trace approaches the ideal origin but never leaves the
/// open half-plane.
#[test]
fn lemniscate_stays_interior() {
    let cp = CanonicalFrame::TwoFocusParabola { cap: 4.0 }.poly().unwrap();
    let curve = trace(&cp.poly, &region(1.0 / 256.0));
    let mut closest_to_origin = f64::INFINITY;
    for p in curve.points() {
        assert!(p.y > 0.0);
        closest_to_origin = closest_to_origin.min((p.x * p.x + p.y * p.y).sqrt());
    }
    assert!(closest_to_origin < 0.02, "never approached the node: {closest_to_origin}");
    // and the origin is among the ideal points
    assert!(curve
        .ideal_points
        .iter()
        .any(|q| matches!(q.coord(), hypconic::hypgeo::IdealCoord::Axis(t) if t.abs() < 1e-9)));
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    /// Transporting a two-focus spec by an isometry transports its residuals:
    /// residual(spec, p) = residual(sigma spec, sigma p).
    #[test]
    fn residuals_are_isometry_covariant(
        bx in 0.3..3.0f64,
        c_extra in 0.1..1.5f64,
        px in -2.0..2.0f64,
        py in 0.1..3.0f64,
        mirror_center in -1.5..1.5f64,
        mirror_radius in 0.3..2.5f64,
    ) {
        let f1 = focus_i();
        let f2 = ModelPoint::half_plane(0.0, bx).unwrap();
        let c = bx.ln().abs() + c_extra;
        let spec = ConicSpec::TwoFocus { f1, f2, c, kind: TwoFocusKind::Ellipse };
        let p = ModelPoint::half_plane(px, py).unwrap();
        let r0 = residual(&spec, &p).unwrap();

        let mirror = Geodesic::arc(mirror_center, mirror_radius).unwrap();
        let moved = ConicSpec::TwoFocus {
            f1: reflect_point(&f1, &mirror).unwrap(),
            f2: reflect_point(&f2, &mirror).unwrap(),
            c,
            kind: TwoFocusKind::Ellipse,
        };
        let r1 = residual(&moved, &reflect_point(&p, &mirror).unwrap()).unwrap();
        prop_assert!((r0 - r1).abs() < 1e-10 * (1.0 + r0.abs()), "{r0} vs {r1}");
    }

    /// Same covariance for the focus-directrix residual, with the directrix
    /// transported through its ideal endpoints.
    #[test]
    fn fd_residuals_are_isometry_covariant(
        r in 1.3..3.0f64,
        eps in 0.1..2.5f64,
        px in -2.0..2.0f64,
        py in 0.1..3.0f64,
        mirror_center in -1.5..1.5f64,
        mirror_radius in 0.3..2.5f64,
    ) {
        let directrix = Geodesic::arc(0.0, r).unwrap();
        let spec = ConicSpec::FocusDirectrix { focus: focus_i(), directrix, eps };
        let p = ModelPoint::half_plane(px, py).unwrap();
        let r0 = residual(&spec, &p).unwrap();

        let mirror = Geodesic::arc(mirror_center, mirror_radius).unwrap();
        let moved = ConicSpec::FocusDirectrix {
            focus: reflect_point(&focus_i(), &mirror).unwrap(),
            directrix: reflect_geodesic(&directrix, &mirror).unwrap(),
            eps,
        };
        let r1 = residual(&moved, &reflect_point(&p, &mirror).unwrap()).unwrap();
        prop_assert!((r0 - r1).abs() < 1e-9 * (1.0 + r0.abs()), "{r0} vs {r1}");
    }

    /// Matching a closed focus-directrix ellipse reproduces its quartic.
    #[test]
    fn closed_fd_matches_reproduce_the_quartic(r in 1.1..4.0f64, t in 0.05..0.95f64) {
        let eps = t * (1.0 / r).min(1.0) * 0.95;
        prop_assume!(classify_fd(r, eps) == ConicClass::ClosedEllipse);
        let (b, c) = match_closed_fd_ellipse_to_two_focus(r, eps).unwrap();
        let fd = hypconic::conicdefs::focus_directrix_poly(r, eps).unwrap();
        let tf = hypconic::conicdefs::two_focus_ellipse_poly(b, c).unwrap();
        prop_assert!(fd.poly.proportional_distance(&tf.poly) < 1e-8);
    }
}
