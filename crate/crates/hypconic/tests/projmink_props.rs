//! Property tests for polarity, B-reflections, and the reflection
//! construction.

use hypconic::projmink::{
    congruence_invariants, fit_conic, is_boundary_line, join, minkowski, molnar_conic, polar_line,
    pole, reflect_line_across_line, reflect_point_across_line, reflect_vector, ProjLine,
    ProjPoint,
};
use proptest::prelude::*;

fn triple() -> impl Strategy<Value = [f64; 3]> {
    [(-2.0..2.0f64), (-2.0..2.0f64), (-2.0..2.0f64)]
        .prop_filter("nonzero", |v| v.iter().map(|c| c * c).sum::<f64>() > 1e-4)
}

fn secant_line() -> impl Strategy<Value = ProjLine> {
    // chords of the absolute through two interior chart points
    ([(-0.7..0.7f64), (-0.7..0.7f64)], [(-0.7..0.7f64), (-0.7..0.7f64)])
        .prop_filter_map("distinct, non-boundary", |(a, b)| {
            let p = ProjPoint::from_chart(a[0], a[1]);
            let q = ProjPoint::from_chart(b[0], b[1]);
            join(&p, &q).ok().filter(|l| !is_boundary_line(l))
        })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, failure_persistence: None, ..ProptestConfig::default() })]

    /// Polarity is an involution and reverses incidence: the incidence value
    /// of (p, l) equals that of (pole(l), polar(p)).
    #[test]
    fn polarity_involution_and_incidence(pt in triple(), ln in triple()) {
        let p = ProjPoint::new(pt[0], pt[1], pt[2]);
        let l = ProjLine::new(ln[0], ln[1], ln[2]);
        prop_assert!(pole(&polar_line(&p)).approx_eq(&p, 1e-12));
        let direct = l.vector().dot(&p.vector()).abs();
        let dual = polar_line(&p).vector().dot(&pole(&l).vector()).abs();
        prop_assert!((direct - dual).abs() < 1e-12);
    }

    /// The raw reflection preserves the Minkowski form.
    #[test]
    fn reflections_preserve_b(v in triple(), w in triple(), m in secant_line()) {
        let (v, w) = (nalgebra::Vector3::from(v), nalgebra::Vector3::from(w));
        let sv = reflect_vector(&v, &m).unwrap();
        let sw = reflect_vector(&w, &m).unwrap();
        let b0 = minkowski(&v, &w);
        prop_assert!((b0 - minkowski(&sv, &sw)).abs() < 1e-10 * (1.0 + b0.abs()));
    }

    /// Reflections preserve the absolute: isotropic vectors stay isotropic.
    #[test]
    fn reflections_preserve_the_absolute(theta in 0.0..std::f64::consts::TAU, m in secant_line()) {
        let ideal = ProjPoint::new(theta.cos(), theta.sin(), 1.0);
        let r = reflect_point_across_line(&ideal, &m).unwrap();
        prop_assert!(r.minkowski_norm().abs() < 1e-10);
    }

    /// The construction's point set stays on one conic under a simultaneous
    /// B-reflection of the whole input, up to congruence of the fitted forms.
    #[test]
    fn molnar_is_reflection_invariant(mirror in secant_line(), bx in 0.2..0.7f64, x1c in 0.3..0.8f64) {
        let a = ProjPoint::from_chart(0.0, 0.0);
        let b = ProjPoint::from_chart(bx, 0.0);
        let x1 = ProjLine::from_chart(0.0, 1.0, -x1c);
        let run = molnar_conic(&a, &b, &x1, 60).unwrap();
        let fit = fit_conic(&run.points).unwrap();
        prop_assert!(fit.max_residual < 1e-8);

        let ra = reflect_point_across_line(&a, &mirror).unwrap();
        let rb = reflect_point_across_line(&b, &mirror).unwrap();
        let rx1 = reflect_line_across_line(&x1, &mirror).unwrap();
        let run2 = molnar_conic(&ra, &rb, &rx1, 60).unwrap();
        let fit2 = fit_conic(&run2.points).unwrap();

        let (i1, i2) = congruence_invariants(&fit.form);
        let (j1, j2) = congruence_invariants(&fit2.form);
        prop_assert!(((i1 - j1) / i1.abs().max(1.0)).abs() < 1e-7, "{i1} vs {j1}");
        prop_assert!(((i2 - j2) / i2.abs().max(1.0)).abs() < 1e-7, "{i2} vs {j2}");
    }
}
