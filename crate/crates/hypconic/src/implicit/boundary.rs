//! Ideal-boundary intersections of an implicit curve.
//!
//! In the half-plane chart these are the real roots of the `y = 0` slice; in
//! the disk charts the restriction to the unit circle is rationalized with
//! `x = (1 - t^2)/(1 + t^2)`, `y = 2t/(1 + t^2)` and solved in `t`. Roots are
//! isolated by Sturm sequences and bisected to 1e-12.

use super::poly::BivarPoly;
use super::uni::{self, UniPoly};
use crate::hypgeo::{IdealPoint, ModelKind};

/// Optional validity predicate, e.g. the sign mask of a squared-out
/// polynomial; points failing it are dropped.
pub type ValidityMask<'m> = &'m dyn Fn(f64, f64) -> bool;

/// Ideal boundary points of the zero set of `poly` in the given model.
pub fn ideal_boundary_points(
    poly: &BivarPoly,
    model: ModelKind,
    mask: Option<ValidityMask<'_>>,
) -> Vec<IdealPoint> {
    match model {
        ModelKind::HalfPlane => {
            let slice = poly.slice_at_y(0.0);
            uni::real_roots(&slice, 1e-12)
                .into_iter()
                .filter(|x| mask.map(|m| m(*x, 0.0)).unwrap_or(true))
                .map(IdealPoint::axis)
                .collect()
        }
        ModelKind::PoincareDisk | ModelKind::KleinDisk => {
            let q = circle_restriction(poly);
            let mut out: Vec<IdealPoint> = uni::real_roots(&q, 1e-12)
                .into_iter()
                .map(|t| {
                    let angle = 2.0 * t.atan();
                    (angle.cos(), angle.sin(), angle)
                })
                .filter(|(x, y, _)| mask.map(|m| m(*x, *y)).unwrap_or(true))
                .map(|(_, _, angle)| IdealPoint::angle(model, angle).unwrap())
                .collect();
            // t = infinity corresponds to the boundary point (-1, 0)
            let at_minus_one = poly.eval(-1.0, 0.0);
            if at_minus_one.abs() < 1e-12 * poly.max_abs_coeff().max(1.0)
                && mask.map(|m| m(-1.0, 0.0)).unwrap_or(true)
            {
                out.push(IdealPoint::angle(model, std::f64::consts::PI).unwrap());
            }
            out
        }
    }
}

/// `p(x(t), y(t)) (1 + t^2)^deg` on the rational unit circle.
fn circle_restriction(poly: &BivarPoly) -> UniPoly {
    let deg = poly.degree();
    // basis polynomials in t
    let one_minus = UniPoly::new(vec![1.0, 0.0, -1.0]); // 1 - t^2
    let two_t = UniPoly::new(vec![0.0, 2.0]); // 2t
    let one_plus = UniPoly::new(vec![1.0, 0.0, 1.0]); // 1 + t^2
    let mul = |a: &UniPoly, b: &UniPoly| {
        if a.is_zero() || b.is_zero() {
            return UniPoly::new(Vec::new());
        }
        let mut c = vec![0.0; a.degree() + b.degree() + 2];
        for (i, ca) in a.coeffs().iter().enumerate() {
            for (j, cb) in b.coeffs().iter().enumerate() {
                c[i + j] += ca * cb;
            }
        }
        UniPoly::new(c)
    };
    let mut powers_minus = vec![UniPoly::new(vec![1.0])];
    let mut powers_t = vec![UniPoly::new(vec![1.0])];
    let mut powers_plus = vec![UniPoly::new(vec![1.0])];
    for k in 1..=deg {
        powers_minus.push(mul(&powers_minus[k - 1], &one_minus));
        powers_t.push(mul(&powers_t[k - 1], &two_t));
        powers_plus.push(mul(&powers_plus[k - 1], &one_plus));
    }
    let mut acc = UniPoly::new(Vec::new());
    for (i, row) in poly.coeffs().iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            if *c == 0.0 {
                continue;
            }
            let term = mul(&mul(&powers_minus[i], &powers_t[j]), &powers_plus[deg - i - j]);
            let term = UniPoly::new(term.coeffs().iter().map(|v| v * c).collect());
            acc = UniPoly::new({
                let mut s = acc.coeffs().to_vec();
                if s.len() < term.coeffs().len() {
                    s.resize(term.coeffs().len(), 0.0);
                }
                for (k, v) in term.coeffs().iter().enumerate() {
                    s[k] += v;
                }
                s
            });
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypgeo::IdealCoord;
    use approx::assert_relative_eq;

    #[test]
    fn half_plane_roots_of_even_quartic() {
        // 7x^4 + 18x^2 - 9 has real roots at +- sqrt(3/7); embed as the y = 0
        // slice of a bivariate polynomial with some y-dependence added.
        let p = BivarPoly::from_coeffs(vec![
            vec![-9.0, 0.0, 4.0],
            vec![],
            vec![18.0, 0.0, 1.0],
            vec![],
            vec![7.0],
        ]);
        let pts = ideal_boundary_points(&p, ModelKind::HalfPlane, None);
        assert_eq!(pts.len(), 2);
        let expected = (3.0f64 / 7.0).sqrt();
        match (pts[0].coord(), pts[1].coord()) {
            (IdealCoord::Axis(a), IdealCoord::Axis(b)) => {
                assert_relative_eq!(a, -expected, epsilon = 1e-11);
                assert_relative_eq!(b, expected, epsilon = 1e-11);
            }
            _ => panic!(),
        }
    }

    #[test]
    fn no_boundary_points_for_interior_circle() {
        let p = BivarPoly::from_coeffs(vec![vec![-0.04, 0.0, 1.0], vec![], vec![1.0]]);
        // x^2 + y^2 = 0.04 in the disk: no unit-circle intersection
        assert!(ideal_boundary_points(&p, ModelKind::KleinDisk, None).is_empty());
    }

    #[test]
    fn disk_boundary_intersections_of_a_line() {
        // chart line y = 1/2 meets the unit circle at angles 30 and 150 deg
        let p = BivarPoly::from_coeffs(vec![vec![-0.5, 1.0]]);
        let pts = ideal_boundary_points(&p, ModelKind::KleinDisk, None);
        assert_eq!(pts.len(), 2);
        let mut angles: Vec<f64> = pts
            .iter()
            .map(|q| match q.coord() {
                IdealCoord::Angle(a) => a,
                _ => panic!(),
            })
            .collect();
        angles.sort_by(f64::total_cmp);
        assert_relative_eq!(angles[0], std::f64::consts::PI / 6.0, epsilon = 1e-10);
        assert_relative_eq!(angles[1], 5.0 * std::f64::consts::PI / 6.0, epsilon = 1e-10);
    }

    #[test]
    fn disk_point_at_angle_pi() {
        // vertical chart line x = -1 touches the circle at angle pi
        let p = BivarPoly::from_coeffs(vec![vec![1.0], vec![1.0]]);
        let pts = ideal_boundary_points(&p, ModelKind::PoincareDisk, None);
        assert_eq!(pts.len(), 1);
        match pts[0].coord() {
            IdealCoord::Angle(a) => assert_relative_eq!(a, std::f64::consts::PI, epsilon = 1e-12),
            _ => panic!(),
        }
    }

    #[test]
    fn mask_filters_roots() {
        let p = BivarPoly::from_coeffs(vec![vec![-1.0, 0.0, 1.0]]); // y^2 = 1... slice y=0: -1? no
        // use x^2 - 1 instead: roots +-1, mask keeps x > 0
        let p2 = BivarPoly::from_coeffs(vec![vec![-1.0], vec![], vec![1.0]]);
        let keep_positive = |x: f64, _y: f64| x > 0.0;
        let pts = ideal_boundary_points(&p2, ModelKind::HalfPlane, Some(&keep_positive));
        assert_eq!(pts.len(), 1);
        let _ = p;
    }

    #[test]
    fn grid_scan_agrees_with_sturm_roots() {
        // dense sign scan of the y = 0 slice as an independent cross-check
        let p = BivarPoly::from_coeffs(vec![
            vec![-9.0, 0.0, 4.0],
            vec![],
            vec![18.0, 0.0, 1.0],
            vec![],
            vec![7.0],
        ]);
        let slice = p.slice_at_y(0.0);
        let mut scan_roots = Vec::new();
        let (lo, hi, n) = (-3.0, 3.0, 6_000_000);
        let step = (hi - lo) / n as f64;
        let mut prev = slice.eval(lo);
        for k in 1..=n {
            let x = lo + k as f64 * step;
            let v = slice.eval(x);
            if prev == 0.0 || (prev < 0.0) != (v < 0.0) {
                scan_roots.push(x - 0.5 * step);
            }
            prev = v;
        }
        let sturm = ideal_boundary_points(&p, ModelKind::HalfPlane, None);
        assert_eq!(scan_roots.len(), sturm.len());
        for (s, pt) in scan_roots.iter().zip(&sturm) {
            match pt.coord() {
                IdealCoord::Axis(a) => assert!((a - s).abs() < 1e-5),
                _ => panic!(),
            }
        }
    }
}
