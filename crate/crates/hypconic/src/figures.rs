//! The six figure reproductions: each returns named SVG/CSV artifacts with
//! the same parameters as the source plots.

use crate::conicdefs::{
    fd_circle_limit_poly, fd_parabola_poly, focus_directrix_poly, two_focus_ellipse_poly,
    two_focus_hyperbola_poly,
};
use crate::error::ConicError;
use crate::hypgeo::ModelKind;
use crate::implicit::{trace, BivarPoly, SampledCurve, TraceRegion};
use crate::projmink::{fit_conic, molnar_conic, ProjLine, ProjPoint};
use crate::svg::{curve_to_csv, SvgCanvas};
use nalgebra::Matrix3;
use std::fmt::Write as _;

/// A rendered figure artifact: `(file name, file contents)` pairs.
pub type FigureFiles = Vec<(String, String)>;

/// Renders figure `id` (1 through 6) at tracing pitch `h`.
pub fn render_figure(id: u8, h: f64) -> Result<FigureFiles, ConicError> {
    match id {
        1 => figure1(h),
        2 => figure2(h),
        3 => figure3(h),
        4 => figure4(h),
        5 => figure5(h),
        6 => figure6(h),
        _ => Err(ConicError::InvalidParams(format!("figure id must be 1..=6, got {id}"))),
    }
}

fn half_plane_region(h: f64, xmax: f64, ymax: f64) -> TraceRegion {
    TraceRegion {
        model: ModelKind::HalfPlane,
        xmin: -xmax,
        xmax,
        ymin: 0.0,
        ymax,
        h,
        refine_steps: 40,
    }
}

fn form_to_chart_poly(form: &Matrix3<f64>) -> BivarPoly {
    BivarPoly::from_coeffs(vec![
        vec![form[(2, 2)], 2.0 * form[(1, 2)], form[(1, 1)]],
        vec![2.0 * form[(0, 2)], 2.0 * form[(0, 1)]],
        vec![form[(0, 0)]],
    ])
}

/// Reflection-construction conic with foci (0,0), (0.5,0) and auxiliary line
/// y = 1/2, plus the conic fitted through the produced points.
fn figure1(h: f64) -> Result<FigureFiles, ConicError> {
    let a = ProjPoint::from_chart(0.0, 0.0);
    let b = ProjPoint::from_chart(0.5, 0.0);
    let x1 = ProjLine::from_chart(0.0, 1.0, -0.5);
    let run = molnar_conic(&a, &b, &x1, 200)?;
    let fit = fit_conic(&run.points)?;
    let poly = form_to_chart_poly(&fit.form);
    let region = TraceRegion { h, ..TraceRegion::disk_default(ModelKind::KleinDisk) };
    // trace over the full chart square so the exterior branch shows too
    let wide = TraceRegion { xmin: -2.0, xmax: 2.0, ymin: -2.0, ymax: 2.0, ..region };
    let curve = trace(&poly, &region);
    let full = SampledCurve {
        model: ModelKind::KleinDisk,
        polylines: trace_unclipped(&poly, &wide),
        ideal_points: Vec::new(),
    };

    let mut canvas = SvgCanvas::new(-1.6, 1.6, -1.6, 1.6, 640.0);
    canvas.model_boundary(ModelKind::KleinDisk);
    for line in &full.polylines {
        let pts: Vec<(f64, f64)> = line.iter().map(|p| (p.x, p.y)).collect();
        canvas.polyline(&pts, SvgCanvas::palette(0), 1.2, false);
    }
    for p in &run.points {
        if let Some((x, y)) = p.to_chart() {
            if x.abs() < 1.6 && y.abs() < 1.6 {
                canvas.dot(x, y, SvgCanvas::palette(1), None);
            }
        }
    }
    canvas.dot(0.0, 0.0, "#000000", Some("A"));
    canvas.dot(0.5, 0.0, "#000000", Some("B"));
    canvas.polyline(&[(-1.6, 0.5), (1.6, 0.5)], "#888888", 1.0, true);

    let mut points_csv = String::from("# x,y\n");
    for p in &run.points {
        if let Some((x, y)) = p.to_chart() {
            let _ = writeln!(points_csv, "{x},{y}");
        }
    }
    Ok(vec![
        ("figure1.svg".into(), canvas.render()),
        ("figure1_conic.csv".into(), curve_to_csv(&curve)),
        ("figure1_points.csv".into(), points_csv),
    ])
}

// The fitted conic continues outside the unit disk; trace it over the plain
// plane for display purposes.
fn trace_unclipped(poly: &BivarPoly, region: &TraceRegion) -> Vec<Vec<crate::implicit::TracedPoint>> {
    // reuse the half-plane domain rule by shifting: cheap trick is to trace in
    // a model-free way via a large half-plane window translated upward
    let lifted = TraceRegion {
        model: ModelKind::HalfPlane,
        xmin: region.xmin,
        xmax: region.xmax,
        ymin: region.ymin + 10.0,
        ymax: region.ymax + 10.0,
        h: region.h,
        refine_steps: region.refine_steps,
    };
    let shifted = shift_y(poly, -10.0);
    let curve = trace(&shifted, &lifted);
    curve
        .polylines
        .into_iter()
        .map(|line| {
            line.into_iter()
                .map(|p| crate::implicit::TracedPoint { x: p.x, y: p.y - 10.0, residual: p.residual })
                .collect()
        })
        .collect()
}

/// p(x, y + dy) by binomial expansion of each y power.
fn shift_y(poly: &BivarPoly, dy: f64) -> BivarPoly {
    let mut acc = BivarPoly::zero();
    for (i, row) in poly.coeffs().iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            if *c == 0.0 {
                continue;
            }
            // (y + dy)^j
            let mut binom = 1.0;
            for k in 0..=j {
                let term = BivarPoly::monomial(i, k, c * binom * dy.powi((j - k) as i32));
                acc = acc.add(&term);
                binom = binom * (j - k) as f64 / (k + 1) as f64;
            }
        }
    }
    acc
}

/// Circle-limit curve with focus i and r = 1/4, with the tangent metric
/// circle dashed.
fn figure2(h: f64) -> Result<FigureFiles, ConicError> {
    let limit = fd_circle_limit_poly(0.25)?;
    let region = half_plane_region(h, 1.5, 2.0);
    let curve = trace(&limit.poly, &region);

    let (ytop, ybot) = ((1.5f64).sqrt(), (0.5f64).sqrt());
    let mut canvas = SvgCanvas::new(-1.5, 1.5, 0.0, 2.0, 640.0);
    canvas.model_boundary(ModelKind::HalfPlane);
    canvas.curve(&curve, SvgCanvas::palette(0));
    canvas.circle_outline(0.0, 0.5 * (ytop + ybot), 0.5 * (ytop - ybot), SvgCanvas::palette(1), true);
    canvas.dot(0.0, 1.0, "#000000", Some("i"));
    Ok(vec![("figure2.svg".into(), canvas.render()), ("figure2.csv".into(), curve_to_csv(&curve))])
}

/// Nested two-focus ellipses with foci i and 3i/4.
fn figure3(h: f64) -> Result<FigureFiles, ConicError> {
    let region = half_plane_region(h, 2.5, 3.0);
    let mut canvas = SvgCanvas::new(-2.5, 2.5, 0.0, 3.0, 640.0);
    canvas.model_boundary(ModelKind::HalfPlane);
    let mut csv = String::new();
    for (k, c) in [0.5, 1.0, 1.5].into_iter().enumerate() {
        let p = two_focus_ellipse_poly(0.75, c)?;
        let curve = trace(&p.poly, &region);
        canvas.curve(&curve, SvgCanvas::palette(k));
        let _ = writeln!(csv, "# two-focus ellipse b=3/4 c={c}");
        csv.push_str(&curve_to_csv(&curve));
        csv.push('\n');
    }
    canvas.dot(0.0, 1.0, "#000000", Some("i"));
    canvas.dot(0.0, 0.75, "#000000", Some("3i/4"));
    Ok(vec![("figure3.svg".into(), canvas.render()), ("figure3.csv".into(), csv)])
}

/// Focus-directrix ellipses with directrix |z| = 2: eccentricities up to the
/// lemniscate on the left panel, 0.6 through 0.9 on the right.
fn figure4(h: f64) -> Result<FigureFiles, ConicError> {
    let region = half_plane_region(h, 3.0, 3.5);
    let mut csv = String::new();
    let render_panel = |epsilons: &[f64], csv: &mut String| -> Result<String, ConicError> {
        let mut canvas = SvgCanvas::new(-3.0, 3.0, 0.0, 3.5, 640.0);
        canvas.model_boundary(ModelKind::HalfPlane);
        for (k, &eps) in epsilons.iter().enumerate() {
            let p = focus_directrix_poly(2.0, eps)?;
            let curve = trace(&p.poly, &region);
            canvas.curve(&curve, SvgCanvas::palette(k));
            let _ = writeln!(csv, "# fd ellipse r=2 eps={eps}");
            csv.push_str(&curve_to_csv(&curve));
            csv.push('\n');
        }
        canvas.dot(0.0, 1.0, "#000000", Some("i"));
        canvas.circle_outline(0.0, 0.0, 2.0, "#888888", true);
        Ok(canvas.render())
    };
    let left = render_panel(&[0.3, 0.4, 0.5], &mut csv)?;
    let right = render_panel(&[0.6, 0.7, 0.8, 0.9], &mut csv)?;
    Ok(vec![
        ("figure4_left.svg".into(), left),
        ("figure4_right.svg".into(), right),
        ("figure4.csv".into(), csv),
    ])
}

/// Focus-directrix parabolas with directrix |z| = r: Cassini ovals for
/// r < 1 on the left, open curves for r > 1 on the right.
fn figure5(h: f64) -> Result<FigureFiles, ConicError> {
    let region = half_plane_region(h, 3.0, 3.0);
    let mut csv = String::new();
    let render_panel = |rs: &[f64], csv: &mut String| -> Result<String, ConicError> {
        let mut canvas = SvgCanvas::new(-3.0, 3.0, 0.0, 3.0, 640.0);
        canvas.model_boundary(ModelKind::HalfPlane);
        for (k, &r) in rs.iter().enumerate() {
            let p = fd_parabola_poly(r)?;
            let curve = trace(&p.poly, &region);
            canvas.curve(&curve, SvgCanvas::palette(k));
            let _ = writeln!(csv, "# fd parabola r={r}");
            csv.push_str(&curve_to_csv(&curve));
            csv.push('\n');
        }
        canvas.dot(0.0, 1.0, "#000000", Some("i"));
        Ok(canvas.render())
    };
    let left = render_panel(&[0.4, 0.6, 0.8], &mut csv)?;
    let right = render_panel(&[1.25, 1.5, 2.0], &mut csv)?;
    Ok(vec![
        ("figure5_left.svg".into(), left),
        ("figure5_right.svg".into(), right),
        ("figure5.csv".into(), csv),
    ])
}

/// The two-focus hyperbola with foci i and 2i, c = log(3/2).
fn figure6(h: f64) -> Result<FigureFiles, ConicError> {
    let p = two_focus_hyperbola_poly(2.0, 1.5f64.ln())?;
    let region = half_plane_region(h, 4.0, 4.0);
    let curve = trace(&p.poly, &region);
    let mut canvas = SvgCanvas::new(-4.0, 4.0, 0.0, 4.0, 640.0);
    canvas.model_boundary(ModelKind::HalfPlane);
    canvas.curve(&curve, SvgCanvas::palette(0));
    canvas.dot(0.0, 1.0, "#000000", Some("i"));
    canvas.dot(0.0, 2.0, "#000000", Some("2i"));
    Ok(vec![("figure6.svg".into(), canvas.render()), ("figure6.csv".into(), curve_to_csv(&curve))])
}
