//! Minimal SVG writer for curve plots: model boundary in gray, curves solid,
//! markers labeled. Figures are correctness artifacts, not typographic
//! replicas.

use crate::hypgeo::ModelKind;
use crate::implicit::SampledCurve;
use std::fmt::Write as _;

pub struct SvgCanvas {
    xmin: f64,
    xmax: f64,
    ymin: f64,
    ymax: f64,
    width: f64,
    height: f64,
    body: String,
}

const PALETTE: [&str; 8] =
    ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"];

impl SvgCanvas {
    pub fn new(xmin: f64, xmax: f64, ymin: f64, ymax: f64, width_px: f64) -> Self {
        let height = width_px * (ymax - ymin) / (xmax - xmin);
        Self { xmin, xmax, ymin, ymax, width: width_px, height, body: String::new() }
    }

    pub fn palette(k: usize) -> &'static str {
        PALETTE[k % PALETTE.len()]
    }

    fn map(&self, x: f64, y: f64) -> (f64, f64) {
        let px = (x - self.xmin) / (self.xmax - self.xmin) * self.width;
        let py = (self.ymax - y) / (self.ymax - self.ymin) * self.height;
        (px, py)
    }

    pub fn polyline(&mut self, pts: &[(f64, f64)], color: &str, width: f64, dashed: bool) {
        if pts.len() < 2 {
            return;
        }
        let mut attr = String::new();
        for (x, y) in pts {
            let (px, py) = self.map(*x, *y);
            let _ = write!(attr, "{px:.2},{py:.2} ");
        }
        let dash = if dashed { " stroke-dasharray=\"6,4\"" } else { "" };
        let _ = writeln!(
            self.body,
            "<polyline points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"{width}\"{dash}/>",
            attr.trim_end()
        );
    }

    pub fn circle_outline(&mut self, cx: f64, cy: f64, r: f64, color: &str, dashed: bool) {
        let (px, py) = self.map(cx, cy);
        let pr = r / (self.xmax - self.xmin) * self.width;
        let dash = if dashed { " stroke-dasharray=\"6,4\"" } else { "" };
        let _ = writeln!(
            self.body,
            "<circle cx=\"{px:.2}\" cy=\"{py:.2}\" r=\"{pr:.2}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"1.2\"{dash}/>"
        );
    }

    pub fn dot(&mut self, x: f64, y: f64, color: &str, label: Option<&str>) {
        let (px, py) = self.map(x, y);
        let _ = writeln!(self.body, "<circle cx=\"{px:.2}\" cy=\"{py:.2}\" r=\"3\" fill=\"{color}\"/>");
        if let Some(text) = label {
            let _ = writeln!(
                self.body,
                "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"12\" fill=\"{color}\">{text}</text>",
                px + 5.0,
                py - 5.0
            );
        }
    }

    pub fn model_boundary(&mut self, model: ModelKind) {
        match model {
            ModelKind::HalfPlane => {
                let (x0, y0) = self.map(self.xmin, 0.0);
                let (x1, _) = self.map(self.xmax, 0.0);
                let _ = writeln!(
                    self.body,
                    "<line x1=\"{x0:.2}\" y1=\"{y0:.2}\" x2=\"{x1:.2}\" y2=\"{y0:.2}\" stroke=\"#999999\" stroke-width=\"1\"/>"
                );
            }
            ModelKind::PoincareDisk | ModelKind::KleinDisk => {
                self.circle_outline(0.0, 0.0, 1.0, "#999999", false);
            }
        }
    }

    pub fn curve(&mut self, curve: &SampledCurve, color: &str) {
        for line in &curve.polylines {
            let pts: Vec<(f64, f64)> = line.iter().map(|p| (p.x, p.y)).collect();
            self.polyline(&pts, color, 1.4, false);
        }
    }

    pub fn render(&self) -> String {
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w:.0}\" height=\"{h:.0}\" viewBox=\"0 0 {w:.0} {h:.0}\">\n<rect width=\"{w:.0}\" height=\"{h:.0}\" fill=\"white\"/>\n{body}</svg>\n",
            w = self.width,
            h = self.height,
            body = self.body
        )
    }
}

/// CSV serialization of a sampled curve: `x,y,residual` rows with a blank
/// line between polylines. `{}` formatting round-trips f64 exactly.
pub fn curve_to_csv(curve: &SampledCurve) -> String {
    let mut out = String::from("# x,y,residual\n");
    for (k, line) in curve.polylines.iter().enumerate() {
        if k > 0 {
            out.push('\n');
        }
        for p in line {
            let _ = writeln!(out, "{},{},{}", p.x, p.y, p.residual);
        }
    }
    out
}

/// Parses the CSV written by [`curve_to_csv`].
pub fn curve_from_csv(model: ModelKind, text: &str) -> SampledCurve {
    let mut polylines = Vec::new();
    let mut current: Vec<crate::implicit::TracedPoint> = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.starts_with('#') {
            continue;
        }
        if line.is_empty() {
            if !current.is_empty() {
                polylines.push(std::mem::take(&mut current));
            }
            continue;
        }
        let mut parts = line.split(',');
        let x: f64 = parts.next().unwrap_or("nan").parse().unwrap_or(f64::NAN);
        let y: f64 = parts.next().unwrap_or("nan").parse().unwrap_or(f64::NAN);
        let residual: f64 = parts.next().unwrap_or("nan").parse().unwrap_or(f64::NAN);
        current.push(crate::implicit::TracedPoint { x, y, residual });
    }
    if !current.is_empty() {
        polylines.push(current);
    }
    SampledCurve { model, polylines, ideal_points: Vec::new() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::implicit::TracedPoint;

    #[test]
    fn csv_round_trip_is_exact() {
        let curve = SampledCurve {
            model: ModelKind::HalfPlane,
            polylines: vec![
                vec![
                    TracedPoint { x: 0.1 + 0.2, y: 1.0 / 3.0, residual: -2.5e-13 },
                    TracedPoint { x: std::f64::consts::SQRT_2, y: 2.0, residual: 0.0 },
                ],
                vec![
                    TracedPoint { x: -1.0, y: 1e-9, residual: 3.0 },
                    TracedPoint { x: -2.0, y: 2e-9, residual: 4.0 },
                ],
            ],
            ideal_points: Vec::new(),
        };
        let text = curve_to_csv(&curve);
        let back = curve_from_csv(ModelKind::HalfPlane, &text);
        assert_eq!(curve.polylines, back.polylines);
    }

    #[test]
    fn svg_has_boundary_and_curve() {
        let mut canvas = SvgCanvas::new(-2.0, 2.0, 0.0, 2.0, 400.0);
        canvas.model_boundary(ModelKind::HalfPlane);
        canvas.polyline(&[(0.0, 1.0), (1.0, 1.5), (2.0, 1.0)], "#1f77b4", 1.0, false);
        canvas.dot(0.0, 1.0, "#d62728", Some("focus"));
        let svg = canvas.render();
        assert!(svg.starts_with("<svg"));
        assert!(svg.contains("<polyline"));
        assert!(svg.contains("focus"));
        assert!(svg.trim_end().ends_with("</svg>"));
    }
}
