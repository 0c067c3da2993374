//! Command-line front end: generate curves, verify the comparison theorems,
//! match definitions, classify focus-directrix conics, and emit figures.
//!
//! Exit codes: 0 success/pass, 1 verification failure, 2 usage or spec
//! error, 3 proven-no-match.

mod expr;

use clap::{Args, Parser, Subcommand};
use hypconic::conicdefs::{
    audit_with, classify_fd, focus_directrix_poly, match_fd_to_two_focus,
    match_two_focus_hyperbola_to_fd, CanonicalFrame, CanonicalPoly, ConicSpec, FdMatchOutcome,
};
use hypconic::figures::render_figure;
use hypconic::hypgeo::{ModelKind, ModelPoint};
use hypconic::implicit::{trace, trace_field, SampledCurve, TraceRegion};
use hypconic::svg::{curve_to_csv, SvgCanvas};
use hypconic::verify::{run as run_suite, Suite};
use serde_json::json;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "hypconic", version, about = "Conic sections in the hyperbolic plane")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Trace a conic and write CSV or SVG.
    Generate(GenerateArgs),
    /// Run a theorem-verification suite and print a JSON report.
    Verify(VerifyArgs),
    /// Match a conic in one definition to its parameters in the other.
    Match(MatchArgs),
    /// Classify a focus-directrix conic from (r, eps).
    Classify(ClassifyArgs),
    /// Regenerate a figure (1..6) as SVG + CSV.
    Figure(FigureArgs),
}

#[derive(Args)]
struct GenerateArgs {
    /// Conic spec as inline JSON or @path to a JSON file.
    #[arg(long, conflicts_with = "family")]
    spec: Option<String>,
    /// Canonical family: two-focus-ellipse | two-focus-hyperbola |
    /// two-focus-parabola | fd | circle-limit | metric-circle.
    #[arg(long)]
    family: Option<String>,
    /// Second focus height b (closed forms like log(2) accepted).
    #[arg(long)]
    b: Option<String>,
    /// Two-focus constant c.
    #[arg(long)]
    c: Option<String>,
    /// Parabola parameter C (> 2).
    #[arg(long)]
    cap: Option<String>,
    /// Directrix radius r.
    #[arg(long)]
    r: Option<String>,
    /// Eccentricity eps.
    #[arg(long)]
    eps: Option<String>,
    /// Metric-circle center "x,y".
    #[arg(long)]
    center: Option<String>,
    /// Metric-circle radius.
    #[arg(long)]
    radius: Option<String>,
    /// Target model: half-plane | poincare | klein.
    #[arg(long, default_value = "half-plane")]
    model: String,
    /// Trace window "xmin,xmax,ymin,ymax".
    #[arg(long)]
    region: Option<String>,
    /// Grid pitch.
    #[arg(long, default_value = "1/512")]
    h: String,
    /// Output path; .svg renders a plot, anything else writes CSV.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    /// circles | ellipses | parabolas | hyperbolas | molnar | all
    #[arg(long)]
    theorem: String,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct MatchArgs {
    /// two-focus | fd
    #[arg(long)]
    from: String,
    #[arg(long)]
    b: Option<String>,
    #[arg(long)]
    c: Option<String>,
    #[arg(long)]
    r: Option<String>,
    #[arg(long)]
    eps: Option<String>,
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long)]
    r: String,
    #[arg(long)]
    eps: String,
}

#[derive(Args)]
struct FigureArgs {
    /// Figure id, 1 through 6.
    #[arg(long)]
    id: u8,
    /// Output directory.
    #[arg(long)]
    out: PathBuf,
    /// Grid pitch.
    #[arg(long, default_value = "1/512")]
    h: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Generate(args) => generate(args),
        Command::Verify(args) => verify(args),
        Command::Match(args) => do_match(args),
        Command::Classify(args) => classify(args),
        Command::Figure(args) => figure(args),
    };
    match code {
        Ok(c) => c,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn num(field: &str, value: &Option<String>) -> Result<f64, String> {
    let text = value.as_ref().ok_or_else(|| format!("missing required flag --{field}"))?;
    expr::parse(text).map_err(|e| format!("--{field}: {e}"))
}

fn model_from(name: &str) -> Result<ModelKind, String> {
    match name {
        "half-plane" => Ok(ModelKind::HalfPlane),
        "poincare" => Ok(ModelKind::PoincareDisk),
        "klein" => Ok(ModelKind::KleinDisk),
        other => Err(format!("unknown model '{other}' (half-plane | poincare | klein)")),
    }
}

fn parse_region(model: ModelKind, text: &Option<String>, h: f64) -> Result<TraceRegion, String> {
    let mut region = match model {
        ModelKind::HalfPlane => TraceRegion::half_plane_default(),
        m => TraceRegion::disk_default(m),
    };
    region.h = h;
    if let Some(t) = text {
        let parts: Vec<f64> = t
            .split(',')
            .map(expr::parse)
            .collect::<Result<_, _>>()
            .map_err(|e| format!("--region: {e}"))?;
        if parts.len() != 4 {
            return Err("--region wants xmin,xmax,ymin,ymax".into());
        }
        region.xmin = parts[0];
        region.xmax = parts[1];
        region.ymin = parts[2];
        region.ymax = parts[3];
        if !(region.xmin < region.xmax && region.ymin < region.ymax) {
            return Err("--region bounds must be increasing".into());
        }
    }
    Ok(region)
}

enum Target {
    Canonical(CanonicalFrame, CanonicalPoly),
    Spec(Box<ConicSpec>),
}

fn generate(args: GenerateArgs) -> Result<ExitCode, String> {
    let model = model_from(&args.model)?;
    let h = expr::parse(&args.h).map_err(|e| format!("--h: {e}"))?;
    if !(h > 1e-5 && h < 1.0) {
        return Err(format!("--h out of range: {h}"));
    }
    let region = parse_region(model, &args.region, h)?;

    let target = if let Some(spec_text) = &args.spec {
        let text = match spec_text.strip_prefix('@') {
            Some(path) => std::fs::read_to_string(path).map_err(|e| format!("--spec {path}: {e}"))?,
            None => spec_text.clone(),
        };
        let spec: ConicSpec =
            serde_json::from_str(&text).map_err(|e| format!("--spec JSON: {e}"))?;
        spec.validate().map_err(|e| format!("invalid spec: {e}"))?;
        Target::Spec(Box::new(spec))
    } else {
        let family = args.family.as_deref().ok_or("provide --spec or --family")?;
        let frame = match family {
            "two-focus-ellipse" => {
                CanonicalFrame::TwoFocusEllipse { b: num("b", &args.b)?, c: num("c", &args.c)? }
            }
            "two-focus-hyperbola" => {
                CanonicalFrame::TwoFocusHyperbola { b: num("b", &args.b)?, c: num("c", &args.c)? }
            }
            "two-focus-parabola" => CanonicalFrame::TwoFocusParabola { cap: num("cap", &args.cap)? },
            "fd" => {
                CanonicalFrame::FocusDirectrix { r: num("r", &args.r)?, eps: num("eps", &args.eps)? }
            }
            "circle-limit" => CanonicalFrame::CircleLimit { r: num("r", &args.r)? },
            "metric-circle" => {
                let center_text = args.center.as_ref().ok_or("missing --center x,y")?;
                let parts: Vec<f64> = center_text
                    .split(',')
                    .map(expr::parse)
                    .collect::<Result<_, _>>()
                    .map_err(|e| format!("--center: {e}"))?;
                if parts.len() != 2 {
                    return Err("--center wants x,y".into());
                }
                let center = ModelPoint::new(model, parts[0], parts[1])
                    .map_err(|e| format!("invalid center: {e}"))?;
                let spec = ConicSpec::MetricCircle { center, r: num("radius", &args.radius)? };
                spec.validate().map_err(|e| format!("invalid spec: {e}"))?;
                return finish_generate(Target::Spec(Box::new(spec)), model, region, &args.out);
            }
            other => return Err(format!("unknown family '{other}'")),
        };
        let poly = frame.poly().map_err(|e| format!("invalid parameters: {e}"))?;
        Target::Canonical(frame, poly)
    };
    finish_generate(target, model, region, &args.out)
}

fn finish_generate(
    target: Target,
    model: ModelKind,
    region: TraceRegion,
    out: &PathBuf,
) -> Result<ExitCode, String> {
    let (curve, max_metric_residual): (SampledCurve, f64) = match &target {
        Target::Canonical(frame, poly) => {
            if model == ModelKind::HalfPlane {
                let curve = trace(&poly.poly, &region);
                let audit = audit_with(&curve, |p| frame.residual_at(p), Some(&poly.mask));
                (curve, audit.max_residual)
            } else {
                // trace the metric residual field directly in the target model
                let f = |x: f64, y: f64| match ModelPoint::new(model, x, y) {
                    Ok(p) => frame.residual_at(&p),
                    Err(_) => f64::NAN,
                };
                let curve = trace_field(&f, &region);
                let audit = audit_with(&curve, |p| frame.residual_at(p), None);
                (curve, audit.max_residual)
            }
        }
        Target::Spec(spec) => {
            let residual = spec.residual_fn().map_err(|e| format!("invalid spec: {e}"))?;
            let f = |x: f64, y: f64| match ModelPoint::new(model, x, y) {
                Ok(p) => residual(&p),
                Err(_) => f64::NAN,
            };
            let curve = trace_field(&f, &region);
            let audit = audit_with(&curve, |p| residual(p), None);
            (curve, audit.max_residual)
        }
    };

    let is_svg = out.extension().is_some_and(|e| e == "svg");
    let content = if is_svg {
        let mut canvas = SvgCanvas::new(region.xmin, region.xmax, region.ymin, region.ymax, 640.0);
        canvas.model_boundary(model);
        canvas.curve(&curve, SvgCanvas::palette(0));
        if let Target::Canonical(frame, _) = &target {
            mark_frame(&mut canvas, frame);
        }
        canvas.render()
    } else {
        curve_to_csv(&curve)
    };
    std::fs::write(out, content).map_err(|e| format!("writing {}: {e}", out.display()))?;

    let summary = json!({
        "out": out.display().to_string(),
        "model": model,
        "polylines": curve.polylines.len(),
        "points": curve.point_count(),
        "max_abs_eval": curve.max_abs_residual(),
        "max_metric_residual": max_metric_residual,
    });
    println!("{summary}");
    Ok(ExitCode::SUCCESS)
}

fn mark_frame(canvas: &mut SvgCanvas, frame: &CanonicalFrame) {
    canvas.dot(0.0, 1.0, "#000000", Some("i"));
    match *frame {
        CanonicalFrame::TwoFocusEllipse { b, .. } | CanonicalFrame::TwoFocusHyperbola { b, .. } => {
            canvas.dot(0.0, b, "#000000", Some("bi"));
        }
        CanonicalFrame::FocusDirectrix { r, .. } | CanonicalFrame::DegenerateFdHyperbola { r } => {
            canvas.circle_outline(0.0, 0.0, r, "#888888", true);
        }
        _ => {}
    }
}

fn verify(args: VerifyArgs) -> Result<ExitCode, String> {
    let suite: Suite = args.theorem.parse()?;
    let report = run_suite(suite, args.seed);
    for case in &report.cases {
        let label = case.inputs.get("case").and_then(|v| v.as_str()).unwrap_or("case");
        eprintln!("[{}] {}", if case.pass { "pass" } else { "FAIL" }, label);
    }
    let text = serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?;
    match &args.out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("writing report: {e}"))?,
        None => println!("{text}"),
    }
    Ok(if report.pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn do_match(args: MatchArgs) -> Result<ExitCode, String> {
    match args.from.as_str() {
        "two-focus" => {
            let b = num("b", &args.b)?;
            let c = num("c", &args.c)?;
            let (r, eps) = match_two_focus_hyperbola_to_fd(b, c).map_err(|e| format!("{e}"))?;
            let fd = focus_directrix_poly(r, eps).map_err(|e| format!("{e}"))?;
            let tf =
                hypconic::conicdefs::two_focus_hyperbola_poly(b, c).map_err(|e| format!("{e}"))?;
            let residual = fd.poly.proportional_distance(&tf.poly);
            println!(
                "{}",
                json!({"from": "two-focus", "b": b, "c": c, "r": r, "eps": eps,
                        "poly_residual": residual})
            );
            Ok(ExitCode::SUCCESS)
        }
        "fd" => {
            let r = num("r", &args.r)?;
            let eps = num("eps", &args.eps)?;
            match match_fd_to_two_focus(r, eps).map_err(|e| format!("{e}"))? {
                FdMatchOutcome::TwoFocusEllipse { b, c, poly_residual } => {
                    println!(
                        "{}",
                        json!({"from": "fd", "r": r, "eps": eps, "kind": "ellipse",
                               "b": b, "c": c, "poly_residual": poly_residual})
                    );
                    Ok(ExitCode::SUCCESS)
                }
                FdMatchOutcome::TwoFocusHyperbola { b, c, poly_residual } => {
                    println!(
                        "{}",
                        json!({"from": "fd", "r": r, "eps": eps, "kind": "hyperbola",
                               "b": b, "c": c, "poly_residual": poly_residual})
                    );
                    Ok(ExitCode::SUCCESS)
                }
                FdMatchOutcome::NoMatch { class, reason } => {
                    println!(
                        "{}",
                        json!({"from": "fd", "r": r, "eps": eps, "class": class,
                               "no_match": reason})
                    );
                    Ok(ExitCode::from(3))
                }
            }
        }
        other => Err(format!("--from must be two-focus or fd, got '{other}'")),
    }
}

fn classify(args: ClassifyArgs) -> Result<ExitCode, String> {
    let r = expr::parse(&args.r).map_err(|e| format!("--r: {e}"))?;
    let eps = expr::parse(&args.eps).map_err(|e| format!("--eps: {e}"))?;
    if !(r > 0.0 && eps > 0.0) {
        return Err(format!("need positive r and eps, got ({r}, {eps})"));
    }
    let class = classify_fd(r, eps);
    println!("{}", json!({"r": r, "eps": eps, "class": class, "label": class.to_string()}));
    Ok(ExitCode::SUCCESS)
}

fn figure(args: FigureArgs) -> Result<ExitCode, String> {
    let h = expr::parse(&args.h).map_err(|e| format!("--h: {e}"))?;
    let files = render_figure(args.id, h).map_err(|e| format!("{e}"))?;
    std::fs::create_dir_all(&args.out)
        .map_err(|e| format!("creating {}: {e}", args.out.display()))?;
    let mut written = Vec::new();
    for (name, content) in files {
        let path = args.out.join(&name);
        let mut f = std::fs::File::create(&path).map_err(|e| format!("writing {name}: {e}"))?;
        f.write_all(content.as_bytes()).map_err(|e| format!("writing {name}: {e}"))?;
        written.push(path.display().to_string());
    }
    println!("{}", json!({"figure": args.id, "files": written}));
    Ok(ExitCode::SUCCESS)
}
