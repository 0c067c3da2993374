//! Dense bivariate polynomials, implicit-curve tracing, and ideal-boundary
//! analysis.

mod boundary;
mod poly;
mod trace;
pub mod uni;

pub use boundary::ideal_boundary_points;
pub use poly::BivarPoly;
pub use trace::{hausdorff_distance, trace, trace_field, SampledCurve, TraceRegion, TracedPoint};

pub use crate::conicdefs::audit;
