//! Conic sections in the hyperbolic plane.
//!
//! The library implements the competing definitions of a "conic" in the
//! hyperbolic plane — metric circles, two-focus loci, focus/directrix loci
//! with the hyperbolic-sine eccentricity, algebraic conics in the Klein
//! chart, the reflection construction with two foci and an auxiliary line,
//! horocycles, and hypercycles — together with the machinery needed to
//! compare them: implicit quartic generation by radical elimination, implicit
//! curve tracing, axis-intercept solving, and cross-definition matching.
//!
//! Modules:
//! - [`hypgeo`]: half-plane / Poincaré / Klein models, distances, geodesics,
//!   reflections, model conversions, metric-vs-Euclidean circles.
//! - [`projmink`]: the projective plane with the form `x^2 + y^2 - z^2`,
//!   polarity, B-orthogonal reflections, the point-by-point reflection
//!   construction of conics, and conic fitting.
//! - [`implicit`]: dense bivariate polynomials, marching-squares tracing,
//!   ideal-boundary root isolation, and residual audits.
//! - [`conicdefs`]: conic specifications, metric residuals, the explicit
//!   canonical-frame polynomials, radical elimination, classification and
//!   matching between definitions.
//! - [`verify`]: the seeded theorem-verification suites behind the CLI.

pub mod conicdefs;
pub mod error;
pub mod figures;
pub mod hypgeo;
pub mod implicit;
pub mod projmink;
pub mod report;
pub mod svg;
pub mod verify;
