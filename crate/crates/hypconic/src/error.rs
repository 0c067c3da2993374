use crate::hypgeo::ModelKind;
use thiserror::Error;

/// Errors raised by the hyperbolic-geometry substrate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum HypError {
    #[error("model mismatch: expected {expected:?}, got {got:?}")]
    ModelMismatch { expected: ModelKind, got: ModelKind },
    #[error("point ({x}, {y}) is outside the {model:?} domain or within 1e-12 of its boundary")]
    InvalidPoint { model: ModelKind, x: f64, y: f64 },
    #[error("ideal point does not lie on the {model:?} boundary")]
    InvalidIdealPoint { model: ModelKind },
    #[error("invalid geodesic: {0}")]
    InvalidGeodesic(String),
    #[error("circle radius must be positive, got {0}")]
    NonPositiveRadius(f64),
    #[error("metric circles drawn in the Klein model are Euclidean ellipses, not circles")]
    KleinCircleUnsupported,
    #[error("Euclidean circle touches or crosses the model boundary (horocycle/hypercycle regime)")]
    CircleNotInterior,
}

/// Errors raised by the projective/Minkowski layer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ProjError {
    #[error("join/meet arguments coincide up to sign")]
    EqualElements,
    #[error("mirror line is a boundary line (tangent to the absolute); reflection undefined")]
    BoundaryMirror,
    #[error("auxiliary line is a boundary line")]
    AuxBoundaryLine,
    #[error("auxiliary line passes through focus {0}")]
    LineThroughFocus(char),
    #[error("foci are each other's reflections across the auxiliary line")]
    FociAreMirrorImages,
    #[error("foci coincide up to sign")]
    FociCoincide,
    #[error("derived line {0} is a boundary line")]
    DerivedBoundaryLine(&'static str),
    #[error("conic fit needs at least 5 points, got {0}")]
    TooFewPoints(usize),
}

/// Errors raised by the conic-definition layer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConicError {
    #[error(transparent)]
    Geometry(#[from] HypError),
    #[error(transparent)]
    Projective(#[from] ProjError),
    #[error("invalid conic parameters: {0}")]
    InvalidParams(String),
    #[error("no match exists: {0}")]
    NoMatch(String),
}
