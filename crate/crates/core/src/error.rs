use thiserror::Error;

/// Errors raised by curve construction, quadrature and centroid computations.
///
/// Parameter values are reported as `f64` regardless of the scalar type.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("invalid ellipse semi-axes a={a}, b={b}: need a >= b > 0")]
    InvalidEllipse { a: f64, b: f64 },
    #[error("parameter grid needs at least 8 nodes, got {0}")]
    GridTooSmall(usize),
    #[error("grid offset {0} outside [0, 1)")]
    InvalidOffset(f64),
    #[error("sampled curve is malformed: {0}")]
    MalformedCurve(String),
    #[error("line family is singular at t={t} (characteristic point undefined)")]
    SingularFamily { t: f64 },
    #[error("degenerate line at t={t}: curve point coincides with the pedal point")]
    DegenerateLine { t: f64 },
    #[error("singular parameter t={t}: denominator vanishes")]
    SingularParameter { t: f64 },
    #[error("domain error: {0}")]
    DomainError(String),
    #[error("no closed-form area for family {0}")]
    NoClosedForm(String),
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("polygon has a zero-length side at vertex {0}")]
    ZeroLengthSide(usize),
    #[error("curvature weights sum to zero")]
    ZeroTotalWeight,
    #[error("total curvature vanishes (rotation index zero)")]
    ZeroRotationIndex,
    #[error("vertices are collinear")]
    CollinearVertices,
    #[error("input lists differ in length: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("quadrature did not converge: N gives {coarse}, 2N gives {fine}")]
    NotConverged { coarse: f64, fine: f64 },
    #[error("evaluation failed at t={t}: {source}")]
    Evaluation {
        t: f64,
        #[source]
        source: Box<GeometryError>,
    },
}

pub type Result<T, E = GeometryError> = std::result::Result<T, E>;
