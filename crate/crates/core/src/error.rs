use thiserror::Error;

/// Errors raised by the library. Mathematical failures found during
/// verification are reported in verdict structures instead; these variants
/// cover invalid input and numerical situations that cannot be decided.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (asymmetry {asymmetry:.3e})")]
    NotHermitian { asymmetry: f64 },
    #[error("eigen solver could not certify residual {residual:.3e}")]
    ConvergenceFailure { residual: f64 },
    #[error("zero vector has no projective class")]
    ZeroVector,
    #[error("point is not in the interior of the complex hyperbolic plane")]
    NotInteriorPoint,
    #[error("the two complex geodesics coincide")]
    SameGeodesic,
    #[error("orthogonal complement of the polar does not have signature (1,1)")]
    DegenerateForm,
    #[error("point does not lie on the geodesic (defect {defect:.3e})")]
    NotOnGeodesic { defect: f64 },
    #[error("degenerate triangle: a side adjacent to the angle has zero length")]
    DegenerateTriangle,
    #[error("side lengths violate the triangle inequality (cosine {cosine})")]
    NotATriangle { cosine: f64 },
    #[error("polar vector is not positive")]
    NonPositivePolar,
    #[error("classification is inside the tolerance band: {0}")]
    UnresolvedBorderline(String),
    #[error("element is projectively the identity")]
    IdentityElement,
    #[error("Hermitian form has signature ({plus},{minus},{zero}), expected (2,1,0)")]
    WrongSignature { plus: usize, minus: usize, zero: usize },
    #[error("syntax error at position {pos}: {message}")]
    SyntaxError { pos: usize, message: String },
    #[error("generator '{token}' at position {pos} is not available in this group")]
    MacroUnavailable { pos: usize, token: char },
    #[error("exponent {formula} is not an integer at p = {p}")]
    NonIntegerExponent { p: u32, formula: String },
    #[error("matrix does not preserve the form (defect {defect:.3e})")]
    NotAnIsometry { defect: f64 },
    #[error("element does not preserve the geodesic")]
    DoesNotPreserveGeodesic,
    #[error("vertex {vertex} does not lie on the base geodesic")]
    VertexOffGeodesic { vertex: usize },
    #[error("polygon is not simple: {0}")]
    NonSimplePolygon(String),
    #[error("vertex {vertex} has an undecidable class (normalized norm {margin:.3e})")]
    UnresolvedVertexClass { vertex: usize, margin: f64 },
    #[error("element has no fixed point inside the geodesic")]
    NoInteriorFixedPoint,
    #[error("pairing of side {side} failed: {report}")]
    PairingFailed { side: usize, report: String },
    #[error("vertex cycle starting at vertex {vertex} did not close")]
    CycleClosureFailure { vertex: usize },
    #[error("angle sum {angle_sum} times order {order} is not 2π")]
    AngleSumMismatch { angle_sum: f64, order: u32 },
    #[error("p = {p} is not a catalog parameter for {family}")]
    NonCatalogParameter { family: String, p: u32 },
    #[error("unknown identifier '{0}'")]
    UnknownId(String),
}

pub type Result<T> = std::result::Result<T, Error>;
