use crate::lattice::Int;

/// Errors raised by the geometric and arithmetic operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("the zero vector has no primitive direction")]
    ZeroVector,
    #[error("segment endpoints coincide")]
    CoincidentPoints,
    #[error("line is degenerate: its two defining points coincide")]
    DegenerateLine,
    #[error("zero angle: both edges point in the same direction")]
    ZeroAngle,
    #[error("straight angle: the edges point in opposite directions")]
    StraightAngle,
    #[error("invalid integer tangent {p}/{q}: need coprime p >= q >= 1")]
    InvalidTangent { p: Int, q: Int },
    #[error("not an LLS sequence of an angle: {0}")]
    InvalidLls(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("not locally convex at vertex {0}")]
    NotLocallyConvex(usize),
    #[error("three consecutive collinear vertices at vertex {0}")]
    CollinearVertices(usize),
    #[error("polygon is locally convex but not convex: its edges turn {0} times around")]
    NotSimple(usize),
    #[error("need at least {needed} vertices, got {got}")]
    TooFewVertices { needed: usize, got: usize },
    #[error("not a vortex broken line: det(OA_{0}, OA_{next}) <= 0", next = .0 + 1)]
    NotVortex(usize),
    #[error("LLS entry at vertex {0} is not an integer")]
    NonIntegerLls(usize),
    #[error("index range {j}..={k} is outside 1..={n}")]
    IndexOutOfRange { j: usize, k: usize, n: usize },
    #[error("malformed angle-curvature sequence: {0}")]
    MalformedSequence(String),
    #[error("broken line endpoints do not lie on the x-axis")]
    EndpointsOffAxis,
    #[error("sequence defines a degenerate angle (its endpoint lies on the x-axis)")]
    DegenerateSequenceAngle,
    #[error("angle-curvature sequence is not realizable by a convex polygon")]
    Infeasible,
    #[error("edge directions do not form a counterclockwise fan: {0}")]
    InvalidFan(String),
    #[error("map is not unimodular: determinant {0}")]
    NotUnimodular(Int),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
