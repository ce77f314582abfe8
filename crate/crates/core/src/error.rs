use thiserror::Error;

/// Errors raised while building or validating grid diagrams.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GridError {
    #[error("p and q must be coprime (got p={p}, q={q})")]
    GcdViolation { p: u64, q: u64 },
    #[error("parameter out of range: {0}")]
    RangeViolation(String),
    #[error("markings do not hit every {axis} exactly once")]
    NotBijection { axis: &'static str },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Errors raised by grid moves.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("no {kind} marking in row {row} at cell-column {col}")]
    InvalidMarking { kind: char, row: usize, col: usize },
    #[error("destabilization pattern absent at site r={row}, c={col}")]
    PatternAbsent { row: usize, col: usize },
    #[error("cannot destabilize a grid of size 1")]
    MinimumSize,
    #[error("commutation is illegal: spans {a:?} and {b:?} interleave")]
    Interleaved { a: (u64, u64), b: (u64, u64) },
    #[error("grid has only one {axis}, nothing to commute")]
    NothingToCommute { axis: &'static str },
}

/// Errors raised by front construction and projection.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrontError {
    #[error("routing has {got} bits, expected {want}")]
    BadRoutingLength { got: usize, want: usize },
    #[error("slope must be negative, got {0}")]
    SlopeOutOfRange(String),
    #[error("tangential crossing: both strands have slope {0}")]
    TangentialCrossing(String),
    #[error("front is not supported in a planar region (no free alpha/beta circle pair)")]
    NotPlanarSupported,
}

/// Errors raised by the invariants module.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("invalid correction-term parameters (p={p}, q={q}, i={i})")]
    BadParams { p: u64, q: u64, i: u64 },
    #[error("framing tuples have mismatched lengths ({0} vs {1})")]
    DimensionMismatch(usize, usize),
    #[error("chosen longitudes must intersect the meridian once: {0}")]
    SingularInput(String),
    #[error("diagram is a {0}-component link, not a knot")]
    NotAKnot(usize),
    #[error("knot has order {order}, not p={p}")]
    OrderNotP { order: u64, p: u64 },
    #[error("component indices must differ")]
    SameComponent,
}
