use thiserror::Error;

use crate::function::LinearFunction;

pub type Result<T, E = JacoError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JacoError {
    #[error("a Jaco graph needs at least one vertex")]
    EmptyGraph,
    #[error("slope m = 0 is only allowed for relaxed functions")]
    ZeroSlope,
    #[error("f({n}) + {n} overflows the signed 64-bit range for f(x) = {f}")]
    Overflow { f: LinearFunction, n: u64 },
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: u64, n: u64 },
    #[error("cannot shrink a graph from {from} to {to} vertices")]
    Shrink { from: u64, to: u64 },
    #[error("expected f(x) = mx (c = 0), got f(x) = {0}")]
    NonZeroIntercept(LinearFunction),
    #[error("reach decreased at vertex {vertex}: {previous} then {current}")]
    ReachNotMonotone { vertex: u64, previous: u64, current: u64 },
    #[error("Fibonacci index {0} is outside 1..=92")]
    FibonacciIndex(u64),
    #[error("arithmetic overflow: {0}")]
    ArithmeticOverflow(&'static str),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("malformed arc list: {0}")]
    MalformedArcs(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}
