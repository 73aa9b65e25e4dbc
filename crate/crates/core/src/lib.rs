//! Finite linear Jaco graphs `J_n(f(x))` for `f(x) = mx + c`.
//!
//! A Jaco graph on vertices `v_1..v_n` has an arc `(v_i, v_j)`, `i < j`, exactly
//! when `f(i) + i - d⁻(v_i) ≥ j`. Out-neighbourhoods are therefore intervals and
//! the whole arc set is determined by two per-vertex arrays: the in-degree and
//! the *reach* `f(i) + i - d⁻(v_i)`. [`JacoGraph`] stores only those arrays, so
//! graphs with tens of millions of vertices fit comfortably in memory.
//!
//! Modules:
//! - [`graph`]: fast linear-time construction, arc and degree queries.
//! - [`oracle`]: the quadratic construction that evaluates the arc rule literally.

pub mod error;
pub mod function;
pub mod graph;
pub mod oracle;

pub use error::{JacoError, Result};
pub use function::LinearFunction;
pub use graph::{construct, Degrees, JacoGraph};
pub use oracle::{construct_naive, naive_trace, NaiveTrace};
