//! Differential checks of the numbered statements about linear Jaco graphs.
//!
//! Each statement is a [`Claim`] in the [`registry`]. A claim is evaluated on
//! a [`Grid`] of generating functions `f(x) = mx + c` and graph sizes, always
//! against the quadratic reference construction, and yields a [`ClaimResult`]
//! with up to `witness_cap` counterexamples.
//!
//! ```
//! use jaco_verify::{check, ClaimStatus, Grid};
//!
//! let grid = Grid { m: 2..=2, c: 1..=1, n: 1..=10, ..Grid::default() };
//! let result = check("lemma-1.1d-printed", &grid).unwrap();
//! assert_eq!(result.status, ClaimStatus::Counterexample);
//! assert_eq!(result.witnesses[0].n, 4);
//! ```

mod claims;
mod context;
mod grid;
mod literal;
mod report;
mod runner;

use thiserror::Error;

pub use claims::{registry, Claim, Domain, Scale};
pub use grid::Grid;
pub use report::{ClaimResult, ClaimStatus, GridSummary, Observed, Witness};
pub use runner::{check, verify_all, verify_selected};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
    #[error("claim `{id}` would take about {cost} steps on this grid, above the bound of {bound}")]
    CostExceeded { id: String, cost: u128, bound: u128 },
}
