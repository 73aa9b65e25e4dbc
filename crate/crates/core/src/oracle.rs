//! Quadratic reference construction.
//!
//! Every pair `i < j` is tested against `(f(i) + i) - d⁻(v_i) ≥ j` using only
//! in-degrees already fixed by lower vertices. Nothing about interval structure
//! or monotone reach is assumed; this is the ground truth the fast path is
//! compared against.

use crate::error::{JacoError, Result};
use crate::function::LinearFunction;
use crate::graph::JacoGraph;

/// Everything the literal construction observes, arc by arc.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaiveTrace {
    pub f: LinearFunction,
    /// `in_degree[j - 1]` is the number of accepted tails of `v_j`.
    pub in_degree: Vec<u64>,
    /// `reach[i - 1] = f(i) + i - d⁻(v_i)`.
    pub reach: Vec<u64>,
    /// Out-degree counted arc by arc inside the finite graph.
    pub out_degree: Vec<u64>,
    /// Lowest and highest tail of an arc into `v_j`, or `None` when `v_j` has no in-arcs.
    pub tails: Vec<Option<(u64, u64)>>,
}

impl NaiveTrace {
    pub fn n(&self) -> u64 {
        self.in_degree.len() as u64
    }

    /// Underlying degree of `v_i` (1-based), counted from the recorded arcs.
    pub fn degree(&self, i: u64) -> u64 {
        let idx = i as usize - 1;
        self.in_degree[idx] + self.out_degree[idx]
    }

    pub fn degrees(&self) -> Vec<u64> {
        (1..=self.n()).map(|i| self.degree(i)).collect()
    }

    /// Whether the arc `(i, j)` exists, by the arc rule itself.
    pub fn has_arc(&self, i: u64, j: u64) -> bool {
        i < j && self.reach[i as usize - 1] >= j
    }

    pub fn edge_count(&self) -> u64 {
        self.in_degree.iter().sum()
    }

    pub fn into_graph(self) -> Result<JacoGraph> {
        JacoGraph::from_parts(self.f, self.in_degree, self.reach)
    }
}

/// Runs the literal construction of `J_n(f(x))` and keeps the full trace.
pub fn naive_trace(f: LinearFunction, n: u64) -> Result<NaiveTrace> {
    f.validate()?;
    if n == 0 {
        return Err(JacoError::EmptyGraph);
    }
    f.check_size(n)?;
    let len = n as usize;
    let mut in_degree = Vec::with_capacity(len);
    let mut reach = Vec::with_capacity(len);
    let mut out_degree = vec![0u64; len];
    let mut tails = Vec::with_capacity(len);
    for j in 1..=n {
        let mut count = 0u64;
        let mut span: Option<(u64, u64)> = None;
        for i in 1..j {
            let idx = i as usize - 1;
            if reach[idx] >= j {
                count += 1;
                out_degree[idx] += 1;
                span = Some(match span {
                    None => (i, i),
                    Some((lo, _)) => (lo, i),
                });
            }
        }
        in_degree.push(count);
        reach.push(f.eval(j) + j - count);
        tails.push(span);
    }
    Ok(NaiveTrace {
        f,
        in_degree,
        reach,
        out_degree,
        tails,
    })
}

/// `J_n(f(x))` by the literal definition; equals [`crate::construct`] exactly.
pub fn construct_naive(f: LinearFunction, n: u64) -> Result<JacoGraph> {
    naive_trace(f, n)?.into_graph()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::construct;

    #[test]
    fn matches_fast_construction_on_illustration_one() {
        let f = LinearFunction::new(2, 1).unwrap();
        let naive = construct_naive(f, 11).unwrap();
        assert_eq!(naive, construct(f, 11).unwrap());
        assert_eq!(naive.in_degrees(), &[0, 1, 2, 3, 3, 4, 4, 5, 5, 6, 6]);
    }

    #[test]
    fn relaxed_constant_three() {
        let t = naive_trace(LinearFunction::relaxed(0, 3), 15).unwrap();
        assert_eq!(t.in_degree, vec![0, 1, 2, 3, 0, 1, 2, 3, 0, 1, 2, 3, 0, 1, 2]);
    }

    #[test]
    fn identity_three_vertices() {
        let t = naive_trace(LinearFunction::identity(), 3).unwrap();
        assert_eq!(t.in_degree, vec![0, 1, 1]);
        assert!(t.has_arc(1, 2) && t.has_arc(2, 3) && !t.has_arc(1, 3));
        // v_3 would point at v_4 and v_5 in a larger graph.
        assert_eq!(t.reach[2], 5);
        assert_eq!(t.out_degree, vec![1, 1, 0]);
        assert_eq!(t.tails, vec![None, Some((1, 1)), Some((2, 2))]);
    }

    #[test]
    fn errors() {
        assert_eq!(
            construct_naive(LinearFunction::identity(), 0),
            Err(JacoError::EmptyGraph)
        );
    }
}
