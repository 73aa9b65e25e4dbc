//! Recovering the generating function `f(x) = mx + c` from an arc list.
//!
//! When `v_1` and `v_2` are saturated (`d(v_i) = f(i)`), `m` and `c` solve
//! `m + c = d(v_1)` and `2m + c = d(v_2)`. All vertices up to the prime Jaconian
//! vertex are saturated, so a prime Jaconian index of at least 2 licenses the
//! solve. Complete graphs fit infinitely many functions; constant functions
//! produce disjoint unions of cliques. Every answer is checked by rebuilding
//! the graph and comparing it arc for arc.

use serde::Serialize;

use jaco_core::LinearFunction;
use jaco_core::{construct, JacoGraph};
use jaco_core::{JacoError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum InferenceStatus {
    Unique,
    Ambiguous,
    NotAJacoGraph,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InferenceResult {
    pub status: InferenceStatus,
    pub m: Option<u64>,
    pub c: Option<u64>,
    /// Explicit `(m, c)` members when ambiguous.
    pub candidates: Vec<(u64, u64)>,
    /// Symbolic description of the full candidate family, e.g. `m + c >= 2`.
    pub constraint: Option<String>,
    /// Whether every reported function rebuilds the input exactly.
    pub validation: bool,
    /// Why the input was rejected, when it was.
    pub diagnostic: Option<String>,
}

impl InferenceResult {
    fn rejected(reason: impl Into<String>) -> Self {
        Self {
            status: InferenceStatus::NotAJacoGraph,
            m: None,
            c: None,
            candidates: Vec::new(),
            constraint: None,
            validation: false,
            diagnostic: Some(reason.into()),
        }
    }

    fn unique(m: u64, c: u64) -> Self {
        Self {
            status: InferenceStatus::Unique,
            m: Some(m),
            c: Some(c),
            candidates: vec![(m, c)],
            constraint: None,
            validation: true,
            diagnostic: None,
        }
    }
}

// Per-vertex summary of an arc list whose neighbourhoods are intervals.
struct Shape {
    n: u64,
    in_degree: Vec<u64>,
    // Highest out-neighbour, or the vertex itself when it has none.
    last_head: Vec<u64>,
}

impl Shape {
    fn degree(&self, i: u64) -> u64 {
        let idx = i as usize - 1;
        self.in_degree[idx] + (self.last_head[idx] - i)
    }

    fn arc_count(&self) -> u64 {
        self.in_degree.iter().sum()
    }

    fn matches(&self, g: &JacoGraph) -> bool {
        g.n() == self.n
            && g.in_degrees() == self.in_degree.as_slice()
            && g.reaches()
                .iter()
                .zip(&self.last_head)
                .all(|(&r, &h)| r.min(self.n) == h)
    }
}

fn check_arcs(arcs: &[(u64, u64)], n: u64) -> Result<()> {
    if n == 0 {
        return Err(JacoError::EmptyGraph);
    }
    let mut seen = std::collections::HashSet::with_capacity(arcs.len());
    for &(i, j) in arcs {
        if i == 0 || j == 0 || i > n || j > n {
            return Err(JacoError::MalformedArcs(format!("arc ({i}, {j}) leaves 1..={n}")));
        }
        if i >= j {
            return Err(JacoError::MalformedArcs(format!(
                "arc ({i}, {j}) does not point upward"
            )));
        }
        if !seen.insert((i, j)) {
            return Err(JacoError::MalformedArcs(format!("arc ({i}, {j}) is repeated")));
        }
    }
    Ok(())
}

// Necessary structure: every in-neighbourhood is a suffix {lo..j-1}, every
// out-neighbourhood a prefix {i+1..h}, and the last heads never decrease.
fn shape(arcs: &[(u64, u64)], n: u64) -> std::result::Result<Shape, String> {
    let len = n as usize;
    let mut in_degree = vec![0u64; len];
    let mut lowest_tail = vec![u64::MAX; len];
    let mut out_degree = vec![0u64; len];
    let mut last_head: Vec<u64> = (1..=n).collect();
    for &(i, j) in arcs {
        let (ti, hj) = (i as usize - 1, j as usize - 1);
        in_degree[hj] += 1;
        lowest_tail[hj] = lowest_tail[hj].min(i);
        out_degree[ti] += 1;
        last_head[ti] = last_head[ti].max(j);
    }
    for j in 1..=n {
        let idx = j as usize - 1;
        if in_degree[idx] > 0 && lowest_tail[idx] + in_degree[idx] != j {
            return Err(format!(
                "in-neighbours of v{j} are not a contiguous run ending at v{}",
                j - 1
            ));
        }
        if last_head[idx] - j != out_degree[idx] {
            return Err(format!(
                "out-neighbours of v{j} are not a contiguous run starting at v{}",
                j + 1
            ));
        }
        if idx > 0 && last_head[idx] < last_head[idx - 1] {
            return Err(format!(
                "v{j} reaches v{} but v{} reaches v{}",
                last_head[idx],
                j - 1,
                last_head[idx - 1]
            ));
        }
    }
    Ok(Shape {
        n,
        in_degree,
        last_head,
    })
}

fn rebuilds(shape: &Shape, f: LinearFunction) -> bool {
    construct(f, shape.n).map(|g| shape.matches(&g)).unwrap_or(false)
}

/// Infers `(m, c)` from the arcs of a graph on `n` vertices.
pub fn infer(arcs: &[(u64, u64)], n: u64) -> Result<InferenceResult> {
    check_arcs(arcs, n)?;
    let shape = match shape(arcs, n) {
        Ok(s) => s,
        Err(reason) => return Ok(InferenceResult::rejected(reason)),
    };

    if shape.arc_count() == n * (n - 1) / 2 {
        // K_n: any f with f(1) = m + c ≥ n - 1.
        let candidates: Vec<(u64, u64)> = (0..n).map(|m| (m, n - 1 - m)).collect();
        let validation = candidates
            .iter()
            .all(|&(m, c)| rebuilds(&shape, LinearFunction::relaxed(m, c)));
        return Ok(InferenceResult {
            status: InferenceStatus::Ambiguous,
            m: None,
            c: None,
            candidates,
            constraint: Some(format!("m + c >= {}", n - 1)),
            validation,
            diagnostic: None,
        });
    }

    let degrees: Vec<u64> = (1..=n).map(|i| shape.degree(i)).collect();
    let delta = degrees.iter().copied().max().unwrap_or(0);
    let prime = degrees.iter().position(|&d| d == delta).map_or(1, |p| p as u64 + 1);

    let (f, label) = if prime >= 2 {
        let (d1, d2) = (degrees[0], degrees[1]);
        let Some(m) = d2.checked_sub(d1).filter(|&m| m >= 1) else {
            return Ok(InferenceResult::rejected(format!(
                "d(v1) = {d1} and d(v2) = {d2} give no positive slope"
            )));
        };
        let Some(c) = d1.checked_sub(m) else {
            return Ok(InferenceResult::rejected(format!(
                "d(v1) = {d1} is below the slope {m}"
            )));
        };
        (LinearFunction::relaxed(m, c), format!("{m}x+{c}"))
    } else {
        // Prime Jaconian v_1 without completeness only happens for constant f.
        (LinearFunction::relaxed(0, degrees[0]), format!("{}", degrees[0]))
    };

    if rebuilds(&shape, f) {
        Ok(InferenceResult::unique(f.m(), f.c()))
    } else {
        Ok(InferenceResult::rejected(format!(
            "f(x) = {label} does not rebuild the input"
        )))
    }
}

/// The `k + 1` functions with `m + c = k`, ordered by `m`.
pub fn f_related(k: u64) -> Vec<LinearFunction> {
    (0..=k).map(|m| LinearFunction::relaxed(m, k - m)).collect()
}

/// Furthest heads of two consecutive saturated vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SaturatedPair {
    pub i_prime: u64,
    pub j_prime: u64,
    pub gap: u64,
}

/// For saturated `v_i` and `v_{i+1}`, the furthest heads `i'` and `j'` of their
/// out-arcs and the gap `j' - i'`.
pub fn saturated_pair_check(g: &JacoGraph, i: u64, j: u64) -> Result<SaturatedPair> {
    if j != i + 1 {
        return Err(JacoError::Precondition(format!(
            "expected j = i + 1, got i = {i}, j = {j}"
        )));
    }
    let f = g.function();
    let di = g.degrees(i)?;
    let dj = g.degrees(j)?;
    if di.underlying != f.eval(i) || dj.underlying != f.eval(j) {
        return Err(JacoError::Precondition(format!(
            "v{i} and v{j} must be saturated: d = ({}, {}), f = ({}, {})",
            di.underlying,
            dj.underlying,
            f.eval(i),
            f.eval(j)
        )));
    }
    if di.out_degree == 0 || dj.out_degree == 0 {
        return Err(JacoError::Precondition(format!("v{i} or v{j} has no out-arcs")));
    }
    let i_prime = i + di.out_degree;
    let j_prime = j + dj.out_degree;
    Ok(SaturatedPair {
        i_prime,
        j_prime,
        gap: j_prime - i_prime,
    })
}
