//! Named invariants: maximum degree `Δ`, the Jaconian set, the prime Jaconian
//! vertex, the Hope subgraph, arc counts and weak components.
//!
//! All degrees are degrees of the underlying undirected graph.

use std::ops::RangeInclusive;

use serde::Serialize;

use jaco_core::LinearFunction;
use jaco_core::{construct, JacoGraph};
use jaco_core::{JacoError, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JaconianReport {
    pub n: u64,
    pub delta: u64,
    pub jaconian_set: Vec<u64>,
    pub prime_jaconian: u64,
    /// `prime_jaconian + 1 ..= n`; empty when the prime Jaconian vertex is `v_n`.
    pub hope_vertices: RangeInclusive<u64>,
    pub hope_is_complete: bool,
    pub edge_count: u64,
}

pub fn analyze(g: &JacoGraph) -> JaconianReport {
    analyze_prefix(g, g.n())
}

/// Report for the prefix `J_k` of `g`, `1 ≤ k ≤ g.n()`.
pub fn analyze_prefix(g: &JacoGraph, k: u64) -> JaconianReport {
    assert!(k >= 1 && k <= g.n(), "prefix {k} outside 1..={}", g.n());
    let degrees: Vec<u64> = (1..=k)
        .map(|i| g.degrees_in_prefix(i, k).expect("i <= k <= n").underlying)
        .collect();
    let delta = degrees.iter().copied().max().unwrap_or(0);
    let jaconian_set: Vec<u64> = (1..=k).filter(|&i| degrees[i as usize - 1] == delta).collect();
    let prime_jaconian = jaconian_set[0];
    let reach = g.reaches();
    // Every v_i above the prime vertex must reach v_k for the Hope subgraph to be complete.
    let hope_is_complete = (prime_jaconian + 1..k).all(|i| reach[i as usize - 1] >= k);
    JaconianReport {
        n: k,
        delta,
        jaconian_set,
        prime_jaconian,
        hope_vertices: prime_jaconian + 1..=k,
        hope_is_complete,
        edge_count: g.in_degrees()[..k as usize].iter().sum(),
    }
}

/// `ε(J_n)`, the number of arcs.
pub fn edge_count(g: &JacoGraph) -> u64 {
    g.in_degrees().iter().sum()
}

/// `Δ` and the prime Jaconian vertex of a prefix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrefixSummary {
    pub n: u64,
    pub delta: u64,
    pub prime_jaconian: u64,
}

/// Summaries of `J_1, ..., J_n` in `O(n)` total.
///
/// In `J_k` a vertex is saturated (degree `f(i)`) when its reach is at most `k`;
/// the saturated vertices form a prefix `v_1..v_{s-1}`. Among them the largest
/// degree sits at `v_{s-1}` (or everywhere, for constant `f`). Among the rest,
/// `d⁻(v_i) + k - i` is non-increasing in `i`, so `v_s` carries their maximum.
pub fn prefix_summaries(g: &JacoGraph) -> Vec<PrefixSummary> {
    let f = g.function();
    let reach = g.reaches();
    let in_degree = g.in_degrees();
    let mut out = Vec::with_capacity(reach.len());
    let mut s = 1u64;
    for k in 1..=g.n() {
        while s <= k && reach[s as usize - 1] <= k {
            s += 1;
        }
        let saturated = (s > 1).then(|| {
            let top = if f.m() == 0 { 1 } else { s - 1 };
            (f.eval(top), top)
        });
        let open = (s <= k).then(|| (in_degree[s as usize - 1] + k - s, s));
        let (delta, prime_jaconian) = match (saturated, open) {
            (Some((ds, vs)), Some((du, vu))) => {
                if ds >= du {
                    (ds, vs)
                } else {
                    (du, vu)
                }
            }
            (Some(x), None) | (None, Some(x)) => x,
            (None, None) => unreachable!("a prefix always has a vertex"),
        };
        out.push(PrefixSummary {
            n: k,
            delta,
            prime_jaconian,
        });
    }
    out
}

/// `Δ(J_1), ..., Δ(J_{n_max})`.
pub fn delta_series(f: LinearFunction, n_max: u64) -> Result<Vec<u64>> {
    if f.m() == 0 {
        return Err(JacoError::ZeroSlope);
    }
    let g = construct(f, n_max)?;
    Ok(prefix_summaries(&g).into_iter().map(|s| s.delta).collect())
}

/// `ε(J_1(mx)), ..., ε(J_{n_max}(mx))` by the recursion on the prime Jaconian vertex:
/// going from `J_n` to `J_{n+1}` adds `n - i` arcs when `v_i` is saturated
/// (`d(v_i) = mi`) and `n - i + 1` otherwise.
pub fn edge_count_recursive(f: LinearFunction, n_max: u64) -> Result<Vec<u64>> {
    f.validate()?;
    if f.c() != 0 {
        return Err(JacoError::NonZeroIntercept(f));
    }
    if f.m() == 0 {
        return Err(JacoError::ZeroSlope);
    }
    let g = construct(f, n_max)?;
    let mut counts = Vec::with_capacity(n_max as usize);
    let mut eps = 0u64;
    counts.push(eps);
    for s in prefix_summaries(&g).into_iter().take(n_max as usize - 1) {
        let i = s.prime_jaconian;
        let degree = g
            .degrees_in_prefix(i, s.n)
            .expect("prime vertex lies in the prefix")
            .underlying;
        eps = if degree == f.m() * i {
            eps + s.n - i
        } else {
            eps + s.n + 1 - i
        };
        counts.push(eps);
    }
    Ok(counts)
}

/// Weakly connected components, as consecutive vertex blocks in ascending order.
///
/// Out-neighbourhoods are intervals `v_{i+1}..v_{min(reach_i, n)}`, so a block
/// ends at `v_k` exactly when no vertex `v_i`, `i ≤ k`, points past `v_k`.
pub fn components(g: &JacoGraph) -> Vec<RangeInclusive<u64>> {
    let n = g.n();
    let mut blocks = Vec::new();
    let mut start = 1u64;
    let mut furthest = 0u64;
    for (idx, &r) in g.reaches().iter().enumerate() {
        let i = idx as u64 + 1;
        furthest = furthest.max(r.min(n));
        if furthest <= i {
            blocks.push(start..=i);
            start = i + 1;
        }
    }
    blocks
}

/// The least `n ≤ n_cap` for which `Δ(J_n) = f(t)` and the Jaconian set is exactly
/// `{v_t}`, with `t = m + c + 1`. Returns `(n, t)`.
pub fn smallest_unique_jaconian(f: LinearFunction, n_cap: u64) -> Result<Option<(u64, u64)>> {
    if f.m() == 0 {
        return Err(JacoError::ZeroSlope);
    }
    if n_cap == 0 {
        return Ok(None);
    }
    let target = f.m() + f.c() + 1;
    let target_delta = f
        .checked_eval(target)
        .ok_or(JacoError::ArithmeticOverflow("f(m + c + 1)"))?;
    let g = construct(f, n_cap)?;
    for s in prefix_summaries(&g) {
        if s.delta == target_delta && s.prime_jaconian == target {
            let report = analyze_prefix(&g, s.n);
            if report.jaconian_set == [target] {
                return Ok(Some((s.n, target)));
            }
        }
    }
    Ok(None)
}
