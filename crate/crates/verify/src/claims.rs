//! The claim registry.
//!
//! Each checker receives the ground-truth [`Context`] for one generating
//! function and an index range, and compares the statement's prediction with
//! what the quadratic construction produced. Formulas are only ever evaluated
//! on the "expected" side; the "actual" side always comes from the graph (or,
//! for statements about a recursion that has no graph meaning, from the
//! recursion evaluated literally).

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use serde::Serialize;

use jaco_core::{naive_trace, JacoGraph, NaiveTrace};
use jaco_infer::{f_related, infer, InferenceResult, InferenceStatus};
use jaco_invariants::analyze_prefix;
use jaco_sequences::{bettina_dplus, edge_count_fib};

use crate::context::{Context, Outcome, NAIVE_LIMIT};
use crate::literal::min_scan;
use crate::report::{Observed, Recorder};

/// Which generating functions a claim is evaluated for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Domain {
    /// `m ≥ 1` from the grid's `m` range.
    Positive,
    /// `m = 0` (relaxed), any `c` from the grid.
    Constant,
    /// Both of the above.
    Any,
}

/// Which of the grid's index ranges a claim walks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scale {
    /// Graph sizes, `grid.n`.
    Graph,
    /// Sequence indices and infinite-graph vertices, `grid.seq_n`.
    Sequence,
}

type Eval = fn(&mut Context, &RangeInclusive<u64>, &mut Recorder) -> Outcome;

#[derive(Debug, Clone, Copy)]
pub struct Claim {
    pub id: &'static str,
    /// Labels of the numbered statements this claim checks.
    pub anchors: &'static [&'static str],
    pub statement: &'static str,
    /// Where the statement is asserted, in words.
    pub applicability: &'static str,
    pub domain: Domain,
    pub scale: Scale,
    /// Suspected to be wrong as stated; only the faithful record matters.
    pub report_only: bool,
    applies: fn(u64, u64) -> bool,
    eval: Eval,
}

impl Claim {
    /// Whether the statement is asserted for `f(x) = mx + c`.
    pub fn applies(&self, m: u64, c: u64) -> bool {
        let domain_ok = match self.domain {
            Domain::Positive => m >= 1,
            Domain::Constant => m == 0,
            Domain::Any => true,
        };
        domain_ok && (self.applies)(m, c)
    }

    pub(crate) fn evaluate(&self, ctx: &mut Context, range: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
        (self.eval)(ctx, range, rec)
    }
}

fn always(_: u64, _: u64) -> bool {
    true
}

fn zero_intercept(_: u64, c: u64) -> bool {
    c == 0
}

fn identity(m: u64, c: u64) -> bool {
    m == 1 && c == 0
}

fn positive_intercept(_: u64, c: u64) -> bool {
    c >= 1
}

macro_rules! claim {
    ($id:literal, [$($anchor:literal),+], $statement:literal, $applicability:literal,
     $domain:ident, $scale:ident, $report_only:literal, $applies:expr, $eval:expr) => {
        Claim {
            id: $id,
            anchors: &[$($anchor),+],
            statement: $statement,
            applicability: $applicability,
            domain: Domain::$domain,
            scale: Scale::$scale,
            report_only: $report_only,
            applies: $applies,
            eval: $eval,
        }
    };
}

/// Every registered claim, sorted by id.
pub fn registry() -> Vec<Claim> {
    let mut claims = vec![
        claim!(
            "lemma-1.1a",
            ["Definition 1.1", "Lemma 1.1(a)"],
            "d+(v_n) + d-(v_n) = f(n) in the infinite graph",
            "m >= 1",
            Positive,
            Graph,
            false,
            always,
            lemma_1_1a
        ),
        claim!(
            "lemma-1.1b",
            ["Lemma 1.1(b)"],
            "d-(v_{n+1}) is d-(v_n) or d-(v_n) + 1",
            "m >= 1",
            Positive,
            Graph,
            false,
            always,
            lemma_1_1b
        ),
        claim!(
            "lemma-1.1c",
            ["Lemma 1.1(c)"],
            "if (v_i, v_k) is an arc and i < j < k then (v_j, v_k) is an arc",
            "m >= 1",
            Positive,
            Graph,
            false,
            always,
            lemma_1_1c
        ),
        claim!(
            "lemma-1.1d-corrected",
            ["Definition 1.2", "Lemma 1.1(d)"],
            "d+(v_n) = ((m-1)n + c) + L(n), n >= 2, with L(n) = min{k < n : mk + c + L(k) >= n}",
            "m >= 1",
            Positive,
            Graph,
            false,
            always,
            lemma_1_1d_corrected
        ),
        claim!(
            "lemma-1.1d-printed",
            ["Definition 1.2", "Lemma 1.1(d)"],
            "d+(v_n) = ((m-1)n + c) + L(n), n >= 2, with L(n) = min{k < n : mk + L(k) >= n}",
            "m >= 1",
            Positive,
            Graph,
            true,
            always,
            lemma_1_1d_printed
        ),
        claim!(
            "cor-1.2-corrected",
            ["Corollary 1.2"],
            "the minimal-tail series (with + c) is well defined, equals n - d-(v_n) and steps by 0 or 1",
            "m >= 1",
            Positive,
            Sequence,
            false,
            always,
            cor_1_2_corrected
        ),
        claim!(
            "cor-1.2-printed",
            ["Corollary 1.2"],
            "the series min{k < n : mk + L(k) >= n} is well defined and steps by 0 or 1",
            "m >= 1",
            Positive,
            Sequence,
            true,
            always,
            cor_1_2_printed
        ),
        claim!(
            "prop-1.3-offset-corrected",
            ["Proposition 1.3"],
            "L(mk + L(k) - t) = k for every 0 <= t < f(k), k <= 200, corrected series",
            "m >= 1",
            Positive,
            Graph,
            true,
            always,
            prop_1_3_offset_corrected
        ),
        claim!(
            "prop-1.3-offset-printed",
            ["Proposition 1.3"],
            "L(mk + L(k) - t) = k for every 0 <= t < f(k), k <= 200, series without + c",
            "m >= 1",
            Positive,
            Graph,
            true,
            always,
            prop_1_3_offset_printed
        ),
        claim!(
            "prop-1.3-linear-g",
            ["Proposition 1.3"],
            "L(mk + L(k) - g(k)) = k for linear g with slope >= 1 and g(k) < f(k), k <= 200, corrected series",
            "m >= 1",
            Positive,
            Graph,
            true,
            always,
            prop_1_3_linear_g
        ),
        claim!(
            "property-1",
            ["Property 1"],
            "if the prime Jaconian vertex v_i is saturated then v_1..v_i all are",
            "m >= 1",
            Positive,
            Graph,
            false,
            always,
            property_1
        ),
        claim!(
            "property-2",
            ["Property 2", "Definition 2.2"],
            "Delta(J_k) <= Delta(J_n) for k <= n",
            "m >= 1",
            Positive,
            Graph,
            false,
            always,
            property_2
        ),
        claim!(
            "property-3",
            ["Property 3"],
            "the minimum degree of J_n is at most f(1)",
            "m >= 1",
            Positive,
            Graph,
            false,
            always,
            property_3
        ),
        claim!(
            "property-4",
            ["Property 4", "Definition 2.1"],
            "d-(v_k) in J_n equals d(v_k) in the separately built J_k",
            "m >= 1",
            Positive,
            Graph,
            false,
            always,
            property_4
        ),
        claim!(
            "lemma-2.1",
            ["Lemma 2.1"],
            "for i <= f(1) + 1, Delta(J_i) = i - 1 and every vertex is Jaconian",
            "m >= 1, n <= f(1) + 1",
            Positive,
            Graph,
            false,
            always,
            lemma_2_1
        ),
        claim!(
            "prop-2.2",
            ["Proposition 2.2"],
            "for 1 <= i <= f(1) the prime Jaconian vertex of J_{f(i)} is v_i",
            "m >= 1, n = f(i)",
            Positive,
            Graph,
            true,
            always,
            prop_2_2_prime
        ),
        claim!(
            "prop-2.2-set",
            ["Proposition 2.2"],
            "for 1 <= i <= f(1) the Jaconian set of J_{f(i)} is {v_i, ..., v_{f(1)+1}}",
            "m >= 1, n = f(i)",
            Positive,
            Graph,
            true,
            always,
            prop_2_2_set
        ),
        claim!(
            "lemma-2.3",
            ["Definition 2.3", "Lemma 2.3"],
            "if the lowest tail v_i of an arc into v_n is saturated, v_i is the prime Jaconian vertex of J_n",
            "m >= 1",
            Positive,
            Graph,
            false,
            always,
            lemma_2_3
        ),
        claim!(
            "lemma-2.4",
            ["Lemma 2.4"],
            "|d(v_i) - d(v_{i-1})| <= m in J_n",
            "m >= 1",
            Positive,
            Graph,
            false,
            always,
            lemma_2_4
        ),
        claim!(
            "prop-2.5",
            ["Proposition 2.5"],
            "for i >= f(1) + 1 the prime Jaconian vertex of J_{f(i)} is some v_j, j <= i",
            "m >= 1, n = f(i)",
            Positive,
            Graph,
            false,
            always,
            prop_2_5
        ),
        claim!(
            "delta-jump-m",
            ["Proposition 2.5 (closing note)"],
            "Delta(J_{n+1}) - Delta(J_n) is 0 or m",
            "m >= 1",
            Positive,
            Graph,
            true,
            always,
            delta_jump_m
        ),
        claim!(
            "thm-2.6",
            ["Theorem 2.6"],
            "the smallest J_k with Delta = f(m+c+1) and Jaconian set {v_{m+c+1}} has k = f(m+c+1) + 1",
            "m >= 1, n = f(m+c+1) + 1",
            Positive,
            Graph,
            true,
            always,
            thm_2_6
        ),
        claim!(
            "hope-complete",
            ["Definition 2.4"],
            "the vertices above the prime Jaconian vertex induce a complete graph",
            "m >= 1",
            Positive,
            Graph,
            false,
            always,
            hope_complete
        ),
        claim!(
            "prop-3.1",
            ["Proposition 3.1"],
            "J_l(mx) has l(l-1)/2 arcs for l <= m + 1",
            "c = 0, n <= m + 1",
            Positive,
            Graph,
            false,
            zero_intercept,
            prop_3_1
        ),
        claim!(
            "thm-3.2-prime-index",
            ["Theorem 3.2"],
            "eps(J_n(mx)) = (n-k)(n-k-1)/2 + sum_{i<=k} d+(v_i) with k the prime Jaconian index",
            "c = 0",
            Positive,
            Graph,
            true,
            zero_intercept,
            thm_3_2_prime_index
        ),
        claim!(
            "thm-3.2-delta-index",
            ["Theorem 3.2"],
            "eps(J_n(mx)) = (n-k)(n-k-1)/2 + sum_{i<=k} d+(v_i) with k = Delta(J_n)",
            "c = 0",
            Positive,
            Graph,
            true,
            zero_intercept,
            thm_3_2_delta_index
        ),
        claim!(
            "cor-3.3",
            ["Corollary 3.3"],
            "eps(J_{n+1}(mx)) = eps(J_n(mx)) - i + n, plus one when the prime Jaconian v_i has d(v_i) < mi",
            "c = 0",
            Positive,
            Graph,
            false,
            zero_intercept,
            cor_3_3
        ),
        claim!(
            "lemma-3.4",
            ["Lemma 3.4"],
            "in the infinite graph of f(x) = x, d+(v_n) = a_n with a_n = min{k < n : k + a_k >= n}",
            "m = 1, c = 0",
            Positive,
            Sequence,
            false,
            identity,
            lemma_3_4
        ),
        claim!(
            "cor-3.5",
            ["Corollary 3.5"],
            "a_{n+1} is a_n or a_n + 1, and likewise for d+(v_n) in the infinite graph of x",
            "m = 1, c = 0",
            Positive,
            Sequence,
            false,
            identity,
            cor_3_5
        ),
        claim!(
            "lemma-3.6",
            ["Lemma 3.6"],
            "d+(v_{i + d+(v_i)}) = i = d+(v_{i + d+(v_{i-1})}) in the infinite graph of x",
            "m = 1, c = 0",
            Positive,
            Sequence,
            false,
            identity,
            lemma_3_6
        ),
        claim!(
            "thm-3.7",
            ["Theorem 3.7"],
            "d+(v_n) in the infinite graph of x is the Zeckendorf sum of n with indices shifted down by one",
            "m = 1, c = 0",
            Positive,
            Sequence,
            false,
            identity,
            thm_3_7
        ),
        claim!(
            "edge-count-fib",
            ["Theorem 3.7 (arc count)", "Illustration 2"],
            "eps(J_n(x)) = n(n+1)/2 - sum of the Zeckendorf out-degrees of v_1..v_n",
            "m = 1, c = 0",
            Positive,
            Graph,
            false,
            identity,
            edge_count_fib_claim
        ),
        claim!(
            "thm-3.8-main",
            ["Theorem 3.8"],
            "eps(J_n) = eps(K_{f(1)+1}) + eps(K_{f(f(1)+1)-f(1)}) + m f(1)(f(1)-1)/2 at n = f(f(1)+1) + 1",
            "m >= 1, n = f(f(1)+1) + 1",
            Positive,
            Graph,
            true,
            always,
            thm_3_8_main
        ),
        claim!(
            "thm-3.8-alt",
            ["Theorem 3.8"],
            "eps(J_n) = eps(K_{m+c+1}) + eps(K_{m^2+m(c-1)-c+2}) + m(m+c)(m+c-1)/2 at n = m^2 + m(c+1) + 2",
            "m >= 1, n = m^2 + m(c+1) + 2",
            Positive,
            Graph,
            true,
            always,
            thm_3_8_alt
        ),
        claim!(
            "prop-3.9",
            ["Proposition 3.9"],
            "if v_i and v_{i+1} are saturated, their furthest heads i', j' satisfy j' - i' in {m, m+1}",
            "m >= 1",
            Positive,
            Graph,
            false,
            always,
            prop_3_9
        ),
        claim!(
            "sec-3.1-smallest-inference",
            ["Section 3.1 (inference)"],
            "in J_{f(2)+1}, v_1 and v_2 are saturated and mi + c = d(v_i) recovers f; inference agrees",
            "m >= 1, n = f(2) + 1",
            Positive,
            Graph,
            false,
            always,
            sec_3_1_smallest_inference
        ),
        claim!(
            "sec-3.1-two-block-inference",
            ["Section 3.1 (inference)"],
            "a union of at least two complete blocks determines f(x) = k - 1, k the largest block size",
            "m = 0, c >= 1, n >= c + 2",
            Constant,
            Graph,
            false,
            positive_intercept,
            sec_3_1_two_block_inference
        ),
        claim!(
            "sec-3.1-complete-any-f",
            ["Section 3.1 (complete graphs)"],
            "J_n is complete whenever n <= m + c + 1",
            "any m, c; n <= m + c + 1",
            Any,
            Graph,
            false,
            always,
            sec_3_1_complete_any_f
        ),
        claim!(
            "sec-3.1-f-related",
            ["Section 3.1 (f-related graphs)"],
            "all m' + c' = m + c functions generate the same complete J_n for n <= m + c + 1",
            "any m, c; n <= m + c + 1",
            Any,
            Graph,
            false,
            always,
            sec_3_1_f_related
        ),
        claim!(
            "sec-3.1-m0-null",
            ["Section 3.1 (m = 0 classes)"],
            "J_n(0) is edgeless",
            "m = 0, c = 0",
            Constant,
            Graph,
            false,
            zero_intercept,
            sec_3_1_m0_null
        ),
        claim!(
            "sec-3.1-m0-blocks",
            ["Section 3.1 (m = 0 classes)"],
            "J_n(k) is floor(n/(k+1)) copies of K_{k+1} plus K_{n mod (k+1)}, as consecutive blocks",
            "m = 0",
            Constant,
            Graph,
            false,
            always,
            sec_3_1_m0_blocks
        ),
        claim!(
            "illus-1",
            ["Illustration 1", "Definition 2.2"],
            "J_11(2x+1) has Delta 9, Jaconian set {v_4, v_5, v_6} and prime Jaconian vertex v_4",
            "m = 2, c = 1, n = 11",
            Positive,
            Graph,
            false,
            |m, c| (m, c) == (2, 1),
            illus_1
        ),
        claim!(
            "illus-2",
            ["Illustration 2"],
            "J_15(x) has 44 arcs and sum_{i=2}^{15} d+(v_i) = 75",
            "m = 1, c = 0, n = 15",
            Positive,
            Graph,
            false,
            identity,
            illus_2
        ),
        claim!(
            "illus-3",
            ["Illustration 3"],
            "J_15(3) = K_4 + K_4 + K_4 + K_3",
            "m = 0, c = 3, n = 15",
            Constant,
            Graph,
            false,
            |_, c| c == 3,
            illus_3
        ),
    ];
    claims.sort_by_key(|c| c.id);
    claims
}

// ---------------------------------------------------------------------------
// helpers

fn bounds(range: &RangeInclusive<u64>, floor: u64) -> Option<(u64, u64)> {
    let lo = (*range.start()).max(floor);
    let hi = *range.end();
    (lo <= hi).then_some((lo, hi))
}

fn choose2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

fn degree(g: &JacoGraph, i: u64, k: u64) -> u64 {
    g.degrees_in_prefix(i, k).expect("vertex inside the prefix").underlying
}

/// Out-degree of `v_i` in the infinite graph: `reach - i`.
fn dplus_infinite(g: &JacoGraph, i: u64) -> u64 {
    g.reaches()[i as usize - 1] - i
}

/// Out-degree of `v_i` inside `J_n`, by the arc rule.
fn dplus_within(g: &JacoGraph, i: u64, n: u64) -> u64 {
    g.reaches()[i as usize - 1].min(n) - i
}

fn edge_count_prefix(g: &JacoGraph, n: u64) -> u64 {
    g.in_degrees()[..n as usize].iter().sum()
}

fn arcs_of_prefix(g: &JacoGraph, n: u64) -> Vec<(u64, u64)> {
    g.arcs().filter(|&(_, j)| j <= n).collect()
}

fn describe_set(vs: &[u64]) -> String {
    Observed::Vertices(vs.to_vec()).to_string()
}

/// Weak components of every prefix `J_n`, `n ∈ lo..=hi`, from the recorded arcs,
/// with a flag telling whether each component is a complete block of
/// consecutive vertices.
fn prefix_blocks(t: &NaiveTrace, lo: u64, hi: u64, mut visit: impl FnMut(u64, Vec<u64>, bool)) {
    let mut parent: Vec<usize> = (0..=hi as usize).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    let mut arcs = 0u64;
    for n in 1..=hi {
        for i in 1..n {
            if t.has_arc(i, n) {
                arcs += 1;
                let (a, b) = (find(&mut parent, i as usize), find(&mut parent, n as usize));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        if n < lo {
            continue;
        }
        // root -> (first vertex, last vertex, size)
        let mut blocks: BTreeMap<usize, (u64, u64, u64)> = BTreeMap::new();
        for v in 1..=n {
            let r = find(&mut parent, v as usize);
            let e = blocks.entry(r).or_insert((v, v, 0));
            e.1 = v;
            e.2 += 1;
        }
        let mut ordered: Vec<(u64, u64, u64)> = blocks.into_values().collect();
        ordered.sort_unstable();
        let consecutive = ordered.iter().all(|&(a, b, s)| b - a + 1 == s);
        let sizes: Vec<u64> = ordered.iter().map(|b| b.2).collect();
        let complete = sizes.iter().map(|&s| choose2(s)).sum::<u64>() == arcs;
        visit(n, sizes, consecutive && complete);
    }
}

// ---------------------------------------------------------------------------
// first section: the infinite graph and the minimal-tail series

fn lemma_1_1a(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
    let Some((lo, hi)) = bounds(r, 1) else {
        return Ok(());
    };
    // Large enough that most out-arcs of v_lo..v_hi are inside the graph.
    let size = ctx.f_at(hi)?.saturating_add(hi).min(NAIVE_LIMIT).max(hi);
    let f = ctx.f;
    let t = ctx.trace(size)?;
    for n in lo..=hi {
        let idx = n as usize - 1;
        if t.reach[idx] > t.n() {
            continue;
        }
        rec.expect_eq(n, f.eval(n), t.in_degree[idx] + t.out_degree[idx]);
    }
    Ok(())
}

fn lemma_1_1b(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
    let Some((lo, hi)) = bounds(r, 1) else {
        return Ok(());
    };
    let t = ctx.trace(hi + 1)?;
    for n in lo..=hi {
        let (d0, d1) = (t.in_degree[n as usize - 1], t.in_degree[n as usize]);
        rec.check(n, d1 == d0 || d1 == d0 + 1, format!("{d0} or {}", d0 + 1), d1, || None);
    }
    Ok(())
}

fn lemma_1_1c(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
    let Some((lo, hi)) = bounds(r, 1) else {
        return Ok(());
    };
    let t = ctx.trace(hi)?;
    for k in lo..=hi {
        let idx = k as usize - 1;
        let Some((first, last)) = t.tails[idx] else {
            rec.check(k, true, Observed::Missing, Observed::Missing, || None);
            continue;
        };
        let count = t.in_degree[idx];
        let ok = last == k - 1 && last - first + 1 == count;
        rec.check(
            k,
            ok,
            format!("tails v{first}..v{}", k - 1),
            format!("{count} tails between v{first} and v{last}"),
            || None,
        );
    }
    Ok(())
}

fn lemma_1_1d(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder, offset: u64) -> Outcome {
    let Some((lo, hi)) = bounds(r, 2) else {
        return Ok(());
    };
    let (m, c) = (ctx.m(), ctx.c());
    let ell = min_scan(m, offset, hi);
    let g = ctx.graph(hi)?;
    for n in lo..=hi {
        let actual = dplus_infinite(g, n);
        match ell[n as usize] {
            Some(l) => rec.expect_eq_with(n, (m - 1) * n + c + l, actual, || format!("L({n}) = {l}")),
            None => rec.check(n, false, Observed::Missing, actual, || {
                Some(format!("L({n}) undefined"))
            }),
        }
    }
    Ok(())
}

fn lemma_1_1d_corrected(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
    let c = ctx.c();
    lemma_1_1d(ctx, r, rec, c)
}

fn lemma_1_1d_printed(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
    lemma_1_1d(ctx, r, rec, 0)
}

fn step_ok(a: Option<u64>, b: Option<u64>) -> bool {
    matches!((a, b), (Some(a), Some(b)) if b == a || b == a + 1)
}

fn cor_1_2_corrected(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
    let Some((lo, hi)) = bounds(r, 1) else {
        return Ok(());
    };
    let ell = min_scan(ctx.m(), ctx.c(), hi + 1);
    let g = ctx.graph(hi + 1)?;
    for n in lo..=hi {
        // Minimal tail of v_n in the graph: the in-neighbours are v_{n - d⁻}..v_{n-1}.
        let graph_value = n - g.in_degrees()[n as usize - 1];
        rec.expect_eq_with(n, ell[n as usize], Some(graph_value), || {
            "series vs minimal tail".into()
        });
        let (a, b) = (ell[n as usize], ell[n as usize + 1]);
        rec.check(n, step_ok(a, b), "step 0 or 1", format!("{a:?} -> {b:?}"), || {
            Some("step".into())
        });
    }
    Ok(())
}

fn cor_1_2_printed(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
    let Some((lo, hi)) = bounds(r, 1) else {
        return Ok(());
    };
    let ell = min_scan(ctx.m(), 0, hi + 1);
    for n in lo..=hi {
        let (a, b) = (ell[n as usize], ell[n as usize + 1]);
        rec.check(n, step_ok(a, b), "step 0 or 1", format!("{a:?} -> {b:?}"), || None);
    }
    Ok(())
}

enum Offsets {
    /// `g(k) = t` for every `0 ≤ t < f(k)`.
    Constant,
    /// `g(k) = m₁k + c₁` with `m₁ ≥ 1`, i.e. every `k ≤ t < f(k)`.
    Linear,
}

fn prop_1_3(
    ctx: &mut Context,
    r: &RangeInclusive<u64>,
    rec: &mut Recorder,
    corrected: bool,
    offsets: Offsets,
) -> Outcome {
    const K_MAX: u64 = 200;
    let Some((lo, hi)) = bounds(r, 1) else {
        return Ok(());
    };
    let hi = hi.min(K_MAX);
    if lo > hi {
        return Ok(());
    }
    let m = ctx.m();
    // L(k) ≤ k, so every index the statement touches is at most (m + 1)·hi.
    let size = (m + 1) * hi + 1;
    let ell: Vec<Option<u64>> = if corrected {
        let g = ctx.graph(size)?;
        std::iter::once(Some(0))
            .chain(g.in_degrees().iter().enumerate().map(|(i, &d)| Some(i as u64 + 1 - d)))
            .collect()
    } else {
        min_scan(m, 0, size)
    };
    for k in lo..=hi {
        let Some(lk) = ell[k as usize] else {
            rec.check(k, false, k, Observed::Missing, || Some(format!("L({k}) undefined")));
            continue;
        };
        let fk = ctx.f_at(k)?;
        let first = match offsets {
            Offsets::Constant => 0,
            Offsets::Linear => k,
        };
        for t in first..fk {
            let Some(target) = (m * k + lk).checked_sub(t).filter(|&x| x >= 1) else {
                continue;
            };
            let actual = ell.get(target as usize).copied().flatten();
            rec.check(k, actual == Some(k), k, actual, || {
                Some(format!("k = {k}, g(k) = {t}, index {target}"))
            });
        }
    }
    Ok(())
}

fn prop_1_3_offset_corrected(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
    prop_1_3(ctx, r, rec, true, Offsets::Constant)
}

fn prop_1_3_offset_printed(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
    prop_1_3(ctx, r, rec, false, Offsets::Constant)
}

fn prop_1_3_linear_g(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
    prop_1_3(ctx, r, rec, true, Offsets::Linear)
}

// ---------------------------------------------------------------------------
// finite graphs: degrees and the Jaconian set

fn property_1(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
    let Some((lo, hi)) = bounds(r, 1) else {
        return Ok(());
    };
    let f = ctx.f;
    let g = ctx.graph(hi)?;
    for n in lo..=hi {
        let p = analyze_prefix(g, n).prime_jaconian;
        if degree(g, p, n) != f.eval(p) {
            continue;
        }
        let unsaturated = (1..=p).find(|&q| degree(g, q, n) != f.eval(q));
        rec.check(
            n,
            unsaturated.is_none(),
            format!("v1..v{p} saturated"),
            unsaturated.map(|q| format!("v{q} unsaturated")),
            || None,
        );
    }
    Ok(())
}

fn property_2(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
    let Some((lo, hi)) = bounds(r, 2) else {
        return Ok(());
    };
    let g = ctx.graph(hi)?;
    let mut previous = analyze_prefix(g, lo - 1).delta;
    for n in lo..=hi {
        let delta = analyze_prefix(g, n).delta;
        rec.check(n, previous <= delta, format!("at least {previous}"), delta, || None);
        previous = delta;
    }
    Ok(())
}

fn property_3(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
    let Some((lo, hi)) = bounds(r, 1) else {
        return Ok(());
    };
    let f1 = ctx.f_at(1)?;
    let g = ctx.graph(hi)?;
    for n in lo..=hi {
        let min = (1..=n).map(|i| degree(g, i, n)).min().unwrap_or(0);
        rec.check(n, min <= f1, format!("at most {f1}"), min, || None);
    }
    Ok(())
}

fn property_4(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
    let Some((lo, hi)) = bounds(r, 1) else {
        return Ok(());
    };
    let f = ctx.f;
    let t = ctx.trace(hi)?;
    for k in lo..=hi {
        let alone = naive_trace(f, k).map_err(|e| e.to_string())?;
        rec.expect_eq(k, t.in_degree[k as usize - 1], alone.degree(k));
    }
    Ok(())
}

fn lemma_2_1(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
    let Some((lo, hi)) = bounds(r, 1) else {
        return Ok(());
    };
    let hi = hi.min(ctx.f_at(1)? + 1);
    if lo > hi {
        return Ok(());
    }
    let g = ctx.graph(hi)?;
    for n in lo..=hi {
        let rep = analyze_prefix(g, n);
        let all: Vec<u64> = (1..=n).collect();
        rec.check(
            n,
            rep.delta == n - 1 && rep.jaconian_set == all,
            format!("Delta {} on {}", n - 1, describe_set(&all)),
            format!("Delta {} on {}", rep.delta, describe_set(&rep.jaconian_set)),
            || None,
        );
    }
    Ok(())
}

/// Sizes `f(i)` for `1 ≤ i ≤ f(1)` that fall inside the range.
fn prop_2_2_points(ctx: &Context, lo: u64, hi: u64) -> Outcome<Vec<(u64, u64)>> {
    let f1 = ctx.f_at(1)?;
    let mut points = Vec::new();
    for i in 1..=f1 {
        let size = ctx.f_at(i)?;
        if size > hi {
            break;
        }
        if size >= lo {
            points.push((i, size));
        }
    }
    Ok(points)
}

fn prop_2_2_prime(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
    let Some((lo, hi)) = bounds(r, 1) else {
        return Ok(());
    };
    let points = prop_2_2_points(ctx, lo, hi)?;
    let g = ctx.graph(hi)?;
    for (i, size) in points {
        let rep = analyze_prefix(g, size);
        rec.expect_eq_with(size, i, rep.prime_jaconian, || format!("i = {i}"));
    }
    Ok(())
}

fn prop_2_2_set(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
    let Some((lo, hi)) = bounds(r, 1) else {
        return Ok(());
    };
    let f1 = ctx.f_at(1)?;
    let points = prop_2_2_points(ctx, lo, hi)?;
    let g = ctx.graph(hi)?;
    for (i, size) in points {
        let rep = analyze_prefix(g, size);
        let expected: Vec<u64> = (i..=f1 + 1).collect();
        rec.expect_eq_with(size, expected, rep.jaconian_set, || format!("i = {i}"));
    }
    Ok(())
}

fn lemma_2_3(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
    let Some((lo, hi)) = bounds(r, 2) else {
        return Ok(());
    };
    let f = ctx.f;
    let tails = ctx.trace(hi)?.tails.clone();
    let g = ctx.graph(hi)?;
    for n in lo..=hi {
        let Some((i, _)) = tails[n as usize - 1] else {
            continue;
        };
        if degree(g, i, n) != f.eval(i) {
            continue;
        }
        rec.expect_eq_with(n, i, analyze_prefix(g, n).prime_jaconian, || {
            format!("lowest tail v{i} is saturated")
        });
    }
    Ok(())
}

fn lemma_2_4(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
    let Some((lo, hi)) = bounds(r, 2) else {
        return Ok(());
    };
    let m = ctx.m();
    let g = ctx.graph(hi)?;
    for n in lo..=hi {
        let jump = (2..=n)
            .map(|i| (i, degree(g, i, n).abs_diff(degree(g, i - 1, n))))
            .find(|&(_, d)| d > m);
        rec.check(n, jump.is_none(), format!("at most {m}"), jump.map(|(_, d)| d), || {
            jump.map(|(i, _)| format!("between v{} and v{i}", i - 1))
        });
    }
    Ok(())
}

fn prop_2_5(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
    let Some((lo, hi)) = bounds(r, 1) else {
        return Ok(());
    };
    let mut points = Vec::new();
    let mut i = ctx.f_at(1)? + 1;
    loop {
        let size = ctx.f_at(i)?;
        if size > hi {
            break;
        }
        if size >= lo {
            points.push((i, size));
        }
        i += 1;
    }
    let g = ctx.graph(hi)?;
    for (i, size) in points {
        let p = analyze_prefix(g, size).prime_jaconian;
        rec.check(size, p <= i, format!("v_j with j <= {i}"), p, || {
            Some(format!("i = {i}"))
        });
    }
    Ok(())
}

fn delta_jump_m(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
    let Some((lo, hi)) = bounds(r, 2) else {
        return Ok(());
    };
    let m = ctx.m();
    let g = ctx.graph(hi)?;
    let mut previous = analyze_prefix(g, lo - 1).delta;
    for n in lo..=hi {
        let delta = analyze_prefix(g, n).delta;
        let step = delta as i128 - previous as i128;
        rec.check(
            n,
            step == 0 || step == m as i128,
            format!("0 or {m}"),
            format!("{step}"),
            || Some(format!("Delta(J_{}) = {previous}", n - 1)),
        );
        previous = delta;
    }
    Ok(())
}

fn thm_2_6(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
    let Some((lo, hi)) = bounds(r, 1) else {
        return Ok(());
    };
    let t = ctx.m() + ctx.c() + 1;
    let target = ctx.f_at(t)?;
    let predicted = target + 1;
    if !(lo..=hi).contains(&predicted) {
        return Ok(());
    }
    let cap = 4 * predicted;
    let g = ctx.graph(cap)?;
    let found = (1..=cap).find(|&n| {
        let rep = analyze_prefix(g, n);
        rep.delta == target && rep.jaconian_set == [t]
    });
    rec.check(predicted, found == Some(predicted), predicted, found, || {
        Some(format!(
            "Delta = {target} with Jaconian set {{v{t}}}, scanned n <= {cap}"
        ))
    });
    Ok(())
}

fn hope_complete(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
    let Some((lo, hi)) = bounds(r, 1) else {
        return Ok(());
    };
    let g = ctx.graph(hi)?;
    for n in lo..=hi {
        let p = analyze_prefix(g, n).prime_jaconian;
        // The arc rule gives (v_i, v_j) iff reach_i ≥ j, so v_i is joined to all of
        // v_{i+1}..v_n exactly when its reach is at least n.
        let short = (p + 1..n).find(|&i| g.reaches()[i as usize - 1] < n);
        rec.check(
            n,
            short.is_none(),
            format!("complete on v{}..v{n}", p + 1),
            short.map(|i| format!("no arc (v{i}, v{})", g.reaches()[i as usize - 1] + 1)),
            || None,
        );
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// arc counts

fn prop_3_1(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
    let Some((lo, hi)) = bounds(r, 1) else {
        return Ok(());
    };
    let hi = hi.min(ctx.m() + 1);
    if lo > hi {
        return Ok(());
    }
    let t = ctx.trace(hi)?;
    for l in lo..=hi {
        rec.expect_eq(l, choose2(l), t.in_degree[..l as usize].iter().sum());
    }
    Ok(())
}

fn thm_3_2(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder, by_delta: bool) -> Outcome {
    let Some((lo, hi)) = bounds(r, 1) else {
        return Ok(());
    };
    let g = ctx.graph(hi)?;
    for n in lo..=hi {
        let rep = analyze_prefix(g, n);
        let k = if by_delta { rep.delta } else { rep.prime_jaconian };
        let k = k.min(n);
        let hope = choose2(n - k);
        let out: u64 = (1..=k).map(|i| dplus_within(g, i, n)).sum();
        rec.expect_eq_with(n, hope + out, edge_count_prefix(g, n), || format!("k = {k}"));
    }
    Ok(())
}

fn thm_3_2_prime_index(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
    thm_3_2(ctx, r, rec, false)
}

fn thm_3_2_delta_index(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
    thm_3_2(ctx, r, rec, true)
}

fn cor_3_3(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
    let Some((lo, hi)) = bounds(r, 2) else {
        return Ok(());
    };
    let m = ctx.m();
    let g = ctx.graph(hi)?;
    for n in lo..=hi {
        let base = n - 1;
        let i = analyze_prefix(g, base).prime_jaconian;
        let bonus = u64::from(degree(g, i, base) != m * i);
        let expected = edge_count_prefix(g, base) + base - i + bonus;
        rec.expect_eq_with(n, expected, edge_count_prefix(g, n), || {
            format!("prime Jaconian v{i} of J_{base}")
        });
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// f(x) = x

fn lemma_3_4(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
    let Some((lo, hi)) = bounds(r, 2) else {
        return Ok(());
    };
    let a = min_scan(1, 0, hi);
    let g = ctx.graph(hi)?;
    for n in lo..=hi {
        rec.expect_eq(n, a[n as usize], Some(dplus_infinite(g, n)));
    }
    Ok(())
}

fn cor_3_5(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
    let Some((lo, hi)) = bounds(r, 1) else {
        return Ok(());
    };
    let a = min_scan(1, 0, hi + 1);
    let g = ctx.graph(hi + 1)?;
    for n in lo..=hi {
        let (x, y) = (a[n as usize], a[n as usize + 1]);
        rec.check(n, step_ok(x, y), "step 0 or 1", format!("{x:?} -> {y:?}"), || {
            Some("series".into())
        });
        let (x, y) = (dplus_infinite(g, n), dplus_infinite(g, n + 1));
        rec.check(n, y == x || y == x + 1, "step 0 or 1", format!("{x} -> {y}"), || {
            Some("out-degrees".into())
        });
    }
    Ok(())
}

fn lemma_3_6(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
    let Some((lo, hi)) = bounds(r, 1) else {
        return Ok(());
    };
    // d⁺(v_i) ≤ i for f(x) = x, so every vertex involved is at most 2·hi.
    let g = ctx.graph(2 * hi)?;
    let d = |i: u64| if i == 0 { 0 } else { dplus_infinite(g, i) };
    for i in lo..=hi {
        let (first, second) = (d(i + d(i)), d(i + d(i - 1)));
        rec.check(
            i,
            first == i && second == i,
            format!("{i}, {i}"),
            format!("{first}, {second}"),
            || None,
        );
    }
    Ok(())
}

fn thm_3_7(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
    let Some((lo, hi)) = bounds(r, 1) else {
        return Ok(());
    };
    let g = ctx.graph(hi)?;
    for n in lo..=hi {
        let formula = bettina_dplus(n).map_err(|e| e.to_string())?;
        rec.expect_eq(n, formula, dplus_infinite(g, n));
    }
    Ok(())
}

fn edge_count_fib_claim(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
    let Some((lo, hi)) = bounds(r, 1) else {
        return Ok(());
    };
    let g = ctx.graph(hi)?;
    for n in lo..=hi {
        let formula = edge_count_fib(n).map_err(|e| e.to_string())?;
        rec.expect_eq(n, formula, edge_count_prefix(g, n));
    }
    Ok(())
}

fn thm_3_8(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder, n: u64, expected: u64) -> Outcome {
    let Some((lo, hi)) = bounds(r, 1) else {
        return Ok(());
    };
    if !(lo..=hi).contains(&n) {
        return Ok(());
    }
    let t = ctx.trace(n)?;
    rec.expect_eq(n, expected, t.in_degree[..n as usize].iter().sum());
    Ok(())
}

fn thm_3_8_main(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
    let (m, f1) = (ctx.m(), ctx.f_at(1)?);
    let ff = ctx.f_at(f1 + 1)?;
    let expected = choose2(f1 + 1) + choose2(ff - f1) + m * f1 * (f1 - 1) / 2;
    thm_3_8(ctx, r, rec, ff + 1, expected)
}

fn thm_3_8_alt(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
    let (m, c) = (ctx.m(), ctx.c());
    let n = m * m + m * (c + 1) + 2;
    // m² + m(c - 1) - c + 2 = (m - 1)(m + c) + 2 stays positive.
    let second = (m - 1) * (m + c) + 2;
    let expected = choose2(m + c + 1) + choose2(second) + m * (m + c) * (m + c - 1) / 2;
    thm_3_8(ctx, r, rec, n, expected)
}

fn prop_3_9(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
    let Some((lo, hi)) = bounds(r, 2) else {
        return Ok(());
    };
    let (f, m) = (ctx.f, ctx.m());
    let g = ctx.graph(hi)?;
    for n in lo..=hi {
        let saturated = |i: u64| degree(g, i, n) == f.eval(i);
        for i in 1..n {
            if !(saturated(i) && saturated(i + 1)) {
                continue;
            }
            if dplus_within(g, i, n) == 0 || dplus_within(g, i + 1, n) == 0 {
                continue;
            }
            let i_far = g.reaches()[i as usize - 1].min(n);
            let j_far = g.reaches()[i as usize].min(n);
            let gap = j_far as i128 - i_far as i128;
            rec.check(
                n,
                gap == m as i128 || gap == m as i128 + 1,
                format!("{m} or {}", m + 1),
                format!("{gap}"),
                || Some(format!("i = {i}, i' = {i_far}, j' = {j_far}")),
            );
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// recovering f, f-related graphs and constant functions

fn describe_inference(result: &InferenceResult) -> String {
    match result.status {
        InferenceStatus::Unique => format!("unique m={} c={}", result.m.unwrap_or(0), result.c.unwrap_or(0)),
        InferenceStatus::Ambiguous => format!("ambiguous ({} candidates)", result.candidates.len()),
        InferenceStatus::NotAJacoGraph => {
            format!(
                "not a Jaco graph: {}",
                result.diagnostic.as_deref().unwrap_or("no diagnostic")
            )
        }
    }
}

fn sec_3_1_smallest_inference(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
    let Some((lo, hi)) = bounds(r, 1) else {
        return Ok(());
    };
    let (m, c) = (ctx.m(), ctx.c());
    let n = ctx.f_at(2)? + 1;
    if !(lo..=hi).contains(&n) {
        return Ok(());
    }
    let g = ctx.graph(n)?;
    let (d1, d2) = (degree(g, 1, n), degree(g, 2, n));
    let solved = (d2 as i128 - d1 as i128, 2 * d1 as i128 - d2 as i128);
    rec.check(
        n,
        solved == (m as i128, c as i128),
        format!("m={m} c={c}"),
        format!("m={} c={}", solved.0, solved.1),
        || Some(format!("d(v1) = {d1}, d(v2) = {d2}")),
    );
    let result = infer(&arcs_of_prefix(g, n), n).map_err(|e| e.to_string())?;
    let ok =
        result.status == InferenceStatus::Unique && result.m == Some(m) && result.c == Some(c) && result.validation;
    rec.check(
        n,
        ok,
        format!("unique m={m} c={c}"),
        describe_inference(&result),
        || Some("inference".into()),
    );
    Ok(())
}

fn sec_3_1_two_block_inference(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
    let c = ctx.c();
    let Some((lo, hi)) = bounds(r, c + 2) else {
        return Ok(());
    };
    let g = ctx.graph(hi)?;
    for n in lo..=hi {
        let result = infer(&arcs_of_prefix(g, n), n).map_err(|e| e.to_string())?;
        let ok =
            result.status == InferenceStatus::Unique && result.m == Some(0) && result.c == Some(c) && result.validation;
        rec.check(n, ok, format!("unique m=0 c={c}"), describe_inference(&result), || None);
    }
    Ok(())
}

fn sec_3_1_complete_any_f(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
    let Some((lo, hi)) = bounds(r, 1) else {
        return Ok(());
    };
    let hi = hi.min(ctx.m() + ctx.c() + 1);
    if lo > hi {
        return Ok(());
    }
    let t = ctx.trace(hi)?;
    for n in lo..=hi {
        rec.expect_eq(n, choose2(n), t.in_degree[..n as usize].iter().sum());
    }
    Ok(())
}

fn sec_3_1_f_related(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
    let Some((lo, hi)) = bounds(r, 1) else {
        return Ok(());
    };
    let k = ctx.m() + ctx.c();
    let hi = hi.min(k + 1);
    if lo > hi {
        return Ok(());
    }
    let related = f_related(k);
    for n in lo..=hi {
        let mut odd_one = None;
        for f in &related {
            let t = naive_trace(*f, n).map_err(|e| e.to_string())?;
            if t.edge_count() != choose2(n) {
                odd_one = Some((*f, t.edge_count()));
                break;
            }
        }
        rec.check(
            n,
            odd_one.is_none(),
            format!("K_{n} for all {} functions", related.len()),
            odd_one.map(|(f, e)| format!("{e} arcs for {f}")),
            || None,
        );
    }
    Ok(())
}

fn sec_3_1_m0_null(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
    let Some((lo, hi)) = bounds(r, 1) else {
        return Ok(());
    };
    let t = ctx.trace(hi)?;
    for n in lo..=hi {
        rec.expect_eq(n, 0, t.in_degree[..n as usize].iter().sum());
    }
    Ok(())
}

fn expected_blocks(n: u64, k: u64) -> Vec<u64> {
    let mut sizes = vec![k + 1; (n / (k + 1)) as usize];
    if !n.is_multiple_of(k + 1) {
        sizes.push(n % (k + 1));
    }
    sizes
}

fn block_check(ctx: &mut Context, lo: u64, hi: u64, rec: &mut Recorder) -> Outcome {
    let k = ctx.c();
    let t = ctx.trace(hi)?;
    prefix_blocks(t, lo, hi, |n, sizes, clean| {
        let expected = expected_blocks(n, k);
        let ok = clean && sizes == expected;
        rec.check(n, ok, expected, sizes, || {
            (!clean).then(|| "blocks not complete and consecutive".into())
        });
    });
    Ok(())
}

fn sec_3_1_m0_blocks(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
    let Some((lo, hi)) = bounds(r, 1) else {
        return Ok(());
    };
    block_check(ctx, lo, hi, rec)
}

fn illus_1(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
    if !r.contains(&11) {
        return Ok(());
    }
    let g = ctx.graph(11)?;
    let rep = analyze_prefix(g, 11);
    let actual = format!(
        "Delta {}, set {}, prime v{}",
        rep.delta,
        describe_set(&rep.jaconian_set),
        rep.prime_jaconian
    );
    rec.expect_eq(11, "Delta 9, set {4,5,6}, prime v4".to_owned(), actual);
    Ok(())
}

fn illus_2(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
    if !r.contains(&15) {
        return Ok(());
    }
    let g = ctx.graph(15)?;
    let tail_sum: u64 = (2..=15).map(|i| dplus_infinite(g, i)).sum();
    let actual = format!("{} arcs, out-degree sum {tail_sum}", edge_count_prefix(g, 15));
    rec.expect_eq(15, "44 arcs, out-degree sum 75".to_owned(), actual);
    Ok(())
}

fn illus_3(ctx: &mut Context, r: &RangeInclusive<u64>, rec: &mut Recorder) -> Outcome {
    if !r.contains(&15) {
        return Ok(());
    }
    let t = ctx.trace(15)?;
    prefix_blocks(t, 15, 15, |n, sizes, clean| {
        let ok = clean && sizes == [4, 4, 4, 3];
        rec.check(n, ok, vec![4, 4, 4, 3], sizes, || {
            (!clean).then(|| "blocks not complete and consecutive".into())
        });
    });
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn ids_are_unique_and_sorted() {
        let ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
        let unique: BTreeSet<&str> = ids.iter().copied().collect();
        assert_eq!(ids.len(), unique.len());
        assert!(ids.windows(2).all(|w| w[0] < w[1]));
        assert!(ids.len() >= 25);
    }

    #[test]
    fn every_claim_has_an_anchor_and_statement() {
        for c in registry() {
            assert!(
                !c.anchors.is_empty() && !c.statement.is_empty() && !c.applicability.is_empty(),
                "{}",
                c.id
            );
        }
    }

    #[test]
    fn applicability() {
        let reg = registry();
        let get = |id: &str| *reg.iter().find(|c| c.id == id).unwrap();
        assert!(get("thm-3.7").applies(1, 0));
        assert!(!get("thm-3.7").applies(2, 0));
        assert!(get("prop-3.1").applies(3, 0) && !get("prop-3.1").applies(3, 1));
        assert!(get("illus-3").applies(0, 3) && !get("illus-3").applies(1, 3));
        assert!(get("sec-3.1-complete-any-f").applies(0, 2));
        assert!(!get("lemma-1.1a").applies(0, 2));
    }

    #[test]
    fn block_sizes() {
        assert_eq!(expected_blocks(15, 3), vec![4, 4, 4, 3]);
        assert_eq!(expected_blocks(8, 3), vec![4, 4]);
        assert_eq!(expected_blocks(3, 0), vec![1, 1, 1]);
    }
}
