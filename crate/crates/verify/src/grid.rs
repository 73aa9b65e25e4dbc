use std::ops::RangeInclusive;

use serde::Serialize;

/// Parameter ranges a claim is evaluated over.
///
/// `n` bounds graph sizes for graph-level claims; `seq_n` bounds the index of
/// sequence-level claims (out-degrees in the infinite graph, sequence terms).
/// Claims about constant functions always use `m = 0` together with `c`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Grid {
    pub m: RangeInclusive<u64>,
    pub c: RangeInclusive<u64>,
    pub n: RangeInclusive<u64>,
    pub seq_n: RangeInclusive<u64>,
    /// Witnesses kept per claim.
    pub witness_cap: usize,
    /// Upper bound on the estimated work of a single claim, in elementary steps.
    pub cost_bound: u128,
}

impl Default for Grid {
    fn default() -> Self {
        Grid {
            m: 1..=5,
            c: 0..=5,
            n: 1..=500,
            seq_n: 1..=10_000,
            witness_cap: 10,
            cost_bound: 500_000_000_000,
        }
    }
}

impl Grid {
    /// The single point `(m, c, n)`, used to re-evaluate a witness in isolation.
    pub fn point(m: u64, c: u64, n: u64) -> Self {
        Grid {
            m: m..=m,
            c: c..=c,
            n: n..=n,
            seq_n: n..=n,
            ..Grid::default()
        }
    }

    pub fn with_n(mut self, n: RangeInclusive<u64>) -> Self {
        self.n = n;
        self
    }

    pub fn with_seq_n(mut self, seq_n: RangeInclusive<u64>) -> Self {
        self.seq_n = seq_n;
        self
    }
}
