//! Integer sequences attached to Jaco graphs.
//!
//! The minimal-tail sequence `L(n)` is the lowest index `ℓ` with an arc
//! `(v_ℓ, v_n)` in `J_∞(f(x))`. It satisfies `L(0) = 0`, `L(1) = 1` and, for
//! `n ≥ 2`, `L(n) = min{k < n : mk + c + L(k) ≥ n}` ([`SequenceVariant::Corrected`]).
//! The printed recursion drops the `+ c` ([`SequenceVariant::Printed`]); the two
//! agree when `c = 0` and differ as soon as `c ≥ 1`.

use serde::Serialize;

use jaco_core::LinearFunction;
use jaco_core::{JacoError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SequenceVariant {
    /// `min{k < n : mk + c + L(k) ≥ n}`, consistent with the graph.
    Corrected,
    /// `min{k < n : mk + L(k) ≥ n}`.
    Printed,
    /// `a_n = min{k < n : k + a_k ≥ n}`; the table's function is `f(x) = x`.
    ASeries,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceTable {
    pub f: LinearFunction,
    pub variant: SequenceVariant,
    /// `values[n]` for `n = 0..=n_max`.
    pub values: Vec<u64>,
}

impl SequenceTable {
    pub fn n_max(&self) -> u64 {
        self.values.len() as u64 - 1
    }

    pub fn get(&self, n: u64) -> Option<u64> {
        self.values.get(n as usize).copied()
    }
}

/// Tabulates `L(0..=n_max)` in linear time.
///
/// `L` is non-decreasing, so the search for `L(n)` starts at `L(n - 1)`.
pub fn ell_sequence(f: LinearFunction, n_max: u64, variant: SequenceVariant) -> Result<SequenceTable> {
    f.validate()?;
    let (f, slope, offset) = match variant {
        SequenceVariant::Corrected => (f, f.m(), f.c()),
        SequenceVariant::Printed => (f, f.m(), 0),
        SequenceVariant::ASeries => (LinearFunction::identity(), 1, 0),
    };
    if slope == 0 {
        return Err(JacoError::ZeroSlope);
    }
    if n_max == 0 {
        return Err(JacoError::InvalidArgument("n_max must be at least 1".into()));
    }
    f.check_size(n_max)?;
    let mut values = Vec::with_capacity(n_max as usize + 1);
    values.push(0);
    values.push(1);
    let mut k = 1u64;
    for n in 2..=n_max {
        while slope * k + offset + values[k as usize] < n {
            k += 1;
        }
        debug_assert!(k < n);
        values.push(k);
    }
    Ok(SequenceTable { f, variant, values })
}

/// Out-degree of `v_n` in `J_∞(f(x))`: `((m - 1)n + c) + L(n)` with the corrected `L`.
/// For `n = 1` this is `f(1)`.
pub fn dplus_closed(f: LinearFunction, n: u64) -> Result<u64> {
    dplus_closed_with(f, n, SequenceVariant::Corrected)
}

/// [`dplus_closed`] evaluated with either recursion, for discrepancy reports.
pub fn dplus_closed_with(f: LinearFunction, n: u64, variant: SequenceVariant) -> Result<u64> {
    if n == 0 {
        return Err(JacoError::InvalidArgument("vertex index must be at least 1".into()));
    }
    if n == 1 {
        return Ok(f.eval(1));
    }
    let table = ell_sequence(f, n, variant)?;
    Ok(closed_form(f, n, table.values[n as usize]))
}

/// `((m - 1)n + c) + ℓ`.
pub fn closed_form(f: LinearFunction, n: u64, ell: u64) -> u64 {
    (f.m() - 1) * n + f.c() + ell
}

const FIB_MAX_INDEX: usize = 92;

const FIB: [u64; FIB_MAX_INDEX + 1] = {
    let mut table = [0u64; FIB_MAX_INDEX + 1];
    table[1] = 1;
    table[2] = 1;
    let mut i = 3;
    while i <= FIB_MAX_INDEX {
        table[i] = table[i - 1] + table[i - 2];
        i += 1;
    }
    table
};

/// Fibonacci numbers with `f_1 = f_2 = 1`; indices above 92 leave the `i64` range.
pub fn fib(i: u64) -> Result<u64> {
    if i == 0 || i as usize > FIB_MAX_INDEX {
        return Err(JacoError::FibonacciIndex(i));
    }
    Ok(FIB[i as usize])
}

/// A positive integer written as a sum of non-consecutive Fibonacci numbers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZeckendorfRep {
    pub value: u64,
    /// Strictly decreasing Fibonacci indices, each at least 2, no two consecutive.
    pub indices: Vec<u64>,
}

impl ZeckendorfRep {
    /// Whether the indices are admissible and sum to `value`.
    pub fn is_valid(&self) -> bool {
        let admissible = self.indices.iter().all(|&i| i >= 2 && i as usize <= FIB_MAX_INDEX)
            && self.indices.windows(2).all(|w| w[0] >= w[1] + 2);
        admissible
            && self
                .indices
                .iter()
                .try_fold(0u64, |acc, &i| acc.checked_add(FIB[i as usize]))
                == Some(self.value)
    }
}

/// Greedy decomposition: repeatedly take the largest `f_i ≤ remainder`, `i ≥ 2`.
pub fn zeckendorf(n: u64) -> Result<ZeckendorfRep> {
    if n == 0 || n > i64::MAX as u64 {
        return Err(JacoError::InvalidArgument(format!("cannot decompose {n}")));
    }
    let mut indices = Vec::new();
    let mut rest = n;
    let mut i = FIB_MAX_INDEX;
    while rest > 0 {
        while FIB[i] > rest {
            i -= 1;
        }
        indices.push(i as u64);
        rest -= FIB[i];
        // The next term cannot use index i - 1.
        i = i.saturating_sub(2).max(2);
    }
    Ok(ZeckendorfRep { value: n, indices })
}

/// `d⁺(v_n)` in `J_∞(x)` from the Zeckendorf representation of `n`: every index
/// is shifted down by one.
pub fn bettina_dplus(n: u64) -> Result<u64> {
    let rep = zeckendorf(n)?;
    Ok(rep.indices.iter().map(|&i| FIB[i as usize - 1]).sum())
}

/// `ε(J_n(x)) = n(n + 1)/2 - Σ_{i=1}^{n} d⁺(v_i)` with the Zeckendorf out-degrees.
pub fn edge_count_fib(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(JacoError::InvalidArgument("n must be at least 1".into()));
    }
    let triangle = n
        .checked_mul(n + 1)
        .map(|v| v / 2)
        .ok_or(JacoError::ArithmeticOverflow("n(n + 1)/2"))?;
    let mut total = 0u64;
    for i in 1..=n {
        total = total
            .checked_add(bettina_dplus(i)?)
            .ok_or(JacoError::ArithmeticOverflow("sum of out-degrees"))?;
    }
    triangle
        .checked_sub(total)
        .ok_or(JacoError::ArithmeticOverflow("out-degree sum exceeds n(n + 1)/2"))
}

/// Checks `a_{i + a_i} = i` and `a_{i + a_{i-1}} = i` on the a-series.
pub fn lemma36_check(i: u64, n_cap: u64) -> Result<bool> {
    if i == 0 {
        return Err(JacoError::InvalidArgument("i must be at least 1".into()));
    }
    let a = ell_sequence(LinearFunction::identity(), n_cap.max(1), SequenceVariant::ASeries)?;
    let at = |k: u64| {
        a.get(k)
            .ok_or_else(|| JacoError::Precondition(format!("index {k} exceeds the cap {n_cap}")))
    };
    let first = at(i + at(i)?)?;
    let second = at(i + at(i - 1)?)?;
    Ok(first == i && second == i)
}
