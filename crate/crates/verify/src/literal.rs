//! Minimal-index recursions evaluated straight from their definition.
//!
//! `L(0) = 0`, `L(1) = 1`, `L(n) = min{1 ≤ k < n : slope·k + offset + L(k) ≥ n}`.
//! The minimum is located with a prefix maximum of `slope·k + offset + L(k)`,
//! which is exact whether or not the terms are monotone, so step properties of
//! the sequence are tested rather than assumed.

/// `L(0..=n_max)`; `None` where no admissible `k` exists.
pub(crate) fn min_scan(slope: u64, offset: u64, n_max: u64) -> Vec<Option<u64>> {
    let len = n_max as usize + 1;
    let mut values: Vec<Option<u64>> = Vec::with_capacity(len);
    // prefix_max[k] = max over 1 ≤ k' ≤ k of slope·k' + offset + L(k'); index 0 unused.
    let mut prefix_max: Vec<u64> = Vec::with_capacity(len);
    values.push(Some(0));
    prefix_max.push(0);
    for n in 1..=n_max {
        let value = if n == 1 {
            Some(1)
        } else {
            let window = &prefix_max[1..n as usize];
            let k = window.partition_point(|&g| g < n) as u64 + 1;
            (k < n).then_some(k)
        };
        values.push(value);
        let term = value.map_or(0, |l| slope * n + offset + l);
        let previous = prefix_max[n as usize - 1];
        prefix_max.push(previous.max(term));
    }
    values
}
