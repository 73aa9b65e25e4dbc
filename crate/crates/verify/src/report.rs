use std::fmt;

use serde::Serialize;

/// A value on either side of a comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Observed {
    Int(u64),
    Vertices(Vec<u64>),
    Text(String),
    Missing,
}

impl From<u64> for Observed {
    fn from(v: u64) -> Self {
        Observed::Int(v)
    }
}

impl From<Vec<u64>> for Observed {
    fn from(v: Vec<u64>) -> Self {
        Observed::Vertices(v)
    }
}

impl From<String> for Observed {
    fn from(v: String) -> Self {
        Observed::Text(v)
    }
}

impl From<&str> for Observed {
    fn from(v: &str) -> Self {
        Observed::Text(v.to_owned())
    }
}

impl<T: Into<Observed>> From<Option<T>> for Observed {
    fn from(v: Option<T>) -> Self {
        v.map_or(Observed::Missing, Into::into)
    }
}

impl fmt::Display for Observed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Observed::Int(v) => write!(f, "{v}"),
            Observed::Vertices(vs) => {
                let items: Vec<String> = vs.iter().map(u64::to_string).collect();
                write!(f, "{{{}}}", items.join(","))
            }
            Observed::Text(s) => f.write_str(s),
            Observed::Missing => f.write_str("none"),
        }
    }
}

/// A grid point where a claim failed. `expected` is what the statement
/// predicts, `actual` what the construction produced.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub m: u64,
    pub c: u64,
    pub n: u64,
    pub expected: Observed,
    pub actual: Observed,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(m={}, c={}, n={}) expected {} got {}",
            self.m, self.c, self.n, self.expected, self.actual
        )?;
        if let Some(d) = &self.detail {
            write!(f, " [{d}]")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimStatus {
    VerifiedOnGrid,
    Counterexample,
    NotApplicable,
}

impl fmt::Display for ClaimStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClaimStatus::VerifiedOnGrid => "verified-on-grid",
            ClaimStatus::Counterexample => "counterexample",
            ClaimStatus::NotApplicable => "not-applicable",
        })
    }
}

/// What was actually exercised.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GridSummary {
    /// `(m, c)` pairs evaluated, in order.
    pub functions: Vec<(u64, u64)>,
    /// Index range handed to the checker (graph sizes or sequence indices).
    pub n: (u64, u64),
    pub points_checked: u64,
    pub failures: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimResult {
    pub id: String,
    pub anchors: Vec<String>,
    pub statement: String,
    pub report_only: bool,
    pub grid: GridSummary,
    pub status: ClaimStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    /// Non-empty exactly when the status is a counterexample; capped.
    pub witnesses: Vec<Witness>,
}

/// Collects outcomes for one function; merged in grid order afterwards.
#[derive(Debug)]
pub(crate) struct Recorder {
    m: u64,
    c: u64,
    cap: usize,
    pub(crate) points: u64,
    pub(crate) failures: u64,
    pub(crate) witnesses: Vec<Witness>,
}

impl Recorder {
    pub(crate) fn new(m: u64, c: u64, cap: usize) -> Self {
        Recorder {
            m,
            c,
            cap,
            points: 0,
            failures: 0,
            witnesses: Vec::new(),
        }
    }

    /// Records one point; `detail` is only evaluated on failure.
    pub(crate) fn check(
        &mut self,
        n: u64,
        ok: bool,
        expected: impl Into<Observed>,
        actual: impl Into<Observed>,
        detail: impl FnOnce() -> Option<String>,
    ) {
        self.points += 1;
        if ok {
            return;
        }
        self.failures += 1;
        if self.witnesses.len() < self.cap {
            self.witnesses.push(Witness {
                m: self.m,
                c: self.c,
                n,
                expected: expected.into(),
                actual: actual.into(),
                detail: detail(),
            });
        }
    }

    pub(crate) fn expect_eq<T: PartialEq + Into<Observed>>(&mut self, n: u64, expected: T, actual: T) {
        let ok = expected == actual;
        self.check(n, ok, expected, actual, || None);
    }

    pub(crate) fn expect_eq_with<T: PartialEq + Into<Observed>>(
        &mut self,
        n: u64,
        expected: T,
        actual: T,
        detail: impl FnOnce() -> String,
    ) {
        let ok = expected == actual;
        self.check(n, ok, expected, actual, || Some(detail()));
    }
}
