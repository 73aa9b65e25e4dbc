use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{JacoError, Result};

/// The generator `f(x) = mx + c`.
///
/// `m ≥ 1` is required unless the function is *relaxed*, in which case the
/// constant functions `f(x) = c` are admitted as well.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinearFunction {
    m: u64,
    c: u64,
    #[serde(default)]
    relaxed: bool,
}

impl LinearFunction {
    pub fn new(m: u64, c: u64) -> Result<Self> {
        if m == 0 {
            return Err(JacoError::ZeroSlope);
        }
        Ok(Self { m, c, relaxed: false })
    }

    /// A function with the lower limit on `m` lifted; `m = 0` is accepted.
    pub fn relaxed(m: u64, c: u64) -> Self {
        Self { m, c, relaxed: true }
    }

    /// Builds from raw parts, honouring the relaxed flag.
    pub fn from_parts(m: u64, c: u64, relaxed: bool) -> Result<Self> {
        if relaxed {
            Ok(Self::relaxed(m, c))
        } else {
            Self::new(m, c)
        }
    }

    /// `f(x) = x`.
    pub fn identity() -> Self {
        Self {
            m: 1,
            c: 0,
            relaxed: false,
        }
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn c(&self) -> u64 {
        self.c
    }

    pub fn is_relaxed(&self) -> bool {
        self.relaxed
    }

    /// Re-checks the slope rule; deserialized values bypass the constructors.
    pub fn validate(&self) -> Result<()> {
        if self.m == 0 && !self.relaxed {
            return Err(JacoError::ZeroSlope);
        }
        Ok(())
    }

    /// `m·i + c`, or `None` on overflow.
    pub fn checked_eval(&self, i: u64) -> Option<u64> {
        self.m.checked_mul(i)?.checked_add(self.c)
    }

    /// `m·i + c`. Callers stay within the bound checked by [`Self::check_size`].
    #[inline]
    pub fn eval(&self, i: u64) -> u64 {
        self.m * i + self.c
    }

    /// Ensures `f(n) + n` fits in an `i64`, which bounds every reach value of `J_n`.
    pub fn check_size(&self, n: u64) -> Result<()> {
        let top = self
            .checked_eval(n)
            .and_then(|v| v.checked_add(n))
            .filter(|&v| v <= i64::MAX as u64);
        match top {
            Some(_) => Ok(()),
            None => Err(JacoError::Overflow { f: *self, n }),
        }
    }
}

impl fmt::Display for LinearFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.m, self.c) {
            (0, c) => write!(f, "{c}"),
            (1, 0) => write!(f, "x"),
            (1, c) => write!(f, "x+{c}"),
            (m, 0) => write!(f, "{m}x"),
            (m, c) => write!(f, "{m}x+{c}"),
        }
    }
}
