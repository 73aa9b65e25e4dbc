//! Ground truth for one generating function.
//!
//! Up to [`NAIVE_LIMIT`] vertices everything comes from the quadratic
//! construction. Beyond that the fast construction is used, but only after its
//! prefix of [`NAIVE_LIMIT`] vertices has been compared field for field with
//! the quadratic one.

use jaco_core::{construct, naive_trace, JacoGraph, LinearFunction, NaiveTrace};

pub(crate) const NAIVE_LIMIT: u64 = 20_000;

pub(crate) type Outcome<T = ()> = std::result::Result<T, String>;

pub(crate) struct Context {
    pub(crate) f: LinearFunction,
    trace: Option<NaiveTrace>,
    graph: Option<JacoGraph>,
}

impl Context {
    pub(crate) fn new(f: LinearFunction) -> Self {
        Context {
            f,
            trace: None,
            graph: None,
        }
    }

    pub(crate) fn m(&self) -> u64 {
        self.f.m()
    }

    pub(crate) fn c(&self) -> u64 {
        self.f.c()
    }

    /// `f(i)`, failing instead of overflowing.
    pub(crate) fn f_at(&self, i: u64) -> Outcome<u64> {
        self.f.checked_eval(i).ok_or_else(|| format!("f({i}) overflows"))
    }

    /// The literal construction of at least `size` vertices.
    pub(crate) fn trace(&mut self, size: u64) -> Outcome<&NaiveTrace> {
        let size = size.max(1);
        if size > NAIVE_LIMIT {
            return Err(format!(
                "{size} vertices exceed the quadratic construction limit of {NAIVE_LIMIT}"
            ));
        }
        if self.trace.as_ref().is_none_or(|t| t.n() < size) {
            let t = naive_trace(self.f, size).map_err(|e| e.to_string())?;
            self.trace = Some(t);
        }
        Ok(self.trace.as_ref().expect("trace was just built"))
    }

    /// A graph of at least `size` vertices equal to the literal construction.
    pub(crate) fn graph(&mut self, size: u64) -> Outcome<&JacoGraph> {
        let size = size.max(1);
        if self.graph.as_ref().is_some_and(|g| g.n() >= size) {
            return Ok(self.graph.as_ref().expect("checked above"));
        }
        let g = if size <= NAIVE_LIMIT {
            self.trace(size)?.clone().into_graph().map_err(|e| e.to_string())?
        } else {
            let fast = construct(self.f, size).map_err(|e| e.to_string())?;
            let reference = self.trace(NAIVE_LIMIT)?;
            let prefix = fast.truncate(NAIVE_LIMIT).map_err(|e| e.to_string())?;
            if prefix.in_degrees() != reference.in_degree.as_slice() || prefix.reaches() != reference.reach.as_slice() {
                return Err(format!(
                    "fast construction disagrees with the quadratic one below {NAIVE_LIMIT} vertices"
                ));
            }
            fast
        };
        self.graph = Some(g);
        Ok(self.graph.as_ref().expect("graph was just built"))
    }
}
