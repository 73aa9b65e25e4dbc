//! Compact Jaco graph storage and the linear-time construction.

use serde::Serialize;

use crate::error::{JacoError, Result};
use crate::function::LinearFunction;

/// A finite linear Jaco graph `J_n(f(x))`.
///
/// Arcs are never stored. Vertex `v_i` points at `v_{i+1}, ..., v_{min(reach_i, n)}`,
/// so `(in_degree, reach)` is a complete description. Both arrays are indexed by
/// 1-based vertex numbers through the accessors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JacoGraph {
    f: LinearFunction,
    in_degree: Vec<u64>,
    reach: Vec<u64>,
}

/// Degrees of one vertex; `underlying` is the degree once arc directions are forgotten.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Degrees {
    pub in_degree: u64,
    pub out_degree: u64,
    pub underlying: u64,
}

/// Builds `J_n(f(x))` in `O(n)` time and memory.
///
/// Vertices are processed in ascending order. The in-neighbours of `v_j` are the
/// suffix `v_lo, ..., v_{j-1}` of vertices whose reach is at least `j`; reach is
/// non-decreasing, so `lo` only ever advances.
pub fn construct(f: LinearFunction, n: u64) -> Result<JacoGraph> {
    f.validate()?;
    if n == 0 {
        return Err(JacoError::EmptyGraph);
    }
    let mut g = JacoGraph {
        f,
        in_degree: Vec::new(),
        reach: Vec::new(),
    };
    g.grow(n)?;
    Ok(g)
}

impl JacoGraph {
    /// Assembles a graph from arrays produced elsewhere (the oracle, a parsed document).
    ///
    /// Checks `reach_i = f(i) + i - in_degree_i` and that every in-degree agrees
    /// with the arcs implied by the reach values.
    pub fn from_parts(f: LinearFunction, in_degree: Vec<u64>, reach: Vec<u64>) -> Result<Self> {
        f.validate()?;
        let n = in_degree.len() as u64;
        if n == 0 {
            return Err(JacoError::EmptyGraph);
        }
        if reach.len() != in_degree.len() {
            return Err(JacoError::InvalidArgument(format!(
                "in_degree has {} entries but reach has {}",
                in_degree.len(),
                reach.len()
            )));
        }
        f.check_size(n)?;
        for (idx, (&d, &r)) in in_degree.iter().zip(&reach).enumerate() {
            let i = idx as u64 + 1;
            if d >= i || f.eval(i) + i - d != r {
                return Err(JacoError::InvalidArgument(format!(
                    "vertex {i}: in_degree {d} and reach {r} are inconsistent with f(x) = {f}"
                )));
            }
        }
        // Recount in-degrees from reach without assuming monotonicity.
        let len = in_degree.len();
        let mut diff = vec![0i64; len + 2];
        for (idx, &r) in reach.iter().enumerate() {
            let i = idx + 1;
            let hi = r.min(n) as usize;
            if hi > i {
                diff[i + 1] += 1;
                diff[hi + 1] -= 1;
            }
        }
        let mut running = 0i64;
        for (idx, &d) in in_degree.iter().enumerate() {
            running += diff[idx + 1];
            if running != d as i64 {
                return Err(JacoError::InvalidArgument(format!(
                    "vertex {}: stored in_degree {d} but the reach values imply {running}",
                    idx + 1
                )));
            }
        }
        Ok(Self { f, in_degree, reach })
    }

    // Appends vertices until the graph has `n` of them.
    fn grow(&mut self, n: u64) -> Result<()> {
        let f = self.f;
        f.check_size(n)?;
        let start = self.in_degree.len() as u64;
        let extra = (n - start) as usize;
        self.in_degree.reserve_exact(extra);
        self.reach.reserve_exact(extra);
        // 1-based index of the lowest in-neighbour candidate.
        let mut lo = if start == 0 {
            1
        } else {
            start - self.in_degree[start as usize - 1]
        };
        for j in start + 1..=n {
            while lo < j && self.reach[lo as usize - 1] < j {
                lo += 1;
            }
            let d = j - lo;
            let r = f.eval(j) + j - d;
            if let Some(&prev) = self.reach.last() {
                if r < prev {
                    return Err(JacoError::ReachNotMonotone {
                        vertex: j,
                        previous: prev,
                        current: r,
                    });
                }
            }
            self.in_degree.push(d);
            self.reach.push(r);
        }
        Ok(())
    }

    /// `J_{n_new}(f(x))`, reusing the existing prefix; appending vertices never
    /// changes the in-degree of an existing one.
    pub fn extend(&self, n_new: u64) -> Result<Self> {
        if n_new < self.n() {
            return Err(JacoError::Shrink {
                from: self.n(),
                to: n_new,
            });
        }
        let mut g = self.clone();
        g.grow(n_new)?;
        Ok(g)
    }

    /// In-place variant of [`Self::extend`].
    pub fn extend_in_place(&mut self, n_new: u64) -> Result<()> {
        if n_new < self.n() {
            return Err(JacoError::Shrink {
                from: self.n(),
                to: n_new,
            });
        }
        self.grow(n_new)
    }

    /// The prefix `J_k(f(x))`, `1 ≤ k ≤ n`.
    pub fn truncate(&self, k: u64) -> Result<Self> {
        if k == 0 {
            return Err(JacoError::EmptyGraph);
        }
        if k > self.n() {
            return Err(JacoError::VertexOutOfRange { vertex: k, n: self.n() });
        }
        Ok(Self {
            f: self.f,
            in_degree: self.in_degree[..k as usize].to_vec(),
            reach: self.reach[..k as usize].to_vec(),
        })
    }

    pub fn n(&self) -> u64 {
        self.in_degree.len() as u64
    }

    pub fn function(&self) -> LinearFunction {
        self.f
    }

    pub fn in_degrees(&self) -> &[u64] {
        &self.in_degree
    }

    pub fn reaches(&self) -> &[u64] {
        &self.reach
    }

    fn check_vertex(&self, i: u64) -> Result<()> {
        if i == 0 || i > self.n() {
            Err(JacoError::VertexOutOfRange { vertex: i, n: self.n() })
        } else {
            Ok(())
        }
    }

    /// `d⁻(v_i)`.
    pub fn in_degree(&self, i: u64) -> Result<u64> {
        self.check_vertex(i)?;
        Ok(self.in_degree[i as usize - 1])
    }

    /// Highest index `v_i` points at in the infinite graph.
    pub fn reach(&self, i: u64) -> Result<u64> {
        self.check_vertex(i)?;
        Ok(self.reach[i as usize - 1])
    }

    /// Out-degree of `v_i` in the infinite graph `J_∞(f(x))`.
    pub fn infinite_out_degree(&self, i: u64) -> Result<u64> {
        Ok(self.reach(i)? - i)
    }

    pub fn has_arc(&self, i: u64, j: u64) -> Result<bool> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        Ok(i < j && self.reach[i as usize - 1] >= j)
    }

    pub fn degrees(&self, i: u64) -> Result<Degrees> {
        self.check_vertex(i)?;
        Ok(self.degrees_unchecked(i, self.n()))
    }

    /// Degrees of `v_i` inside the prefix `J_k`, `i ≤ k ≤ n`.
    pub fn degrees_in_prefix(&self, i: u64, k: u64) -> Result<Degrees> {
        self.check_vertex(k)?;
        if i == 0 || i > k {
            return Err(JacoError::VertexOutOfRange { vertex: i, n: k });
        }
        Ok(self.degrees_unchecked(i, k))
    }

    fn degrees_unchecked(&self, i: u64, k: u64) -> Degrees {
        let idx = i as usize - 1;
        let in_degree = self.in_degree[idx];
        let out_degree = self.reach[idx].min(k).saturating_sub(i);
        Degrees {
            in_degree,
            out_degree,
            underlying: in_degree + out_degree,
        }
    }

    /// Underlying degrees of `v_1..v_n`.
    pub fn degree_sequence(&self) -> Vec<u64> {
        let n = self.n();
        (1..=n).map(|i| self.degrees_unchecked(i, n).underlying).collect()
    }

    /// Arcs `(i, j)` in ascending `(i, j)` order, produced lazily.
    pub fn arcs(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        let n = self.n();
        self.reach.iter().enumerate().flat_map(move |(idx, &r)| {
            let i = idx as u64 + 1;
            (i + 1..=r.min(n)).map(move |j| (i, j))
        })
    }

    /// Bytes held by the two per-vertex arrays.
    pub fn heap_bytes(&self) -> usize {
        (self.in_degree.capacity() + self.reach.capacity()) * std::mem::size_of::<u64>()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(m: u64, c: u64) -> LinearFunction {
        LinearFunction::new(m, c).unwrap()
    }

    #[test]
    fn illustration_one_degrees() {
        let g = construct(f(2, 1), 11).unwrap();
        assert_eq!(g.degree_sequence(), vec![3, 5, 7, 9, 9, 9, 8, 8, 7, 7, 6]);
        assert_eq!(g.in_degrees(), &[0, 1, 2, 3, 3, 4, 4, 5, 5, 6, 6]);
        assert_eq!(g.reach(1).unwrap(), 4);
    }

    #[test]
    fn single_vertex() {
        let g = construct(LinearFunction::identity(), 1).unwrap();
        assert_eq!(g.in_degrees(), &[0]);
        assert_eq!(g.reaches(), &[2]);
        assert_eq!(
            g.degrees(1).unwrap(),
            Degrees {
                in_degree: 0,
                out_degree: 0,
                underlying: 0
            }
        );
        assert_eq!(g.arcs().count(), 0);
    }

    #[test]
    fn small_graphs_are_complete() {
        let g = construct(f(2, 1), 4).unwrap();
        for i in 1..=4 {
            for j in i + 1..=4 {
                assert!(g.has_arc(i, j).unwrap(), "({i},{j})");
            }
        }
    }

    #[test]
    fn arc_queries() {
        let g = construct(f(2, 1), 11).unwrap();
        assert!(g.has_arc(1, 4).unwrap());
        assert!(!g.has_arc(1, 5).unwrap());
        assert!(!g.has_arc(3, 3).unwrap());
        assert!(!g.has_arc(4, 1).unwrap());
        assert_eq!(g.has_arc(0, 2), Err(JacoError::VertexOutOfRange { vertex: 0, n: 11 }));
        assert!(g.has_arc(1, 12).is_err());
        assert_eq!(
            g.degrees(4).unwrap(),
            Degrees {
                in_degree: 3,
                out_degree: 6,
                underlying: 9
            }
        );
        assert_eq!(
            g.degrees(11).unwrap(),
            Degrees {
                in_degree: 6,
                out_degree: 0,
                underlying: 6
            }
        );
        assert!(g.degrees(12).is_err());
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(construct(f(1, 0), 0), Err(JacoError::EmptyGraph));
        assert!(matches!(
            construct(f(u64::MAX / 2, 0), 3),
            Err(JacoError::Overflow { .. })
        ));
    }

    #[test]
    fn extend_matches_construct() {
        let g4 = construct(f(2, 1), 4).unwrap();
        let g11 = g4.extend(11).unwrap();
        assert_eq!(g11, construct(f(2, 1), 11).unwrap());
        assert_eq!(g11.degree_sequence(), vec![3, 5, 7, 9, 9, 9, 8, 8, 7, 7, 6]);
        assert_eq!(g11.extend(11).unwrap(), g11);
        let g3 = construct(LinearFunction::identity(), 3).unwrap();
        assert_eq!(g3.extend(4).unwrap(), construct(LinearFunction::identity(), 4).unwrap());
        assert_eq!(g11.extend(10), Err(JacoError::Shrink { from: 11, to: 10 }));
    }

    #[test]
    fn relaxed_blocks() {
        let g = construct(LinearFunction::relaxed(0, 3), 15).unwrap();
        assert_eq!(g.in_degrees(), &[0, 1, 2, 3, 0, 1, 2, 3, 0, 1, 2, 3, 0, 1, 2]);
        let edgeless = construct(LinearFunction::relaxed(0, 0), 6).unwrap();
        assert_eq!(edgeless.arcs().count(), 0);
    }

    #[test]
    fn arcs_are_ordered() {
        let g = construct(f(2, 1), 11).unwrap();
        let arcs: Vec<_> = g.arcs().collect();
        assert_eq!(arcs.len(), 39);
        assert!(arcs.windows(2).all(|w| w[0] < w[1]));
        assert!(arcs.iter().all(|&(i, j)| g.has_arc(i, j).unwrap()));
    }

    #[test]
    fn from_parts_checks_consistency() {
        let g = construct(f(2, 1), 11).unwrap();
        let rebuilt = JacoGraph::from_parts(g.function(), g.in_degrees().to_vec(), g.reaches().to_vec()).unwrap();
        assert_eq!(rebuilt, g);
        let mut bad_in = g.in_degrees().to_vec();
        bad_in[4] = 4;
        let mut bad_reach = g.reaches().to_vec();
        bad_reach[4] -= 1;
        assert!(JacoGraph::from_parts(g.function(), bad_in, bad_reach).is_err());
        assert!(JacoGraph::from_parts(g.function(), vec![], vec![]).is_err());
    }
}
