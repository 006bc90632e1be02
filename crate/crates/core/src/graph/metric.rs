use std::collections::VecDeque;
use std::fmt;
use std::ops::Add;

use super::Graph;

/// A path length in edge hops, or `Unreachable` between components.
///
/// The derived ordering puts `Unreachable` after every finite value, and
/// addition is absorbing in `Unreachable`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtDistance {
    Finite(usize),
    Unreachable,
}

impl ExtDistance {
    pub fn finite(self) -> Option<usize> {
        match self {
            ExtDistance::Finite(d) => Some(d),
            ExtDistance::Unreachable => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtDistance::Finite(_))
    }
}

impl Add for ExtDistance {
    type Output = ExtDistance;
    fn add(self, rhs: ExtDistance) -> ExtDistance {
        match (self, rhs) {
            (ExtDistance::Finite(a), ExtDistance::Finite(b)) => ExtDistance::Finite(a + b),
            _ => ExtDistance::Unreachable,
        }
    }
}

impl fmt::Display for ExtDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtDistance::Finite(d) => write!(f, "{d}"),
            ExtDistance::Unreachable => f.write_str("inf"),
        }
    }
}

/// All-pairs shortest-path lengths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<ExtDistance>,
}

impl DistanceMatrix {
    /// One breadth-first search per vertex.
    pub fn compute(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut d = vec![ExtDistance::Unreachable; n * n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            let row = &mut d[s * n..(s + 1) * n];
            row[s] = ExtDistance::Finite(0);
            queue.push_back((s, 0));
            while let Some((v, dv)) = queue.pop_front() {
                for &w in g.neighbors(v) {
                    if row[w] == ExtDistance::Unreachable {
                        row[w] = ExtDistance::Finite(dv + 1);
                        queue.push_back((w, dv + 1));
                    }
                }
            }
        }
        DistanceMatrix { n, d }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn get(&self, x: usize, y: usize) -> ExtDistance {
        self.d[x * self.n + y]
    }

    pub fn row(&self, x: usize) -> &[ExtDistance] {
        &self.d[x * self.n..(x + 1) * self.n]
    }

    /// Largest finite distance (0 for graphs with fewer than two vertices).
    pub fn max_finite(&self) -> usize {
        self.d.iter().filter_map(|d| d.finite()).max().unwrap_or(0)
    }

    /// Sorted distances from `x` to every vertex.
    pub fn profile(&self, x: usize) -> Vec<ExtDistance> {
        let mut p = self.row(x).to_vec();
        p.sort_unstable();
        p
    }
}
