use std::collections::BTreeSet;

use rand::Rng;

use crate::error::{Error, Result};

/// Simple undirected graph on vertices `0..n`; edges stored as `(u, w)`
/// with `u < w`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, w) in edges {
            for v in [u, w] {
                if v >= n {
                    return Err(Error::InvalidVertex { vertex: v, n });
                }
            }
            if u == w {
                return Err(Error::SelfLoop(u));
            }
            set.insert((u.min(w), u.max(w)));
        }
        Ok(Graph { n, edges: set })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn complete(n: usize) -> Self {
        Graph {
            n,
            edges: all_pairs(n).collect(),
        }
    }

    pub fn cycle(n: usize) -> Self {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle on n >= 3 vertices")
    }

    /// The `rows x cols` grid graph; vertex `(r, c)` is `r * cols + c`.
    pub fn grid(rows: usize, cols: usize) -> Self {
        let mut edges = Vec::new();
        for r in 0..rows {
            for c in 0..cols {
                let v = r * cols + c;
                if c + 1 < cols {
                    edges.push((v, v + 1));
                }
                if r + 1 < rows {
                    edges.push((v, v + cols));
                }
            }
        }
        Graph::new(rows * cols, edges).expect("grid edges are valid")
    }

    /// Erdős–Rényi `G(n, p)`.
    pub fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Self {
        Graph {
            n,
            edges: all_pairs(n).filter(|_| rng.gen_bool(p)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, w: usize) -> bool {
        self.edges.contains(&(u.min(w), u.max(w)))
    }

    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        all_pairs(self.n).filter(|e| !self.edges.contains(e)).collect()
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidVertex { vertex: v, n: self.n })
        }
    }

    /// Subgraph induced by `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut edges = BTreeSet::new();
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &w) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, w) {
                    edges.insert((i, j));
                }
            }
        }
        Graph {
            n: vertices.len(),
            edges,
        }
    }

    /// Common intersection of graphs on the same vertex set.
    pub fn intersection(n: usize, graphs: &[Graph]) -> Graph {
        let mut edges: BTreeSet<_> = all_pairs(n).collect();
        for g in graphs {
            edges.retain(|e| g.edges.contains(e));
        }
        Graph { n, edges }
    }

    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.edges.is_subset(&other.edges)
    }
}

/// All pairs `(u, w)` with `u < w < n`, in lexicographic order.
pub fn all_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| ((u + 1)..n).map(move |w| (u, w)))
}
