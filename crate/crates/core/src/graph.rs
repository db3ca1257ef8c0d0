//! Simple undirected graphs and the subdivided complete graphs `G_k`.
//!
//! Edges are always stored as `(u, v)` with `u < v`, in a fixed order, so that
//! per-edge arrays (layers, pages) can be written to files and read back
//! without ambiguity.

use std::collections::HashSet;

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n` with an ordered edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph, normalizing every edge to `(min, max)`.
    ///
    /// Self-loops, duplicate edges and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut normalized = Vec::new();
        for (index, (a, b)) in edges.into_iter().enumerate() {
            if a >= n || b >= n {
                return Err(Error::EndpointOutOfRange {
                    index,
                    u: a,
                    v: b,
                    n,
                });
            }
            if a == b {
                return Err(Error::SelfLoop { index, vertex: a });
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge {
                    index,
                    u: e.0,
                    v: e.1,
                });
            }
            normalized.push(e);
        }
        Ok(Graph {
            n,
            edges: normalized,
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> (usize, usize) {
        self.edges[index]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Neighbor lists, each sorted ascending.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Returns a 2-coloring if the graph is bipartite.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let adj = self.adjacency();
        let mut side = vec![u8::MAX; self.n];
        let mut stack = Vec::new();
        for root in 0..self.n {
            if side[root] != u8::MAX {
                continue;
            }
            side[root] = 0;
            stack.push(root);
            while let Some(u) = stack.pop() {
                for &w in &adj[u] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        stack.push(w);
                    } else if side[w] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    /// The subgraph keeping only the edges whose indices are listed, on the same vertex set.
    pub fn edge_subgraph(&self, keep: impl IntoIterator<Item = usize>) -> Graph {
        Graph {
            n: self.n,
            edges: keep.into_iter().map(|i| self.edges[i]).collect(),
        }
    }
}

/// `K_k` with edges in lexicographic order. `k = 0` gives the empty graph.
pub fn complete_graph(k: usize) -> Graph {
    let edges = (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
        .collect();
    Graph { n: k, edges }
}

/// Replaces every edge `(u, v)` by a path `u - w - v` through a fresh vertex `w`.
///
/// Fresh vertices are numbered `n, n + 1, ...` in edge order, and the two new
/// edges of original edge `e` sit at indices `2e` and `2e + 1`. The returned
/// vector maps each original edge index to its midpoint vertex.
pub fn subdivide_all_edges(g: &Graph) -> (Graph, Vec<usize>) {
    let n = g.n;
    let mut edges = Vec::with_capacity(2 * g.edges.len());
    let mut midpoints = Vec::with_capacity(g.edges.len());
    for (idx, &(u, v)) in g.edges.iter().enumerate() {
        let w = n + idx;
        edges.push((u, w));
        edges.push((v, w));
        midpoints.push(w);
    }
    (
        Graph {
            n: n + g.edges.len(),
            edges,
        },
        midpoints,
    )
}

/// A vertex of `G_k` viewed as a subset of the ground set `0..k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexLabel {
    Singleton(usize),
    Doubleton(usize, usize),
}

impl VertexLabel {
    pub fn contains(&self, i: usize) -> bool {
        match *self {
            VertexLabel::Singleton(a) => a == i,
            VertexLabel::Doubleton(a, b) => a == i || b == i,
        }
    }
}

/// Number of unordered pairs over a `k`-element set.
pub fn pair_count(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// Index of pair `(i, j)`, `i < j`, in lexicographic order over `0..k`.
pub fn pair_index(k: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < k);
    i * k - i * (i + 1) / 2 + (j - i - 1)
}

/// `G_k`: the complete graph `K_k` with every edge subdivided once.
///
/// Vertices `0..k` are the original vertices `v_i`; vertex `k + p` is the
/// midpoint of the `p`-th pair in lexicographic order. Pair `p` owns edges
/// `2p` (`v_i - w_ij`) and `2p + 1` (`v_j - w_ij`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GkGraph {
    k: usize,
    graph: Graph,
    labels: Vec<VertexLabel>,
    pairs: Vec<(usize, usize)>,
}

impl GkGraph {
    pub fn new(k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::KTooSmall(k));
        }
        let (graph, _) = subdivide_all_edges(&complete_graph(k));
        let pairs: Vec<_> = complete_graph(k).edges().to_vec();
        let labels = (0..k)
            .map(VertexLabel::Singleton)
            .chain(pairs.iter().map(|&(i, j)| VertexLabel::Doubleton(i, j)))
            .collect();
        Ok(GkGraph {
            k,
            graph,
            labels,
            pairs,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    /// The pairs `(i, j)` of `K_k` in lexicographic order.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Vertex id of the original vertex `v_i`.
    pub fn singleton(&self, i: usize) -> usize {
        debug_assert!(i < self.k);
        i
    }

    /// Vertex id of the subdivision vertex `w_ij`.
    pub fn doubleton(&self, i: usize, j: usize) -> usize {
        let (i, j) = (i.min(j), i.max(j));
        self.k + pair_index(self.k, i, j)
    }

    /// Edge indices `[v_i - w_ij, w_ij - v_j]` of the path replacing pair `(i, j)`.
    pub fn pair_path(&self, i: usize, j: usize) -> [usize; 2] {
        let (i, j) = (i.min(j), i.max(j));
        let p = pair_index(self.k, i, j);
        [2 * p, 2 * p + 1]
    }

    /// Checks that `labels` describe `G_k` under the standard vertex numbering.
    pub fn check_labels(&self, labels: &[VertexLabel]) -> Result<()> {
        if labels.len() != self.labels.len() {
            return Err(Error::Misaligned {
                field: "labels",
                expected: self.labels.len(),
                found: labels.len(),
            });
        }
        for (vertex, (got, want)) in labels.iter().zip(&self.labels).enumerate() {
            if got != want {
                return Err(Error::BadLabel {
                    vertex,
                    detail: format!("expected {want:?}, found {got:?}"),
                });
            }
        }
        Ok(())
    }
}

/// Builds `G_k` for `k >= 2`.
pub fn build_gk(k: usize) -> Result<GkGraph> {
    GkGraph::new(k)
}
