use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::book::BookEmbedding;
use crate::error::{Error, Result};
use crate::graph::GkGraph;

/// An unordered pair of pages, stored with `lo <= hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PagePair {
    pub lo: usize,
    pub hi: usize,
}

impl PagePair {
    pub fn new(a: usize, b: usize) -> Self {
        PagePair {
            lo: a.min(b),
            hi: a.max(b),
        }
    }

    pub fn contains(&self, page: usize) -> bool {
        self.lo == page || self.hi == page
    }
}

/// A coloring of the edges of `K_k`, indexed by lexicographic pair index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    k: usize,
    colors: Vec<PagePair>,
}

impl EdgeColoring {
    /// `colors` must hold one entry per pair of `0..k`, in lexicographic order.
    pub fn new(k: usize, colors: Vec<PagePair>) -> Result<Self> {
        let expected = crate::graph::pair_count(k);
        if colors.len() != expected {
            return Err(Error::Misaligned {
                field: "colors",
                expected,
                found: colors.len(),
            });
        }
        Ok(EdgeColoring { k, colors })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn colors(&self) -> &[PagePair] {
        &self.colors
    }

    pub fn color(&self, i: usize, j: usize) -> PagePair {
        let (i, j) = (i.min(j), i.max(j));
        self.colors[crate::graph::pair_index(self.k, i, j)]
    }

    pub fn distinct_colors(&self) -> BTreeSet<PagePair> {
        self.colors.iter().copied().collect()
    }

    pub fn colors_used(&self) -> usize {
        self.distinct_colors().len()
    }
}

/// Colors each edge `v_i v_j` of `K_k` by the pages of its two-edge path in `G_k`.
///
/// A path lying on a single page `a` gets `{a, a'}` with `a'` the smallest
/// other page id; with only one page in use every edge is `{0, 0}`. The
/// embedding does not need to be valid.
pub fn page_pair_coloring(gk: &GkGraph, be: &BookEmbedding) -> Result<EdgeColoring> {
    be.check_alignment(gk.graph())?;
    let pages = be.edge_pages();
    let multi = be.pages_used() >= 2;
    let colors = gk
        .pairs()
        .iter()
        .map(|&(i, j)| {
            let [e0, e1] = gk.pair_path(i, j);
            let (a, b) = (pages[e0], pages[e1]);
            if a != b {
                PagePair::new(a, b)
            } else if multi {
                PagePair::new(a, if a == 0 { 1 } else { 0 })
            } else {
                PagePair::new(0, 0)
            }
        })
        .collect();
    EdgeColoring::new(gk.k(), colors)
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MonochromaticClique {
    /// Sorted ascending.
    pub vertices: Vec<usize>,
    pub color: PagePair,
}

/// Finds `size` vertices of `K_k` whose connecting edges all share one color.
///
/// Each color class is searched separately with a pivoting Bron-Kerbosch
/// variant that stops at the target size. Among the classes that contain
/// such a clique, the least `(vertices, color)` is returned.
pub fn find_monochromatic_clique(
    coloring: &EdgeColoring,
    size: usize,
) -> Result<Option<MonochromaticClique>> {
    if size < 2 {
        return Err(Error::InvalidCliqueSize(size));
    }
    let k = coloring.k();
    if size > k {
        return Ok(None);
    }
    let classes: Vec<PagePair> = coloring.distinct_colors().into_iter().collect();
    let found = classes
        .par_iter()
        .filter_map(|&color| {
            let mut adj = vec![vec![false; k]; k];
            for (p, &(i, j)) in pairs(k).iter().enumerate() {
                if coloring.colors()[p] == color {
                    adj[i][j] = true;
                    adj[j][i] = true;
                }
            }
            clique_of_size(&adj, size).map(|vertices| MonochromaticClique { vertices, color })
        })
        .min();
    Ok(found)
}

fn pairs(k: usize) -> Vec<(usize, usize)> {
    (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
        .collect()
}

/// Some clique with exactly `size` vertices, sorted, if one exists.
fn clique_of_size(adj: &[Vec<bool>], size: usize) -> Option<Vec<usize>> {
    let n = adj.len();
    let degree: Vec<usize> = adj
        .iter()
        .map(|row| row.iter().filter(|&&b| b).count())
        .collect();
    // vertices of degree < size - 1 cannot be in the clique
    let mut candidates: Vec<usize> = (0..n).filter(|&v| degree[v] + 1 >= size).collect();
    candidates.sort_by_key(|&v| (std::cmp::Reverse(degree[v]), v));
    let mut clique = Vec::new();
    if extend(adj, &mut clique, candidates, Vec::new(), size) {
        clique.truncate(size);
        clique.sort_unstable();
        Some(clique)
    } else {
        None
    }
}

fn extend(
    adj: &[Vec<bool>],
    clique: &mut Vec<usize>,
    mut cand: Vec<usize>,
    mut excluded: Vec<usize>,
    size: usize,
) -> bool {
    if clique.len() >= size {
        return true;
    }
    if clique.len() + cand.len() < size {
        return false;
    }
    // pivot maximizing coverage of the candidate set
    let pivot = cand
        .iter()
        .chain(excluded.iter())
        .copied()
        .max_by_key(|&u| {
            (
                cand.iter().filter(|&&v| adj[u][v]).count(),
                std::cmp::Reverse(u),
            )
        })
        .expect("candidates non-empty");
    let branch: Vec<usize> = cand.iter().copied().filter(|&v| !adj[pivot][v]).collect();
    for v in branch {
        let next_cand: Vec<usize> = cand.iter().copied().filter(|&w| adj[v][w]).collect();
        let next_excl: Vec<usize> = excluded.iter().copied().filter(|&w| adj[v][w]).collect();
        clique.push(v);
        if extend(adj, clique, next_cand, next_excl, size) {
            return true;
        }
        clique.pop();
        cand.retain(|&w| w != v);
        excluded.push(v);
        if clique.len() + cand.len() < size {
            return false;
        }
    }
    false
}
