//! Exact book thickness for small graphs.
//!
//! Circular orders are enumerated with vertex 0 fixed in front and the
//! reflection removed by requiring `order[1] < order[n - 1]`. Orders are
//! built one vertex at a time; after each placement the chords already
//! determined by the prefix must admit a page assignment, otherwise the
//! whole subtree is cut.
//!
//! A chord with only one endpoint placed already crosses every closed chord
//! that strictly surrounds that endpoint, since its other end will land
//! after the prefix. Those conflicts join the feasibility check.

use crate::book::BookEmbedding;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::separation::is_planar;

/// Node-expansion limit used when callers do not pick one.
pub const DEFAULT_BUDGET: u64 = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BtOutcome {
    Yes(BookEmbedding),
    No,
    /// The node budget ran out before the search finished.
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LowerBoundReason {
    /// Nonplanar graphs need at least three pages.
    PlanarityViolation,
    /// A page holds at most `2n - 3` edges.
    OuterplanarEdgeBound,
    /// The search with one page fewer came back empty.
    ExhaustiveSearch,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BtCertificate {
    UpperBound(BookEmbedding),
    LowerBound(LowerBoundReason),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BookThickness {
    /// `certificates` holds the witnessing embedding and, when `value >= 1`,
    /// the reason no smaller value works.
    Exact {
        value: usize,
        certificates: Vec<BtCertificate>,
    },
    /// Undecided within `max_p` pages or within the budget; the book
    /// thickness is at least `lower_bound`.
    Unknown { lower_bound: usize },
}

/// Colors the vertices of a conflict graph with at most `p` colors.
///
/// Bipartiteness for `p = 2`; for `p >= 3`, backtracking over vertices in
/// decreasing degree order with new colors opened one at a time.
pub(crate) fn color_conflicts(adj: &[Vec<usize>], p: usize) -> Option<Vec<usize>> {
    let n = adj.len();
    let has_edges = adj.iter().any(|a| !a.is_empty());
    if !has_edges {
        return Some(vec![0; n]);
    }
    match p {
        0 | 1 => None,
        2 => two_color(adj),
        _ => {
            let mut order: Vec<usize> = (0..n).collect();
            order.sort_by_key(|&v| (std::cmp::Reverse(adj[v].len()), v));
            let mut color = vec![usize::MAX; n];
            backtrack_color(adj, &order, 0, 0, p, &mut color).then_some(color)
        }
    }
}

fn two_color(adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    let mut color = vec![usize::MAX; adj.len()];
    let mut stack = Vec::new();
    for root in 0..adj.len() {
        if color[root] != usize::MAX {
            continue;
        }
        color[root] = 0;
        stack.push(root);
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if color[w] == usize::MAX {
                    color[w] = 1 - color[u];
                    stack.push(w);
                } else if color[w] == color[u] {
                    return None;
                }
            }
        }
    }
    Some(color)
}

fn backtrack_color(
    adj: &[Vec<usize>],
    order: &[usize],
    depth: usize,
    opened: usize,
    p: usize,
    color: &mut [usize],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    let limit = (opened + 1).min(p);
    for c in 0..limit {
        if adj[v].iter().any(|&w| color[w] == c) {
            continue;
        }
        color[v] = c;
        if backtrack_color(adj, order, depth + 1, opened.max(c + 1), p, color) {
            return true;
        }
    }
    color[v] = usize::MAX;
    false
}

struct OrderSearch<'a> {
    n: usize,
    edges: &'a [(usize, usize)],
    pages: usize,
    budget: u64,
    nodes: u64,
    pos: Vec<usize>,
    order: Vec<usize>,
    used: Vec<bool>,
}

enum Step {
    Found {
        order: Vec<usize>,
        pages: Vec<usize>,
    },
    Exhausted,
    OutOfBudget,
}

impl OrderSearch<'_> {
    /// Page assignment for the chords fixed by the current prefix, if one exists.
    /// The returned vector is indexed by edge and only meaningful for closed edges.
    fn prefix_assignment(&self) -> Option<Vec<usize>> {
        const UNPLACED: usize = usize::MAX;
        // closed chords as (edge, lo, hi); open chords as (edge, placed endpoint position)
        let mut closed = Vec::new();
        let mut open = Vec::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            match (self.pos[u], self.pos[v]) {
                (UNPLACED, UNPLACED) => {}
                (a, UNPLACED) | (UNPLACED, a) => open.push((e, a)),
                (a, b) => closed.push((e, a.min(b), a.max(b))),
            }
        }
        let total = closed.len() + open.len();
        let mut adj = vec![Vec::new(); total];
        for i in 0..closed.len() {
            let (_, a, b) = closed[i];
            for j in i + 1..closed.len() {
                let (_, c, d) = closed[j];
                if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                    adj[i].push(j);
                    adj[j].push(i);
                }
            }
            for (j, &(_, x)) in open.iter().enumerate() {
                if a < x && x < b {
                    adj[i].push(closed.len() + j);
                    adj[closed.len() + j].push(i);
                }
            }
        }
        let coloring = color_conflicts(&adj, self.pages)?;
        let mut pages = vec![0; self.edges.len()];
        for (i, &(e, _, _)) in closed.iter().enumerate() {
            pages[e] = coloring[i];
        }
        Some(pages)
    }

    /// Reflection symmetry: placing `v` next must leave a possible last vertex above `order[1]`.
    fn admits(&self, v: usize) -> bool {
        if self.order.len() < 2 {
            return true;
        }
        match (0..self.n).rev().find(|&w| !self.used[w] && w != v) {
            Some(w) => w > self.order[1],
            None => v > self.order[1],
        }
    }

    fn place(&mut self, v: usize) {
        self.pos[v] = self.order.len();
        self.order.push(v);
        self.used[v] = true;
    }

    fn unplace(&mut self, v: usize) {
        self.order.pop();
        self.pos[v] = usize::MAX;
        self.used[v] = false;
    }

    fn descend(&mut self) -> Step {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Step::OutOfBudget;
        }
        let Some(pages) = self.prefix_assignment() else {
            return Step::Exhausted;
        };
        if self.order.len() == self.n {
            return Step::Found {
                order: self.order.clone(),
                pages,
            };
        }
        for v in 0..self.n {
            if self.used[v] {
                continue;
            }
            if !self.admits(v) {
                continue;
            }
            self.place(v);
            let step = self.descend();
            self.unplace(v);
            match step {
                Step::Exhausted => {}
                other => return other,
            }
        }
        Step::Exhausted
    }
}

/// Decides whether `g` has a book embedding with at most `p` pages.
///
/// Deterministic: the first embedding found in lexicographic order of
/// canonical circular orders is returned, and `budget` counts search nodes.
pub fn book_thickness_at_most(g: &Graph, p: usize, budget: u64) -> Result<BtOutcome> {
    if p == 0 {
        return Err(Error::ZeroPages);
    }
    let n = g.vertex_count();
    if g.edge_count() == 0 || n <= 3 {
        let order: Vec<usize> = (0..n).collect();
        let pages = vec![0; g.edge_count()];
        return Ok(BtOutcome::Yes(BookEmbedding::new(order, &pages)?));
    }
    let mut search = OrderSearch {
        n,
        edges: g.edges(),
        pages: p,
        budget,
        nodes: 0,
        pos: vec![usize::MAX; n],
        order: Vec::with_capacity(n),
        used: vec![false; n],
    };
    search.place(0);
    Ok(match search.descend() {
        Step::Found { order, pages } => BtOutcome::Yes(BookEmbedding::new(order, &pages)?),
        Step::Exhausted => BtOutcome::No,
        Step::OutOfBudget => BtOutcome::Unknown,
    })
}

/// `ceil(m / (2n - 3))`: each page is outerplanar.
pub fn outerplanar_lower_bound(g: &Graph) -> usize {
    let (n, m) = (g.vertex_count(), g.edge_count());
    if m == 0 {
        return 0;
    }
    let per_page = (2 * n).saturating_sub(3).max(1);
    m.div_ceil(per_page)
}

/// Smallest page count admitting a book embedding, searched up to `max_p`.
///
/// An edgeless graph has book thickness 0.
pub fn book_thickness_exact(g: &Graph, max_p: usize, budget: u64) -> Result<BookThickness> {
    if max_p == 0 {
        return Err(Error::ZeroPages);
    }
    if g.edge_count() == 0 {
        let order = (0..g.vertex_count()).collect();
        return Ok(BookThickness::Exact {
            value: 0,
            certificates: vec![BtCertificate::UpperBound(BookEmbedding::new(order, &[])?)],
        });
    }
    let outer = outerplanar_lower_bound(g);
    let planarity = if is_planar(g) { 1 } else { 3 };
    let start = outer.max(planarity);

    for p in start..=max_p {
        match book_thickness_at_most(g, p, budget)? {
            BtOutcome::Yes(embedding) => {
                let reason = if p > start {
                    LowerBoundReason::ExhaustiveSearch
                } else if p == planarity && planarity > outer {
                    LowerBoundReason::PlanarityViolation
                } else {
                    LowerBoundReason::OuterplanarEdgeBound
                };
                return Ok(BookThickness::Exact {
                    value: p,
                    certificates: vec![
                        BtCertificate::UpperBound(embedding),
                        BtCertificate::LowerBound(reason),
                    ],
                });
            }
            BtOutcome::No => {}
            BtOutcome::Unknown => return Ok(BookThickness::Unknown { lower_bound: p }),
        }
    }
    Ok(BookThickness::Unknown {
        lower_bound: (max_p + 1).max(start),
    })
}
