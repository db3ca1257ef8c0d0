//! Book embeddings: a circular vertex order plus a page per edge.
//!
//! With vertices in convex position, two straight chords cross exactly when
//! their endpoints alternate around the circle, so validity is a purely
//! combinatorial check. [`embed_on_circle`] realizes an embedding on the
//! integer parabola so the same question can be put to the exact geometry
//! checker.

mod solver;

pub use solver::{
    book_thickness_at_most, book_thickness_exact, BookThickness, BtCertificate, BtOutcome,
    LowerBoundReason, DEFAULT_BUDGET,
};

use crate::error::{Error, Result};
use crate::geom::{LayeredDrawing, Point};
use crate::graph::Graph;
use crate::report::{normalize_groups, Conflict, ConflictKind, Entity, ValidationReport};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BookEmbedding {
    order: Vec<usize>,
    edge_pages: Vec<usize>,
    pages_used: usize,
}

impl BookEmbedding {
    /// `order` lists the vertices clockwise and must be a permutation of
    /// `0..order.len()`. Page ids are normalized to `0..pages_used`.
    pub fn new(order: Vec<usize>, edge_pages: &[usize]) -> Result<Self> {
        positions_of(&order)?;
        let (edge_pages, pages_used) = normalize_groups(edge_pages);
        Ok(BookEmbedding {
            order,
            edge_pages,
            pages_used,
        })
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn edge_pages(&self) -> &[usize] {
        &self.edge_pages
    }

    pub fn pages_used(&self) -> usize {
        self.pages_used
    }

    /// `positions()[v]` is the index of `v` in the circular order.
    pub fn positions(&self) -> Vec<usize> {
        positions_of(&self.order).expect("order checked on construction")
    }

    pub(crate) fn check_alignment(&self, g: &Graph) -> Result<()> {
        if self.order.len() != g.vertex_count() {
            return Err(Error::Misaligned {
                field: "order",
                expected: g.vertex_count(),
                found: self.order.len(),
            });
        }
        if self.edge_pages.len() != g.edge_count() {
            return Err(Error::Misaligned {
                field: "edge_pages",
                expected: g.edge_count(),
                found: self.edge_pages.len(),
            });
        }
        Ok(())
    }
}

fn positions_of(order: &[usize]) -> Result<Vec<usize>> {
    let n = order.len();
    let mut pos = vec![usize::MAX; n];
    for (t, &v) in order.iter().enumerate() {
        if v >= n {
            return Err(Error::NotAPermutation {
                n,
                detail: format!("entry {v} at index {t} is out of range"),
            });
        }
        if pos[v] != usize::MAX {
            return Err(Error::NotAPermutation {
                n,
                detail: format!("vertex {v} appears twice"),
            });
        }
        pos[v] = t;
    }
    Ok(pos)
}

/// Chord interleaving given spine positions. Chords sharing an endpoint never interleave.
pub(crate) fn interleave(pos: &[usize], e1: (usize, usize), e2: (usize, usize)) -> bool {
    let (a, b) = ordered(pos[e1.0], pos[e1.1]);
    let (c, d) = ordered(pos[e2.0], pos[e2.1]);
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

fn ordered(x: usize, y: usize) -> (usize, usize) {
    if x < y {
        (x, y)
    } else {
        (y, x)
    }
}

/// Whether the endpoints of `e1` and `e2` strictly alternate around `order`.
pub fn chords_interleave(order: &[usize], e1: (usize, usize), e2: (usize, usize)) -> Result<bool> {
    if ordered(e1.0, e1.1) == ordered(e2.0, e2.1) {
        return Err(Error::IdenticalChords(e1, e2));
    }
    let lookup = |v: usize| {
        order
            .iter()
            .position(|&x| x == v)
            .ok_or(Error::UnknownVertex { vertex: v })
    };
    let pos_of =
        |(u, v): (usize, usize)| -> Result<(usize, usize)> { Ok((lookup(u)?, lookup(v)?)) };
    let (p1, p2) = (pos_of(e1)?, pos_of(e2)?);
    let (a, b) = ordered(p1.0, p1.1);
    let (c, d) = ordered(p2.0, p2.1);
    Ok((a < c && c < b && b < d) || (c < a && a < d && d < b))
}

/// Stack scan over chords sorted by left end. Returns `false` at the first interleaving pair.
fn page_is_noncrossing(chords: &mut [(usize, usize)]) -> bool {
    chords.sort_unstable_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1)));
    let mut open: Vec<usize> = Vec::new();
    for &(l, r) in chords.iter() {
        while open.last().is_some_and(|&top| top <= l) {
            open.pop();
        }
        if open.last().is_some_and(|&top| top < r) {
            return false;
        }
        open.push(r);
    }
    true
}

/// Reports every pair of same-page edges whose chords interleave.
pub fn validate_book_embedding(g: &Graph, be: &BookEmbedding) -> Result<ValidationReport> {
    be.check_alignment(g)?;
    let pos = be.positions();
    let mut per_page = vec![Vec::new(); be.pages_used()];
    for (e, &page) in be.edge_pages().iter().enumerate() {
        per_page[page].push(e);
    }

    let mut conflicts = Vec::new();
    for (page, members) in per_page.iter().enumerate() {
        let mut chords: Vec<_> = members
            .iter()
            .map(|&e| {
                let (u, v) = g.edge(e);
                ordered(pos[u], pos[v])
            })
            .collect();
        if page_is_noncrossing(&mut chords) {
            continue;
        }
        for (i, &e) in members.iter().enumerate() {
            for &f in &members[i + 1..] {
                if interleave(&pos, g.edge(e), g.edge(f)) {
                    conflicts.push(Conflict::new(
                        Entity::Edge(e),
                        Entity::Edge(f),
                        Some(page),
                        ConflictKind::ProperCrossing,
                    ));
                }
            }
        }
    }
    Ok(ValidationReport::from_conflicts(conflicts, be.pages_used()))
}

/// Places the vertex at circular position `t` on the point `(t, t^2)`; pages become layers.
pub fn embed_on_circle(g: &Graph, be: &BookEmbedding) -> Result<LayeredDrawing> {
    be.check_alignment(g)?;
    let positions = be
        .positions()
        .into_iter()
        .map(|t| {
            let t = t as i64;
            Point::new(t, t * t)
        })
        .collect();
    Ok(LayeredDrawing::new(positions, be.edge_pages()))
}
