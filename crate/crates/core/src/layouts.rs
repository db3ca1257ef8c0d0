//! Two explicit constructions for `G_k`: a two-layer straight-line drawing
//! and a book embedding with `O(sqrt k)` pages.

use std::cmp::Reverse;
use std::ops::Range;

use crate::book::BookEmbedding;
use crate::error::{Error, Result};
use crate::geom::{LayeredDrawing, Point};
use crate::graph::GkGraph;

/// Two-layer drawing of `G_k` on the integer grid.
///
/// `v_i` sits at `(i, i + 1)` and the midpoint of pair `(i, j)` at
/// `(j + 1, i)`. The half-edge to `v_i` goes on layer 0 and the half-edge to
/// `v_j` on layer 1. Every layer-0 edge in row `i` ends at `v_i` and every
/// layer-1 edge in column `j + 1` ends at `v_j`, so neither layer has a
/// crossing. Valid for every `k >= 2`; it only certifies geometric
/// thickness 2 for `k >= 5`, where `G_k` is nonplanar.
pub fn theorem1_layout(k: usize) -> Result<LayeredDrawing> {
    let gk = GkGraph::new(k)?;
    let mut positions: Vec<Point> = (0..k as i64).map(|i| Point::new(i, i + 1)).collect();
    positions.extend(
        gk.pairs()
            .iter()
            .map(|&(i, j)| Point::new(j as i64 + 1, i as i64)),
    );
    let layers: Vec<usize> = (0..gk.graph().edge_count()).map(|e| e % 2).collect();
    Ok(LayeredDrawing::new(positions, &layers))
}

/// A partition of `0..k` into consecutive blocks of at most `block_size` vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockScheme {
    k: usize,
    block_size: usize,
}

impl BlockScheme {
    pub fn new(k: usize, block_size: usize) -> Result<Self> {
        if block_size == 0 || block_size > k {
            return Err(Error::InvalidBlockSize { block_size, k });
        }
        Ok(BlockScheme { k, block_size })
    }

    /// Block size `ceil(sqrt k)`.
    pub fn balanced(k: usize) -> Result<Self> {
        let mut b = 1;
        while b * b < k {
            b += 1;
        }
        Self::new(k, b)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn block_size(&self) -> usize {
        self.block_size
    }

    pub fn block_count(&self) -> usize {
        self.k.div_ceil(self.block_size)
    }

    pub fn blocks(&self) -> Vec<Range<usize>> {
        (0..self.block_count())
            .map(|t| t * self.block_size..((t + 1) * self.block_size).min(self.k))
            .collect()
    }

    pub fn block_of(&self, v: usize) -> usize {
        v / self.block_size
    }

    pub fn slot(&self, v: usize) -> usize {
        v % self.block_size
    }

    /// Upper bound on pages used by [`sqrt_book_layout`]: one per slot plus one per block.
    pub fn page_bound(&self) -> usize {
        self.block_size + self.block_count()
    }
}

/// Book embedding of `G_k` with at most `b + ceil(k / b)` pages.
///
/// The original vertices are cut into blocks of `b` consecutive indices
/// (default `b = ceil(sqrt k)`). The midpoint `w_uv`, `u < v`, is a transfer
/// point homed next to `u`'s block. Around the circle each block lists its
/// vertices and then its transfer points. The half-edge `u - w_uv` goes on
/// the page of `u`'s slot within its block (pages `0..b`, reused by every
/// block); the half-edge `w_uv - v` goes on the page of `u`'s block (pages
/// `b..b + m`).
///
/// Transfer points of a block are ordered so that the far endpoint `v`
/// moves backwards around the circle, measured clockwise from the end of
/// the block: partners in the same block come first, then partners in the
/// last block, down to the next block. Long edges of one block page are
/// then nested or share `v`.
pub fn sqrt_book_layout(k: usize, block_size: Option<usize>) -> Result<BookEmbedding> {
    let gk = GkGraph::new(k)?;
    let scheme = match block_size {
        Some(b) => BlockScheme::new(k, b)?,
        None => BlockScheme::balanced(k)?,
    };
    let b = scheme.block_size();

    let mut order = Vec::with_capacity(gk.graph().vertex_count());
    let mut homed: Vec<Vec<(usize, usize)>> = vec![Vec::new(); scheme.block_count()];
    for &(u, v) in gk.pairs() {
        homed[scheme.block_of(u)].push((u, v));
    }
    for (t, range) in scheme.blocks().into_iter().enumerate() {
        order.extend(range.map(|v| gk.singleton(v)));
        let transfers = &mut homed[t];
        // clockwise distance from the end of block t: later blocks by index, own block last
        let distance = |v: usize| if scheme.block_of(v) == t { v + k } else { v };
        transfers.sort_by_key(|&(u, v)| (Reverse(distance(v)), u, v));
        order.extend(transfers.iter().map(|&(u, v)| gk.doubleton(u, v)));
    }

    let mut pages = vec![0; gk.graph().edge_count()];
    for &(u, v) in gk.pairs() {
        let [to_u, to_v] = gk.pair_path(u, v);
        pages[to_u] = scheme.slot(u);
        pages[to_v] = b + scheme.block_of(u);
    }
    BookEmbedding::new(order, &pages)
}
