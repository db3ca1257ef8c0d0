//! The page-pair argument: a book embedding of `G_k` with few pages colors
//! the edges of `K_k` by the pages of each two-edge path, and a
//! monochromatic `K_5` in that coloring would give a two-page embedding of
//! the nonplanar `G_5`.

mod audit;
mod coloring;
mod planarity;

pub use audit::{separation_audit, AuditReport, SubEmbedding, Verdict};
pub use coloring::{
    find_monochromatic_clique, page_pair_coloring, EdgeColoring, MonochromaticClique, PagePair,
};
pub use planarity::is_planar;
