//! Certificates for geometric thickness and book thickness of the subdivided
//! complete graphs `G_k`.
//!
//! * [`graph`] builds `K_k` and `G_k` with a fixed vertex and edge numbering.
//! * [`geom`] checks layered straight-line drawings with exact integer predicates.
//! * [`layouts`] constructs the two-layer drawing of `G_k` and an
//!   `O(sqrt k)`-page book embedding.
//! * [`book`] checks book embeddings and computes book thickness of small graphs.
//! * [`separation`] derives the page-pair coloring of `K_k` from a book
//!   embedding of `G_k` and audits it for monochromatic `K_5`s.
//! * [`format`] holds the JSON file formats; [`render`] emits SVG.

pub mod book;
pub mod error;
pub mod format;
pub mod geom;
pub mod graph;
pub mod layouts;
pub mod render;
pub mod report;
pub mod separation;

pub use book::{
    book_thickness_at_most, book_thickness_exact, chords_interleave, embed_on_circle,
    validate_book_embedding, BookEmbedding, BookThickness, BtCertificate, BtOutcome,
    LowerBoundReason, DEFAULT_BUDGET,
};
pub use error::{Error, Result};
pub use geom::{
    orientation, segments_conflict, validate_layered_drawing, LayeredDrawing, Orientation, Point,
    Segment,
};
pub use graph::{build_gk, complete_graph, subdivide_all_edges, GkGraph, Graph, VertexLabel};
pub use layouts::{sqrt_book_layout, theorem1_layout, BlockScheme};
pub use render::{render_svg, RenderStyle};
pub use report::{Conflict, ConflictKind, Entity, ValidationReport};
pub use separation::{
    find_monochromatic_clique, is_planar, page_pair_coloring, separation_audit, AuditReport,
    EdgeColoring, MonochromaticClique, PagePair, Verdict,
};
