use rayon::prelude::*;

use super::predicates::{in_relative_interior, segments_conflict, Point, Segment};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::report::{normalize_groups, Conflict, ConflictKind, Entity, ValidationReport};

/// A straight-line drawing with every edge assigned to a layer.
///
/// Layer ids are normalized to `0..layers_used` on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayeredDrawing {
    positions: Vec<Point>,
    edge_layers: Vec<usize>,
    layers_used: usize,
}

impl LayeredDrawing {
    pub fn new(positions: Vec<Point>, edge_layers: &[usize]) -> Self {
        let (edge_layers, layers_used) = normalize_groups(edge_layers);
        LayeredDrawing {
            positions,
            edge_layers,
            layers_used,
        }
    }

    pub fn positions(&self) -> &[Point] {
        &self.positions
    }

    pub fn edge_layers(&self) -> &[usize] {
        &self.edge_layers
    }

    pub fn layers_used(&self) -> usize {
        self.layers_used
    }

    pub(crate) fn check_alignment(&self, g: &Graph) -> Result<()> {
        if self.positions.len() != g.vertex_count() {
            return Err(Error::Misaligned {
                field: "positions",
                expected: g.vertex_count(),
                found: self.positions.len(),
            });
        }
        if self.edge_layers.len() != g.edge_count() {
            return Err(Error::Misaligned {
                field: "edge_layers",
                expected: g.edge_count(),
                found: self.edge_layers.len(),
            });
        }
        Ok(())
    }
}

/// Checks a layered straight-line drawing.
///
/// Reports coincident vertex positions, vertices lying inside non-incident
/// edges of any layer, and every conflicting pair of same-layer edges.
pub fn validate_layered_drawing(g: &Graph, d: &LayeredDrawing) -> Result<ValidationReport> {
    d.check_alignment(g)?;
    let pos = d.positions();
    let layers = d.edge_layers();
    let mut conflicts = Vec::new();

    let mut by_point: Vec<usize> = (0..pos.len()).collect();
    by_point.sort_by_key(|&v| (pos[v], v));
    for run in by_point.chunk_by(|&a, &b| pos[a] == pos[b]) {
        for (i, &u) in run.iter().enumerate() {
            for &v in &run[i + 1..] {
                conflicts.push(Conflict::new(
                    Entity::Vertex(u),
                    Entity::Vertex(v),
                    None,
                    ConflictKind::CoincidentVertices,
                ));
            }
        }
    }

    // Zero-length edges are already covered by the coincident-vertex check.
    let segments: Vec<Option<Segment>> = g
        .edges()
        .iter()
        .map(|&(u, v)| (pos[u] != pos[v]).then(|| Segment::new(pos[u], pos[v])))
        .collect();

    let vertex_hits: Vec<Conflict> = segments
        .par_iter()
        .enumerate()
        .flat_map_iter(|(e, seg)| {
            let (u, v) = g.edge(e);
            let seg = *seg;
            (0..pos.len()).filter_map(move |w| {
                let seg = seg?;
                (w != u && w != v && in_relative_interior(pos[w], &seg)).then(|| {
                    Conflict::new(
                        Entity::Edge(e),
                        Entity::Vertex(w),
                        Some(layers[e]),
                        ConflictKind::VertexOnEdge,
                    )
                })
            })
        })
        .collect();
    conflicts.extend(vertex_hits);

    let mut per_layer = vec![Vec::new(); d.layers_used()];
    for (e, &layer) in layers.iter().enumerate() {
        if segments[e].is_some() {
            per_layer[layer].push(e);
        }
    }
    let segments = &segments;
    for (layer, members) in per_layer.iter().enumerate() {
        let pairs: Vec<Conflict> = (0..members.len())
            .into_par_iter()
            .flat_map_iter(|i| {
                let e = members[i];
                members[i + 1..].iter().filter_map(move |&f| {
                    let (s, t) = (segments[e]?, segments[f]?);
                    let (a, b) = g.edge(e);
                    let (c, dd) = g.edge(f);
                    let shared: Vec<Point> = [a, b]
                        .into_iter()
                        .filter(|&x| x == c || x == dd)
                        .map(|x| pos[x])
                        .collect();
                    let kind = segments_conflict(&s, &t, &shared).expect("non-degenerate")?;
                    Some(Conflict::new(
                        Entity::Edge(e),
                        Entity::Edge(f),
                        Some(layer),
                        kind,
                    ))
                })
            })
            .collect();
        conflicts.extend(pairs);
    }

    Ok(ValidationReport::from_conflicts(conflicts, d.layers_used()))
}
