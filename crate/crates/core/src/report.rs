//! Validation results shared by the drawing and book checkers.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConflictKind {
    /// Interiors cross at a single point.
    ProperCrossing,
    /// Collinear segments sharing more than one point.
    CollinearOverlap,
    /// An endpoint of one segment lies in the relative interior of the other.
    EndpointInInterior,
    /// A vertex position lies in the relative interior of a non-incident edge.
    VertexOnEdge,
    /// Two distinct vertices (or non-shared endpoints) occupy the same point.
    CoincidentVertices,
}

impl fmt::Display for ConflictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ConflictKind::ProperCrossing => "proper crossing",
            ConflictKind::CollinearOverlap => "collinear overlap",
            ConflictKind::EndpointInInterior => "endpoint in interior",
            ConflictKind::VertexOnEdge => "vertex on edge",
            ConflictKind::CoincidentVertices => "coincident vertices",
        };
        f.write_str(s)
    }
}

/// The thing on either side of a conflict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Entity {
    Edge(usize),
    Vertex(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Conflict {
    pub first: Entity,
    pub second: Entity,
    /// Layer or page the conflict lives on; `None` for coincident vertices.
    pub group: Option<usize>,
    pub kind: ConflictKind,
}

impl Conflict {
    pub(crate) fn new(a: Entity, b: Entity, group: Option<usize>, kind: ConflictKind) -> Self {
        let (first, second) = if a <= b { (a, b) } else { (b, a) };
        Conflict {
            first,
            second,
            group,
            kind,
        }
    }
}

impl fmt::Display for Conflict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = |e: Entity| match e {
            Entity::Edge(i) => format!("edge {i}"),
            Entity::Vertex(v) => format!("vertex {v}"),
        };
        write!(
            f,
            "{} / {}: {}",
            name(self.first),
            name(self.second),
            self.kind
        )?;
        if let Some(g) = self.group {
            write!(f, " (group {g})")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub conflicts: Vec<Conflict>,
    pub layers_used: usize,
}

impl ValidationReport {
    /// Sorts conflicts canonically and derives `valid`.
    pub(crate) fn from_conflicts(mut conflicts: Vec<Conflict>, layers_used: usize) -> Self {
        conflicts.sort_unstable();
        conflicts.dedup();
        ValidationReport {
            valid: conflicts.is_empty(),
            conflicts,
            layers_used,
        }
    }
}

/// Relabels group ids (layers, pages) to `0..count` preserving their order.
pub(crate) fn normalize_groups(ids: &[usize]) -> (Vec<usize>, usize) {
    let mut distinct: Vec<usize> = ids.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let mapped = ids
        .iter()
        .map(|id| distinct.binary_search(id).expect("id present"))
        .collect();
    (mapped, distinct.len())
}
