//! Exact straight-line geometry: predicates and the layered-drawing checker.

mod drawing;
mod predicates;

pub use drawing::{validate_layered_drawing, LayeredDrawing};
pub use predicates::{
    in_relative_interior, orientation, segments_conflict, Orientation, Point, Segment,
};
