//! SVG output for layered drawings.
//!
//! Output is a pure function of its inputs: integer coordinates, fixed
//! attribute order, no timestamps.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::error::Result;
use crate::geom::{validate_layered_drawing, LayeredDrawing};
use crate::graph::Graph;
use crate::report::Entity;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderStyle {
    /// Stroke color per layer, cycled when there are more layers than entries.
    pub palette: Vec<String>,
    pub vertex_radius: u32,
    /// Pixels per coordinate unit.
    pub scale: u32,
    pub margin: u32,
    pub highlight_conflicts: bool,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle {
            palette: [
                "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2",
                "#17becf",
            ]
            .map(String::from)
            .to_vec(),
            vertex_radius: 4,
            scale: 40,
            margin: 20,
            highlight_conflicts: false,
        }
    }
}

impl RenderStyle {
    /// Largest scale (at most the current one, at least 1) that keeps the
    /// drawing within `max_pixels` in both directions.
    pub fn fit(mut self, d: &LayeredDrawing, max_pixels: u32) -> Self {
        let extent = |f: fn(&crate::geom::Point) -> i64| {
            let (lo, hi) = d
                .positions()
                .iter()
                .map(f)
                .fold((i64::MAX, i64::MIN), |(lo, hi), v| (lo.min(v), hi.max(v)));
            if lo > hi {
                0
            } else {
                (hi as i128 - lo as i128) as u128
            }
        };
        let span = extent(|p| p.x).max(extent(|p| p.y)).max(1);
        let fitted = (max_pixels as u128 / span).clamp(1, self.scale.max(1) as u128);
        self.scale = fitted as u32;
        self
    }
}

/// Renders one `<g>` per layer with one `<line>` per edge, then the vertices on top.
///
/// With `highlight_conflicts`, edges and vertices involved in a conflict are
/// traced again in a separate `conflicts` group.
pub fn render_svg(g: &Graph, d: &LayeredDrawing, style: &RenderStyle) -> Result<String> {
    let report = validate_layered_drawing(g, d)?;
    let pos = d.positions();
    let (min_x, max_x) = pos
        .iter()
        .fold((i64::MAX, i64::MIN), |(a, b), p| (a.min(p.x), b.max(p.x)));
    let (min_y, max_y) = pos
        .iter()
        .fold((i64::MAX, i64::MIN), |(a, b), p| (a.min(p.y), b.max(p.y)));
    let (scale, margin) = (style.scale as i128, style.margin as i128);
    let (w, h) = if pos.is_empty() {
        (2 * margin, 2 * margin)
    } else {
        (
            2 * margin + (max_x as i128 - min_x as i128) * scale,
            2 * margin + (max_y as i128 - min_y as i128) * scale,
        )
    };
    // y axis points up in the drawing, down in SVG
    let sx = |x: i64| margin + (x as i128 - min_x as i128) * scale;
    let sy = |y: i64| margin + (max_y as i128 - y as i128) * scale;

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">"
    )
    .unwrap();
    writeln!(out, "<rect width=\"{w}\" height=\"{h}\" fill=\"#ffffff\"/>").unwrap();

    let line = |out: &mut String, e: usize| {
        let (u, v) = g.edge(e);
        writeln!(
            out,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
            sx(pos[u].x),
            sy(pos[u].y),
            sx(pos[v].x),
            sy(pos[v].y)
        )
        .unwrap();
    };

    for layer in 0..d.layers_used() {
        let color = if style.palette.is_empty() {
            "#000000"
        } else {
            &style.palette[layer % style.palette.len()]
        };
        writeln!(
            out,
            "<g class=\"layer\" id=\"layer-{layer}\" stroke=\"{color}\" stroke-width=\"2\" stroke-linecap=\"round\">"
        )
        .unwrap();
        for e in (0..g.edge_count()).filter(|&e| d.edge_layers()[e] == layer) {
            line(&mut out, e);
        }
        out.push_str("</g>\n");
    }

    if style.highlight_conflicts && !report.valid {
        let mut edges = BTreeSet::new();
        let mut vertices = BTreeSet::new();
        for c in &report.conflicts {
            for entity in [c.first, c.second] {
                match entity {
                    Entity::Edge(e) => edges.insert(e),
                    Entity::Vertex(v) => vertices.insert(v),
                };
            }
        }
        out.push_str("<g class=\"conflicts\" stroke=\"#ff0000\" stroke-width=\"5\" stroke-opacity=\"0.5\" fill=\"none\">\n");
        for e in edges {
            line(&mut out, e);
        }
        for v in vertices {
            writeln!(
                out,
                "<circle cx=\"{}\" cy=\"{}\" r=\"{}\"/>",
                sx(pos[v].x),
                sy(pos[v].y),
                2 * style.vertex_radius
            )
            .unwrap();
        }
        out.push_str("</g>\n");
    }

    out.push_str("<g class=\"vertices\" fill=\"#000000\">\n");
    for p in pos {
        writeln!(
            out,
            "<circle cx=\"{}\" cy=\"{}\" r=\"{}\"/>",
            sx(p.x),
            sy(p.y),
            style.vertex_radius
        )
        .unwrap();
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::book::{embed_on_circle, BookEmbedding};
    use crate::graph::{build_gk, complete_graph};
    use crate::layouts::theorem1_layout;

    fn count(svg: &str, needle: &str) -> usize {
        svg.matches(needle).count()
    }

    #[test]
    fn g8_figure() {
        let gk = build_gk(8).unwrap();
        let d = theorem1_layout(8).unwrap();
        let svg = render_svg(gk.graph(), &d, &RenderStyle::default()).unwrap();
        assert_eq!(count(&svg, "<g class=\"layer\""), 2);
        assert_eq!(count(&svg, "<line "), 56);
        assert_eq!(count(&svg, "<circle "), 36);
        assert_eq!(
            svg,
            render_svg(gk.graph(), &d, &RenderStyle::default()).unwrap()
        );
    }

    #[test]
    fn empty_graph() {
        let svg = render_svg(
            &Graph::empty(0),
            &LayeredDrawing::new(vec![], &[]),
            &RenderStyle::default(),
        )
        .unwrap();
        assert_eq!(count(&svg, "<line "), 0);
        assert!(svg.starts_with("<?xml") && svg.ends_with("</svg>\n"));
    }

    #[test]
    fn highlighted_k4_crossing() {
        let k4 = complete_graph(4);
        let be = BookEmbedding::new(vec![0, 1, 2, 3], &[0; 6]).unwrap();
        let d = embed_on_circle(&k4, &be).unwrap();
        let style = RenderStyle {
            highlight_conflicts: true,
            ..RenderStyle::default()
        };
        let svg = render_svg(&k4, &d, &style).unwrap();
        assert_eq!(count(&svg, "<g class=\"conflicts\""), 1);
        // six edges plus the two crossing diagonals traced again
        assert_eq!(count(&svg, "<line "), 8);
        let plain = render_svg(&k4, &d, &RenderStyle::default()).unwrap();
        assert_eq!(count(&plain, "<g class=\"conflicts\""), 0);
    }

    #[test]
    fn fit_shrinks_scale() {
        let k4 = complete_graph(12);
        let be = BookEmbedding::new((0..12).collect(), &[0; 66]).unwrap();
        let d = embed_on_circle(&k4, &be).unwrap();
        let style = RenderStyle::default().fit(&d, 1200);
        assert_eq!(style.scale, 1200 / 121);
    }
}
