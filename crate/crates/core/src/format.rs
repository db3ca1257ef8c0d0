//! JSON file formats.
//!
//! ```text
//! graph    {"n": 3, "edges": [[0,2],[1,2]]}
//! G_k      graph fields plus "k" and "labels": [{"s":0},{"s":1},{"d":[0,1]}]
//! drawing  {"positions": [[0,1],[1,2],[2,0]], "edge_layers": [0,1]}
//! book     {"order": [0,1,2], "edge_pages": [0,1]}
//! audit    {"k":25,"pages_used":10,"colors_used":..,"mono_k5":null,"verdict":"consistent"}
//! ```
//!
//! Per-edge arrays follow the edge order of the graph file. Layer and page
//! ids may be sparse; they are renumbered on load.

use serde::{de::DeserializeOwned, Deserialize, Serialize};
use thiserror::Error;

use crate::book::BookEmbedding;
use crate::error::Error;
use crate::geom::{LayeredDrawing, Point};
use crate::graph::{GkGraph, Graph, VertexLabel};
use crate::separation::{AuditReport, Verdict};

#[derive(Debug, Error)]
pub enum FormatError {
    /// `path` is the dotted location of the offending value, `.` for the document root.
    #[error("malformed JSON at `{path}`: {error}")]
    Json {
        path: String,
        error: serde_json::Error,
    },
    #[error(transparent)]
    Invalid(#[from] Error),
    #[error("{field}: {detail}")]
    Field { field: &'static str, detail: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LabelFile {
    #[serde(rename = "s")]
    Singleton(usize),
    #[serde(rename = "d")]
    Doubleton([usize; 2]),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GkGraphFile {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub k: usize,
    pub labels: Vec<LabelFile>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrawingFile {
    pub positions: Vec<[i64; 2]>,
    pub edge_layers: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BookFile {
    pub order: Vec<usize>,
    pub edge_pages: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditFile {
    pub k: usize,
    pub pages_used: usize,
    pub colors_used: usize,
    pub mono_k5: Option<Vec<usize>>,
    pub verdict: String,
}

impl From<&Graph> for GraphFile {
    fn from(g: &Graph) -> Self {
        GraphFile {
            n: g.vertex_count(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<GraphFile> for Graph {
    type Error = Error;

    fn try_from(f: GraphFile) -> Result<Self, Error> {
        Graph::new(f.n, f.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl From<&GkGraph> for GkGraphFile {
    fn from(gk: &GkGraph) -> Self {
        let GraphFile { n, edges } = GraphFile::from(gk.graph());
        let labels = gk
            .labels()
            .iter()
            .map(|l| match *l {
                VertexLabel::Singleton(i) => LabelFile::Singleton(i),
                VertexLabel::Doubleton(i, j) => LabelFile::Doubleton([i, j]),
            })
            .collect();
        GkGraphFile {
            n,
            edges,
            k: gk.k(),
            labels,
        }
    }
}

impl TryFrom<GkGraphFile> for GkGraph {
    type Error = FormatError;

    fn try_from(f: GkGraphFile) -> Result<Self, FormatError> {
        let gk = GkGraph::new(f.k)?;
        if f.n != gk.graph().vertex_count() {
            return Err(FormatError::Field {
                field: "n",
                detail: format!(
                    "G_{} has {} vertices, file says {}",
                    f.k,
                    gk.graph().vertex_count(),
                    f.n
                ),
            });
        }
        let graph = Graph::try_from(GraphFile {
            n: f.n,
            edges: f.edges,
        })?;
        if &graph != gk.graph() {
            return Err(FormatError::Field {
                field: "edges",
                detail: format!("edge list differs from the standard numbering of G_{}", f.k),
            });
        }
        let labels: Vec<VertexLabel> = f
            .labels
            .into_iter()
            .map(|l| match l {
                LabelFile::Singleton(i) => VertexLabel::Singleton(i),
                LabelFile::Doubleton([i, j]) => VertexLabel::Doubleton(i, j),
            })
            .collect();
        gk.check_labels(&labels)?;
        Ok(gk)
    }
}

impl From<&LayeredDrawing> for DrawingFile {
    fn from(d: &LayeredDrawing) -> Self {
        DrawingFile {
            positions: d.positions().iter().map(|p| [p.x, p.y]).collect(),
            edge_layers: d.edge_layers().to_vec(),
        }
    }
}

impl From<DrawingFile> for LayeredDrawing {
    fn from(f: DrawingFile) -> Self {
        let positions = f
            .positions
            .into_iter()
            .map(|[x, y]| Point::new(x, y))
            .collect();
        LayeredDrawing::new(positions, &f.edge_layers)
    }
}

impl From<&BookEmbedding> for BookFile {
    fn from(be: &BookEmbedding) -> Self {
        BookFile {
            order: be.order().to_vec(),
            edge_pages: be.edge_pages().to_vec(),
        }
    }
}

impl TryFrom<BookFile> for BookEmbedding {
    type Error = Error;

    fn try_from(f: BookFile) -> Result<Self, Error> {
        BookEmbedding::new(f.order, &f.edge_pages)
    }
}

impl From<&AuditReport> for AuditFile {
    fn from(r: &AuditReport) -> Self {
        AuditFile {
            k: r.k,
            pages_used: r.pages_used,
            colors_used: r.colors_used,
            mono_k5: r.monochromatic_k5.as_ref().map(|c| c.vertices.clone()),
            verdict: match r.verdict {
                Verdict::ConsistentWithTheorem3 => "consistent",
                Verdict::ContradictionWitness => "contradiction",
            }
            .to_string(),
        }
    }
}

/// Compact single-line JSON followed by a newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn parse<T: DeserializeOwned>(text: &str) -> Result<T, FormatError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let value = serde_path_to_error::deserialize(&mut *de).map_err(|e| FormatError::Json {
        path: e.path().to_string(),
        error: e.into_inner(),
    })?;
    de.end().map_err(|error| FormatError::Json {
        path: ".".into(),
        error,
    })?;
    Ok(value)
}

pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    Ok(Graph::try_from(parse::<GraphFile>(text)?)?)
}

pub fn parse_gk_graph(text: &str) -> Result<GkGraph, FormatError> {
    GkGraph::try_from(parse::<GkGraphFile>(text)?)
}

pub fn parse_drawing(text: &str) -> Result<LayeredDrawing, FormatError> {
    Ok(parse::<DrawingFile>(text)?.into())
}

pub fn parse_book(text: &str) -> Result<BookEmbedding, FormatError> {
    Ok(BookEmbedding::try_from(parse::<BookFile>(text)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_gk;
    use crate::layouts::{sqrt_book_layout, theorem1_layout};

    #[test]
    fn gk_file_layout() {
        let gk = build_gk(2).unwrap();
        let text = to_json(&GkGraphFile::from(&gk));
        assert_eq!(
            text,
            "{\"n\":3,\"edges\":[[0,2],[1,2]],\"k\":2,\"labels\":[{\"s\":0},{\"s\":1},{\"d\":[0,1]}]}\n"
        );
        assert_eq!(parse_gk_graph(&text).unwrap(), gk);
        // a G_k file is also a plain graph file
        assert_eq!(&parse_graph(&text).unwrap(), gk.graph());
    }

    #[test]
    fn drawing_and_book_round_trip() {
        let d = theorem1_layout(6).unwrap();
        assert_eq!(parse_drawing(&to_json(&DrawingFile::from(&d))).unwrap(), d);
        let be = sqrt_book_layout(9, None).unwrap();
        assert_eq!(parse_book(&to_json(&BookFile::from(&be))).unwrap(), be);
    }

    #[test]
    fn sparse_ids_are_renumbered() {
        let d = parse_drawing(r#"{"positions": [[0,0],[1,0],[0,1]], "edge_layers": [4, 9, 4]}"#)
            .unwrap();
        assert_eq!(d.edge_layers(), &[0, 1, 0]);
        assert_eq!(d.layers_used(), 2);
    }

    #[test]
    fn malformed_inputs_name_the_field() {
        let err = parse_graph(r#"{"n": 3}"#).unwrap_err().to_string();
        assert!(err.contains("edges"), "{err}");
        let err = parse_book(r#"{"order": [0, 1], "edge_pages": [-1]}"#)
            .unwrap_err()
            .to_string();
        assert!(err.contains("`edge_pages[0]`"), "{err}");
        let err = parse_drawing(r#"{"positions": [[0, 0], [1, "x"]], "edge_layers": []}"#)
            .unwrap_err()
            .to_string();
        assert!(err.contains("`positions[1][1]`"), "{err}");
        assert!(parse_graph(r#"{"n": 1, "edges": []} trailing"#).is_err());
        let err = parse_gk_graph(
            r#"{"n": 3, "edges": [[0,2],[1,2]], "k": 2, "labels": [{"s":0},{"s":1},{"d":[1,0]}]}"#,
        )
        .unwrap_err()
        .to_string();
        assert!(err.contains("label of vertex 2"), "{err}");
    }
}
