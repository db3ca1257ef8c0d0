use crate::book::{validate_book_embedding, BookEmbedding};
use crate::error::Result;
use crate::graph::{build_gk, GkGraph};
use crate::report::ValidationReport;

use super::coloring::{find_monochromatic_clique, page_pair_coloring, MonochromaticClique};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// No monochromatic `K_5` in the page-pair coloring.
    ConsistentWithTheorem3,
    /// A monochromatic `K_5` exists. For a valid input embedding this cannot
    /// happen, so the witness always points at an invalid input.
    ContradictionWitness,
}

/// The `G_5` induced by a monochromatic `K_5`, with the inherited order and pages.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubEmbedding {
    /// `vertex_map[local]` is the `G_k` vertex behind local `G_5` vertex `local`.
    pub vertex_map: Vec<usize>,
    pub embedding: BookEmbedding,
    pub report: ValidationReport,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub k: usize,
    pub pages_used: usize,
    pub colors_used: usize,
    pub input: ValidationReport,
    pub monochromatic_k5: Option<MonochromaticClique>,
    pub extracted_sub_embedding: Option<SubEmbedding>,
    pub verdict: Verdict,
}

/// Runs the page-pair argument on a book embedding of `G_k`.
///
/// Validates the embedding, colors `K_k` by page pairs, and looks for a
/// monochromatic `K_5`. A witness is restricted to its `G_5` (five original
/// vertices, ten subdivision vertices) and that two-page sub-embedding is
/// validated as well.
pub fn separation_audit(gk: &GkGraph, be: &BookEmbedding) -> Result<AuditReport> {
    let input = validate_book_embedding(gk.graph(), be)?;
    let coloring = page_pair_coloring(gk, be)?;
    let witness = find_monochromatic_clique(&coloring, 5)?;

    let extracted = witness
        .as_ref()
        .map(|clique| extract_g5(gk, be, &clique.vertices))
        .transpose()?;
    let verdict = if witness.is_some() {
        Verdict::ContradictionWitness
    } else {
        Verdict::ConsistentWithTheorem3
    };

    Ok(AuditReport {
        k: gk.k(),
        pages_used: be.pages_used(),
        colors_used: coloring.colors_used(),
        input,
        monochromatic_k5: witness,
        extracted_sub_embedding: extracted,
        verdict,
    })
}

fn extract_g5(gk: &GkGraph, be: &BookEmbedding, originals: &[usize]) -> Result<SubEmbedding> {
    let g5 = build_gk(originals.len())?;
    let vertex_map: Vec<usize> = (0..g5.graph().vertex_count())
        .map(|local| {
            if local < originals.len() {
                gk.singleton(originals[local])
            } else {
                let (a, b) = g5.pairs()[local - originals.len()];
                gk.doubleton(originals[a], originals[b])
            }
        })
        .collect();

    let mut local_of = vec![usize::MAX; gk.graph().vertex_count()];
    for (local, &v) in vertex_map.iter().enumerate() {
        local_of[v] = local;
    }
    let order: Vec<usize> = be
        .order()
        .iter()
        .filter_map(|&v| (local_of[v] != usize::MAX).then_some(local_of[v]))
        .collect();
    let mut pages = Vec::with_capacity(g5.graph().edge_count());
    for &(a, b) in g5.pairs() {
        for e in gk.pair_path(originals[a], originals[b]) {
            pages.push(be.edge_pages()[e]);
        }
    }
    let embedding = BookEmbedding::new(order, &pages)?;
    let report = validate_book_embedding(g5.graph(), &embedding)?;
    Ok(SubEmbedding {
        vertex_map,
        embedding,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_page_g5_is_a_contradiction_witness() {
        let g5 = build_gk(5).unwrap();
        let n = g5.graph().vertex_count();
        let be = BookEmbedding::new((0..n).collect(), &[0; 20]).unwrap();
        let report = separation_audit(&g5, &be).unwrap();
        assert!(!report.input.valid);
        assert_eq!(report.verdict, Verdict::ContradictionWitness);
        assert_eq!(
            report.monochromatic_k5.as_ref().unwrap().vertices,
            vec![0, 1, 2, 3, 4]
        );
        let sub = report.extracted_sub_embedding.unwrap();
        assert!(!sub.report.valid);
        assert!(sub.embedding.pages_used() <= 2);
        assert_eq!(sub.embedding.order(), be.order());
    }

    #[test]
    fn extraction_maps_paths_consistently() {
        let g6 = build_gk(6).unwrap();
        let n = g6.graph().vertex_count();
        let be =
            BookEmbedding::new((0..n).rev().collect(), &vec![0; g6.graph().edge_count()]).unwrap();
        let sub = extract_g5(&g6, &be, &[0, 2, 3, 4, 5]).unwrap();
        let g5 = build_gk(5).unwrap();
        for (e, &(u, v)) in g5.graph().edges().iter().enumerate() {
            let (gu, gv) = (sub.vertex_map[u], sub.vertex_map[v]);
            let original = g6
                .graph()
                .edges()
                .iter()
                .position(|&x| x == (gu.min(gv), gu.max(gv)));
            assert!(original.is_some(), "local edge {e} has no counterpart");
        }
        assert_eq!(sub.vertex_map[5], g6.doubleton(0, 2));
    }
}
