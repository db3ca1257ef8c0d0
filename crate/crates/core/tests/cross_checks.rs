//! The crate's fast paths against the brute-force routines in `thickness-oracles`.

use rand::{seq::SliceRandom, Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thickness::{
    book_thickness_at_most, book_thickness_exact, build_gk, complete_graph, embed_on_circle,
    find_monochromatic_clique, is_planar, segments_conflict, sqrt_book_layout,
    validate_book_embedding, validate_layered_drawing, BookEmbedding, BookThickness, BtOutcome,
    ConflictKind, EdgeColoring, Graph, PagePair, Point, Segment, DEFAULT_BUDGET,
};
use thickness_oracles::{
    brute_monochromatic_clique, contains_kuratowski_subdivision, naive_book_thickness,
    naive_fits_in_pages, parametric_meet, Meet,
};

fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
    let kept: Vec<_> = edges.filter(|_| rng.gen_bool(p)).collect();
    Graph::new(n, kept).unwrap()
}

fn exact(g: &Graph) -> usize {
    match book_thickness_exact(g, 8, DEFAULT_BUDGET).unwrap() {
        BookThickness::Exact { value, .. } => value,
        other => panic!("undecided: {other:?}"),
    }
}

fn oracle_kind(m: Meet) -> Option<ConflictKind> {
    match m {
        Meet::Disjoint | Meet::SharedEndpoint => None,
        Meet::ProperCrossing => Some(ConflictKind::ProperCrossing),
        Meet::CollinearOverlap => Some(ConflictKind::CollinearOverlap),
        Meet::EndpointInInterior => Some(ConflictKind::EndpointInInterior),
        Meet::UnsharedEndpoint => Some(ConflictKind::CoincidentVertices),
    }
}

#[test]
fn segment_predicate_matches_rational_solver() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut seen = std::collections::BTreeSet::new();
    for round in 0..20_000 {
        // a narrow grid every other round so touching and collinear cases are common
        let r = if round % 2 == 0 { 2 } else { 8 };
        let mut pt = || (rng.gen_range(-r..=r), rng.gen_range(-r..=r));
        let (a, b, c, mut d) = (pt(), pt(), pt(), pt());
        if a == b || c == d {
            continue;
        }
        if round % 5 == 0 {
            d = a;
            if c == d {
                continue;
            }
        }
        let shared: Vec<(i64, i64)> = if round % 3 == 0 { vec![] } else { vec![a, b] };
        let expected = oracle_kind(parametric_meet(a, b, c, d, &shared));
        let s = Segment::new(a.into(), b.into());
        let t = Segment::new(c.into(), d.into());
        let shared_pts: Vec<Point> = shared.iter().map(|&p| p.into()).collect();
        let got = segments_conflict(&s, &t, &shared_pts).unwrap();
        assert_eq!(
            got, expected,
            "{a:?}-{b:?} vs {c:?}-{d:?} shared {shared:?}"
        );
        seen.insert(format!("{got:?}"));
    }
    assert_eq!(seen.len(), 5, "every outcome exercised: {seen:?}");
}

#[test]
fn solver_matches_full_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..60 {
        let n = rng.gen_range(3..=7);
        let density = rng.gen_range(0.3..0.9);
        let g = random_graph(&mut rng, n, density);
        let naive = naive_book_thickness(n, g.edges());
        assert_eq!(exact(&g), naive, "{g:?}");
        for p in 1..=3 {
            let fast = book_thickness_at_most(&g, p, DEFAULT_BUDGET).unwrap();
            let slow = naive_fits_in_pages(n, g.edges(), p);
            match fast {
                BtOutcome::Yes(be) => {
                    assert!(slow);
                    assert!(be.pages_used() <= p);
                    assert!(validate_book_embedding(&g, &be).unwrap().valid);
                }
                BtOutcome::No => assert!(!slow, "{g:?} p={p}"),
                BtOutcome::Unknown => panic!("budget exhausted at n={n}"),
            }
        }
    }
}

#[test]
fn complete_graphs_by_enumeration() {
    for (k, expected) in [(3, 1), (4, 2), (5, 3), (6, 3)] {
        let g = complete_graph(k);
        assert_eq!(naive_book_thickness(k, g.edges()), expected);
        assert_eq!(exact(&g), expected);
    }
}

#[test]
fn trees_need_one_page() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..30 {
        let n = rng.gen_range(2..=8);
        let edges: Vec<_> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
        let g = Graph::new(n, edges).unwrap();
        assert_eq!(exact(&g), 1);
    }
}

#[test]
fn book_thickness_is_monotone_under_subgraphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..40 {
        let n = rng.gen_range(4..=7);
        let g = random_graph(&mut rng, n, 0.7);
        let keep: Vec<usize> = (0..g.edge_count()).filter(|_| rng.gen_bool(0.6)).collect();
        let h = g.edge_subgraph(keep);
        assert!(exact(&h) <= exact(&g));
    }
}

#[test]
fn two_pages_imply_planarity() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut yes = 0;
    for _ in 0..80 {
        let n = rng.gen_range(5..=7);
        let g = random_graph(&mut rng, n, 0.65);
        if let BtOutcome::Yes(_) = book_thickness_at_most(&g, 2, DEFAULT_BUDGET).unwrap() {
            yes += 1;
            assert!(is_planar(&g), "{g:?}");
        }
    }
    assert!(yes > 10);
}

#[test]
fn planarity_matches_kuratowski_search_on_all_small_graphs() {
    for n in 1..=6usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::new(n, edges.clone()).unwrap();
            assert_eq!(
                is_planar(&g),
                !contains_kuratowski_subdivision(n, &edges),
                "{edges:?}"
            );
        }
    }
}

#[test]
fn planarity_matches_kuratowski_search_on_seven_vertices() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for round in 0..3000 {
        let g = random_graph(&mut rng, 7, 0.35 + 0.4 * (round % 4) as f64 / 3.0);
        assert_eq!(
            is_planar(&g),
            !contains_kuratowski_subdivision(7, g.edges()),
            "{g:?}"
        );
        if g.edge_count() > 15 {
            assert!(!is_planar(&g));
        }
    }
}

#[test]
fn clique_search_matches_subset_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for _ in 0..200 {
        let k = rng.gen_range(3..=12);
        let palette = rng.gen_range(1..=4);
        let colors: Vec<PagePair> = (0..k * (k - 1) / 2)
            .map(|_| PagePair::new(0, rng.gen_range(1..=palette)))
            .collect();
        let coloring = EdgeColoring::new(k, colors).unwrap();
        for size in 2..=5.min(k) {
            let fast = find_monochromatic_clique(&coloring, size).unwrap();
            let slow = brute_monochromatic_clique(k, size, |i, j| coloring.color(i, j));
            assert_eq!(fast.is_some(), slow.is_some(), "k={k} size={size}");
            if let Some(found) = fast {
                let v = &found.vertices;
                assert_eq!(v.len(), size);
                for (i, &a) in v.iter().enumerate() {
                    for &b in &v[i + 1..] {
                        assert_eq!(coloring.color(a, b), found.color);
                    }
                }
            }
        }
    }
}

#[test]
fn interleaving_matches_parabola_geometry() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..200 {
        let n = rng.gen_range(2..=10);
        let g = random_graph(&mut rng, n, 0.5);
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let pages: Vec<usize> = (0..g.edge_count()).map(|_| rng.gen_range(0..3)).collect();
        let be = BookEmbedding::new(order, &pages).unwrap();
        let combinatorial = validate_book_embedding(&g, &be).unwrap();
        let geometric = validate_layered_drawing(&g, &embed_on_circle(&g, &be).unwrap()).unwrap();
        assert_eq!(combinatorial, geometric);
    }
}

#[test]
fn sqrt_layouts_colorings_have_no_mono_k5() {
    for k in [10, 30] {
        let gk = build_gk(k).unwrap();
        let be = sqrt_book_layout(k, None).unwrap();
        let coloring = thickness::page_pair_coloring(&gk, &be).unwrap();
        assert_eq!(find_monochromatic_clique(&coloring, 5).unwrap(), None);
        if k <= 12 {
            assert_eq!(
                brute_monochromatic_clique(k, 5, |i, j| coloring.color(i, j)),
                None
            );
        }
    }
}
