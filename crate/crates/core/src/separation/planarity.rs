//! Planarity testing by path addition (Demoucron, Malgrange, Pertuiset).
//!
//! The graph is split into biconnected blocks. Each block is embedded
//! starting from a cycle; at every step the not-yet-embedded parts
//! ("fragments") are collected together with the faces that contain all of
//! their attachment vertices. A fragment with no such face proves the block
//! nonplanar. Otherwise a path through a fragment with a single admissible
//! face (or any fragment, if none is forced) is drawn into that face,
//! splitting it in two.

use std::collections::VecDeque;

use crate::graph::Graph;

/// Decides planarity. Graphs with `m > 3n - 6` are rejected immediately.
pub fn is_planar(g: &Graph) -> bool {
    let (n, m) = (g.vertex_count(), g.edge_count());
    if n < 5 || m < 9 {
        return true;
    }
    if m > 3 * n - 6 {
        return false;
    }
    biconnected_blocks(g)
        .into_iter()
        .all(|block| block_is_planar(&block))
}

/// Edge lists of the biconnected blocks, vertices relabeled to `0..`.
fn biconnected_blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    const UNSEEN: usize = usize::MAX;
    let n = g.vertex_count();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        adj[u].push((v, e));
        adj[v].push((u, e));
    }

    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut clock = 0;
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();

    // iterative DFS: frames of (vertex, parent edge, next adjacency index)
    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = clock;
        low[root] = clock;
        clock += 1;
        let mut frames = vec![(root, usize::MAX, 0usize)];
        while let Some(frame) = frames.last_mut() {
            let (u, parent_edge, next) = *frame;
            if next < adj[u].len() {
                frame.2 += 1;
                let (w, e) = adj[u][next];
                if e == parent_edge {
                    continue;
                }
                if disc[w] == UNSEEN {
                    edge_stack.push(e);
                    disc[w] = clock;
                    low[w] = clock;
                    clock += 1;
                    frames.push((w, e, 0));
                } else if disc[w] < disc[u] {
                    edge_stack.push(e);
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                frames.pop();
                if let Some(&(p, _, _)) = frames.last() {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == parent_edge {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
            }
        }
    }

    blocks
        .into_iter()
        .map(|edges| {
            let mut local = std::collections::HashMap::new();
            edges
                .into_iter()
                .map(|e| {
                    let (u, v) = g.edge(e);
                    let next = local.len();
                    let a = *local.entry(u).or_insert(next);
                    let next = local.len();
                    let b = *local.entry(v).or_insert(next);
                    (a, b)
                })
                .collect()
        })
        .collect()
}

struct Fragment {
    attachments: Vec<usize>,
    /// Empty for a single chord between two embedded vertices.
    inner: Vec<usize>,
}

fn block_is_planar(edges: &[(usize, usize)]) -> bool {
    let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let m = edges.len();
    if n < 5 || m < 9 {
        return true;
    }
    if m > 3 * n - 6 {
        return false;
    }
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    for list in &mut adj {
        list.sort_unstable();
    }

    let mut embedded_vertex = vec![false; n];
    let mut embedded_edge = vec![vec![false; n]; n];
    let cycle = find_cycle(&adj);
    for (i, &v) in cycle.iter().enumerate() {
        let w = cycle[(i + 1) % cycle.len()];
        embedded_vertex[v] = true;
        embedded_edge[v][w] = true;
        embedded_edge[w][v] = true;
    }
    let mut embedded_edges = cycle.len();
    let mut faces = vec![cycle.clone(), cycle.into_iter().rev().collect::<Vec<_>>()];

    while embedded_edges < m {
        let fragments = fragments(&adj, &embedded_vertex, &embedded_edge);
        let membership: Vec<Vec<bool>> = faces
            .iter()
            .map(|f| {
                let mut on = vec![false; n];
                for &v in f {
                    on[v] = true;
                }
                on
            })
            .collect();

        let mut choice = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&f| frag.attachments.iter().all(|&a| membership[f][a]))
                .collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_index) = choice.expect("at least one fragment remains");
        let path = fragment_path(&adj, &embedded_vertex, &fragments[fi]);

        for w in path.windows(2) {
            embedded_edge[w[0]][w[1]] = true;
            embedded_edge[w[1]][w[0]] = true;
        }
        for &v in &path {
            embedded_vertex[v] = true;
        }
        embedded_edges += path.len() - 1;

        let face = std::mem::take(&mut faces[face_index]);
        let (first, second) = split_face(&face, &path);
        faces[face_index] = first;
        faces.push(second);
    }
    true
}

/// Any cycle, found as a DFS back edge.
fn find_cycle(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let mut stack = vec![0];
    depth[0] = 0;
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if depth[w] == usize::MAX {
                depth[w] = depth[u] + 1;
                parent[w] = u;
                stack.push(w);
            } else if w != parent[u] && parent[w] != u {
                // non-tree edge: close it with the tree paths up to the meeting point
                let (mut a, mut b) = (u, w);
                let mut left = vec![a];
                let mut right = vec![b];
                while a != b {
                    if depth[a] >= depth[b] {
                        a = parent[a];
                        left.push(a);
                    } else {
                        b = parent[b];
                        right.push(b);
                    }
                }
                right.pop();
                left.extend(right.into_iter().rev());
                return left;
            }
        }
    }
    unreachable!("a biconnected block with at least three vertices has a cycle")
}

fn fragments(
    adj: &[Vec<usize>],
    embedded_vertex: &[bool],
    embedded_edge: &[Vec<bool>],
) -> Vec<Fragment> {
    let n = adj.len();
    let mut out = Vec::new();
    for u in 0..n {
        if !embedded_vertex[u] {
            continue;
        }
        for &v in &adj[u] {
            if u < v && embedded_vertex[v] && !embedded_edge[u][v] {
                out.push(Fragment {
                    attachments: vec![u, v],
                    inner: Vec::new(),
                });
            }
        }
    }
    let mut seen = vec![false; n];
    for start in 0..n {
        if embedded_vertex[start] || seen[start] {
            continue;
        }
        let mut inner = Vec::new();
        let mut attachments = Vec::new();
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(u) = queue.pop_front() {
            inner.push(u);
            for &w in &adj[u] {
                if embedded_vertex[w] {
                    attachments.push(w);
                } else if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        attachments.sort_unstable();
        attachments.dedup();
        inner.sort_unstable();
        out.push(Fragment { attachments, inner });
    }
    out
}

/// A path between two distinct attachment vertices of `frag`.
fn fragment_path(adj: &[Vec<usize>], embedded_vertex: &[bool], frag: &Fragment) -> Vec<usize> {
    if frag.inner.is_empty() {
        return frag.attachments.clone();
    }
    let a = frag.attachments[0];
    let in_frag = |v: usize| !embedded_vertex[v] && frag.inner.binary_search(&v).is_ok();
    let start = *adj[a]
        .iter()
        .find(|&&x| in_frag(x))
        .expect("attachment touches fragment");

    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::from([start]);
    parent[start] = start;
    while let Some(u) = queue.pop_front() {
        if let Some(&b) = adj[u].iter().find(|&&b| embedded_vertex[b] && b != a) {
            let mut path = vec![b, u];
            let mut cur = u;
            while cur != start {
                cur = parent[cur];
                path.push(cur);
            }
            path.push(a);
            path.reverse();
            return path;
        }
        for &w in &adj[u] {
            if in_frag(w) && parent[w] == usize::MAX {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    unreachable!("fragments of a biconnected block have two attachments")
}

/// Splits the cyclic `face` along `path`, whose ends both lie on it.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let (a, b) = (path[0], path[path.len() - 1]);
    let ia = face
        .iter()
        .position(|&v| v == a)
        .expect("path start on face");
    let ib = face.iter().position(|&v| v == b).expect("path end on face");
    let walk = |from: usize, to: usize| {
        let mut out = Vec::new();
        let mut i = from;
        loop {
            out.push(face[i]);
            if i == to {
                break;
            }
            i = (i + 1) % face.len();
        }
        out
    };
    let interior = &path[1..path.len() - 1];
    let mut first = walk(ia, ib);
    first.extend(interior.iter().rev());
    let mut second = walk(ib, ia);
    second.extend(interior.iter());
    (first, second)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_gk, complete_graph};

    fn k33() -> Graph {
        Graph::new(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap()
    }

    #[test]
    fn small_cases() {
        assert!(is_planar(&complete_graph(4)));
        assert!(!is_planar(&complete_graph(5)));
        assert!(!is_planar(&k33()));
        assert!(!is_planar(&build_gk(5).unwrap().graph().clone()));
        assert!(is_planar(&build_gk(4).unwrap().graph().clone()));
    }

    #[test]
    fn k5_minus_edge_is_planar() {
        let g = Graph::new(5, complete_graph(5).edges()[1..].iter().copied()).unwrap();
        assert!(is_planar(&g));
    }

    #[test]
    fn planar_families() {
        // wheel, grid, octahedron
        let wheel = Graph::new(9, (1..9).flat_map(|i| [(0, i), (i, i % 8 + 1)])).unwrap();
        assert!(is_planar(&wheel));
        let grid = Graph::new(
            16,
            (0..16).flat_map(|v| {
                let mut e = Vec::new();
                if v % 4 < 3 {
                    e.push((v, v + 1));
                }
                if v < 12 {
                    e.push((v, v + 4));
                }
                e
            }),
        )
        .unwrap();
        assert!(is_planar(&grid));
        let octa = Graph::new(
            6,
            complete_graph(6)
                .edges()
                .iter()
                .copied()
                .filter(|&(u, v)| v != u + 3),
        )
        .unwrap();
        assert!(is_planar(&octa));
    }

    #[test]
    fn petersen_is_nonplanar() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let g = Graph::new(10, outer.chain(spokes).chain(inner)).unwrap();
        assert!(!is_planar(&g));
    }

    #[test]
    fn disjoint_and_articulated_blocks() {
        // two K4s sharing a vertex plus a pendant path
        let mut edges: Vec<(usize, usize)> = complete_graph(4).edges().to_vec();
        edges.extend(
            complete_graph(4)
                .edges()
                .iter()
                .map(|&(u, v)| (u + 3, v + 3)),
        );
        edges.push((6, 7));
        edges.push((7, 8));
        assert!(is_planar(&Graph::new(9, edges.clone()).unwrap()));
        // attach a K5 elsewhere
        edges.extend(
            complete_graph(5)
                .edges()
                .iter()
                .map(|&(u, v)| (u + 9, v + 9)),
        );
        assert!(!is_planar(&Graph::new(14, edges).unwrap()));
    }

    #[test]
    fn subdivisions_stay_nonplanar() {
        for k in 5..=9 {
            assert!(!is_planar(build_gk(k).unwrap().graph()), "G_{k}");
        }
    }
}
