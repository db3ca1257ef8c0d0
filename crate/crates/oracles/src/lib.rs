//! Slow, obviously-correct reference routines for cross-checking the
//! `thickness` crate in tests.
//!
//! Everything here works on plain tuples and slices and shares no code with
//! the crate under test.

use num_rational::Ratio;

pub type Pt = (i64, i64);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Meet {
    Disjoint,
    SharedEndpoint,
    ProperCrossing,
    CollinearOverlap,
    EndpointInInterior,
    UnsharedEndpoint,
}

type Q = Ratio<i128>;

fn cross(a: (i128, i128), b: (i128, i128)) -> i128 {
    a.0 * b.1 - a.1 * b.0
}

fn dot(a: (i128, i128), b: (i128, i128)) -> i128 {
    a.0 * b.0 + a.1 * b.1
}

fn sub(a: Pt, b: Pt) -> (i128, i128) {
    (a.0 as i128 - b.0 as i128, a.1 as i128 - b.1 as i128)
}

/// Intersects `p0 + s (p1 - p0)` with `q0 + u (q1 - q0)` by solving for the
/// parameters in exact rationals, then classifies the meeting set.
pub fn parametric_meet(p0: Pt, p1: Pt, q0: Pt, q1: Pt, shared: &[Pt]) -> Meet {
    let r = sub(p1, p0);
    let q = sub(q1, q0);
    let w = sub(q0, p0);
    let denom = cross(r, q);
    let zero = Q::from_integer(0);
    let one = Q::from_integer(1);

    let endpoint_meet = |point: Pt| {
        if shared.contains(&point) {
            Meet::SharedEndpoint
        } else {
            Meet::UnsharedEndpoint
        }
    };

    if denom != 0 {
        let s = Q::new(cross(w, q), denom);
        let u = Q::new(cross(w, r), denom);
        if s < zero || s > one || u < zero || u > one {
            return Meet::Disjoint;
        }
        let s_inside = s > zero && s < one;
        let u_inside = u > zero && u < one;
        return match (s_inside, u_inside) {
            (true, true) => Meet::ProperCrossing,
            (false, false) => endpoint_meet(if s == zero { p0 } else { p1 }),
            _ => Meet::EndpointInInterior,
        };
    }

    if cross(w, r) != 0 {
        return Meet::Disjoint;
    }
    // collinear: place q0, q1 on p's parameter line
    let rr = dot(r, r);
    let a = Q::new(dot(w, r), rr);
    let b = Q::new(dot(sub(q1, p0), r), rr);
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    let lo = if lo > zero { lo } else { zero };
    let hi = if hi < one { hi } else { one };
    if lo > hi {
        Meet::Disjoint
    } else if lo < hi {
        Meet::CollinearOverlap
    } else {
        endpoint_meet(if lo == zero { p0 } else { p1 })
    }
}

fn for_each_permutation(
    items: &mut Vec<usize>,
    k: usize,
    f: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if k == items.len() {
        return f(items);
    }
    for i in k..items.len() {
        items.swap(k, i);
        if for_each_permutation(items, k + 1, f) {
            return true;
        }
        items.swap(k, i);
    }
    false
}

fn alternates(pos: &[usize], e: (usize, usize), f: (usize, usize)) -> bool {
    let (a, b) = (pos[e.0].min(pos[e.1]), pos[e.0].max(pos[e.1]));
    let inside = |x: usize| a < x && x < b;
    let (c, d) = (pos[f.0], pos[f.1]);
    if [c, d].contains(&a) || [c, d].contains(&b) {
        return false;
    }
    inside(c) != inside(d)
}

fn colorable(conflict: &[u64], p: usize, colors: &mut Vec<usize>) -> bool {
    let i = colors.len();
    if i == conflict.len() {
        return true;
    }
    for c in 0..p {
        if (0..i).all(|j| conflict[i] >> j & 1 == 0 || colors[j] != c) {
            colors.push(c);
            if colorable(conflict, p, colors) {
                return true;
            }
            colors.pop();
        }
    }
    false
}

/// The distinct conflict graphs (one bit row per edge) over all `n!` vertex
/// orders. Rotations and reflections of an order repeat a graph, so this is
/// far smaller than `n!`.
fn conflict_graphs(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<u64>> {
    assert!(edges.len() <= 64, "oracle supports at most 64 edges");
    let mut seen = std::collections::HashSet::new();
    let mut order: Vec<usize> = (0..n).collect();
    for_each_permutation(&mut order, 0, &mut |perm| {
        let mut pos = vec![0; n];
        for (t, &v) in perm.iter().enumerate() {
            pos[v] = t;
        }
        let rows: Vec<u64> = edges
            .iter()
            .map(|&e| {
                edges
                    .iter()
                    .enumerate()
                    .filter(|&(_, &f)| alternates(&pos, e, f))
                    .fold(0u64, |acc, (j, _)| acc | 1 << j)
            })
            .collect();
        seen.insert(rows);
        false
    });
    seen.into_iter().collect()
}

/// Whether some vertex order (all `n!` of them) admits a `p`-page assignment.
pub fn naive_fits_in_pages(n: usize, edges: &[(usize, usize)], p: usize) -> bool {
    edges.is_empty()
        || conflict_graphs(n, edges)
            .iter()
            .any(|c| colorable(c, p, &mut Vec::new()))
}

/// Smallest page count over all vertex orders; 0 for edgeless graphs.
pub fn naive_book_thickness(n: usize, edges: &[(usize, usize)]) -> usize {
    if edges.is_empty() {
        return 0;
    }
    let mut best = edges.len();
    for c in conflict_graphs(n, edges) {
        while best > 1 && colorable(&c, best - 1, &mut Vec::new()) {
            best -= 1;
        }
    }
    best
}

fn adjacency_matrix(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in edges {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

/// Routes every pair in `missing` through vertex-disjoint paths whose
/// interiors use only `free` vertices.
fn routable(adj: &[Vec<bool>], missing: &[(usize, usize)], free: &[usize]) -> bool {
    let Some((&(a, b), rest)) = missing.split_first() else {
        return true;
    };
    let n = free.len();
    // try every nonempty ordered sequence of distinct free vertices as the path interior
    fn search(
        adj: &[Vec<bool>],
        rest: &[(usize, usize)],
        free: &[usize],
        used: &mut Vec<bool>,
        last: usize,
        target: usize,
        len: usize,
    ) -> bool {
        if len > 0 && adj[last][target] {
            let remaining: Vec<usize> = free
                .iter()
                .zip(used.iter())
                .filter(|(_, &u)| !u)
                .map(|(&v, _)| v)
                .collect();
            if routable(adj, rest, &remaining) {
                return true;
            }
        }
        for i in 0..free.len() {
            if !used[i] && adj[last][free[i]] {
                used[i] = true;
                if search(adj, rest, free, used, free[i], target, len + 1) {
                    return true;
                }
                used[i] = false;
            }
        }
        false
    }
    search(adj, rest, free, &mut vec![false; n], a, b, 0)
}

fn subsets(items: &[usize], size: usize) -> Vec<Vec<usize>> {
    if size == 0 {
        return vec![Vec::new()];
    }
    if items.len() < size {
        return Vec::new();
    }
    let mut out = subsets(&items[1..], size - 1);
    for s in &mut out {
        s.insert(0, items[0]);
    }
    out.extend(subsets(&items[1..], size));
    out
}

/// Whether the graph contains a subdivision of `K_5` or `K_{3,3}`, by trying
/// every choice of branch vertices. Exponential; meant for `n <= 8`.
pub fn contains_kuratowski_subdivision(n: usize, edges: &[(usize, usize)]) -> bool {
    let adj = adjacency_matrix(n, edges);
    let all: Vec<usize> = (0..n).collect();
    let check = |branch: &[usize], required: Vec<(usize, usize)>| {
        let missing: Vec<(usize, usize)> =
            required.into_iter().filter(|&(a, b)| !adj[a][b]).collect();
        let free: Vec<usize> = all
            .iter()
            .copied()
            .filter(|v| !branch.contains(v))
            .collect();
        routable(&adj, &missing, &free)
    };
    for five in subsets(&all, 5) {
        let pairs = subsets(&five, 2)
            .into_iter()
            .map(|p| (p[0], p[1]))
            .collect();
        if check(&five, pairs) {
            return true;
        }
    }
    for six in subsets(&all, 6) {
        for side in subsets(&six[1..], 2) {
            let left: Vec<usize> = std::iter::once(six[0])
                .chain(side.iter().copied())
                .collect();
            let right: Vec<usize> = six.iter().copied().filter(|v| !left.contains(v)).collect();
            let pairs = left
                .iter()
                .flat_map(|&a| right.iter().map(move |&b| (a, b)))
                .collect();
            if check(&six, pairs) {
                return true;
            }
        }
    }
    false
}

/// Lexicographically first `size`-subset of `0..k` whose pairs all share one
/// color, checking every subset.
pub fn brute_monochromatic_clique<C: PartialEq>(
    k: usize,
    size: usize,
    color: impl Fn(usize, usize) -> C,
) -> Option<Vec<usize>> {
    let all: Vec<usize> = (0..k).collect();
    subsets(&all, size).into_iter().find(|s| {
        let c0 = color(s[0], s[1]);
        s.iter()
            .enumerate()
            .all(|(i, &a)| s[i + 1..].iter().all(|&b| color(a, b) == c0))
    })
}
