//! Shared helpers for the integration suites: seeded random graph
//! generation (general connected and cubic) independent of the library's
//! own generators.

use covdom::graph::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random connected graph on `n >= 1` vertices: a random attachment tree
/// plus each remaining pair independently with probability `extra_p`.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize, extra_p: f64) -> Graph {
    assert!(n >= 1);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.random_range(0..v), v));
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if !edges.contains(&(u, v)) && rng.random_bool(extra_p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("tree plus fresh pairs is simple")
}

/// Random connected 3-regular graph on an even `n >= 4`, by the pairing
/// model: shuffle three stubs per vertex, pair them off, retry on loops,
/// multi-edges, or disconnection.
pub fn random_cubic_connected(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    assert!(
        n >= 4 && n.is_multiple_of(2),
        "cubic graphs need even n >= 4"
    );
    loop {
        let mut stubs: Vec<usize> = (0..n).flat_map(|v| [v, v, v]).collect();
        stubs.shuffle(rng);
        let mut edges: Vec<(usize, usize)> = Vec::with_capacity(3 * n / 2);
        let simple = stubs.chunks(2).all(|pair| {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v || edges.contains(&(u, v)) {
                return false;
            }
            edges.push((u, v));
            true
        });
        if !simple {
            continue;
        }
        let g = Graph::from_edge_list(n, &edges).expect("checked simple");
        if g.is_connected() {
            return g;
        }
    }
}

/// BFS spanning tree edges from vertex 0, neighbors ascending.
pub fn spanning_tree_edges(g: &Graph) -> Vec<(usize, usize)> {
    let mut seen = vec![false; g.n()];
    seen[0] = true;
    let mut queue = std::collections::VecDeque::from([0]);
    let mut edges = Vec::new();
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                edges.push((u, w));
                queue.push_back(w);
            }
        }
    }
    edges
}

/// Some cycle of the graph (as its vertex sequence), found by walking a
/// non-tree edge's fundamental cycle. `None` on forests.
pub fn fundamental_cycle(g: &Graph) -> Option<Vec<usize>> {
    let tree = spanning_tree_edges(g);
    let in_tree = |u: usize, v: usize| {
        tree.iter()
            .any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    };
    let (u, v) = g.edges().into_iter().find(|&(u, v)| !in_tree(u, v))?;
    // Parents from a BFS rooted at u restricted to tree edges.
    let mut parent = vec![usize::MAX; g.n()];
    parent[u] = u;
    let mut queue = std::collections::VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        for &w in g.neighbors(x) {
            if parent[w] == usize::MAX && in_tree(x, w) {
                parent[w] = x;
                queue.push_back(w);
            }
        }
    }
    let mut path = vec![v];
    let mut cursor = v;
    while cursor != u {
        cursor = parent[cursor];
        path.push(cursor);
    }
    // path = v .. u through the tree; closing edge (u, v) completes it.
    Some(path)
}
