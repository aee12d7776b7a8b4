//! Verifiers and exact solvers for the three domination parameters, the
//! max-white-count greedy heuristic with its full trace, and
//! efficient-dominating-set machinery.
//!
//! The exact solver is a branch and bound over dominator choices: branch
//! on the lowest-indexed undominated vertex across its (closed or open)
//! neighborhood, partitioning by the first dominator chosen; the connected
//! variant grows the set through its frontier only, seeded once per choice
//! of minimum vertex. A brute-force subset enumerator over `u32` masks
//! serves as an independent oracle for graphs up to 24 vertices.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Which domination parameter a set or certificate refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DominationKind {
    Plain,
    Total,
    Connected,
}

impl fmt::Display for DominationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DominationKind::Plain => "plain",
            DominationKind::Total => "total",
            DominationKind::Connected => "connected",
        })
    }
}

/// Result of an exact (or budget-truncated) solve.
#[derive(Clone, Debug, Serialize)]
pub struct DominationCertificate {
    pub kind: DominationKind,
    pub set: VertexSet,
    pub value: usize,
    /// True when the search ran to completion, so no smaller set exists.
    pub optimal: bool,
    pub nodes_explored: u64,
}

/// Default search budget, in branch-and-bound nodes.
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

// ---------------------------------------------------------------------------
// Verifiers
// ---------------------------------------------------------------------------

/// Every vertex is in `s` or adjacent to a member of `s`.
pub fn is_dominating(g: &Graph, s: &VertexSet) -> bool {
    assert_eq!(s.universe(), g.n(), "set universe must match the graph");
    let mut covered = s.clone();
    for v in s.iter() {
        for &w in g.neighbors(v) {
            covered.insert(w);
        }
    }
    covered.count() == g.n()
}

/// Every vertex (members of `s` included) has a neighbor in `s`.
pub fn is_total_dominating(g: &Graph, s: &VertexSet) -> bool {
    assert_eq!(s.universe(), g.n(), "set universe must match the graph");
    let mut covered = VertexSet::new(g.n());
    for v in s.iter() {
        for &w in g.neighbors(v) {
            covered.insert(w);
        }
    }
    covered.count() == g.n()
}

/// Dominating, and the subgraph induced by `s` is connected (so `s` must
/// be nonempty).
pub fn is_connected_dominating(g: &Graph, s: &VertexSet) -> bool {
    is_dominating(g, s) && g.induced_connected(s)
}

/// The closed neighborhoods of `s` partition the vertex set: every vertex
/// is dominated by exactly one member.
pub fn is_efficient_dominating(g: &Graph, s: &VertexSet) -> bool {
    assert_eq!(s.universe(), g.n(), "set universe must match the graph");
    let mut times_covered = vec![0u32; g.n()];
    for v in s.iter() {
        times_covered[v] += 1;
        for &w in g.neighbors(v) {
            times_covered[w] += 1;
        }
    }
    times_covered.iter().all(|&c| c == 1)
}

fn verifies(g: &Graph, s: &VertexSet, kind: DominationKind) -> bool {
    match kind {
        DominationKind::Plain => is_dominating(g, s),
        DominationKind::Total => is_total_dominating(g, s),
        DominationKind::Connected => is_connected_dominating(g, s),
    }
}

fn check_preconditions(g: &Graph, kind: DominationKind) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    match kind {
        DominationKind::Plain => Ok(()),
        DominationKind::Total => match (0..g.n()).find(|&v| g.degree(v) == 0) {
            Some(v) => Err(Error::IsolatedVertex { vertex: v }),
            None => Ok(()),
        },
        DominationKind::Connected => {
            if g.is_connected() {
                Ok(())
            } else {
                Err(Error::Disconnected)
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Greedy
// ---------------------------------------------------------------------------

/// Trace of one greedy run: the vertices in choice order, the white count
/// `w(v)` each had at the moment it was chosen, and the final set.
#[derive(Clone, Debug, Serialize)]
pub struct GreedyTrace {
    pub order: Vec<usize>,
    pub white_counts: Vec<usize>,
    pub final_set: VertexSet,
}

/// Repeatedly picks a vertex with the maximum number of white vertices in
/// its closed neighborhood (`w(v)` counts `v` itself while white), lowest
/// id among ties, until no white vertex remains.
pub fn greedy_dominating_set(g: &Graph) -> GreedyTrace {
    let closed = g.closed_neighborhoods();
    let mut white = VertexSet::full(g.n());
    let mut trace = GreedyTrace {
        order: Vec::new(),
        white_counts: Vec::new(),
        final_set: VertexSet::new(g.n()),
    };
    while !white.is_empty() {
        let mut best_vertex = 0;
        let mut best_count = 0;
        for (v, neighborhood) in closed.iter().enumerate() {
            let count = neighborhood.intersection_count(&white);
            if count > best_count {
                best_vertex = v;
                best_count = count;
            }
        }
        trace.order.push(best_vertex);
        trace.white_counts.push(best_count);
        trace.final_set.insert(best_vertex);
        white.subtract(&closed[best_vertex]);
    }
    trace
}

// ---------------------------------------------------------------------------
// Exact solver
// ---------------------------------------------------------------------------

/// Computes the requested domination number exactly by branch and bound.
///
/// Preconditions: `total` needs no isolated vertices; `connected` needs a
/// connected graph; the empty graph is always an error. If the node budget
/// (default [`DEFAULT_NODE_BUDGET`]) runs out, the best set found so far is
/// returned with `optimal: false`.
pub fn domination_number(
    g: &Graph,
    kind: DominationKind,
    budget: Option<u64>,
) -> Result<DominationCertificate> {
    check_preconditions(g, kind)?;
    let budget = budget.unwrap_or(DEFAULT_NODE_BUDGET);
    let mut searcher = Searcher::new(g, budget, kind);
    match kind {
        DominationKind::Plain | DominationKind::Total => searcher.run_cover(),
        DominationKind::Connected => searcher.run_connected(),
    }
    debug_assert!(verifies(g, &searcher.best, kind));
    Ok(DominationCertificate {
        kind,
        set: searcher.best,
        value: searcher.best_size,
        optimal: !searcher.exhausted,
        nodes_explored: searcher.nodes,
    })
}

struct Searcher<'a> {
    g: &'a Graph,
    kind: DominationKind,
    closed: Vec<VertexSet>,
    open: Vec<VertexSet>,
    /// Coverage gained by adding a vertex: closed for plain, open for total.
    coverage_per_pick: usize,
    budget: u64,
    nodes: u64,
    exhausted: bool,
    best: VertexSet,
    best_size: usize,
}

impl<'a> Searcher<'a> {
    fn new(g: &'a Graph, budget: u64, kind: DominationKind) -> Self {
        let closed = g.closed_neighborhoods();
        let open = g.open_neighborhoods();
        let max_deg = (0..g.n()).map(|v| g.degree(v)).max().unwrap_or(0);
        let best = initial_incumbent(g, kind);
        let best_size = best.count();
        debug_assert!(verifies(g, &best, kind));
        Searcher {
            g,
            kind,
            closed,
            open,
            coverage_per_pick: match kind {
                DominationKind::Total => max_deg.max(1),
                _ => max_deg + 1,
            },
            budget,
            nodes: 0,
            exhausted: false,
            best,
            best_size,
        }
    }

    #[inline]
    fn tick(&mut self) -> bool {
        if self.nodes >= self.budget {
            self.exhausted = true;
            return false;
        }
        self.nodes += 1;
        true
    }

    // -- plain / total ------------------------------------------------------

    fn run_cover(&mut self) {
        let dominated = VertexSet::new(self.g.n());
        let forbidden = VertexSet::new(self.g.n());
        let mut chosen = Vec::new();
        self.search_cover(&dominated, &forbidden, &mut chosen);
    }

    fn search_cover(
        &mut self,
        dominated: &VertexSet,
        forbidden: &VertexSet,
        chosen: &mut Vec<usize>,
    ) {
        if !self.tick() {
            return;
        }
        let white = self.g.n() - dominated.count();
        if white == 0 {
            if chosen.len() < self.best_size {
                self.best_size = chosen.len();
                self.best = VertexSet::from_indices(self.g.n(), chosen.iter().copied());
            }
            return;
        }
        if chosen.len() + white.div_ceil(self.coverage_per_pick) >= self.best_size {
            return;
        }
        // Lowest-indexed undominated vertex; it must get a dominator from
        // its neighborhood. Branching by "first dominator picked" with the
        // earlier candidates forbidden partitions the solution space.
        let u = (0..self.g.n())
            .find(|&v| !dominated.contains(v))
            .expect("white > 0");
        let candidates = match self.kind {
            DominationKind::Total => self.open[u].difference(forbidden),
            _ => self.closed[u].difference(forbidden),
        };
        let mut forbidden = forbidden.clone();
        for w in candidates.iter() {
            let gain = match self.kind {
                DominationKind::Total => &self.open[w],
                _ => &self.closed[w],
            };
            let mut next_dominated = dominated.clone();
            next_dominated.union_with(gain);
            chosen.push(w);
            self.search_cover(&next_dominated, &forbidden, chosen);
            chosen.pop();
            if self.exhausted {
                return;
            }
            forbidden.insert(w);
        }
    }

    // -- connected ------------------------------------------------------------

    fn run_connected(&mut self) {
        let n = self.g.n();
        if n == 1 {
            // Only one candidate set exists.
            self.best = VertexSet::from_indices(1, [0]);
            self.best_size = 1;
            return;
        }
        // One search per choice of minimum vertex in the set; vertices
        // below the seed are excluded, so the searches partition solutions.
        let mut excluded = VertexSet::new(n);
        for seed in 0..n {
            if self.best_size == 1 || self.exhausted {
                break;
            }
            let in_set = VertexSet::from_indices(n, [seed]);
            self.search_connected(&in_set, &self.closed[seed].clone(), &excluded, 1);
            excluded.insert(seed);
        }
    }

    fn search_connected(
        &mut self,
        in_set: &VertexSet,
        dominated: &VertexSet,
        excluded: &VertexSet,
        size: usize,
    ) {
        if !self.tick() {
            return;
        }
        let white = self.g.n() - dominated.count();
        if white == 0 {
            if size < self.best_size {
                self.best_size = size;
                self.best = in_set.clone();
            }
            return;
        }
        if size + white.div_ceil(self.coverage_per_pick) >= self.best_size {
            return;
        }
        // Distance bound: a white vertex at reachable distance d (through
        // non-excluded vertices) needs at least d - 1 additions before a
        // dominator of it can join the connected set.
        match self.connected_lower_bound(in_set, dominated, excluded) {
            None => return, // some white vertex can never be dominated
            Some(lb_dist) => {
                if size + lb_dist >= self.best_size {
                    return;
                }
            }
        }

        // Frontier: vertices adjacent to the current set, not excluded.
        let mut frontier = VertexSet::new(self.g.n());
        for v in in_set.iter() {
            frontier.union_with(&self.open[v]);
        }
        frontier.subtract(in_set);
        frontier.subtract(excluded);

        // Branch on the frontier vertex covering the most white vertices
        // (lowest id among ties): either it joins the set or it never will.
        let mut pick = None;
        let mut pick_gain = 0;
        for c in frontier.iter() {
            let gain = self.closed[c].count() - self.closed[c].intersection_count(dominated);
            if gain > pick_gain {
                pick_gain = gain;
                pick = Some(c);
            }
        }
        let Some(c) = pick else {
            // No useful growth is possible (every frontier vertex covers
            // nothing new, or the frontier is empty) while whites remain.
            return;
        };

        let mut next_in = in_set.clone();
        next_in.insert(c);
        let mut next_dom = dominated.clone();
        next_dom.union_with(&self.closed[c]);
        self.search_connected(&next_in, &next_dom, excluded, size + 1);
        if self.exhausted {
            return;
        }

        let mut next_excl = excluded.clone();
        next_excl.insert(c);
        self.search_connected(in_set, dominated, &next_excl, size);
    }

    /// `None` when some white vertex has no reachable dominator; otherwise
    /// the minimum number of additions dictated by BFS distances.
    fn connected_lower_bound(
        &self,
        in_set: &VertexSet,
        dominated: &VertexSet,
        excluded: &VertexSet,
    ) -> Option<usize> {
        let n = self.g.n();
        let mut dist = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::new();
        for v in in_set.iter() {
            dist[v] = 0;
            queue.push_back(v);
        }
        while let Some(u) = queue.pop_front() {
            for &w in self.g.neighbors(u) {
                if dist[w] == usize::MAX && !excluded.contains(w) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        let mut needed = 0;
        for w in 0..n {
            if dominated.contains(w) {
                continue;
            }
            let closest_dominator = self.closed[w]
                .iter()
                .filter(|&d| !excluded.contains(d))
                .map(|d| dist[d])
                .min()
                .unwrap_or(usize::MAX);
            if closest_dominator == usize::MAX {
                return None;
            }
            needed = needed.max(closest_dominator);
        }
        Some(needed)
    }
}

/// A valid set of the requested kind to seed the incumbent.
fn initial_incumbent(g: &Graph, kind: DominationKind) -> VertexSet {
    match kind {
        DominationKind::Plain => greedy_dominating_set(g).final_set,
        DominationKind::Total => {
            // Patch the greedy set so members have neighbors inside.
            let mut s = greedy_dominating_set(g).final_set;
            for v in s.clone().iter() {
                if !g.neighbors(v).iter().any(|&w| s.contains(w)) {
                    s.insert(g.neighbors(v)[0]);
                }
            }
            s
        }
        DominationKind::Connected => {
            if g.n() == 1 {
                return VertexSet::from_indices(1, [0]);
            }
            // Internal vertices of a BFS spanning tree dominate the graph
            // and induce a connected subgraph.
            let mut is_leaf = vec![true; g.n()];
            let mut seen = VertexSet::new(g.n());
            seen.insert(0);
            let mut queue = std::collections::VecDeque::from([0]);
            while let Some(u) = queue.pop_front() {
                for &w in g.neighbors(u) {
                    if seen.insert(w) {
                        is_leaf[u] = false;
                        queue.push_back(w);
                    }
                }
            }
            let tree_internal = VertexSet::from_indices(g.n(), (0..g.n()).filter(|&v| !is_leaf[v]));
            let connected_greedy = connect_set(g, greedy_dominating_set(g).final_set);
            if connected_greedy.count() < tree_internal.count() {
                connected_greedy
            } else {
                tree_internal
            }
        }
    }
}

/// Joins the components induced by a dominating set with shortest paths
/// until it is connected. The input must dominate a connected graph.
fn connect_set(g: &Graph, mut s: VertexSet) -> VertexSet {
    loop {
        let Some(start) = s.first() else {
            return s;
        };
        // Component of the induced subgraph containing the lowest member.
        let mut blob = VertexSet::new(g.n());
        blob.insert(start);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if s.contains(w) && blob.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        if blob.count() == s.count() {
            return s;
        }
        // Shortest path from the blob to any other member; interior
        // vertices join the set and merge at least two components.
        let (dist, parent) = crate::cover::bfs_distances(g, &blob);
        let target = s
            .iter()
            .filter(|&v| !blob.contains(v))
            .min_by_key(|&v| dist[v])
            .expect("some member lies outside the blob");
        let mut cursor = target;
        while dist[cursor] != 0 {
            s.insert(cursor);
            cursor = parent[cursor];
        }
    }
}

// ---------------------------------------------------------------------------
// Brute-force oracle
// ---------------------------------------------------------------------------

const BRUTE_FORCE_MAX: usize = 24;

/// Exhaustive enumeration of vertex subsets by increasing size, on raw
/// `u32` masks. Independent of the branch-and-bound path; usable as an
/// oracle for graphs up to 24 vertices.
pub fn brute_force_number(g: &Graph, kind: DominationKind) -> Result<usize> {
    check_preconditions(g, kind)?;
    let n = g.n();
    if n > BRUTE_FORCE_MAX {
        return Err(Error::TooLargeForBruteForce {
            n,
            max: BRUTE_FORCE_MAX,
        });
    }
    let mut closed = vec![0u32; n];
    let mut open = vec![0u32; n];
    for v in 0..n {
        open[v] = g.neighbors(v).iter().fold(0u32, |acc, &w| acc | 1 << w);
        closed[v] = open[v] | 1 << v;
    }
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let limit = 1u32 << n;

    let accepts = |mask: u32| -> bool {
        let mut covered = 0u32;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            covered |= match kind {
                DominationKind::Total => open[v],
                _ => closed[v],
            };
        }
        if kind == DominationKind::Plain {
            covered |= mask;
        }
        if covered != full {
            return false;
        }
        if kind != DominationKind::Connected {
            return true;
        }
        // Connectivity of the induced subgraph, by mask flood fill.
        let mut reach = 1u32 << mask.trailing_zeros();
        loop {
            let mut grown = reach;
            let mut rest = reach;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                grown |= open[v] & mask;
            }
            if grown == reach {
                return reach == mask;
            }
            reach = grown;
        }
    };

    for size in 1..=n {
        let mut mask = (1u32 << size) - 1;
        while mask < limit {
            if accepts(mask) {
                return Ok(size);
            }
            mask = next_same_popcount(mask);
        }
    }
    unreachable!("the full vertex set satisfies every kind whose preconditions hold");
}

/// Next integer with the same popcount (Gosper's hack).
fn next_same_popcount(v: u32) -> u32 {
    let t = v | (v - 1);
    t.wrapping_add(1) | ((((!t) & (!t).wrapping_neg()) - 1) >> (v.trailing_zeros() + 1))
}

// ---------------------------------------------------------------------------
// Perfect codes on cycle tori
// ---------------------------------------------------------------------------

/// The diagonal perfect code `{(i, j) : 2i + j = 0 (mod 5)}` in the
/// Cartesian product of two n-cycles, for n a positive multiple of 5.
/// Translating a start vertex with period 5 in both directions hits every
/// closed neighborhood exactly once, so the set is efficient dominating
/// with exactly `n^2 / 5` vertices.
pub fn diagonal_perfect_code(n: usize) -> Result<VertexSet> {
    if n < 5 || !n.is_multiple_of(5) {
        return Err(Error::NotMultipleOfFive { n });
    }
    Ok(VertexSet::from_indices(
        n * n,
        (0..n).flat_map(|i| {
            (0..n)
                .filter(move |j| (2 * i + j) % 5 == 0)
                .map(move |j| i * n + j)
        }),
    ))
}
