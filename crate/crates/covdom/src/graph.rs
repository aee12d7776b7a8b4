//! Simple undirected graphs on dense vertex ids `0..n`, the named
//! generators used throughout the crate, and the plain edge-list text
//! format (`"n m"` header, then one `"u v"` line per edge).
//!
//! Graphs are canonical: adjacency lists are strictly sorted, and two
//! graphs are equal exactly when their vertex counts and adjacency lists
//! agree (labels do not participate in equality).

use crate::bitset::VertexSet;
use crate::error::Error;
use serde::Serialize;
use std::collections::VecDeque;
use std::fmt;

/// Simple undirected graph. No loops, no parallel edges.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    name: Option<String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}
impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.adj.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph({}, n={}, m={})",
            self.name.as_deref().unwrap_or("unnamed"),
            self.n,
            self.edge_count()
        )
    }
}

/// Degree and connectivity summary, one traversal's worth of facts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphStats {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub connected: bool,
    /// `Some(r)` when every vertex has degree exactly `r` (and `n > 0`).
    pub regular: Option<usize>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn edgeless(n: usize) -> Graph {
        Graph {
            n,
            adj: vec![Vec::new(); n],
            name: None,
        }
    }

    /// Builds the canonical graph from an explicit edge list.
    ///
    /// Self-loops, duplicate edges (in either orientation) and endpoints
    /// `>= n` are errors, not silent normalization.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph, Error> {
        let mut g = Graph::edgeless(n);
        for &(u, v) in edges {
            g.add_edge_checked(u, v)?;
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        Ok(g)
    }

    fn add_edge_checked(&mut self, u: usize, v: usize) -> Result<(), Error> {
        if u >= self.n || v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: u.max(v),
                order: self.n,
            });
        }
        if u == v {
            return Err(Error::SelfLoop { vertex: u });
        }
        if self.adj[u].contains(&v) {
            return Err(Error::DuplicateEdge {
                u: u.min(v),
                v: u.max(v),
            });
        }
        self.adj[u].push(v);
        self.adj[v].push(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` pairs with `u < v`, lexicographically sorted.
    /// This is the canonical edge order voltage assignments index into.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Graph {
        self.name = Some(name.into());
        self
    }

    /// Closed neighborhood `N[v]` for every vertex, as bitsets.
    pub fn closed_neighborhoods(&self) -> Vec<VertexSet> {
        (0..self.n)
            .map(|v| {
                let mut s = VertexSet::from_indices(self.n, self.adj[v].iter().copied());
                s.insert(v);
                s
            })
            .collect()
    }

    /// Open neighborhood `N(v)` for every vertex, as bitsets.
    pub fn open_neighborhoods(&self) -> Vec<VertexSet> {
        (0..self.n)
            .map(|v| VertexSet::from_indices(self.n, self.adj[v].iter().copied()))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.bfs_reach(0).count() == self.n
    }

    /// Vertices reachable from `start`, in BFS discovery order with
    /// neighbors scanned ascending (deterministic).
    pub fn bfs_reach(&self, start: usize) -> VertexSet {
        let mut seen = VertexSet::new(self.n);
        seen.insert(start);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut unseen = VertexSet::full(self.n);
        let mut out = Vec::new();
        while let Some(start) = unseen.first() {
            let comp = self.bfs_reach(start);
            unseen.subtract(&comp);
            out.push(comp);
        }
        out
    }

    /// True when the subgraph induced by `set` is connected (a single
    /// vertex counts; the empty set does not).
    pub fn induced_connected(&self, set: &VertexSet) -> bool {
        let Some(start) = set.first() else {
            return false;
        };
        let mut seen = VertexSet::new(self.n);
        seen.insert(start);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if set.contains(w) && seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen.count() == set.count()
    }

    pub fn stats(&self) -> GraphStats {
        let degs = (0..self.n).map(|v| self.degree(v));
        let max_degree = degs.clone().max().unwrap_or(0);
        let min_degree = degs.min().unwrap_or(0);
        GraphStats {
            n: self.n,
            m: self.edge_count(),
            max_degree,
            min_degree,
            connected: self.is_connected(),
            regular: (self.n > 0 && max_degree == min_degree).then_some(max_degree),
        }
    }
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

/// Cycle `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph, Error> {
    if n < 3 {
        return Err(Error::CycleTooShort { n });
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::from_edge_list(n, &edges)?.with_name(format!("C{n}")))
}

/// Path `P_n` on `n >= 1` vertices.
pub fn path(n: usize) -> Result<Graph, Error> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(Graph::from_edge_list(n, &edges)?.with_name(format!("P{n}")))
}

/// The Petersen graph, labelled outer cycle first: vertices 0..5 are the
/// outer 5-cycle, 5..10 the inner vertices in the fixed order the
/// double-cover fixture refers to.
pub fn petersen() -> Graph {
    let edges = [
        // outer cycle
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 0),
        // spokes
        (0, 5),
        (1, 8),
        (2, 6),
        (3, 9),
        (4, 7),
        // inner cycle
        (5, 6),
        (6, 7),
        (7, 8),
        (8, 9),
        (9, 5),
    ];
    Graph::from_edge_list(10, &edges)
        .expect("fixed edge table")
        .with_name("Petersen")
}

/// The dodecahedron graph, labelled so that vertex `v` projects onto
/// Petersen vertex `v % 10` under the standard double cover: 0..5 and
/// 10..15 are the two pentagon fibers, 5..10 and 15..20 the inner ones.
pub fn dodecahedron() -> Graph {
    let edges = [
        (11, 18),
        (13, 19),
        (12, 16),
        (14, 17),
        (10, 15),
        (0, 5),
        (2, 6),
        (4, 7),
        (1, 8),
        (3, 9),
        (5, 6),
        (6, 7),
        (8, 7),
        (9, 8),
        (9, 5),
        (0, 11),
        (2, 11),
        (2, 13),
        (4, 13),
        (4, 10),
        (1, 10),
        (12, 1),
        (12, 3),
        (0, 14),
        (3, 14),
        (18, 19),
        (15, 19),
        (16, 15),
        (16, 17),
        (18, 17),
    ];
    Graph::from_edge_list(20, &edges)
        .expect("fixed edge table")
        .with_name("Dodecahedron")
}

/// The `rows x cols` grid graph (`P_rows □ P_cols`), row-major ids.
pub fn grid(rows: usize, cols: usize) -> Result<Graph, Error> {
    if rows == 0 || cols == 0 {
        return Err(Error::EmptyGraph);
    }
    let g = cartesian_product(&path(rows)?, &path(cols)?);
    Ok(g.with_name(format!("{rows}x{cols} grid")))
}

/// Cartesian product `g1 □ g2`: vertex `(u, v)` gets id `u * n2 + v`;
/// `(u, v) ~ (u', v')` iff one coordinate is equal and the other adjacent.
pub fn cartesian_product(g1: &Graph, g2: &Graph) -> Graph {
    let (n1, n2) = (g1.n(), g2.n());
    let mut edges = Vec::new();
    for u in 0..n1 {
        for v in 0..n2 {
            let id = u * n2 + v;
            for &w in g2.neighbors(v) {
                if v < w {
                    edges.push((id, u * n2 + w));
                }
            }
            for &w in g1.neighbors(u) {
                if u < w {
                    edges.push((id, w * n2 + v));
                }
            }
        }
    }
    let g = Graph::from_edge_list(n1 * n2, &edges).expect("product of simple graphs is simple");
    match (g1.name(), g2.name()) {
        (Some(a), Some(b)) => g.with_name(format!("{a}□{b}")),
        _ => g,
    }
}

// ---------------------------------------------------------------------------
// Edge-list text format
// ---------------------------------------------------------------------------

/// Renders the plain text format: `"n m"` header, one `"u v"` line per edge.
pub fn to_edge_list_text(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses the plain edge-list text format.
pub fn parse_edge_list_text(text: &str) -> Result<Graph, Error> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing 'n m' header".into(),
    })?;
    let mut parts = header.split_whitespace();
    let parse_num = |s: Option<&str>, line: usize, what: &str| -> Result<usize, Error> {
        s.ok_or_else(|| Error::Parse {
            line,
            message: format!("missing {what}"),
        })?
        .parse()
        .map_err(|_| Error::Parse {
            line,
            message: format!("invalid {what}"),
        })
    };
    let n = parse_num(parts.next(), 1, "vertex count")?;
    let m = parse_num(parts.next(), 1, "edge count")?;
    let mut edges = Vec::with_capacity(m);
    for (idx, line) in lines {
        let mut parts = line.split_whitespace();
        let u = parse_num(parts.next(), idx + 1, "edge endpoint")?;
        let v = parse_num(parts.next(), idx + 1, "edge endpoint")?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: 1,
            message: format!("header promises {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_edge_list(n, &edges)
}
