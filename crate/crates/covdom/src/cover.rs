//! Covering projections and permutation voltage lifts.
//!
//! A cover is always represented by its explicit vertex map, whether it
//! came from a hand-given labelling or from [`lift`], so both go through
//! the same verification path. Lifted vertices use the fixed encoding
//! `(v, sheet) = v * k + sheet`, which lets tests and fixtures name them.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::VecDeque;
use std::fmt;

/// One permutation of `{0..k-1}` per base edge.
///
/// The permutation on edge `{u, v}` (stored with `u < v`, in the canonical
/// edge order of [`Graph::edges`]) acts on the oriented arc `u -> v`; the
/// reverse arc applies the inverse. `k = 1` forces every permutation to be
/// the identity.
#[derive(Clone, Debug)]
pub struct VoltageAssignment {
    base: Graph,
    k: usize,
    perms: Vec<Vec<usize>>,
}

impl VoltageAssignment {
    /// Validates one permutation per base edge, in canonical edge order.
    pub fn new(base: Graph, k: usize, perms: Vec<Vec<usize>>) -> Result<Self> {
        if k < 1 {
            return Err(Error::FoldTooSmall { k });
        }
        let edges = base.edges();
        if perms.len() != edges.len() {
            return Err(Error::VoltageEdgeMismatch {
                detail: format!("{} permutations for {} edges", perms.len(), edges.len()),
            });
        }
        for (&(u, v), perm) in edges.iter().zip(&perms) {
            if !is_permutation(perm, k) {
                return Err(Error::VoltageNotPermutation { u, v, k });
            }
        }
        Ok(VoltageAssignment { base, k, perms })
    }

    /// Identity permutation on every edge: the lift is k disjoint copies.
    pub fn identity(base: Graph, k: usize) -> Result<Self> {
        let m = base.edge_count();
        Self::new(base, k, vec![(0..k).collect(); m])
    }

    /// Uniformly random permutation per edge from a seeded generator.
    /// The same `(base, k, seed)` always yields the same assignment.
    pub fn random(base: Graph, k: usize, seed: u64) -> Result<Self> {
        if k < 1 {
            return Err(Error::FoldTooSmall { k });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let perms = (0..base.edge_count())
            .map(|_| {
                let mut p: Vec<usize> = (0..k).collect();
                p.shuffle(&mut rng);
                p
            })
            .collect();
        Self::new(base, k, perms)
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn permutations(&self) -> &[Vec<usize>] {
        &self.perms
    }

    /// One line per base edge: `u v p_0 p_1 … p_{k-1}`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for ((u, v), perm) in self.base.edges().into_iter().zip(&self.perms) {
            out.push_str(&format!("{u} {v}"));
            for image in perm {
                out.push_str(&format!(" {image}"));
            }
            out.push('\n');
        }
        out
    }

    /// Parses the voltage text format against a known base graph. Every
    /// base edge must appear exactly once; k is taken from the line width.
    pub fn parse(text: &str, base: Graph) -> Result<Self> {
        let edges = base.edges();
        let mut perms: Vec<Option<Vec<usize>>> = vec![None; edges.len()];
        let mut k = None;
        for (idx, line) in text.lines().enumerate() {
            let line_no = idx + 1;
            if line.trim().is_empty() {
                continue;
            }
            let nums: Vec<usize> = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse().map_err(|_| Error::Parse {
                        line: line_no,
                        message: format!("invalid number {tok:?}"),
                    })
                })
                .collect::<Result<_>>()?;
            if nums.len() < 3 {
                return Err(Error::Parse {
                    line: line_no,
                    message: "expected 'u v p_0 … p_{k-1}'".into(),
                });
            }
            let (u, v) = (nums[0], nums[1]);
            if u >= v {
                // The permutation acts on the low-to-high arc; a reversed
                // line would silently mean the inverse.
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("edge must be written least endpoint first, got {u} {v}"),
                });
            }
            let perm = nums[2..].to_vec();
            let this_k = perm.len();
            if *k.get_or_insert(this_k) != this_k {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("inconsistent fold count: {this_k} vs {}", k.unwrap()),
                });
            }
            let slot = edges.binary_search(&(u, v)).map_err(|_| Error::Parse {
                line: line_no,
                message: format!("{u}-{v} is not an edge of the base graph"),
            })?;
            if perms[slot].replace(perm).is_some() {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("edge {u}-{v} listed twice"),
                });
            }
        }
        let perms = perms
            .into_iter()
            .zip(&edges)
            .map(|(p, &(u, v))| {
                p.ok_or_else(|| Error::VoltageEdgeMismatch {
                    detail: format!("edge {u}-{v} has no voltage line"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(base, k.unwrap_or(1), perms)
    }
}

fn is_permutation(perm: &[usize], k: usize) -> bool {
    if perm.len() != k {
        return false;
    }
    let mut seen = vec![false; k];
    perm.iter()
        .all(|&p| p < k && !std::mem::replace(&mut seen[p], true))
}

/// A candidate covering projection: the vertex map `total -> base`
/// together with the claimed fold count. Construction only checks shape;
/// [`CoveringProjection::verify`] decides whether it is a genuine cover.
#[derive(Clone, Debug)]
pub struct CoveringProjection {
    total: Graph,
    base: Graph,
    map: Vec<usize>,
    k: usize,
}

/// Outcome of verifying a projection: valid, or the first violation found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProjectionVerdict {
    Valid {
        k: usize,
    },
    /// Some base vertex has an empty fiber.
    NotOnto {
        base_vertex: usize,
    },
    /// `deg(v) != deg(map(v))`.
    DegreeMismatch {
        vertex: usize,
    },
    /// Two neighbors of `vertex` share an image.
    NotInjectiveOnNeighborhood {
        vertex: usize,
        image: usize,
    },
    /// A neighbor of `vertex` maps outside the image's neighborhood.
    ImageNotInNeighborhood {
        vertex: usize,
        neighbor: usize,
    },
    /// Fibers differ in size over a connected base.
    NonConstantFiber {
        small: usize,
        large: usize,
    },
    /// Fibers all have one size, but not the declared one.
    FoldMismatch {
        declared: usize,
        actual: usize,
    },
}

impl ProjectionVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, ProjectionVerdict::Valid { .. })
    }
}

impl fmt::Display for ProjectionVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjectionVerdict::Valid { k } => write!(f, "valid {k}-fold cover"),
            ProjectionVerdict::NotOnto { base_vertex } => {
                write!(f, "not onto: base vertex {base_vertex} has an empty fiber")
            }
            ProjectionVerdict::DegreeMismatch { vertex } => {
                write!(
                    f,
                    "degree of vertex {vertex} differs from its image's degree"
                )
            }
            ProjectionVerdict::NotInjectiveOnNeighborhood { vertex, image } => write!(
                f,
                "two neighbors of vertex {vertex} map to the same vertex {image}"
            ),
            ProjectionVerdict::ImageNotInNeighborhood { vertex, neighbor } => write!(
                f,
                "neighbor {neighbor} of vertex {vertex} maps outside the neighborhood of \
                 the image of {vertex}"
            ),
            ProjectionVerdict::NonConstantFiber { small, large } => write!(
                f,
                "fiber sizes over a connected base differ ({small} vs {large})"
            ),
            ProjectionVerdict::FoldMismatch { declared, actual } => write!(
                f,
                "declared fold {declared} but every fiber has size {actual}"
            ),
        }
    }
}

impl CoveringProjection {
    /// Wraps a vertex map as a projection candidate.
    ///
    /// Rejects maps of the wrong length or with out-of-range images;
    /// everything else (onto-ness, local bijectivity, fiber sizes) is a
    /// verification verdict, not a construction error.
    pub fn new(total: Graph, base: Graph, map: Vec<usize>, k: usize) -> Result<Self> {
        if k < 1 {
            return Err(Error::FoldTooSmall { k });
        }
        if base.n() == 0 {
            return Err(Error::EmptyGraph);
        }
        if map.len() != total.n() {
            return Err(Error::ProjectionLengthMismatch {
                expected: total.n(),
                got: map.len(),
            });
        }
        if let Some(&bad) = map.iter().find(|&&img| img >= base.n()) {
            return Err(Error::VertexOutOfRange {
                vertex: bad,
                order: base.n(),
            });
        }
        Ok(CoveringProjection {
            total,
            base,
            map,
            k,
        })
    }

    pub fn total(&self) -> &Graph {
        &self.total
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Image of a total-graph vertex.
    #[inline]
    pub fn image(&self, v: usize) -> usize {
        self.map[v]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// Checks the covering conditions and returns the first violation:
    /// onto-ness, degree preservation, neighborhood bijectivity, and
    /// (over a connected base) constant fiber size matching the declared
    /// fold count.
    pub fn verify(&self) -> ProjectionVerdict {
        let mut fiber_sizes = vec![0usize; self.base.n()];
        for &img in &self.map {
            fiber_sizes[img] += 1;
        }
        if let Some(empty) = fiber_sizes.iter().position(|&c| c == 0) {
            return ProjectionVerdict::NotOnto { base_vertex: empty };
        }

        for v in 0..self.total.n() {
            let img = self.map[v];
            if self.total.degree(v) != self.base.degree(img) {
                return ProjectionVerdict::DegreeMismatch { vertex: v };
            }
            let mut seen = VertexSet::new(self.base.n());
            for &w in self.total.neighbors(v) {
                let w_img = self.map[w];
                if !seen.insert(w_img) {
                    return ProjectionVerdict::NotInjectiveOnNeighborhood {
                        vertex: v,
                        image: w_img,
                    };
                }
                if !self.base.has_edge(img, w_img) {
                    return ProjectionVerdict::ImageNotInNeighborhood {
                        vertex: v,
                        neighbor: w,
                    };
                }
            }
        }

        if self.base.is_connected() {
            let min = *fiber_sizes.iter().min().expect("base is nonempty here");
            let max = *fiber_sizes.iter().max().expect("base is nonempty here");
            if min != max {
                return ProjectionVerdict::NonConstantFiber {
                    small: min,
                    large: max,
                };
            }
            if min != self.k {
                return ProjectionVerdict::FoldMismatch {
                    declared: self.k,
                    actual: min,
                };
            }
        }
        ProjectionVerdict::Valid { k: self.k }
    }

    /// The preimage of one base vertex.
    pub fn fiber(&self, base_vertex: usize) -> Result<VertexSet> {
        if base_vertex >= self.base.n() {
            return Err(Error::VertexOutOfRange {
                vertex: base_vertex,
                order: self.base.n(),
            });
        }
        Ok(VertexSet::from_indices(
            self.total.n(),
            (0..self.total.n()).filter(|&v| self.map[v] == base_vertex),
        ))
    }

    /// The preimage of every vertex in `s`, i.e. the union of fibers.
    pub fn fiber_union(&self, s: &VertexSet) -> VertexSet {
        assert_eq!(
            s.universe(),
            self.base.n(),
            "set universe must match the base"
        );
        VertexSet::from_indices(
            self.total.n(),
            (0..self.total.n()).filter(|&v| s.contains(self.map[v])),
        )
    }

    /// Lifts a base subgraph: all fiber vertices of its vertices, all
    /// total-graph edges projecting onto its edges.
    pub fn preimage_subgraph(&self, sub: &BaseSubgraph) -> Result<LiftedSubgraph> {
        sub.validate_against(&self.base)?;
        let ids: Vec<usize> = (0..self.total.n())
            .filter(|&v| sub.vertices.contains(self.map[v]))
            .collect();
        let mut new_id = vec![usize::MAX; self.total.n()];
        for (i, &v) in ids.iter().enumerate() {
            new_id[v] = i;
        }
        let mut edges = Vec::new();
        for &v in &ids {
            for &w in self.total.neighbors(v) {
                if v < w && new_id[w] != usize::MAX && sub.has_edge(self.map[v], self.map[w]) {
                    edges.push((new_id[v], new_id[w]));
                }
            }
        }
        let graph =
            Graph::from_edge_list(ids.len(), &edges).expect("subgraph of a simple graph is simple");
        Ok(LiftedSubgraph {
            graph,
            total_ids: ids,
        })
    }

    /// Composes two stacked projections: if `self: G -> H` and
    /// `other: H -> F`, the result maps `G -> F` with fold `k1 * k2`.
    pub fn compose(&self, other: &CoveringProjection) -> Result<CoveringProjection> {
        if self.base != *other.total() {
            return Err(Error::NotSubgraph {
                detail: "projections do not stack: inner base differs from outer total".into(),
            });
        }
        let map = self.map.iter().map(|&mid| other.map[mid]).collect();
        CoveringProjection::new(
            self.total.clone(),
            other.base.clone(),
            map,
            self.k * other.k,
        )
    }

    /// Header `k n_total n_base`, then one `g_vertex f_vertex` line each.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.k, self.total.n(), self.base.n());
        for (v, &img) in self.map.iter().enumerate() {
            out.push_str(&format!("{v} {img}\n"));
        }
        out
    }

    /// Parses the projection text format against known total and base graphs.
    pub fn parse(text: &str, total: Graph, base: Graph) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing 'k n_total n_base' header".into(),
        })?;
        let nums: Vec<usize> = header
            .split_whitespace()
            .map(|tok| {
                tok.parse().map_err(|_| Error::Parse {
                    line: 1,
                    message: format!("invalid number {tok:?} in header"),
                })
            })
            .collect::<Result<_>>()?;
        let [k, n_total, n_base] = nums[..] else {
            return Err(Error::Parse {
                line: 1,
                message: "header must be 'k n_total n_base'".into(),
            });
        };
        if n_total != total.n() || n_base != base.n() {
            return Err(Error::Parse {
                line: 1,
                message: format!(
                    "header sizes {n_total}/{n_base} do not match the graphs ({}/{})",
                    total.n(),
                    base.n()
                ),
            });
        }
        let mut map = vec![usize::MAX; n_total];
        for (idx, line) in lines {
            let line_no = idx + 1;
            let nums: Vec<usize> = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse().map_err(|_| Error::Parse {
                        line: line_no,
                        message: format!("invalid number {tok:?}"),
                    })
                })
                .collect::<Result<_>>()?;
            let [g_vertex, f_vertex] = nums[..] else {
                return Err(Error::Parse {
                    line: line_no,
                    message: "expected 'g_vertex f_vertex'".into(),
                });
            };
            if g_vertex >= n_total {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("vertex {g_vertex} out of range"),
                });
            }
            if map[g_vertex] != usize::MAX {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("vertex {g_vertex} mapped twice"),
                });
            }
            map[g_vertex] = f_vertex;
        }
        if let Some(missing) = map.iter().position(|&img| img == usize::MAX) {
            return Err(Error::Parse {
                line: 1,
                message: format!("vertex {missing} has no image line"),
            });
        }
        CoveringProjection::new(total, base, map, k)
    }
}

/// A subgraph of a base graph: a vertex subset plus a subset of the edges
/// among them.
#[derive(Clone, Debug)]
pub struct BaseSubgraph {
    vertices: VertexSet,
    edges: Vec<(usize, usize)>,
}

impl BaseSubgraph {
    pub fn new(vertices: VertexSet, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let edges = edges
            .into_iter()
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        BaseSubgraph { vertices, edges }
    }

    pub fn single_vertex(n: usize, v: usize) -> Self {
        BaseSubgraph {
            vertices: VertexSet::from_indices(n, [v]),
            edges: Vec::new(),
        }
    }

    /// The cycle through `verts` in order (closing edge included).
    pub fn cycle_through(n: usize, verts: &[usize]) -> Self {
        let edges = (0..verts.len())
            .map(|i| (verts[i], verts[(i + 1) % verts.len()]))
            .collect::<Vec<_>>();
        Self::new(VertexSet::from_indices(n, verts.iter().copied()), edges)
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        self.edges.contains(&key)
    }

    fn validate_against(&self, base: &Graph) -> Result<()> {
        if self.vertices.universe() != base.n() {
            return Err(Error::NotSubgraph {
                detail: format!(
                    "vertex set universe {} does not match base order {}",
                    self.vertices.universe(),
                    base.n()
                ),
            });
        }
        for &(u, v) in &self.edges {
            if !self.vertices.contains(u) || !self.vertices.contains(v) {
                return Err(Error::NotSubgraph {
                    detail: format!("edge {u}-{v} has an endpoint outside the vertex set"),
                });
            }
            if !base.has_edge(u, v) {
                return Err(Error::NotSubgraph {
                    detail: format!("{u}-{v} is not an edge of the base graph"),
                });
            }
        }
        Ok(())
    }
}

/// Result of lifting a base subgraph: a graph on fresh dense ids plus the
/// original total-graph id of each vertex.
#[derive(Clone, Debug)]
pub struct LiftedSubgraph {
    pub graph: Graph,
    pub total_ids: Vec<usize>,
}

/// Constructs the k-fold cover defined by a voltage assignment.
///
/// Vertex `(v, sheet)` of the total graph is `v * k + sheet`; each base
/// edge `{u, v}` (with `u < v`, carrying permutation `sigma`) contributes
/// the edges `{(u, i), (v, sigma(i))}`. The base must be connected, so the
/// fold count is well defined.
pub fn lift(voltages: &VoltageAssignment) -> Result<(Graph, CoveringProjection)> {
    let base = voltages.base();
    let k = voltages.k();
    if base.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !base.is_connected() {
        return Err(Error::DisconnectedBase);
    }
    let mut edges = Vec::with_capacity(base.edge_count() * k);
    for ((u, v), perm) in base.edges().into_iter().zip(voltages.permutations()) {
        for (sheet, &image) in perm.iter().enumerate() {
            edges.push((u * k + sheet, v * k + image));
        }
    }
    let total = Graph::from_edge_list(base.n() * k, &edges)
        .expect("voltage lift of a simple graph is simple");
    let total = match base.name() {
        Some(name) => total.with_name(format!("{k}-lift of {name}")),
        None => total,
    };
    let map = (0..base.n() * k).map(|x| x / k).collect();
    let projection = CoveringProjection::new(total.clone(), base.clone(), map, k)?;
    debug_assert!(projection.verify().is_valid());
    Ok((total, projection))
}

/// Uniformly random voltages; see [`VoltageAssignment::random`].
pub fn random_voltages(base: &Graph, k: usize, seed: u64) -> Result<VoltageAssignment> {
    VoltageAssignment::random(base.clone(), k, seed)
}

/// Shortest-path distances from a set of sources, BFS with ascending
/// neighbor order. `usize::MAX` marks unreachable vertices.
pub(crate) fn bfs_distances(g: &Graph, sources: &VertexSet) -> (Vec<usize>, Vec<usize>) {
    let mut dist = vec![usize::MAX; g.n()];
    let mut parent = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::new();
    for v in sources.iter() {
        dist[v] = 0;
        queue.push_back(v);
    }
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    (dist, parent)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, petersen};

    fn c3() -> Graph {
        cycle(3).unwrap()
    }

    #[test]
    fn identity_lift_is_the_graph_itself() {
        let (total, proj) = lift(&VoltageAssignment::identity(c3(), 1).unwrap()).unwrap();
        assert_eq!(total, c3());
        assert_eq!(proj.map(), &[0, 1, 2]);
        assert!(proj.verify().is_valid());
    }

    #[test]
    fn swap_voltage_gives_one_six_cycle() {
        // Net voltage around the triangle is the transposition, so the
        // cycle lifts to a single 6-cycle.
        let v = VoltageAssignment::new(c3(), 2, vec![vec![0, 1], vec![0, 1], vec![1, 0]]).unwrap();
        let (total, proj) = lift(&v).unwrap();
        assert_eq!(total.n(), 6);
        assert!(total.is_connected());
        assert!((0..6).all(|v| total.degree(v) == 2));
        assert!(proj.verify().is_valid());
    }

    #[test]
    fn identity_voltage_gives_two_triangles() {
        let (total, _) = lift(&VoltageAssignment::identity(c3(), 2).unwrap()).unwrap();
        assert_eq!(total.n(), 6);
        let comps = total.components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.count() == 3));
    }

    #[test]
    fn disconnected_base_rejected() {
        let two_triangles =
            Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        let v = VoltageAssignment::identity(two_triangles, 2).unwrap();
        assert!(matches!(lift(&v), Err(Error::DisconnectedBase)));
    }

    #[test]
    fn zero_fold_rejected() {
        assert!(matches!(
            VoltageAssignment::identity(c3(), 0),
            Err(Error::FoldTooSmall { k: 0 })
        ));
    }

    #[test]
    fn empty_base_projection_rejected() {
        assert!(matches!(
            CoveringProjection::new(Graph::edgeless(0), Graph::edgeless(0), vec![], 1),
            Err(Error::EmptyGraph)
        ));
    }

    #[test]
    fn non_permutation_rejected() {
        assert!(matches!(
            VoltageAssignment::new(c3(), 2, vec![vec![0, 0], vec![0, 1], vec![0, 1]]),
            Err(Error::VoltageNotPermutation { u: 0, v: 1, k: 2 })
        ));
    }

    #[test]
    fn identity_projection_verifies() {
        let g = petersen();
        let map = (0..10).collect();
        let p = CoveringProjection::new(g.clone(), g, map, 1).unwrap();
        assert_eq!(p.verify(), ProjectionVerdict::Valid { k: 1 });
        assert_eq!(p.fiber(3).unwrap().to_vec(), vec![3]);
    }

    #[test]
    fn collapsing_adjacent_vertices_fails_verification() {
        // Map both endpoints of each C6 edge pair onto one C3 vertex in a
        // non-covering way: images of neighbors leave the neighborhood.
        let p =
            CoveringProjection::new(cycle(6).unwrap(), c3(), vec![0, 0, 1, 1, 2, 2], 2).unwrap();
        let verdict = p.verify();
        assert!(matches!(
            verdict,
            ProjectionVerdict::ImageNotInNeighborhood { .. }
        ));
    }

    #[test]
    fn not_onto_detected() {
        let p = CoveringProjection::new(c3(), c3(), vec![0, 1, 0], 1).unwrap();
        assert!(matches!(
            p.verify(),
            ProjectionVerdict::NotOnto { base_vertex: 2 }
        ));
    }

    #[test]
    fn fold_mismatch_detected() {
        let (total, _) = lift(&VoltageAssignment::identity(c3(), 2).unwrap()).unwrap();
        let map = (0..6).map(|x| x / 2).collect();
        let p = CoveringProjection::new(total, c3(), map, 3).unwrap();
        assert!(matches!(
            p.verify(),
            ProjectionVerdict::FoldMismatch {
                declared: 3,
                actual: 2
            }
        ));
    }

    #[test]
    fn random_voltages_deterministic() {
        let a = random_voltages(&petersen(), 2, 7).unwrap();
        let b = random_voltages(&petersen(), 2, 7).unwrap();
        assert_eq!(a.permutations(), b.permutations());
        let c = random_voltages(&petersen(), 2, 8).unwrap();
        let (ga, _) = lift(&a).unwrap();
        let (gc, _) = lift(&c).unwrap();
        // Different seeds almost surely give different lifts; both verify.
        assert_eq!(ga.n(), gc.n());
    }

    #[test]
    fn fold_one_voltages_are_identity() {
        let v = random_voltages(&c3(), 1, 12345).unwrap();
        assert!(v.permutations().iter().all(|p| p == &[0]));
    }

    #[test]
    fn random_lift_is_regular_cover() {
        let (total, proj) = lift(&random_voltages(&petersen(), 3, 1).unwrap()).unwrap();
        assert_eq!(total.n(), 30);
        assert!((0..30).all(|v| total.degree(v) == 3));
        assert!(proj.verify().is_valid());
        for v in 0..10 {
            assert_eq!(proj.fiber(v).unwrap().count(), 3);
        }
    }

    #[test]
    fn single_vertex_preimage_is_edgeless_fiber() {
        let (_, proj) = lift(&random_voltages(&petersen(), 3, 5).unwrap()).unwrap();
        let lifted = proj
            .preimage_subgraph(&BaseSubgraph::single_vertex(10, 4))
            .unwrap();
        assert_eq!(lifted.graph.n(), 3);
        assert_eq!(lifted.graph.edge_count(), 0);
        assert_eq!(lifted.total_ids, vec![4 * 3, 4 * 3 + 1, 4 * 3 + 2]);
    }

    #[test]
    fn spanning_tree_lifts_to_k_copies() {
        let base = petersen();
        let (_, proj) = lift(&random_voltages(&base, 2, 9).unwrap()).unwrap();
        // A star at vertex 0 is a tree subgraph.
        let tree = BaseSubgraph::new(
            VertexSet::from_indices(10, [0, 1, 4, 5]),
            [(0, 1), (0, 4), (0, 5)],
        );
        let lifted = proj.preimage_subgraph(&tree).unwrap();
        let comps = lifted.graph.components();
        assert_eq!(comps.len(), 2);
        for comp in comps {
            assert_eq!(comp.count(), 4);
        }
    }

    #[test]
    fn preimage_rejects_non_subgraph() {
        let (_, proj) = lift(&VoltageAssignment::identity(c3(), 2).unwrap()).unwrap();
        let bogus = BaseSubgraph::new(VertexSet::from_indices(3, [0, 1]), [(0, 2)]);
        assert!(proj.preimage_subgraph(&bogus).is_err());
    }

    #[test]
    fn composition_multiplies_folds() {
        let (mid, p_mid) = lift(&random_voltages(&c3(), 2, 3).unwrap()).unwrap();
        let (_, p_top) = lift(&random_voltages(&mid, 3, 4).unwrap()).unwrap();
        let composed = p_top.compose(&p_mid).unwrap();
        assert_eq!(composed.k(), 6);
        assert_eq!(composed.verify(), ProjectionVerdict::Valid { k: 6 });
    }

    #[test]
    fn projection_text_roundtrip() {
        let (total, proj) = lift(&random_voltages(&petersen(), 2, 11).unwrap()).unwrap();
        let text = proj.to_text();
        let back = CoveringProjection::parse(&text, total, petersen()).unwrap();
        assert_eq!(back.map(), proj.map());
        assert_eq!(back.k(), 2);
    }

    #[test]
    fn voltage_text_roundtrip() {
        let v = random_voltages(&petersen(), 3, 21).unwrap();
        let text = v.to_text();
        let back = VoltageAssignment::parse(&text, petersen()).unwrap();
        assert_eq!(back.permutations(), v.permutations());
    }

    #[test]
    fn voltage_text_rejects_bad_lines() {
        // Reversed endpoints would flip the arc the permutation acts on.
        assert!(VoltageAssignment::parse("1 0 0 1\n0 2 0 1\n1 2 0 1\n", c3()).is_err());
        // Duplicate edge line.
        assert!(VoltageAssignment::parse("0 1 0 1\n0 1 1 0\n0 2 0 1\n1 2 0 1\n", c3()).is_err());
        // Missing edge line.
        assert!(VoltageAssignment::parse("0 1 0 1\n0 2 0 1\n", c3()).is_err());
        // Non-edge.
        assert!(VoltageAssignment::parse("0 3 0 1\n", c3()).is_err());
    }
}
