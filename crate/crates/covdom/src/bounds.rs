//! Cover bounds as exact rationals, constructive witnesses for the two
//! upper bounds, and the sandwich checker.
//!
//! All bound arithmetic is exact: values are rationals or square roots of
//! rationals, and comparisons against integer exact values never touch
//! floating point (square-root bounds compare via squaring). Floats only
//! appear in display output.

use crate::bitset::VertexSet;
use crate::cover::{bfs_distances, BaseSubgraph, CoveringProjection};
use crate::domsolve::{
    self, domination_number, is_connected_dominating, DominationCertificate, DominationKind,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::fmt;

pub type Rational = Ratio<i64>;

/// Largest degree for which `H(d)` still fits in an `i64` ratio.
const MAX_HARMONIC_DEGREE: usize = 40;

/// Exact harmonic number `H(d) = 1 + 1/2 + … + 1/d`.
pub fn harmonic(d: usize) -> Result<Rational> {
    if d < 1 {
        return Err(Error::HarmonicDegree { d });
    }
    if d > MAX_HARMONIC_DEGREE {
        return Err(Error::HarmonicOverflow {
            d,
            max: MAX_HARMONIC_DEGREE,
        });
    }
    Ok((1..=d as i64).map(|i| Rational::new(1, i)).sum())
}

/// An exact bound value: a rational, or the square root of one.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum BoundValue {
    Exact(Rational),
    /// `SqrtOf(q)` stands for the nonnegative root of `q >= 0`.
    SqrtOf(Rational),
}

impl BoundValue {
    pub fn integer(v: usize) -> Self {
        BoundValue::Exact(Rational::from_integer(v as i64))
    }

    /// Exact `self <= other`; square roots compare by squaring.
    pub fn le(&self, other: &BoundValue) -> bool {
        use BoundValue::*;
        match (self, other) {
            (Exact(a), Exact(b)) => a <= b,
            (SqrtOf(a), SqrtOf(b)) => a <= b,
            (SqrtOf(a), Exact(b)) => !b.is_negative() && *a <= b * b,
            (Exact(a), SqrtOf(b)) => a.is_negative() || a.is_zero() || a * a <= *b,
        }
    }

    /// Decimal rendering for display; never used in comparisons.
    pub fn approx(&self) -> f64 {
        match self {
            BoundValue::Exact(q) => q.to_f64().unwrap_or(f64::NAN),
            BoundValue::SqrtOf(q) => q.to_f64().unwrap_or(f64::NAN).sqrt(),
        }
    }
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundValue::Exact(q) if q.is_integer() => write!(f, "{}", q.numer()),
            BoundValue::Exact(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            BoundValue::SqrtOf(q) if q.is_integer() => write!(f, "sqrt({})", q.numer()),
            BoundValue::SqrtOf(q) => write!(f, "sqrt({}/{})", q.numer(), q.denom()),
        }
    }
}

impl Serialize for BoundValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("BoundValue", 2)?;
        s.serialize_field("value", &self.to_string())?;
        s.serialize_field("approx", &self.approx())?;
        s.end()
    }
}

/// One named bound row.
#[derive(Clone, Debug, Serialize)]
pub struct BoundRow {
    pub name: &'static str,
    #[serde(flatten)]
    pub value: BoundValue,
}

impl BoundRow {
    fn new(name: &'static str, value: BoundValue) -> Self {
        BoundRow { name, value }
    }
}

/// Exact value of the covered graph, or the best found when the solve ran
/// out of budget (in which case no inequality against it is asserted).
#[derive(Clone, Copy, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExactOrSkipped {
    Exact { value: usize },
    SkippedBudget { best_found: usize },
}

impl ExactOrSkipped {
    pub fn exact(&self) -> Option<usize> {
        match self {
            ExactOrSkipped::Exact { value } => Some(*value),
            ExactOrSkipped::SkippedBudget { .. } => None,
        }
    }

    fn from_certificate(cert: &DominationCertificate) -> Self {
        if cert.optimal {
            ExactOrSkipped::Exact { value: cert.value }
        } else {
            ExactOrSkipped::SkippedBudget {
                best_found: cert.value,
            }
        }
    }
}

/// Identifies the `(F, G, k)` triple a report refers to.
#[derive(Clone, Debug, Serialize)]
pub struct CoverContext {
    pub base_g6: String,
    pub total_g6: String,
    pub base_name: Option<String>,
    pub total_name: Option<String>,
    pub k: usize,
}

impl CoverContext {
    pub fn of(p: &CoveringProjection) -> Self {
        CoverContext {
            base_g6: to_graph6(p.base()),
            total_g6: to_graph6(p.total()),
            base_name: p.base().name().map(String::from),
            total_name: p.total().name().map(String::from),
            k: p.k(),
        }
    }
}

/// All applicable bounds for one `(cover, kind)` pair, next to the exact
/// values they sandwich.
#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub context: CoverContext,
    pub kind: DominationKind,
    pub lowers: Vec<BoundRow>,
    pub uppers: Vec<BoundRow>,
    pub exact_base: usize,
    pub exact_total: ExactOrSkipped,
    /// `H(max degree)` as a string rational; absent only for edgeless bases.
    pub h_delta: Option<String>,
}

/// The bound rows applicable to one kind, given the base's exact value,
/// the fold count, and the base's regularity/maximum degree.
///
/// Rows: `fold` (k), `base` (the base's value), `geometric` (the root of
/// k times the base value) for every kind; `harmonic` and, when the
/// maximum degree is 2, `cycle` for plain; `cubic` (3/5) and
/// `quartic-quintic` (1/2) for plain and total on 3- resp. 4/5-regular
/// bases; upper `lift` (k times the base value) for plain and total;
/// upper `connector` (k(value+2)-2) for connected.
pub fn cover_bounds(
    exact_base: usize,
    k: usize,
    kind: DominationKind,
    regularity: Option<usize>,
    max_degree: usize,
) -> Result<(Vec<BoundRow>, Vec<BoundRow>)> {
    let value = Rational::from_integer(exact_base as i64);
    let fold = Rational::from_integer(k as i64);
    let product = fold * value;

    let mut lowers = vec![
        BoundRow::new("fold", BoundValue::Exact(fold)),
        BoundRow::new("base", BoundValue::Exact(value)),
        BoundRow::new("geometric", BoundValue::SqrtOf(product)),
    ];
    if kind == DominationKind::Plain && max_degree >= 1 {
        lowers.push(BoundRow::new(
            "harmonic",
            BoundValue::Exact(product / harmonic(max_degree)?),
        ));
        if max_degree == 2 {
            lowers.push(BoundRow::new(
                "cycle",
                BoundValue::Exact(Rational::new(2, 3) * product),
            ));
        }
    }
    if matches!(kind, DominationKind::Plain | DominationKind::Total) {
        match regularity {
            Some(3) => lowers.push(BoundRow::new(
                "cubic",
                BoundValue::Exact(Rational::new(3, 5) * product),
            )),
            Some(4 | 5) => lowers.push(BoundRow::new(
                "quartic-quintic",
                BoundValue::Exact(Rational::new(1, 2) * product),
            )),
            _ => {}
        }
    }

    let uppers = match kind {
        DominationKind::Plain | DominationKind::Total => {
            vec![BoundRow::new("lift", BoundValue::Exact(product))]
        }
        DominationKind::Connected => vec![BoundRow::new(
            "connector",
            BoundValue::Exact(
                fold * (value + Rational::from_integer(2)) - Rational::from_integer(2),
            ),
        )],
    };
    Ok((lowers, uppers))
}

// ---------------------------------------------------------------------------
// Constructive witnesses
// ---------------------------------------------------------------------------

/// Lifts a (plain or total) dominating set of the base through the
/// projection: the union of the fibers of its members. The result has
/// exactly `k * |s|` vertices and satisfies the same kind of domination
/// on the covering graph.
pub fn lift_dominating_set(
    p: &CoveringProjection,
    s: &VertexSet,
    kind: DominationKind,
) -> Result<VertexSet> {
    if kind == DominationKind::Connected {
        return Err(Error::NotDominating {
            kind: "liftable (connected sets need the tree connector)".into(),
        });
    }
    let verdict = p.verify();
    if !verdict.is_valid() {
        return Err(Error::InvalidProjection {
            verdict: verdict.to_string(),
        });
    }
    let ok = match kind {
        DominationKind::Plain => domsolve::is_dominating(p.base(), s),
        DominationKind::Total => domsolve::is_total_dominating(p.base(), s),
        DominationKind::Connected => unreachable!(),
    };
    if !ok {
        return Err(Error::NotDominating {
            kind: kind.to_string(),
        });
    }
    let lifted = p.fiber_union(s);
    debug_assert_eq!(lifted.count(), p.k() * s.count());
    debug_assert!(match kind {
        DominationKind::Plain => domsolve::is_dominating(p.total(), &lifted),
        _ => domsolve::is_total_dominating(p.total(), &lifted),
    });
    Ok(lifted)
}

/// Witness produced by [`connect_lifted_trees`]: the k lifted tree
/// components, the at-most-3-edge paths that join them, and the final
/// connected dominating set of the covering graph.
#[derive(Clone, Debug, Serialize)]
pub struct ConnectorCertificate {
    pub components: Vec<VertexSet>,
    /// Each path as its vertex sequence; `len - 1 <= 3` edges.
    pub paths: Vec<Vec<usize>>,
    pub result: VertexSet,
}

impl ConnectorCertificate {
    pub fn size(&self) -> usize {
        self.result.count()
    }
}

/// Turns a connected dominating set of the base into one of the covering
/// graph of size at most `k(|s| + 2) - 2`.
///
/// A spanning tree of the subgraph induced by `s` lifts to k disjoint
/// isomorphic trees whose union already dominates; the trees are then
/// attached one at a time along shortest paths. Because the lifted trees
/// dominate everything, no such path can exceed 3 edges; hitting a longer
/// one is reported as an error rather than silently accepted, since it
/// would contradict the cover structure.
///
/// Determinism: the spanning tree is BFS from the lowest vertex with
/// ascending neighbors; the attachment order scans all remaining trees
/// and picks the overall shortest path, tie-broken by lowest endpoint id.
pub fn connect_lifted_trees(p: &CoveringProjection, s: &VertexSet) -> Result<ConnectorCertificate> {
    let verdict = p.verify();
    if !verdict.is_valid() {
        return Err(Error::InvalidProjection {
            verdict: verdict.to_string(),
        });
    }
    if !is_connected_dominating(p.base(), s) {
        return Err(Error::NotDominating {
            kind: "connected".into(),
        });
    }
    let total = p.total();
    if !total.is_connected() {
        return Err(Error::Disconnected);
    }

    let tree_edges = induced_spanning_tree(p.base(), s);
    let lifted = p.preimage_subgraph(&BaseSubgraph::new(s.clone(), tree_edges))?;
    let components: Vec<VertexSet> = lifted
        .graph
        .components()
        .into_iter()
        .map(|comp| VertexSet::from_indices(total.n(), comp.iter().map(|v| lifted.total_ids[v])))
        .collect();
    debug_assert_eq!(components.len(), p.k());

    let mut blob = components[0].clone();
    let mut remaining: Vec<VertexSet> = components[1..].to_vec();
    let mut paths = Vec::new();
    while !remaining.is_empty() {
        let (dist, parent) = bfs_distances(total, &blob);
        let mut target: Option<(usize, usize)> = None; // (distance, vertex)
        for tree in &remaining {
            for v in tree.iter() {
                if target.is_none_or(|(d, _)| dist[v] < d) {
                    target = Some((dist[v], v));
                }
            }
        }
        let (d, v) = target.expect("remaining trees are nonempty");
        if d > 3 {
            return Err(Error::ConnectorPathTooLong { len: d });
        }
        let mut path = Vec::with_capacity(d + 1);
        let mut cursor = v;
        loop {
            path.push(cursor);
            if dist[cursor] == 0 {
                break;
            }
            cursor = parent[cursor];
        }
        path.reverse(); // blob end first
        for &x in &path {
            blob.insert(x);
        }
        let idx = remaining
            .iter()
            .position(|t| t.contains(v))
            .expect("v is in a remaining tree");
        blob.union_with(&remaining.swap_remove(idx));
        paths.push(path);
    }

    debug_assert!(blob.count() <= p.k() * (s.count() + 2) - 2);
    debug_assert!(is_connected_dominating(total, &blob));
    Ok(ConnectorCertificate {
        components,
        paths,
        result: blob,
    })
}

/// Spanning tree edges of the subgraph induced by `s`: BFS from the
/// lowest member, neighbors ascending.
fn induced_spanning_tree(g: &Graph, s: &VertexSet) -> Vec<(usize, usize)> {
    let Some(root) = s.first() else {
        return Vec::new();
    };
    let mut seen = VertexSet::new(g.n());
    seen.insert(root);
    let mut queue = std::collections::VecDeque::from([root]);
    let mut edges = Vec::new();
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if s.contains(w) && seen.insert(w) {
                edges.push((u, w));
                queue.push_back(w);
            }
        }
    }
    edges
}

// ---------------------------------------------------------------------------
// Sandwich checker
// ---------------------------------------------------------------------------

/// Everything [`check_sandwich`] establishes for one cover: one
/// [`BoundReport`] per requested kind, the observed plain-kind ratio, and
/// any inequality violations. A failed bound would contradict an established result or
/// reveal a bug, so it is recorded and reported rather than panicked on.
#[derive(Clone, Debug, Serialize)]
pub struct SandwichReport {
    pub context: CoverContext,
    pub reports: Vec<BoundReport>,
    /// `gamma(G) / (k * gamma(F))`, when the plain kind was solved exactly.
    pub c_obs: Option<String>,
    pub violations: Vec<String>,
}

impl SandwichReport {
    pub fn all_hold(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Solves both sides of a cover exactly (the covered side within budget),
/// evaluates every applicable bound row, and asserts each inequality.
///
/// The base must solve to optimality within the budget; the covered
/// graph's solve may exhaust it, in which case its value is recorded as
/// skipped and inequalities against it are not asserted.
pub fn check_sandwich(
    p: &CoveringProjection,
    kinds: &[DominationKind],
    budget: Option<u64>,
) -> Result<SandwichReport> {
    let verdict = p.verify();
    if !verdict.is_valid() {
        return Err(Error::InvalidProjection {
            verdict: verdict.to_string(),
        });
    }
    let context = CoverContext::of(p);
    let base_stats = p.base().stats();
    let mut reports = Vec::new();
    let mut violations = Vec::new();
    let mut c_obs = None;

    for &kind in kinds {
        let base_cert = domination_number(p.base(), kind, budget)?;
        if !base_cert.optimal {
            return Err(Error::BaseSolveExhausted);
        }
        let total_cert = domination_number(p.total(), kind, budget)?;
        let exact_total = ExactOrSkipped::from_certificate(&total_cert);
        let (lowers, uppers) = cover_bounds(
            base_cert.value,
            p.k(),
            kind,
            base_stats.regular,
            base_stats.max_degree,
        )?;

        for low in &lowers {
            for up in &uppers {
                if !low.value.le(&up.value) {
                    violations.push(format!(
                        "{kind}: lower bound {} = {} exceeds upper bound {} = {}",
                        low.name, low.value, up.name, up.value
                    ));
                }
            }
        }
        if let Some(exact) = exact_total.exact() {
            let exact_value = BoundValue::integer(exact);
            for low in &lowers {
                if !low.value.le(&exact_value) {
                    violations.push(format!(
                        "{kind}: lower bound {} = {} exceeds the exact value {exact}",
                        low.name, low.value
                    ));
                }
            }
            for up in &uppers {
                if !exact_value.le(&up.value) {
                    violations.push(format!(
                        "{kind}: exact value {exact} exceeds upper bound {} = {}",
                        up.name, up.value
                    ));
                }
            }
            if kind == DominationKind::Plain {
                let ratio = Rational::new(exact as i64, (p.k() * base_cert.value) as i64);
                c_obs = Some(format!("{}/{}", ratio.numer(), ratio.denom()));
            }
        }

        reports.push(BoundReport {
            context: context.clone(),
            kind,
            lowers,
            uppers,
            exact_base: base_cert.value,
            exact_total,
            h_delta: (base_stats.max_degree >= 1)
                .then(|| harmonic(base_stats.max_degree))
                .transpose()?
                .map(|h| format!("{}/{}", h.numer(), h.denom())),
        });
    }

    Ok(SandwichReport {
        context,
        reports,
        c_obs,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::{lift, random_voltages, VoltageAssignment};
    use crate::graph::{cartesian_product, cycle, dodecahedron, petersen};

    #[test]
    fn harmonic_values() {
        assert_eq!(harmonic(1).unwrap(), Rational::from_integer(1));
        assert_eq!(harmonic(2).unwrap(), Rational::new(3, 2));
        assert_eq!(harmonic(3).unwrap(), Rational::new(11, 6));
        assert!(matches!(harmonic(0), Err(Error::HarmonicDegree { d: 0 })));
        assert!(matches!(harmonic(100), Err(Error::HarmonicOverflow { .. })));
    }

    #[test]
    fn bound_value_comparisons() {
        let six = BoundValue::integer(6);
        let sqrt6 = BoundValue::SqrtOf(Rational::from_integer(6));
        let frac = BoundValue::Exact(Rational::new(36, 11));
        assert!(sqrt6.le(&six));
        assert!(!six.le(&sqrt6));
        assert!(frac.le(&six));
        assert!(sqrt6.le(&frac)); // sqrt(6) ~ 2.449 <= 36/11 ~ 3.27
        assert!(sqrt6.le(&sqrt6));
        assert_eq!(sqrt6.to_string(), "sqrt(6)");
        assert_eq!(frac.to_string(), "36/11");
        assert_eq!(six.to_string(), "6");
    }

    #[test]
    fn petersen_double_cover_rows() {
        // F = Petersen: value 3, 3-regular, max degree 3, k = 2.
        let (lowers, uppers) = cover_bounds(3, 2, DominationKind::Plain, Some(3), 3).unwrap();
        let by_name = |rows: &[BoundRow], name: &str| {
            rows.iter()
                .find(|r| r.name == name)
                .unwrap_or_else(|| panic!("missing row {name}"))
                .value
        };
        assert_eq!(by_name(&lowers, "fold"), BoundValue::integer(2));
        assert_eq!(by_name(&lowers, "base"), BoundValue::integer(3));
        assert_eq!(
            by_name(&lowers, "geometric"),
            BoundValue::SqrtOf(Rational::from_integer(6))
        );
        assert_eq!(
            by_name(&lowers, "harmonic"),
            BoundValue::Exact(Rational::new(36, 11))
        );
        assert_eq!(
            by_name(&lowers, "cubic"),
            BoundValue::Exact(Rational::new(18, 5))
        );
        assert_eq!(by_name(&uppers, "lift"), BoundValue::integer(6));
        // Exact value 6 of the dodecahedron fits every row.
        let exact = BoundValue::integer(6);
        for row in &lowers {
            assert!(row.value.le(&exact), "{} too large", row.name);
        }
    }

    #[test]
    fn quartic_rows_for_torus() {
        // F = C3 x C3 (value 3, 4-regular), k = 25: lower 37.5, upper 75.
        let (lowers, uppers) = cover_bounds(3, 25, DominationKind::Plain, Some(4), 4).unwrap();
        let qq = lowers.iter().find(|r| r.name == "quartic-quintic").unwrap();
        assert_eq!(qq.value, BoundValue::Exact(Rational::new(75, 2)));
        assert_eq!(uppers[0].value, BoundValue::integer(75));
        // 45 sits inside.
        let exact = BoundValue::integer(45);
        assert!(qq.value.le(&exact));
        assert!(exact.le(&uppers[0].value));
    }

    #[test]
    fn identity_fold_collapses() {
        let (lowers, uppers) = cover_bounds(4, 1, DominationKind::Plain, None, 3).unwrap();
        let exact = BoundValue::integer(4);
        for row in &lowers {
            assert!(row.value.le(&exact), "{}", row.name);
        }
        assert_eq!(uppers[0].value, exact);
    }

    #[test]
    fn connected_rows() {
        let (lowers, uppers) = cover_bounds(9, 2, DominationKind::Connected, None, 4).unwrap();
        assert!(lowers.iter().all(|r| r.name != "harmonic"));
        assert_eq!(uppers[0].name, "connector");
        assert_eq!(uppers[0].value, BoundValue::integer(20));
    }

    fn fig1_projection() -> CoveringProjection {
        let map = (0..20).map(|v| v % 10).collect();
        CoveringProjection::new(dodecahedron(), petersen(), map, 2).unwrap()
    }

    #[test]
    fn lifting_a_dominating_set() {
        let p = fig1_projection();
        let s = VertexSet::from_indices(10, [0, 6, 9]);
        let lifted = lift_dominating_set(&p, &s, DominationKind::Plain).unwrap();
        assert_eq!(lifted.count(), 6);
        assert!(domsolve::is_dominating(p.total(), &lifted));
    }

    #[test]
    fn lifting_rejects_non_dominating_sets() {
        let p = fig1_projection();
        let s = VertexSet::from_indices(10, [0]);
        assert!(matches!(
            lift_dominating_set(&p, &s, DominationKind::Plain),
            Err(Error::NotDominating { .. })
        ));
    }

    #[test]
    fn lift_through_identity_cover_is_identity() {
        let g = petersen();
        let p = CoveringProjection::new(g.clone(), g, (0..10).collect(), 1).unwrap();
        let s = VertexSet::from_indices(10, [0, 6, 9]);
        let lifted = lift_dominating_set(&p, &s, DominationKind::Plain).unwrap();
        assert_eq!(lifted.to_vec(), s.to_vec());
    }

    #[test]
    fn lifted_triangle_set_dominates_hexagon() {
        // S = {0} dominates C3; its lift (both sheets of vertex 0)
        // dominates the connected 6-cycle double cover.
        let v = VoltageAssignment::new(
            cycle(3).unwrap(),
            2,
            vec![vec![0, 1], vec![0, 1], vec![1, 0]],
        )
        .unwrap();
        let (total, p) = lift(&v).unwrap();
        let s = VertexSet::from_indices(3, [0]);
        let lifted = lift_dominating_set(&p, &s, DominationKind::Plain).unwrap();
        assert_eq!(lifted.count(), 2);
        assert!(domsolve::is_dominating(&total, &lifted));
    }

    #[test]
    fn connector_on_identity_cover_returns_the_set() {
        let g = petersen();
        let p = CoveringProjection::new(g.clone(), g.clone(), (0..10).collect(), 1).unwrap();
        let s = VertexSet::from_indices(10, [0, 1, 4, 5]); // claw: connected dominating
        assert!(is_connected_dominating(&g, &s));
        let cert = connect_lifted_trees(&p, &s).unwrap();
        assert!(cert.paths.is_empty());
        assert_eq!(cert.result.to_vec(), s.to_vec());
    }

    #[test]
    fn connector_tight_on_cycle_covers() {
        // C_n lifts to C_kn via the cyclic-shift voltage; the connector
        // witness then has exactly kn - 2 vertices.
        for n in [3, 4, 5] {
            for k in [2, 3] {
                let base = cycle(n).unwrap();
                let m = base.edge_count();
                let mut perms = vec![(0..k).collect::<Vec<_>>(); m - 1];
                perms.push((0..k).map(|i| (i + 1) % k).collect());
                let v = VoltageAssignment::new(base.clone(), k, perms).unwrap();
                let (total, p) = lift(&v).unwrap();
                assert!(total.is_connected(), "shift voltage gives one big cycle");
                let s = VertexSet::from_indices(n, 0..n - 2);
                assert!(is_connected_dominating(&base, &s));
                let cert = connect_lifted_trees(&p, &s).unwrap();
                assert_eq!(cert.size(), k * n - 2, "n={n} k={k}");
                assert!(cert.paths.iter().all(|path| path.len() <= 4));
                assert!(is_connected_dominating(&total, &cert.result));
            }
        }
    }

    #[test]
    fn connector_on_double_cover_of_petersen() {
        let p = fig1_projection();
        let s = VertexSet::from_indices(10, [0, 1, 4, 5]);
        let cert = connect_lifted_trees(&p, &s).unwrap();
        assert_eq!(cert.components.len(), 2);
        assert!(cert.size() <= 2 * (4 + 2) - 2);
        assert!(is_connected_dominating(p.total(), &cert.result));
    }

    #[test]
    fn connector_over_random_covers() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xC0EC7);
        let mut built = 0;
        for trial in 0..80u64 {
            let n = 3 + (trial as usize) % 6; // 3..=8
            let mut edges = Vec::new();
            for v in 1..n {
                edges.push((rng.random_range(0..v), v));
            }
            for u in 0..n {
                for v in (u + 1)..n {
                    if !edges.contains(&(u, v)) && rng.random_bool(0.35) {
                        edges.push((u, v));
                    }
                }
            }
            let base = crate::graph::Graph::from_edge_list(n, &edges).unwrap();
            let k = 2 + (trial % 2) as usize;
            let (total, p) = lift(&random_voltages(&base, k, trial).unwrap()).unwrap();
            if !total.is_connected() {
                continue;
            }
            let s = crate::domsolve::domination_number(&base, DominationKind::Connected, None)
                .unwrap()
                .set;
            let cert = connect_lifted_trees(&p, &s).unwrap();
            assert_eq!(cert.components.len(), k);
            assert_eq!(cert.paths.len(), k - 1);
            assert!(cert.paths.iter().all(|path| (2..=4).contains(&path.len())));
            assert!(cert.size() <= k * (s.count() + 2) - 2, "trial {trial}");
            assert!(is_connected_dominating(&total, &cert.result));
            // The witness bounds the exact value from above.
            let exact = crate::domsolve::domination_number(&total, DominationKind::Connected, None)
                .unwrap();
            assert!(exact.optimal && exact.value <= cert.size(), "trial {trial}");
            built += 1;
        }
        assert!(built >= 40, "enough connected lifts sampled, got {built}");
    }

    #[test]
    fn sandwich_on_fig1_cover() {
        let p = fig1_projection();
        let report = check_sandwich(
            &p,
            &[
                DominationKind::Plain,
                DominationKind::Total,
                DominationKind::Connected,
            ],
            None,
        )
        .unwrap();
        assert!(report.all_hold(), "violations: {:?}", report.violations);
        assert_eq!(report.c_obs.as_deref(), Some("1/1"));
        assert_eq!(report.reports.len(), 3);
        assert_eq!(report.reports[0].exact_base, 3);
        assert_eq!(report.reports[0].exact_total.exact(), Some(6));
    }

    #[test]
    fn sandwich_on_identity_cover() {
        let g = cartesian_product(&cycle(3).unwrap(), &cycle(3).unwrap());
        let p = CoveringProjection::new(g.clone(), g, (0..9).collect(), 1).unwrap();
        let report = check_sandwich(&p, &[DominationKind::Plain], None).unwrap();
        assert!(report.all_hold());
        assert_eq!(report.c_obs.as_deref(), Some("1/1"));
    }

    #[test]
    fn sandwich_over_random_lift() {
        let base = petersen();
        let (_, p) = lift(&random_voltages(&base, 2, 42).unwrap()).unwrap();
        let report =
            check_sandwich(&p, &[DominationKind::Plain, DominationKind::Total], None).unwrap();
        assert!(report.all_hold(), "violations: {:?}", report.violations);
    }

    #[test]
    fn sandwich_rejects_invalid_projection() {
        let g = petersen();
        let p = CoveringProjection::new(g.clone(), g, vec![0; 10], 1).unwrap();
        assert!(matches!(
            check_sandwich(&p, &[DominationKind::Plain], None),
            Err(Error::InvalidProjection { .. })
        ));
    }
}
